#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmfold/folding.hpp"

namespace kmfold {

// Coordinates in the basis lambda_0..lambda_r plus the delta coefficient.
struct WeightVec {
    QVec coords;
    Rational delta_coeff;
};

// Sum of n_j Lambda_j over orbits, plus a delta shift.
struct InvariantWeight {
    IVec n;
    Rational delta_coeff;
};

struct DSetEntry {
    InvariantWeight weight;
    std::string form;  // "I", "II", "III"
    std::int64_t n_max = 0;
};

// Everything the weight operations need for one (case, tau).
struct WeightSetup {
    AffineCase c;
    DiagramAut tau;
    GCM g;
    FoldResult fold;
    IVec levels;  // level of Lambda_i per orbit, the orbit sum of dual marks
    const OrbitData& orbits() const { return fold.orbits; }
    int s() const { return fold.orbits.s(); }
};

// Rejects degenerate foldings.
WeightSetup weight_setup(const AffineCase& c, const DiagramAut& tau);

// Orbit sums of the dual marks; no degeneracy check.
IVec orbit_levels(const IVec& dual_marks, const OrbitData& od);

WeightVec big_lambda(const WeightSetup& w, int orbit);
WeightVec expand(const WeightSetup& w, const InvariantWeight& mu);
Rational level(const WeightSetup& w, const WeightVec& v);

// Largest n with Lambda_i - mu - n delta in the nonnegative integer root cone;
// nullopt when Lambda_i - mu is not in the root lattice mod delta.
std::optional<std::int64_t> n_max(const WeightSetup& w, int orbit, const InvariantWeight& mu);
// Direct cone test at a fixed depth n.
bool in_cone_at_depth(const WeightSetup& w, int orbit, const InvariantWeight& mu, std::int64_t n);

std::vector<DSetEntry> d_set_mod_delta(const WeightSetup& w, int orbit);
// Independent enumeration over a coordinate box, integrality via the finite Cartan inverse.
std::vector<IVec> d_set_brute_force(const WeightSetup& w, int orbit);

struct Sparsity {
    std::vector<std::vector<std::string>> tags;  // "diag-unit", "linear", "higher-order-or-zero", "zero"
    std::vector<int> order;                      // orbits sorted by decreasing level
    bool block_upper_triangular = false;
};
Sparsity jacobian_sparsity(const WeightSetup& w);

// For every family of at least two orbits of equal level and every cyclic
// order, some n_{j_i}(Lambda_{j_{i+1}}) is negative or undefined.
bool cyclic_strictness(const WeightSetup& w);

}  // namespace kmfold
