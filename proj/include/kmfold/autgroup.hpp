#pragma once

#include <string>
#include <vector>

#include "kmfold/catalog.hpp"

namespace kmfold {

using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a o b)(i) = a(b(i))
Perm inverse(const Perm& p);
Perm power(const Perm& p, int k);
int perm_order(const Perm& p);
bool preserves(const IMat& m, const Perm& p);

struct DiagramAut {
    Perm perm;
    int order = 1;
    std::string name;  // display tag, may be empty
    static DiagramAut make(Perm p, std::string name = "");
    bool operator==(const DiagramAut& o) const { return perm == o.perm; }
};

struct OrbitData {
    std::vector<std::vector<int>> orbits;  // sorted by minimum
    std::vector<int> representatives;      // minimum of each orbit
    std::vector<int> orbit_of;             // node -> orbit index
    std::vector<int> stabilizer_orders;    // |Sigma_i| per node
    int group_order = 1;
    int s() const { return static_cast<int>(orbits.size()); }
};

struct RhoSigmaDecomp {
    DiagramAut rho, sigma, tau;
};

// Complete automorphism group of a GCM by backtracking, sorted by perm.
std::vector<DiagramAut> automorphism_group(const IMat& m);

// Named generator from the catalog tables, e.g. "gamma" for D1[5].
Perm named_generator(const AffineCase& c, const std::string& gen);
// Resolves "id", "gamma", "gamma^3", "sigma*gamma", "gamma^3*sigma", ...
DiagramAut resolve_auto(const AffineCase& c, const std::string& name);

std::vector<DiagramAut> special_subgroup(const AffineCase& c);
std::vector<DiagramAut> conjugacy_representatives(const AffineCase& c);
// True when no two of the given automorphisms are conjugate in the group.
bool pairwise_non_conjugate(const std::vector<DiagramAut>& reps, const std::vector<DiagramAut>& group);
std::size_t expected_group_order(const AffineCase& c);

RhoSigmaDecomp rho_sigma_decompose(const AffineCase& c, const DiagramAut& tau);
OrbitData orbit_data(const Perm& tau);

std::string perm_str(const Perm& p);

}  // namespace kmfold
