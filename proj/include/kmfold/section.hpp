#pragma once

#include <vector>

#include "kmfold/weights.hpp"
#include "kmfold/weyl.hpp"

namespace kmfold {

struct SectionData {
    std::int64_t k = 0;
    IVec b;
    std::vector<int> word;
    std::vector<IVec> betas;  // in word order, root basis
    IVec beta_values;         // indexed by orbit
    IVec folded_dual_marks;   // indexed by orbit
    Rational p;
    IVec cstar_exponents;     // indexed by orbit
    std::int64_t k_literal = 0;  // least k admitting any nonnegative integral b
};

struct BSolution {
    std::int64_t k = 0;
    IVec b;
    std::int64_t k_literal = 0;
};

// Least k such that the solution of (cox - 1) b = k c, translated along c to
// the boundary of the nonnegative cone, is integral.
BSolution solve_b(const AffineCase& c, const DiagramAut& tau);
BSolution solve_b(const IVec& dual_marks, const QMat& cox_coroot);

// Brute-force scan over every k' < k and every integral translate: true when
// no smaller k' admits a nonnegative integral b with a zero coordinate.
bool solve_b_minimality_oracle(const IVec& dual_marks, const QMat& cox_coroot, std::int64_t k);

// beta_m = s_{w1} ... s_{w(m-1)} alpha_{wm}; checks positivity and that
// cox^{-1} makes each one negative.
std::vector<IVec> beta_roots(const IMat& m, const TwistedCoxeter& tc);

SectionData section(const AffineCase& c, const DiagramAut& tau);

}  // namespace kmfold
