#pragma once

#include "kmfold/autgroup.hpp"

namespace kmfold {

// <coroot_i, coroot_j> on the finite part, long roots of square length 2.
QMat coroot_gram(const AffineCase& c);  // untwisted only
QMat finite_coroot_gram(const FiniteData& fd);

// Finite fundamental coweight lambda_{rho(0)} in the coroot basis; zero for rho = id.
QVec lambda_rho(const AffineCase& c, const DiagramAut& rho);

Rational pairing(const QMat& gram, const QVec& x, const QVec& y);

struct LevelReport {
    DiagramAut rho, sigma;
    int p_order = 1;
    QVec lambda;      // lambda_rho
    QVec beta_check;  // sum of sigma^m(lambda_rho), m < p_order
    Rational pairing_lb, pairing_ll;
    int k_f = 1;
    int k_b = 1;
};

LevelReport fundamental_level(const AffineCase& c, const DiagramAut& tau);

struct TwistedLevelReport {
    int k_f = 1;
    QVec lambda;  // fundamental coweight at tau(0) of the finite part
    Rational pairing;  // <lambda, 2 lambda>
    bool two_lambda_in_coroot_lattice = false;
    bool parity_ok = false;
};

TwistedLevelReport twisted_fundamental_level(const AffineCase& c, const DiagramAut& tau);

}  // namespace kmfold
