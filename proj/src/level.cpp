#include "kmfold/level.hpp"

#include <stdexcept>

namespace kmfold {

QMat finite_coroot_gram(const FiniteData& fd) {
    std::size_t r = fd.cartan.size();
    QMat g(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) g(i, j) = Rational(fd.cartan[i][j]) / fd.symmetrizer[j];
    if (!(g == g.transpose())) throw std::logic_error("coroot Gram matrix is not symmetric");
    return g;
}

QMat coroot_gram(const AffineCase& c) {
    if (c.twist != 1) throw CaseError("coroot_gram: " + c.str() + " is twisted");
    return finite_coroot_gram(finite_data(c));
}

namespace {

// Row j of the inverse finite Cartan matrix: alpha_i(lambda_j) = delta_ij
// with alpha_i(coroot_k) = C_ki.
QVec fundamental_coweight(const FiniteData& fd, int node) {
    auto inv = inverse(QMat(fd.cartan));
    if (!inv) throw std::logic_error("singular finite Cartan matrix");
    QVec v;
    for (std::size_t k = 0; k < fd.cartan.size(); ++k) v.push_back((*inv)(node - 1, k));
    return v;
}

int smallest_multiple(const Rational& x, std::int64_t modulus) {
    for (int k = 1; k <= 64; ++k) {
        Rational y = Rational(k) * x;
        if (y.is_integer() && y.to_int() % modulus == 0) return k;
    }
    throw std::logic_error("no small multiple lands in the lattice");
}

}  // namespace

Rational pairing(const QMat& gram, const QVec& x, const QVec& y) {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * gram(i, j) * y[j];
    return s;
}

QVec lambda_rho(const AffineCase& c, const DiagramAut& rho) {
    auto fd = finite_data(c);
    int j = rho.perm[0];
    if (j == 0) return QVec(fd.cartan.size(), Rational(0));
    auto g = build_affine_cartan(c);
    if (g.marks[j] != 1) throw std::logic_error("special automorphism moves node 0 to a node with mark " +
                                                std::to_string(g.marks[j]));
    return fundamental_coweight(fd, j);
}

LevelReport fundamental_level(const AffineCase& c, const DiagramAut& tau) {
    auto d = rho_sigma_decompose(c, tau);
    auto fd = finite_data(c);
    QMat gram = finite_coroot_gram(fd);
    LevelReport rep;
    rep.rho = d.rho;
    rep.sigma = d.sigma;
    rep.p_order = perm_order(tau.perm);
    rep.lambda = lambda_rho(c, d.rho);
    std::size_t r = fd.cartan.size();
    rep.beta_check.assign(r, Rational(0));
    int j = d.rho.perm[0];
    if (j != 0) {
        // sigma fixes node 0 and permutes the finite fundamental coweights
        int node = j;
        for (int m = 0; m < rep.p_order; ++m) {
            QVec l = fundamental_coweight(fd, node);
            for (std::size_t x = 0; x < r; ++x) rep.beta_check[x] += l[x];
            node = d.sigma.perm[node];
        }
    }
    rep.pairing_lb = pairing(gram, rep.lambda, rep.beta_check);
    rep.pairing_ll = pairing(gram, rep.lambda, rep.lambda);
    rep.k_f = smallest_multiple(rep.pairing_lb, 2);
    rep.k_b = smallest_multiple(rep.pairing_ll, 1);
    return rep;
}

TwistedLevelReport twisted_fundamental_level(const AffineCase& c, const DiagramAut& tau) {
    if (c.twist < 2) throw CaseError("twisted_fundamental_level: " + c.str() + " is untwisted");
    if (tau.perm == identity_perm(static_cast<int>(tau.perm.size())))
        throw CaseError("twisted_fundamental_level: trivial automorphism");
    auto fd = finite_data(c);
    QMat gram = finite_coroot_gram(fd);
    TwistedLevelReport rep;
    int j = tau.perm[0];
    if (j == 0) throw CaseError("twisted_fundamental_level: automorphism fixes node 0");
    rep.lambda = fundamental_coweight(fd, j);
    QVec two;
    rep.two_lambda_in_coroot_lattice = true;
    for (const auto& x : rep.lambda) {
        two.push_back(Rational(2) * x);
        rep.two_lambda_in_coroot_lattice = rep.two_lambda_in_coroot_lattice && two.back().is_integer();
    }
    rep.pairing = pairing(gram, rep.lambda, two);
    rep.parity_ok = rep.pairing.is_integer() && rep.pairing.to_int() % 2 == 0;
    rep.k_f = 1;
    return rep;
}

}  // namespace kmfold
