#include "kmfold/section.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmfold {

namespace {

constexpr std::int64_t kMaxK = 64;

QVec as_q(const IVec& v) { return QVec(v.begin(), v.end()); }

// Particular solution of (cox - 1) x = c.
QVec base_solution(const IVec& dual_marks, const QMat& cox) {
    QMat mm = cox - QMat::identity(cox.rows());
    auto b1 = solve(mm, as_q(dual_marks));
    if (!b1) throw std::logic_error("c is not in the image of cox - 1");
    return *b1;
}

}  // namespace

BSolution solve_b(const IVec& dual_marks, const QMat& cox) {
    QVec b1 = base_solution(dual_marks, cox);
    BSolution out;
    for (std::int64_t k = 1; k <= kMaxK; ++k) {
        QVec b(b1.size());
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = Rational(k) * b1[i];
        // the dual mark at node 0 is 1, so integral translates along c differ by integers
        if (!out.k_literal) {
            Rational t = -b[0];
            bool integral = true;
            for (std::size_t i = 0; i < b.size(); ++i)
                integral = integral && (b[i] + t * Rational(dual_marks[i])).is_integer();
            if (integral) out.k_literal = k;
        }
        Rational t = -b[0] / Rational(dual_marks[0]);
        for (std::size_t i = 0; i < b.size(); ++i) t = std::max(t, -b[i] / Rational(dual_marks[i]));
        IVec bi;
        for (std::size_t i = 0; i < b.size(); ++i) {
            Rational x = b[i] + t * Rational(dual_marks[i]);
            if (!x.is_integer()) break;
            bi.push_back(x.to_int());
        }
        if (bi.size() == b.size()) {
            out.k = k;
            out.b = bi;
            if (!out.k_literal) out.k_literal = k;
            return out;
        }
    }
    throw std::logic_error("solve_b: no solution with k <= 64");
}

BSolution solve_b(const AffineCase& c, const DiagramAut& tau) {
    auto g = build_affine_cartan(c);
    auto tc = twisted_coxeter(c, tau);
    return solve_b(g.dual_marks, tc.map_coroot);
}

bool solve_b_minimality_oracle(const IVec& dual_marks, const QMat& cox, std::int64_t k) {
    QVec b1 = base_solution(dual_marks, cox);
    Rational bound(0);
    for (const auto& x : b1) bound = std::max(bound, x.sign() < 0 ? -x : x);
    for (std::int64_t kk = 1; kk < k; ++kk) {
        // integral translates differ by integers since the c-coordinate at node 0 is 1
        Rational t0 = -Rational(kk) * b1[0];
        std::int64_t r = (Rational(kk) * bound).ceil() + 2;
        for (std::int64_t j = -r; j <= r; ++j) {
            Rational t = t0 + Rational(j);
            bool ok = true, zero = false;
            for (std::size_t i = 0; i < b1.size() && ok; ++i) {
                Rational x = Rational(kk) * b1[i] + t * Rational(dual_marks[i]);
                ok = x.is_integer() && x.sign() >= 0;
                zero = zero || x.is_zero();
            }
            if (ok && zero) return false;
        }
    }
    return true;
}

std::vector<IVec> beta_roots(const IMat& m, const TwistedCoxeter& tc) {
    std::size_t n = m.size();
    auto inv = inverse(tc.map_root);
    if (!inv) throw std::logic_error("twisted Coxeter element is singular");
    std::vector<IVec> out;
    QMat prefix = QMat::identity(n);
    for (int w : tc.word) {
        QVec beta = prefix.column(w);
        QVec back = *inv * beta;
        IVec bi;
        bool neg = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!beta[i].is_integer() || beta[i].sign() < 0) throw std::logic_error("beta root is not positive");
            if (back[i].sign() > 0) throw std::logic_error("cox^-1 of a beta root is not negative");
            neg = neg || back[i].sign() < 0;
            bi.push_back(beta[i].to_int());
        }
        if (!neg) throw std::logic_error("cox^-1 of a beta root vanishes");
        out.push_back(bi);
        prefix = prefix * reflection(m, w).root;
    }
    return out;
}

SectionData section(const AffineCase& c, const DiagramAut& tau) {
    auto g = build_affine_cartan(c);
    auto tc = twisted_coxeter(c, tau);
    SectionData sd;
    auto sol = solve_b(g.dual_marks, tc.map_coroot);
    sd.k = sol.k;
    sd.b = sol.b;
    sd.k_literal = sol.k_literal;
    sd.word = tc.word;
    sd.betas = beta_roots(g.entries, tc);

    auto f = fold(g.entries, tau.perm);
    const auto& od = f.orbits;
    sd.beta_values.assign(od.s(), 0);
    for (std::size_t m = 0; m < tc.word.size(); ++m) {
        // beta(b) = sum_ij b_i C_ij r_j
        std::int64_t v = 0;
        for (std::size_t i = 0; i < g.n(); ++i)
            for (std::size_t j = 0; j < g.n(); ++j) v += sd.b[i] * g.entries[i][j] * sd.betas[m][j];
        sd.beta_values[od.orbit_of[tc.word[m]]] = v;
    }
    sd.folded_dual_marks = folded_dual_marks(f);
    sd.p = Rational(sd.beta_values[0], sd.folded_dual_marks[0]);
    for (int a = 0; a < od.s(); ++a)
        if (Rational(sd.beta_values[a]) != sd.p * Rational(sd.folded_dual_marks[a]))
            throw std::logic_error("beta values are not proportional to the folded dual marks");
    // the beta values are a left null vector of the folded matrix
    for (int b = 0; b < od.s(); ++b) {
        std::int64_t s = 0;
        for (int a = 0; a < od.s(); ++a) s += sd.beta_values[a] * f.folded[a][b];
        if (s != 0) throw std::logic_error("beta values are not annihilated by the folded matrix");
    }
    for (auto lv : orbit_levels(g.dual_marks, od)) sd.cstar_exponents.push_back(sd.k * lv);
    return sd;
}

}  // namespace kmfold
