#include "kmfold/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kmfold/expr.hpp"

namespace kmfold {

// Root side: s_i(alpha_j) = alpha_j - C_ij alpha_i.
// Coroot side: s_i(h) = h - alpha_i(h) coroot_i with alpha_i(coroot_j) = C_ji.
ReflectionPair reflection(const IMat& m, int i) {
    std::size_t n = m.size();
    ReflectionPair r{QMat::identity(n), QMat::identity(n)};
    for (std::size_t j = 0; j < n; ++j) {
        r.root(i, j) -= Rational(m[i][j]);
        r.coroot(i, j) -= Rational(m[j][i]);
    }
    return r;
}

QMat perm_matrix(const Perm& p) {
    QMat q(p.size(), p.size());
    for (std::size_t j = 0; j < p.size(); ++j) q(p[j], j) = 1;
    return q;
}

std::vector<int> coxeter_word(const AffineCase& c, const DiagramAut& tau, std::string* rule_out,
                              std::string* note_out) {
    const auto& f = Catalog::instance().family(c);
    Env env{{"n", c.rank}};
    std::string rule = f.word_default;
    const WordRule* hit = nullptr;
    // the identity always gets the ordinary Coxeter element s_0...s_r
    if (tau.perm == identity_perm(static_cast<int>(tau.perm.size()))) {
        if (rule_out) *rule_out = "identity";
        if (note_out) *note_out = "";
        return tau.perm;
    }
    for (const auto& wr : f.word_rules) {
        if (!wr.when.empty() && !eval_int(wr.when, env)) continue;
        if (!wr.auto_name.empty() && resolve_auto(c, wr.auto_name).perm != tau.perm) continue;
        hit = &wr;
        rule = wr.rule;
        break;
    }
    OrbitData od = orbit_data(tau.perm);
    std::vector<int> w;
    if (rule == "explicit") {
        for (const auto& e : hit->word) w.push_back(static_cast<int>(eval_int(e, env)));
    } else if (rule == "one_to_n") {
        int nn = static_cast<int>(tau.perm.size());
        for (int i = 1; i < nn; ++i) w.push_back(i);
    } else if (rule == "d_rule") {
        bool joined = od.orbit_of[0] == od.orbit_of[1];
        for (const auto& o : od.orbits) {
            int pick = o.front();
            if (joined && pick == 0) pick = o.size() > 1 ? o[1] : 0;
            w.push_back(pick);
        }
        std::sort(w.begin(), w.end());
    } else if (rule == "min") {
        w = od.representatives;
        std::sort(w.begin(), w.end());
    } else {
        throw CaseError("unknown word rule '" + rule + "'");
    }
    if (rule_out) *rule_out = rule;
    if (note_out) *note_out = hit ? hit->note : "";
    return w;
}

TwistedCoxeter twisted_coxeter_word(const IMat& m, const DiagramAut& tau, const std::vector<int>& word) {
    if (!preserves(m, tau.perm)) throw std::invalid_argument("twisted Coxeter: automorphism does not preserve matrix");
    std::size_t n = m.size();
    TwistedCoxeter tc;
    tc.word = word;
    tc.tau = tau;
    tc.map_coroot = QMat::identity(n);
    tc.map_root = QMat::identity(n);
    for (int i : word) {
        auto r = reflection(m, i);
        tc.map_coroot = tc.map_coroot * r.coroot;
        tc.map_root = tc.map_root * r.root;
    }
    QMat p = perm_matrix(tau.perm);
    tc.map_coroot = tc.map_coroot * p;
    tc.map_root = tc.map_root * p;
    return tc;
}

TwistedCoxeter twisted_coxeter(const AffineCase& c, const DiagramAut& tau) {
    std::string rule, note;
    auto w = coxeter_word(c, tau, &rule, &note);
    auto tc = twisted_coxeter_word(build_affine_cartan(c).entries, tau, w);
    tc.rule = rule;
    tc.note = note;
    return tc;
}

Poly charpoly_int(const QMat& l) { return Poly::from_rational(charpoly(l)); }

std::vector<QVec> fixed_space(const QMat& l) { return kernel(l - QMat::identity(l.rows())); }

bool distinct_orbit_fixpoint_check(const IMat& m, const Perm& tau, const std::vector<int>& idx) {
    OrbitData od = orbit_data(tau);
    std::set<int> seen;
    for (int i : idx)
        if (!seen.insert(od.orbit_of[i]).second)
            throw std::invalid_argument("indices must lie in pairwise distinct orbits");
    std::size_t n = m.size();
    QMat prod = QMat::identity(n);
    for (int i : idx) prod = prod * reflection(m, i).coroot;
    prod = prod * perm_matrix(tau);
    auto lhs = fixed_space(prod);
    // Fix(tau) together with alpha_i(h) = 0 for the chosen i
    QMat pt = perm_matrix(tau) - QMat::identity(n);
    QMat cons(n + idx.size(), n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) cons(r, c) = pt(r, c);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) cons(n + k, j) = Rational(m[j][idx[k]]);
    auto rhs = kernel(cons);
    return same_span(lhs, rhs, n);
}

}  // namespace kmfold
