#include "kmfold/report.hpp"

#include <algorithm>

#include "kmfold/level.hpp"
#include "kmfold/section.hpp"

namespace kmfold {

namespace {

json qvec_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

json fold_json(const AffineCase& c, const DiagramAut& tau) {
    auto f = fold(build_affine_cartan(c).entries, tau.perm);
    json r;
    r["folded_case"] = f.recognized.kind == Recognition::Case ? json(f.recognized.value.str())
                                                              : json(f.recognized.kind == Recognition::Zero ? "0" : "not-affine");
    r["folded_matrix"] = f.folded;
    r["t_values"] = f.t_values;
    r["orbits"] = f.orbits.orbits;
    r["stabilizer_orders"] = f.orbits.stabilizer_orders;
    r["folded_dual_marks"] = folded_dual_marks(f);
    return r;
}

json charpoly_json(const AffineCase& c, const DiagramAut& tau) {
    auto tc = twisted_coxeter(c, tau);
    auto p = charpoly_int(tc.map_coroot);
    json r;
    r["word"] = tc.word;
    r["word_rule"] = tc.rule;
    r["charpoly"] = p.factored();
    r["expanded"] = p.expanded();
    r["coefficients"] = p.coeffs();
    return r;
}

json section_json(const AffineCase& c, const DiagramAut& tau) {
    auto sd = section(c, tau);
    json r;
    r["k"] = sd.k;
    r["b"] = sd.b;
    r["p"] = rational_json(sd.p);
    r["word"] = sd.word;
    r["betas"] = sd.betas;
    r["beta_values"] = sd.beta_values;
    r["folded_dual_marks"] = sd.folded_dual_marks;
    r["cstar_exponents"] = sd.cstar_exponents;
    r["k_literal"] = sd.k_literal;
    return r;
}

json level_json(const AffineCase& c, const DiagramAut& tau) {
    json r;
    if (c.twist != 1) {
        auto t = twisted_fundamental_level(c, tau);
        r["k_f"] = t.k_f;
        r["lambda"] = qvec_json(t.lambda);
        r["pairing_lambda_2lambda"] = rational_json(t.pairing);
        r["two_lambda_in_coroot_lattice"] = t.two_lambda_in_coroot_lattice;
        r["parity_ok"] = t.parity_ok;
        return r;
    }
    auto l = fundamental_level(c, tau);
    r["k_f"] = l.k_f;
    r["k_b"] = l.k_b;
    r["rho"] = perm_str(l.rho.perm);
    r["sigma"] = perm_str(l.sigma.perm);
    r["p_order"] = l.p_order;
    r["lambda"] = qvec_json(l.lambda);
    r["beta_check"] = qvec_json(l.beta_check);
    r["pairing_lambda_beta"] = rational_json(l.pairing_lb);
    r["pairing_lambda_lambda"] = rational_json(l.pairing_ll);
    return r;
}

json dset_json(const AffineCase& c, const DiagramAut& tau) {
    auto w = weight_setup(c, tau);
    json r;
    r["levels"] = w.levels;
    json sets = json::array();
    for (int i = 0; i < w.s(); ++i) {
        json entries = json::array();
        for (const auto& e : d_set_mod_delta(w, i))
            entries.push_back({{"n", e.weight.n}, {"form", e.form}, {"n_max", e.n_max}});
        sets.push_back({{"orbit", i}, {"entries", entries}});
    }
    r["d_sets"] = sets;
    return r;
}

json sparsity_json(const AffineCase& c, const DiagramAut& tau) {
    auto w = weight_setup(c, tau);
    auto sp = jacobian_sparsity(w);
    json r;
    r["levels"] = w.levels;
    r["order"] = sp.order;
    r["tags"] = sp.tags;
    r["block_upper_triangular"] = sp.block_upper_triangular;
    r["cyclic_strictness"] = cyclic_strictness(w);
    return r;
}

}  // namespace

json rational_json(const Rational& q) {
    if (q.is_integer()) return q.to_int();
    return q.str();
}

const std::vector<std::string>& case_whats() {
    static const std::vector<std::string> w = {"fold", "charpoly", "section", "level", "dset", "sparsity"};
    return w;
}

json case_record(const std::string& descriptor, const std::string& auto_name, const std::string& what) {
    auto c = parse_case(descriptor);
    if (!Catalog::instance().contains(c)) throw CaseError("unknown case '" + descriptor + "'");
    auto tau = resolve_auto(c, auto_name);
    json body;
    if (what == "fold") body = fold_json(c, tau);
    else if (what == "charpoly") body = charpoly_json(c, tau);
    else if (what == "section") body = section_json(c, tau);
    else if (what == "level") body = level_json(c, tau);
    else if (what == "dset") body = dset_json(c, tau);
    else if (what == "sparsity") body = sparsity_json(c, tau);
    else throw CaseError("unknown operation '" + what + "'");
    json r = {{"schema", "kmfold/1"}, {"case", c.str()}, {"auto", auto_name}, {"perm", tau.perm}, {"what", what}};
    r.update(body);
    return r;
}

}  // namespace kmfold
