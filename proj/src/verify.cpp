#include "kmfold/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "kmfold/level.hpp"
#include "kmfold/section.hpp"

namespace kmfold {

namespace {

using Pair = std::pair<AffineCase, DiagramAut>;

std::vector<AffineCase> sweep(int bound) { return Catalog::instance().cases_up_to(bound); }

// Every case with the identity and its representatives.
std::vector<Pair> pairs(int bound, bool with_id) {
    std::vector<Pair> out;
    for (const auto& c : sweep(bound)) {
        if (with_id) out.emplace_back(c, DiagramAut::make(identity_perm(node_count(c)), "id"));
        for (const auto& r : conjugacy_representatives(c)) out.emplace_back(c, r);
    }
    return out;
}

std::string tag(const AffineCase& c, const DiagramAut& t) { return c.str() + " " + (t.name.empty() ? perm_str(t.perm) : t.name); }

class Suite {
public:
    Suite(std::string module, std::vector<Check>& out) : module_(std::move(module)), out_(out) {}

    // body returns the number of instances checked and reports failures via fail()
    void check(const std::string& name, const std::function<std::int64_t(std::function<void(const std::string&)>)>& body) {
        Check c{module_, name, true, 0, "", 0};
        auto t0 = std::chrono::steady_clock::now();
        auto fail = [&](const std::string& why) {
            if (c.passed) c.detail = why;
            c.passed = false;
        };
        try {
            c.checked = body(fail);
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out_.push_back(c);
    }

private:
    std::string module_;
    std::vector<Check>& out_;
};

QVec qvec(const IVec& v) { return QVec(v.begin(), v.end()); }

void catalog_suite(std::vector<Check>& out, int bound) {
    Suite s("catalog", out);
    s.check("recognize inverts build", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            auto r = recognize(build_affine_cartan(c).entries);
            if (r.kind != Recognition::Case || canonical_descriptor(r.value.str()) != canonical_descriptor(c.str()))
                fail(c.str() + " recognized as " + r.str());
            ++n;
        }
        return n;
    });
    s.check("recognize is invariant under relabeling", [&](auto fail) {
        std::mt19937 rng(20240601);
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            auto m = build_affine_cartan(c).entries;
            Perm p = identity_perm(static_cast<int>(m.size()));
            std::shuffle(p.begin(), p.end(), rng);
            IMat q(m.size(), IVec(m.size()));
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < m.size(); ++j) q[p[i]][p[j]] = m[i][j];
            auto r = recognize(q);
            if (r.kind != Recognition::Case || canonical_descriptor(r.value.str()) != canonical_descriptor(c.str()))
                fail(c.str() + " relabeled recognized as " + r.str());
            ++n;
        }
        return n;
    });
    s.check("marks are positive null vectors", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            auto g = build_affine_cartan(c);
            for (std::size_t i = 0; i < g.n(); ++i) {
                std::int64_t r = 0, l = 0;
                for (std::size_t j = 0; j < g.n(); ++j) {
                    r += g.entries[i][j] * g.marks[j];
                    l += g.dual_marks[j] * g.entries[j][i];
                }
                if (r || l || g.marks[i] <= 0 || g.dual_marks[i] <= 0) fail(c.str());
            }
            if (g.dual_marks[0] != 1) fail(c.str() + " dual mark at node 0 is not 1");
            ++n;
        }
        return n;
    });
    s.check("non-affine matrices are rejected", [&](auto fail) {
        std::vector<IMat> bad = {{{2, -1}, {-1, 2}}, {{2, -3}, {-3, 2}}, {{2, -1, 0}, {0, 2, -1}, {-1, -1, 2}}};
        std::int64_t n = 0;
        for (const auto& m : bad) {
            if (recognize(m).kind != Recognition::NotAffine) fail("accepted a non-affine matrix");
            ++n;
        }
        if (recognize({{0}}).kind != Recognition::Zero) fail("zero matrix not recognized");
        return n + 1;
    });
}

void autgroup_suite(std::vector<Check>& out, int bound) {
    Suite s("autgroup", out);
    s.check("group order matches the catalog", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            auto g = automorphism_group(build_affine_cartan(c).entries);
            if (g.size() != expected_group_order(c))
                fail(c.str() + ": " + std::to_string(g.size()) + " != " + std::to_string(expected_group_order(c)));
            ++n;
        }
        return n;
    });
    s.check("representatives are pairwise non-conjugate", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            auto reps = conjugacy_representatives(c);
            auto g = automorphism_group(build_affine_cartan(c).entries);
            if (!pairwise_non_conjugate(reps, g)) fail(c.str());
            ++n;
        }
        return n;
    });
    s.check("special subgroup order equals det of the finite Cartan matrix", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            if (c.twist != 1) continue;
            auto d = det(QMat(finite_data(c).cartan));
            auto sp = special_subgroup(c);
            if (Rational(static_cast<std::int64_t>(sp.size())) != (d.sign() < 0 ? -d : d))
                fail(c.str() + ": " + std::to_string(sp.size()) + " vs " + d.str());
            ++n;
        }
        return n;
    });
    s.check("rho sigma decomposition is unique", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, true)) {
            if (c.twist != 1) continue;
            auto d = rho_sigma_decompose(c, t);
            if (compose(d.rho.perm, d.sigma.perm) != t.perm || d.sigma.perm[0] != 0) fail(tag(c, t));
            ++n;
        }
        return n;
    });
    s.check("orbit data is consistent", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, false)) {
            auto od = orbit_data(t.perm);
            for (std::size_t i = 0; i < t.perm.size(); ++i)
                if (od.stabilizer_orders[i] * static_cast<int>(od.orbits[od.orbit_of[i]].size()) != t.order)
                    fail(tag(c, t));
            ++n;
        }
        return n;
    });
}

void folding_suite(std::vector<Check>& out, int bound) {
    Suite s("folding", out);
    s.check("folding by the identity is the identity", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            auto m = build_affine_cartan(c).entries;
            if (fold(m, identity_perm(static_cast<int>(m.size()))).folded != m) fail(c.str());
            ++n;
        }
        return n;
    });
    s.check("folded matrices are affine except the full rotation", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, false)) {
            auto f = fold(build_affine_cartan(c).entries, t.perm);
            bool rotation = c.family == 'A' && c.twist == 1 && f.orbits.s() == 1;
            if (rotation != (f.recognized.kind == Recognition::Zero)) fail(tag(c, t) + " -> " + f.recognized.str());
            if (!rotation && f.recognized.kind != Recognition::Case) fail(tag(c, t) + " not affine");
            for (auto x : f.t_values)
                if (x < 1 || x > 3 || (x == 3 && !rotation)) fail(tag(c, t) + " t value " + std::to_string(x));
            ++n;
        }
        return n;
    });
    s.check("orbit-sum levels are proportional to folded dual marks", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, true)) {
            auto g = build_affine_cartan(c);
            auto f = fold(g.entries, t.perm);
            if (f.recognized.kind != Recognition::Case) continue;
            auto lv = orbit_levels(g.dual_marks, f.orbits);
            auto fd = folded_dual_marks(f);
            Rational q(lv[0], fd[0]);
            for (std::size_t a = 0; a < lv.size(); ++a)
                if (Rational(lv[a]) != q * Rational(fd[a])) fail(tag(c, t));
            ++n;
        }
        return n;
    });
}

void weyl_suite(std::vector<Check>& out, int bound) {
    Suite s("weyl", out);
    s.check("reflections are involutions fixing c", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            auto g = build_affine_cartan(c);
            auto id = QMat::identity(g.n());
            for (std::size_t i = 0; i < g.n(); ++i) {
                auto r = reflection(g.entries, static_cast<int>(i));
                if (!(r.root * r.root == id) || !(r.coroot * r.coroot == id)) fail(c.str() + " s_" + std::to_string(i));
                if (r.coroot * qvec(g.dual_marks) != qvec(g.dual_marks)) fail(c.str() + " c moved");
                if (fixed_space(r.coroot).size() != g.n() - 1) fail(c.str() + " fixed hyperplane");
                ++n;
            }
        }
        return n;
    });
    s.check("automorphisms conjugate reflections", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            auto g = build_affine_cartan(c);
            for (const auto& a : automorphism_group(g.entries)) {
                QMat p = perm_matrix(a.perm), pi = perm_matrix(inverse(a.perm));
                if (fixed_space(p).size() != static_cast<std::size_t>(orbit_data(a.perm).s())) fail(c.str() + " Fix(tau)");
                for (std::size_t i = 0; i < g.n(); ++i) {
                    auto lhs = p * reflection(g.entries, static_cast<int>(i)).coroot * pi;
                    if (!(lhs == reflection(g.entries, a.perm[i]).coroot)) fail(c.str() + " " + perm_str(a.perm));
                    ++n;
                }
            }
        }
        return n;
    });
    s.check("twisted Coxeter elements are integral unimodular and fix c", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, true)) {
            auto g = build_affine_cartan(c);
            auto tc = twisted_coxeter(c, t);
            auto d = det(tc.map_coroot);
            if (!tc.map_coroot.is_integral() || (d != Rational(1) && d != Rational(-1))) fail(tag(c, t) + " det " + d.str());
            if (tc.map_coroot * qvec(g.dual_marks) != qvec(g.dual_marks)) fail(tag(c, t) + " moves c");
            auto od = orbit_data(t.perm);
            std::set<int> seen;
            for (int w : tc.word) seen.insert(od.orbit_of[w]);
            if (seen.size() != tc.word.size() || static_cast<int>(seen.size()) != od.s()) fail(tag(c, t) + " word");
            ++n;
        }
        return n;
    });
    s.check("(t-1)^2 exactly divides the characteristic polynomial", [&](auto fail) {
        std::int64_t n = 0;
        Poly t1 = Poly::t_pow_minus_one(1);
        for (const auto& [c, t] : pairs(bound, false)) {
            auto p = charpoly_int(twisted_coxeter(c, t).map_coroot);
            if (!p.divisible_by(t1.pow(2)) || p.divisible_by(t1.pow(3))) fail(tag(c, t) + " " + p.factored());
            auto cst = p.coeff(0);
            if (p.degree() != node_count(c) || (cst != 1 && cst != -1)) fail(tag(c, t) + " degree/constant");
            ++n;
        }
        return n;
    });
    s.check("fixed space of cox on h' is spanned by c", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, true)) {
            auto g = build_affine_cartan(c);
            auto fs = fixed_space(twisted_coxeter(c, t).map_coroot);
            if (!same_span(fs, {qvec(g.dual_marks)}, g.n())) fail(tag(c, t) + " dim " + std::to_string(fs.size()));
            ++n;
        }
        return n;
    });
    s.check("distinct-orbit fixed points, 200 random subsets per pair", [&](auto fail) {
        std::mt19937 rng(7);
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, true)) {
            auto m = build_affine_cartan(c).entries;
            auto od = orbit_data(t.perm);
            if (!distinct_orbit_fixpoint_check(m, t.perm, {})) fail(tag(c, t) + " empty subset");
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<int> orbits(od.s());
                std::iota(orbits.begin(), orbits.end(), 0);
                std::shuffle(orbits.begin(), orbits.end(), rng);
                int len = std::uniform_int_distribution<int>(1, od.s())(rng);
                std::vector<int> idx;
                for (int k = 0; k < len; ++k) {
                    const auto& o = od.orbits[orbits[k]];
                    idx.push_back(o[std::uniform_int_distribution<std::size_t>(0, o.size() - 1)(rng)]);
                }
                if (!distinct_orbit_fixpoint_check(m, t.perm, idx)) fail(tag(c, t));
                ++n;
            }
        }
        return n;
    });
}

void section_suite(std::vector<Check>& out, int bound) {
    Suite s("section", out);
    s.check("b solves (cox-1)b = kc and leaves the cone when c is removed", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, false)) {
            auto g = build_affine_cartan(c);
            auto tc = twisted_coxeter(c, t);
            auto sol = solve_b(g.dual_marks, tc.map_coroot);
            QVec lhs = (tc.map_coroot - QMat::identity(g.n())) * qvec(sol.b);
            bool below = false;
            for (std::size_t i = 0; i < g.n(); ++i) {
                if (lhs[i] != Rational(sol.k * g.dual_marks[i])) fail(tag(c, t) + " inexact");
                if (sol.b[i] < 0) fail(tag(c, t) + " negative");
                below = below || sol.b[i] < g.dual_marks[i];
            }
            if (!below) fail(tag(c, t) + " b - c in cone");
            ++n;
        }
        return n;
    });
    s.check("brute force finds no smaller k", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, false)) {
            auto g = build_affine_cartan(c);
            auto tc = twisted_coxeter(c, t);
            auto sol = solve_b(g.dual_marks, tc.map_coroot);
            if (!solve_b_minimality_oracle(g.dual_marks, tc.map_coroot, sol.k)) fail(tag(c, t));
            ++n;
        }
        return n;
    });
    s.check("beta values are p times the folded dual marks", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, false)) {
            auto sd = section(c, t);  // throws on positivity or proportionality failure
            if (sd.p.sign() <= 0) fail(tag(c, t) + " p");
            for (auto e : sd.cstar_exponents)
                if (e <= 0) fail(tag(c, t) + " exponent");
            ++n;
        }
        return n;
    });
    s.check("exponents are k times the orbit levels", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, false)) {
            auto sd = section(c, t);
            auto lv = orbit_levels(build_affine_cartan(c).dual_marks, orbit_data(t.perm));
            for (std::size_t i = 0; i < lv.size(); ++i)
                if (sd.cstar_exponents[i] != sd.k * lv[i]) fail(tag(c, t));
            ++n;
        }
        return n;
    });
    s.check("p re-derived from the printed b of Table 3", [&](auto fail) {
        std::int64_t n = 0;
        auto t4 = build_table(4, bound);
        for (const auto& r : t4.rows) {
            if (!r.extra.contains("p_from_table3")) continue;
            const json& want = r.corrected.is_null() ? r.paper : r.corrected;
            if (r.extra["p_from_table3"] != want && r.extra["p_from_table3"] != r.computed)
                fail(r.c.str() + " " + r.auto_name);
            ++n;
        }
        return n;
    });
}

void level_suite(std::vector<Check>& out, int bound) {
    Suite s("level", out);
    s.check("coroot Gram is symmetric, Cartan for simply laced", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            if (c.twist != 1) continue;
            auto g = coroot_gram(c);
            auto fd = finite_data(c);
            bool sl = std::all_of(fd.symmetrizer.begin(), fd.symmetrizer.end(), [](const Rational& x) { return x == Rational(1); });
            if (sl && !(g == QMat(fd.cartan))) fail(c.str());
            ++n;
        }
        return n;
    });
    s.check("special automorphisms move 0 to a node of mark 1", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& c : sweep(bound)) {
            if (c.twist != 1) continue;
            auto g = build_affine_cartan(c);
            for (const auto& r : special_subgroup(c)) {
                if (g.marks[r.perm[0]] != 1) fail(c.str() + " " + perm_str(r.perm));
                lambda_rho(c, r);
                ++n;
            }
        }
        return n;
    });
    s.check("k_f in {1,2}, rho = id gives 1", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, true)) {
            if (c.twist != 1) continue;
            auto lr = fundamental_level(c, t);
            if (lr.k_f != 1 && lr.k_f != 2) fail(tag(c, t) + " k_f " + std::to_string(lr.k_f));
            if (lr.rho.perm == identity_perm(static_cast<int>(t.perm.size())) && lr.k_f != 1) fail(tag(c, t) + " rho = id");
            ++n;
        }
        return n;
    });
    // The basic level is defined for the cyclic group generated by rho; when
    // sigma is nontrivial beta sums over the longer tau-orbit and the
    // divisibility can fail (D1[n], n = 0 mod 4, gamma).
    std::vector<std::string> outside;
    s.check("k_f divides k_b when tau = rho", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, true)) {
            if (c.twist != 1) continue;
            auto lr = fundamental_level(c, t);
            bool special = lr.sigma.perm == identity_perm(static_cast<int>(t.perm.size()));
            if (lr.k_b % lr.k_f == 0) {
                ++n;
                continue;
            }
            if (special) fail(tag(c, t));
            else outside.push_back(tag(c, t));
            ++n;
        }
        return n;
    });
    if (!outside.empty() && out.back().passed) {
        out.back().detail = "fails only with sigma != id:";
        for (const auto& x : outside) out.back().detail += " " + x + ";";
    }
    s.check("twisted cases pass the parity cross-check", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& [c, t] : pairs(bound, false)) {
            if (c.twist == 1) continue;
            auto tr = twisted_fundamental_level(c, t);
            if (!tr.parity_ok || !tr.two_lambda_in_coroot_lattice) fail(tag(c, t));
            ++n;
        }
        return n;
    });
}

void weights_suite(std::vector<Check>& out, int bound) {
    Suite s("weights", out);
    int wb = bound;
    auto nondegenerate = [&](int b) {
        std::vector<WeightSetup> v;
        for (const auto& [c, t] : pairs(b, true)) {
            auto f = fold(build_affine_cartan(c).entries, t.perm);
            if (f.recognized.kind == Recognition::Case) v.push_back(weight_setup(c, t));
        }
        return v;
    };
    auto setups = nondegenerate(wb);
    s.check("Lambda_i has the orbit-sum level", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& w : setups)
            for (int i = 0; i < w.s(); ++i) {
                if (level(w, big_lambda(w, i)) != Rational(w.levels[i])) fail(tag(w.c, w.tau));
                ++n;
            }
        return n;
    });
    s.check("D-sets agree with brute force (rank <= 4)", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& w : setups) {
            if (w.c.rank > 4) continue;
            for (int i = 0; i < w.s(); ++i) {
                std::vector<IVec> a;
                for (const auto& e : d_set_mod_delta(w, i)) a.push_back(e.weight.n);
                if (a != d_set_brute_force(w, i)) fail(tag(w.c, w.tau) + " orbit " + std::to_string(i));
                ++n;
            }
        }
        return n;
    });
    s.check("D-set entries classify and n_max is contiguous", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& w : setups)
            for (int i = 0; i < w.s(); ++i) {
                bool form_one = false;
                for (const auto& e : d_set_mod_delta(w, i)) {
                    form_one = form_one || e.form == "I";
                    if (e.n_max > 0) fail(tag(w.c, w.tau) + " positive n_max");
                    if (!in_cone_at_depth(w, i, e.weight, e.n_max)) fail(tag(w.c, w.tau) + " not in cone at n_max");
                    if (in_cone_at_depth(w, i, e.weight, e.n_max + 1)) fail(tag(w.c, w.tau) + " in cone above n_max");
                    ++n;
                }
                if (!form_one) fail(tag(w.c, w.tau) + " Lambda_i missing");
            }
        return n;
    });
    s.check("Jacobian structure is block upper triangular", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& w : setups) {
            auto sp = jacobian_sparsity(w);
            if (!sp.block_upper_triangular) fail(tag(w.c, w.tau));
            for (int i = 0; i < w.s(); ++i)
                if (sp.tags[i][i] != "diag-unit") fail(tag(w.c, w.tau) + " diagonal");
            ++n;
        }
        return n;
    });
    s.check("cyclic strictness for equal levels", [&](auto fail) {
        std::int64_t n = 0;
        for (const auto& w : setups) {
            if (!cyclic_strictness(w)) fail(tag(w.c, w.tau));
            ++n;
        }
        return n;
    });
}

void cli_suite(std::vector<Check>& out, int bound) {
    Suite s("cli", out);
    s.check("table rendering is deterministic", [&](auto fail) {
        std::int64_t n = 0;
        for (const char* f : {"json", "md", "tsv"}) {
            std::vector<TableReport> a, b;
            for (int id = 1; id <= 5; ++id) {
                a.push_back(build_table(id, bound));
                b.push_back(build_table(id, bound));
            }
            if (render(a, f) != render(b, f)) fail(f);
            ++n;
        }
        return n;
    });
}

}  // namespace

const std::vector<std::string>& verify_scopes() {
    static const std::vector<std::string> s = {"all", "catalog", "autgroup", "folding", "weyl",
                                               "section", "level", "weights", "cli"};
    return s;
}

std::vector<Check> run_verify(const std::string& scope, int rank_bound) {
    static const std::vector<std::pair<std::string, void (*)(std::vector<Check>&, int)>> suites = {
        {"catalog", catalog_suite}, {"autgroup", autgroup_suite}, {"folding", folding_suite},
        {"weyl", weyl_suite},       {"section", section_suite},   {"level", level_suite},
        {"weights", weights_suite}, {"cli", cli_suite}};
    if (std::find(verify_scopes().begin(), verify_scopes().end(), scope) == verify_scopes().end())
        throw std::invalid_argument("unknown verify scope '" + scope + "'");
    std::vector<Check> out;
    for (const auto& [name, fn] : suites)
        if (scope == "all" || scope == name) fn(out, rank_bound);
    return out;
}

json to_json(const std::vector<Check>& checks) {
    json arr = json::array();
    int failed = 0;
    for (const auto& c : checks) {
        arr.push_back({{"module", c.module}, {"name", c.name}, {"passed", c.passed}, {"checked", c.checked},
                       {"detail", c.detail}});
        failed += !c.passed;
    }
    return {{"schema", "kmfold/1"}, {"checks", arr},
            {"summary", {{"total", checks.size()}, {"failed", failed}, {"passed", checks.size() - failed}}}};
}

}  // namespace kmfold
