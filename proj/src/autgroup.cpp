#include "kmfold/autgroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "kmfold/expr.hpp"

namespace kmfold {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

Perm power(const Perm& p, int k) {
    Perm r = identity_perm(static_cast<int>(p.size()));
    Perm base = k >= 0 ? p : inverse(p);
    for (int i = 0; i < std::abs(k); ++i) r = compose(base, r);
    return r;
}

int perm_order(const Perm& p) {
    Perm id = identity_perm(static_cast<int>(p.size()));
    Perm q = p;
    int k = 1;
    while (q != id) {
        q = compose(p, q);
        ++k;
    }
    return k;
}

bool preserves(const IMat& m, const Perm& p) {
    if (p.size() != m.size()) return false;
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[p[i]][p[j]] != m[i][j]) return false;
    return true;
}

DiagramAut DiagramAut::make(Perm p, std::string name) {
    DiagramAut a;
    a.order = perm_order(p);
    a.perm = std::move(p);
    a.name = std::move(name);
    return a;
}

std::string perm_str(const Perm& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

std::vector<DiagramAut> automorphism_group(const IMat& m) {
    int n = static_cast<int>(m.size());
    // prune by row/column multisets
    auto sig = [&](int i) {
        IVec r, c;
        for (int j = 0; j < n; ++j) {
            r.push_back(m[i][j]);
            c.push_back(m[j][i]);
        }
        std::sort(r.begin(), r.end());
        std::sort(c.begin(), c.end());
        r.insert(r.end(), c.begin(), c.end());
        return r;
    };
    std::vector<IVec> s(n);
    for (int i = 0; i < n; ++i) s[i] = sig(i);
    std::vector<DiagramAut> out;
    Perm p(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> go = [&](int i) {
        if (i == n) {
            out.push_back(DiagramAut::make(p));
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (used[x] || s[i] != s[x] || m[x][x] != m[i][i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = m[i][j] == m[x][p[j]] && m[j][i] == m[p[j]][x];
            if (!ok) continue;
            p[i] = x;
            used[x] = true;
            go(i + 1);
            used[x] = false;
        }
    };
    go(0);
    std::sort(out.begin(), out.end(), [](const DiagramAut& a, const DiagramAut& b) { return a.perm < b.perm; });
    return out;
}

Perm named_generator(const AffineCase& c, const std::string& gen) {
    const auto& f = Catalog::instance().family(c);
    int nn = node_count(c);
    auto it = f.generators.find(gen);
    if (it == f.generators.end()) throw CaseError("no automorphism '" + gen + "' for " + c.str());
    Env env{{"n", c.rank}};
    for (const auto& [when, image] : it->second) {
        if (!when.empty() && !eval_int(when, env)) continue;
        Perm p(nn);
        if (!image.empty() && image[0] == '[') {
            std::stringstream ss(image.substr(1, image.size() - 2));
            std::string tok;
            int i = 0;
            while (std::getline(ss, tok, ',')) {
                if (i >= nn) throw CaseError("image list too long for " + c.str());
                p[i++] = std::stoi(tok);
            }
            if (i != nn) throw CaseError("image list too short for " + c.str());
        } else {
            Expr e(image);
            for (int i = 0; i < nn; ++i) {
                env["i"] = i;
                p[i] = static_cast<int>(e.eval(env));
            }
        }
        if (!preserves(build_affine_cartan(c).entries, p))
            throw CaseError("catalog automorphism '" + gen + "' of " + c.str() + " does not preserve the matrix");
        return p;
    }
    throw CaseError("no automorphism '" + gen + "' for " + c.str());
}

DiagramAut resolve_auto(const AffineCase& c, const std::string& name) {
    int nn = node_count(c);
    Perm p = identity_perm(nn);
    if (name == "id" || name.empty()) return DiagramAut::make(p, "id");
    std::stringstream ss(name);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        std::string gen = factor;
        int k = 1;
        if (auto pos = factor.find('^'); pos != std::string::npos) {
            gen = factor.substr(0, pos);
            std::string ks = factor.substr(pos + 1);
            if (ks.empty() || !std::all_of(ks.begin(), ks.end(), ::isdigit))
                throw CaseError("bad automorphism name '" + name + "'");
            k = std::stoi(ks);
        }
        if (gen.empty()) throw CaseError("bad automorphism name '" + name + "'");
        p = compose(p, power(named_generator(c, gen), k));
    }
    return DiagramAut::make(p, name);
}

std::vector<DiagramAut> special_subgroup(const AffineCase& c) {
    const auto& f = Catalog::instance().family(c);
    if (!f.has_special) throw CaseError("no special subgroup data for " + c.str());
    Env env{{"n", c.rank}};
    std::vector<Perm> gens;
    for (const auto& [when, words] : f.special) {
        if (!when.empty() && !eval_int(when, env)) continue;
        for (const auto& w : words) gens.push_back(resolve_auto(c, w).perm);
    }
    int nn = node_count(c);
    std::set<Perm> elems{identity_perm(nn)};
    std::vector<Perm> frontier{identity_perm(nn)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Perm y = compose(g, x);
                if (elems.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    std::vector<DiagramAut> out;
    for (const auto& p : elems) out.push_back(DiagramAut::make(p));
    return out;
}

std::vector<DiagramAut> conjugacy_representatives(const AffineCase& c) {
    const auto& f = Catalog::instance().family(c);
    Env env{{"n", c.rank}};
    std::vector<DiagramAut> out;
    for (const auto& r : f.reps) {
        if (!r.when.empty() && !eval_int(r.when, env)) continue;
        if (!r.divisors_of.empty()) {
            auto m = eval_int(r.divisors_of, env);
            std::string base = r.name.substr(0, r.name.find('^'));
            for (std::int64_t l = 1; l < m; ++l) {
                if (m % l != 0) continue;
                std::string nm = l == 1 ? base : base + "^" + std::to_string(l);
                out.push_back(resolve_auto(c, nm));
            }
        } else {
            out.push_back(resolve_auto(c, r.name));
        }
    }
    return out;
}

bool pairwise_non_conjugate(const std::vector<DiagramAut>& reps, const std::vector<DiagramAut>& group) {
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a + 1; b < reps.size(); ++b)
            for (const auto& g : group)
                if (compose(compose(g.perm, reps[a].perm), inverse(g.perm)) == reps[b].perm) return false;
    return true;
}

std::size_t expected_group_order(const AffineCase& c) {
    const auto& f = Catalog::instance().family(c);
    return static_cast<std::size_t>(eval_int(f.group_order, {{"n", c.rank}}));
}

RhoSigmaDecomp rho_sigma_decompose(const AffineCase& c, const DiagramAut& tau) {
    auto special = special_subgroup(c);
    const IMat m = build_affine_cartan(c).entries;
    if (!preserves(m, tau.perm)) throw CaseError("automorphism does not preserve " + c.str());
    std::vector<RhoSigmaDecomp> found;
    for (const auto& rho : special) {
        Perm sigma = compose(inverse(rho.perm), tau.perm);
        if (sigma[0] != 0 || !preserves(m, sigma)) continue;
        found.push_back({rho, DiagramAut::make(sigma), tau});
    }
    if (found.size() != 1)
        throw std::logic_error("rho-sigma decomposition of " + perm_str(tau.perm) + " in " + c.str() +
                               " has " + std::to_string(found.size()) + " solutions");
    return found.front();
}

OrbitData orbit_data(const Perm& tau) {
    OrbitData d;
    int n = static_cast<int>(tau.size());
    d.group_order = perm_order(tau);
    d.orbit_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (d.orbit_of[i] >= 0) continue;
        std::vector<int> o;
        for (int j = i; d.orbit_of[j] < 0; j = tau[j]) {
            d.orbit_of[j] = static_cast<int>(d.orbits.size());
            o.push_back(j);
        }
        std::sort(o.begin(), o.end());
        d.orbits.push_back(o);
        d.representatives.push_back(o.front());
    }
    d.stabilizer_orders.resize(n);
    for (int i = 0; i < n; ++i)
        d.stabilizer_orders[i] = d.group_order / static_cast<int>(d.orbits[d.orbit_of[i]].size());
    return d;
}

}  // namespace kmfold
