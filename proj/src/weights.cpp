#include "kmfold/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kmfold {

IVec orbit_levels(const IVec& dual_marks, const OrbitData& od) {
    IVec out;
    for (const auto& o : od.orbits) {
        std::int64_t s = 0;
        for (int x : o) s += dual_marks[x];
        out.push_back(s);
    }
    return out;
}

WeightSetup weight_setup(const AffineCase& c, const DiagramAut& tau) {
    WeightSetup w{c, tau, build_affine_cartan(c), {}, {}};
    w.fold = fold(w.g.entries, tau.perm);
    if (w.fold.recognized.kind != Recognition::Case)
        throw CaseError("weights: degenerate folding of " + c.str() + " by " + perm_str(tau.perm));
    w.levels = orbit_levels(w.g.dual_marks, w.fold.orbits);
    return w;
}

WeightVec big_lambda(const WeightSetup& w, int orbit) {
    WeightVec v{QVec(w.g.n(), Rational(0)), Rational(0)};
    for (int x : w.orbits().orbits[orbit]) v.coords[x] = 1;
    return v;
}

WeightVec expand(const WeightSetup& w, const InvariantWeight& mu) {
    WeightVec v{QVec(w.g.n(), Rational(0)), mu.delta_coeff};
    for (int j = 0; j < w.s(); ++j)
        for (int x : w.orbits().orbits[j]) v.coords[x] += Rational(mu.n[j]);
    return v;
}

Rational level(const WeightSetup& w, const WeightVec& v) {
    Rational s(0);
    for (std::size_t j = 0; j < v.coords.size(); ++j) s += v.coords[j] * Rational(w.g.dual_marks[j]);
    return s;
}

namespace {

std::int64_t inv_level(const WeightSetup& w, const InvariantWeight& mu) {
    std::int64_t s = 0;
    for (int j = 0; j < w.s(); ++j) s += mu.n[j] * w.levels[j];
    return s;
}

void check_pre(const WeightSetup& w, int orbit, const InvariantWeight& mu) {
    if (orbit < 0 || orbit >= w.s()) throw std::invalid_argument("weights: orbit index out of range");
    if (static_cast<int>(mu.n.size()) != w.s()) throw std::invalid_argument("weights: weight has wrong length");
    for (auto x : mu.n)
        if (x < 0) throw std::invalid_argument("weights: weight is not dominant");
    if (inv_level(w, mu) != w.levels[orbit]) throw std::invalid_argument("weights: level mismatch");
}

// Lambda_i - mu in lambda coordinates.
IVec difference(const WeightSetup& w, int orbit, const InvariantWeight& mu) {
    IVec v(w.g.n(), 0);
    for (int x : w.orbits().orbits[orbit]) v[x] += 1;
    for (int j = 0; j < w.s(); ++j)
        for (int x : w.orbits().orbits[j]) v[x] -= mu.n[j];
    return v;
}

// Integral coefficients k with sum k_l alpha_l = v mod delta and
// 0 <= k_0 < a_0; every other solution is k + j a with j integral.
std::optional<IVec> root_coeffs(const WeightSetup& w, const IVec& v) {
    QVec rhs(v.begin(), v.end());
    auto k = solve(QMat(w.g.entries), rhs);
    if (!k) return std::nullopt;
    std::int64_t a0 = w.g.marks[0];
    for (std::int64_t m = 0; m < a0; ++m) {
        Rational t = (Rational(m) - (*k)[0]) / Rational(a0);
        IVec out;
        for (std::size_t l = 0; l < k->size(); ++l) {
            Rational x = (*k)[l] + t * Rational(w.g.marks[l]);
            if (!x.is_integer()) break;
            out.push_back(x.to_int());
        }
        if (out.size() == k->size()) return out;
    }
    return std::nullopt;
}

}  // namespace

// alpha_l = sum_j C_jl lambda_j + delta_{l0} delta, so the delta coefficient of
// sum k_l alpha_l is k_0 and -n = k_0.
std::optional<std::int64_t> n_max(const WeightSetup& w, int orbit, const InvariantWeight& mu) {
    check_pre(w, orbit, mu);
    auto k = root_coeffs(w, difference(w, orbit, mu));
    if (!k) return std::nullopt;
    // least integer m with k + m a >= 0
    std::int64_t m = INT64_MIN;
    for (std::size_t l = 0; l < k->size(); ++l) m = std::max(m, Rational(-(*k)[l], w.g.marks[l]).ceil());
    std::int64_t n = -((*k)[0] + m * w.g.marks[0]);
    if (n > 0) throw std::logic_error("n_max is positive");
    if (mu.n == [&] { IVec e(w.s(), 0); e[orbit] = 1; return e; }() && n != 0)
        throw std::logic_error("n_max of Lambda_i is not zero");
    return n;
}

bool in_cone_at_depth(const WeightSetup& w, int orbit, const InvariantWeight& mu, std::int64_t n) {
    check_pre(w, orbit, mu);
    QVec rhs;
    for (auto x : difference(w, orbit, mu)) rhs.emplace_back(x);
    auto k = solve(QMat(w.g.entries), rhs);
    if (!k) return false;
    // fix k_0 = -n along the kernel direction a
    Rational t = (Rational(-n) - (*k)[0]) / Rational(w.g.marks[0]);
    for (std::size_t l = 0; l < k->size(); ++l) {
        Rational x = (*k)[l] + t * Rational(w.g.marks[l]);
        if (!x.is_integer() || x.sign() < 0) return false;
    }
    return true;
}

std::vector<DSetEntry> d_set_mod_delta(const WeightSetup& w, int orbit) {
    std::vector<DSetEntry> out;
    int s = w.s();
    IVec n(s, 0);
    std::int64_t target = w.levels[orbit];
    std::function<void(int, std::int64_t)> go = [&](int j, std::int64_t rest) {
        if (j == s) {
            if (rest != 0) return;
            InvariantWeight mu{n, Rational(0)};
            auto nm = n_max(w, orbit, mu);
            if (!nm) return;
            std::int64_t total = std::accumulate(n.begin(), n.end(), std::int64_t{0});
            std::string form;
            if (total == 1 && n[orbit] == 1) {
                form = "I";
            } else if (total == 1) {
                int jj = static_cast<int>(std::find(n.begin(), n.end(), 1) - n.begin());
                if (w.levels[jj] != w.levels[orbit]) throw std::logic_error("form II with unequal level");
                form = "II";
            } else {
                for (int l = 0; l < s; ++l)
                    if (n[l] != 0 && w.levels[orbit] <= w.levels[l]) throw std::logic_error("unclassifiable weight");
                form = "III";
            }
            out.push_back({mu, form, *nm});
            return;
        }
        for (std::int64_t x = 0; x * w.levels[j] <= rest; ++x) {
            n[j] = x;
            go(j + 1, rest - x * w.levels[j]);
        }
        n[j] = 0;
    };
    go(0, target);
    std::sort(out.begin(), out.end(), [](const DSetEntry& a, const DSetEntry& b) { return a.weight.n > b.weight.n; });
    return out;
}

std::vector<IVec> d_set_brute_force(const WeightSetup& w, int orbit) {
    auto fd = finite_data(w.c);
    auto inv = inverse(QMat(fd.cartan));
    if (!inv) throw std::logic_error("singular finite Cartan matrix");
    int s = w.s();
    std::int64_t bound = w.levels[orbit] * *std::max_element(w.levels.begin(), w.levels.end());
    std::vector<IVec> out;
    IVec n(s, 0);
    std::function<void(int)> go = [&](int j) {
        if (j == s) {
            InvariantWeight mu{n, Rational(0)};
            if (inv_level(w, mu) != w.levels[orbit]) return;
            IVec v = difference(w, orbit, mu);
            // for fixed k_0 the finite rows give C_fin k_fin = v_fin - k_0 C_{.0}
            for (std::int64_t k0 = 0; k0 < w.g.marks[0]; ++k0) {
                QVec vf;
                for (std::size_t l = 1; l < v.size(); ++l) vf.emplace_back(v[l] - k0 * w.g.entries[l][0]);
                QVec k = *inv * vf;
                if (std::all_of(k.begin(), k.end(), [](const Rational& x) { return x.is_integer(); })) {
                    out.push_back(n);
                    return;
                }
            }
            return;
        }
        for (std::int64_t x = 0; x <= bound; ++x) {
            n[j] = x;
            go(j + 1);
        }
        n[j] = 0;
    };
    go(0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Sparsity jacobian_sparsity(const WeightSetup& w) {
    int s = w.s();
    Sparsity sp;
    sp.tags.assign(s, std::vector<std::string>(s));
    for (int i = 0; i < s; ++i) {
        auto ds = d_set_mod_delta(w, i);
        for (int j = 0; j < s; ++j) {
            std::string& t = sp.tags[i][j];
            if (i == j) {
                t = "diag-unit";
            } else if (w.levels[j] < w.levels[i]) {
                t = "higher-order-or-zero";
            } else if (w.levels[j] == w.levels[i]) {
                IVec e(s, 0);
                e[j] = 1;
                bool hit = std::any_of(ds.begin(), ds.end(), [&](const DSetEntry& d) { return d.weight.n == e; });
                t = hit ? "linear" : "zero";
            } else {
                t = "zero";
            }
        }
    }
    sp.order.resize(s);
    std::iota(sp.order.begin(), sp.order.end(), 0);
    std::stable_sort(sp.order.begin(), sp.order.end(), [&](int a, int b) { return w.levels[a] > w.levels[b]; });
    sp.block_upper_triangular = true;
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < r; ++c) {
            int i = sp.order[r], j = sp.order[c];
            if (w.levels[i] != w.levels[j] && sp.tags[i][j] != "zero") sp.block_upper_triangular = false;
        }
    return sp;
}

bool cyclic_strictness(const WeightSetup& w) {
    std::map<std::int64_t, std::vector<int>> groups;
    for (int j = 0; j < w.s(); ++j) groups[w.levels[j]].push_back(j);
    for (auto& [lv, g] : groups) {
        if (g.size() < 2) continue;
        std::vector<int> cyc = g;
        // cycles up to rotation: fix the first element
        do {
            bool strict = false;
            for (std::size_t a = 0; a < cyc.size() && !strict; ++a) {
                int from = cyc[a], to = cyc[(a + 1) % cyc.size()];
                IVec e(w.s(), 0);
                e[to] = 1;
                auto nm = n_max(w, from, {e, Rational(0)});
                if (!nm || *nm < 0) strict = true;
            }
            if (!strict) return false;
        } while (cyc.size() <= 7 && std::next_permutation(cyc.begin() + 1, cyc.end()));
    }
    return true;
}

}  // namespace kmfold
