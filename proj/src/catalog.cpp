#include "kmfold/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "kmfold/embedded.hpp"
#include "kmfold/expr.hpp"

namespace kmfold {

using nlohmann::json;

std::string AffineCase::str() const {
    return std::string(1, family) + std::to_string(twist) + "[" + std::to_string(rank) + "]";
}

std::string AffineCase::display() const {
    return std::string(1, family) + "^" + std::to_string(twist) + "_" + std::to_string(rank);
}

AffineCase parse_case(const std::string& s) {
    auto bad = [&]() { return CaseError("bad case descriptor '" + s + "'"); };
    if (s.size() < 5) throw bad();
    AffineCase c;
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G') throw bad();
    c.family = f;
    if (s[1] < '1' || s[1] > '3') throw bad();
    c.twist = s[1] - '0';
    if (s[2] != '[' || s.back() != ']') throw bad();
    std::string num = s.substr(3, s.size() - 4);
    if (num.empty() || num.size() > 4 ||
        !std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw bad();
    c.rank = std::stoi(num);
    return c;
}

// ---------------------------------------------------------------- loading

namespace {

std::string str_or(const json& j, const char* key, const std::string& dflt = "") {
    return j.contains(key) ? j.at(key).get<std::string>() : dflt;
}

FamilyTemplate parse_family(const json& j) {
    FamilyTemplate f;
    f.family = j.at("family").get<std::string>().at(0);
    f.twist = j.at("twist").get<int>();
    f.rank_min = j.at("rank_min").get<int>();
    f.rank_max = j.value("rank_max", 0);
    f.rank_ok = j.at("rank_ok").get<std::string>();
    f.nodes = j.at("nodes").get<std::string>();
    for (const auto& e : j.at("entries")) {
        FamilyTemplate::Entry en;
        en.when = str_or(e, "when");
        if (e.contains("for")) {
            en.loop_var = e["for"][0].get<std::string>();
            en.lo = e["for"][1].get<std::string>();
            en.hi = e["for"][2].get<std::string>();
        }
        en.i = e.at("i").get<std::string>();
        en.j = e.at("j").get<std::string>();
        en.v = e.at("v").get<std::string>();
        en.vt = str_or(e, "vt", en.v);
        f.entries.push_back(en);
    }
    if (j.contains("generators"))
        for (const auto& [name, alts] : j["generators"].items())
            for (const auto& a : alts) {
                std::string img;
                if (a.contains("images")) {
                    // explicit list, stored as a comma separated literal
                    for (std::size_t k = 0; k < a["images"].size(); ++k)
                        img += (k ? "," : "") + std::to_string(a["images"][k].get<int>());
                    img = "[" + img + "]";
                } else {
                    img = a.at("image").get<std::string>();
                }
                f.generators[name].emplace_back(str_or(a, "when"), img);
            }
    f.group_order = j.at("group_order").get<std::string>();
    if (j.contains("special")) {
        f.has_special = true;
        for (const auto& s : j["special"])
            f.special.emplace_back(str_or(s, "when"), s.at("generators").get<std::vector<std::string>>());
    }
    for (const auto& r : j.at("representatives"))
        f.reps.push_back({r.at("name").get<std::string>(), str_or(r, "when"), str_or(r, "divisors_of")});
    const auto& w = j.at("word");
    f.word_default = w.value("default", "min");
    if (w.contains("rules"))
        for (const auto& r : w["rules"]) {
            WordRule wr;
            wr.auto_name = str_or(r, "auto");
            wr.when = str_or(r, "when");
            wr.note = str_or(r, "note");
            if (r.contains("word")) {
                wr.rule = "explicit";
                wr.word = r["word"].get<std::vector<std::string>>();
            } else {
                wr.rule = r.at("rule").get<std::string>();
            }
            f.word_rules.push_back(wr);
        }
    if (j.contains("notes")) f.notes = j["notes"].get<std::vector<std::string>>();
    return f;
}

}  // namespace

Catalog Catalog::from_json_texts(const std::vector<std::string>& texts) {
    Catalog c;
    for (const auto& t : texts) {
        json j = json::parse(t);
        if (j.contains("aliases")) {
            for (const auto& [k, v] : j["aliases"].items()) c.aliases_[k] = v.get<std::string>();
            continue;
        }
        c.fams_.push_back(parse_family(j));
    }
    std::sort(c.fams_.begin(), c.fams_.end(), [](const FamilyTemplate& a, const FamilyTemplate& b) {
        return std::tie(a.twist, a.family) < std::tie(b.twist, b.family);
    });
    return c;
}

Catalog Catalog::from_directory(const std::string& dir) {
    std::vector<std::string> texts;
    std::vector<std::filesystem::path> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        texts.push_back(ss.str());
    }
    return from_json_texts(texts);
}

const Catalog& Catalog::instance() {
    static const Catalog cat = [] {
        if (const char* dir = std::getenv("KMFOLD_CATALOG_DIR"); dir && *dir) return from_directory(dir);
        std::vector<std::string> texts;
        for (const auto& [name, text] : embedded::catalog_files()) texts.emplace_back(text);
        return from_json_texts(texts);
    }();
    return cat;
}

bool Catalog::contains(const AffineCase& c) const {
    for (const auto& f : fams_) {
        if (f.family != c.family || f.twist != c.twist) continue;
        if (c.rank < f.rank_min || (f.rank_max && c.rank > f.rank_max)) return false;
        return eval_int(f.rank_ok, {{"n", c.rank}}) != 0;
    }
    return false;
}

const FamilyTemplate& Catalog::family(const AffineCase& c) const {
    if (!contains(c)) throw CaseError("case " + c.str() + " is not in the catalog");
    for (const auto& f : fams_)
        if (f.family == c.family && f.twist == c.twist) return f;
    throw CaseError("case " + c.str() + " is not in the catalog");
}

std::vector<AffineCase> Catalog::cases_up_to(int rank_bound) const {
    std::vector<AffineCase> out;
    for (const auto& f : fams_) {
        int hi = f.rank_max ? f.rank_max : rank_bound;
        for (int n = f.rank_min; n <= hi; ++n) {
            AffineCase c{f.family, f.twist, n};
            if (contains(c)) out.push_back(c);
        }
    }
    return out;
}

std::string canonical_descriptor(const std::string& s) {
    auto al = Catalog::instance().aliases();
    auto it = al.find(s);
    return it == al.end() ? s : it->second;
}

// ---------------------------------------------------------------- matrices

int node_count(const AffineCase& c) {
    const auto& f = Catalog::instance().family(c);
    return static_cast<int>(eval_int(f.nodes, {{"n", c.rank}}));
}

bool is_gcm(const IMat& m) {
    std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n || m[i][i] != 2) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) return false;
            if ((m[i][j] == 0) != (m[j][i] == 0)) return false;
        }
    }
    return true;
}

std::optional<IVec> right_null_primitive(const IMat& m) {
    auto k = kernel(QMat(m));
    if (k.size() != 1) return std::nullopt;
    return primitive_positive(k[0]);
}

std::optional<IVec> left_null_primitive(const IMat& m) {
    auto k = kernel(QMat(m).transpose());
    if (k.size() != 1) return std::nullopt;
    return primitive_positive(k[0]);
}

GCM build_affine_cartan(const AffineCase& c) {
    const auto& f = Catalog::instance().family(c);
    Env env{{"n", c.rank}};
    int nn = static_cast<int>(eval_int(f.nodes, env));
    IMat m(nn, IVec(nn, 0));
    for (int i = 0; i < nn; ++i) m[i][i] = 2;
    for (const auto& e : f.entries) {
        if (!e.when.empty() && !eval_int(e.when, env)) continue;
        auto put = [&](Env& ev) {
            auto i = eval_int(e.i, ev), j = eval_int(e.j, ev);
            if (i < 0 || j < 0 || i >= nn || j >= nn || i == j)
                throw CaseError("catalog entry out of range for " + c.str());
            m[i][j] = eval_int(e.v, ev);
            m[j][i] = eval_int(e.vt, ev);
        };
        if (e.loop_var.empty()) {
            put(env);
        } else {
            Env ev = env;
            auto lo = eval_int(e.lo, env), hi = eval_int(e.hi, env);
            for (auto k = lo; k <= hi; ++k) {
                ev[e.loop_var] = k;
                put(ev);
            }
        }
    }
    GCM g;
    g.entries = m;
    auto a = right_null_primitive(m);
    auto ad = left_null_primitive(m);
    if (!is_gcm(m) || !a || !ad) throw CaseError("catalog data for " + c.str() + " is not an affine GCM");
    g.marks = *a;
    g.dual_marks = *ad;
    return g;
}

// ---------------------------------------------------------------- recognition

std::string Recognition::str() const {
    switch (kind) {
        case Zero: return "0";
        case NotAffine: return "not-affine";
        case Case: return value.str();
    }
    return "";
}

namespace {

// Backtracking search for a bijection p with a[i][j] = b[p[i]][p[j]].
std::optional<std::vector<int>> isomorphism(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) return std::nullopt;
    auto signature = [](const IMat& m, int i) {
        IVec row, col;
        for (std::size_t j = 0; j < m.size(); ++j) {
            row.push_back(m[i][j]);
            col.push_back(m[j][i]);
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        row.insert(row.end(), col.begin(), col.end());
        return row;
    };
    std::vector<IVec> sa(n), sb(n);
    for (int i = 0; i < n; ++i) {
        sa[i] = signature(a, i);
        sb[i] = signature(b, i);
    }
    std::vector<int> p(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == n) return true;
        for (int x = 0; x < n; ++x) {
            if (used[x] || sa[i] != sb[x]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = a[i][j] == b[x][p[j]] && a[j][i] == b[p[j]][x];
            if (!ok) continue;
            p[i] = x;
            used[x] = true;
            if (go(i + 1)) return true;
            used[x] = false;
        }
        return false;
    };
    if (go(0)) return p;
    return std::nullopt;
}

}  // namespace

Recognition recognize(const IMat& m) {
    Recognition r;
    if (m.size() == 1 && m[0].size() == 1 && m[0][0] == 0) {
        r.kind = Recognition::Zero;
        return r;
    }
    if (!is_gcm(m) || rank(QMat(m)) + 1 != m.size()) return r;
    const auto& cat = Catalog::instance();
    int nn = static_cast<int>(m.size());
    for (const auto& f : cat.families()) {
        int hi = f.rank_max ? f.rank_max : 2 * nn + 2;
        for (int n = f.rank_min; n <= hi; ++n) {
            AffineCase c{f.family, f.twist, n};
            if (!cat.contains(c) || node_count(c) != nn) continue;
            GCM g = build_affine_cartan(c);
            if (auto p = isomorphism(m, g.entries)) {
                r.kind = Recognition::Case;
                r.value = c;
                r.relabel = *p;
                return r;
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------- finite part

FiniteData finite_data(const AffineCase& c) {
    GCM g = build_affine_cartan(c);
    std::size_t r = g.n() - 1;
    FiniteData fd;
    fd.cartan.assign(r, IVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) fd.cartan[i][j] = g.entries[i + 1][j + 1];
    // propagate d_j = d_i * C_ij / C_ji along the connected diagram
    std::vector<std::optional<Rational>> d(r);
    d[0] = Rational(1);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (d[i] && !d[j] && fd.cartan[i][j] != 0) {
                    d[j] = *d[i] * Rational(fd.cartan[i][j], fd.cartan[j][i]);
                    changed = true;
                }
    }
    Rational mx = 0;
    for (auto& x : d) {
        if (!x) throw CaseError("disconnected finite diagram for " + c.str());
        mx = std::max(mx, *x);
    }
    for (auto& x : d) fd.symmetrizer.push_back(*x / mx);
    return fd;
}

}  // namespace kmfold
