#include "kmfold/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <tuple>

#include "kmfold/embedded.hpp"
#include "kmfold/expr.hpp"
#include "kmfold/folding.hpp"
#include "kmfold/level.hpp"
#include "kmfold/section.hpp"

namespace kmfold {

namespace {

std::map<int, json> load_tables() {
    std::map<int, json> out;
    auto add = [&](const std::string& text) {
        json j = json::parse(text);
        int id = j.at("table").get<int>();
        out[id] = std::move(j);
    };
    if (const char* dir = std::getenv("KMFOLD_TABLES_DIR"); dir && *dir) {
        std::vector<std::string> paths;
        for (const auto& e : std::filesystem::directory_iterator(dir))
            if (e.path().extension() == ".json") paths.push_back(e.path().string());
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) {
            std::ifstream in(p);
            std::stringstream ss;
            ss << in.rdbuf();
            add(ss.str());
        }
    } else {
        for (const auto& [name, text] : embedded::table_files()) add(std::string(text));
    }
    return out;
}

std::string str_or(const json& j, const char* key, const std::string& def = "") {
    return j.contains(key) && j[key].is_string() ? j[key].get<std::string>() : def;
}

struct Instance {
    const json* row;
    AffineCase c;
    Env env;
    std::string auto_name;
};

// "A2[2*n-3]" -> "A2[<value>]"; "0" stays.
std::string instantiate_case(const std::string& tmpl, const Env& env) {
    auto lb = tmpl.find('[');
    if (lb == std::string::npos) return tmpl;
    auto rb = tmpl.rfind(']');
    return tmpl.substr(0, lb) + "[" + std::to_string(eval_int(tmpl.substr(lb + 1, rb - lb - 1), env)) + "]";
}

IVec instantiate_tuple(const json& segs, const Env& env) {
    IVec out;
    for (const auto& s : segs) {
        if (s.is_string()) {
            out.push_back(eval_int(s.get<std::string>(), env));
            continue;
        }
        auto from = eval_int(s.at("from").get<std::string>(), env);
        auto to = eval_int(s.at("to").get<std::string>(), env);
        auto step = eval_int(s.at("step").get<std::string>(), env);
        if (step == 0) throw ExprError("zero step in tuple range");
        for (auto x = from; step > 0 ? x <= to : x >= to; x += step) out.push_back(x);
    }
    return out;
}

std::vector<Instance> expand_rows(const json& table, int rank_bound) {
    std::vector<Instance> out;
    const auto& cat = Catalog::instance();
    for (const auto& row : table.at("rows")) {
        AffineCase base{row.at("family").get<std::string>().at(0), row.at("twist").get<int>(), 1};
        std::vector<int> ranks;
        if (row.contains("ranks")) {
            ranks = row["ranks"].get<std::vector<int>>();
        } else {
            for (int r = kSweepMin; r <= rank_bound; ++r) ranks.push_back(r);
            // low ranks where the row's formula is still valid
            if (row.contains("also_ranks"))
                for (int r : row["also_ranks"].get<std::vector<int>>())
                    if (r <= rank_bound) ranks.insert(ranks.begin(), r);
        }
        for (int rank : ranks) {
            AffineCase c = base;
            c.rank = rank;
            if (!cat.contains(c)) continue;
            Env env{{"N", rank}};
            if (row.contains("rank_when") && !eval_int(row["rank_when"].get<std::string>(), env)) continue;
            env["n"] = row.contains("n") ? eval_int(row["n"].get<std::string>(), env) : rank;
            if (row.contains("when") && !eval_int(row["when"].get<std::string>(), env)) continue;
            std::string name = row.at("auto").get<std::string>();
            if (row.contains("l")) {
                const auto& ls = row["l"];
                auto m = eval_int(ls.at("divisors_of").get<std::string>(), env);
                auto pos = name.find("^l");
                for (std::int64_t l = 1; l < m; ++l) {
                    if (m % l) continue;
                    Env e2 = env;
                    e2["l"] = l;
                    if (ls.contains("when") && !eval_int(ls["when"].get<std::string>(), e2)) continue;
                    std::string nm = name.substr(0, pos) + (l == 1 ? "" : "^" + std::to_string(l)) + name.substr(pos + 2);
                    out.push_back({&row, c, e2, nm});
                }
            } else {
                out.push_back({&row, c, env, name});
            }
        }
    }
    return out;
}

json rational_json(const Rational& r) {
    if (r.is_integer()) return r.num();
    return r.str();
}

json poly_json(const Poly& p) { return {{"coeffs", p.coeffs()}, {"factored", p.factored()}}; }

int nodes_of(const std::string& desc) {
    if (desc == "0") return 1;
    try {
        auto c = parse_case(desc);
        if (!Catalog::instance().contains(c)) return -1;
        return node_count(c);
    } catch (const std::exception&) {
        return -1;
    }
}

// Paper value of a row, or of a corrected annotation, as comparable JSON.
json paper_value(int table, const json& v, const json& row, const Env& env) {
    switch (table) {
        case 1:
            return instantiate_case(v.get<std::string>(), env);
        case 2:
            return poly_json(Expr(v.get<std::string>()).eval_poly(env));
        case 3:
            if (v.at("b").is_null()) return row.at("printed");
            return {{"k", eval_int(v.at("k").get<std::string>(), env)}, {"b", instantiate_tuple(v.at("b"), env)}};
        default:
            return eval_int(v.get<std::string>(), env);
    }
}

json row_value(int table, const json& row) {
    if (table == 3) return {{"k", row.at("k")}, {"b", row.at("b")}};
    return row.at("value");
}

bool equal_values(int table, const json& computed, const json& paper) {
    if (table == 1) {
        if (!paper.is_string()) return false;
        return canonical_descriptor(computed.get<std::string>()) == canonical_descriptor(paper.get<std::string>());
    }
    if (table == 2) return paper.is_object() && computed.at("coeffs") == paper.at("coeffs");
    return computed == paper;
}

// Values for Table 4 derived from the printed Table 3 b of the same pair.
std::optional<json> p_from_table3(const AffineCase& c, const DiagramAut& tau, const json& t3rows, int rank_bound) {
    for (const auto& inst : expand_rows(t3rows, rank_bound)) {
        if (inst.c != c || resolve_auto(c, inst.auto_name).perm != tau.perm) continue;
        const json* src = inst.row;
        json val = row_value(3, *src);
        if (val.at("b").is_null()) {
            if (!src->contains("annotation")) return std::nullopt;
            val = src->at("annotation").at("corrected");
        }
        auto k = eval_int(val.at("k").get<std::string>(), inst.env);
        IVec b = instantiate_tuple(val.at("b"), inst.env);
        auto g = build_affine_cartan(c);
        if (b.size() != g.n()) return std::nullopt;
        auto tc = twisted_coxeter(c, tau);
        // the printed b must solve (cox - 1) b = k c before it is used
        QMat mm = tc.map_coroot - QMat::identity(g.n());
        QVec lhs = mm * QVec(b.begin(), b.end());
        for (std::size_t i = 0; i < g.n(); ++i)
            if (lhs[i] != Rational(k * g.dual_marks[i])) return std::nullopt;
        auto betas = beta_roots(g.entries, tc);
        auto f = fold(g.entries, tau.perm);
        auto fdm = folded_dual_marks(f);
        std::int64_t v = 0;
        for (std::size_t i = 0; i < g.n(); ++i)
            for (std::size_t j = 0; j < g.n(); ++j) v += b[i] * g.entries[i][j] * betas[0][j];
        return rational_json(Rational(v, fdm[f.orbits.orbit_of[tc.word[0]]]));
    }
    return std::nullopt;
}

json compute(int table, const AffineCase& c, const DiagramAut& tau, json& extra, int rank_bound) {
    switch (table) {
        case 1: {
            auto f = fold(build_affine_cartan(c).entries, tau.perm);
            extra["computed_nodes"] = static_cast<int>(f.folded.size());
            extra["t_values"] = f.t_values;
            return f.recognized.str();
        }
        case 2: {
            auto tc = twisted_coxeter(c, tau);
            extra["word"] = tc.word;
            return poly_json(charpoly_int(tc.map_coroot));
        }
        case 3: {
            auto g = build_affine_cartan(c);
            auto tc = twisted_coxeter(c, tau);
            auto sol = solve_b(g.dual_marks, tc.map_coroot);
            QVec lhs = (tc.map_coroot - QMat::identity(g.n())) * QVec(sol.b.begin(), sol.b.end());
            bool ok = true;
            for (std::size_t i = 0; i < g.n(); ++i) ok = ok && lhs[i] == Rational(sol.k * g.dual_marks[i]);
            extra["validated"] = ok;
            extra["word"] = tc.word;
            extra["k_literal"] = sol.k_literal;
            return {{"k", sol.k}, {"b", sol.b}};
        }
        case 4: {
            auto sd = section(c, tau);
            extra["beta_values"] = sd.beta_values;
            extra["folded_dual_marks"] = sd.folded_dual_marks;
            if (auto p3 = p_from_table3(c, tau, table_data(3), rank_bound)) extra["p_from_table3"] = *p3;
            return rational_json(sd.p);
        }
        case 5: {
            if (c.twist != 1) {
                auto tr = twisted_fundamental_level(c, tau);
                extra["parity_ok"] = tr.parity_ok;
                extra["pairing"] = rational_json(tr.pairing);
                return tr.k_f;
            }
            auto lr = fundamental_level(c, tau);
            extra["rho"] = perm_str(lr.rho.perm);
            extra["sigma"] = perm_str(lr.sigma.perm);
            extra["p_order"] = lr.p_order;
            extra["pairing_lb"] = rational_json(lr.pairing_lb);
            extra["pairing_ll"] = rational_json(lr.pairing_ll);
            extra["k_b"] = lr.k_b;
            return lr.k_f;
        }
        default:
            throw std::invalid_argument("bad table id " + std::to_string(table));
    }
}

std::vector<AffineCase> sweep_cases(int rank_bound) {
    std::vector<AffineCase> out;
    for (const auto& c : Catalog::instance().cases_up_to(rank_bound))
        if (c.rank >= kSweepMin || c.family >= 'E') out.push_back(c);
    return out;
}

}  // namespace

const json& table_data(int id) {
    static const std::map<int, json> tables = load_tables();
    auto it = tables.find(id);
    if (it == tables.end()) throw std::invalid_argument("bad table id " + std::to_string(id));
    return it->second;
}

std::map<std::string, int> TableReport::counts() const {
    std::map<std::string, int> m{{"match", 0}, {"deviation", 0}, {"paper-typo-suspected", 0}, {"unlisted", 0}};
    for (const auto& r : rows) ++m[r.status];
    return m;
}

bool TableReport::has_deviation() const {
    return std::any_of(rows.begin(), rows.end(), [](const TableRecord& r) { return r.status == "deviation"; });
}

TableReport build_table(int id, int rank_bound) {
    const json& t = table_data(id);
    TableReport rep;
    rep.table = id;
    rep.title = t.at("title").get<std::string>();
    rep.rank_bound = rank_bound;
    std::vector<std::pair<AffineCase, Perm>> covered;
    for (const auto& inst : expand_rows(t, rank_bound)) {
        TableRecord r;
        r.table = id;
        r.c = inst.c;
        r.auto_name = inst.auto_name;
        auto tau = resolve_auto(inst.c, inst.auto_name);
        covered.emplace_back(inst.c, tau.perm);
        const json& row = *inst.row;
        r.computed = compute(id, inst.c, tau, r.extra, rank_bound);
        r.paper = paper_value(id, row_value(id, row), row, inst.env);
        r.note = str_or(row, "note");
        if (id == 1) r.extra["paper_nodes"] = r.paper.is_string() ? nodes_of(r.paper.get<std::string>()) : -1;
        if (equal_values(id, r.computed, r.paper)) {
            r.status = "match";
        } else {
            r.status = "deviation";
            if (row.contains("annotation")) {
                const auto& a = row["annotation"];
                bool applies = !a.contains("when") || eval_int(a["when"].get<std::string>(), inst.env);
                if (applies) {
                    r.corrected = paper_value(id, a.at("corrected"), row, inst.env);
                    r.note = str_or(a, "note");
                    if (a.contains("cross_check")) {
                        const auto& cc = a["cross_check"];
                        auto oc = parse_case(instantiate_case(cc.at("case").get<std::string>(), inst.env));
                        auto ot = resolve_auto(oc, cc.at("auto").get<std::string>());
                        json ex;
                        json other = compute(id, oc, ot, ex, rank_bound);
                        r.extra["cross_check"] = {{"case", oc.str()}, {"auto", ot.name},
                                                  {"value", other}, {"equal", equal_values(id, r.computed, other)}};
                    }
                    if (equal_values(id, r.computed, r.corrected) && a.at("kind") == "paper-typo-suspected")
                        r.status = "paper-typo-suspected";
                }
            }
        }
        rep.rows.push_back(std::move(r));
    }
    for (const auto& c : sweep_cases(rank_bound)) {
        for (const auto& tau : conjugacy_representatives(c)) {
            bool hit = std::any_of(covered.begin(), covered.end(),
                                   [&](const auto& p) { return p.first == c && p.second == tau.perm; });
            if (hit) continue;
            TableRecord r;
            r.table = id;
            r.c = c;
            r.auto_name = tau.name;
            r.computed = compute(id, c, tau, r.extra, rank_bound);
            r.paper = "unlisted";
            r.status = "unlisted";
            rep.rows.push_back(std::move(r));
        }
    }
    std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const TableRecord& a, const TableRecord& b) {
        return std::tie(a.c.family, a.c.twist, a.c.rank, a.auto_name) <
               std::tie(b.c.family, b.c.twist, b.c.rank, b.auto_name);
    });
    return rep;
}

std::string value_str(int table, const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (table == 2 && v.is_object()) return v.at("factored").get<std::string>();
    if (table == 3 && v.is_object()) return "k=" + v.at("k").dump() + " b=" + to_string(v.at("b").get<IVec>());
    return v.dump();
}

std::vector<TableReport> build_tables(const std::vector<int>& ids, int rank_bound) {
    std::vector<std::future<TableReport>> jobs;
    for (int id : ids) {
        table_data(id);  // reject a bad id before any thread starts
        jobs.push_back(std::async(std::launch::async, [id, rank_bound] { return build_table(id, rank_bound); }));
    }
    std::vector<TableReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

json to_json(const TableRecord& r) {
    json j{{"table", r.table}, {"case", r.c.str()},   {"auto", r.auto_name}, {"computed", r.computed},
           {"paper", r.paper}, {"status", r.status}, {"extra", r.extra}};
    if (!r.corrected.is_null()) j["corrected"] = r.corrected;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const TableReport& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(to_json(r));
    return {{"schema", "kmfold/1"}, {"table", t.table}, {"title", t.title}, {"rank_bound", t.rank_bound},
            {"rows", rows}, {"summary", t.counts()}};
}

std::string render(const std::vector<TableReport>& tables, const std::string& format) {
    std::ostringstream out;
    if (format == "json") {
        json all = json::array();
        for (const auto& t : tables) all.push_back(to_json(t));
        json doc{{"schema", "kmfold/1"}, {"tables", all}};
        out << doc.dump(2) << "\n";
    } else if (format == "md") {
        for (const auto& t : tables) {
            out << "## Table " << t.table << ": " << t.title << "\n\n";
            out << "| case | auto | computed | paper | status |\n|---|---|---|---|---|\n";
            for (const auto& r : t.rows) {
                std::string paper = value_str(t.table, r.paper);
                if (!r.corrected.is_null()) paper += " (corrected: " + value_str(t.table, r.corrected) + ")";
                out << "| " << r.c.str() << " | " << r.auto_name << " | " << value_str(t.table, r.computed) << " | "
                    << paper << " | " << r.status << " |\n";
            }
            auto cs = t.counts();
            out << "\n";
            for (const auto& [k, v] : cs) out << "- " << k << ": " << v << "\n";
            out << "\n";
        }
    } else if (format == "tsv") {
        out << "table\tcase\tauto\tcomputed\tpaper\tcorrected\tstatus\n";
        for (const auto& t : tables)
            for (const auto& r : t.rows)
                out << t.table << "\t" << r.c.str() << "\t" << r.auto_name << "\t" << value_str(t.table, r.computed)
                    << "\t" << value_str(t.table, r.paper) << "\t" << value_str(t.table, r.corrected) << "\t"
                    << r.status << "\n";
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
    return out.str();
}

json deviation_notes() {
    json out = json::array();
    for (int id = 1; id <= 5; ++id) {
        for (const auto& row : table_data(id).at("rows")) {
            std::string where = row.at("family").get<std::string>() + std::to_string(row.at("twist").get<int>());
            if (row.contains("when")) where += " when " + row["when"].get<std::string>();
            if (row.contains("ranks")) where += " ranks " + row["ranks"].dump();
            if (row.contains("annotation")) {
                const auto& a = row["annotation"];
                out.push_back({{"source", "table" + std::to_string(id)}, {"rows", where},
                               {"auto", row.at("auto")}, {"kind", a.at("kind")}, {"note", str_or(a, "note")}});
            } else if (row.contains("note")) {
                out.push_back({{"source", "table" + std::to_string(id)}, {"rows", where},
                               {"auto", row.at("auto")}, {"kind", "reading"}, {"note", row["note"]}});
            }
        }
    }
    for (const auto& f : Catalog::instance().families())
        for (const auto& n : f.notes)
            out.push_back({{"source", "catalog"}, {"rows", std::string(1, f.family) + std::to_string(f.twist)},
                           {"kind", "catalog"}, {"note", n}});
    return out;
}

}  // namespace kmfold
