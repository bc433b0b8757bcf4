#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmfold/matrix.hpp"

namespace kmfold {

struct CaseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AffineCase {
    char family = 'A';  // A..G
    int twist = 1;      // 1, 2, 3
    int rank = 1;       // the subscript

    std::string str() const;  // "A1[5]"
    std::string display() const;  // "A^1_5"
    auto operator<=>(const AffineCase&) const = default;
};

// Parses "<family><twist>[<rank>]", family letter case-insensitive.
AffineCase parse_case(const std::string& s);

struct GCM {
    IMat entries;
    IVec marks;       // right null vector a
    IVec dual_marks;  // left null vector of dual marks
    std::size_t n() const { return entries.size(); }
};

struct FiniteData {
    IMat cartan;         // nodes 1..r of the affine diagram, reindexed from 0
    QVec symmetrizer;    // d_i with d_i C_ij symmetric, max d_i = 1
};

// One data-file word rule for twisted Coxeter elements.
struct WordRule {
    std::string auto_name;  // empty: family default
    std::string when;       // condition on n, empty: always
    std::string rule;       // "min", "one_to_n", "d_rule", "explicit"
    std::vector<std::string> word;  // index expressions for "explicit"
    std::string note;
};

struct RepSpec {
    std::string name;        // e.g. "gamma", "gamma^l", "sigma*gamma"
    std::string when;
    std::string divisors_of; // when set, l ranges over divisors of this, l < value
};

struct FamilyTemplate {
    char family = 'A';
    int twist = 1;
    std::string rank_ok;   // condition on n
    int rank_min = 1;
    int rank_max = 0;      // 0 = unbounded
    std::string nodes;     // node count expression
    struct Entry {
        std::string when, loop_var, lo, hi, i, j, v, vt;
    };
    std::vector<Entry> entries;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> generators;  // name -> (when, image expr / list)
    std::string group_order;
    std::vector<std::pair<std::string, std::vector<std::string>>> special;  // (when, generator words)
    bool has_special = false;
    std::vector<RepSpec> reps;
    std::string word_default = "min";
    std::vector<WordRule> word_rules;
    std::vector<std::string> notes;
};

class Catalog {
public:
    // Embedded data, or the directory named by KMFOLD_CATALOG_DIR.
    static const Catalog& instance();
    static Catalog from_directory(const std::string& dir);
    static Catalog from_json_texts(const std::vector<std::string>& texts);

    bool contains(const AffineCase& c) const;
    const FamilyTemplate& family(const AffineCase& c) const;
    const std::vector<FamilyTemplate>& families() const { return fams_; }
    std::map<std::string, std::string> aliases() const { return aliases_; }

    // All catalog cases with rank <= bound (exceptional ones always).
    std::vector<AffineCase> cases_up_to(int rank_bound) const;

private:
    std::vector<FamilyTemplate> fams_;
    std::map<std::string, std::string> aliases_;
};

// Node count of a catalog case.
int node_count(const AffineCase& c);

GCM build_affine_cartan(const AffineCase& c);

struct Recognition {
    enum Kind { Case, Zero, NotAffine } kind = NotAffine;
    AffineCase value;
    std::vector<int> relabel;  // candidate node i corresponds to catalog node relabel[i]
    std::string str() const;
};

Recognition recognize(const IMat& m);

FiniteData finite_data(const AffineCase& c);

// Generic null vector helpers for affine matrices.
std::optional<IVec> right_null_primitive(const IMat& m);
std::optional<IVec> left_null_primitive(const IMat& m);

bool is_gcm(const IMat& m);

// Normalizes a descriptor through the catalog alias table (e.g. C1[1] -> A1[1]).
std::string canonical_descriptor(const std::string& s);

}  // namespace kmfold
