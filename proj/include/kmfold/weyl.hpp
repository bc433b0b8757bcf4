#pragma once

#include <string>
#include <vector>

#include "kmfold/autgroup.hpp"
#include "kmfold/poly.hpp"

namespace kmfold {

// Columns are images of basis vectors. Coroot side: basis of coroots on h';
// root side: basis of simple roots.
struct ReflectionPair {
    QMat coroot;
    QMat root;
};

ReflectionPair reflection(const IMat& m, int i);
QMat perm_matrix(const Perm& p);  // e_j -> e_{p(j)}

struct TwistedCoxeter {
    std::vector<int> word;
    std::string rule;  // which selection rule produced the word
    std::string note;  // data-file note for explicit words
    DiagramAut tau;
    QMat map_coroot;
    QMat map_root;
};

// Word selection rules from the catalog, then s_{w1}...s_{wm} tau.
std::vector<int> coxeter_word(const AffineCase& c, const DiagramAut& tau, std::string* rule = nullptr,
                              std::string* note = nullptr);
TwistedCoxeter twisted_coxeter(const AffineCase& c, const DiagramAut& tau);
TwistedCoxeter twisted_coxeter_word(const IMat& m, const DiagramAut& tau, const std::vector<int>& word);

Poly charpoly_int(const QMat& l);

// Basis of ker(L - I).
std::vector<QVec> fixed_space(const QMat& l);

// Checks Fix(s_{i1}...s_{ip} tau) = Fix(tau) cap ker(alpha_{i1}) cap ... on h'.
// Throws if the indices do not lie in pairwise distinct orbits.
bool distinct_orbit_fixpoint_check(const IMat& m, const Perm& tau, const std::vector<int>& idx);

}  // namespace kmfold
