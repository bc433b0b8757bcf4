#pragma once

#include <string>
#include <vector>

#include "kmfold/tables.hpp"

namespace kmfold {

const std::vector<std::string>& case_whats();  // fold, charpoly, section, level, dset, sparsity

// One JSON record for a single (case, automorphism, operation).
json case_record(const std::string& descriptor, const std::string& auto_name, const std::string& what);

// Integers stay numbers; other rationals become "p/q" strings.
json rational_json(const Rational& q);

}  // namespace kmfold
