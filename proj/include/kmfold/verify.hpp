#pragma once

#include <string>
#include <vector>

#include "kmfold/tables.hpp"

namespace kmfold {

struct Check {
    std::string module;
    std::string name;
    bool passed = true;
    std::int64_t checked = 0;  // number of instances examined
    std::string detail;        // first failure, or a short summary
    double seconds = 0;
};

const std::vector<std::string>& verify_scopes();  // module names, plus "all"

// Runs the property suites of one module (or all) over catalog cases up to
// the rank bound, exceptionals included.
std::vector<Check> run_verify(const std::string& scope, int rank_bound = kDefaultRankBound);

json to_json(const std::vector<Check>& checks);

}  // namespace kmfold
