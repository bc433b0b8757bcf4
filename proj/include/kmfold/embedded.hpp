#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kmfold::embedded {

// Data files compiled into the library: (file name, contents).
const std::vector<std::pair<std::string, std::string_view>>& catalog_files();
const std::vector<std::pair<std::string, std::string_view>>& table_files();

}  // namespace kmfold::embedded
