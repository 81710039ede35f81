#pragma once

#include <map>
#include <string>
#include <vector>

namespace mil {

// Problem files compiled into the library (generated from data/*.json).
const std::map<std::string, const char*>& bundled_problem_files();

}  // namespace mil
