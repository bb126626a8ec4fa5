#pragma once

#include <string>
#include <vector>

#include "gsobolev/test_function.hpp"

namespace gsob {

/// Built-in test functions: abs, abs3, abs5, poly2, sin, gauss_bump. Each
/// carries exact derivative evaluators up to its declared order and its kink
/// set. Unknown ids throw std::invalid_argument.
TestFunction corpus_lookup(const std::string& id);

std::vector<std::string> corpus_ids();

}  // namespace gsob
