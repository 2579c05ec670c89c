#pragma once

#include "qmc/swap.hpp"

#include <string>
#include <vector>

namespace qmc {

// Division by leading terms, always reducing the grlex-largest reducible
// monomial first.
SwapPolynomial gb_reduce(const SwapPolynomial& p, const std::vector<SwapPolynomial>& gb);

// One polynomial per non-comment line. n = 0 infers the ambient size from the
// largest index in the file.
std::vector<SwapPolynomial> parse_gb(const std::string& text, int n = 0);

// Looks for `name` as a path first, then under the data directory
// ($QMC_DATA_DIR or the build-time default).
std::vector<SwapPolynomial> load_gb(const std::string& name, int n = 0);
std::string data_path(const std::string& name);
std::string load_data_text(const std::string& name);

}  // namespace qmc
