#pragma once

// JSON state files:
//   {"dims": [d1, d2, ...], "matrix": [[re, im], ...]}   (row-major, dim^2 pairs)
// Unitary files for custom bases use the same layout; "dims" is optional
// there and an optional "label" names the basis.

#include <filesystem>
#include <string>
#include <string_view>

#include "cohlab/states.hpp"

namespace cohlab {

// Throws ParseError naming the offending field, or the DensityMatrix
// validation errors for well-formed but non-physical matrices.
DensityMatrix parse_state(std::string_view json_text);
DensityMatrix read_state(const std::filesystem::path& path);

// Every number is written with 17 significant digits.
std::string format_state(const DensityMatrix& rho);
void write_state(const std::filesystem::path& path, const DensityMatrix& rho);

Basis parse_unitary(std::string_view json_text);
Basis read_unitary(const std::filesystem::path& path);
std::string format_unitary(const Basis& basis);

}  // namespace cohlab
