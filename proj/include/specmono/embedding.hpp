#pragma once

#include <cstddef>
#include <iosfwd>

#include "specmono/matrix.hpp"

namespace specmono {

/// n points in R^d, one per row of coords.
struct Embedding {
  std::size_t n = 0;
  std::size_t d = 0;
  Matrix coords;
};

double squared_distance(const Embedding& e, std::size_t i, std::size_t j);
double max_norm_distance(const Embedding& e, std::size_t i, std::size_t j);

/// CSV format: header "n,d", then n rows of d comma-separated decimals
/// printed with 17 significant digits.
void write_embedding_csv(std::ostream& out, const Embedding& e);
Embedding read_embedding_csv(std::istream& in);

}  // namespace specmono
