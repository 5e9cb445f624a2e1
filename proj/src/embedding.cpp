#include "specmono/embedding.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "specmono/common.hpp"

namespace specmono {

double squared_distance(const Embedding& e, std::size_t i, std::size_t j) {
  double s = 0.0;
  for (std::size_t k = 0; k < e.d; ++k) {
    const double diff = e.coords(i, k) - e.coords(j, k);
    s += diff * diff;
  }
  return s;
}

double max_norm_distance(const Embedding& e, std::size_t i, std::size_t j) {
  double m = 0.0;
  for (std::size_t k = 0; k < e.d; ++k)
    m = std::max(m, std::fabs(e.coords(i, k) - e.coords(j, k)));
  return m;
}

void write_embedding_csv(std::ostream& out, const Embedding& e) {
  out << e.n << ',' << e.d << '\n';
  char buf[64];
  for (std::size_t i = 0; i < e.n; ++i) {
    for (std::size_t k = 0; k < e.d; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", e.coords(i, k));
      if (k) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

Embedding read_embedding_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("empty embedding file", 1);

  Embedding e;
  {
    std::istringstream hdr(line);
    char comma = 0;
    if (!(hdr >> e.n >> comma >> e.d) || comma != ',' || e.d == 0)
      throw parse_error("expected header \"n,d\"", 1);
  }
  e.coords = Matrix(e.n, e.d);
  for (std::size_t i = 0; i < e.n; ++i) {
    const std::size_t line_no = i + 2;
    if (!std::getline(in, line))
      throw parse_error("expected " + std::to_string(e.n) + " coordinate rows", line_no);
    std::istringstream row(line);
    for (std::size_t k = 0; k < e.d; ++k) {
      if (k) {
        char comma = 0;
        if (!(row >> comma) || comma != ',') throw parse_error("expected ',' separator", line_no);
      }
      if (!(row >> e.coords(i, k))) throw parse_error("bad coordinate value", line_no);
    }
    char extra = 0;
    if (row >> extra) throw parse_error("trailing data after " + std::to_string(e.d) + " columns", line_no);
    if (!std::isfinite(e.coords(i, 0))) throw parse_error("non-finite coordinate", line_no);
  }
  if (!e.coords.is_finite()) throw parse_error("non-finite coordinate");
  return e;
}

}  // namespace specmono
