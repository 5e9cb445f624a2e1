#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "specmono/certificates.hpp"
#include "specmono/embeddings.hpp"
#include "specmono/graphs.hpp"
#include "specmono/numerics.hpp"
#include "specmono/orders.hpp"
#include "specmono/recovery.hpp"

namespace py = pybind11;
using namespace specmono;

namespace {

SymMatrix sym_from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw precondition_error("matrix rows must form a square matrix");
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > 1e-12)
        throw precondition_error("matrix is not symmetric");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

std::vector<std::vector<double>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

py::dict margin_report_dict(const MarginReport& r) {
  py::dict d;
  d["a"] = r.a ? py::cast(*r.a) : py::none();
  d["b"] = r.b ? py::cast(*r.b) : py::none();
  d["feasible"] = r.feasible;
  d["margin"] = r.margin ? py::cast(*r.margin) : py::none();
  d["gap"] = r.gap ? py::cast(*r.gap) : py::none();
  return d;
}

py::dict certificate_dict(const DualCertificate& c) {
  py::dict d;
  d["kind"] = c.kind == CertificateKind::margin ? "margin" : "sphericity";
  d["n"] = c.n;
  d["d"] = c.degree;
  d["lambda2"] = c.lambda2;
  d["alpha"] = c.alpha;
  if (c.beta) d["beta"] = *c.beta;
  d["objective"] = c.objective;
  py::dict res;
  res["psd"] = c.residuals.min_eigenvalue;
  res["rowsum"] = c.residuals.max_row_sum;
  res["sign"] = c.residuals.worst_sign_violation;
  d["residuals"] = res;
  d["feasible"] = c.feasible;
  return d;
}

py::int_ big_to_python(const BigInt& v) { return py::cast<py::int_>(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_specmono, m) {
  m.doc() = "monotone metric embeddings, graph sphericity certificates and "
            "spectral bipartite recovery";

  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  py::class_<PairOrder>(m, "PairOrder")
      .def(py::init([](std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
             return PairOrder::from_ranked_pairs(n, pairs);
           }),
           py::arg("n"), py::arg("pairs_in_rank_order"))
      .def_static("lexicographic", &PairOrder::lexicographic, py::arg("n"))
      .def_property_readonly("n", &PairOrder::n)
      .def_property_readonly("num_pairs", &PairOrder::num_pairs)
      .def("rank", &PairOrder::rank, py::arg("i"), py::arg("j"))
      .def("pair_at_rank", &PairOrder::pair_at_rank, py::arg("r"))
      .def("__eq__", [](const PairOrder& a, const PairOrder& b) { return a == b; })
      .def("__repr__", [](const PairOrder& o) {
        return "PairOrder(n=" + std::to_string(o.n()) + ")";
      });

  py::class_<FiniteMetric>(m, "FiniteMetric")
      .def(py::init([](const std::vector<std::vector<double>>& rows) {
             return FiniteMetric(sym_from_rows(rows));
           }),
           py::arg("distance_matrix"))
      .def_property_readonly("n", &FiniteMetric::n)
      .def("distance", [](const FiniteMetric& f, std::size_t i, std::size_t j) { return f(i, j); })
      .def("triangle_ok", &FiniteMetric::triangle_ok);

  py::class_<Embedding>(m, "Embedding")
      .def_readonly("n", &Embedding::n)
      .def_readonly("d", &Embedding::d)
      .def_property_readonly("coords", [](const Embedding& e) { return matrix_rows(e.coords); })
      .def("squared_distance", &squared_distance, py::arg("i"), py::arg("j"));

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, std::vector<Graph::Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("is_regular", &Graph::is_regular)
      .def("is_connected", &Graph::is_connected)
      .def("diameter", [](const Graph& g) -> py::object {
        const auto d = g.diameter();
        return d ? py::cast(*d) : py::none();
      })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("complete_bipartite", &complete_bipartite, py::arg("a"), py::arg("b"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("hamming_halfcube", &hamming_halfcube, py::arg("k"));
  m.def("bipartite_minus_matching", &bipartite_minus_matching, py::arg("m"));
  m.def("double_graph", &double_graph, py::arg("g"));

  m.def("eig_sym", [](const std::vector<std::vector<double>>& rows) {
    const auto ed = eig_sym(sym_from_rows(rows));
    return py::make_tuple(ed.eigenvalues, matrix_rows(ed.eigenvectors));
  }, py::arg("matrix"), "eigenvalues (descending) and eigenvector columns");
  m.def("psd_check", [](const std::vector<std::vector<double>>& rows, double tol) {
    const auto r = psd_check(sym_from_rows(rows), tol);
    return py::make_tuple(r.psd, r.min_eigenvalue);
  }, py::arg("matrix"), py::arg("tol") = kPsdTol);
  m.def("gram_factor", [](const std::vector<std::vector<double>>& rows, double tol) {
    return gram_factor(sym_from_rows(rows), tol);
  }, py::arg("gram"), py::arg("tol") = kPsdTol);
  m.def("breve_transform", [](const std::vector<std::vector<double>>& rows) {
    return matrix_rows(breve_transform(sym_from_rows(rows)).full());
  }, py::arg("matrix"));
  m.def("rank_lower_bound", [](const std::vector<std::vector<double>>& rows) {
    return rank_lower_bound(sym_from_rows(rows));
  }, py::arg("matrix"));

  m.def("epsilon_metric", &epsilon_metric, py::arg("order"), py::arg("eps_max"));
  m.def("consistent", &consistent, py::arg("metric"), py::arg("order"));
  m.def("order_from_metric", &order_from_metric, py::arg("metric"));

  m.def("monotone_embed_l2", &monotone_embed_l2, py::arg("order"));
  m.def("verify_monotone", [](const Embedding& e, const PairOrder& order, const std::string& norm) {
    const auto c = verify_monotone(e, order, norm == "max" ? Norm::max : Norm::euclidean);
    py::dict d;
    d["ok"] = c.ok;
    d["violation"] = c.violation ? py::cast(*c.violation) : py::none();
    return d;
  }, py::arg("embedding"), py::arg("order"), py::arg("norm") = "euclidean");
  m.def("verify_spherical", [](const Embedding& e, const Graph& g) {
    return margin_report_dict(verify_spherical(e, g));
  }, py::arg("embedding"), py::arg("graph"));

  m.def("linf_hard_instance", &linf_hard_instance, py::arg("n"));
  m.def("norm_hard_instance", &norm_hard_instance, py::arg("n"), py::arg("base") = 5,
        py::arg("cap") = 3126);

  m.def("milnor_thom_bound", [](std::size_t m_, std::size_t k, std::size_t d, std::size_t l) {
    return big_to_python(milnor_thom_bound(m_, k, d, l));
  }, py::arg("m"), py::arg("k"), py::arg("d"), py::arg("l"));

  m.def("count_realized_orders_mc", [](std::size_t n, std::size_t d, std::size_t trials,
                                       std::uint64_t seed) {
    const auto r = count_realized_orders_mc(n, d, trials, seed);
    py::dict out;
    out["distinct"] = r.distinct;
    out["rejected"] = r.rejected;
    return out;
  }, py::arg("n"), py::arg("d"), py::arg("trials"), py::arg("seed") = 0);

  m.def("krawtchouk", &krawtchouk, py::arg("k"), py::arg("s"), py::arg("i"));
  m.def("hamming_spectrum_analytic", &hamming_spectrum_analytic, py::arg("k"));
  m.def("spectral_summary", [](const Graph& g) {
    const auto s = spectral_summary(g);
    py::dict d;
    d["eigenvalues"] = s.eigenvalues;
    d["degree_min"] = s.degree_min;
    d["degree_max"] = s.degree_max;
    d["is_regular"] = s.is_regular;
    d["regular_degree"] = s.regular_degree ? py::cast(*s.regular_degree) : py::none();
    d["delta"] = s.delta ? py::cast(*s.delta) : py::none();
    d["diameter"] = s.diameter ? py::cast(*s.diameter) : py::none();
    return d;
  }, py::arg("graph"));
  m.def("mixing_bound_check", [](const Graph& g, const std::vector<std::uint32_t>& subset) {
    const auto c = mixing_bound_check(g, subset);
    py::dict d;
    d["k"] = c.subset_size;
    d["internal_edges"] = c.internal_edges;
    d["bound"] = c.bound;
    d["lambda2"] = c.lambda2;
    d["ok"] = c.ok;
    return d;
  }, py::arg("graph"), py::arg("subset"));
  m.def("edge_edit_distance", &edge_edit_distance, py::arg("g"), py::arg("h"));

  m.def("margin_certificate", [](const Graph& g) {
    const auto c = margin_certificate(g);
    auto d = certificate_dict(c);
    const auto b = margin_bound_value(c);
    d["ratio"] = b.ratio;
    d["closed_form"] = b.closed_form;
    return d;
  }, py::arg("graph"));
  m.def("sphericity_certificate", [](const Graph& g) {
    return certificate_dict(sphericity_certificate(g));
  }, py::arg("graph"));
  m.def("sphericity_lower_bound", [](const Graph& g) {
    const auto b = sphericity_lower_bound(g);
    auto d = certificate_dict(b.certificate);
    d["bound"] = b.bound;
    d["diameter"] = b.diameter;
    return d;
  }, py::arg("graph"));

  m.def("spectral_bipartite_recovery", [](const Graph& g) {
    const auto r = spectral_bipartite_recovery(g);
    py::dict d;
    d["n"] = r.n;
    d["sideA"] = r.side_a;
    d["sideB"] = r.side_b;
    d["leftover"] = r.leftover;
    d["total_edits"] = r.total_edits;
    d["per_vertex_edits"] = r.per_vertex_edits;
    d["closeness_ratio"] = closeness_ratio(g, r);
    d["lambda2"] = r.lambda2;
    d["lambda_n"] = r.lambda_n;
    d["lambda_n_minus_1"] = r.lambda_n_minus_1;
    d["lambda_n_gap"] = r.lambda_n_gap;
    d["hoffman_value"] = r.hoffman_value;
    d["eigen_multiplicity"] = r.eigen_multiplicity;
    return d;
  }, py::arg("graph"));
  m.def("brute_force_min_edits", [](const Graph& g) {
    const auto r = brute_force_min_edits(g);
    return py::make_tuple(r.min_edits, py::make_tuple(r.side_a, r.side_b));
  }, py::arg("graph"));
  m.def("hoffman_diagnostic", [](const Graph& g) {
    const auto h = hoffman_diagnostic(g);
    py::dict d;
    d["is_bipartite"] = h.is_bipartite;
    d["hoffman_value"] = h.hoffman_value;
    d["lambda_n_minus_1"] = h.lambda_n_minus_1;
    return d;
  }, py::arg("graph"));

#ifdef VERSION_INFO
#define SPECMONO_STR_IMPL(x) #x
#define SPECMONO_STR(x) SPECMONO_STR_IMPL(x)
  m.attr("__version__") = SPECMONO_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
