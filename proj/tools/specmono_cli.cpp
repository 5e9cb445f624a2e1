// Command-line front end: graph/order generation, spectra, monotone
// embeddings, dual certificates, bipartite recovery, order sampling.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 violated mathematical
// hypothesis or precondition, 64 command-line usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "specmono/certificates.hpp"
#include "specmono/embeddings.hpp"
#include "specmono/graphs.hpp"
#include "specmono/json_writer.hpp"
#include "specmono/numerics.hpp"
#include "specmono/orders.hpp"
#include "specmono/recovery.hpp"

namespace {

using namespace specmono;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw io_error("cannot open output file: " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
  if (!out) throw io_error("failed writing output file: " + out_path);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open input file: " + path);
  return in;
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_edge_list(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

PairOrder load_order(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_order_file(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

Embedding load_embedding(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_embedding_csv(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

std::string error_json(const std::string& type, const std::string& message) {
  JsonWriter w;
  w.begin_object();
  w.key("error").begin_object();
  w.key("type").value(type);
  w.key("message").value(message);
  w.end_object();
  w.end_object();
  return w.str();
}

// ---- gen ----

struct GenArgs {
  std::string kind;
  std::string out;
  std::string input;  // for kind=double
  std::size_t a = 0, b = 0, n = 0, m = 0;
  unsigned k = 0;
  std::size_t base = 5;
  std::size_t cap = 3126;
};

int run_gen(const GenArgs& args) {
  std::ostringstream body;
  if (args.kind == "complete_bipartite") {
    write_edge_list(body, complete_bipartite(args.a, args.b));
  } else if (args.kind == "cycle") {
    write_edge_list(body, cycle_graph(args.n));
  } else if (args.kind == "hamming_halfcube" || args.kind == "hamming") {
    write_edge_list(body, hamming_halfcube(args.k));
  } else if (args.kind == "bipartite_minus_matching") {
    write_edge_list(body, bipartite_minus_matching(args.m));
  } else if (args.kind == "double") {
    if (args.input.empty()) throw precondition_error("gen --kind double needs an input graph file");
    write_edge_list(body, double_graph(load_graph(args.input)));
  } else if (args.kind == "linf_hard") {
    write_order_file(body, linf_hard_instance(args.n));
  } else if (args.kind == "norm_hard") {
    write_order_file(body, norm_hard_instance(args.n, args.base, args.cap));
  } else {
    throw precondition_error("unknown --kind \"" + args.kind + "\"");
  }
  emit(body.str(), args.out);
  return 0;
}

// ---- spectrum ----

int run_spectrum(const std::string& path, const std::string& out) {
  const Graph g = load_graph(path);
  const SpectralSummary s = spectral_summary(g);
  JsonWriter w;
  w.begin_object();
  w.key("n").value(g.n());
  w.key("num_edges").value(g.num_edges());
  w.key("degree_min").value(s.degree_min);
  w.key("degree_max").value(s.degree_max);
  w.key("is_regular").value(s.is_regular);
  w.key("regular_degree");
  if (s.regular_degree) w.value(*s.regular_degree); else w.null();
  w.key("delta");
  if (s.delta) w.value(*s.delta); else w.null();
  w.key("diameter");
  if (s.diameter) w.value(*s.diameter); else w.null();
  w.key("eigenvalues").begin_array();
  for (double l : s.eigenvalues) w.value(l);
  w.end_array();
  w.end_object();
  emit(w.str(), out);
  return 0;
}

// ---- embed-order / verify-embedding ----

int run_embed_order(const std::string& path, const std::string& out) {
  const PairOrder order = load_order(path);
  std::ostringstream body;
  write_embedding_csv(body, monotone_embed_l2(order));
  emit(body.str(), out);
  return 0;
}

int run_verify_embedding(const std::string& emb_path, const std::string& order_path,
                         const std::string& graph_path, const std::string& norm_name,
                         const std::string& out) {
  const Embedding e = load_embedding(emb_path);
  JsonWriter w;
  if (!order_path.empty()) {
    const PairOrder order = load_order(order_path);
    const Norm norm = norm_name == "max" ? Norm::max : Norm::euclidean;
    const MonotoneCheck check = verify_monotone(e, order, norm);
    w.begin_object();
    w.key("ok").value(check.ok);
    w.key("norm").value(norm == Norm::max ? "max" : "euclidean");
    w.key("violation");
    if (check.violation) {
      const auto& [first, second] = *check.violation;
      w.begin_object();
      w.key("first").begin_array().value(first[0]).value(first[1]).end_array();
      w.key("second").begin_array().value(second[0]).value(second[1]).end_array();
      w.end_object();
    } else {
      w.null();
    }
    w.end_object();
  } else {
    const Graph g = load_graph(graph_path);
    const MarginReport r = verify_spherical(e, g);
    w.begin_object();
    w.key("feasible").value(r.feasible);
    w.key("a");
    if (r.a) w.value(*r.a); else w.null();
    w.key("b");
    if (r.b) w.value(*r.b); else w.null();
    w.key("margin");
    if (r.margin) w.value(*r.margin); else w.null();
    w.key("gap");
    if (r.gap) w.value(*r.gap); else w.null();
    w.end_object();
  }
  emit(w.str(), out);
  return 0;
}

// ---- certificates ----

FeasibilityTolerances tolerances(double tol) {
  FeasibilityTolerances t;
  if (tol > 0.0) t.psd = tol;
  return t;
}

int run_margin_bound(const std::string& path, double tol, const std::string& out) {
  const Graph g = load_graph(path);
  const DualCertificate c = margin_certificate(g, tolerances(tol));
  emit(certificate_report_json(c, margin_bound_value(c)), out);
  return 0;
}

int run_certify_sphericity(const std::string& path, double tol, const std::string& out) {
  const Graph g = load_graph(path);
  emit(certificate_report_json(sphericity_lower_bound(g, tolerances(tol))), out);
  return 0;
}

// ---- recover ----

int run_recover(const std::string& path, const std::string& out) {
  const Graph g = load_graph(path);
  emit(recovery_report_json(g, spectral_bipartite_recovery(g)), out);
  return 0;
}

// ---- mt-bound ----

int run_mt_bound(std::size_t m, std::size_t k, std::size_t d, std::size_t l,
                 const std::string& out) {
  const BigInt value = milnor_thom_bound(m, k, d, l);
  JsonWriter w;
  w.begin_object();
  w.key("m").value(m);
  w.key("k").value(k);
  w.key("d").value(d);
  w.key("l").value(l);
  w.key("exponent").value(l - 1 + (m + k - 1) / k);
  w.key("value").raw_number(value.str());
  w.end_object();
  emit(w.str(), out);
  return 0;
}

// ---- sample-orders ----

int run_sample_orders(std::size_t n, std::size_t d, std::size_t trials, std::uint64_t seed,
                      const std::string& out) {
  const OrderSampleResult res = count_realized_orders_mc(n, d, trials, seed);
  JsonWriter w;
  w.begin_object();
  w.key("n").value(n);
  w.key("d").value(d);
  w.key("trials").value(trials);
  w.key("seed").value(static_cast<std::uint64_t>(seed));
  w.key("accepted").value(trials - res.rejected);
  w.key("rejected").value(res.rejected);
  w.key("distinct_orders").value(res.distinct);
  w.key("milnor_thom_bound").raw_number(realized_orders_ceiling(n, d).str());
  w.end_object();
  emit(w.str(), out);
  return 0;
}

// ---- mix-check ----

int run_mix_check(const std::string& path, const std::string& subset_csv, const std::string& out) {
  const Graph g = load_graph(path);
  JsonWriter w;
  if (!subset_csv.empty()) {
    std::vector<std::uint32_t> subset;
    std::istringstream ss(subset_csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        subset.push_back(static_cast<std::uint32_t>(std::stoul(token)));
      } catch (const std::exception&) {
        throw precondition_error("bad --subset entry \"" + token + "\"");
      }
    }
    const MixingCheck c = mixing_bound_check(g, subset);
    w.begin_object();
    w.key("n").value(g.n());
    w.key("lambda2").value(c.lambda2);
    w.key("k").value(c.subset_size);
    w.key("e_u").value(c.internal_edges);
    w.key("bound").value(c.bound);
    w.key("ok").value(c.ok);
    w.end_object();
  } else {
    const MixingScan s = mixing_scan(g);
    w.begin_object();
    w.key("n").value(g.n());
    w.key("lambda2").value(s.lambda2);
    w.key("subsets_checked").value(s.subsets_checked);
    w.key("violations").value(s.violations);
    w.key("worst_slack").value(s.worst_slack);
    w.key("ok").value(s.ok);
    w.end_object();
  }
  emit(w.str(), out);
  return 0;
}

// ---- edit-distance ----

int run_edit_distance(const std::string& path_g, const std::string& path_h, const std::string& out) {
  const Graph g = load_graph(path_g);
  const Graph h = load_graph(path_h);
  JsonWriter w;
  w.begin_object();
  w.key("n").value(g.n());
  w.key("edits").value(edge_edit_distance(g, h));
  w.end_object();
  emit(w.str(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monotone embeddings, sphericity certificates and spectral bipartite recovery"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "generate a graph edge list or a pair order");
  cmd_gen->add_option("--kind", gen.kind,
                      "complete_bipartite | cycle | hamming_halfcube | "
                      "bipartite_minus_matching | double | linf_hard | norm_hard")
      ->required();
  cmd_gen->add_option("--a", gen.a, "left side size (complete_bipartite)");
  cmd_gen->add_option("--b", gen.b, "right side size (complete_bipartite)");
  cmd_gen->add_option("--n", gen.n, "cycle length / hard-instance parameter");
  cmd_gen->add_option("--m", gen.m, "side size (bipartite_minus_matching)");
  cmd_gen->add_option("--k", gen.k, "bit-string length (hamming_halfcube)");
  cmd_gen->add_option("--base", gen.base, "packing base (norm_hard, default 5)");
  cmd_gen->add_option("--cap", gen.cap, "point-count cap (norm_hard, default 3126)");
  cmd_gen->add_option("input", gen.input, "input edge list (kind=double)");
  cmd_gen->add_option("--out", gen.out, "output path (default stdout)");

  std::string spectrum_in, spectrum_out;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "eigenvalues, regularity and diameter");
  cmd_spectrum->add_option("graph", spectrum_in, "edge-list file")->required();
  cmd_spectrum->add_option("--out", spectrum_out, "output path (default stdout)");

  std::string embed_in, embed_out;
  auto* cmd_embed = app.add_subcommand("embed-order", "monotone unit-sphere embedding of an order");
  cmd_embed->add_option("order", embed_in, "order file")->required();
  cmd_embed->add_option("--out", embed_out, "output path (default stdout)");

  std::string verify_emb, verify_order, verify_graph, verify_norm = "euclidean", verify_out;
  auto* cmd_verify = app.add_subcommand("verify-embedding",
                                        "check an embedding against an order or a graph");
  cmd_verify->add_option("embedding", verify_emb, "embedding CSV")->required();
  auto* opt_order = cmd_verify->add_option("--order", verify_order, "order file (monotone check)");
  auto* opt_graph = cmd_verify->add_option("--graph", verify_graph, "edge list (spherical check)");
  opt_order->excludes(opt_graph);
  cmd_verify->add_option("--norm", verify_norm, "euclidean | max (monotone check only)")
      ->check(CLI::IsMember({"euclidean", "max"}));
  cmd_verify->add_option("--out", verify_out, "output path (default stdout)");

  std::string margin_in, margin_out;
  double margin_tol = 0.0;
  auto* cmd_margin = app.add_subcommand("margin-bound", "margin upper-bound dual certificate");
  cmd_margin->add_option("graph", margin_in, "edge-list file")->required();
  cmd_margin->add_option("--tol", margin_tol, "PSD tolerance override");
  cmd_margin->add_option("--out", margin_out, "output path (default stdout)");

  std::string sph_in, sph_out;
  double sph_tol = 0.0;
  auto* cmd_sph = app.add_subcommand("certify-sphericity", "sphericity lower-bound certificate");
  cmd_sph->add_option("graph", sph_in, "edge-list file")->required();
  cmd_sph->add_option("--tol", sph_tol, "PSD tolerance override");
  cmd_sph->add_option("--out", sph_out, "output path (default stdout)");

  std::string recover_in, recover_out;
  auto* cmd_recover = app.add_subcommand("recover", "spectral near-bipartite recovery");
  cmd_recover->add_option("graph", recover_in, "edge-list file")->required();
  cmd_recover->add_option("--out", recover_out, "output path (default stdout)");

  std::size_t mt_m = 0, mt_k = 0, mt_d = 0, mt_l = 0;
  std::string mt_out;
  auto* cmd_mt = app.add_subcommand("mt-bound", "sign-pattern counting bound");
  cmd_mt->add_option("--m", mt_m, "number of polynomials")->required();
  cmd_mt->add_option("--k", mt_k, "grouping parameter, 1 <= k <= m")->required();
  cmd_mt->add_option("--d", mt_d, "polynomial degree")->required();
  cmd_mt->add_option("--l", mt_l, "number of variables")->required();
  cmd_mt->add_option("--out", mt_out, "output path (default stdout)");

  std::size_t so_n = 0, so_d = 0, so_trials = 10000;
  std::uint64_t so_seed = 0;
  std::string so_out;
  auto* cmd_sample = app.add_subcommand("sample-orders", "count realizable orders by sampling");
  cmd_sample->add_option("--n", so_n, "points")->required();
  cmd_sample->add_option("--d", so_d, "dimension")->required();
  cmd_sample->add_option("--trials", so_trials, "sample count (default 10000)");
  cmd_sample->add_option("--seed", so_seed, "RNG seed (default 0)");
  cmd_sample->add_option("--out", so_out, "output path (default stdout)");

  std::string mix_in, mix_subset, mix_out;
  auto* cmd_mix = app.add_subcommand("mix-check", "edge-distribution bound for n/2-regular graphs");
  cmd_mix->add_option("graph", mix_in, "edge-list file")->required();
  cmd_mix->add_option("--subset", mix_subset, "comma-separated vertex list (default: scan all)");
  cmd_mix->add_option("--out", mix_out, "output path (default stdout)");

  std::string ed_g, ed_h, ed_out;
  auto* cmd_ed = app.add_subcommand("edit-distance", "edge edit distance under the given labeling");
  cmd_ed->add_option("graph1", ed_g, "edge-list file")->required();
  cmd_ed->add_option("graph2", ed_h, "edge-list file")->required();
  cmd_ed->add_option("--out", ed_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return 64;
  }

  try {
    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_spectrum->parsed()) return run_spectrum(spectrum_in, spectrum_out);
    if (cmd_embed->parsed()) return run_embed_order(embed_in, embed_out);
    if (cmd_verify->parsed()) {
      if (verify_order.empty() && verify_graph.empty())
        throw precondition_error("verify-embedding needs --order or --graph");
      return run_verify_embedding(verify_emb, verify_order, verify_graph, verify_norm, verify_out);
    }
    if (cmd_margin->parsed()) return run_margin_bound(margin_in, margin_tol, margin_out);
    if (cmd_sph->parsed()) return run_certify_sphericity(sph_in, sph_tol, sph_out);
    if (cmd_recover->parsed()) return run_recover(recover_in, recover_out);
    if (cmd_mt->parsed()) return run_mt_bound(mt_m, mt_k, mt_d, mt_l, mt_out);
    if (cmd_sample->parsed()) return run_sample_orders(so_n, so_d, so_trials, so_seed, so_out);
    if (cmd_mix->parsed()) return run_mix_check(mix_in, mix_subset, mix_out);
    if (cmd_ed->parsed()) return run_edit_distance(ed_g, ed_h, ed_out);
  } catch (const io_error& e) {
    std::cout << error_json("io", e.what()) << '\n';
    return 1;
  } catch (const parse_error& e) {
    std::cout << error_json("parse", e.what()) << '\n';
    return 1;
  } catch (const precondition_error& e) {
    std::cout << error_json("hypothesis", e.what()) << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cout << error_json("io", e.what()) << '\n';
    return 1;
  }
  return 64;
}
