#include "otoric/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>
#include <openssl/evp.h>

#include "otoric/circuit_engine.hpp"
#include "otoric/cycles.hpp"
#include "otoric/errors.hpp"
#include "otoric/fixtures.hpp"
#include "otoric/graph.hpp"
#include "otoric/oracle.hpp"
#include "otoric/robustness.hpp"

namespace otoric {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string command;
  std::string path;
  std::string fixture;
  std::string format = "text";
  std::int64_t bound = OracleBudget{}.max_entry_bound;
  std::size_t max_support = OracleBudget{}.max_support_size;
  std::uint64_t max_enum = OracleBudget{}.max_enumeration_count;
  int jobs = 0;
  std::string expect;
};

struct Input {
  std::string source;
  std::string document;
  WeightedOrientedGraph graph;
};

// Holds the report under construction; text lines are emitted at the end.
struct Report {
  ordered_json results = ordered_json::object();
  ordered_json timing = ordered_json::object();
  std::vector<std::string> warnings;
  std::vector<std::string> text;
  int exit = kExitOk;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return s.str();
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ordered_json big_list(const std::vector<BigInt>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string vector_text(const IntVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.get_str());
  return "(" + join(parts, ",") + ")";
}

std::vector<std::string> vertex_ids(const WeightedOrientedGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(g.vertex(i).id);
  return out;
}

std::vector<std::string> edge_ids(const WeightedOrientedGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(g.edge(i).id);
  return out;
}

Input load(const Options& o) {
  Input in;
  if (!o.fixture.empty()) {
    auto doc = fixture_document(o.fixture);
    if (!doc) throw ArgumentError("unknown fixture '" + o.fixture + "' (available: " + join(fixture_names(), ", ") + ")");
    in.source = "fixture:" + o.fixture;
    in.document = *doc;
  } else {
    if (o.path.empty()) throw ArgumentError("no graph file given");
    std::ifstream f(o.path, std::ios::binary);
    if (!f) throw ArgumentError("cannot read " + o.path);
    std::ostringstream s;
    s << f.rdbuf();
    in.source = o.path;
    in.document = s.str();
  }
  in.graph = parse_graph(in.document);
  return in;
}

OracleBudget budget_of(const Options& o) {
  OracleBudget b{o.bound, o.max_support, o.max_enum};
  b.validate();
  return b;
}

ordered_json circuit_json(const WeightedOrientedGraph& g, const CircuitEntry& c) {
  ordered_json j;
  j["kind"] = to_string(c.vector.kind);
  j["vector"] = big_list(c.vector.exponents);
  j["binomial"] = render_binomial(c.binomial, g.edge_ids());
  ordered_json sup = ordered_json::array();
  for (const auto& s : c.supports) {
    ordered_json js;
    js["kind"] = to_string(s.kind);
    js["edges"] = edge_ids(g, s.edge_set());
    sup.push_back(std::move(js));
  }
  j["supports"] = std::move(sup);
  return j;
}

std::vector<CircuitEntry> formula_circuits(const WeightedOrientedGraph& g, Report& r) {
  std::vector<std::string> diag;
  find_circuit_supports(g, &diag);
  for (auto& d : diag) r.warnings.push_back(std::move(d));
  return circuits(g);
}

void cmd_analyze(const Input& in, Report& r) {
  const auto& g = in.graph;
  const auto t0 = Clock::now();
  ordered_json vs = ordered_json::array(), es = ordered_json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"weight", v.weight.get_str()}});
  for (const auto& e : g.edges())
    es.push_back({{"id", e.id}, {"tail", g.vertex(e.tail).id}, {"head", g.vertex(e.head).id}});

  const IntMatrix a = incidence_matrix(g);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).get_str());
    rows.push_back(std::move(row));
  }

  ordered_json cs = ordered_json::array();
  std::vector<std::string> cycle_lines;
  for (const auto& c : enumerate_cycles(g)) {
    const BigInt d = cycle_det(c);
    const bool bal = sgn(d) == 0;
    cs.push_back({{"vertices", vertex_ids(g, c.vertices)},
                  {"edges", edge_ids(g, c.edges)},
                  {"det", d.get_str()},
                  {"balanced", bal}});
    cycle_lines.push_back("  (" + join(vertex_ids(g, c.vertices), " ") + ") det " + d.get_str() +
                          (bal ? " balanced" : " unbalanced"));
  }
  const StructuralInfo s = structural_queries(g);
  const std::vector<std::size_t> sinks(s.sinks.begin(), s.sinks.end());
  const std::vector<std::size_t> leaves(s.leaves.begin(), s.leaves.end());
  r.timing["analyze_ms"] = ms_since(t0);

  r.results["vertices"] = std::move(vs);
  r.results["edges"] = std::move(es);
  r.results["incidence_matrix"] = {{"rows", a.row_labels()}, {"cols", a.col_labels()}, {"entries", std::move(rows)}};
  r.results["cycles"] = std::move(cs);
  r.results["sinks"] = vertex_ids(g, sinks);
  r.results["leaves"] = vertex_ids(g, leaves);

  r.text.push_back("vertices: " + std::to_string(g.vertex_count()));
  r.text.push_back("edges: " + std::to_string(g.edge_count()));
  r.text.push_back("incidence matrix:");
  std::size_t width = 1;
  for (const auto& x : a.entries()) width = std::max(width, x.get_str().size());
  for (const auto& id : g.edge_ids()) width = std::max(width, id.size());
  std::size_t vwidth = 0;
  for (const auto& v : g.vertices()) vwidth = std::max(vwidth, v.id.size());
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  std::string header = "  " + std::string(vwidth, ' ');
  for (const auto& id : g.edge_ids()) header += " " + pad(id, width);
  r.text.push_back(header);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::string line = "  " + pad(g.vertex(i).id, vwidth);
    for (std::size_t j = 0; j < a.cols(); ++j) line += " " + pad(a(i, j).get_str(), width);
    r.text.push_back(line);
  }
  r.text.push_back("cycles: " + std::to_string(cycle_lines.size()));
  r.text.insert(r.text.end(), cycle_lines.begin(), cycle_lines.end());
  r.text.push_back("sinks: " + (sinks.empty() ? std::string("none") : join(vertex_ids(g, sinks), " ")));
  r.text.push_back("leaves: " + (leaves.empty() ? std::string("none") : join(vertex_ids(g, leaves), " ")));
}

void cmd_circuits(const Input& in, Report& r) {
  const auto t0 = Clock::now();
  const auto cs = formula_circuits(in.graph, r);
  r.timing["circuits_ms"] = ms_since(t0);
  ordered_json list = ordered_json::array();
  for (const auto& c : cs) {
    list.push_back(circuit_json(in.graph, c));
    r.text.push_back(render_binomial(c.binomial, in.graph.edge_ids()));
  }
  r.results["circuits"] = std::move(list);
}

std::set<IntVector> read_expected(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot read " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(f);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (doc.is_object() && doc.contains("vectors")) doc = doc["vectors"];
  if (!doc.is_array()) throw ParseError(path + ": expected an array of vectors");
  std::set<IntVector> out;
  for (const auto& v : doc) {
    if (!v.is_array()) throw ParseError(path + ": expected an array of vectors");
    IntVector x;
    for (const auto& e : v) {
      if (e.is_string()) x.emplace_back(e.get<std::string>());
      else if (e.is_number_integer()) x.emplace_back(e.get<long>());
      else throw ParseError(path + ": vector entries must be integers or decimal strings");
    }
    out.insert(canonical_sign(std::move(x)));
  }
  return out;
}

void cmd_verify(const Input& in, const Options& o, Report& r) {
  const auto& g = in.graph;
  const OracleBudget budget = budget_of(o);
  const IntMatrix a = incidence_matrix(g);

  auto t0 = Clock::now();
  const auto cs = formula_circuits(g, r);
  r.timing["circuits_ms"] = ms_since(t0);

  ordered_json checks = ordered_json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"invariant", name}, {"status", pass ? "pass" : "fail"}, {"detail", detail}});
    r.text.push_back(name + ": " + (pass ? "pass" : "fail") + (detail.empty() ? "" : " (" + detail + ")"));
    all_pass = all_pass && pass;
  };

  std::vector<std::string> bad_kernel, bad_gcd;
  for (const auto& c : cs) {
    if (c.vector.exponents.size() != a.cols() || !kernel_contains(a, c.vector.exponents))
      bad_kernel.push_back(vector_text(c.vector.exponents));
    if (content(c.vector.exponents) != 1) bad_gcd.push_back(vector_text(c.vector.exponents));
  }
  record("kernel_membership", bad_kernel.empty(), join(bad_kernel, " "));
  record("gcd_normalized", bad_gcd.empty(), join(bad_gcd, " "));

  t0 = Clock::now();
  std::vector<std::string> not_primitive;
  for (const auto& c : cs)
    if (!is_primitive(a, c.vector.exponents, budget)) not_primitive.push_back(vector_text(c.vector.exponents));
  r.timing["primitivity_ms"] = ms_since(t0);
  record("primitivity", not_primitive.empty(), join(not_primitive, " "));

  t0 = Clock::now();
  const auto bf = circuits_brute_force(a, budget);
  r.timing["oracle_ms"] = ms_since(t0);
  std::set<IntVector> formula;
  for (const auto& c : cs) formula.insert(c.vector.exponents);
  const std::set<IntVector> oracle(bf.begin(), bf.end());
  std::vector<std::string> diff;
  for (const auto& v : formula)
    if (!oracle.contains(v)) diff.push_back("extra " + vector_text(v));
  for (const auto& v : oracle)
    if (!formula.contains(v)) diff.push_back("missing " + vector_text(v));
  record("oracle_equivalence", diff.empty(), join(diff, " "));

  if (!o.expect.empty()) {
    const auto expected = read_expected(o.expect);
    std::vector<std::string> ediff;
    for (const auto& v : formula)
      if (!expected.contains(v)) ediff.push_back("unexpected " + vector_text(v));
    for (const auto& v : expected)
      if (!formula.contains(v)) ediff.push_back("not produced " + vector_text(v));
    record("expected_vectors", ediff.empty(), join(ediff, " "));
  }

  r.results["invariants"] = std::move(checks);
  r.results["passed"] = all_pass;
  r.text.push_back(std::string("result: ") + (all_pass ? "pass" : "fail"));
  if (!all_pass) r.exit = kExitVerifyFailed;
}

void cmd_betti(const Input& in, Report& r, std::ostream& err) {
  const auto t0 = Clock::now();
  const RobustnessReport rep = check_robust_class(in.graph);
  r.timing["robustness_ms"] = ms_since(t0);
  r.warnings.insert(r.warnings.end(), rep.warnings.begin(), rep.warnings.end());

  r.results["in_class"] = rep.in_class;
  r.results["violated_condition"] = rep.violated_condition ? ordered_json(*rep.violated_condition) : ordered_json();
  r.results["balanced_cycles"] = rep.balanced_cycle_count;
  r.results["unbalanced_cycles"] = rep.unbalanced_cycle_count;
  r.text.push_back(std::string("in_class: ") + (rep.in_class ? "yes" : "no"));
  r.text.push_back("balanced_cycles: " + std::to_string(rep.balanced_cycle_count));
  r.text.push_back("unbalanced_cycles: " + std::to_string(rep.unbalanced_cycle_count));
  if (!rep.in_class) {
    r.text.push_back("violated: " + *rep.violated_condition);
    err << "otoric: out of class: " << *rep.violated_condition << "\n";
    r.exit = kExitOutOfClass;
    return;
  }
  std::vector<std::string> betti;
  for (const auto& b : rep.betti) betti.push_back(b.get_str());
  r.results["mu"] = rep.mu;
  r.results["betti"] = betti;
  r.results["projective_dimension"] = rep.projective_dimension;
  r.results["zero_ideal"] = rep.zero_ideal;
  ordered_json list = ordered_json::array();
  for (const auto& c : rep.circuits) list.push_back(circuit_json(in.graph, c));
  r.results["circuits"] = std::move(list);
  r.text.push_back("mu: " + std::to_string(rep.mu));
  r.text.push_back("betti: " + join(betti, " "));
  r.text.push_back("projective_dimension: " + std::to_string(rep.projective_dimension));
  if (rep.zero_ideal) r.text.push_back("zero_ideal: yes");
}

void cmd_oracle_compare(const Input& in, const Options& o, Report& r) {
  const auto& g = in.graph;
  const OracleBudget budget = budget_of(o);
  const IntMatrix a = incidence_matrix(g);

  auto t0 = Clock::now();
  std::set<IntVector> formula;
  for (const auto& c : formula_circuits(g, r)) formula.insert(c.vector.exponents);
  r.timing["circuits_ms"] = ms_since(t0);
  t0 = Clock::now();
  const auto bf = circuits_brute_force(a, budget);
  r.timing["oracle_ms"] = ms_since(t0);
  t0 = Clock::now();
  const auto gr = graver_small(a, budget);
  r.timing["graver_ms"] = ms_since(t0);
  const std::set<IntVector> brute(bf.begin(), bf.end()), graver(gr.begin(), gr.end());

  auto minus = [](const std::set<IntVector>& x, const std::set<IntVector>& y) {
    std::vector<IntVector> out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
  };
  auto to_json = [](const std::vector<IntVector>& vs) {
    ordered_json a = ordered_json::array();
    for (const auto& v : vs) a.push_back(big_list(v));
    return a;
  };
  auto set_json = [&](const std::set<IntVector>& s) { return to_json({s.begin(), s.end()}); };

  const auto f_b = minus(formula, brute), b_f = minus(brute, formula);
  const auto f_g = minus(formula, graver), g_f = minus(graver, formula);
  r.results["bound"] = budget.max_entry_bound;
  r.results["formula"] = set_json(formula);
  r.results["brute_force"] = set_json(brute);
  r.results["graver_bounded"] = set_json(graver);
  r.results["differences"] = {{"formula_minus_brute_force", to_json(f_b)},
                              {"brute_force_minus_formula", to_json(b_f)},
                              {"formula_minus_graver", to_json(f_g)},
                              {"graver_minus_formula", to_json(g_f)}};
  const bool circuits_agree = f_b.empty() && b_f.empty();
  const bool all_equal = circuits_agree && f_g.empty() && g_f.empty();
  r.results["all_equal"] = all_equal;

  r.text.push_back("bound: " + std::to_string(budget.max_entry_bound));
  r.text.push_back("formula: " + std::to_string(formula.size()));
  r.text.push_back("brute_force: " + std::to_string(brute.size()));
  r.text.push_back("graver_bounded: " + std::to_string(graver.size()));
  auto diff_line = [&](const char* name, const std::vector<IntVector>& d) {
    std::vector<std::string> parts;
    for (const auto& v : d) parts.push_back(vector_text(v));
    r.text.push_back(std::string(name) + ": " + (parts.empty() ? "none" : join(parts, " ")));
  };
  diff_line("formula - brute_force", f_b);
  diff_line("brute_force - formula", b_f);
  diff_line("formula - graver", f_g);
  diff_line("graver - formula", g_f);
  r.text.push_back(std::string("all_equal: ") + (all_equal ? "yes" : "no"));
  // A bounded Graver set may legitimately exceed the circuits; only a
  // formula/oracle disagreement is a failure.
  if (!circuits_agree) r.exit = kExitVerifyFailed;
}

void emit(const Options& o, const Input& in, Report& r, std::ostream& out, std::ostream& err) {
  if (o.format == "json") {
    ordered_json doc;
    doc["command"] = o.command;
    doc["input"] = {{"source", in.source}, {"sha256", sha256_hex(in.document)}};
    doc["results"] = std::move(r.results);
    doc["timing"] = std::move(r.timing);
    doc["warnings"] = r.warnings;
    doc["exit_code"] = r.exit;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& line : r.text) out << line << "\n";
    for (const auto& w : r.warnings) err << "warning: " << w << "\n";
  }
}

void add_common(CLI::App* sub, Options& o, bool budget) {
  sub->add_option("graph", o.path, "Graph JSON document");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--jobs", o.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  sub->add_option("--fixtures", o.fixture, "Use an embedded graph instead of a file");
  if (budget) {
    sub->add_option("--bound", o.bound, "Largest |entry| searched by the oracle")->check(CLI::PositiveNumber);
    sub->add_option("--max-support", o.max_support, "Largest circuit support searched")->check(CLI::PositiveNumber);
    sub->add_option("--max-enum", o.max_enum, "Enumeration budget")->check(CLI::PositiveNumber);
  }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circuit binomials of toric ideals of weighted oriented graphs", "otoric"};
  app.require_subcommand(1);
  Options o;

  add_common(app.add_subcommand("analyze", "Incidence matrix, cycles, sinks and leaves"), o, false);
  add_common(app.add_subcommand("circuits", "Circuit binomials from the minor formulas"), o, false);
  auto* verify = app.add_subcommand("verify", "Check kernel, gcd, primitivity and oracle agreement");
  add_common(verify, o, true);
  verify->add_option("--expect", o.expect, "JSON array of expected circuit vectors");
  add_common(app.add_subcommand("betti", "Robust-class check, mu and Betti numbers"), o, false);
  add_common(app.add_subcommand("oracle-compare", "Formula vs brute force vs bounded Graver set"), o, true);
  app.add_flag_callback("--list-fixtures", [&] {
    for (const auto& n : fixture_names()) out << n << "\n";
    throw CLI::Success();
  }, "Print embedded fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::Success&) {
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "otoric: " << e.what() << "\n";
    return kExitInputError;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (o.jobs > 0) omp_set_num_threads(o.jobs);

  Input in;
  try {
    const auto t0 = Clock::now();
    in = load(o);
    Report r;
    r.timing["parse_ms"] = ms_since(t0);
    if (o.command == "analyze") cmd_analyze(in, r);
    else if (o.command == "circuits") cmd_circuits(in, r);
    else if (o.command == "verify") cmd_verify(in, o, r);
    else if (o.command == "betti") cmd_betti(in, r, err);
    else cmd_oracle_compare(in, o, r);
    emit(o, in, r, out, err);
    return r.exit;
  } catch (const ParseError& e) {
    err << "otoric: ParseError: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "otoric: ValidationError: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ArgumentError& e) {
    err << "otoric: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BudgetExceeded& e) {
    err << "otoric: BudgetExceeded: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const OutOfClassError& e) {
    err << "otoric: OutOfClassError: " << e.what() << "\n";
    return kExitOutOfClass;
  }
}

} // namespace otoric
