// effres: build and check planar graphs with a prescribed effective resistance.
//
// Exit status: 0 success, 1 an audit failed, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "effres/census.hpp"
#include "effres/constructor.hpp"
#include "effres/continued_fraction.hpp"
#include "effres/decomposer.hpp"
#include "effres/io.hpp"

namespace {

using namespace effres;

constexpr int kOk = 0;
constexpr int kAuditFailed = 1;
constexpr int kBadInput = 2;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_target(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw BadInput(e.what());
  }
}

// c/t as typed must already be in lowest terms with 0 < c < t.
Rational parse_resistance(const std::string& text) {
  const Rational q = parse_target(text);
  const auto slash = text.find('/');
  if (slash != std::string::npos && BigInt(text.substr(slash + 1)) != q.den()) {
    throw BadInput(text + " is not a reduced fraction");
  }
  if (q.sign() <= 0 || q >= Rational(1)) throw BadInput("target must satisfy 0 < c/t < 1, got " + text);
  return q;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot open " + path + " for writing");
  out << body;
}

std::string approx(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", q.to_double());
  return buf;
}

void print_audits(const std::vector<Audit>& audits, std::ostream& out) {
  for (const Audit& a : audits) {
    out << "  " << (a.pass ? "ok   " : "FAIL ") << a.name << "  " << a.lhs << " vs " << a.rhs << '\n';
  }
}

int run_realize(const std::string& target_text, const std::string& strategy_text, const std::string& json_path,
                const std::string& dot_path, bool as_json, bool quiet) {
  const Rational target = parse_resistance(target_text);
  Strategy strategy;
  try {
    strategy = parse_strategy(strategy_text);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  Certificate cert;
  try {
    cert = realize(target, ConstructorConfig{}, strategy);
  } catch (const std::domain_error& e) {
    throw BadInput(e.what());
  }
  if (!json_path.empty()) write_file(json_path, certificate_to_json(cert).dump(2) + "\n");
  if (!dot_path.empty()) write_file(dot_path, graph_to_dot(cert.graph));
  if (as_json) {
    std::cout << certificate_to_json(cert).dump(2) << '\n';
  } else if (!quiet) {
    std::cout << "target      " << cert.target << '\n'
              << "strategy    " << to_string(cert.strategy) << '\n'
              << "term        " << cert.term.to_string() << '\n'
              << "V, E        " << cert.v_count << ", " << cert.e_count << '\n'
              << "tau(G)      " << cert.tau_g << '\n'
              << "tau(G-e)    " << cert.tau_del << '\n'
              << "tau(G/e)    " << cert.tau_con << '\n'
              << "resistance  " << cert.resistance << '\n'
              << "size_ratio  " << cert.size_ratio << "  (approximately " << approx(cert.size_ratio) << ")\n"
              << "audits      " << (cert.all_pass() ? "all pass" : "FAILED") << '\n';
    if (!cert.all_pass()) print_audits(cert.audits, std::cout);
  }
  return cert.all_pass() ? kOk : kAuditFailed;
}

int run_verify(const std::string& path, const std::string& target_text, bool as_json, bool quiet) {
  const Rational target = parse_resistance(target_text);
  std::ifstream in(path);
  if (!in) throw BadInput("cannot read " + path);
  MarkedGraph g;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("graph")) j = j.at("graph");
    g = graph_from_json(j);
  } catch (const std::exception& e) {
    throw BadInput(e.what());
  }
  const std::vector<Audit> audits = audit_graph(g, target);
  const bool pass = all_pass(audits);
  if (as_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const Audit& a : audits) out.push_back(audit_to_json(a));
    std::cout << nlohmann::json{{"target", target.to_string()}, {"all_pass", pass}, {"audits", out}}.dump(2) << '\n';
  } else if (!quiet) {
    std::cout << "V, E        " << g.vertex_count() << ", " << g.edge_count() << '\n';
    print_audits(audits, std::cout);
    std::cout << (pass ? "verified" : "FAILED") << '\n';
  }
  return pass ? kOk : kAuditFailed;
}

int run_decompose(const std::string& target_text, const DecomposerBudget& budget, bool as_json, bool quiet) {
  const Rational q = parse_target(target_text);
  if (q.sign() < 0) throw BadInput("d/c must be non-negative");
  Decomposition d;
  try {
    d = decompose_search(q.frac(), budget);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  const bool ok = is_valid(d);
  if (as_json) {
    nlohmann::json j = decomposition_to_json(d);
    j["integer_part"] = q.floor().get_str();
    std::cout << j.dump(2) << '\n';
  } else if (!quiet) {
    std::cout << q << " = " << q.floor();
    for (const Rational& p : d.parts) std::cout << (p.sign() < 0 ? " - " : " + ") << p.abs();
    std::cout << "\ncost " << d.cost << " (trivial " << partial_quotient_sum(q.frac()) << ")\n";
  }
  return ok ? kOk : kAuditFailed;
}

int run_census(long max_t, const std::string& csv_path, int threads, bool quiet) {
  if (max_t < 2) throw BadInput("--max-t must be at least 2");
  const CensusSummary s = census(census_targets(max_t), ConstructorConfig::census_defaults(), threads);
  if (!csv_path.empty()) {
    std::ostringstream out;
    write_census_csv(out, s);
    write_file(csv_path, out.str());
  }
  if (!quiet) {
    std::cout << "targets     " << s.rows.size() << '\n'
              << "failures    " << s.failures << '\n'
              << "max ratio   " << s.max_ratio << "  (approximately " << approx(s.max_ratio) << ")\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", s.mean_ratio);
    std::cout << "mean ratio  approximately " << buf << '\n';
    for (const CensusRow& r : s.rows) {
      if (r.all_pass) continue;
      std::cout << "  FAIL " << r.c << '/' << r.t;
      for (const std::string& f : r.failures) std::cout << ' ' << f;
      std::cout << '\n';
    }
  }
  return s.failures == 0 ? kOk : kAuditFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar graphs with prescribed effective resistance"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  bool global_json = false;
  app.add_flag("-q,--quiet", quiet, "Suppress normal output");
  app.add_flag("--json", global_json, "Print machine-readable JSON on stdout");

  std::string target, strategy = "portfolio", json_path, dot_path;
  auto* realize_cmd = app.add_subcommand("realize", "Build and certify a graph with I(G,e) = c/t");
  realize_cmd->add_option("target", target, "c/t with 0 < c < t")->required();
  auto* realize_json =
      realize_cmd->add_option("--json", json_path, "Write the certificate as JSON (stdout if no file)")->expected(0, 1);
  realize_cmd->add_option("--dot", dot_path, "Write the graph in Graphviz format");
  realize_cmd->add_option("--strategy", strategy, "direct, large, mid, small or portfolio")
      ->check(CLI::IsMember({"direct", "large", "mid", "small", "portfolio"}));

  std::string graph_path, verify_target;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute and audit a marked graph");
  verify_cmd->add_option("graph", graph_path, "Graph JSON (or a certificate)")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--target", verify_target, "Expected resistance c/t")->required();

  std::string ratio;
  DecomposerBudget budget;
  bool as_json = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Cheap decomposition of d/c mod 1");
  decompose_cmd->add_option("ratio", ratio, "d/c")->required();
  decompose_cmd->add_option("--max-den", budget.max_den, "Largest searched denominator")->capture_default_str();
  decompose_cmd->add_option("--max-quotient", budget.max_quotient, "Partial quotient cap")->capture_default_str();
  decompose_cmd->add_option("--max-terms", budget.max_terms, "Number of parts")->capture_default_str();
  decompose_cmd->add_flag("--json", as_json, "Print JSON");

  long max_t = 0;
  int threads = 0;
  std::string csv_path;
  auto* census_cmd = app.add_subcommand("census", "Realize every reduced c/t up to a bound");
  census_cmd->add_option("--max-t", max_t, "Largest denominator")->required();
  census_cmd->add_option("--csv", csv_path, "Write per-target rows as CSV");
  census_cmd->add_option("--threads", threads, "OpenMP threads (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*realize_cmd) {
      const bool to_stdout = global_json || (realize_json->count() > 0 && json_path.empty());
      return run_realize(target, strategy, json_path, dot_path, to_stdout, quiet);
    }
    if (*verify_cmd) return run_verify(graph_path, verify_target, global_json, quiet);
    if (*decompose_cmd) return run_decompose(ratio, budget, as_json || global_json, quiet);
    if (*census_cmd) return run_census(max_t, csv_path, threads, quiet);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAuditFailed;
  }
  return kBadInput;
}
