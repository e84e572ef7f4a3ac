#include "effres/io.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace effres {

nlohmann::json graph_to_json(const MarkedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", std::move(edges)}, {"marked", g.marked}};
}

MarkedGraph graph_from_json(const nlohmann::json& j) {
  MarkedGraph g;
  try {
    g.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair [u, v]");
      g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    g.marked = j.at("marked").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph json: ") + e.what());
  }
  g.validate();
  return g;
}

std::string graph_to_dot(const MarkedGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.n; ++v) out << "  " << v << ";\n";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    out << "  " << g.edges[i].first << " -- " << g.edges[i].second;
    if (i == g.marked) out << " [style=bold, color=red, penwidth=2.5]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json audit_to_json(const Audit& a) {
  return {{"name", a.name}, {"pass", a.pass}, {"lhs", a.lhs}, {"rhs", a.rhs}};
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
  nlohmann::json parts = nlohmann::json::array();
  for (const Rational& q : d.parts) parts.push_back(q.to_string());
  return {{"target", d.target.to_string()}, {"parts", std::move(parts)}, {"cost", d.cost.get_str()}};
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json audits = nlohmann::json::array();
  for (const Audit& a : cert.audits) audits.push_back(audit_to_json(a));
  return {{"target", cert.target.to_string()},
          {"strategy", std::string(to_string(cert.strategy))},
          {"term", cert.term.to_string()},
          {"graph", graph_to_json(cert.graph)},
          {"tau_G", cert.tau_g.get_str()},
          {"tau_G_minus_e", cert.tau_del.get_str()},
          {"tau_G_contract_e", cert.tau_con.get_str()},
          {"zeta", cert.zeta.to_string()},
          {"resistance", cert.resistance.to_string()},
          {"V", cert.v_count},
          {"E", cert.e_count},
          {"bound_value", cert.bound_value.to_string()},
          {"size_ratio", cert.size_ratio.to_string()},
          {"all_pass", cert.all_pass()},
          {"audits", std::move(audits)}};
}

void write_census_csv(std::ostream& out, const CensusSummary& summary) {
  out << "t,c,strategy,V,E,bound_value,size_ratio\n";
  for (const CensusRow& r : summary.rows) {
    out << r.t << ',' << r.c << ',' << to_string(r.strategy) << ',' << r.v_count << ',' << r.e_count << ','
        << r.bound_value.to_string() << ',' << r.size_ratio.to_string() << '\n';
  }
}

}  // namespace effres
