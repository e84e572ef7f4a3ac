#include "doctest.h"

#include <sstream>

#include "effres/io.hpp"
#include "effres/tau.hpp"

using namespace effres;

TEST_CASE("graph json round trip") {
  const MarkedGraph g{4, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 1}}, 4};
  const nlohmann::json j = graph_to_json(g);
  CHECK(j.dump() == R"({"edges":[[0,2],[2,1],[0,3],[3,1],[0,1]],"marked":4,"n":4})");
  CHECK(graph_from_json(j) == g);
  CHECK(graph_from_json(nlohmann::json::parse(j.dump())) == g);
}

TEST_CASE("graph json rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,1]],"marked":1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,0]],"marked":0})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,1,2]],"marked":0})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":"2","edges":[],"marked":0})")),
                  std::invalid_argument);
}

TEST_CASE("dot export marks the distinguished edge") {
  const MarkedGraph g{3, {{0, 2}, {2, 1}, {0, 1}}, 2};
  const std::string dot = graph_to_dot(g);
  CHECK(dot.find("0 -- 1 [style=bold") != std::string::npos);
  CHECK(dot.find("0 -- 2;") != std::string::npos);
  CHECK(dot.rfind("graph G {", 0) == 0);
}

TEST_CASE("certificate json") {
  const Certificate cert = realize(Rational(2, 3), ConstructorConfig{});
  const nlohmann::json j = certificate_to_json(cert);
  CHECK(j["target"] == "2/3");
  CHECK(j["resistance"] == "2/3");
  CHECK(j["tau_G"] == "3");
  CHECK(j["all_pass"] == true);
  CHECK(j["audits"].size() == cert.audits.size());
  // Re-reading the graph reproduces the same tau values.
  const MarkedGraph back = graph_from_json(j["graph"]);
  CHECK(tau(back).get_str() == j["tau_G"].get<std::string>());
  CHECK(tau_delete(back).get_str() == j["tau_G_minus_e"].get<std::string>());
  CHECK(tau_contract(back).get_str() == j["tau_G_contract_e"].get<std::string>());
}

TEST_CASE("decomposition and audit json") {
  const nlohmann::json d = decomposition_to_json(decompose_trivial(Rational(4, 7)));
  CHECK(d.dump() == R"({"cost":"5","parts":["4/7"],"target":"4/7"})");
  const nlohmann::json a = audit_to_json(Audit{"x", true, "1", "2"});
  CHECK(a.dump() == R"({"lhs":"1","name":"x","pass":true,"rhs":"2"})");
}

TEST_CASE("census csv") {
  const CensusSummary s = census_serial(census_targets(3), ConstructorConfig::census_defaults());
  std::ostringstream out;
  write_census_csv(out, s);
  const std::string csv = out.str();
  CHECK(csv.rfind("t,c,strategy,V,E,bound_value,size_ratio\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.find("\n3,2,direct,3,3,3,1\n") != std::string::npos);
}
