#include <string>
#include <vector>

#include "doctest.h"
#include "perfectrank/certify.hpp"
#include "perfectrank/format.hpp"
#include "perfectrank/json_io.hpp"
#include "perfectrank/probe.hpp"
#include "perfectrank/tensor.hpp"
#include "perfectrank/witness.hpp"

using namespace perfectrank;

namespace {

std::vector<std::string> keys_of(const Json& doc) {
  std::vector<std::string> out;
  for (const auto& item : doc.items()) out.push_back(item.key());
  return out;
}

}  // namespace

TEST_CASE("bounds document") {
  const Format f{{3, 3, 3}};
  const Json doc = bounds_json(f, typical_rank_bounds(f));
  CHECK(doc["format"] == Json::array({3, 3, 3}));
  CHECK(doc["lower"] == 4);
  CHECK(doc["upper"] == 9);
  CHECK(doc["q"] == 5);
  CHECK(doc["max_dim"] == 3);
  CHECK(doc["product_rest"] == 9);
}

TEST_CASE("perfect document") {
  const Format f{{2, 3, 5}};
  const Json doc = perfect_json(f, is_perfect(f));
  CHECK(doc["perfect"] == true);
  CHECK(doc["q"] == 3);
  CHECK(doc["interval"] == Json::array({3, 6}));
}

TEST_CASE("certificate document schema and order") {
  const Json doc = certificate_json(certify_perfect(Format{{2, 2, 3}}));
  CHECK(keys_of(doc) ==
        std::vector<std::string>{"format", "r", "q", "support", "jacobian",
                                 "verdict", "digest", "primes", "version"});
  CHECK(keys_of(doc["jacobian"]) ==
        std::vector<std::string>{"rows", "cols", "rank"});
  CHECK(doc["format"] == Json::array({2, 2, 3}));
  CHECK(doc["r"] == 3);
  CHECK(doc["q"] == 2);
  CHECK(doc["support"] ==
        Json::array({Json::array({1, 1}), Json::array({2, 2}),
                     Json::array({1, 2})}));
  CHECK(doc["jacobian"]["rows"] == 21);
  CHECK(doc["jacobian"]["cols"] == 12);
  CHECK(doc["jacobian"]["rank"] == 12);
  CHECK(doc["verdict"] == "PERFECT_CERTIFIED");
  CHECK(doc["primes"] ==
        Json::array({2147483647ULL, 2147483629ULL, 2147483587ULL}));
  // Byte-identical serialization on repeat runs.
  CHECK(doc.dump(2) ==
        certificate_json(certify_perfect(Format{{2, 2, 3}})).dump(2));
}

TEST_CASE("not-applicable certificate document") {
  const Json doc = certificate_json(certify_perfect(Format{{3, 3, 3}}));
  CHECK(doc["verdict"] == "NOT_APPLICABLE");
  CHECK(doc["support"] == Json::array());
  CHECK(doc["jacobian"]["rows"] == 0);
  CHECK(doc["digest"] == "");
}

TEST_CASE("witness document") {
  const Json doc = witness_json(build_witness(Format{{2, 2, 3}}));
  CHECK(keys_of(doc) ==
        std::vector<std::string>{"format", "r", "q", "support", "groups"});
  CHECK(doc["r"] == 3);
  CHECK(doc["groups"].size() == 3);
  CHECK(doc["groups"][0] ==
        Json::array({Json::array({1, 2}), Json::array({1, 2}),
                     Json::array({1, 0, 0})}));
}

TEST_CASE("probe document") {
  const Json doc =
      probe_json(generic_rank_probe(Format{{2, 2, 2}}, 4, 3, 42));
  CHECK(keys_of(doc) == std::vector<std::string>{"format", "records",
                                                 "estimated_generic_rank",
                                                 "seed"});
  REQUIRE(doc["records"].size() == 2);
  CHECK(keys_of(doc["records"][0]) ==
        std::vector<std::string>{"r", "rank", "full", "trials"});
  CHECK(doc["records"][0]["r"] == 1);
  CHECK(doc["records"][0]["rank"] == 4);
  CHECK(doc["records"][0]["full"] == false);
  CHECK(doc["records"][1]["full"] == true);
  CHECK(doc["estimated_generic_rank"] == 2);
  CHECK(doc["seed"] == 42);
}

TEST_CASE("als document") {
  const Json doc = als_json(
      typical_rank_sample(Format{{2, 2, 2}}, 4, 5, 2, 200, 1e-6, 42));
  CHECK(doc["format"] == Json::array({2, 2, 2}));
  CHECK(doc["r"] == 4);
  CHECK(doc["samples"] == 5);
  CHECK(doc["restarts"] == 2);
  CHECK(doc["tol"] == 1e-6);
  CHECK(doc["residuals"].size() == 5);
  CHECK(doc["success_count"] == doc["residuals"].size());
  CHECK(doc["success_fraction"] == 1.0);
  CHECK(doc["seed"] == 42);
}

TEST_CASE("tensor documents") {
  const DenseTensor<double> td({2, 2}, {1.0, 0.5, -2.0, 0.0});
  const Json d = tensor_json(td);
  CHECK(d["dims"] == Json::array({2, 2}));
  CHECK(d["values"][1] == 0.5);

  DenseTensor<Rational> tr({2, 2});
  tr.values()[0] = Rational(3);
  tr.values()[1] = Rational(1, 2);
  tr.values()[2] = Rational(-1, 2);
  tr.values()[3] = Rational(0);
  const Json r = tensor_json(tr);
  CHECK(r["values"][0] == "3/1");
  CHECK(r["values"][1] == "1/2");
  CHECK(r["values"][2] == "-1/2");
  CHECK(r["values"][3] == "0/1");
}
