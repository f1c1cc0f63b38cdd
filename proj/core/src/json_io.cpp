#include "perfectrank/json_io.hpp"

namespace perfectrank {
namespace {

Json tuples_json(const std::vector<IndexTuple>& tuples) {
  Json arr = Json::array();
  for (const IndexTuple& t : tuples) arr.push_back(t);
  return arr;
}

}  // namespace

Json bounds_json(const Format& f, const BoundsReport& rep) {
  Json doc;
  doc["format"] = f.dims;
  doc["lower"] = rep.lower;
  doc["upper"] = rep.upper;
  doc["q"] = rep.q;
  doc["max_dim"] = rep.max_dim;
  doc["product_rest"] = rep.product_rest;
  return doc;
}

Json perfect_json(const Format& f, const PerfectReport& rep) {
  Json doc;
  doc["format"] = f.dims;
  doc["perfect"] = rep.perfect;
  doc["q"] = rep.q;
  doc["interval"] = Json::array({rep.interval_lo, rep.interval_hi});
  return doc;
}

Json certificate_json(const Certificate& cert) {
  Json doc;
  doc["format"] = cert.format.dims;
  doc["r"] = cert.r;
  doc["q"] = cert.q;
  doc["support"] = tuples_json(cert.support.tuples);
  doc["jacobian"] = {{"rows", cert.jacobian_rows},
                     {"cols", cert.jacobian_cols},
                     {"rank", cert.certified_rank}};
  doc["verdict"] = std::string(to_string(cert.verdict));
  doc["digest"] = cert.digest;
  doc["primes"] = cert.primes;
  doc["version"] = cert.version;
  return doc;
}

Json witness_json(const WitnessPoint& w) {
  Json doc;
  doc["format"] = w.format.dims;
  doc["r"] = static_cast<std::int64_t>(w.groups.size());
  doc["q"] = perfect_threshold_q(w.format);
  doc["support"] = tuples_json(w.support.tuples);
  Json groups = Json::array();
  for (const auto& group : w.groups) {
    Json vectors = Json::array();
    for (const auto& vec : group) vectors.push_back(vec);
    groups.push_back(vectors);
  }
  doc["groups"] = groups;
  return doc;
}

Json probe_json(const ProbeReport& rep) {
  Json doc;
  doc["format"] = rep.format.dims;
  Json records = Json::array();
  for (const RankRecord& rec : rep.records) {
    Json entry;
    entry["r"] = rec.r;
    entry["rank"] = rec.best_rank;
    entry["full"] = rec.full;
    entry["trials"] = rec.trials;
    records.push_back(entry);
  }
  doc["records"] = records;
  doc["estimated_generic_rank"] = rep.estimated_generic_rank;
  doc["seed"] = rep.seed;
  return doc;
}

Json als_json(const AlsReport& rep) {
  Json doc;
  doc["format"] = rep.format.dims;
  doc["r"] = rep.r;
  doc["samples"] = rep.samples;
  doc["restarts"] = rep.restarts;
  doc["max_iters"] = rep.max_iters;
  doc["tol"] = rep.tol;
  doc["residuals"] = rep.residuals;
  doc["success_count"] = rep.success_count;
  doc["success_fraction"] =
      static_cast<double>(rep.success_count) / static_cast<double>(rep.samples);
  doc["seed"] = rep.seed;
  return doc;
}

Json tensor_json(const DenseTensor<double>& t) {
  Json doc;
  doc["dims"] = t.dims();
  doc["values"] = t.values();
  return doc;
}

Json tensor_json(const DenseTensor<Rational>& t) {
  Json doc;
  doc["dims"] = t.dims();
  Json values = Json::array();
  for (const Rational& v : t.values()) {
    values.push_back(v.get_num().get_str() + "/" + v.get_den().get_str());
  }
  doc["values"] = values;
  return doc;
}

}  // namespace perfectrank
