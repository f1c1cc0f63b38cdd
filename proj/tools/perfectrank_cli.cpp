// Command-line front end: analysis, certification, witness dumping, and
// numerical probes, each emitting one JSON document. Exit statuses: 0 for
// success (including a PERFECT_CERTIFIED verdict), 2 for NOT_APPLICABLE,
// 3 for FULL_RANK_FAILED, 1 for usage or internal errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "perfectrank/certify.hpp"
#include "perfectrank/format.hpp"
#include "perfectrank/json_io.hpp"
#include "perfectrank/probe.hpp"
#include "perfectrank/witness.hpp"

namespace {

using perfectrank::Json;

void emit(const Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

void write_csv(const std::string& path, const std::vector<double>& residuals) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open CSV file: " + path);
  out << "sample,residual\n";
  char buf[64];
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i, residuals[i]);
    out << buf;
  }
}

int status_of(perfectrank::Verdict v) {
  switch (v) {
    case perfectrank::Verdict::kPerfectCertified:
      return 0;
    case perfectrank::Verdict::kNotApplicable:
      return 2;
    case perfectrank::Verdict::kFullRankFailed:
      return 3;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "perfectrank: decide and certify whether the largest mode size of a "
      "tensor format is its smallest typical rank"};
  app.require_subcommand(1);

  std::string format_text;
  std::string out_path;
  std::uint64_t seed = 42;

  auto* bounds_cmd =
      app.add_subcommand("bounds", "closed-form typical-rank bracket");
  auto* perfect_cmd =
      app.add_subcommand("perfect", "closed-form perfectness verdict");
  auto* certify_cmd = app.add_subcommand(
      "certify", "build the witness and certify the exact Jacobian rank");
  auto* witness_cmd =
      app.add_subcommand("witness", "emit the witness support set");
  bool dump_groups = false;
  witness_cmd->add_flag("--dump", dump_groups,
                        "also emit the factor vectors of every group");

  auto* generic_cmd = app.add_subcommand(
      "generic-rank", "estimate the generic rank from exact Jacobian ranks "
                      "at random integer points");
  std::int64_t max_r = 0;  // 0 = up to the closed-form upper bound
  std::int64_t trials = 3;
  generic_cmd->add_option("--max-r", max_r,
                          "largest candidate rank (default: upper bound)");
  generic_cmd->add_option("--trials", trials, "random points per rank");

  auto* als_cmd = app.add_subcommand(
      "probe-als", "Monte-Carlo rank-r fit rate over Gaussian tensors");
  std::int64_t rank = 0;  // 0 = largest mode size
  std::int64_t samples = 100;
  std::int64_t restarts = 5;
  std::int64_t max_iters = 300;
  double tol = 1e-6;
  std::string csv_path;
  als_cmd->add_option("--rank", rank, "target rank (default: largest mode)");
  als_cmd->add_option("--samples", samples, "number of Gaussian tensors");
  als_cmd->add_option("--restarts", restarts, "ALS runs per sample");
  als_cmd->add_option("--max-iters", max_iters, "ALS sweep cap per run");
  als_cmd->add_option("--tol", tol, "success threshold on the residual");
  als_cmd->add_option("--csv", csv_path, "write per-sample residuals as CSV");

  for (auto* cmd : {bounds_cmd, perfect_cmd, certify_cmd, witness_cmd,
                    generic_cmd, als_cmd}) {
    cmd->add_option("format", format_text, "tensor format, e.g. 3x3x5")
        ->required();
    cmd->add_option("--out", out_path, "write the JSON document to a file");
  }
  for (auto* cmd : {generic_cmd, als_cmd}) {
    cmd->add_option("--seed", seed, "root seed for all randomness");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const perfectrank::Format f =
        perfectrank::canonicalize(perfectrank::parse_format(format_text));

    if (bounds_cmd->parsed()) {
      emit(perfectrank::bounds_json(f, perfectrank::typical_rank_bounds(f)),
           out_path);
      return 0;
    }
    if (perfect_cmd->parsed()) {
      emit(perfectrank::perfect_json(f, perfectrank::is_perfect(f)), out_path);
      return 0;
    }
    if (certify_cmd->parsed()) {
      const perfectrank::Certificate cert = perfectrank::certify_perfect(f);
      emit(perfectrank::certificate_json(cert), out_path);
      return status_of(cert.verdict);
    }
    if (witness_cmd->parsed()) {
      if (!perfectrank::is_perfect(f).perfect) {
        // No witness exists; emit the NOT_APPLICABLE certificate instead.
        const perfectrank::Certificate cert = perfectrank::certify_perfect(f);
        emit(perfectrank::certificate_json(cert), out_path);
        return status_of(cert.verdict);
      }
      Json doc = perfectrank::witness_json(perfectrank::build_witness(f));
      if (!dump_groups) doc.erase("groups");
      emit(doc, out_path);
      return 0;
    }
    if (generic_cmd->parsed()) {
      const auto bounds = perfectrank::typical_rank_bounds(f);
      const std::int64_t limit = max_r > 0 ? max_r : bounds.upper;
      emit(perfectrank::probe_json(
               perfectrank::generic_rank_probe(f, limit, trials, seed)),
           out_path);
      return 0;
    }
    if (als_cmd->parsed()) {
      const std::int64_t target = rank > 0 ? rank : f.dims.back();
      const perfectrank::AlsReport report = perfectrank::typical_rank_sample(
          f, target, samples, restarts, max_iters, tol, seed);
      if (!csv_path.empty()) write_csv(csv_path, report.residuals);
      emit(perfectrank::als_json(report), out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
