// infonet: entropy, mutual information and variation of information on
// discrete joints and weighted flow networks, with units kept honest.
//
// Subcommands: analyze | convert | check | counterexample | vitality.
// Exit codes: 0 success, 1 identity violation, 2 parse error, 3 degenerate
// input, 4 dimension mismatch.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "infonet/dist.hpp"
#include "infonet/errors.hpp"
#include "infonet/flownet.hpp"
#include "infonet/harness.hpp"
#include "infonet/infometrics.hpp"
#include "infonet/logunits.hpp"
#include "infonet/network_io.hpp"
#include "infonet/version.hpp"

namespace {

using infonet::dist::JointDistribution;
using infonet::infometrics::AsymmetryReport;
using infonet::infometrics::Direction;
using infonet::logunits::DimQuantity;
using infonet::logunits::FlowInfoQuantity;
using infonet::logunits::InfoQuantity;
using nlohmann::json;

std::string format_sig(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
  return buf;
}

// JSON has no infinity literal; surprisal of an impossible event is spelled
// out as the string "inf" instead of nlohmann's default null.
json json_number(double v) {
  if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
  return json(v);
}

std::string info_text(const InfoQuantity& q, int precision) {
  return format_sig(q.value, precision) + " " + q.unit.symbol;
}

std::string dim_text(const DimQuantity& q, int precision) {
  auto fu = infonet::logunits::format_dim_unit(q.dimension, q.scale);
  double value = q.value * infonet::logunits::pow10i(fu.residual_scale);
  std::string text = format_sig(value, precision);
  if (!fu.text.empty()) text += " " + fu.text;
  return text;
}

std::string flow_info_text(const FlowInfoQuantity& q, int precision) {
  auto fu =
      infonet::logunits::format_flow_info_unit(q.dimension, q.scale, q.unit);
  double value = q.value * infonet::logunits::pow10i(fu.residual_scale);
  return format_sig(value, precision) + " " + fu.text;
}

json info_json(const InfoQuantity& q) {
  return {{"value", json_number(q.value)}, {"unit", q.unit.symbol}};
}

json dim_json(const DimQuantity& q) {
  auto fu = infonet::logunits::format_dim_unit(q.dimension, q.scale);
  return {{"value",
           json_number(q.value * infonet::logunits::pow10i(fu.residual_scale))},
          {"unit", fu.text}};
}

json flow_info_json(const FlowInfoQuantity& q) {
  auto fu =
      infonet::logunits::format_flow_info_unit(q.dimension, q.scale, q.unit);
  return {{"value",
           json_number(q.value * infonet::logunits::pow10i(fu.residual_scale))},
          {"unit", fu.text}};
}

json tool_json() {
  return {{"name", infonet::kName},
          {"version", infonet::kVersion},
          {"rng", infonet::kRngDescription}};
}

const char* direction_label(Direction d) {
  return d == Direction::y_given_z ? "origin|destination"
                                   : "destination|origin";
}

std::string ratio_text(const AsymmetryReport& a, int precision) {
  return format_sig(a.ratio_small, precision) + " : " +
         format_sig(a.ratio_large, precision);
}

std::string metadata_line() {
  return std::string(infonet::kName) + " " + infonet::kVersion + ", schema " +
         std::to_string(infonet::kSchemaVersion) + ", rng: " +
         infonet::kRngDescription;
}

// ---------------------------------------------------------------------------
// error mapping

int error_code(const std::exception& e) {
  if (dynamic_cast<const infonet::DimensionError*>(&e)) return 4;
  if (dynamic_cast<const infonet::NetworkError*>(&e)) return 3;
  if (dynamic_cast<const infonet::DistributionError*>(&e)) return 3;
  return 2;  // parse errors, unit errors, bad arguments
}

std::string describe_error(const std::exception& e) {
  std::string text = e.what();
  if (const auto* p = dynamic_cast<const infonet::ParseError*>(&e)) {
    if (p->line() > 0) {
      text += " (line " + std::to_string(p->line());
      if (p->column() > 0) text += ", column " + std::to_string(p->column());
      text += ")";
    }
  }
  return text;
}

// ---------------------------------------------------------------------------
// shared option bundle

struct Options {
  std::string input;
  std::vector<std::string> inputs;
  std::string info_unit = "bit";
  int precision = 3;
  bool as_json = false;
  bool prune = false;
  std::uint64_t seed = 0;
  std::size_t trials = 10000;
  std::string sizes = "2x2,3x3,4x7,10x10";
  double tolerance_bits = 1e-9;
  double value = 0.0;
  std::string from_unit;
  std::string to_unit;
  std::string random_shape;
};

infonet::flownet::FlowNetwork load_network(const std::string& path,
                                           bool prune) {
  auto file = infonet::network_io::read_network_file(path);
  auto net = infonet::network_io::to_network(file);
  return prune ? infonet::flownet::prune_isolated(net) : net;
}

std::pair<std::size_t, std::size_t> parse_shape(const std::string& text) {
  std::size_t split = text.find('x');
  std::size_t rows = 0;
  std::size_t cols = 0;
  try {
    if (split != std::string::npos) {
      rows = std::stoull(text.substr(0, split));
      cols = std::stoull(text.substr(split + 1));
    }
  } catch (const std::exception&) {
    rows = 0;
  }
  if (rows < 1 || cols < 1) {
    throw infonet::ParseError(
        "expected a shape like 3x4, got '" + text + "'", 0, 0);
  }
  return {rows, cols};
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(
    const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    std::string item = text.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    if (!item.empty()) sizes.push_back(parse_shape(item));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (sizes.empty()) {
    throw infonet::ParseError("no sizes given", 0, 0);
  }
  return sizes;
}

// ---------------------------------------------------------------------------
// analyze

int run_analyze(const Options& opt) {
  auto unit = infonet::logunits::parse_info_unit(opt.info_unit);
  auto net = load_network(opt.input, opt.prune);
  auto report = infonet::flownet::indices(net, unit);
  auto asym = infonet::flownet::network_asymmetry(net, unit);
  int p = opt.precision;

  if (opt.as_json) {
    json doc = {
        {"schema_version", infonet::kSchemaVersion},
        {"tool", tool_json()},
        {"command", "analyze"},
        {"input", opt.input},
        {"nodes", net.node_labels()},
        {"links", net.link_count()},
        {"unit", unit.symbol},
        {"t_total", dim_json(report.t_total)},
        {"measures",
         {{"h_origin", info_json(report.measures.h_y)},
          {"h_destination", info_json(report.measures.h_z)},
          {"h_joint", info_json(report.measures.h_joint)},
          {"mi", info_json(report.measures.mi)},
          {"h_origin_given_destination", info_json(report.measures.h_y_given_z)},
          {"h_destination_given_origin", info_json(report.measures.h_z_given_y)},
          {"vi", info_json(report.measures.vi)}}},
        {"flow_scaled",
         {{"ascendency", flow_info_json(report.ascendency)},
          {"reserve", flow_info_json(report.reserve)},
          {"capacity", flow_info_json(report.capacity)}}},
        {"asymmetry",
         {{"h_origin_given_destination", info_json(asym.h_y_given_z)},
          {"h_destination_given_origin", info_json(asym.h_z_given_y)},
          {"degenerate", asym.degenerate},
          {"ratio", {asym.ratio_small, asym.ratio_large}},
          {"smaller", direction_label(asym.smaller)}}},
        {"vitality",
         {{"n_effective_roles", report.vitality.effective_roles},
          {"c_effective_connectance", report.vitality.effective_connectance},
          {"exponents", "dimensionless, in bits: n = 2^X, c = 2^(Psi/2)"}}},
        {"residuals_bits",
         {{"chain_rule", report.measures.residual_chain_rule},
          {"decomposition", report.measures.residual_decomposition}}},
    };
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "network: " << opt.input << "\n"
            << "nodes: " << net.size() << ", links: " << net.link_count()
            << "\n"
            << "T..: " << dim_text(report.t_total, p) << "\n\n"
            << "H (joint entropy): " << info_text(report.measures.h_joint, p)
            << "\n"
            << "X (mutual information): " << info_text(report.measures.mi, p)
            << "\n"
            << "Psi (variation of information): "
            << info_text(report.measures.vi, p) << "\n"
            << "H(origin|destination): "
            << info_text(asym.h_y_given_z, p) << "\n"
            << "H(destination|origin): "
            << info_text(asym.h_z_given_y, p) << "\n"
            << "asymmetry ratio: " << ratio_text(asym, p) << " (smaller side: "
            << direction_label(asym.smaller) << ")\n\n"
            << "A (ascendency): " << flow_info_text(report.ascendency, p)
            << "\n"
            << "Phi (reserve): " << flow_info_text(report.reserve, p) << "\n"
            << "C (capacity): " << flow_info_text(report.capacity, p) << "\n\n"
            << "n (effective roles): "
            << format_sig(report.vitality.effective_roles, p) << "\n"
            << "c (effective connectance): "
            << format_sig(report.vitality.effective_connectance, p) << "\n"
            << "vitality exponents are dimensionless, in bits: n = 2^X, "
               "c = 2^(Psi/2)\n\n"
            << "residuals: chain rule "
            << format_sig(report.measures.residual_chain_rule, p)
            << " bit, decomposition "
            << format_sig(report.measures.residual_decomposition, p)
            << " bit\n"
            << metadata_line() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// convert

int run_convert(const Options& opt) {
  auto from = infonet::logunits::parse_unit_expression(opt.from_unit);
  auto to = infonet::logunits::resolved_target(
      from, infonet::logunits::parse_unit_expression(opt.to_unit));
  double converted = infonet::logunits::convert_between(opt.value, from, to);

  if (opt.as_json) {
    json doc = {{"schema_version", infonet::kSchemaVersion},
                {"tool", tool_json()},
                {"command", "convert"},
                {"from", {{"value", json_number(opt.value)},
                          {"unit", infonet::logunits::describe(from)}}},
                {"to", {{"value", json_number(converted)},
                        {"unit", infonet::logunits::describe(to)}}}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::string unit_text = infonet::logunits::describe(to);
  std::cout << format_sig(converted, opt.precision);
  if (unit_text != "dimensionless") std::cout << " " << unit_text;
  std::cout << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// check

std::string sizes_text(
    const std::vector<std::pair<std::size_t, std::size_t>>& sizes) {
  std::string out;
  for (const auto& [r, c] : sizes) {
    if (!out.empty()) out += ",";
    out += std::to_string(r) + "x" + std::to_string(c);
  }
  return out;
}

int run_check(const Options& opt) {
  infonet::harness::HarnessConfig config;
  config.seed = opt.seed;
  config.trials = opt.trials;
  config.sizes = parse_sizes(opt.sizes);
  config.tolerance_bits = opt.tolerance_bits;

  auto report = infonet::harness::run_identity_suite(config);

  std::string reproduce =
      "infonet check --seed " + std::to_string(config.seed) + " --trials " +
      std::to_string(config.trials) + " --sizes " + sizes_text(config.sizes) +
      " --tolerance-bits " + format_sig(config.tolerance_bits, 6);

  if (opt.as_json) {
    json results = json::array();
    for (const auto& r : report.results) {
      json entry = {{"name", r.name},
                    {"max_residual", json_number(r.max_residual)},
                    {"tolerance", json_number(r.tolerance)},
                    {"relative", r.relative},
                    {"pass", r.pass}};
      if (!r.pass) {
        entry["worst_case"] = {{"rows", r.worst_rows},
                               {"cols", r.worst_cols},
                               {"cells", r.worst_case}};
        entry["reproduce"] = reproduce;
      }
      results.push_back(entry);
    }
    json doc = {{"schema_version", infonet::kSchemaVersion},
                {"tool", tool_json()},
                {"command", "check"},
                {"config",
                 {{"seed", config.seed},
                  {"trials", config.trials},
                  {"sizes", sizes_text(config.sizes)},
                  {"tolerance_bits", config.tolerance_bits}}},
                {"results", results},
                {"all_pass", report.all_pass}};
    std::cout << doc.dump(2) << "\n";
    return report.all_pass ? 0 : 1;
  }

  std::cout << "identity suite: seed " << config.seed << ", trials "
            << config.trials << ", sizes " << sizes_text(config.sizes)
            << ", tolerance " << format_sig(config.tolerance_bits, 6)
            << " bits\n";
  for (const auto& r : report.results) {
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] %-32s max residual %-12s (tol %s%s)",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(),
                  format_sig(r.max_residual, 4).c_str(),
                  format_sig(r.tolerance, 4).c_str(),
                  r.relative ? ", relative" : "");
    std::cout << line << "\n";
    if (!r.pass && !r.worst_case.empty()) {
      std::cout << "  worst case (" << r.worst_rows << "x" << r.worst_cols
                << "):\n";
      for (std::size_t i = 0; i < r.worst_rows; ++i) {
        std::cout << "   ";
        for (std::size_t j = 0; j < r.worst_cols; ++j) {
          std::cout << " " << format_sig(r.worst_case[i * r.worst_cols + j], 17);
        }
        std::cout << "\n";
      }
    }
  }
  if (report.all_pass) {
    std::cout << "all identities hold\n";
    return 0;
  }
  std::cout << "identity violation detected\nreproduce: " << reproduce << "\n";
  return 1;
}

// ---------------------------------------------------------------------------
// counterexample

int run_counterexample(const Options& opt) {
  JointDistribution joint = [&]() -> JointDistribution {
    if (!opt.random_shape.empty()) {
      auto [rows, cols] = parse_shape(opt.random_shape);
      return infonet::dist::sample_joint(rows, cols, opt.seed);
    }
    return infonet::flownet::to_joint(load_network(opt.input, false));
  }();

  auto gap = infonet::infometrics::surprisal_bound_counterexample(joint);
  double p = joint.prob(gap.row, gap.col);
  double independent_p =
      joint.row_sums()[gap.row] * joint.col_sums()[gap.col];
  const auto& bit = infonet::logunits::unit_bit();
  auto surprisal = infonet::infometrics::information_content(p, bit);
  auto claimed = infonet::infometrics::information_content(independent_p, bit);
  bool exceeds = gap.min_gap < 0.0;
  int prec = opt.precision;

  if (opt.as_json) {
    json doc = {{"schema_version", infonet::kSchemaVersion},
                {"tool", tool_json()},
                {"command", "counterexample"},
                {"cell", {gap.row, gap.col}},
                {"row_label", joint.row_labels()[gap.row]},
                {"col_label", joint.col_labels()[gap.col]},
                {"p", json_number(p)},
                {"independent_p", json_number(independent_p)},
                {"gap", json_number(gap.min_gap)},
                {"surprisal_bits", json_number(surprisal.value)},
                {"claimed_bound_bits", json_number(claimed.value)},
                {"exceeds_claimed_bound", exceeds}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (!exceeds) {
    std::cout << "no counterexample: exactly independent\n";
    return 0;
  }
  std::cout << "worst cell: (" << joint.row_labels()[gap.row] << ", "
            << joint.col_labels()[gap.col] << ") [row " << gap.row
            << ", column " << gap.col << "]\n"
            << "p_ij        = " << format_sig(p, prec) << "\n"
            << "p_i. * p_.j = " << format_sig(independent_p, prec) << "\n"
            << "gap         = " << format_sig(gap.min_gap, prec) << "\n"
            << "s_ij  = " << info_text(surprisal, prec) << "\n"
            << "s*_ij = " << info_text(claimed, prec)
            << " (the claimed maximum)\n"
            << "the surprisal exceeds the claimed bound\n";
  return 0;
}

// ---------------------------------------------------------------------------
// vitality

int run_vitality(const Options& opt) {
  int exit_code = 0;
  json rows = json::array();
  json errors = json::array();
  if (!opt.as_json) std::cout << "name\tn\tc\n";

  for (const auto& path : opt.inputs) {
    try {
      auto net = load_network(path, opt.prune);
      auto point = infonet::flownet::vitality_coordinates(net);
      if (opt.as_json) {
        rows.push_back({{"name", path},
                        {"n", point.effective_roles},
                        {"c", point.effective_connectance}});
      } else {
        std::cout << path << "\t"
                  << format_sig(point.effective_roles, opt.precision) << "\t"
                  << format_sig(point.effective_connectance, opt.precision)
                  << "\n";
      }
    } catch (const std::exception& e) {
      std::cerr << path << ": error: " << describe_error(e) << "\n";
      errors.push_back({{"name", path}, {"error", describe_error(e)}});
      if (exit_code == 0) exit_code = error_code(e);
    }
  }

  if (opt.as_json) {
    json doc = {{"schema_version", infonet::kSchemaVersion},
                {"tool", tool_json()},
                {"command", "vitality"},
                {"rows", rows},
                {"errors", errors}};
    std::cout << doc.dump(2) << "\n";
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"information measures and flow-network indices in checked "
               "logarithmic units"};
  app.set_version_flag("--version", std::string(infonet::kName) + " " +
                                        infonet::kVersion);
  app.require_subcommand(1);

  auto* analyze =
      app.add_subcommand("analyze", "full report for one network file");
  analyze->add_option("input", opt.input, "CSV edge list or TSV matrix")
      ->required();
  analyze->add_option("--info-unit", opt.info_unit,
                      "bit|byte|nat|dB|cent|CDROM|custom:<b>");
  analyze->add_option("--precision", opt.precision,
                      "significant digits in human output")
      ->check(CLI::Range(1, 17));
  analyze->add_flag("--json", opt.as_json, "machine-readable report");
  analyze->add_flag("--prune-isolated", opt.prune,
                    "drop nodes with zero throughflow");

  auto* convert = app.add_subcommand(
      "convert", "convert between information / flow-information units");
  convert->add_option("value", opt.value, "numeric value")->required();
  convert->add_option("from", opt.from_unit, "source unit string")->required();
  convert->add_option("to", opt.to_unit, "target unit string")->required();
  convert->add_option("--precision", opt.precision)->check(CLI::Range(1, 17));
  convert->add_flag("--json", opt.as_json);

  auto* check =
      app.add_subcommand("check", "randomized identity verification suite");
  check->add_option("--seed", opt.seed, "RNG seed");
  check->add_option("--trials", opt.trials, "trials per suite");
  check->add_option("--sizes", opt.sizes, "joint shapes, e.g. 2x2,3x3");
  check->add_option("--tolerance-bits", opt.tolerance_bits,
                    "residual tolerance in bits");
  check->add_flag("--json", opt.as_json);

  auto* counter = app.add_subcommand(
      "counterexample",
      "surprisal-versus-independence gap of a joint distribution");
  counter->add_option("input", opt.input, "network file");
  counter->add_option("--random", opt.random_shape,
                      "sample a random joint of this shape, e.g. 3x3");
  counter->add_option("--seed", opt.seed, "RNG seed for --random");
  counter->add_option("--precision", opt.precision)->check(CLI::Range(1, 17));
  counter->add_flag("--json", opt.as_json);

  auto* vitality = app.add_subcommand(
      "vitality", "window-of-vitality coordinates, one row per network");
  vitality->add_option("inputs", opt.inputs, "network files")->required();
  vitality->add_option("--precision", opt.precision)->check(CLI::Range(1, 17));
  vitality->add_flag("--json", opt.as_json);
  vitality->add_flag("--prune-isolated", opt.prune);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(opt);
    if (app.got_subcommand(convert)) return run_convert(opt);
    if (app.got_subcommand(check)) return run_check(opt);
    if (app.got_subcommand(counter)) {
      if (opt.input.empty() == opt.random_shape.empty()) {
        throw infonet::ArgumentError(
            "counterexample needs exactly one of an input file or --random");
      }
      return run_counterexample(opt);
    }
    if (app.got_subcommand(vitality)) return run_vitality(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << describe_error(e) << "\n";
    return error_code(e);
  }
  return 0;
}
