#include "infonet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "infonet/dist.hpp"
#include "infonet/errors.hpp"
#include "infonet/flownet.hpp"
#include "infonet/infometrics.hpp"
#include "infonet/logunits.hpp"

namespace infonet::harness {

namespace {

using infonet::dist::JointDistribution;
using infonet::dist::TripleJoint;
using infonet::logunits::unit_bit;
using infonet::logunits::unit_registry;

// Running maximum of one identity's residual, with a snapshot of whichever
// distribution produced it.
class Tracker {
 public:
  Tracker(std::string name, double tolerance, bool relative) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
    result_.relative = relative;
  }

  void observe(double residual, std::size_t rows, std::size_t cols,
               const std::vector<double>& cells) {
    if (residual > result_.max_residual || first_) {
      result_.max_residual = std::max(residual, 0.0);
      if (residual > 0.0) {
        result_.worst_rows = rows;
        result_.worst_cols = cols;
        result_.worst_case = cells;
      }
      first_ = false;
    }
  }

  IdentityResult finish() const {
    IdentityResult r = result_;
    r.pass = r.max_residual <= r.tolerance;
    return r;
  }

 private:
  IdentityResult result_;
  bool first_ = true;
};

double relative_gap(double actual, double expected) {
  if (expected == 0.0) return actual == 0.0 ? 0.0 : 1.0;
  return std::abs(actual - expected) / std::abs(expected);
}

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

HarnessReport run_identity_suite(const HarnessConfig& config) {
  if (config.trials < 1) {
    throw ArgumentError("harness: trials must be >= 1");
  }
  if (!(config.tolerance_bits > 0.0)) {
    throw ArgumentError("harness: tolerance must be > 0");
  }
  if (config.sizes.empty()) {
    throw ArgumentError("harness: at least one joint size is required");
  }
  for (const auto& [r, c] : config.sizes) {
    if (r < 1 || c < 1) {
      throw ArgumentError("harness: joint sizes must be at least 1x1");
    }
  }

  const double tol = config.tolerance_bits;
  const double tight = std::min(1e-12, tol);
  std::mt19937_64 rng(config.seed);

  Tracker gibbs("gibbs_nonnegativity", tol, false);
  Tracker transpose("mi_transpose_symmetry", tight, false);
  Tracker chain_yz("chain_rule_y_given_z", tol, false);
  Tracker chain_zy("chain_rule_z_given_y", tol, false);
  Tracker decomposition("entropy_decomposition", tol, false);
  Tracker additivity("entropy_additivity", tol, false);
  Tracker covariance("unit_covariance", tight, true);
  Tracker monotonicity("shannon_uniform_monotonicity", tol, false);
  Tracker vi_nonneg("vi_nonnegativity", tol, false);
  Tracker vi_swap("vi_symmetry_axis_swap", tol, false);
  Tracker vi_triangle("vi_triangle_inequality", tol, false);
  Tracker vi_diagonal("vi_identity_diagonal", tight, false);
  Tracker net_decomposition("network_decomposition", tol, true);
  Tracker intensive("intensivity_measures", tol, false);
  Tracker extensive("intensivity_extensive_scaling", tol, true);
  Tracker vitality_product("vitality_consistency", tol, true);
  Tracker vitality_units("vitality_unit_independence", 0.0, false);

  // Pairwise identities on sampled joints.
  for (std::size_t t = 0; t < config.trials; ++t) {
    auto [rows, cols] = config.sizes[t % config.sizes.size()];
    JointDistribution j = dist::sample_joint(rows, cols, rng);
    infometrics::MeasureBits m = infometrics::measure_bits(j);

    gibbs.observe(std::max(0.0, -m.mi), rows, cols, j.cells());
    transpose.observe(m.residuals.transpose_symmetry, rows, cols, j.cells());
    chain_yz.observe(m.residuals.chain_rule_y_given_z, rows, cols, j.cells());
    chain_zy.observe(m.residuals.chain_rule_z_given_y, rows, cols, j.cells());
    decomposition.observe(m.residuals.decomposition, rows, cols, j.cells());

    JointDistribution independent = dist::product_of_marginals(j);
    double h_prod = infometrics::joint_entropy(independent, unit_bit()).value;
    additivity.observe(std::abs(h_prod - m.h_y - m.h_z), rows, cols,
                       j.cells());

    // One registry unit per trial; across trials every unit meets every
    // measure. The contract is a single end-of-computation conversion, so
    // the unit value must match (bit value / bits_per_unit) to an ulp.
    const auto& unit = unit_registry()[t % unit_registry().size()];
    const double bpu = unit.bits_per_unit;
    double worst = 0.0;
    auto check = [&](double in_unit, double bits) {
      worst = std::max(worst, relative_gap(in_unit, bits / bpu));
    };
    check(infometrics::entropy(j.row_marginal(), unit).value, m.h_y);
    check(infometrics::entropy(j.col_marginal(), unit).value, m.h_z);
    check(infometrics::joint_entropy(j, unit).value, m.h_joint);
    check(infometrics::mutual_information(j, unit).value, m.mi);
    check(infometrics::conditional_entropy(
              j, infometrics::Direction::y_given_z, unit)
              .value,
          m.h_y_given_z);
    check(infometrics::conditional_entropy(
              j, infometrics::Direction::z_given_y, unit)
              .value,
          m.h_z_given_y);
    check(infometrics::variation_of_information(j, unit).value, m.vi);
    covariance.observe(worst, rows, cols, j.cells());
  }

  // Monotonicity of uniform entropy is deterministic; ties count as
  // violations (the sequence must be strictly increasing).
  {
    double prev = 0.0;
    double residual = 0.0;
    for (std::size_t n = 1; n <= 64; ++n) {
      std::vector<double> probs(n, 1.0 / static_cast<double>(n));
      dist::Marginal uniform(numbered_labels(n), probs);
      double h = infometrics::entropy(uniform, unit_bit()).value;
      if (n > 1 && !(h > prev)) {
        residual = std::max(residual, std::max(prev - h, 2.0 * tol));
      }
      prev = h;
    }
    monotonicity.observe(residual, 0, 0, {});
  }

  // Metric axioms on three-variable joints, alternating 2x2x2 and 3x3x3.
  for (std::size_t t = 0; t < config.trials; ++t) {
    std::size_t n = t % 2 == 0 ? 2 : 3;
    TripleJoint triple = dist::sample_triple(n, n, n, rng);
    JointDistribution j01 = dist::pairwise_joint(triple, 0, 1);
    JointDistribution j02 = dist::pairwise_joint(triple, 0, 2);
    JointDistribution j12 = dist::pairwise_joint(triple, 1, 2);
    double v01 = infometrics::variation_of_information(j01, unit_bit()).value;
    double v02 = infometrics::variation_of_information(j02, unit_bit()).value;
    double v12 = infometrics::variation_of_information(j12, unit_bit()).value;

    std::size_t rows = n;
    std::size_t cols = n * n;
    double neg = -std::min({v01, v02, v12});
    vi_nonneg.observe(std::max(0.0, neg), rows, cols, triple.cells());

    int pair[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    int a = pair[t % 3][0];
    int b = pair[t % 3][1];
    double forward = infometrics::variation_of_information(
                         dist::pairwise_joint(triple, a, b), unit_bit())
                         .value;
    double backward = infometrics::variation_of_information(
                          dist::pairwise_joint(triple, b, a), unit_bit())
                          .value;
    vi_swap.observe(std::abs(forward - backward), rows, cols, triple.cells());

    double slack = std::min({v01 + v12 - v02,  // d(0,2) via 1
                             v02 + v12 - v01,  // d(0,1) via 2
                             v01 + v02 - v12});
    vi_triangle.observe(std::max(0.0, -slack), rows, cols, triple.cells());

    dist::Marginal m = dist::sample_marginal(2 + t % 7, rng);
    JointDistribution d = dist::diagonal_coupling(m);
    double vd = infometrics::variation_of_information(d, unit_bit()).value;
    vi_diagonal.observe(std::abs(vd), m.size(), m.size(), d.cells());
  }

  // Flow-scaled identities on random networks, sizes cycling 2..12. Flows
  // carry a per-trial power-of-ten magnitude so the sums are exercised away
  // from totals near 1.
  const logunits::InfoUnit nat = logunits::parse_info_unit("nat");
  for (std::size_t t = 0; t < config.trials; ++t) {
    std::size_t k = 2 + t % 11;
    JointDistribution j = dist::sample_joint(k, k, rng);
    double magnitude = logunits::pow10i(static_cast<int>(t % 9) - 4);
    std::vector<double> flows = j.cells();
    for (auto& f : flows) f *= magnitude;
    flownet::FlowNetwork net(j.row_labels(), flows);

    flownet::NetworkReport base = flownet::indices(net, unit_bit());
    double c_ref = std::max(std::abs(base.capacity.value), 1e-300);
    net_decomposition.observe(
        std::abs(base.ascendency.value + base.reserve.value -
                 base.capacity.value) /
            c_ref,
        k, k, flows);

    for (double lambda : {1e-3, 1e6}) {
      std::vector<double> scaled = flows;
      for (auto& f : scaled) f *= lambda;
      flownet::FlowNetwork scaled_net(j.row_labels(), scaled);
      flownet::NetworkReport r = flownet::indices(scaled_net, unit_bit());

      double worst_measure = std::max(
          {std::abs(r.measures.mi.value - base.measures.mi.value),
           std::abs(r.measures.vi.value - base.measures.vi.value),
           std::abs(r.measures.h_joint.value - base.measures.h_joint.value),
           relative_gap(r.vitality.effective_roles,
                        base.vitality.effective_roles),
           relative_gap(r.vitality.effective_connectance,
                        base.vitality.effective_connectance)});
      intensive.observe(worst_measure, k, k, flows);

      // The extensive products scale by lambda; the residual is normalized
      // by lambda * capacity so trials with near-zero mutual information do
      // not inflate a ratio of two tiny numbers.
      double denom = lambda * c_ref;
      double worst_extensive = std::max(
          {std::abs(r.ascendency.value - lambda * base.ascendency.value),
           std::abs(r.reserve.value - lambda * base.reserve.value),
           std::abs(r.capacity.value - lambda * base.capacity.value)});
      extensive.observe(worst_extensive / denom, k, k, flows);
    }

    double n_eff = base.vitality.effective_roles;
    double c_eff = base.vitality.effective_connectance;
    double two_h = std::exp2(base.measures.h_joint.value *
                             unit_bit().bits_per_unit);
    vitality_product.observe(
        std::abs(n_eff * c_eff * c_eff - two_h) / two_h, k, k, flows);

    flownet::NetworkReport in_nat = flownet::indices(net, nat);
    double unit_gap =
        std::max(std::abs(in_nat.vitality.effective_roles - n_eff),
                 std::abs(in_nat.vitality.effective_connectance - c_eff));
    vitality_units.observe(unit_gap, k, k, flows);
  }

  HarnessReport report;
  report.config = config;
  for (const Tracker* t :
       {&gibbs, &transpose, &chain_yz, &chain_zy, &decomposition, &additivity,
        &covariance, &monotonicity, &vi_nonneg, &vi_swap, &vi_triangle,
        &vi_diagonal, &net_decomposition, &intensive, &extensive,
        &vitality_product, &vitality_units}) {
    report.results.push_back(t->finish());
    report.all_pass = report.all_pass && report.results.back().pass;
  }
  return report;
}

}  // namespace infonet::harness
