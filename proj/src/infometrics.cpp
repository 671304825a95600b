#include "infonet/infometrics.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "infonet/detail/compensated.hpp"

namespace infonet::infometrics {

namespace {

using detail::CompensatedSum;

InfoQuantity in_unit(double bits, const InfoUnit& unit) {
  return {bits / unit.bits_per_unit, unit};
}

double entropy_bits(const std::vector<double>& probs) {
  CompensatedSum h;
  for (double p : probs) {
    if (p > 0.0) h.add(-p * std::log2(p));
  }
  return h.value();
}

double mutual_information_bits(const dist::JointDistribution& j) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < j.rows(); ++i) {
    for (std::size_t k = 0; k < j.cols(); ++k) {
      double p = j.prob(i, k);
      if (p > 0.0) {
        sum.add(p * std::log2(p / (j.row_sums()[i] * j.col_sums()[k])));
      }
    }
  }
  return sum.value();
}

double conditional_entropy_bits(const dist::JointDistribution& j,
                                Direction direction) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < j.rows(); ++i) {
    for (std::size_t k = 0; k < j.cols(); ++k) {
      double p = j.prob(i, k);
      if (p > 0.0) {
        double known = direction == Direction::y_given_z ? j.col_sums()[k]
                                                         : j.row_sums()[i];
        sum.add(p * std::log2(known / p));
      }
    }
  }
  return sum.value();
}

double variation_of_information_bits(const dist::JointDistribution& j) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < j.rows(); ++i) {
    for (std::size_t k = 0; k < j.cols(); ++k) {
      double p = j.prob(i, k);
      if (p > 0.0) {
        sum.add(p * std::log2(j.row_sums()[i] * j.col_sums()[k] / (p * p)));
      }
    }
  }
  return sum.value();
}

}  // namespace

InfoQuantity information_content(double p, const InfoUnit& unit) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("information_content: probability must lie in [0, 1]");
  }
  if (p == 0.0) {
    return {std::numeric_limits<double>::infinity(), unit};
  }
  if (p == 1.0) {
    return {0.0, unit};
  }
  return in_unit(-std::log2(p), unit);
}

InfoQuantity entropy(const dist::Marginal& m, const InfoUnit& unit) {
  return in_unit(entropy_bits(m.probs()), unit);
}

InfoQuantity joint_entropy(const dist::JointDistribution& j,
                           const InfoUnit& unit) {
  return in_unit(entropy_bits(j.cells()), unit);
}

InfoQuantity mutual_information(const dist::JointDistribution& j,
                                const InfoUnit& unit) {
  return in_unit(mutual_information_bits(j), unit);
}

InfoQuantity conditional_entropy(const dist::JointDistribution& j,
                                 Direction direction, const InfoUnit& unit) {
  return in_unit(conditional_entropy_bits(j, direction), unit);
}

InfoQuantity variation_of_information(const dist::JointDistribution& j,
                                      const InfoUnit& unit) {
  return in_unit(variation_of_information_bits(j), unit);
}

AsymmetryReport asymmetry_report(const dist::JointDistribution& j,
                                 const InfoUnit& unit) {
  double hy_z = conditional_entropy_bits(j, Direction::y_given_z);
  double hz_y = conditional_entropy_bits(j, Direction::z_given_y);

  AsymmetryReport report;
  report.h_y_given_z = in_unit(hy_z, unit);
  report.h_z_given_y = in_unit(hz_y, unit);
  report.smaller =
      hz_y < hy_z ? Direction::z_given_y : Direction::y_given_z;

  double small = std::min(hy_z, hz_y);
  double large = std::max(hy_z, hz_y);
  if (large == 0.0) {
    // Both sides vanish: the variables determine each other, 1 : 1.
    report.ratio_small = 1.0;
    report.ratio_large = 1.0;
  } else if (small == 0.0) {
    report.degenerate = true;
    report.ratio_small = 0.0;
    report.ratio_large = 1.0;
  } else {
    report.ratio_small = 1.0;
    report.ratio_large = large / small;
  }
  return report;
}

SurprisalGap surprisal_bound_counterexample(const dist::JointDistribution& j) {
  SurprisalGap best;
  bool first = true;
  for (std::size_t i = 0; i < j.rows(); ++i) {
    for (std::size_t k = 0; k < j.cols(); ++k) {
      double gap = j.prob(i, k) - j.row_sums()[i] * j.col_sums()[k];
      if (first || gap < best.min_gap) {
        best = {gap, i, k};
        first = false;
      }
    }
  }
  return best;
}

MeasureBits measure_bits(const dist::JointDistribution& j) {
  MeasureBits m;
  m.h_y = entropy_bits(j.row_sums());
  m.h_z = entropy_bits(j.col_sums());
  m.h_joint = entropy_bits(j.cells());
  m.mi = mutual_information_bits(j);
  m.h_y_given_z = conditional_entropy_bits(j, Direction::y_given_z);
  m.h_z_given_y = conditional_entropy_bits(j, Direction::z_given_y);
  m.vi = variation_of_information_bits(j);

  m.residuals.chain_rule_y_given_z =
      std::abs(m.h_joint - m.h_y_given_z - m.h_z);
  m.residuals.chain_rule_z_given_y =
      std::abs(m.h_joint - m.h_z_given_y - m.h_y);
  m.residuals.decomposition = std::abs(m.h_joint - m.mi - m.vi);
  m.residuals.transpose_symmetry =
      std::abs(m.mi - mutual_information_bits(j.transposed()));
  return m;
}

IdentityResiduals identity_residuals(const dist::JointDistribution& j) {
  return measure_bits(j).residuals;
}

MeasureReport measure_report(const dist::JointDistribution& j,
                             const InfoUnit& unit) {
  return measure_report(measure_bits(j), unit);
}

MeasureReport measure_report(const MeasureBits& m, const InfoUnit& unit) {
  MeasureReport report;
  report.unit = unit;
  report.h_y = in_unit(m.h_y, unit);
  report.h_z = in_unit(m.h_z, unit);
  report.h_joint = in_unit(m.h_joint, unit);
  report.mi = in_unit(m.mi, unit);
  report.h_y_given_z = in_unit(m.h_y_given_z, unit);
  report.h_z_given_y = in_unit(m.h_z_given_y, unit);
  report.vi = in_unit(m.vi, unit);
  report.residual_chain_rule = std::max(m.residuals.chain_rule_y_given_z,
                                        m.residuals.chain_rule_z_given_y);
  report.residual_decomposition = m.residuals.decomposition;
  return report;
}

}  // namespace infonet::infometrics
