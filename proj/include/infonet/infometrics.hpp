#ifndef INFONET_INFOMETRICS_HPP
#define INFONET_INFOMETRICS_HPP

// Information measures over discrete joint distributions, each returned as
// a unit-tagged InfoQuantity. All accumulation happens in base-2 logarithms
// at full double precision, row-major with compensated summation; the unit
// conversion is applied once at the end. Cells with zero probability
// contribute nothing (the 0 log 0 = 0 convention).

#include <cstddef>

#include "infonet/dist.hpp"
#include "infonet/logunits.hpp"

namespace infonet::infometrics {

using logunits::InfoQuantity;
using logunits::InfoUnit;

enum class Direction { y_given_z, z_given_y };

// Shannon information content -log(p) of an event, in the given unit.
// p = 0 yields +infinity (mutually exclusive events), p = 1 yields 0;
// p outside [0,1] throws DomainError.
InfoQuantity information_content(double p, const InfoUnit& unit);

// H(Y) = -sum_i p_i log p_i
InfoQuantity entropy(const dist::Marginal& m, const InfoUnit& unit);

// Entropy of the flattened cell distribution.
InfoQuantity joint_entropy(const dist::JointDistribution& j,
                           const InfoUnit& unit);

// I(Y,Z) = sum_ij p_ij log(p_ij / (p_i. p_.j)) over supported cells.
// Individual terms may be negative; the sum is nonnegative by Gibbs'
// inequality.
InfoQuantity mutual_information(const dist::JointDistribution& j,
                                const InfoUnit& unit);

// H(Y|Z) = sum_ij p_ij log(p_.j / p_ij), and the mirrored direction.
// The two differ in general; the direction is always explicit.
InfoQuantity conditional_entropy(const dist::JointDistribution& j,
                                 Direction direction, const InfoUnit& unit);

// VI(Y,Z) = H(Y|Z) + H(Z|Y) = sum_ij p_ij log(p_i. p_.j / p_ij^2),
// a metric between random variables.
InfoQuantity variation_of_information(const dist::JointDistribution& j,
                                      const InfoUnit& unit);

// Both conditional entropies with their quotient normalized so the smaller
// side is 1 (the presentation "1 : 6"). When exactly one side is zero the
// ratio is structurally degenerate and reported as 0 : 1; when both are
// zero the variables are equal and the ratio is 1 : 1.
struct AsymmetryReport {
  InfoQuantity h_y_given_z;
  InfoQuantity h_z_given_y;
  bool degenerate = false;
  double ratio_small = 1.0;
  double ratio_large = 1.0;
  Direction smaller = Direction::y_given_z;
};

AsymmetryReport asymmetry_report(const dist::JointDistribution& j,
                                 const InfoUnit& unit);

// min over cells of (p_ij - p_i. p_.j) with the first minimizing cell in
// row-major order. A negative gap certifies that the surprisal s_ij exceeds
// the would-be independence bound s*_ij at that cell; the minimum is zero
// exactly when the joint is exactly independent (it can never be positive,
// since the gaps sum to zero).
struct SurprisalGap {
  double min_gap = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};

SurprisalGap surprisal_bound_counterexample(const dist::JointDistribution& j);

// Residuals of the decomposition identities, in bits, every measure taken
// from its own direct summation rather than derived algebraically.
struct IdentityResiduals {
  double chain_rule_y_given_z = 0.0;  // |H(Y,Z) - H(Y|Z) - H(Z)|
  double chain_rule_z_given_y = 0.0;  // |H(Y,Z) - H(Z|Y) - H(Y)|
  double decomposition = 0.0;         // |H(Y,Z) - I - VI|
  double transpose_symmetry = 0.0;    // |I(Y,Z) - I(Z,Y)|
};

IdentityResiduals identity_residuals(const dist::JointDistribution& j);

// Every measure in bits, the internal accumulation currency.
struct MeasureBits {
  double h_y = 0.0;
  double h_z = 0.0;
  double h_joint = 0.0;
  double mi = 0.0;
  double h_y_given_z = 0.0;
  double h_z_given_y = 0.0;
  double vi = 0.0;
  IdentityResiduals residuals;
};

MeasureBits measure_bits(const dist::JointDistribution& j);

// All measures of one system in one chosen unit. residual_chain_rule is the
// larger of the two chain-rule residuals; both residual fields stay in bits.
struct MeasureReport {
  InfoUnit unit;
  InfoQuantity h_y;
  InfoQuantity h_z;
  InfoQuantity h_joint;
  InfoQuantity mi;
  InfoQuantity h_y_given_z;
  InfoQuantity h_z_given_y;
  InfoQuantity vi;
  double residual_chain_rule = 0.0;
  double residual_decomposition = 0.0;
};

MeasureReport measure_report(const dist::JointDistribution& j,
                             const InfoUnit& unit);

// The same report when the bit-denominated measures are already at hand.
MeasureReport measure_report(const MeasureBits& m, const InfoUnit& unit);

}  // namespace infonet::infometrics

#endif  // INFONET_INFOMETRICS_HPP
