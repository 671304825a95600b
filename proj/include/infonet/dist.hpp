#ifndef INFONET_DIST_HPP
#define INFONET_DIST_HPP

// Finite discrete probability objects: marginals, joint distributions over
// two random variables Y (rows) and Z (columns), and three-variable joints
// for metric tests. All values are immutable after construction; an object
// that exists satisfies its invariants.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "infonet/errors.hpp"

namespace infonet::dist {

// Absolute tolerance on probability totals.
inline constexpr double kSumTolerance = 1e-9;

class Marginal {
 public:
  // Throws DistributionError unless every prob is >= 0 and the total is 1
  // within kSumTolerance.
  Marginal(std::vector<std::string> labels, std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double prob(std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

// Joint probability matrix p_ij over outcomes of Y (rows) and Z (columns).
// Rectangular shapes are allowed. Marginal sums are computed once at
// construction with compensated accumulation.
class JointDistribution {
 public:
  JointDistribution(std::vector<std::string> row_labels,
                    std::vector<std::string> col_labels,
                    std::vector<double> probs);  // row-major rows x cols

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  double prob(std::size_t i, std::size_t j) const {
    return probs_[i * cols() + j];
  }
  const std::vector<double>& cells() const { return probs_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  // p_i. and p_.j
  const std::vector<double>& row_sums() const { return row_sums_; }
  const std::vector<double>& col_sums() const { return col_sums_; }
  Marginal row_marginal() const { return {row_labels_, row_sums_}; }
  Marginal col_marginal() const { return {col_labels_, col_sums_}; }

  JointDistribution transposed() const;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<double> probs_;
  std::vector<double> row_sums_;
  std::vector<double> col_sums_;
};

// Joint distribution over three random variables, axis order (0, 1, 2),
// stored axis-0 major. Supports the metric-axiom tests.
class TripleJoint {
 public:
  TripleJoint(std::array<std::vector<std::string>, 3> labels,
              std::vector<double> probs);

  std::size_t size(int axis) const { return labels_[axis].size(); }
  double prob(std::size_t i, std::size_t j, std::size_t k) const {
    return probs_[(i * size(1) + j) * size(2) + k];
  }
  const std::vector<double>& cells() const { return probs_; }
  const std::vector<std::string>& labels(int axis) const {
    return labels_[axis];
  }

 private:
  std::array<std::vector<std::string>, 3> labels_;
  std::vector<double> probs_;
};

// probs = w / sum(w). Throws DistributionError on any negative or
// non-finite weight, or when the total is zero.
JointDistribution from_weights(const std::vector<std::vector<double>>& w,
                               std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels);
JointDistribution from_weights(const std::vector<std::vector<double>>& w);

// Cell (i,j) = p_i. * p_.j; the joint a pair of independent variables with
// the same marginals would have.
JointDistribution product_of_marginals(const JointDistribution& j);

// Uniform draw from the probability simplex over rows x cols cells
// (independent standard-exponential variates, normalized). Deterministic
// given the engine state; the seed overload is a convenience.
JointDistribution sample_joint(std::size_t rows, std::size_t cols,
                               std::mt19937_64& rng);
JointDistribution sample_joint(std::size_t rows, std::size_t cols,
                               std::uint64_t seed);

Marginal sample_marginal(std::size_t n, std::mt19937_64& rng);

TripleJoint sample_triple(std::size_t n0, std::size_t n1, std::size_t n2,
                          std::mt19937_64& rng);

// The coupling of a marginal with itself: diagonal cells carry the marginal,
// off-diagonal cells are zero. Its variation of information is zero.
JointDistribution diagonal_coupling(const Marginal& m);

// Marginalizes out the remaining axis; result rows follow axis_a, columns
// axis_b. Equal axes throw ArgumentError.
JointDistribution pairwise_joint(const TripleJoint& t, int axis_a, int axis_b);

}  // namespace infonet::dist

#endif  // INFONET_DIST_HPP
