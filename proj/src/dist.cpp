#include "infonet/dist.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "infonet/detail/compensated.hpp"

namespace infonet::dist {

namespace {

// Uniform double in [0, 1) from the top 53 bits of one engine draw. Spelled
// out rather than delegated to a distribution adapter because the standard
// leaves those implementation-defined and the suite must replay exactly
// from a seed everywhere.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard exponential by inverse CDF; log1p keeps precision near u = 0.
double standard_exponential(std::mt19937_64& rng) {
  return -std::log1p(-uniform01(rng));
}

void check_mass(const std::vector<double>& probs, const char* what) {
  detail::CompensatedSum total;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw DistributionError(std::string(what) +
                              ": probabilities must be finite and >= 0");
    }
    total.add(p);
  }
  if (std::abs(total.value() - 1.0) > kSumTolerance) {
    throw DistributionError(std::string(what) + ": probabilities sum to " +
                            std::to_string(total.value()) + ", expected 1");
  }
}

std::vector<std::string> indexed_labels(const char* stem, std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = stem + std::to_string(i);
  }
  return labels;
}

// Fills cells with normalized exponential variates: a uniform draw from the
// probability simplex. The all-zero draw has probability ~2^-53 per cell but
// would poison the normalization, so it is redrawn.
std::vector<double> simplex_sample(std::size_t cells, std::mt19937_64& rng) {
  std::vector<double> w(cells);
  double total = 0.0;
  do {
    detail::CompensatedSum sum;
    for (auto& x : w) {
      x = standard_exponential(rng);
      sum.add(x);
    }
    total = sum.value();
  } while (total == 0.0);
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace

Marginal::Marginal(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size()) {
    throw ArgumentError("marginal: " + std::to_string(labels_.size()) +
                        " labels for " + std::to_string(probs_.size()) +
                        " probabilities");
  }
  check_mass(probs_, "marginal");
}

JointDistribution::JointDistribution(std::vector<std::string> row_labels,
                                     std::vector<std::string> col_labels,
                                     std::vector<double> probs)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      probs_(std::move(probs)) {
  std::size_t r = row_labels_.size();
  std::size_t c = col_labels_.size();
  if (probs_.size() != r * c) {
    throw ArgumentError("joint: " + std::to_string(probs_.size()) +
                        " cells for shape " + std::to_string(r) + "x" +
                        std::to_string(c));
  }
  check_mass(probs_, "joint");

  // Column sums run over i in ascending order, exactly the order the
  // transposed joint uses for its row sums, so transposition swaps the two
  // marginals bitwise.
  row_sums_.assign(r, 0.0);
  col_sums_.assign(c, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    detail::CompensatedSum row;
    for (std::size_t j = 0; j < c; ++j) {
      row.add(probs_[i * c + j]);
    }
    row_sums_[i] = row.value();
  }
  for (std::size_t j = 0; j < c; ++j) {
    detail::CompensatedSum col;
    for (std::size_t i = 0; i < r; ++i) {
      col.add(probs_[i * c + j]);
    }
    col_sums_[j] = col.value();
  }
}

JointDistribution JointDistribution::transposed() const {
  std::size_t r = rows();
  std::size_t c = cols();
  std::vector<double> flipped(probs_.size());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      flipped[j * r + i] = probs_[i * c + j];
    }
  }
  return {col_labels_, row_labels_, std::move(flipped)};
}

TripleJoint::TripleJoint(std::array<std::vector<std::string>, 3> labels,
                         std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  std::size_t cells = labels_[0].size() * labels_[1].size() * labels_[2].size();
  if (probs_.size() != cells) {
    throw ArgumentError("triple joint: " + std::to_string(probs_.size()) +
                        " cells for shape " + std::to_string(labels_[0].size()) +
                        "x" + std::to_string(labels_[1].size()) + "x" +
                        std::to_string(labels_[2].size()));
  }
  check_mass(probs_, "triple joint");
}

JointDistribution from_weights(const std::vector<std::vector<double>>& w,
                               std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels) {
  if (w.empty() || w.front().empty()) {
    throw DistributionError("weights: empty matrix");
  }
  std::size_t cols = w.front().size();
  detail::CompensatedSum total;
  for (const auto& row : w) {
    if (row.size() != cols) {
      throw ArgumentError("weights: ragged matrix");
    }
    for (double x : row) {
      if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DistributionError("weights: entries must be finite and >= 0");
      }
      total.add(x);
    }
  }
  if (total.value() <= 0.0) {
    throw DistributionError("weights: total is zero");
  }
  std::vector<double> probs;
  probs.reserve(w.size() * cols);
  for (const auto& row : w) {
    for (double x : row) {
      probs.push_back(x / total.value());
    }
  }
  return {std::move(row_labels), std::move(col_labels), std::move(probs)};
}

JointDistribution from_weights(const std::vector<std::vector<double>>& w) {
  std::size_t rows = w.size();
  std::size_t cols = w.empty() ? 0 : w.front().size();
  return from_weights(w, indexed_labels("y", rows), indexed_labels("z", cols));
}

JointDistribution product_of_marginals(const JointDistribution& j) {
  std::vector<double> cells(j.rows() * j.cols());
  for (std::size_t i = 0; i < j.rows(); ++i) {
    for (std::size_t k = 0; k < j.cols(); ++k) {
      cells[i * j.cols() + k] = j.row_sums()[i] * j.col_sums()[k];
    }
  }
  return {j.row_labels(), j.col_labels(), std::move(cells)};
}

JointDistribution sample_joint(std::size_t rows, std::size_t cols,
                               std::mt19937_64& rng) {
  if (rows < 1 || cols < 1) {
    throw ArgumentError("sample_joint: shape must be at least 1x1");
  }
  return {indexed_labels("y", rows), indexed_labels("z", cols),
          simplex_sample(rows * cols, rng)};
}

JointDistribution sample_joint(std::size_t rows, std::size_t cols,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_joint(rows, cols, rng);
}

Marginal sample_marginal(std::size_t n, std::mt19937_64& rng) {
  if (n < 1) {
    throw ArgumentError("sample_marginal: need at least one outcome");
  }
  return {indexed_labels("x", n), simplex_sample(n, rng)};
}

TripleJoint sample_triple(std::size_t n0, std::size_t n1, std::size_t n2,
                          std::mt19937_64& rng) {
  if (n0 < 1 || n1 < 1 || n2 < 1) {
    throw ArgumentError("sample_triple: shape must be at least 1x1x1");
  }
  return {{indexed_labels("a", n0), indexed_labels("b", n1),
           indexed_labels("c", n2)},
          simplex_sample(n0 * n1 * n2, rng)};
}

JointDistribution diagonal_coupling(const Marginal& m) {
  std::size_t n = m.size();
  std::vector<double> cells(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cells[i * n + i] = m.prob(i);
  }
  return {m.labels(), m.labels(), std::move(cells)};
}

JointDistribution pairwise_joint(const TripleJoint& t, int axis_a,
                                 int axis_b) {
  if (axis_a < 0 || axis_a > 2 || axis_b < 0 || axis_b > 2) {
    throw ArgumentError("pairwise_joint: axes must be 0, 1 or 2");
  }
  if (axis_a == axis_b) {
    throw ArgumentError("pairwise_joint: axes must differ");
  }
  std::size_t n0 = t.size(0);
  std::size_t n1 = t.size(1);
  std::size_t n2 = t.size(2);
  std::size_t rows = t.size(axis_a);
  std::size_t cols = t.size(axis_b);
  std::vector<double> cells(rows * cols, 0.0);
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = 0; k < n2; ++k) {
        std::size_t coords[3] = {i, j, k};
        cells[coords[axis_a] * cols + coords[axis_b]] += t.prob(i, j, k);
      }
    }
  }
  return {t.labels(axis_a), t.labels(axis_b), std::move(cells)};
}

}  // namespace infonet::dist
