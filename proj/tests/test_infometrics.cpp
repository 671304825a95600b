#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "infonet/dist.hpp"
#include "infonet/infometrics.hpp"
#include "infonet/logunits.hpp"

using namespace infonet;
using namespace infonet::infometrics;
using dist::JointDistribution;
using dist::Marginal;
using logunits::parse_info_unit;
using logunits::unit_bit;

namespace {

// Textbook reference implementations with plain summation, kept separate
// from the library's compensated accumulators on purpose.

double ref_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double ref_mi(const JointDistribution& j) {
  double s = 0.0;
  for (std::size_t i = 0; i < j.rows(); ++i)
    for (std::size_t k = 0; k < j.cols(); ++k) {
      double p = j.prob(i, k);
      if (p > 0.0)
        s += p * std::log2(p / (j.row_sums()[i] * j.col_sums()[k]));
    }
  return s;
}

double ref_cond(const JointDistribution& j, bool y_given_z) {
  double s = 0.0;
  for (std::size_t i = 0; i < j.rows(); ++i)
    for (std::size_t k = 0; k < j.cols(); ++k) {
      double p = j.prob(i, k);
      if (p > 0.0) {
        double known = y_given_z ? j.col_sums()[k] : j.row_sums()[i];
        s += p * std::log2(known / p);
      }
    }
  return s;
}

const JointDistribution& hand_joint() {
  static JointDistribution j({"y0", "y1"}, {"z0", "z1", "z2"},
                             {0.125, 0.25, 0.0625,
                              0.0625, 0.25, 0.25});
  return j;
}

}  // namespace

TEST_SUITE("infometrics") {

TEST_CASE("information content") {
  auto bit = unit_bit();
  CHECK(information_content(1.0, bit).value == 0.0);
  CHECK(information_content(0.5, bit).value == 1.0);
  CHECK(information_content(0.25, bit).value == 2.0);
  CHECK(std::isinf(information_content(0.0, bit).value));
  CHECK(information_content(0.0, bit).value > 0.0);

  auto nat = parse_info_unit("nat");
  CHECK(information_content(0.5, nat).value ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(information_content(std::exp(-1.0), nat).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(information_content(-0.1, bit), DomainError);
  CHECK_THROWS_AS(information_content(1.1, bit), DomainError);
  CHECK_THROWS_AS(information_content(std::nan(""), bit), DomainError);
}

TEST_CASE("entropy against the reference sum") {
  auto bit = unit_bit();
  for (std::size_t n : {1, 2, 3, 8, 64}) {
    std::vector<double> u(n, 1.0 / static_cast<double>(n));
    std::vector<std::string> labels(n, "x");
    Marginal m(labels, u);
    CHECK(entropy(m, bit).value ==
          doctest::Approx(std::log2(static_cast<double>(n))).epsilon(1e-14));
  }
  Marginal certain({"only"}, {1.0});
  CHECK(entropy(certain, bit).value == 0.0);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto m = dist::sample_marginal(5, rng);
    CHECK(entropy(m, bit).value ==
          doctest::Approx(ref_entropy(m.probs())).epsilon(1e-13));
  }
}

TEST_CASE("joint measures against the reference sums") {
  auto bit = unit_bit();
  const auto& j = hand_joint();
  CHECK(joint_entropy(j, bit).value ==
        doctest::Approx(ref_entropy(j.cells())).epsilon(1e-14));
  CHECK(mutual_information(j, bit).value ==
        doctest::Approx(ref_mi(j)).epsilon(1e-13));
  CHECK(conditional_entropy(j, Direction::y_given_z, bit).value ==
        doctest::Approx(ref_cond(j, true)).epsilon(1e-13));
  CHECK(conditional_entropy(j, Direction::z_given_y, bit).value ==
        doctest::Approx(ref_cond(j, false)).epsilon(1e-13));
  CHECK(variation_of_information(j, bit).value ==
        doctest::Approx(ref_cond(j, true) + ref_cond(j, false))
            .epsilon(1e-13));

  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    auto s = dist::sample_joint(3, 4, rng);
    CHECK(mutual_information(s, bit).value ==
          doctest::Approx(ref_mi(s)).epsilon(1e-12));
    CHECK(joint_entropy(s, bit).value ==
          doctest::Approx(ref_entropy(s.cells())).epsilon(1e-12));
  }
}

TEST_CASE("mutual information is nonnegative on random joints") {
  auto bit = unit_bit();
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    auto j = dist::sample_joint(2 + t % 4, 2 + (t / 4) % 4, rng);
    CHECK(mutual_information(j, bit).value >= -1e-12);
  }
}

TEST_CASE("independent joints have zero information") {
  auto bit = unit_bit();
  std::mt19937_64 rng(24);
  for (int t = 0; t < 50; ++t) {
    auto j = dist::product_of_marginals(dist::sample_joint(3, 3, rng));
    CHECK(std::abs(mutual_information(j, bit).value) < 1e-12);
    CHECK(variation_of_information(j, bit).value ==
          doctest::Approx(entropy(j.row_marginal(), bit).value +
                          entropy(j.col_marginal(), bit).value)
              .epsilon(1e-12));
  }
}

TEST_CASE("deterministic relation Z = f(Y)") {
  // Four equiprobable origin states mapped two-to-one onto two destination
  // states: knowing Y pins down Z, knowing Z leaves one bit of Y open.
  JointDistribution j({"y0", "y1", "y2", "y3"}, {"z0", "z1"},
                      {0.25, 0.0,
                       0.25, 0.0,
                       0.0, 0.25,
                       0.0, 0.25});
  auto bit = unit_bit();
  CHECK(conditional_entropy(j, Direction::z_given_y, bit).value == 0.0);
  CHECK(conditional_entropy(j, Direction::y_given_z, bit).value ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mutual_information(j, bit).value ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(variation_of_information(j, bit).value ==
        doctest::Approx(1.0).epsilon(1e-15));

  auto report = asymmetry_report(j, bit);
  CHECK(report.degenerate);
  CHECK(report.ratio_small == 0.0);
  CHECK(report.ratio_large == 1.0);
  CHECK(report.smaller == Direction::z_given_y);
}

TEST_CASE("identical variables collapse every distance to zero") {
  Marginal m({"a", "b", "c"}, {0.5, 0.25, 0.25});
  auto j = dist::diagonal_coupling(m);
  auto bit = unit_bit();
  // every summed term is p log 1, so the results are exact zeros
  CHECK(variation_of_information(j, bit).value == 0.0);
  CHECK(conditional_entropy(j, Direction::y_given_z, bit).value == 0.0);
  CHECK(conditional_entropy(j, Direction::z_given_y, bit).value == 0.0);
  CHECK(mutual_information(j, bit).value ==
        doctest::Approx(entropy(m, bit).value).epsilon(1e-15));

  auto report = asymmetry_report(j, bit);
  CHECK_FALSE(report.degenerate);
  CHECK(report.ratio_small == 1.0);
  CHECK(report.ratio_large == 1.0);
}

TEST_CASE("asymmetry ratio normalizes the smaller side to one") {
  auto bit = unit_bit();
  std::mt19937_64 rng(25);
  for (int t = 0; t < 50; ++t) {
    auto j = dist::sample_joint(3, 5, rng);
    auto r = asymmetry_report(j, bit);
    CHECK_FALSE(r.degenerate);
    CHECK(r.ratio_small == 1.0);
    CHECK(r.ratio_large >= 1.0);
    double hy_z = r.h_y_given_z.value;
    double hz_y = r.h_z_given_y.value;
    double expect =
        std::max(hy_z, hz_y) / std::min(hy_z, hz_y);
    CHECK(r.ratio_large == doctest::Approx(expect).epsilon(1e-12));
    if (r.smaller == Direction::y_given_z)
      CHECK(hy_z <= hz_y);
    else
      CHECK(hz_y <= hy_z);
  }
}

TEST_CASE("surprisal bound counterexample on the anticorrelated pair") {
  // Two variables that always agree: the off-diagonal cells are impossible
  // while the independence bound assigns them probability 1/4.
  auto j = dist::diagonal_coupling(Marginal({"a", "b"}, {0.5, 0.5}));
  auto gap = surprisal_bound_counterexample(j);
  CHECK(gap.min_gap == -0.25);
  CHECK(gap.row == 0);
  CHECK(gap.col == 1);

  auto bit = unit_bit();
  CHECK(std::isinf(information_content(j.prob(gap.row, gap.col), bit).value));
  CHECK(information_content(
            j.row_sums()[gap.row] * j.col_sums()[gap.col], bit)
            .value == 2.0);
}

TEST_CASE("exact independence yields a zero gap") {
  auto j = dist::from_weights({{1.0, 1.0}, {1.0, 1.0}});
  auto gap = surprisal_bound_counterexample(j);
  CHECK(gap.min_gap == 0.0);
}

TEST_CASE("the gap is never positive") {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 100; ++t) {
    auto j = dist::sample_joint(2 + t % 3, 2 + t % 5, rng);
    CHECK(surprisal_bound_counterexample(j).min_gap <= 1e-15);
  }
}

TEST_CASE("identity residuals stay at rounding level") {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 200; ++t) {
    auto j = dist::sample_joint(2 + t % 9, 2 + (t / 3) % 9, rng);
    auto r = identity_residuals(j);
    CHECK(r.chain_rule_y_given_z < 1e-12);
    CHECK(r.chain_rule_z_given_y < 1e-12);
    CHECK(r.decomposition < 1e-12);
    CHECK(r.transpose_symmetry < 1e-12);
  }
}

TEST_CASE("measures are unit covariant") {
  const auto& j = hand_joint();
  auto bits = measure_bits(j);
  for (const auto& u : logunits::unit_registry()) {
    CHECK(entropy(j.row_marginal(), u).value ==
          doctest::Approx(bits.h_y / u.bits_per_unit).epsilon(1e-13));
    CHECK(mutual_information(j, u).value ==
          doctest::Approx(bits.mi / u.bits_per_unit).epsilon(1e-13));
    CHECK(variation_of_information(j, u).value ==
          doctest::Approx(bits.vi / u.bits_per_unit).epsilon(1e-13));
    CHECK(joint_entropy(j, u).value ==
          doctest::Approx(bits.h_joint / u.bits_per_unit).epsilon(1e-13));
  }
}

TEST_CASE("measure_report carries one unit through") {
  const auto& j = hand_joint();
  auto nat = parse_info_unit("nat");
  auto report = measure_report(j, nat);
  auto bits = measure_bits(j);

  CHECK(report.unit.symbol == "nat");
  CHECK(report.h_joint.value ==
        doctest::Approx(bits.h_joint * std::log(2.0)).epsilon(1e-13));
  CHECK(report.mi.unit.symbol == "nat");
  CHECK(report.residual_chain_rule ==
        std::max(bits.residuals.chain_rule_y_given_z,
                 bits.residuals.chain_rule_z_given_y));
  CHECK(report.residual_decomposition == bits.residuals.decomposition);

  // the bits overload and the distribution overload agree exactly
  auto direct = measure_report(bits, nat);
  CHECK(direct.h_joint.value == report.h_joint.value);
  CHECK(direct.vi.value == report.vi.value);

  // decomposition H = I + VI holds in the reported unit as well
  CHECK(report.h_joint.value ==
        doctest::Approx(report.mi.value + report.vi.value).epsilon(1e-12));
}

}  // TEST_SUITE
