#ifndef INFONET_DETAIL_COMPENSATED_HPP
#define INFONET_DETAIL_COMPENSATED_HPP

namespace infonet::detail {

// Kahan compensated accumulator. Entropy sums over many near-cancelling
// p*log(p) terms lose a few digits under naive accumulation; this keeps the
// running error near one ulp of the result.
class CompensatedSum {
 public:
  void add(double x) {
    double y = x - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace infonet::detail

#endif  // INFONET_DETAIL_COMPENSATED_HPP
