#ifndef INFONET_FLOWNET_HPP
#define INFONET_FLOWNET_HPP

// Weighted flow networks and the flow-scaled ecosystem indices: total
// throughput T.., ascendency A = T.. * X, reserve Phi = T.. * Psi, capacity
// C = T.. * H, and the window-of-vitality coordinates n = 2^X, c = 2^(Psi/2)
// with bit-denominated exponents. The underlying joint distribution is
// p_ij = T_ij / T.. (rows = flow origin Y, columns = destination Z).

#include <cstddef>
#include <string>
#include <vector>

#include "infonet/dist.hpp"
#include "infonet/infometrics.hpp"
#include "infonet/logunits.hpp"

namespace infonet::flownet {

// Square nonnegative flow matrix with shared node labels on both axes.
// Self-loops are permitted; the total must be positive.
class FlowNetwork {
 public:
  FlowNetwork(std::vector<std::string> node_labels,
              std::vector<double> flows,  // row-major n x n
              logunits::Dimension flow_dimension = {}, int flow_scale = 0);

  std::size_t size() const { return labels_.size(); }
  double flow(std::size_t from, std::size_t to) const {
    return flows_[from * size() + to];
  }
  const std::vector<double>& flows() const { return flows_; }
  const std::vector<std::string>& node_labels() const { return labels_; }
  double total() const { return total_; }
  const logunits::Dimension& flow_dimension() const { return dimension_; }
  int flow_scale() const { return scale_; }

  std::size_t link_count() const;  // cells with positive flow

 private:
  std::vector<std::string> labels_;
  std::vector<double> flows_;
  logunits::Dimension dimension_;
  int scale_ = 0;
  double total_ = 0.0;
};

// p_ij = T_ij / T.., labels preserved on both axes.
dist::JointDistribution to_joint(const FlowNetwork& n);

struct VitalityPoint {
  double effective_roles = 1.0;        // n = 2^(mutual information in bits)
  double effective_connectance = 1.0;  // c = 2^(variation of information / 2)
};

// Dimensionless and invariant under uniform flow scaling; the exponents are
// always the bit-denominated measures regardless of any requested unit.
VitalityPoint vitality_coordinates(const FlowNetwork& n);

struct NetworkReport {
  logunits::DimQuantity t_total;
  infometrics::MeasureReport measures;  // the intensive quantities
  logunits::FlowInfoQuantity ascendency;
  logunits::FlowInfoQuantity reserve;
  logunits::FlowInfoQuantity capacity;
  VitalityPoint vitality;
};

// All indices of one network in one chosen unit. The flow-scaled products
// carry dimension x information unit; ascendency + reserve = capacity.
NetworkReport indices(const FlowNetwork& n, const logunits::InfoUnit& unit);

// Conditional-entropy asymmetry of origin given destination and vice versa
// on the normalized joint.
infometrics::AsymmetryReport network_asymmetry(const FlowNetwork& n,
                                               const logunits::InfoUnit& unit);

// Drops nodes with zero total throughflow (zero row and zero column).
FlowNetwork prune_isolated(const FlowNetwork& n);

}  // namespace infonet::flownet

#endif  // INFONET_FLOWNET_HPP
