#include "infonet/flownet.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "infonet/detail/compensated.hpp"

namespace infonet::flownet {

FlowNetwork::FlowNetwork(std::vector<std::string> node_labels,
                         std::vector<double> flows,
                         logunits::Dimension flow_dimension, int flow_scale)
    : labels_(std::move(node_labels)),
      flows_(std::move(flows)),
      dimension_(std::move(flow_dimension)),
      scale_(flow_scale) {
  std::size_t n = labels_.size();
  if (n == 0) {
    throw NetworkError("network has no nodes");
  }
  if (flows_.size() != n * n) {
    throw NetworkError("flow matrix is not square: " +
                       std::to_string(flows_.size()) + " cells for " +
                       std::to_string(n) + " nodes");
  }
  detail::CompensatedSum total;
  for (double t : flows_) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw NetworkError("flows must be finite and >= 0");
    }
    total.add(t);
  }
  total_ = total.value();
  if (total_ <= 0.0) {
    throw NetworkError("degenerate network: total throughput is zero");
  }
}

std::size_t FlowNetwork::link_count() const {
  std::size_t links = 0;
  for (double t : flows_) {
    if (t > 0.0) ++links;
  }
  return links;
}

dist::JointDistribution to_joint(const FlowNetwork& n) {
  std::vector<double> probs(n.flows().size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = n.flows()[i] / n.total();
  }
  return {n.node_labels(), n.node_labels(), std::move(probs)};
}

VitalityPoint vitality_coordinates(const FlowNetwork& n) {
  infometrics::MeasureBits m = infometrics::measure_bits(to_joint(n));
  // The accumulated measures can undershoot zero by an ulp or two; the
  // coordinates are clamped so they respect n, c >= 1 identically.
  return {std::exp2(std::max(0.0, m.mi)),
          std::exp2(std::max(0.0, m.vi) / 2.0)};
}

NetworkReport indices(const FlowNetwork& n, const logunits::InfoUnit& unit) {
  dist::JointDistribution joint = to_joint(n);
  infometrics::MeasureBits bits = infometrics::measure_bits(joint);

  NetworkReport report;
  report.t_total = {n.total(), n.flow_scale(), n.flow_dimension()};
  report.measures = infometrics::measure_report(bits, unit);
  report.ascendency = logunits::flow_times_info(report.t_total,
                                                report.measures.mi);
  report.reserve = logunits::flow_times_info(report.t_total,
                                             report.measures.vi);
  report.capacity = logunits::flow_times_info(report.t_total,
                                              report.measures.h_joint);
  report.vitality = {std::exp2(std::max(0.0, bits.mi)),
                     std::exp2(std::max(0.0, bits.vi) / 2.0)};
  return report;
}

infometrics::AsymmetryReport network_asymmetry(const FlowNetwork& n,
                                               const logunits::InfoUnit& unit) {
  return infometrics::asymmetry_report(to_joint(n), unit);
}

FlowNetwork prune_isolated(const FlowNetwork& n) {
  std::size_t size = n.size();
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < size; ++i) {
    bool active = false;
    for (std::size_t j = 0; j < size && !active; ++j) {
      active = n.flow(i, j) > 0.0 || n.flow(j, i) > 0.0;
    }
    if (active) kept.push_back(i);
  }

  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (std::size_t i : kept) {
    labels.push_back(n.node_labels()[i]);
  }
  std::vector<double> flows(kept.size() * kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = 0; b < kept.size(); ++b) {
      flows[a * kept.size() + b] = n.flow(kept[a], kept[b]);
    }
  }
  return {std::move(labels), std::move(flows), n.flow_dimension(),
          n.flow_scale()};
}

}  // namespace infonet::flownet
