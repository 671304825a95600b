#ifndef INFONET_NETWORK_IO_HPP
#define INFONET_NETWORK_IO_HPP

// Readers for flow-network files. Two layouts are accepted and detected
// automatically:
//
//   edge list (CSV)    header "from,to,flow", one directed edge per line
//   labeled matrix (TSV)  first row = destination labels, first column =
//                         origin labels, cells = flows
//
// Both allow '#' comment lines. A comment of the form
//
//   # unit: mg C m^-2 y^-1
//
// declares the physical dimension and scale of the flow values. Errors carry
// 1-based line/column positions.

#include <iosfwd>
#include <string>
#include <vector>

#include "infonet/flownet.hpp"
#include "infonet/logunits.hpp"

namespace infonet::network_io {

enum class Layout { edge_list, matrix };

// Raw parse result, prior to any validation of the network itself.
struct NetworkFile {
  Layout layout = Layout::edge_list;
  std::vector<std::string> node_labels;
  std::vector<double> flows;  // row-major, square
  bool has_unit = false;
  logunits::Dimension flow_dimension;
  int flow_scale = 0;
};

// Parse from an in-memory string. `origin` names the source in error text.
NetworkFile parse_network_text(const std::string& text,
                               const std::string& origin = "<input>");

// Read and parse a file; throws ParseError if unreadable.
NetworkFile read_network_file(const std::string& path);

// Validate and wrap into a FlowNetwork. Throws NetworkError when the file is
// degenerate (no nodes, or all flows zero).
flownet::FlowNetwork to_network(const NetworkFile& file);

}  // namespace infonet::network_io

#endif  // INFONET_NETWORK_IO_HPP
