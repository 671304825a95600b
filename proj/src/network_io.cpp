#include "infonet/network_io.hpp"

#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace infonet::network_io {

namespace {

struct Field {
  std::string text;
  std::size_t column = 0;  // 1-based offset of the field start in the line
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<Field> split_fields(const std::string& line, char delim) {
  std::vector<Field> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(delim, start);
    std::string raw = line.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    fields.push_back({trim(raw), start + 1});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return fields;
}

double parse_flow_value(const Field& field, std::size_t line_no) {
  double value = 0.0;
  const std::string& s = field.text;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("not a number: '" + s + "'", line_no, field.column);
  }
  return value;
}

struct Line {
  std::string text;
  std::size_t number = 0;
};

std::vector<Line> content_lines(const std::string& text, NetworkFile& file) {
  std::vector<Line> lines;
  std::istringstream stream(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string stripped = trim(raw);
    if (stripped.empty()) continue;

    if (stripped.front() == '#') {
      // The one meaningful comment: "# unit: <dimension-string>".
      std::string body = trim(stripped.substr(1));
      if (body.rfind("unit:", 0) == 0) {
        if (file.has_unit) {
          throw ParseError("duplicate unit pragma", line_no, 1);
        }
        std::string spec = body.substr(5);
        std::size_t spec_offset = raw.find(body.substr(0, 5)) + 5;
        try {
          auto parsed = logunits::parse_dimension(spec);
          file.flow_dimension = parsed.dimension;
          file.flow_scale = parsed.scale;
          file.has_unit = true;
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line_no, spec_offset + e.column());
        }
      }
      continue;
    }
    lines.push_back({raw, line_no});
  }
  return lines;
}

void parse_edge_list(const std::vector<Line>& lines, NetworkFile& file,
                     const std::string& origin) {
  const Line& header = lines.front();
  auto head = split_fields(header.text, ',');
  if (head.size() != 3 || head[0].text != "from" || head[1].text != "to" ||
      head[2].text != "flow") {
    throw ParseError("expected header 'from,to,flow' in " + origin,
                     header.number, 1);
  }

  struct Edge {
    std::string from;
    std::string to;
    double flow;
  };
  std::vector<Edge> edges;
  std::map<std::string, std::size_t> index;
  std::vector<std::string> labels;
  std::map<std::pair<std::string, std::string>, std::size_t> seen;

  auto node = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    auto fields = split_fields(line.text, ',');
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, got " +
                           std::to_string(fields.size()),
                       line.number, 1);
    }
    if (fields[0].text.empty() || fields[1].text.empty()) {
      std::size_t col = fields[fields[0].text.empty() ? 0 : 1].column;
      throw ParseError("empty node label", line.number, col);
    }
    double flow = parse_flow_value(fields[2], line.number);

    auto key = std::make_pair(fields[0].text, fields[1].text);
    auto [it, inserted] = seen.emplace(key, line.number);
    if (!inserted) {
      throw ParseError("duplicate edge '" + key.first + " -> " + key.second +
                           "' (first at line " + std::to_string(it->second) +
                           ")",
                       line.number, 1);
    }
    node(key.first);
    node(key.second);
    edges.push_back({key.first, key.second, flow});
  }

  std::size_t n = labels.size();
  file.node_labels = labels;
  file.flows.assign(n * n, 0.0);
  for (const auto& e : edges) {
    file.flows[index[e.from] * n + index[e.to]] = e.flow;
  }
}

void parse_matrix(const std::vector<Line>& lines, NetworkFile& file,
                  const std::string& origin) {
  const Line& header = lines.front();
  auto head = split_fields(header.text, '\t');
  if (head.size() < 2) {
    throw ParseError("matrix header needs at least one destination label in " +
                         origin,
                     header.number, 1);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < head.size(); ++i) {
    if (head[i].text.empty()) {
      throw ParseError("empty destination label", header.number,
                       head[i].column);
    }
    labels.push_back(head[i].text);
  }

  std::size_t n = labels.size();
  if (lines.size() - 1 != n) {
    throw ParseError("matrix has " + std::to_string(lines.size() - 1) +
                         " rows for " + std::to_string(n) + " columns",
                     lines.back().number, 1);
  }

  file.node_labels = labels;
  file.flows.assign(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& line = lines[r + 1];
    auto fields = split_fields(line.text, '\t');
    if (fields.size() != n + 1) {
      throw ParseError("expected " + std::to_string(n + 1) +
                           " fields, got " + std::to_string(fields.size()),
                       line.number, 1);
    }
    if (fields[0].text != labels[r]) {
      throw ParseError("row label '" + fields[0].text +
                           "' does not match column label '" + labels[r] + "'",
                       line.number, fields[0].column);
    }
    for (std::size_t c = 0; c < n; ++c) {
      file.flows[r * n + c] = parse_flow_value(fields[c + 1], line.number);
    }
  }
}

}  // namespace

NetworkFile parse_network_text(const std::string& text,
                               const std::string& origin) {
  NetworkFile file;
  std::vector<Line> lines = content_lines(text, file);
  if (lines.empty()) {
    return file;  // no data rows; to_network rejects it as degenerate
  }
  if (lines.front().text.find('\t') != std::string::npos) {
    file.layout = Layout::matrix;
    parse_matrix(lines, file, origin);
  } else {
    file.layout = Layout::edge_list;
    parse_edge_list(lines, file, origin);
  }
  return file;
}

NetworkFile read_network_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file '" + path + "'", 0, 0);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network_text(buffer.str(), path);
}

flownet::FlowNetwork to_network(const NetworkFile& file) {
  if (file.node_labels.empty()) {
    throw NetworkError("network is empty: no nodes");
  }
  return {file.node_labels, file.flows, file.flow_dimension, file.flow_scale};
}

}  // namespace infonet::network_io
