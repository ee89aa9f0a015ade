#include "minpaths/graph_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "minpaths/error.hpp"

namespace minpaths {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::uint32_t parse_index(std::string_view field, std::size_t line,
                          const char* name) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("invalid ") + name + " '" +
                               std::string(field) + "'");
  }
  return value;
}

}  // namespace

ColouredEdgeGraph read_graph(std::istream& in, FixedScale scale) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::vector<ColouredEdgeGraph::EdgeSpec> specs;
  std::set<std::tuple<VertexId, VertexId, ColourId>> slots;

  while (std::getline(in, raw)) {
    ++line_no;
    auto fields = split_fields(raw);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!have_header) {
      if (fields.size() != 2) {
        throw ParseError(line_no, "expected header 'n k'");
      }
      n = parse_index(fields[0], line_no, "vertex count");
      k = parse_index(fields[1], line_no, "colour count");
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      if (k == 0) throw ParseError(line_no, "colour count must be positive");
      have_header = true;
      continue;
    }

    if (fields.size() != 4) {
      throw ParseError(line_no, "expected edge 'u v c w', got " +
                                    std::to_string(fields.size()) + " fields");
    }
    VertexId u = parse_index(fields[0], line_no, "source vertex");
    VertexId v = parse_index(fields[1], line_no, "target vertex");
    ColourId c = parse_index(fields[2], line_no, "colour");
    if (u >= n || v >= n) {
      throw ParseError(line_no, "vertex outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (c >= k) {
      throw ParseError(line_no, "colour " + std::to_string(c) + " >= k = " +
                                    std::to_string(k));
    }
    if (fields[3].front() == '-') {
      throw ParseError(line_no, "weight must be positive");
    }
    Wide units = 0;
    try {
      units = scale.parse(fields[3]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (units <= 0) throw ParseError(line_no, "weight must be positive");
    if (!slots.emplace(u, v, c).second) {
      throw ParseError(line_no, "duplicate edge (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ", colour " +
                                    std::to_string(c) + ")");
    }
    specs.push_back({u, v, c, Weight(static_cast<std::int64_t>(units))});
  }
  if (!have_header) throw ParseError(line_no, "missing header 'n k'");
  return ColouredEdgeGraph(n, k, specs, scale);
}

ColouredEdgeGraph read_graph(std::string_view text, FixedScale scale) {
  std::istringstream in{std::string(text)};
  return read_graph(in, scale);
}

void write_graph(std::ostream& out, const ColouredEdgeGraph& graph,
                 const WriteOptions& options) {
  out << graph.vertex_count() << ' ' << graph.colour_count() << '\n';
  for (const std::string& comment : options.comments) out << "# " << comment << '\n';
  for (const Edge& e : graph.edges()) {
    out << e.source << ' ' << e.target << ' ' << e.colour << ' '
        << graph.scale().format(e.weight.units()) << '\n';
  }
}

std::string write_graph(const ColouredEdgeGraph& graph,
                        const WriteOptions& options) {
  std::ostringstream out;
  write_graph(out, graph, options);
  return out.str();
}

}  // namespace minpaths
