#include "upse/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "upse/exact_geometry.hpp"

namespace upse {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

int get_int(const json& j) {
  if (!j.is_number_integer()) throw InputError("expected an integer, got " + j.dump());
  return j.get<int>();
}

Rational get_decimal(const json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  // Floats go through their shortest round-trip spelling.
  if (j.is_number()) return parse_decimal(j.dump());
  throw InputError("expected a coordinate, got " + j.dump());
}

}  // namespace

Digraph parse_graph(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs") || !j["arcs"].is_array())
    throw InputError("graph file needs \"n\" and \"arcs\"");
  const int n = get_int(j["n"]);
  if (n < 0) throw InputError("n must be non-negative");
  std::vector<Arc> arcs;
  for (const json& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2) throw InputError("arc must be [tail, head]");
    arcs.push_back({get_int(a[0]), get_int(a[1])});
  }
  return Digraph(n, std::move(arcs));
}

std::string format_graph(const Digraph& g) {
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
  return json{{"n", g.size()}, {"arcs", arcs}}.dump() + "\n";
}

ConvexPointSet parse_points(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InputError("point-set file must be an object");
  if (j.contains("tags")) {
    if (!j["tags"].is_string()) throw InputError("\"tags\" must be a string");
    return ConvexPointSet::from_string(j["tags"].get<std::string>());
  }
  if (j.contains("points")) {
    std::vector<RationalPoint> pts;
    for (const json& p : j["points"]) {
      if (!p.is_array() || p.size() != 2) throw InputError("point must be [x, y]");
      pts.push_back({get_decimal(p[0]), get_decimal(p[1])});
    }
    return from_coordinates(pts).set;
  }
  throw InputError("point-set file needs \"tags\" or \"points\"");
}

std::string format_points(const ConvexPointSet& s) {
  return json{{"tags", s.to_string()}}.dump() + "\n";
}

Embedding parse_embedding(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("map") || !j["map"].is_array())
    throw InputError("embedding file needs \"map\"");
  Embedding e;
  for (const json& p : j["map"]) {
    const int rank = get_int(p);
    if (rank < 1) throw InputError("point ids in the embedding file start at 1");
    e.map.push_back(rank - 1);
  }
  return e;
}

std::string format_embedding(const Embedding& e) {
  json map = json::array();
  for (PointId p : e.map) map.push_back(p + 1);
  return json{{"map", map}}.dump() + "\n";
}

std::string render_svg(const Digraph& g, const ConvexPointSet& s, const Embedding& e) {
  constexpr double size = 600, margin = 50;
  const auto pts = realize_coordinates(s);
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : pts) {
    // Unit circle to canvas; y grows downwards in SVG.
    const double x = static_cast<double>(p.x), y = static_cast<double>(p.y);
    xy.emplace_back(margin + (x + 1) / 2 * (size - 2 * margin),
                    size - margin - (y + 1) / 2 * (size - 2 * margin));
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"16\" refY=\"5\" markerWidth=\"8\" "
         "markerHeight=\"8\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Arc& a : g.arcs()) {
    const auto [x1, y1] = xy[e.map[a.tail]];
    const auto [x2, y2] = xy[e.map[a.head]];
    out << "<line class=\"arc\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"#333\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }
  std::vector<Vertex> at(s.size(), -1);
  for (Vertex v = 0; v < static_cast<int>(e.map.size()); ++v) at[e.map[v]] = v;
  for (PointId p = 0; p < s.size(); ++p) {
    const auto [x, y] = xy[p];
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\""
        << (s.side(p) == Side::Left ? "#1f77b4" : "#d62728") << "\"/>\n";
    const bool left = s.side(p) == Side::Left;
    out << "<text x=\"" << (left ? x - 10 : x + 10) << "\" y=\"" << y + 4 << "\" font-size=\"11\" "
        << "font-family=\"sans-serif\" text-anchor=\"" << (left ? "end" : "start") << "\">";
    if (at[p] >= 0) out << 'v' << at[p] << ' ';
    out << '(' << p + 1 << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace upse
