#pragma once

// File formats: graphs (JSON or edge list), drawings, track and queue layouts,
// and OBJ export.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "updraw/errors.hpp"
#include "updraw/geometry.hpp"
#include "updraw/graph.hpp"
#include "updraw/layouts.hpp"

namespace updraw::io {

using nlohmann::json;

inline std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParams("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParams("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------------------
// Graphs

inline json graph_to_json(const Dag &g) {
  json arcs = json::array();
  for (const Arc &a : g.arcs()) arcs.push_back({a.tail, a.head});
  json j{{"n", g.n()}, {"arcs", arcs}};
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

inline Dag graph_from_json(const json &j) {
  try {
    std::vector<Arc> arcs;
    for (const auto &a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw InvalidParams("arc must be [tail, head]");
      arcs.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    Dag g(j.at("n").get<int>(), arcs);
    if (j.contains("name")) g.set_name(j["name"].get<std::string>());
    return g;
  } catch (const json::exception &e) {
    throw InvalidParams(std::string("graph JSON: ") + e.what());
  }
}

/// Edge list: one "tail head" pair per line; blank lines and lines starting
/// with '#' are skipped; n is one more than the largest id.
inline Dag graph_from_edge_list(std::string_view text) {
  std::vector<Arc> arcs;
  int n = 0, line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long t, h;
    std::string rest;
    if (!(ls >> t >> h) || (ls >> rest))
      throw InvalidParams("line " + std::to_string(line_no) + ": expected \"tail head\"");
    if (t < 0 || h < 0 || t > 1'000'000'000 || h > 1'000'000'000)
      throw InvalidParams("line " + std::to_string(line_no) + ": vertex id out of range");
    arcs.push_back({static_cast<int>(t), static_cast<int>(h)});
    n = std::max({n, static_cast<int>(t) + 1, static_cast<int>(h) + 1});
  }
  return Dag(n, arcs);
}

inline Dag parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error &e) {
      throw InvalidParams(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return graph_from_edge_list(text);
}

inline Dag read_graph(const std::string &path) { return parse_graph(read_text(path)); }

// ---------------------------------------------------------------------------
// Drawings

struct DrawingFile {
  Drawing3D drawing;
  bool upward = false;
};

inline json point_json(const GridPoint &p) { return json::array({p.x, p.y, p.z}); }

inline GridPoint point_from_json(const json &j) {
  if (!j.is_array() || j.size() != 3) throw InvalidParams("point must be [x, y, z]");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

inline json drawing_to_json(const Drawing3D &d, bool upward) {
  json vertices = json::array();
  for (int v = 0; v < static_cast<int>(d.points.size()); ++v) {
    const auto &p = d.points[v];
    vertices.push_back({{"id", v}, {"x", p.x}, {"y", p.y}, {"z", p.z}});
  }
  json bends = json::array();
  for (const auto &[arc, chain] : d.bends) {
    json pts = json::array();
    for (const auto &p : chain) pts.push_back(point_json(p));
    bends.push_back({{"arc", {arc.first, arc.second}}, {"points", pts}});
  }
  json j{{"vertices", vertices}, {"bends", bends}, {"upward", upward}};
  if (!d.points.empty()) {
    const auto box = bounding_box(d);
    j["box"] = {{"X", box.X}, {"Y", box.Y}, {"Z", box.Z}, {"volume", box.volume()}};
  }
  return j;
}

inline DrawingFile drawing_from_json(const json &j) {
  try {
    DrawingFile f;
    const auto &vs = j.at("vertices");
    f.drawing.points.assign(vs.size(), {});
    std::vector<char> seen(vs.size(), 0);
    for (const auto &v : vs) {
      const auto id = v.at("id").get<long long>();
      if (id < 0 || id >= static_cast<long long>(vs.size()) || seen[id])
        throw InvalidParams("vertex ids must be 0..n-1, each once");
      seen[id] = 1;
      f.drawing.points[id] = {v.at("x").get<std::int64_t>(), v.at("y").get<std::int64_t>(),
                              v.at("z").get<std::int64_t>()};
    }
    if (j.contains("bends"))
      for (const auto &b : j["bends"]) {
        const auto &arc = b.at("arc");
        auto &chain = f.drawing.bends[{arc.at(0).get<int>(), arc.at(1).get<int>()}];
        for (const auto &p : b.at("points")) chain.push_back(point_from_json(p));
      }
    f.upward = j.value("upward", false);
    return f;
  } catch (const json::exception &e) {
    throw InvalidParams(std::string("drawing JSON: ") + e.what());
  }
}

inline DrawingFile parse_drawing(std::string_view text) {
  try {
    return drawing_from_json(json::parse(text));
  } catch (const json::parse_error &e) {
    throw InvalidParams(std::string("drawing JSON: ") + e.what());
  }
}

/// Wavefront OBJ: one vertex record per point, one polyline per arc.
inline std::string drawing_to_obj(const Dag &g, const Drawing3D &d) {
  std::ostringstream out;
  int next = 1;
  for (const auto &p : d.points) {
    out << "v " << p.x << ' ' << p.y << ' ' << p.z << '\n';
    ++next;
  }
  for (const Arc &a : g.arcs()) {
    std::vector<int> ids{a.tail + 1};
    if (auto it = d.bends.find({a.tail, a.head}); it != d.bends.end())
      for (const auto &p : it->second) {
        out << "v " << p.x << ' ' << p.y << ' ' << p.z << '\n';
        ids.push_back(next++);
      }
    ids.push_back(a.head + 1);
    out << 'l';
    for (int id : ids) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Layouts

inline json track_layout_to_json(const TrackLayout &tl) {
  json tracks = json::array();
  for (const auto &[id, members] : tl.tracks()) tracks.push_back({{"id", id}, {"vertices", members}});
  return {{"tracks", tracks}, {"upward", tl.upward}};
}

inline TrackLayout track_layout_from_json(const json &j, int n) {
  try {
    std::map<int, std::vector<int>> tracks;
    for (const auto &t : j.at("tracks")) {
      auto &members = tracks[t.at("id").get<int>()];
      for (const auto &v : t.at("vertices")) members.push_back(v.get<int>());
    }
    return TrackLayout::from_tracks(n, tracks, j.value("upward", false));
  } catch (const json::exception &e) {
    throw InvalidParams(std::string("track layout JSON: ") + e.what());
  }
}

inline json queue_layout_to_json(const Dag &g, const QueueLayout &ql) {
  json arcs = json::array();
  for (int i = 0; i < g.m(); ++i)
    arcs.push_back({{"arc", {g.arc(i).tail, g.arc(i).head}}, {"queue", ql.queue[i]}});
  return {{"order", ql.order.at}, {"arcs", arcs}, {"upward", ql.upward}};
}

inline QueueLayout queue_layout_from_json(const json &j, const Dag &g) {
  try {
    QueueLayout ql;
    ql.order = VertexOrder::from_sequence(j.at("order").get<std::vector<int>>());
    if (ql.order.size() != g.n()) throw InvalidParams("order length differs from n");
    ql.order.topological = ql.order.is_topological_for(g);
    ql.upward = j.value("upward", false);
    ql.queue.assign(g.m(), -1);
    for (const auto &a : j.at("arcs")) {
      const int t = a.at("arc").at(0).get<int>(), h = a.at("arc").at(1).get<int>();
      int found = -1;
      for (int i = 0; i < g.m(); ++i)
        if (g.arc(i).tail == t && g.arc(i).head == h) found = i;
      if (found < 0) throw InvalidParams("queue layout names a missing arc");
      ql.queue[found] = a.at("queue").get<int>();
    }
    for (int q : ql.queue)
      if (q < 0) throw MissingAssignment("arc without a queue");
    return ql;
  } catch (const json::exception &e) {
    throw InvalidParams(std::string("queue layout JSON: ") + e.what());
  }
}

/// A track layout file is recognised by its "tracks" key.
inline bool is_track_layout_json(const json &j) { return j.is_object() && j.contains("tracks"); }

} // namespace updraw::io
