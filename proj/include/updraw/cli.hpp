#pragma once

// Command-line front end. run() is callable from tests with captured streams.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "updraw/colourings.hpp"
#include "updraw/constructions.hpp"
#include "updraw/errors.hpp"
#include "updraw/geometry.hpp"
#include "updraw/graph.hpp"
#include "updraw/io.hpp"
#include "updraw/layouts.hpp"
#include "updraw/oracle.hpp"
#include "updraw/subdivisions.hpp"

namespace updraw::cli {

using nlohmann::json;

enum ExitCode { ok = 0, usage = 2, precondition = 3, verification = 4 };

inline int exit_code_for(const Error &e) {
  if (dynamic_cast<const NotATree *>(&e) || dynamic_cast<const NotACaterpillar *>(&e) ||
      dynamic_cast<const InvalidLayout *>(&e) || dynamic_cast<const NotTopological *>(&e) ||
      dynamic_cast<const NotStrongStar *>(&e) || dynamic_cast<const NotUpwardPlanar *>(&e) ||
      dynamic_cast<const SpanViolation *>(&e) || dynamic_cast<const NotOneQueue *>(&e) ||
      dynamic_cast<const MissingAssignment *>(&e) || dynamic_cast<const InvalidDrawing *>(&e) ||
      dynamic_cast<const MissingVertexPoint *>(&e) || dynamic_cast<const BudgetExceeded *>(&e))
    return precondition;
  if (dynamic_cast<const DegenerateSegment *>(&e)) return verification;
  return usage;
}

namespace detail {

inline void emit(const std::string &path, const std::string &text, std::ostream &out) {
  if (path.empty() || path == "-") out << text;
  else io::write_text(path, text);
}

inline std::vector<int> parse_sizes(const std::string &csv) {
  std::vector<int> sizes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception &) {
      throw InvalidParams("bad size '" + item + "'");
    }
  }
  if (sizes.empty()) throw InvalidParams("no sizes given");
  return sizes;
}

inline TrackLayout tree_five_tracks(const Dag &g) {
  return wrap(g, tree_span2_layout(g), 2).tracks;
}

inline WrapResult caterpillar_wrapped(const Dag &g) {
  return wrap(g, caterpillar_span1_layout(g), 1);
}

inline TrackLayout load_track_layout(const std::string &path, const Dag &g) {
  return io::track_layout_from_json(json::parse(io::read_text(path)), g.n());
}

inline QueueLayout load_queue_layout(const std::string &path, const Dag &g) {
  return io::queue_layout_from_json(json::parse(io::read_text(path)), g);
}

inline Drawing3D draw_with(const std::string &method, const Dag &g, const std::string &layout_path) {
  auto needs_layout = [&]() {
    if (layout_path.empty()) throw InvalidParams("method " + method + " needs --layout");
    return load_track_layout(layout_path, g);
  };
  if (method == "moment") return moment_curve_drawing(g);
  if (method == "coloured") return coloured_upward_drawing(g, greedy_colouring(g));
  if (method == "longpath") return long_path_drawing(g);
  if (method == "track") {
    const auto tl = layout_path.empty()
                        ? colouring_to_upward_tracks(g, strong_star_colouring(g, StrongStarVariant::sqrt_dm))
                        : load_track_layout(layout_path, g);
    return track_drawing_general(g, tl);
  }
  if (method == "track3") return track_drawing_3(g, needs_layout());
  if (method == "track4") return track_drawing_4(g, needs_layout());
  if (method == "track5") return track_drawing_5(g, needs_layout());
  if (method == "tree") return track_drawing_5(g, tree_five_tracks(g));
  if (method == "caterpillar") return track_drawing_3(g, caterpillar_wrapped(g).tracks);
  if (method == "twobend") {
    const auto ql = layout_path.empty() ? rainbow_queue_layout(g, topological_order(g))
                                        : load_queue_layout(layout_path, g);
    return two_bend_drawing(g, ql);
  }
  if (method == "fourtrack-bends") return four_track_bend_drawing(g, bandwidth_of(g, topological_order(g)));
  throw InvalidParams("unknown method " + method);
}

// ---------------------------------------------------------------------------
// Bench

struct BenchRow {
  std::string suite, family, method;
  int n = 0;
  std::uint64_t seed = 0;
  BoundingBox box{};
  int tracks = -1, queues = -1;
  std::string status = "ok";
  std::string bound;
  bool bound_ok = true;

  json to_json() const {
    json j{{"suite", suite}, {"family", family}, {"method", method}, {"n", n},
           {"seed", seed},   {"status", status}, {"bound", bound},   {"bound_ok", bound_ok}};
    j["box"] = {{"X", box.X}, {"Y", box.Y}, {"Z", box.Z}, {"volume", box.volume()}};
    if (tracks >= 0) j["tracks"] = tracks;
    if (queues >= 0) j["queues"] = queues;
    return j;
  }
};

inline BenchRow make_row(std::string suite, std::string family, std::string method, int n,
                         std::uint64_t seed = 0) {
  BenchRow row;
  row.suite = std::move(suite);
  row.family = std::move(family);
  row.method = std::move(method);
  row.n = n;
  row.seed = seed;
  return row;
}

using BenchTask = std::function<BenchRow()>;

inline void check_drawing(BenchRow &row, const Dag &g, const Drawing3D &d) {
  row.box = g.n() ? bounding_box(d) : BoundingBox{};
  const auto report = verify_drawing(g, d, true);
  if (!report.ok()) row.status = "verification-failed: " + report.summary();
}

inline void check_bound(BenchRow &row, bool holds, std::string text) {
  row.bound = std::move(text);
  row.bound_ok = holds;
  if (!holds && row.status == "ok") row.status = "bound-violated";
}

inline std::vector<BenchTask> table1_tasks(const std::vector<int> &sizes, int seeds) {
  std::vector<BenchTask> tasks;
  for (int n : sizes) {
    tasks.push_back([n] {
      BenchRow row = make_row("table1", "complete", "moment", n);
      const Dag g = complete_dag(n);
      const auto d = moment_curve_drawing(g);
      check_drawing(row, g, d);
      check_bound(row, row.box.X <= 2 * n && row.box.Y <= 2 * n && row.box.Z <= n,
                  "2n x 2n x n");
      return row;
    });
    for (int s = 0; s < seeds; ++s) {
      const std::uint64_t seed = static_cast<std::uint64_t>(s);
      tasks.push_back([n, seed] {
        BenchRow row = make_row("table1", "random", "coloured", n, seed);
        const Dag g = random_dag(n, 2LL * n, seed);
        const auto col = greedy_colouring(g);
        check_drawing(row, g, coloured_upward_drawing(g, col));
        const std::int64_t c = std::max(col.c, 1);
        check_bound(row,
                    row.box.X <= c && row.box.Y <= 4 * c * c * n && row.box.Z <= 4 * c * n,
                    "c x 4c^2n x 4cn, c=" + std::to_string(c));
        return row;
      });
      tasks.push_back([n, seed] {
        BenchRow row = make_row("table1", "random", "longpath", n, seed);
        const Dag g = random_dag(n, 2LL * n, seed);
        check_drawing(row, g, long_path_drawing(g));
        const int l = g.n() ? depth_labels(g).longest : 0;
        check_bound(row, row.box.Z == l, "Z = longest path = " + std::to_string(l));
        return row;
      });
      tasks.push_back([n, seed] {
        BenchRow row = make_row("table1", "random", "strongstar-track", n, seed);
        const Dag g = random_dag(n, 2LL * n, seed);
        const auto tl = colouring_to_upward_tracks(g, strong_star_colouring(g, StrongStarVariant::sqrt_dm));
        row.tracks = tl.track_count();
        if (!verify_track_layout(g, tl).ok()) row.status = "layout-invalid";
        check_drawing(row, g, track_drawing_general(g, tl));
        const std::int64_t t = row.tracks, p = smallest_prime_in(t, 2 * t + 2).p;
        check_bound(row, row.box.X <= t && row.box.Y <= p && row.box.Z <= p * (n + 1),
                    "t x p x p(n+1), t=" + std::to_string(t));
        return row;
      });
    }
  }
  return tasks;
}

inline std::vector<BenchTask> tree_tasks(const std::vector<int> &sizes, int seeds) {
  std::vector<BenchTask> tasks;
  for (int n : sizes)
    for (int s = 0; s < seeds; ++s) {
      const std::uint64_t seed = static_cast<std::uint64_t>(s);
      tasks.push_back([n, seed] {
        BenchRow row = make_row("trees", "tree", "tree", n, seed);
        const Dag g = random_tree(n, seed);
        const auto tl = tree_five_tracks(g);
        row.tracks = tl.track_count();
        if (!verify_track_layout(g, tl).ok()) row.status = "layout-invalid";
        check_drawing(row, g, track_drawing_5(g, tl));
        const std::int64_t zmax = (7LL * n + 4) / 5;
        check_bound(row,
                    row.tracks <= 5 && row.box.X <= 4 && row.box.Y <= 4 && row.box.Z <= zmax &&
                        5 * row.box.volume() <= 112LL * n,
                    "4 x 4 x ceil(7n/5), volume <= 22.4n");
        return row;
      });
      tasks.push_back([n, seed] {
        BenchRow row = make_row("trees", "caterpillar", "caterpillar", n, seed);
        const Dag g = random_caterpillar(n, seed);
        const auto w = caterpillar_wrapped(g);
        row.tracks = w.tracks.track_count();
        row.queues = w.queues.queue_count();
        if (!verify_track_layout(g, w.tracks).ok() || !verify_queue_layout(g, w.queues).ok())
          row.status = "layout-invalid";
        check_drawing(row, g, track_drawing_3(g, w.tracks));
        check_bound(row,
                    row.tracks <= 3 && row.queues <= 1 && row.box.X <= 2 && row.box.Y <= 2 &&
                        row.box.Z <= n,
                    "3 tracks, 1 queue, 2 x 2 x n");
        return row;
      });
    }
  return tasks;
}

inline std::vector<BenchTask> subdivision_tasks(const std::vector<int> &sizes, int seeds) {
  std::vector<BenchTask> tasks;
  for (int n : sizes) {
    tasks.push_back([n] {
      BenchRow row = make_row("subdivisions", "complete", "twobend", n);
      const Dag g = complete_dag(n);
      const auto ql = rainbow_queue_layout(g, topological_order(g));
      row.queues = ql.queue_count();
      check_drawing(row, g, two_bend_drawing(g, ql));
      check_bound(row,
                  row.queues <= n / 2 && row.box.X <= n && row.box.Y <= 2 && row.box.Z <= 2 * n &&
                      row.box.volume() <= 4LL * n * n,
                  "n x 2 x 2n, volume <= 4n^2");
      return row;
    });
    for (int s = 0; s < seeds; ++s) {
      const std::uint64_t seed = static_cast<std::uint64_t>(s);
      tasks.push_back([n, seed] {
        BenchRow row = make_row("subdivisions", "random", "twoqueue", n, seed);
        const Dag g = random_dag(n, 2LL * n, seed);
        const auto cert = bandwidth_of(g, topological_order(g));
        const auto out = two_queue_subdivision(g, cert);
        row.queues = out.queues.queue_count();
        if (!verify_queue_layout(out.sub.graph, out.queues).ok()) row.status = "layout-invalid";
        int worst = 0;
        for (int c : out.sub.per_arc_counts) worst = std::max(worst, c);
        check_bound(row, row.queues <= 2 && worst <= std::max(0, (cert.b - 1) / 2),
                    "2 queues, <= floor((b-1)/2) per arc, b=" + std::to_string(cert.b));
        return row;
      });
      tasks.push_back([n, seed] {
        BenchRow row = make_row("subdivisions", "random", "fourtrack", n, seed);
        const Dag g = random_dag(n, 2LL * n, seed);
        const auto cert = bandwidth_of(g, topological_order(g));
        const auto out = four_track_subdivision(g, cert);
        row.tracks = out.layout.track_count();
        if (!verify_track_layout(out.sub.graph, out.layout).ok()) row.status = "layout-invalid";
        check_drawing(row, g, four_track_bend_drawing(g, cert));
        int worst = 0;
        for (int c : out.sub.per_arc_counts) worst = std::max(worst, c);
        check_bound(row, row.tracks <= 4 && worst <= cert.b,
                    "4 tracks, <= b per arc, b=" + std::to_string(cert.b));
        return row;
      });
    }
  }
  return tasks;
}

inline int worker_count() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("UPDRAW_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) threads = static_cast<unsigned>(v);
  }
  return static_cast<int>(threads);
}

/// Runs tasks on a small pool; results come back in task order.
inline std::vector<BenchRow> run_tasks(const std::vector<BenchTask> &tasks, int threads) {
  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        rows[i] = tasks[i]();
      } catch (const std::exception &e) {
        rows[i].status = std::string("error: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < std::min<int>(threads, static_cast<int>(tasks.size())); ++k) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  return rows;
}

inline void print_table(const std::vector<BenchRow> &rows, std::ostream &out) {
  out << std::left << std::setw(13) << "suite" << std::setw(12) << "family" << std::setw(18)
      << "method" << std::right << std::setw(6) << "n" << std::setw(6) << "seed" << std::setw(20)
      << "box" << std::setw(12) << "volume" << std::setw(7) << "tracks" << std::setw(7)
      << "queues" << "  status / bound\n";
  for (const auto &r : rows) {
    std::ostringstream box;
    box << r.box.X << 'x' << r.box.Y << 'x' << r.box.Z;
    out << std::left << std::setw(13) << r.suite << std::setw(12) << r.family << std::setw(18)
        << r.method << std::right << std::setw(6) << r.n << std::setw(6) << r.seed << std::setw(20)
        << box.str() << std::setw(12) << r.box.volume() << std::setw(7)
        << (r.tracks >= 0 ? std::to_string(r.tracks) : "-") << std::setw(7)
        << (r.queues >= 0 ? std::to_string(r.queues) : "-") << "  " << r.status << " / "
        << r.bound << '\n';
  }
}

} // namespace detail

/// Entry point for the updraw tool. Returns the process exit code.
inline int run(int argc, const char *const *argv, std::ostream &out = std::cout,
               std::ostream &err = std::cerr) {
  CLI::App app{"updraw: upward 3D grid drawings of DAGs"};
  app.require_subcommand(1);

  // gen
  auto *gen = app.add_subcommand("gen", "generate a graph");
  std::string family, out_path;
  GenParams params;
  gen->add_option("family", family, "complete|path|antichain|nested|knprime|star|bipartite|"
                                    "random-bipartite|tree|caterpillar|random|two-claw")
      ->required();
  gen->add_option("--n", params.n, "vertex count or family size");
  gen->add_option("--m", params.m, "arc count for random");
  gen->add_option("--n2", params.n2, "second part size for bipartite families");
  gen->add_option("--seed", params.seed, "random seed");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  // layout
  auto *layout = app.add_subcommand("layout", "compute a track or queue layout");
  std::string graph_path, layout_method = "strongstar";
  layout->add_option("graph", graph_path, "graph file")->required();
  layout->add_option("--method", layout_method,
                     "strongstar|strongstar-m23|tree|tree-span2|caterpillar|caterpillar-queue|"
                     "rainbow");
  layout->add_option("-o,--out", out_path, "output file (default stdout)");

  // draw
  auto *draw = app.add_subcommand("draw", "compute an upward drawing");
  std::string draw_method = "moment", layout_path, export_format, export_path;
  bool no_verify = false;
  draw->add_option("graph", graph_path, "graph file")->required();
  draw->add_option("--method", draw_method,
                   "moment|coloured|longpath|track|track3|track4|track5|tree|caterpillar|"
                   "twobend|fourtrack-bends");
  draw->add_option("--layout", layout_path, "track or queue layout file");
  draw->add_option("-o,--out", out_path, "output file (default stdout)");
  draw->add_flag("--no-verify", no_verify, "skip the exact verifier");
  draw->add_option("--export", export_format, "additional export format (obj)");
  draw->add_option("--export-out", export_path, "export file");

  // subdivide
  auto *subdivide = app.add_subcommand("subdivide", "subdivide arcs to get small layouts");
  std::string sub_kind = "twoqueue", planar_path;
  subdivide->add_option("graph", graph_path, "graph file")->required();
  subdivide->add_option("--kind", sub_kind, "twoqueue|fourtrack|planar");
  subdivide->add_option("--drawing2d", planar_path, "planar drawing {points:[[x,y],...]} for planar");
  subdivide->add_option("-o,--out", out_path, "output file (default stdout)");

  // verify
  auto *verify = app.add_subcommand("verify", "check a drawing or layout");
  std::string drawing_path, tracks_path, queues_path;
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("--drawing", drawing_path, "drawing file");
  verify->add_option("--tracks", tracks_path, "track layout file");
  verify->add_option("--queues", queues_path, "queue layout file");

  // oracle
  auto *oracle_cmd = app.add_subcommand("oracle", "exact values for tiny graphs");
  std::string what = "queue";
  int max_t = 8;
  oracle_cmd->add_option("graph", graph_path, "graph file")->required();
  oracle_cmd->add_option("--what", what, "queue|track|bandwidth");
  oracle_cmd->add_option("--max-t", max_t, "largest track count tried");

  // bench
  auto *bench = app.add_subcommand("bench", "run an experiment suite");
  std::string suite, sizes_csv = "10,50,100", report_path;
  int seeds = 3;
  bench->add_option("suite", suite, "table1|trees|subdivisions")->required();
  bench->add_option("--sizes", sizes_csv, "comma separated sizes");
  bench->add_option("--seeds", seeds, "seeds per size");
  bench->add_option("--report", report_path, "JSON lines report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (*gen) {
      auto f = parse_family(family);
      if (!f) throw InvalidParams("unknown family " + family);
      Dag g = generate(*f, params);
      detail::emit(out_path, io::graph_to_json(g).dump() + "\n", out);
      return ok;
    }

    const Dag g = *bench ? Dag(0, {}) : io::read_graph(graph_path);

    if (*layout) {
      json j;
      VerifyReport report;
      if (layout_method == "strongstar" || layout_method == "strongstar-m23") {
        const auto variant = layout_method == "strongstar" ? StrongStarVariant::sqrt_dm
                                                           : StrongStarVariant::m_two_thirds;
        const auto tl = colouring_to_upward_tracks(g, strong_star_colouring(g, variant));
        report = verify_track_layout(g, tl);
        j = io::track_layout_to_json(tl);
      } else if (layout_method == "tree") {
        const auto tl = detail::tree_five_tracks(g);
        report = verify_track_layout(g, tl);
        j = io::track_layout_to_json(tl);
      } else if (layout_method == "tree-span2") {
        const auto tl = tree_span2_layout(g);
        report = verify_track_layout(g, tl);
        j = io::track_layout_to_json(tl);
      } else if (layout_method == "caterpillar") {
        const auto tl = detail::caterpillar_wrapped(g).tracks;
        report = verify_track_layout(g, tl);
        j = io::track_layout_to_json(tl);
      } else if (layout_method == "caterpillar-queue") {
        const auto ql = detail::caterpillar_wrapped(g).queues;
        report = verify_queue_layout(g, ql);
        j = io::queue_layout_to_json(g, ql);
      } else if (layout_method == "rainbow") {
        const auto ql = rainbow_queue_layout(g, topological_order(g));
        report = verify_queue_layout(g, ql);
        j = io::queue_layout_to_json(g, ql);
      } else {
        throw InvalidParams("unknown layout method " + layout_method);
      }
      detail::emit(out_path, j.dump() + "\n", out);
      if (!report.ok()) {
        err << "layout failed verification: " << report.summary() << '\n';
        return verification;
      }
      return ok;
    }

    if (*draw) {
      const Drawing3D d = detail::draw_with(draw_method, g, layout_path);
      json j = io::drawing_to_json(d, true);
      j["method"] = draw_method;
      detail::emit(out_path, j.dump() + "\n", out);
      if (export_format == "obj") {
        detail::emit(export_path, io::drawing_to_obj(g, d), out);
      } else if (!export_format.empty()) {
        throw InvalidParams("unknown export format " + export_format);
      }
      if (!no_verify) {
        const auto report = verify_drawing(g, d, true);
        if (!report.ok()) {
          err << "drawing failed verification: " << report.summary() << '\n';
          return verification;
        }
      }
      return ok;
    }

    if (*subdivide) {
      json j;
      if (sub_kind == "twoqueue") {
        const auto cert = bandwidth_of(g, topological_order(g));
        const auto res = two_queue_subdivision(g, cert);
        j = {{"bandwidth", cert.b},
             {"graph", io::graph_to_json(res.sub.graph)},
             {"per_arc_counts", res.sub.per_arc_counts},
             {"queues", io::queue_layout_to_json(res.sub.graph, res.queues)}};
      } else if (sub_kind == "fourtrack") {
        const auto cert = bandwidth_of(g, topological_order(g));
        const auto res = four_track_subdivision(g, cert);
        j = {{"bandwidth", cert.b},
             {"graph", io::graph_to_json(res.sub.graph)},
             {"per_arc_counts", res.sub.per_arc_counts},
             {"tracks", io::track_layout_to_json(res.layout)}};
      } else if (sub_kind == "planar") {
        if (planar_path.empty()) throw InvalidParams("--kind planar needs --drawing2d");
        Drawing2D upd;
        try {
          const json doc = json::parse(io::read_text(planar_path));
          for (const auto &p : doc.at("points"))
            upd.points.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
        } catch (const json::exception &e) {
          throw InvalidParams(std::string("drawing2d JSON: ") + e.what());
        }
        const auto res = upward_planar_subdivision(g, upd);
        j = {{"graph", io::graph_to_json(res.sub.graph)},
             {"per_arc_counts", res.sub.per_arc_counts},
             {"levels", io::track_layout_to_json(res.levels)},
             {"queues", io::queue_layout_to_json(res.sub.graph, res.one_queue)},
             {"tracks", io::track_layout_to_json(res.three_tracks)}};
      } else {
        throw InvalidParams("unknown subdivision kind " + sub_kind);
      }
      detail::emit(out_path, j.dump() + "\n", out);
      return ok;
    }

    if (*verify) {
      if (drawing_path.empty() && tracks_path.empty() && queues_path.empty())
        throw InvalidParams("nothing to verify: give --drawing, --tracks or --queues");
      bool clean = true;
      auto show = [&](const char *what_name, const VerifyReport &r) {
        out << what_name << ": " << (r.ok() ? "ok" : r.summary()) << '\n';
        clean = clean && r.ok();
      };
      if (!drawing_path.empty()) {
        const auto f = io::parse_drawing(io::read_text(drawing_path));
        show("drawing", verify_drawing(g, f.drawing, f.upward));
      }
      if (!tracks_path.empty()) show("tracks", verify_track_layout(g, detail::load_track_layout(tracks_path, g)));
      if (!queues_path.empty()) show("queues", verify_queue_layout(g, detail::load_queue_layout(queues_path, g)));
      return clean ? ok : verification;
    }

    if (*oracle_cmd) {
      if (what == "queue") {
        out << oracle::exact_upward_queue_number(g) << '\n';
      } else if (what == "track") {
        const int t = oracle::exact_upward_track_number(g, max_t);
        out << (t == oracle::NotFound ? std::string("> ") + std::to_string(max_t) : std::to_string(t)) << '\n';
      } else if (what == "bandwidth") {
        const auto cert = oracle::exact_directed_bandwidth(g);
        out << json{{"b", cert.b}, {"order", cert.order.at}}.dump() << '\n';
      } else {
        throw InvalidParams("unknown oracle query " + what);
      }
      return ok;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  if (*bench) {
    std::vector<detail::BenchTask> tasks;
    try {
      const auto sizes = detail::parse_sizes(sizes_csv);
      if (seeds < 1) throw InvalidParams("--seeds must be positive");
      if (suite == "table1") tasks = detail::table1_tasks(sizes, seeds);
      else if (suite == "trees") tasks = detail::tree_tasks(sizes, seeds);
      else if (suite == "subdivisions") tasks = detail::subdivision_tasks(sizes, seeds);
      else throw InvalidParams("unknown suite " + suite);
    } catch (const Error &e) {
      err << "error: " << e.what() << '\n';
      return exit_code_for(e);
    }
    const auto rows = detail::run_tasks(tasks, detail::worker_count());
    std::string lines;
    for (const auto &r : rows) lines += r.to_json().dump() + "\n";
    if (!report_path.empty()) io::write_text(report_path, lines);
    else out << lines;
    detail::print_table(rows, out);
    const bool all_ok = std::all_of(rows.begin(), rows.end(), [](auto &r) { return r.status == "ok"; });
    return all_ok ? ok : verification;
  }
  return usage;
}

} // namespace updraw::cli
