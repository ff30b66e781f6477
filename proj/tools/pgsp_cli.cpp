// Command-line driver: instance generation, single runs with oracle checks,
// and CSV benchmarks. Exit codes: 0 ok, 1 mismatch, 2 bad input.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgsp/bench.hpp"
#include "pgsp/boundary_apsp.hpp"
#include "pgsp/ddg.hpp"
#include "pgsp/dijkstra.hpp"
#include "pgsp/division.hpp"
#include "pgsp/generators.hpp"
#include "pgsp/graph_io.hpp"
#include "pgsp/max_flow.hpp"

using namespace pgsp;

namespace {

constexpr int kMismatch = 1;
constexpr int kBadInput = 2;

struct InstanceArgs {
  std::string in;
  std::string kind = "grid";
  int width = 16;
  int height = 16;
  Weight max_len = 100;
  Weight max_cap = 50;
  std::uint64_t seed = 1;

  void add(CLI::App* app) {
    app->add_option("--in", in, "Instance file (pg text format); generated when absent");
    app->add_option("--kind", kind, "grid, annulus-grid or delaunay-like");
    app->add_option("--width", width);
    app->add_option("--height", height);
    app->add_option("--max-len", max_len);
    app->add_option("--max-cap", max_cap);
    app->add_option("--seed", seed);
  }
  std::string name() const {
    if (!in.empty()) return in;
    return kind + "-" + std::to_string(width) + "x" + std::to_string(height) + "-s" + std::to_string(seed);
  }
  EmbeddedPlanarGraph load() const {
    if (!in.empty()) return read_graph_file(in);
    GenParams p;
    p.width = width;
    p.height = height;
    p.max_len = max_len;
    p.max_cap = max_cap;
    return generate(kind, p, seed);
  }
};

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw BadInput("cannot write " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  if (out.empty()) throw BadParams("empty list");
  return out;
}

int run_sssp(const InstanceArgs& inst, int r, int source, bool all_sources, const std::string& backend,
             const std::string& algo, const std::string& out_path) {
  const EmbeddedPlanarGraph g = inst.load();
  SsspBenchOptions opts;
  opts.r = r;
  opts.backend = parse_backend(backend);
  opts.algo = parse_algo(algo);
  if (!all_sources) {
    if (source < 0) {
      HkrsOptions ho;
      ho.r = r;
      opts.sources = {HkrsEngine(g, ho).boundary_vertices().front()};
    } else {
      opts.sources = {source};
    }
  }
  const BenchRecord rec = bench_sssp(inst.name(), g, opts);
  Output out(out_path);
  out.get() << csv_header() << '\n' << to_csv(rec) << '\n';
  return rec.ok() ? 0 : kMismatch;
}

int run_ddg(const InstanceArgs& inst, int r, const std::string& out_path) {
  const EmbeddedPlanarGraph g = inst.load();
  HkrsOptions ho;
  ho.r = r;
  const HkrsEngine engine(g, ho);
  Output out(out_path);
  out.get() << dump_division(engine.division());
  for (const DenseDistanceGraph& d : engine.index().ddgs()) out.get() << dump_ddg(d);
  // Every DDG entry must equal the region distance it stands for; the union
  // must reproduce distances between boundary vertices.
  const DdgIndex& index = engine.index();
  int bad = 0;
  for (int s : engine.boundary_vertices()) {
    const std::vector<Weight> want = dijkstra(engine.graph(), s);
    const std::vector<Weight> got = ddg_dijkstra(index, s).dist;
    for (int v = 0; v < index.num_vertices(); ++v)
      if (index.is_boundary(v) && got[v] != want[v]) ++bad;
  }
  std::cerr << "ddgs " << index.ddgs().size() << " pieces " << index.heaps().size() << " explicit "
            << index.num_explicit() << " mismatches " << bad << '\n';
  return bad == 0 ? 0 : kMismatch;
}

int run_apsp(const InstanceArgs& inst, int face, const std::string& vertices, const std::string& path,
             const std::string& backend, const std::string& out_path) {
  const EmbeddedPlanarGraph g = inst.load();
  FaceApspRequest req;
  req.face = face;
  if (!vertices.empty()) req.vertices = parse_list(vertices);
  if (path == "fast") req.path = ApspPath::kFast;
  else if (path == "dijkstra") req.path = ApspPath::kDijkstra;
  else if (path != "auto") throw BadParams("unknown path " + path);
  req.backend = parse_backend(backend);
  const FaceApspResult res = face_boundary_apsp(g, req);
  Output out(out_path);
  const int k = static_cast<int>(res.vertices.size());
  out.get() << "from\\to";
  for (int v : res.vertices) out.get() << ',' << v;
  out.get() << '\n';
  int bad = 0;
  for (int i = 0; i < k; ++i) {
    const std::vector<Weight> want = dijkstra(g, res.vertices[i]);
    out.get() << res.vertices[i];
    for (int j = 0; j < k; ++j) {
      const Weight x = res.dist[i][j];
      out.get() << ',' << (x >= kInf ? std::string("inf") : std::to_string(x));
      if (x != want[res.vertices[j]]) ++bad;
    }
    out.get() << '\n';
  }
  std::cerr << "k " << k << " path " << (res.fast ? "fast" : "dijkstra") << " r " << res.r << " mismatches " << bad
            << '\n';
  return bad == 0 ? 0 : kMismatch;
}

int run_maxflow(const InstanceArgs& inst, const std::string& dimacs, int s, int t, const std::string& variant,
                bool no_guard, const std::string& out_path) {
  FlowNetwork net;
  if (!dimacs.empty()) {
    std::ifstream f(dimacs);
    if (!f) throw BadInput("cannot open " + dimacs);
    FlowInstance fi = read_dimacs(f);
    net = {std::move(fi.graph), fi.s, fi.t};
  } else {
    net.graph = inst.load();
    net.s = s;
    net.t = t < 0 ? net.graph.num_vertices() - 1 : t;
  }
  FlowResult res;
  if (variant == "basic") {
    res = max_flow_basic(net);
  } else if (variant == "fast") {
    FlowOptions fo;
    fo.guard = !no_guard;
    res = max_flow_fast(net, fo);
  } else {
    throw BadParams("unknown variant " + variant);
  }
  const Weight oracle = max_flow_bfs(net.graph, net.s, net.t);
  const std::string check = check_flow(net.graph, net.s, net.t, res.flow);
  Output out(out_path);
  out.get() << "value," << res.value << "\np," << res.p << "\nfast," << res.fast << "\ntail,head,flow\n";
  for (int d = 0; d < net.graph.num_darts(); d += 2)
    if (res.flow[d] != 0) {
      const int x = res.flow[d] > 0 ? d : d ^ 1;
      out.get() << net.graph.tail(x) << ',' << net.graph.head(x) << ',' << std::abs(res.flow[d]) << '\n';
    }
  const bool ok = res.value == oracle && check.empty();
  std::cerr << "oracle " << oracle << (check.empty() ? "" : " check: " + check) << (ok ? " ok" : " MISMATCH")
            << '\n';
  return ok ? 0 : kMismatch;
}

int run_bench(const std::string& kind, const std::string& ns, int r, const std::string& algos,
              const std::string& backend, std::uint64_t seed, const std::string& out_path) {
  Output out(out_path);
  out.get() << csv_header() << '\n';
  int status = 0;
  std::vector<std::string> names;
  {
    std::stringstream ss(algos);
    std::string a;
    while (std::getline(ss, a, ','))
      if (!a.empty()) names.push_back(a);
  }
  for (int n : parse_list(ns)) {
    const int w = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    GenParams p;
    p.width = w;
    p.height = w;
    const EmbeddedPlanarGraph g = generate(kind, p, seed);
    for (const std::string& a : names) {
      SsspBenchOptions opts;
      opts.r = r;
      opts.algo = parse_algo(a);
      opts.backend = parse_backend(backend);
      HkrsOptions ho;
      ho.r = r;
      opts.sources = {HkrsEngine(g, ho).boundary_vertices().front()};
      const BenchRecord rec =
          bench_sssp(kind + "-" + std::to_string(w) + "x" + std::to_string(w) + "-s" + std::to_string(seed), g, opts);
      out.get() << to_csv(rec) << '\n';
      if (!rec.ok()) status = kMismatch;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar shortest paths over dense distance graphs"};
  app.require_subcommand(1);

  InstanceArgs inst;
  int r = 16, source = -1, face = -1, s = 0, t = -1;
  bool all_sources = false, flow_format = false, no_guard = false;
  std::string backend = "cq3", algo = "hkrs-fr", out_path, vertices, path = "auto", variant = "fast", dimacs;
  std::string ns = "256,1024,4096", algos = "hkrs-fr";

  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  inst.add(gen);
  gen->add_option("--out", out_path);
  gen->add_flag("--flow", flow_format, "DIMACS max-flow format with --s/--t");
  gen->add_option("--s", s);
  gen->add_option("--t", t);

  auto add_sssp = [&](CLI::App* c) {
    inst.add(c);
    c->add_option("--r", r);
    c->add_option("--source", source);
    c->add_flag("--all-sources", all_sources);
    c->add_option("--backend", backend, "cq1 or cq3");
    c->add_option("--algo", algo, "dijkstra, fr, fr-fast or hkrs-fr");
    c->add_option("--out", out_path, "CSV output");
  };
  auto* sssp = app.add_subcommand("sssp", "Run one algorithm, verify against Dijkstra");
  add_sssp(sssp);

  auto* ddg = app.add_subcommand("ddg", "Dump the division and its dense distance graphs");
  inst.add(ddg);
  ddg->add_option("--r", r);
  ddg->add_option("--out", out_path);

  auto* apsp = app.add_subcommand("boundary-apsp", "Distances among the vertices of one face");
  inst.add(apsp);
  apsp->add_option("--face", face)->required();
  apsp->add_option("--vertices", vertices, "Comma-separated subset of the face");
  apsp->add_option("--path", path, "auto, fast or dijkstra");
  apsp->add_option("--backend", backend);
  apsp->add_option("--out", out_path);

  auto* mf = app.add_subcommand("maxflow", "Maximum s-t flow, verified against augmenting paths");
  inst.add(mf);
  mf->add_option("--dimacs", dimacs);
  mf->add_option("--s", s);
  mf->add_option("--t", t);
  mf->add_option("--variant", variant, "basic or fast");
  mf->add_flag("--no-guard", no_guard, "Always take the division path");
  mf->add_option("--out", out_path);

  auto* bench = app.add_subcommand("bench", "CSV benchmark over growing grids");
  std::string bench_what = "sssp";
  bench->add_option("what", bench_what, "Benchmark kind (sssp)");
  bench->add_option("--kind", inst.kind);
  bench->add_option("--n", ns, "Comma-separated vertex counts");
  bench->add_option("--r", r);
  bench->add_option("--algo", algos, "Comma-separated algorithms");
  bench->add_option("--backend", backend);
  bench->add_option("--seed", inst.seed);
  bench->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Oracle check; exit 1 on any mismatch");
  std::string what = "sssp";
  verify->add_option("what", what, "sssp, ddg, boundary-apsp or maxflow");
  add_sssp(verify);
  verify->add_option("--face", face);
  verify->add_option("--s", s);
  verify->add_option("--t", t);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (*gen) {
      Output out(out_path);
      if (flow_format) {
        FlowInstance fi{inst.load(), s, 0};
        fi.t = t < 0 ? fi.graph.num_vertices() - 1 : t;
        write_dimacs(out.get(), fi);
      } else {
        write_graph(out.get(), inst.load(), inst.max_cap > 0);
      }
      return 0;
    }
    if (*sssp) return run_sssp(inst, r, source, all_sources, backend, algo, out_path);
    if (*ddg) return run_ddg(inst, r, out_path);
    if (*apsp) return run_apsp(inst, face, vertices, path, backend, out_path);
    if (*mf) return run_maxflow(inst, dimacs, s, t, variant, no_guard, out_path);
    if (*bench) {
      if (bench_what != "sssp") throw BadParams("only sssp benchmarks exist");
      return run_bench(inst.kind, ns, r, algos, backend, inst.seed, out_path);
    }
    if (*verify) {
      if (what == "sssp") return run_sssp(inst, r, source, all_sources, backend, algo, out_path);
      if (what == "ddg") return run_ddg(inst, r, out_path);
      if (what == "boundary-apsp") return run_apsp(inst, face < 0 ? 0 : face, "", "fast", backend, out_path);
      if (what == "maxflow") return run_maxflow(inst, "", s, t, "fast", true, out_path);
      throw BadParams("nothing to verify for " + what);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad number: " << e.what() << '\n';
    return kBadInput;
  }
  return 0;
}
