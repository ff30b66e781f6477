#include "pgsp/graph_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace pgsp {

namespace {

struct RawArc {
  int u, v;
  Weight len, cap;
};

Weight parse_weight(const std::string& tok) {
  if (tok == "inf") return kInf;
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(tok, &pos);
    if (pos != tok.size()) throw BadInput("bad number '" + tok + "'");
    return x >= kInf ? kInf : x;
  } catch (const std::logic_error&) {
    throw BadInput("bad number '" + tok + "'");
  }
}

int parse_int(const std::string& tok) {
  const Weight x = parse_weight(tok);
  if (x < INT32_MIN || x > INT32_MAX) throw BadInput("integer out of range '" + tok + "'");
  return static_cast<int>(x);
}

std::string fmt_weight(Weight w) { return w >= kInf ? "inf" : std::to_string(w); }

// Pairs arcs into edges and converts the per-vertex arc lists into darts.
EmbeddedPlanarGraph assemble(int n, const std::vector<RawArc>& arcs,
                             const std::vector<std::vector<int>>& rot_arcs) {
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    const auto& r = arcs[a];
    if (r.u < 0 || r.u >= n || r.v < 0 || r.v >= n)
      throw BadInput("arc " + std::to_string(a) + " endpoint out of range");
    if (r.u == r.v) throw BadInput("self-loop at arc " + std::to_string(a));
    if (!index.emplace(std::make_pair(r.u, r.v), a).second)
      throw BadInput("parallel arc " + std::to_string(a));
  }
  std::vector<EdgeSpec> edges;
  std::vector<int> dart_of_arc(arcs.size(), -1);
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    if (dart_of_arc[a] >= 0) continue;
    const auto& r = arcs[a];
    EdgeSpec e;
    e.u = r.u;
    e.v = r.v;
    e.len_uv = r.len;
    e.cap_uv = r.cap;
    e.len_vu = kInf;
    e.cap_vu = 0;
    const int id = static_cast<int>(edges.size());
    dart_of_arc[a] = 2 * id;
    auto it = index.find({r.v, r.u});
    if (it != index.end()) {
      e.len_vu = arcs[it->second].len;
      e.cap_vu = arcs[it->second].cap;
      dart_of_arc[it->second] = 2 * id + 1;
    }
    edges.push_back(e);
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v)
    for (int a : rot_arcs[v]) {
      if (a < 0 || a >= static_cast<int>(arcs.size()))
        throw BadInput("rotation of vertex " + std::to_string(v) + " names unknown arc");
      int d = dart_of_arc[a];
      if (arcs[a].u != v) {
        if (arcs[a].v != v) throw BadInput("arc " + std::to_string(a) + " not incident to " + std::to_string(v));
        d ^= 1;
      }
      rot[v].push_back(d);
    }
  try {
    return build_graph_darts(n, edges, rot);
  } catch (const Error& e) {
    throw BadInput(e.what());
  }
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

bool next_content_line(std::istream& in, std::vector<std::string>& tok) {
  std::string line;
  while (std::getline(in, line)) {
    tok = tokens(line);
    if (!tok.empty() && tok[0][0] != '#') return true;
  }
  return false;
}

}  // namespace

EmbeddedPlanarGraph read_graph(std::istream& in) {
  std::vector<std::string> tok;
  if (!next_content_line(in, tok) || tok.size() != 3 || tok[0] != "pg") throw BadInput("missing 'pg V A' header");
  const int n = parse_int(tok[1]);
  const int m = parse_int(tok[2]);
  if (n < 0 || m < 0) throw BadInput("negative size in header");
  std::vector<RawArc> arcs(m);
  for (auto& a : arcs) {
    if (!next_content_line(in, tok) || tok.size() < 3 || tok.size() > 4) throw BadInput("truncated or malformed arc line");
    a.u = parse_int(tok[0]);
    a.v = parse_int(tok[1]);
    a.len = parse_weight(tok[2]);
    a.cap = tok.size() == 4 ? parse_weight(tok[3]) : 0;
    if (a.len < 0) throw BadInput("negative length");
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    std::string line;
    if (!std::getline(in, line)) throw BadInput("missing rotation line for vertex " + std::to_string(v));
    for (const auto& t : tokens(line)) rot[v].push_back(parse_int(t));
  }
  return assemble(n, arcs, rot);
}

EmbeddedPlanarGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const EmbeddedPlanarGraph& g, bool with_capacity) {
  out << "pg " << g.num_vertices() << ' ' << g.num_darts() << '\n';
  for (int d = 0; d < g.num_darts(); ++d) {
    out << g.tail(d) << ' ' << g.head(d) << ' ' << fmt_weight(g.length(d));
    if (with_capacity) out << ' ' << fmt_weight(g.capacity(d));
    out << '\n';
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& r = g.rotation(v);
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << '\n';
  }
}

FlowInstance read_dimacs(std::istream& in) {
  int n = -1, m = -1, s = -1, t = -1;
  std::vector<RawArc> arcs;
  std::vector<std::vector<int>> rot;
  std::vector<bool> seen;
  std::string line;
  while (std::getline(in, line)) {
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (tok.size() != 4 || tok[1] != "max" || n >= 0) throw BadInput("bad problem line");
      n = parse_int(tok[2]);
      m = parse_int(tok[3]);
      if (n <= 0 || m < 0) throw BadInput("bad problem size");
      rot.assign(n, {});
      seen.assign(n, false);
    } else if (n < 0) {
      throw BadInput("problem line must come first");
    } else if (tok[0] == "n") {
      if (tok.size() != 3) throw BadInput("bad node line");
      const int v = parse_int(tok[1]) - 1;
      if (tok[2] == "s") s = v;
      else if (tok[2] == "t") t = v;
      else throw BadInput("bad node designator");
    } else if (tok[0] == "a") {
      if (tok.size() != 4) throw BadInput("bad arc line");
      const Weight cap = parse_weight(tok[3]);
      if (cap < 0) throw BadInput("negative capacity");
      arcs.push_back({parse_int(tok[1]) - 1, parse_int(tok[2]) - 1, 0, cap});
    } else if (tok[0] == "r") {
      if (tok.size() < 2) throw BadInput("bad rotation line");
      const int v = parse_int(tok[1]) - 1;
      if (v < 0 || v >= n || seen[v]) throw BadInput("bad or repeated rotation vertex");
      seen[v] = true;
      for (std::size_t i = 2; i < tok.size(); ++i) rot[v].push_back(parse_int(tok[i]) - 1);
    } else {
      throw BadInput("unknown line type '" + tok[0] + "'");
    }
  }
  if (n < 0) throw BadInput("missing problem line");
  if (static_cast<int>(arcs.size()) != m) throw BadInput("arc count mismatch");
  if (s < 0 || s >= n || t < 0 || t >= n || s == t) throw BadInput("missing or invalid source/sink");
  FlowInstance inst;
  inst.graph = assemble(n, arcs, rot);
  inst.s = s;
  inst.t = t;
  return inst;
}

void write_dimacs(std::ostream& out, const FlowInstance& inst) {
  const auto& g = inst.graph;
  out << "p max " << g.num_vertices() << ' ' << g.num_darts() << '\n';
  out << "n " << inst.s + 1 << " s\n";
  out << "n " << inst.t + 1 << " t\n";
  for (int d = 0; d < g.num_darts(); ++d)
    out << "a " << g.tail(d) + 1 << ' ' << g.head(d) + 1 << ' ' << g.capacity(d) << '\n';
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "r " << v + 1;
    for (int d : g.rotation(v)) out << ' ' << d + 1;
    out << '\n';
  }
}

}  // namespace pgsp
