#include "webtrace/web.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "webtrace/errors.hpp"

namespace webtrace {

namespace {

void check_end(const EdgeEnd& e, int vertex_count, const char* side) {
  if (e.is_port()) {
    if (e.vertex < 0 || e.vertex >= vertex_count) {
      throw Error(ErrorCode::invalid_argument,
                  std::string("edge ") + side + " references missing vertex");
    }
    if (e.slot < 1) {
      throw Error(ErrorCode::invalid_argument,
                  std::string("edge ") + side + " with slot < 1");
    }
  } else if (e.label < 1) {
    throw Error(ErrorCode::invalid_argument,
                std::string("edge ") + side + " with boundary label < 1");
  }
}

bool is_permutation_of_1_to_n(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

// Picks a vertex name not yet in `taken`, preferring `base`.
std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
  std::string name = base;
  for (int i = 2; !taken.insert(name).second; ++i) {
    name = base + "_" + std::to_string(i);
  }
  return name;
}

}  // namespace

Web::Web(SignaturePtr sig, std::vector<WebVertex> vertices, std::vector<Edge> edges,
         int roots, int sinks, long loops)
    : sig_(std::move(sig)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      roots_(roots),
      sinks_(sinks),
      loops_(loops) {
  if (!sig_) throw Error(ErrorCode::invalid_argument, "web without signature");
  if (roots_ < 0 || sinks_ < 0 || loops_ < 0) {
    throw Error(ErrorCode::invalid_argument, "negative boundary or loop count");
  }
  std::set<std::string> names;
  for (const WebVertex& v : vertices_) {
    if (v.type < 0 || v.type >= sig_->count()) {
      throw Error(ErrorCode::invalid_argument,
                  "vertex '" + v.name + "' with unknown type index");
    }
    if (v.name.empty() || !names.insert(v.name).second) {
      throw Error(ErrorCode::invalid_argument,
                  "vertex name '" + v.name + "' empty or repeated");
    }
  }
  const int m = static_cast<int>(vertices_.size());
  const auto check_slot_range = [&](const EdgeEnd& e, bool tail) {
    if (!e.is_port()) return;
    const auto& ty = sig_->type(vertices_[static_cast<std::size_t>(e.vertex)].type);
    const int arity = tail ? ty.out_arity : ty.in_arity;
    if (e.slot > arity) {
      throw Error(ErrorCode::invalid_argument,
                  "slot " + std::to_string(e.slot) + " out of range for vertex '" +
                      vertices_[static_cast<std::size_t>(e.vertex)].name + "' of type " +
                      ty.name);
    }
  };
  for (const Edge& e : edges_) {
    check_end(e.tail, m, "tail");
    check_end(e.head, m, "head");
    check_slot_range(e.tail, true);
    check_slot_range(e.head, false);
  }
}

std::vector<std::string> validate(const Web& w) {
  std::vector<std::string> out;
  const auto plural = [](int n) {
    return n == 2 ? std::string("twice") : std::to_string(n) + " times";
  };

  // Edge-end usage per vertex slot and per boundary label.
  const int m = static_cast<int>(w.vertices().size());
  std::vector<std::vector<int>> out_use(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> in_use(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) {
    const auto& t = w.vertex_type(v);
    out_use[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(t.out_arity), 0);
    in_use[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(t.in_arity), 0);
  }
  std::vector<int> root_use(static_cast<std::size_t>(w.roots()), 0);
  std::vector<int> sink_use(static_cast<std::size_t>(w.sinks()), 0);

  for (const Edge& e : w.edges()) {
    if (e.tail.is_port()) {
      const auto& t = w.vertex_type(e.tail.vertex);
      const std::string& name = w.vertices()[static_cast<std::size_t>(e.tail.vertex)].name;
      if (e.tail.slot > t.out_arity) {
        out.push_back("out-slot " + std::to_string(e.tail.slot) + " of " + name +
                      " exceeds arity " + std::to_string(t.out_arity));
      } else {
        ++out_use[static_cast<std::size_t>(e.tail.vertex)][static_cast<std::size_t>(e.tail.slot - 1)];
      }
    } else if (e.tail.label > w.roots()) {
      out.push_back("root " + std::to_string(e.tail.label) + " out of range");
    } else {
      ++root_use[static_cast<std::size_t>(e.tail.label - 1)];
    }
    if (e.head.is_port()) {
      const auto& t = w.vertex_type(e.head.vertex);
      const std::string& name = w.vertices()[static_cast<std::size_t>(e.head.vertex)].name;
      if (e.head.slot > t.in_arity) {
        out.push_back("in-slot " + std::to_string(e.head.slot) + " of " + name +
                      " exceeds arity " + std::to_string(t.in_arity));
      } else {
        ++in_use[static_cast<std::size_t>(e.head.vertex)][static_cast<std::size_t>(e.head.slot - 1)];
      }
    } else if (e.head.label > w.sinks()) {
      out.push_back("sink " + std::to_string(e.head.label) + " out of range");
    } else {
      ++sink_use[static_cast<std::size_t>(e.head.label - 1)];
    }
  }

  for (int v = 0; v < m; ++v) {
    const std::string& name = w.vertices()[static_cast<std::size_t>(v)].name;
    for (std::size_t s = 0; s < in_use[static_cast<std::size_t>(v)].size(); ++s) {
      const int n = in_use[static_cast<std::size_t>(v)][s];
      if (n == 0) {
        out.push_back("in-slot " + std::to_string(s + 1) + " of " + name + " unfilled");
      } else if (n > 1) {
        out.push_back("in-slot " + std::to_string(s + 1) + " of " + name + " used " + plural(n));
      }
    }
    for (std::size_t s = 0; s < out_use[static_cast<std::size_t>(v)].size(); ++s) {
      const int n = out_use[static_cast<std::size_t>(v)][s];
      if (n == 0) {
        out.push_back("out-slot " + std::to_string(s + 1) + " of " + name + " unfilled");
      } else if (n > 1) {
        out.push_back("out-slot " + std::to_string(s + 1) + " of " + name + " used " + plural(n));
      }
    }
  }
  for (std::size_t r = 0; r < root_use.size(); ++r) {
    if (root_use[r] == 0) {
      out.push_back("root " + std::to_string(r + 1) + " unused");
    } else if (root_use[r] > 1) {
      out.push_back("root " + std::to_string(r + 1) + " used " + plural(root_use[r]));
    }
  }
  for (std::size_t s = 0; s < sink_use.size(); ++s) {
    if (sink_use[s] == 0) {
      out.push_back("sink " + std::to_string(s + 1) + " unused");
    } else if (sink_use[s] > 1) {
      out.push_back("sink " + std::to_string(s + 1) + " used " + plural(sink_use[s]));
    }
  }
  return out;
}

void require_valid(const Web& w) {
  std::vector<std::string> violations = validate(w);
  if (violations.empty()) return;
  std::string msg = "ill-formed web: " + violations.front();
  if (violations.size() > 1) {
    msg += " (and " + std::to_string(violations.size() - 1) + " more)";
  }
  throw Error(ErrorCode::invalid_argument, msg);
}

Web disjoint_union(const Web& g, const Web& h) {
  if (!same_signature(g.signature(), h.signature())) {
    throw Error(ErrorCode::profile_mismatch, "disjoint union across different signatures");
  }
  std::vector<WebVertex> vertices = g.vertices();
  std::set<std::string> names;
  for (const WebVertex& v : vertices) names.insert(v.name);

  const int shift = static_cast<int>(g.vertices().size());
  for (const WebVertex& v : h.vertices()) {
    vertices.push_back(WebVertex{fresh_name(v.name, names), v.type});
  }

  std::vector<Edge> edges = g.edges();
  const auto shifted = [&](const EdgeEnd& e, int label_shift) {
    if (e.is_port()) return EdgeEnd::port(e.vertex + shift, e.slot);
    return EdgeEnd::boundary(e.label + label_shift);
  };
  for (const Edge& e : h.edges()) {
    edges.push_back(Edge{shifted(e.tail, g.roots()), shifted(e.head, g.sinks())});
  }
  return Web(g.signature(), std::move(vertices), std::move(edges),
             g.roots() + h.roots(), g.sinks() + h.sinks(), g.loops() + h.loops());
}

namespace {

// Endpoint in the combined graph built during gluing: a vertex port or one
// of the k + l junctions where a boundary point of w meets its partner in x.
struct GlueEnd {
  bool junction = false;
  EdgeEnd port;  // when !junction
  int id = -1;   // junction id: roots of w are 0..k-1, sinks of w are k..k+l-1
};

struct Segment {
  GlueEnd tail;
  GlueEnd head;
  bool visited = false;
};

}  // namespace

Web glue(const Web& w, const Web& x) {
  if (!same_signature(w.signature(), x.signature())) {
    throw Error(ErrorCode::profile_mismatch, "glue across different signatures");
  }
  if (x.roots() != w.sinks() || x.sinks() != w.roots()) {
    throw Error(ErrorCode::profile_mismatch,
                "glue requires a (k,l)-web against an (l,k)-web; got (" +
                    std::to_string(w.roots()) + "," + std::to_string(w.sinks()) +
                    ") and (" + std::to_string(x.roots()) + "," +
                    std::to_string(x.sinks()) + ")");
  }
  require_valid(w);
  require_valid(x);

  const int k = w.roots();
  const int l = w.sinks();
  const int shift = static_cast<int>(w.vertices().size());

  std::vector<WebVertex> vertices = w.vertices();
  std::set<std::string> names;
  for (const WebVertex& v : vertices) names.insert(v.name);
  for (const WebVertex& v : x.vertices()) {
    vertices.push_back(WebVertex{fresh_name(v.name, names), v.type});
  }

  std::vector<Segment> segs;
  segs.reserve(w.edges().size() + x.edges().size());
  for (const Edge& e : w.edges()) {
    Segment s;
    s.tail = e.tail.is_port() ? GlueEnd{false, e.tail, -1}
                              : GlueEnd{true, {}, e.tail.label - 1};
    s.head = e.head.is_port() ? GlueEnd{false, e.head, -1}
                              : GlueEnd{true, {}, k + e.head.label - 1};
    segs.push_back(s);
  }
  for (const Edge& e : x.edges()) {
    Segment s;
    // Roots of x continue w's sinks; sinks of x feed back into w's roots.
    s.tail = e.tail.is_port()
                 ? GlueEnd{false, EdgeEnd::port(e.tail.vertex + shift, e.tail.slot), -1}
                 : GlueEnd{true, {}, k + e.tail.label - 1};
    s.head = e.head.is_port()
                 ? GlueEnd{false, EdgeEnd::port(e.head.vertex + shift, e.head.slot), -1}
                 : GlueEnd{true, {}, e.head.label - 1};
    segs.push_back(s);
  }

  // Validity of both factors gives each junction exactly one outgoing segment.
  std::vector<int> out_of_junction(static_cast<std::size_t>(k + l), -1);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].tail.junction) out_of_junction[static_cast<std::size_t>(segs[i].tail.id)] = static_cast<int>(i);
  }

  std::vector<Edge> edges;
  for (Segment& start : segs) {
    if (start.visited || start.tail.junction) continue;
    start.visited = true;
    Segment* cur = &start;
    while (cur->head.junction) {
      cur = &segs[static_cast<std::size_t>(out_of_junction[static_cast<std::size_t>(cur->head.id)])];
      cur->visited = true;
    }
    edges.push_back(Edge{start.tail.port, cur->head.port});
  }

  // What remains are chains that never touch a vertex: closed junction
  // cycles, each contributing one vertexless loop.
  long loops = w.loops() + x.loops();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].visited) continue;
    std::size_t cur = i;
    while (!segs[cur].visited) {
      segs[cur].visited = true;
      cur = static_cast<std::size_t>(out_of_junction[static_cast<std::size_t>(segs[cur].head.id)]);
    }
    ++loops;
  }

  return Web(w.signature(), std::move(vertices), std::move(edges), 0, 0, loops);
}

Web permutation_web(SignaturePtr sig, std::span<const int> perm) {
  const int kk = static_cast<int>(perm.size());
  if (!is_permutation_of_1_to_n(perm, kk)) {
    throw Error(ErrorCode::invalid_argument, "not a permutation of 1..k");
  }
  std::vector<Edge> edges;
  edges.reserve(perm.size());
  for (int i = 1; i <= kk; ++i) {
    edges.push_back(Edge{EdgeEnd::boundary(i), EdgeEnd::boundary(perm[static_cast<std::size_t>(i - 1)])});
  }
  return Web(std::move(sig), {}, std::move(edges), kk, kk, 0);
}

Web relabel_boundary(const Web& w, std::span<const int> root_map,
                     std::span<const int> sink_map) {
  if (!root_map.empty() && !is_permutation_of_1_to_n(root_map, w.roots())) {
    throw Error(ErrorCode::invalid_argument, "root relabeling is not a permutation of 1..k");
  }
  if (!sink_map.empty() && !is_permutation_of_1_to_n(sink_map, w.sinks())) {
    throw Error(ErrorCode::invalid_argument, "sink relabeling is not a permutation of 1..l");
  }
  std::vector<Edge> edges = w.edges();
  for (Edge& e : edges) {
    if (!e.tail.is_port() && !root_map.empty() && e.tail.label <= w.roots()) {
      e.tail.label = root_map[static_cast<std::size_t>(e.tail.label - 1)];
    }
    if (!e.head.is_port() && !sink_map.empty() && e.head.label <= w.sinks()) {
      e.head.label = sink_map[static_cast<std::size_t>(e.head.label - 1)];
    }
  }
  return Web(w.signature(), w.vertices(), std::move(edges), w.roots(), w.sinks(), w.loops());
}

// --- WebBuilder ------------------------------------------------------------

int WebBuilder::add_vertex(const std::string& name, std::string_view type) {
  const int idx = sig_->index_of(type);
  if (idx < 0) {
    throw Error(ErrorCode::missing_type, "unknown type '" + std::string(type) + "'");
  }
  vertices_.push_back(WebVertex{name, idx});
  return static_cast<int>(vertices_.size()) - 1;
}

WebBuilder& WebBuilder::edge(int from_vertex, int out_slot, int to_vertex, int in_slot) {
  edges_.push_back(Edge{EdgeEnd::port(from_vertex, out_slot), EdgeEnd::port(to_vertex, in_slot)});
  return *this;
}

WebBuilder& WebBuilder::edge_from_root(int label, int to_vertex, int in_slot) {
  edges_.push_back(Edge{EdgeEnd::boundary(label), EdgeEnd::port(to_vertex, in_slot)});
  return *this;
}

WebBuilder& WebBuilder::edge_to_sink(int from_vertex, int out_slot, int label) {
  edges_.push_back(Edge{EdgeEnd::port(from_vertex, out_slot), EdgeEnd::boundary(label)});
  return *this;
}

WebBuilder& WebBuilder::strand(int root_label, int sink_label) {
  edges_.push_back(Edge{EdgeEnd::boundary(root_label), EdgeEnd::boundary(sink_label)});
  return *this;
}

WebBuilder& WebBuilder::loops(long count) {
  loops_ = count;
  return *this;
}

Web WebBuilder::build(int roots, int sinks, bool check) const {
  Web w(sig_, vertices_, edges_, roots, sinks, loops_);
  if (check) require_valid(w);
  return w;
}

// --- common shapes ----------------------------------------------------------

namespace {

void require_unary(const SignaturePtr& sig, std::span<const int> types) {
  for (int t : types) {
    if (t < 0 || t >= sig->count()) {
      throw Error(ErrorCode::missing_type, "type index out of range");
    }
    const auto& ty = sig->type(t);
    if (ty.in_arity != 1 || ty.out_arity != 1) {
      throw Error(ErrorCode::invalid_argument,
                  "type '" + ty.name + "' is not arity (1,1)");
    }
  }
}

}  // namespace

Web cycle_diagram(SignaturePtr sig, std::span<const int> types) {
  require_unary(sig, types);
  const int m = static_cast<int>(types.size());
  if (m == 0) return Web(std::move(sig), {}, {}, 0, 0, 1);
  std::vector<WebVertex> vertices;
  vertices.reserve(types.size());
  for (int i = 0; i < m; ++i) {
    vertices.push_back(WebVertex{"v" + std::to_string(i + 1), types[static_cast<std::size_t>(i)]});
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.push_back(Edge{EdgeEnd::port(i, 1), EdgeEnd::port((i + 1) % m, 1)});
  }
  return Web(std::move(sig), std::move(vertices), std::move(edges), 0, 0, 0);
}

Web word_web(SignaturePtr sig, std::span<const int> types) {
  require_unary(sig, types);
  const int m = static_cast<int>(types.size());
  if (m == 0) {
    return Web(std::move(sig), {}, {Edge{EdgeEnd::boundary(1), EdgeEnd::boundary(1)}}, 1, 1, 0);
  }
  std::vector<WebVertex> vertices;
  vertices.reserve(types.size());
  for (int i = 0; i < m; ++i) {
    vertices.push_back(WebVertex{"v" + std::to_string(i + 1), types[static_cast<std::size_t>(i)]});
  }
  std::vector<Edge> edges;
  edges.push_back(Edge{EdgeEnd::boundary(1), EdgeEnd::port(0, 1)});
  for (int i = 0; i + 1 < m; ++i) {
    edges.push_back(Edge{EdgeEnd::port(i, 1), EdgeEnd::port(i + 1, 1)});
  }
  edges.push_back(Edge{EdgeEnd::port(m - 1, 1), EdgeEnd::boundary(1)});
  return Web(std::move(sig), std::move(vertices), std::move(edges), 1, 1, 0);
}

}  // namespace webtrace
