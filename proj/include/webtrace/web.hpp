#pragma once

#include <span>
#include <string>
#include <vector>

#include "webtrace/signature.hpp"

namespace webtrace {

// One end of an edge. A tail sits either on a vertex out-slot or on a root;
// a head sits either on a vertex in-slot or on a sink. Slots and boundary
// labels are 1-based; vertices are referenced by index into Web::vertices().
struct EdgeEnd {
  enum class Kind : unsigned char { port, boundary };

  Kind kind = Kind::boundary;
  int vertex = -1;  // port ends only
  int slot = 0;     // port ends only
  int label = 0;    // boundary ends only

  static EdgeEnd port(int vertex, int slot) {
    return EdgeEnd{Kind::port, vertex, slot, 0};
  }
  static EdgeEnd boundary(int label) {
    return EdgeEnd{Kind::boundary, -1, 0, label};
  }

  bool is_port() const { return kind == Kind::port; }

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Edge {
  EdgeEnd tail;  // out-slot or root
  EdgeEnd head;  // in-slot or sink

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct WebVertex {
  std::string name;  // identifier used by the text format; has no semantics
  int type = 0;      // index into the signature

  friend bool operator==(const WebVertex&, const WebVertex&) = default;
};

// A (k, l)-web: typed vertices whose in/out slots are each totally ordered,
// edges running from out-slots/roots to in-slots/sinks, k labeled roots,
// l labeled sinks, and a count of vertexless loops. Construction checks
// that references are in range; whether every slot and boundary label is
// used exactly once is a separate question answered by validate().
class Web {
 public:
  Web(SignaturePtr sig, std::vector<WebVertex> vertices, std::vector<Edge> edges,
      int roots, int sinks, long loops = 0);

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<WebVertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int roots() const { return roots_; }
  int sinks() const { return sinks_; }
  long loops() const { return loops_; }

  const TypeSignature::Type& vertex_type(int v) const {
    return sig_->type(vertices_.at(v).type);
  }

 private:
  SignaturePtr sig_;
  std::vector<WebVertex> vertices_;
  std::vector<Edge> edges_;
  int roots_ = 0;
  int sinks_ = 0;
  long loops_ = 0;
};

// Structural well-formedness report: one message per violation, empty when
// the web is a genuine (k, l)-web. Checked properties: every vertex in-slot
// and out-slot carries exactly one edge end, and so does every root label
// 1..k and sink label 1..l.
std::vector<std::string> validate(const Web& w);

// Throws Error(invalid_argument) with the first violation when validate()
// is nonempty.
void require_valid(const Web& w);

// Side-by-side union. Boundary labels of h are shifted up by g's; vertex
// names are made fresh (v1, v2, ...). Signatures must agree.
Web disjoint_union(const Web& g, const Web& h);

// Composition of a (k, l)-web w with an (l, k)-web x: sink j of w meets
// root j of x and root i of w meets sink i of x; the meeting points are
// smoothed away. Chains that close up without touching any vertex become
// vertexless loops. The result is a (0, 0)-web.
Web glue(const Web& w, const Web& x);

// k plain strands, root i wired to sink perm[i-1]. perm must be a
// permutation of 1..k.
Web permutation_web(SignaturePtr sig, std::span<const int> perm);

// Renames boundary labels: root i becomes root root_map[i-1], sink j becomes
// sink sink_map[j-1]. Empty spans mean identity; otherwise the map must be a
// permutation of 1..k (resp. 1..l).
Web relabel_boundary(const Web& w, std::span<const int> root_map,
                     std::span<const int> sink_map);

// Name-independent certificate of labeled-boundary isomorphism: two valid
// webs get equal keys iff they are isomorphic respecting types, slot orders,
// root/sink labels, and loop count. Throws Error(cap_exceeded) when the
// search space is too large (more than 12 vertices, or too many candidate
// orderings after refinement).
std::string canonical_key(const Web& w);

// The vertex ordering (position -> vertex index) that realizes the canonical
// key; text serialization lists vertices in this order so that isomorphic
// webs print identically. Same validity and size requirements as the key.
std::vector<int> canonical_order(const Web& w);

// --- incremental construction -------------------------------------------

class WebBuilder {
 public:
  explicit WebBuilder(SignaturePtr sig) : sig_(std::move(sig)) {}

  // Returns the vertex index. Type must exist in the signature.
  int add_vertex(const std::string& name, std::string_view type);

  WebBuilder& edge(int from_vertex, int out_slot, int to_vertex, int in_slot);
  WebBuilder& edge_from_root(int label, int to_vertex, int in_slot);
  WebBuilder& edge_to_sink(int from_vertex, int out_slot, int label);
  WebBuilder& strand(int root_label, int sink_label);
  WebBuilder& loops(long count);

  // Finishes with the given boundary profile; validates unless told not to.
  Web build(int roots, int sinks, bool check = true) const;

 private:
  SignaturePtr sig_;
  std::vector<WebVertex> vertices_;
  std::vector<Edge> edges_;
  long loops_ = 0;
};

// --- common shapes --------------------------------------------------------

// Closed cycle v1 -> v2 -> ... -> vm -> v1 through the given types, which
// must all have arity (1, 1). An empty list yields one vertexless loop.
Web cycle_diagram(SignaturePtr sig, std::span<const int> types);

// Open chain root 1 -> v1 -> ... -> vm -> sink 1 through (1, 1) types; the
// empty word is the bare strand.
Web word_web(SignaturePtr sig, std::span<const int> types);

}  // namespace webtrace
