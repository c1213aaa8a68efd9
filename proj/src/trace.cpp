#include "webtrace/trace.hpp"

#include <vector>

#include "webtrace/errors.hpp"

namespace webtrace {

namespace {

Int int_pow(int base, long exp) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return out;
}

void check_budget(const Int& value, long long budget, const char* what) {
  if (value > static_cast<long>(budget)) {
    throw Error(ErrorCode::budget_exceeded,
                std::string(what) + " (" + value.get_str() + ") exceeds budget " +
                    std::to_string(budget));
  }
}

// Edge indices incident to each vertex, in tensor axis order (in-slots then
// out-slots), plus the boundary edges per root/sink label.
struct Incidence {
  std::vector<std::vector<int>> vertex_slots;
  std::vector<int> root_edges;
  std::vector<int> sink_edges;
};

Incidence resolve_incidence(const Web& w) {
  Incidence inc;
  const int m = static_cast<int>(w.vertices().size());
  inc.vertex_slots.resize(static_cast<std::size_t>(m));
  std::vector<int> in_arity(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) {
    const auto& t = w.vertex_type(v);
    in_arity[static_cast<std::size_t>(v)] = t.in_arity;
    inc.vertex_slots[static_cast<std::size_t>(v)].assign(
        static_cast<std::size_t>(t.in_arity + t.out_arity), -1);
  }
  inc.root_edges.assign(static_cast<std::size_t>(w.roots()), -1);
  inc.sink_edges.assign(static_cast<std::size_t>(w.sinks()), -1);
  for (std::size_t e = 0; e < w.edges().size(); ++e) {
    const Edge& edge = w.edges()[e];
    if (edge.tail.is_port()) {
      auto& slots = inc.vertex_slots[static_cast<std::size_t>(edge.tail.vertex)];
      slots[static_cast<std::size_t>(in_arity[static_cast<std::size_t>(edge.tail.vertex)] +
                                     edge.tail.slot - 1)] = static_cast<int>(e);
    } else {
      inc.root_edges[static_cast<std::size_t>(edge.tail.label - 1)] = static_cast<int>(e);
    }
    if (edge.head.is_port()) {
      auto& slots = inc.vertex_slots[static_cast<std::size_t>(edge.head.vertex)];
      slots[static_cast<std::size_t>(edge.head.slot - 1)] = static_cast<int>(e);
    } else {
      inc.sink_edges[static_cast<std::size_t>(edge.head.label - 1)] = static_cast<int>(e);
    }
  }
  return inc;
}

Rat loop_factor(int n, long loops) {
  return Rat(int_pow(n, loops));
}

}  // namespace

Rat naive_trace(const Representation& r, const Web& g, const TraceOptions& opts) {
  if (!same_signature(r.signature(), g.signature())) {
    throw Error(ErrorCode::profile_mismatch, "web signature differs from representation signature");
  }
  if (g.roots() != 0 || g.sinks() != 0) {
    throw Error(ErrorCode::profile_mismatch, "trace takes a closed (0,0) diagram");
  }
  require_valid(g);

  const int n = r.dim();
  const int edge_count = static_cast<int>(g.edges().size());
  check_budget(int_pow(n, edge_count), opts.budget, "coloring count");

  const Incidence inc = resolve_incidence(g);
  const int m = static_cast<int>(g.vertices().size());

  Rat sum(0);
  std::vector<int> color(static_cast<std::size_t>(edge_count), 0);
  bool any = n > 0 || edge_count == 0;
  while (any) {
    Rat factor(1);
    for (int v = 0; v < m && factor != 0; ++v) {
      const auto& slots = inc.vertex_slots[static_cast<std::size_t>(v)];
      std::size_t flat = 0;
      for (int e : slots) flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(color[static_cast<std::size_t>(e)]);
      factor *= r.tensor(g.vertices()[static_cast<std::size_t>(v)].type).entries()[flat];
    }
    sum += factor;

    int p = edge_count - 1;
    for (; p >= 0; --p) {
      if (++color[static_cast<std::size_t>(p)] < n) break;
      color[static_cast<std::size_t>(p)] = 0;
    }
    if (p < 0) break;
  }
  return sum * loop_factor(n, g.loops());
}

Tensor extended_trace(const Representation& r, const Web& w, const TraceOptions& opts) {
  if (!same_signature(r.signature(), w.signature())) {
    throw Error(ErrorCode::profile_mismatch, "web signature differs from representation signature");
  }
  require_valid(w);

  const int n = r.dim();
  const int edge_count = static_cast<int>(w.edges().size());
  check_budget(int_pow(n, edge_count), opts.budget, "coloring count");
  check_budget(int_pow(n, w.roots() + w.sinks()), opts.budget, "boundary tensor entry count");

  const Incidence inc = resolve_incidence(w);
  const int m = static_cast<int>(w.vertices().size());

  Tensor out(w.roots(), w.sinks(), n);
  const Rat loops = loop_factor(n, w.loops());
  std::vector<int> color(static_cast<std::size_t>(edge_count), 0);
  bool any = (n > 0 || edge_count == 0) && out.entry_count() > 0;
  while (any) {
    Rat factor = loops;
    for (int v = 0; v < m && factor != 0; ++v) {
      const auto& slots = inc.vertex_slots[static_cast<std::size_t>(v)];
      std::size_t flat = 0;
      for (int e : slots) flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(color[static_cast<std::size_t>(e)]);
      factor *= r.tensor(w.vertices()[static_cast<std::size_t>(v)].type).entries()[flat];
    }
    if (factor != 0) {
      std::size_t flat = 0;
      for (int e : inc.root_edges) flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(color[static_cast<std::size_t>(e)]);
      for (int e : inc.sink_edges) flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(color[static_cast<std::size_t>(e)]);
      out.entries()[flat] += factor;
    }

    int p = edge_count - 1;
    for (; p >= 0; --p) {
      if (++color[static_cast<std::size_t>(p)] < n) break;
      color[static_cast<std::size_t>(p)] = 0;
    }
    if (p < 0) break;
  }
  return out;
}

Tensor quantum_trace(const Representation& r, const QuantumWeb& q, const TraceOptions& opts) {
  if (!same_signature(r.signature(), q.signature())) {
    throw Error(ErrorCode::profile_mismatch,
                "quantum web signature differs from representation signature");
  }
  if (q.zero()) return Tensor(0, 0, r.dim());
  const auto profile = q.profile();
  if (!profile) {
    throw Error(ErrorCode::profile_mismatch,
                "trace of a mixed-profile quantum web is not defined");
  }
  Tensor out(profile->first, profile->second, r.dim());
  for (const QTerm& term : q.terms()) {
    out.add_scaled(extended_trace(r, term.web, opts), term.coeff);
  }
  return out;
}

Rat quantum_trace_scalar(const Representation& r, const QuantumWeb& q, const TraceOptions& opts) {
  const auto profile = q.profile();
  if (profile && *profile != std::pair<int, int>{0, 0}) {
    throw Error(ErrorCode::profile_mismatch, "scalar trace takes a (0,0) quantum web");
  }
  const Tensor t = quantum_trace(r, q, opts);
  return t.entry_count() == 1 ? t.entries()[0] : Rat(0);
}

}  // namespace webtrace
