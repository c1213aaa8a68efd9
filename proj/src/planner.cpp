#include "webtrace/planner.hpp"

#include <algorithm>
#include <optional>

#include "webtrace/errors.hpp"

namespace webtrace {

namespace {

// Open axes of one tensor factor during planning/replay, tagged by the edge
// occupying each axis. An edge id appearing twice marks a self-loop awaiting
// self-contraction; after self-steps every id is unique within a factor.
struct FactorAxes {
  std::vector<int> edges;
  int min_vertex = 0;
  bool alive = true;
};

std::vector<FactorAxes> initial_factors(const Web& g) {
  const int m = static_cast<int>(g.vertices().size());
  std::vector<FactorAxes> factors(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) {
    const auto& t = g.vertex_type(v);
    factors[static_cast<std::size_t>(v)].edges.assign(
        static_cast<std::size_t>(t.in_arity + t.out_arity), -1);
    factors[static_cast<std::size_t>(v)].min_vertex = v;
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& edge = g.edges()[e];
    if (edge.head.is_port()) {
      factors[static_cast<std::size_t>(edge.head.vertex)].edges[static_cast<std::size_t>(edge.head.slot - 1)] =
          static_cast<int>(e);
    }
    if (edge.tail.is_port()) {
      const auto& t = g.vertex_type(edge.tail.vertex);
      factors[static_cast<std::size_t>(edge.tail.vertex)]
          .edges[static_cast<std::size_t>(t.in_arity + edge.tail.slot - 1)] = static_cast<int>(e);
    }
  }
  return factors;
}

bool has_duplicate(const std::vector<int>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] == edges[j]) return true;
    }
  }
  return false;
}

std::vector<int> without_duplicates(const std::vector<int>& edges) {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    bool dup = false;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != i && edges[j] == edges[i]) dup = true;
    }
    if (!dup) out.push_back(edges[i]);
  }
  return out;
}

int shared_count(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  for (int e : a) {
    if (std::find(b.begin(), b.end(), e) != b.end()) ++count;
  }
  return count;
}

// Applies one merge to the axis simulation; returns the new factor's axes
// (a's unshared followed by b's unshared).
FactorAxes merge_axes(const FactorAxes& a, const FactorAxes& b) {
  FactorAxes out;
  out.min_vertex = std::min(a.min_vertex, b.min_vertex);
  for (int e : a.edges) {
    if (std::find(b.edges.begin(), b.edges.end(), e) == b.edges.end()) out.edges.push_back(e);
  }
  for (int e : b.edges) {
    if (std::find(a.edges.begin(), a.edges.end(), e) == a.edges.end()) out.edges.push_back(e);
  }
  return out;
}

// The greedy choice shared by planning and cost accounting: the alive,
// edge-sharing pair minimizing (result axis count, smaller min-vertex,
// larger min-vertex).
std::optional<std::pair<int, int>> pick_merge(const std::vector<FactorAxes>& factors) {
  std::optional<std::pair<int, int>> best;
  std::optional<std::tuple<int, int, int>> best_rank;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i].alive) continue;
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (!factors[j].alive) continue;
      const int shared = shared_count(factors[i].edges, factors[j].edges);
      if (shared == 0) continue;
      const int axes = static_cast<int>(factors[i].edges.size() + factors[j].edges.size()) - 2 * shared;
      const int lo = std::min(factors[i].min_vertex, factors[j].min_vertex);
      const int hi = std::max(factors[i].min_vertex, factors[j].min_vertex);
      std::tuple<int, int, int> rank{axes, lo, hi};
      if (!best_rank || rank < *best_rank) {
        best_rank = rank;
        // Emit the factor containing the smaller original vertex first.
        const bool i_first = factors[i].min_vertex <= factors[j].min_vertex;
        best = {static_cast<int>(i_first ? i : j), static_cast<int>(i_first ? j : i)};
      }
    }
  }
  return best;
}

}  // namespace

ContractionPlan plan_contraction(const Web& g) {
  require_valid(g);
  std::vector<FactorAxes> factors = initial_factors(g);
  ContractionPlan plan;
  plan.initial_factors = static_cast<int>(factors.size());

  // Self-loops first, ascending vertex id; each step traces out all of the
  // factor's duplicated axes at once.
  for (int v = 0; v < plan.initial_factors; ++v) {
    if (!has_duplicate(factors[static_cast<std::size_t>(v)].edges)) continue;
    plan.steps.push_back({v, v});
    FactorAxes next;
    next.min_vertex = factors[static_cast<std::size_t>(v)].min_vertex;
    next.edges = without_duplicates(factors[static_cast<std::size_t>(v)].edges);
    factors[static_cast<std::size_t>(v)].alive = false;
    factors.push_back(std::move(next));
  }

  while (auto pick = pick_merge(factors)) {
    plan.steps.push_back({pick->first, pick->second});
    FactorAxes merged = merge_axes(factors[static_cast<std::size_t>(pick->first)],
                                   factors[static_cast<std::size_t>(pick->second)]);
    factors[static_cast<std::size_t>(pick->first)].alive = false;
    factors[static_cast<std::size_t>(pick->second)].alive = false;
    factors.push_back(std::move(merged));
  }
  return plan;
}

Int plan_cost(const Web& g, const ContractionPlan& plan, int dim) {
  std::vector<FactorAxes> factors = initial_factors(g);
  Int cost(0);
  for (const ContractionStep& step : plan.steps) {
    FactorAxes next;
    if (step.first == step.second) {
      next.min_vertex = factors[static_cast<std::size_t>(step.first)].min_vertex;
      next.edges = without_duplicates(factors[static_cast<std::size_t>(step.first)].edges);
      factors[static_cast<std::size_t>(step.first)].alive = false;
    } else {
      next = merge_axes(factors[static_cast<std::size_t>(step.first)],
                        factors[static_cast<std::size_t>(step.second)]);
      factors[static_cast<std::size_t>(step.first)].alive = false;
      factors[static_cast<std::size_t>(step.second)].alive = false;
    }
    Int entries;
    mpz_ui_pow_ui(entries.get_mpz_t(), static_cast<unsigned long>(dim), next.edges.size());
    cost += entries;
    factors.push_back(std::move(next));
  }
  return cost;
}

namespace {

struct FactorValue {
  Tensor tensor = Tensor(0, 0, 0);
  std::vector<int> edges;  // axis tags, aligned with tensor axes
};

std::size_t axis_stride(const Tensor& t, std::size_t axis) {
  std::size_t stride = 1;
  const std::size_t rank = static_cast<std::size_t>(t.in_rank() + t.out_rank());
  for (std::size_t p = axis + 1; p < rank; ++p) stride *= static_cast<std::size_t>(t.dim());
  return stride;
}

void check_entry_budget(int dim, std::size_t rank, const TraceOptions& opts) {
  Int entries;
  mpz_ui_pow_ui(entries.get_mpz_t(), static_cast<unsigned long>(dim), rank);
  if (entries > static_cast<long>(opts.budget)) {
    throw Error(ErrorCode::budget_exceeded,
                "intermediate entry count (" + entries.get_str() + ") exceeds budget " +
                    std::to_string(opts.budget));
  }
}

// Sums out the duplicated axes of one factor (self-loops).
FactorValue contract_self(const FactorValue& f, const TraceOptions& opts) {
  const int n = f.tensor.dim();
  std::vector<std::size_t> keep;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    bool paired = false;
    for (std::size_t j = 0; j < f.edges.size(); ++j) {
      if (j != i && f.edges[j] == f.edges[i]) {
        if (j > i) pairs.emplace_back(i, j);
        paired = true;
      }
    }
    if (!paired) keep.push_back(i);
  }

  check_entry_budget(n, keep.size(), opts);
  FactorValue out;
  out.tensor = Tensor(0, static_cast<int>(keep.size()), n);
  for (std::size_t i : keep) out.edges.push_back(f.edges[i]);

  if (out.tensor.entry_count() == 0) return out;
  std::vector<std::size_t> keep_strides, pair_strides;
  for (std::size_t i : keep) keep_strides.push_back(axis_stride(f.tensor, i));
  for (auto [i, j] : pairs) {
    pair_strides.push_back(axis_stride(f.tensor, i) + axis_stride(f.tensor, j));
  }

  std::vector<int> out_idx(keep.size(), 0);
  std::vector<int> sum_idx(pairs.size(), 0);
  for (std::size_t flat_out = 0; flat_out < out.tensor.entry_count(); ++flat_out) {
    std::size_t base = 0;
    for (std::size_t p = 0; p < keep.size(); ++p) {
      base += static_cast<std::size_t>(out_idx[p]) * keep_strides[p];
    }
    Rat sum(0);
    std::fill(sum_idx.begin(), sum_idx.end(), 0);
    // A dim-0 space has no colorings to sum over.
    while (n > 0 || pairs.empty()) {
      std::size_t flat_in = base;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        flat_in += static_cast<std::size_t>(sum_idx[p]) * pair_strides[p];
      }
      sum += f.tensor.entries()[flat_in];
      int p = static_cast<int>(pairs.size()) - 1;
      for (; p >= 0; --p) {
        if (++sum_idx[static_cast<std::size_t>(p)] < n) break;
        sum_idx[static_cast<std::size_t>(p)] = 0;
      }
      if (p < 0) break;
    }
    out.tensor.entries()[flat_out] = std::move(sum);

    int p = static_cast<int>(keep.size()) - 1;
    for (; p >= 0; --p) {
      if (++out_idx[static_cast<std::size_t>(p)] < n) break;
      out_idx[static_cast<std::size_t>(p)] = 0;
    }
    if (p < 0) break;
  }
  return out;
}

// Merges two factors, summing over every shared axis tag.
FactorValue contract_pair(const FactorValue& a, const FactorValue& b, const TraceOptions& opts) {
  const int n = a.tensor.dim();
  std::vector<std::size_t> free_a, free_b;
  std::vector<std::pair<std::size_t, std::size_t>> shared;  // (axis in a, axis in b)
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    auto it = std::find(b.edges.begin(), b.edges.end(), a.edges[i]);
    if (it == b.edges.end()) {
      free_a.push_back(i);
    } else {
      shared.emplace_back(i, static_cast<std::size_t>(it - b.edges.begin()));
    }
  }
  for (std::size_t j = 0; j < b.edges.size(); ++j) {
    if (std::find(a.edges.begin(), a.edges.end(), b.edges[j]) == a.edges.end()) free_b.push_back(j);
  }

  check_entry_budget(n, free_a.size() + free_b.size(), opts);
  FactorValue out;
  out.tensor = Tensor(0, static_cast<int>(free_a.size() + free_b.size()), n);
  for (std::size_t i : free_a) out.edges.push_back(a.edges[i]);
  for (std::size_t j : free_b) out.edges.push_back(b.edges[j]);
  if (out.tensor.entry_count() == 0) return out;

  std::vector<std::size_t> stride_a, stride_b, shared_a, shared_b;
  for (std::size_t i : free_a) stride_a.push_back(axis_stride(a.tensor, i));
  for (std::size_t j : free_b) stride_b.push_back(axis_stride(b.tensor, j));
  for (auto [i, j] : shared) {
    shared_a.push_back(axis_stride(a.tensor, i));
    shared_b.push_back(axis_stride(b.tensor, j));
  }

  std::vector<int> out_idx(free_a.size() + free_b.size(), 0);
  std::vector<int> sum_idx(shared.size(), 0);
  for (std::size_t flat_out = 0; flat_out < out.tensor.entry_count(); ++flat_out) {
    std::size_t base_a = 0, base_b = 0;
    for (std::size_t p = 0; p < free_a.size(); ++p) {
      base_a += static_cast<std::size_t>(out_idx[p]) * stride_a[p];
    }
    for (std::size_t p = 0; p < free_b.size(); ++p) {
      base_b += static_cast<std::size_t>(out_idx[free_a.size() + p]) * stride_b[p];
    }
    Rat sum(0);
    std::fill(sum_idx.begin(), sum_idx.end(), 0);
    // A dim-0 space has no colorings to sum over.
    while (n > 0 || shared.empty()) {
      std::size_t flat_a = base_a, flat_b = base_b;
      for (std::size_t p = 0; p < shared.size(); ++p) {
        flat_a += static_cast<std::size_t>(sum_idx[p]) * shared_a[p];
        flat_b += static_cast<std::size_t>(sum_idx[p]) * shared_b[p];
      }
      const Rat& va = a.tensor.entries()[flat_a];
      if (va != 0) sum += va * b.tensor.entries()[flat_b];
      int p = static_cast<int>(shared.size()) - 1;
      for (; p >= 0; --p) {
        if (++sum_idx[static_cast<std::size_t>(p)] < n) break;
        sum_idx[static_cast<std::size_t>(p)] = 0;
      }
      if (p < 0) break;
    }
    out.tensor.entries()[flat_out] = std::move(sum);

    int p = static_cast<int>(out_idx.size()) - 1;
    for (; p >= 0; --p) {
      if (++out_idx[static_cast<std::size_t>(p)] < n) break;
      out_idx[static_cast<std::size_t>(p)] = 0;
    }
    if (p < 0) break;
  }
  return out;
}

}  // namespace

Rat planned_trace(const Representation& r, const Web& g, const TraceOptions& opts) {
  if (!same_signature(r.signature(), g.signature())) {
    throw Error(ErrorCode::profile_mismatch, "web signature differs from representation signature");
  }
  if (g.roots() != 0 || g.sinks() != 0) {
    throw Error(ErrorCode::profile_mismatch, "trace takes a closed (0,0) diagram");
  }
  const ContractionPlan plan = plan_contraction(g);
  const int n = r.dim();

  std::vector<FactorValue> factors;
  factors.reserve(static_cast<std::size_t>(plan.initial_factors) + plan.steps.size());
  const std::vector<FactorAxes> axes = initial_factors(g);
  std::vector<bool> alive(static_cast<std::size_t>(plan.initial_factors) + plan.steps.size(), true);
  for (int v = 0; v < plan.initial_factors; ++v) {
    FactorValue f;
    f.tensor = r.tensor(g.vertices()[static_cast<std::size_t>(v)].type);
    f.edges = axes[static_cast<std::size_t>(v)].edges;
    factors.push_back(std::move(f));
  }

  for (const ContractionStep& step : plan.steps) {
    if (step.first == step.second) {
      factors.push_back(contract_self(factors[static_cast<std::size_t>(step.first)], opts));
      alive[static_cast<std::size_t>(step.first)] = false;
    } else {
      factors.push_back(contract_pair(factors[static_cast<std::size_t>(step.first)],
                                      factors[static_cast<std::size_t>(step.second)], opts));
      alive[static_cast<std::size_t>(step.first)] = false;
      alive[static_cast<std::size_t>(step.second)] = false;
    }
  }

  // All that survives a closed diagram's plan is scalars: one per component.
  Rat product(1);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (!alive[f]) continue;
    product *= factors[f].tensor.entries()[0];
  }
  Int loop_pow;
  mpz_ui_pow_ui(loop_pow.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(g.loops()));
  return product * Rat(loop_pow);
}

}  // namespace webtrace
