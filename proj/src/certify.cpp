#include "webtrace/certify.hpp"

#include <algorithm>

#include "webtrace/errors.hpp"

namespace webtrace {

DeltaReport check_delta_annihilation(const Representation& r, const TraceOptions& opts) {
  const int n = r.dim();
  if (n + 1 > 8) {
    throw Error(ErrorCode::cap_exceeded,
                "antisymmetrizer check materializes dim+1 strands; dim " + std::to_string(n) +
                    " exceeds the cap");
  }
  const Tensor t = quantum_trace(r, delta(r.signature(), n + 1), opts);
  return DeltaReport{n, t.is_zero()};
}

ConnectionMatrix connection_matrix(const Representation& r, int k,
                                   std::span<const Web> webs, const TraceOptions& opts) {
  for (const Web& w : webs) {
    if (w.roots() != k || w.sinks() != k) {
      throw Error(ErrorCode::profile_mismatch,
                  "connection matrix webs must all have profile (" + std::to_string(k) + "," +
                      std::to_string(k) + ")");
    }
  }
  ConnectionMatrix m;
  m.k = k;
  m.row_webs.assign(webs.begin(), webs.end());
  m.col_webs = m.row_webs;
  m.entries.assign(webs.size(), std::vector<Rat>(webs.size(), Rat(0)));
  for (std::size_t i = 0; i < webs.size(); ++i) {
    for (std::size_t j = 0; j < webs.size(); ++j) {
      m.entries[i][j] = planned_trace(r, glue(webs[i], webs[j]), opts);
    }
  }
  return m;
}

long exact_rank(const RatMatrix& m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  for (const auto& row : m) {
    if (row.size() != cols) {
      throw Error(ErrorCode::shape_mismatch, "ragged matrix");
    }
  }
  if (cols == 0) return 0;

  // Clear denominators per row, then run fraction-free (Bareiss) elimination
  // over the integers; pivot columns may be skipped when all-zero below.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Int lcm(1);
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][j].get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = m[i][j].get_num() * (lcm / m[i][j].get_den());
    }
  }

  long rank = 0;
  std::size_t row = 0;
  Int prev(1);
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++rank;
    ++row;
  }
  return rank;
}

std::vector<RankReport> rank_growth_check(const Representation& r, int k_max,
                                          const EnumerationBounds& bounds,
                                          const TraceOptions& opts) {
  if (k_max < 0) throw Error(ErrorCode::invalid_argument, "negative k_max");
  std::vector<RankReport> reports;
  for (int k = 0; k <= k_max; ++k) {
    const std::vector<Web> webs = enumerate_webs(r.signature(), k, k, bounds);
    const ConnectionMatrix m = connection_matrix(r, k, webs, opts);
    RankReport report;
    report.k = k;
    report.web_count = webs.size();
    report.rank = exact_rank(m.entries);
    mpz_ui_pow_ui(report.bound.get_mpz_t(), static_cast<unsigned long>(r.dim()),
                  static_cast<unsigned long>(2 * k));
    report.pass = Int(report.rank) <= report.bound;
    reports.push_back(std::move(report));
  }
  return reports;
}

WitnessReport annihilation_witness_search(const Representation& r, const QuantumWeb& omega,
                                          const EnumerationBounds& bounds,
                                          const TraceOptions& opts) {
  WitnessReport report;
  if (omega.zero()) return report;
  const auto profile = omega.profile();
  if (!profile) {
    throw Error(ErrorCode::profile_mismatch, "witness search needs a single-profile quantum web");
  }
  // Dual-profile candidates: only they can glue against omega's terms.
  const std::vector<Web> candidates =
      enumerate_webs(omega.signature(), profile->second, profile->first, bounds);
  for (const Web& w : candidates) {
    ++report.candidates;
    const Rat value = quantum_trace_scalar(r, qw_product(omega, QuantumWeb::from_web(w)), opts);
    if (value != 0) {
      report.witness = w;
      return report;
    }
  }
  return report;
}

bool character_identity_check(const Representation& r, std::string_view a,
                              std::string_view b, std::string_view c,
                              const TraceOptions& opts) {
  const SignaturePtr& sig = r.signature();
  const auto resolve = [&](std::string_view name) {
    const int idx = sig->index_of(name);
    if (idx < 0) {
      throw Error(ErrorCode::missing_type, "unknown type '" + std::string(name) + "'");
    }
    return idx;
  };
  const int ia = resolve(a);
  const int ib = resolve(b);
  const int ic = resolve(c);

  const auto phi = [&](std::vector<int> word) {
    return planned_trace(r, cycle_diagram(sig, word), opts);
  };

  const Rat lhs = phi({ia, ib, ic}) + phi({ic, ib, ia}) + phi({ia}) * phi({ib}) * phi({ic});
  const Rat rhs = phi({ia, ib}) * phi({ic}) + phi({ia, ic}) * phi({ib}) + phi({ib, ic}) * phi({ia});
  return lhs == rhs;
}

}  // namespace webtrace
