#include "webtrace/linalg.hpp"

#include "webtrace/errors.hpp"

namespace webtrace {

RatMatrix identity_matrix(int n) {
  RatMatrix m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rat(1);
  return m;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  if (rows == 0 || inner == 0) return {};
  if (a[0].size() != inner) {
    throw Error(ErrorCode::shape_mismatch, "matrix product shape mismatch");
  }
  const std::size_t cols = b[0].size();
  RatMatrix out(rows, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

std::optional<RatMatrix> invert(const RatMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) return std::nullopt;
  }
  RatMatrix work = m;
  RatMatrix inv = identity_matrix(static_cast<int>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat scale = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      const Rat factor = work[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= factor * work[col][j];
        inv[i][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace webtrace
