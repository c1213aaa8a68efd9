#include "webtrace/tensor.hpp"

#include "webtrace/errors.hpp"

namespace webtrace {

namespace {

constexpr std::size_t kMaxEntries = 30'000'000;

std::size_t checked_pow(int dim, int rank) {
  std::size_t count = 1;
  for (int i = 0; i < rank; ++i) {
    if (dim != 0 && count > kMaxEntries / static_cast<std::size_t>(dim)) {
      throw Error(ErrorCode::cap_exceeded, "tensor entry count exceeds hard cap");
    }
    count *= static_cast<std::size_t>(dim);
  }
  return count;
}

}  // namespace

Tensor::Tensor(int in_rank, int out_rank, int dim)
    : in_rank_(in_rank), out_rank_(out_rank), dim_(dim) {
  if (in_rank < 0 || out_rank < 0 || dim < 0) {
    throw Error(ErrorCode::invalid_argument, "tensor with negative rank or dimension");
  }
  entries_.assign(checked_pow(dim, in_rank + out_rank), Rat(0));
}

Tensor Tensor::scalar(const Rat& value) {
  Tensor t(0, 0, 0);
  t.entries_[0] = value;
  return t;
}

Tensor Tensor::identity(int dim) {
  Tensor t(1, 1, dim);
  for (int i = 0; i < dim; ++i) {
    t.entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
               static_cast<std::size_t>(i)] = Rat(1);
  }
  return t;
}

std::size_t Tensor::flat_index(std::span<const int> in_idx, std::span<const int> out_idx) const {
  if (static_cast<int>(in_idx.size()) != in_rank_ ||
      static_cast<int>(out_idx.size()) != out_rank_) {
    throw Error(ErrorCode::shape_mismatch, "index tuple does not match tensor rank");
  }
  std::size_t flat = 0;
  for (int i : in_idx) {
    if (i < 0 || i >= dim_) throw Error(ErrorCode::invalid_argument, "tensor index out of range");
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  for (int j : out_idx) {
    if (j < 0 || j >= dim_) throw Error(ErrorCode::invalid_argument, "tensor index out of range");
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }
  return flat;
}

const Rat& Tensor::at(std::span<const int> in_idx, std::span<const int> out_idx) const {
  return entries_[flat_index(in_idx, out_idx)];
}

Rat& Tensor::at(std::span<const int> in_idx, std::span<const int> out_idx) {
  return entries_[flat_index(in_idx, out_idx)];
}

bool Tensor::is_zero() const {
  for (const Rat& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

void Tensor::add_scaled(const Tensor& other, const Rat& coeff) {
  if (in_rank_ != other.in_rank_ || out_rank_ != other.out_rank_ || dim_ != other.dim_) {
    throw Error(ErrorCode::shape_mismatch, "tensor sum across different shapes");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += coeff * other.entries_[i];
  }
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.in_rank_ == b.in_rank_ && a.out_rank_ == b.out_rank_ && a.dim_ == b.dim_ &&
         a.entries_ == b.entries_;
}

Rat pairing(const Tensor& t, const Tensor& u) {
  if (t.in_rank() != u.out_rank() || t.out_rank() != u.in_rank() || t.dim() != u.dim()) {
    throw Error(ErrorCode::shape_mismatch,
                "pairing requires dual shapes (k,l) against (l,k) over one dimension");
  }
  // u's flat layout over (its in = t's out, its out = t's in): walk t's
  // entries in order and build u's flat index from the split tuple.
  const int k = t.in_rank();
  const int l = t.out_rank();
  const int n = t.dim();
  std::vector<int> idx(static_cast<std::size_t>(k + l), 0);
  Rat sum(0);
  const std::size_t total = t.entry_count();
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (t.entries()[flat] != 0) {
      std::size_t u_flat = 0;
      for (int b = k; b < k + l; ++b) u_flat = u_flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx[static_cast<std::size_t>(b)]);
      for (int a = 0; a < k; ++a) u_flat = u_flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
      sum += t.entries()[flat] * u.entries()[u_flat];
    }
    // Odometer over (in, out) tuple, last position fastest.
    for (int p = k + l - 1; p >= 0; --p) {
      if (++idx[static_cast<std::size_t>(p)] < n) break;
      idx[static_cast<std::size_t>(p)] = 0;
    }
  }
  return sum;
}

}  // namespace webtrace
