#pragma once

#include <span>
#include <vector>

#include "webtrace/rational.hpp"

namespace webtrace {

// Dense exact-rational tensor with in_rank covariant ("in") indices followed
// by out_rank contravariant ("out") indices, each running over 0..dim-1.
// Entries are stored row-major over the tuple (in indices, out indices).
class Tensor {
 public:
  Tensor(int in_rank, int out_rank, int dim);  // zero-filled
  static Tensor scalar(const Rat& value);      // rank (0,0)
  static Tensor identity(int dim);             // (1,1) Kronecker delta

  int in_rank() const { return in_rank_; }
  int out_rank() const { return out_rank_; }
  int dim() const { return dim_; }
  std::size_t entry_count() const { return entries_.size(); }

  const std::vector<Rat>& entries() const { return entries_; }
  std::vector<Rat>& entries() { return entries_; }

  std::size_t flat_index(std::span<const int> in_idx, std::span<const int> out_idx) const;
  const Rat& at(std::span<const int> in_idx, std::span<const int> out_idx) const;
  Rat& at(std::span<const int> in_idx, std::span<const int> out_idx);

  bool is_zero() const;

  // this += coeff * other; shapes must match exactly.
  void add_scaled(const Tensor& other, const Rat& coeff);

  friend bool operator==(const Tensor& a, const Tensor& b);

 private:
  int in_rank_ = 0;
  int out_rank_ = 0;
  int dim_ = 0;
  std::vector<Rat> entries_;
};

// Full contraction of dual shapes (k,l) against (l,k): in-index a of t meets
// out-index a of u and vice versa. This is the closed pairing that matches
// gluing of the underlying webs.
Rat pairing(const Tensor& t, const Tensor& u);

}  // namespace webtrace
