#include "webtrace/representation.hpp"

#include "webtrace/errors.hpp"

namespace webtrace {

Representation::Representation(SignaturePtr sig, int dim, std::vector<Tensor> tensors)
    : sig_(std::move(sig)), dim_(dim), tensors_(std::move(tensors)) {
  if (!sig_) throw Error(ErrorCode::invalid_argument, "representation without signature");
  if (dim_ < 0) throw Error(ErrorCode::invalid_argument, "negative dimension");
  if (static_cast<int>(tensors_.size()) != sig_->count()) {
    throw Error(ErrorCode::invalid_argument,
                "expected one tensor per type (" + std::to_string(sig_->count()) + "), got " +
                    std::to_string(tensors_.size()));
  }
  for (int i = 0; i < sig_->count(); ++i) {
    const auto& type = sig_->type(i);
    const Tensor& t = tensors_[static_cast<std::size_t>(i)];
    if (t.in_rank() != type.in_arity || t.out_rank() != type.out_arity || t.dim() != dim_) {
      throw Error(ErrorCode::shape_mismatch,
                  "tensor for type '" + type.name + "' must have shape (" +
                      std::to_string(type.in_arity) + "," + std::to_string(type.out_arity) +
                      ") over dimension " + std::to_string(dim_));
    }
  }
}

const Tensor& Representation::tensor(int type_index) const {
  if (type_index < 0 || type_index >= static_cast<int>(tensors_.size())) {
    throw Error(ErrorCode::missing_type, "type index out of range");
  }
  return tensors_[static_cast<std::size_t>(type_index)];
}

const Tensor& Representation::tensor(std::string_view type_name) const {
  const int idx = sig_->index_of(type_name);
  if (idx < 0) {
    throw Error(ErrorCode::missing_type, "unknown type '" + std::string(type_name) + "'");
  }
  return tensors_[static_cast<std::size_t>(idx)];
}

bool operator==(const Representation& a, const Representation& b) {
  return same_signature(a.sig_, b.sig_) && a.dim_ == b.dim_ && a.tensors_ == b.tensors_;
}

namespace {

// Replaces one axis: out[.., i, ..] = sum_a coeff[i][a] * in[.., a, ..].
Tensor transform_axis(const Tensor& t, int axis, const RatMatrix& coeff) {
  const int rank = t.in_rank() + t.out_rank();
  const int n = t.dim();
  std::size_t inner = 1;  // stride of the axis
  for (int p = axis + 1; p < rank; ++p) inner *= static_cast<std::size_t>(n);
  const std::size_t block = inner * static_cast<std::size_t>(n);

  Tensor out(t.in_rank(), t.out_rank(), n);
  const std::size_t total = t.entry_count();
  for (std::size_t base = 0; base < total; base += block) {
    for (std::size_t off = 0; off < inner; ++off) {
      for (int i = 0; i < n; ++i) {
        Rat sum(0);
        for (int a = 0; a < n; ++a) {
          const Rat& c = coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
          if (c == 0) continue;
          sum += c * t.entries()[base + static_cast<std::size_t>(a) * inner + off];
        }
        out.entries()[base + static_cast<std::size_t>(i) * inner + off] = std::move(sum);
      }
    }
  }
  return out;
}

}  // namespace

Representation gl_action(const RatMatrix& g, const Representation& r) {
  const int n = r.dim();
  if (static_cast<int>(g.size()) != n) {
    throw Error(ErrorCode::shape_mismatch, "basis change matrix must be dim x dim");
  }
  for (const auto& row : g) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::shape_mismatch, "basis change matrix must be dim x dim");
    }
  }
  auto inv = invert(g);
  if (!inv) throw Error(ErrorCode::singular_matrix, "basis change matrix is singular");

  // in-axes: new[i] = sum_a inv[a][i] old[a]; out-axes: new[j] = sum_b g[j][b] old[b].
  RatMatrix inv_t(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      inv_t[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
          (*inv)[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
    }
  }

  std::vector<Tensor> tensors;
  tensors.reserve(static_cast<std::size_t>(r.signature()->count()));
  for (int ti = 0; ti < r.signature()->count(); ++ti) {
    Tensor t = r.tensor(ti);
    const auto& type = r.signature()->type(ti);
    for (int axis = 0; axis < type.in_arity; ++axis) t = transform_axis(t, axis, inv_t);
    for (int axis = type.in_arity; axis < type.in_arity + type.out_arity; ++axis) {
      t = transform_axis(t, axis, g);
    }
    tensors.push_back(std::move(t));
  }
  return Representation(r.signature(), n, std::move(tensors));
}

}  // namespace webtrace
