#pragma once

#include <string_view>
#include <vector>

#include "webtrace/linalg.hpp"
#include "webtrace/signature.hpp"
#include "webtrace/tensor.hpp"

namespace webtrace {

// Assigns to every type of a signature a tensor of the matching shape
// (in_rank = in-arity, out_rank = out-arity) over one n-dimensional space.
class Representation {
 public:
  // tensors[i] belongs to type i of the signature; ranks and dim checked.
  Representation(SignaturePtr sig, int dim, std::vector<Tensor> tensors);

  const SignaturePtr& signature() const { return sig_; }
  int dim() const { return dim_; }

  const Tensor& tensor(int type_index) const;
  const Tensor& tensor(std::string_view type_name) const;  // missing_type error

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  SignaturePtr sig_;
  int dim_ = 0;
  std::vector<Tensor> tensors_;
};

// Change of basis by an invertible matrix g: out-indices transform by g
// (new[j] = sum_b g[j][b] old[b]) and in-indices by the inverse transpose
// (new[i] = sum_a inv[a][i] old[a]). Closed traces are invariant under this
// action, and it composes: acting by g after h equals acting by g*h.
Representation gl_action(const RatMatrix& g, const Representation& r);

}  // namespace webtrace
