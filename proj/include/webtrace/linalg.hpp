#pragma once

#include <optional>
#include <vector>

#include "webtrace/rational.hpp"

namespace webtrace {

// Row-major exact rational matrix.
using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix identity_matrix(int n);
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

// Exact Gauss-Jordan inverse; nullopt when singular or non-square.
std::optional<RatMatrix> invert(const RatMatrix& m);

}  // namespace webtrace
