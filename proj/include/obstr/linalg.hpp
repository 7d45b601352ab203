#pragma once
#include <vector>

#include "obstr/rational.hpp"

namespace obstr {

using RatMatrix = std::vector<std::vector<Rat>>;

// exact determinant via Gaussian elimination; m must be square
Rat rat_det(RatMatrix m);

// exact rank via Gaussian elimination
int rat_rank(RatMatrix m);

} // namespace obstr
