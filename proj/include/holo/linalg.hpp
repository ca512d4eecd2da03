#pragma once
// Nullspaces over Q and over the fraction field of Q[vars].
#include <vector>

#include "holo/arith.hpp"

namespace holo {

using PolyMatrix = std::vector<std::vector<Poly>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Basis of {v : m v = 0} over Q(vars); each vector has polynomial entries with no common factor.
std::vector<std::vector<Poly>> nullspace(PolyMatrix m, size_t ncols);
std::vector<std::vector<Rat>> nullspace(RatMatrix m, size_t ncols);

// Clear denominators of a RatFun vector and remove the polynomial content.
std::vector<Poly> primitive_vector(const std::vector<RatFun>& v);

}  // namespace holo
