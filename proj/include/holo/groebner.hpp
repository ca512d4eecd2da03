#pragma once
// Left Gröbner bases in Ore algebras, elimination and creative telescoping.
#include <string>
#include <vector>

#include "holo/ore.hpp"

namespace holo {

struct LeftIdealBasis {
  RingPtr ring;
  TermOrder order;
  std::vector<OrePoly> gens;
  bool is_groebner = false;
};

struct GroebnerLimits {
  size_t max_basis = 80;
  int max_degree = 40;     // total degree of a leading monomial
  size_t max_pairs = 4000;  // S-polynomials processed
};

// Full left reduction; p - result lies in the left ideal of basis.
OrePoly left_reduce(const OrePoly& p, const std::vector<OrePoly>& basis, const TermOrder& o);
OrePoly left_reduce(const OrePoly& p, const LeftIdealBasis& b);
OrePoly s_polynomial(const OrePoly& f, const OrePoly& g, const TermOrder& o);

// Reduced left Gröbner basis, elements primitive with positive leading coefficient.
LeftIdealBasis groebner(const std::vector<OrePoly>& gens, const TermOrder& o, const GroebnerLimits& lim = {});
// Every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<OrePoly>& g, const TermOrder& o);
// Basis elements free of the named generators.
std::vector<OrePoly> eliminate(const LeftIdealBasis& b, const std::vector<std::string>& kill);

struct TelescopeOre {
  LinearOperatorEq recurrence;  // N-kind for sums and discrete integrals, D-kind otherwise
  OrePoly element;              // the variable-free basis element used
  LeftIdealBasis basis;
  std::vector<std::string> notes;
};

// Annihilators of F(n,k); k-free element with K = 1.
TelescopeOre telescope_sum(const std::vector<OrePoly>& ann, const std::string& k, const std::string& K,
                           const std::string& N, const TermOrder& order, const GroebnerLimits& lim = {});
// Annihilators of F(y,x); x-free element with Dx = 0. Natural boundaries are assumed, not checked.
TelescopeOre telescope_integral(const std::vector<OrePoly>& ann, const std::string& x, const std::string& Dx,
                                const std::string& Y, const TermOrder& order, const GroebnerLimits& lim = {});

// Elimination orders used when none is given: kill variable first, other operators next,
// then the outer operator, its variable and the telescoped operator.
TermOrder default_sum_order(const OreRing& r, const std::string& k, const std::string& K, const std::string& N);
TermOrder default_integral_order(const OreRing& r, const std::string& x, const std::string& Dx, const std::string& Y);

}  // namespace holo
