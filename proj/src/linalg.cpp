#include "holo/linalg.hpp"

#include <algorithm>

namespace holo {

namespace {
size_t weight(const Poly& p) { return p.size() * 16 + static_cast<size_t>(std::max(p.total_degree(), 0)); }
}  // namespace

std::vector<Poly> primitive_vector(const std::vector<RatFun>& v) {
  Poly l(1);
  for (auto& e : v)
    if (!e.is_zero()) l = poly_lcm(l, e.den());
  std::vector<Poly> out;
  Poly g;
  for (auto& e : v) {
    out.push_back(e.is_zero() ? Poly() : divide_exact(l, e.den()) * e.num());
    g = poly_gcd(g, out.back());
  }
  if (g.is_zero()) return out;
  for (auto& e : out) e = divide_exact(e, g);
  // sign: first nonzero entry from the end has positive canonical leading coefficient
  for (size_t i = out.size(); i-- > 0;)
    if (!out[i].is_zero()) {
      if (out[i].canonical_lc() < 0)
        for (auto& e : out) e = -e;
      break;
    }
  return out;
}

std::vector<std::vector<Poly>> nullspace(PolyMatrix m, size_t ncols) {
  size_t rows = m.size();
  std::vector<size_t> pivcol;
  Poly prev(1);
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows; ++c) {
    size_t best = rows;
    for (size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero() && (best == rows || weight(m[i][c]) < weight(m[best][c]))) best = i;
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < ncols; ++j) {
        Poly t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        m[i][j] = prev.is_constant() ? t.scale(1 / prev.constant_value()) : divide_exact(t, prev);
      }
      m[i][c] = Poly();
    }
    prev = m[r][c];
    pivcol.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(ncols, false);
  for (auto c : pivcol) is_piv[c] = true;
  std::vector<std::vector<Poly>> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<RatFun> x(ncols);
    x[f] = RatFun(1);
    for (size_t i = pivcol.size(); i-- > 0;) {
      size_t pc = pivcol[i];
      RatFun s;
      for (size_t j = pc + 1; j < ncols; ++j)
        if (!m[i][j].is_zero() && !x[j].is_zero()) s += RatFun(m[i][j]) * x[j];
      x[pc] = -s / RatFun(m[i][pc]);
    }
    basis.push_back(primitive_vector(x));
  }
  return basis;
}

std::vector<std::vector<Rat>> nullspace(RatMatrix m, size_t ncols) {
  size_t rows = m.size();
  std::vector<size_t> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < ncols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(ncols, false);
  for (auto c : pivcol) is_piv[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> x(ncols, Rat(0));
    x[f] = 1;
    for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = -m[i][f];
    basis.push_back(x);
  }
  return basis;
}

}  // namespace holo
