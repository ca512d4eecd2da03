#include "holo/groebner.hpp"

#include <algorithm>
#include <set>

namespace holo {

namespace {

bool divides(const Exps& a, const Exps& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exps diff(const Exps& b, const Exps& a) {
  Exps d(b.size());
  for (size_t i = 0; i < b.size(); ++i) d[i] = b[i] - a[i];
  return d;
}

Exps lcm(const Exps& a, const Exps& b) {
  Exps d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = std::max(a[i], b[i]);
  return d;
}

int total(const Exps& e) {
  int t = 0;
  for (int x : e) t += x;
  return t;
}

OrePoly normalize(const OrePoly& p, const TermOrder& o) {
  if (p.is_zero()) return p;
  OrePoly q = p.primitive();
  return leading_coeff(q, o) < 0 ? -q : q;
}

struct Elem {
  OrePoly p;
  Exps lm;
  Rat lc;
};

Elem make(const OrePoly& p, const TermOrder& o) {
  Exps lm = leading_exps(p, o);
  return {p, lm, p.terms().at(lm)};
}

OrePoly reduce(const OrePoly& p, const std::vector<Elem>& basis, const TermOrder& o, size_t skip = SIZE_MAX) {
  OrePoly q = p, r(p.ring());
  while (!q.is_zero()) {
    Exps lm = leading_exps(q, o);
    Rat lc = q.terms().at(lm);
    const Elem* g = nullptr;
    for (size_t i = 0; i < basis.size(); ++i)
      if (i != skip && divides(basis[i].lm, lm)) {
        g = &basis[i];
        break;
      }
    if (g) {
      q = q - mul_monomial_left(diff(lm, g->lm), g->p).scale(lc / g->lc);
    } else {
      r.add_term(lm, lc);
      q.add_term(lm, -lc);
    }
  }
  return r;
}

}  // namespace

OrePoly left_reduce(const OrePoly& p, const std::vector<OrePoly>& basis, const TermOrder& o) {
  std::vector<Elem> b;
  for (auto& g : basis)
    if (!g.is_zero()) b.push_back(make(g, o));
  return reduce(p, b, o);
}

OrePoly left_reduce(const OrePoly& p, const LeftIdealBasis& b) { return left_reduce(p, b.gens, b.order); }

OrePoly s_polynomial(const OrePoly& f, const OrePoly& g, const TermOrder& o) {
  Elem a = make(f, o), b = make(g, o);
  Exps w = lcm(a.lm, b.lm);
  return mul_monomial_left(diff(w, a.lm), f).scale(b.lc) - mul_monomial_left(diff(w, b.lm), g).scale(a.lc);
}

LeftIdealBasis groebner(const std::vector<OrePoly>& gens, const TermOrder& o, const GroebnerLimits& lim) {
  RingPtr ring;
  std::vector<Elem> G;
  for (auto& g : gens) {
    if (!ring) ring = g.ring();
    OrePoly r = normalize(left_reduce(g, [&] {
                            std::vector<OrePoly> v;
                            for (auto& e : G) v.push_back(e.p);
                            return v;
                          }(), o),
                          o);
    if (!r.is_zero()) G.push_back(make(r, o));
  }
  // sugar strategy; elements whose leading monomial is divisible by a later one take no new pairs
  std::vector<int> sugar;
  std::vector<bool> dead(G.size(), false);
  for (auto& e : G) {
    int d = 0;
    for (auto& [m, c] : e.p.terms()) d = std::max(d, total(m));
    sugar.push_back(d);
  }
  struct Pair {
    size_t i, j;
    Exps lcm;
    int sugar;
  };
  std::vector<Pair> pairs;
  auto add_pair = [&](size_t i, size_t j) {
    Exps w = lcm(G[i].lm, G[j].lm);
    int s = std::max(sugar[i] + total(w) - total(G[i].lm), sugar[j] + total(w) - total(G[j].lm));
    pairs.push_back({i, j, w, s});
  };
  for (size_t j = 0; j < G.size(); ++j)
    for (size_t i = 0; i < j; ++i) add_pair(i, j);
  // pairs already reduced or discarded; the chain criterion may only lean on these
  std::set<std::pair<size_t, size_t>> resolved;
  auto is_resolved = [&](size_t a, size_t b) { return resolved.count(std::minmax(a, b)) > 0; };
  size_t done = 0;
  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t t = 1; t < pairs.size(); ++t) {
      const Pair &a = pairs[t], &b = pairs[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && o.greater(b.lcm, a.lcm))) best = t;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);
    if (++done > lim.max_pairs) throw Error(ErrorKind::DiagnosticAbort, "Gröbner basis computation exceeded the pair limit");
    resolved.insert(std::minmax(pr.i, pr.j));
    // chain criterion, with strictly smaller lcms so discarded pairs cannot cover each other
    bool skip = false;
    for (size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j || !divides(G[k].lm, pr.lcm)) continue;
      if (lcm(G[pr.i].lm, G[k].lm) == pr.lcm || lcm(G[pr.j].lm, G[k].lm) == pr.lcm) continue;
      skip = is_resolved(pr.i, k) && is_resolved(pr.j, k);
    }
    if (skip) continue;
    OrePoly s = reduce(s_polynomial(G[pr.i].p, G[pr.j].p, o), G, o);
    if (s.is_zero()) continue;
    s = normalize(s, o);
    Elem e = make(s, o);
    if (total(e.lm) > lim.max_degree)
      throw Error(ErrorKind::DiagnosticAbort, "Gröbner basis computation exceeded the degree limit");
    G.push_back(e);
    sugar.push_back(pr.sugar);
    dead.push_back(false);
    if (G.size() > lim.max_basis) throw Error(ErrorKind::DiagnosticAbort, "Gröbner basis exceeded the size limit");
    size_t h = G.size() - 1;
    for (size_t k = 0; k < h; ++k)
      if (!dead[k]) add_pair(k, h);
    for (size_t k = 0; k < h; ++k)
      if (!dead[k] && divides(e.lm, G[k].lm)) dead[k] = true;
  }
  // minimal basis, then inter-reduce
  std::vector<Elem> M;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !divides(G[j].lm, G[i].lm)) continue;
      if (G[j].lm != G[i].lm || j < i) redundant = true;
    }
    if (!redundant) M.push_back(G[i]);
  }
  for (size_t i = 0; i < M.size(); ++i) M[i] = make(normalize(reduce(M[i].p, M, o, i), o), o);
  std::sort(M.begin(), M.end(), [&](const Elem& a, const Elem& b) { return o.greater(b.lm, a.lm); });
  LeftIdealBasis out;
  out.ring = ring;
  out.order = o;
  for (auto& e : M) out.gens.push_back(e.p);
  out.is_groebner = true;
  return out;
}

bool is_groebner_basis(const std::vector<OrePoly>& g, const TermOrder& o) {
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (!left_reduce(s_polynomial(g[i], g[j], o), g, o).is_zero()) return false;
  return true;
}

std::vector<OrePoly> eliminate(const LeftIdealBasis& b, const std::vector<std::string>& kill) {
  std::vector<size_t> idx;
  for (auto& k : kill) {
    int i = b.ring->index(k);
    if (i < 0) throw Error(ErrorKind::Usage, "unknown generator " + k);
    idx.push_back(i);
  }
  std::vector<OrePoly> out;
  for (auto& g : b.gens) {
    bool free = true;
    for (size_t i : idx) free = free && !g.involves(i);
    if (free) out.push_back(g);
  }
  return out;
}

namespace {

TermOrder elimination_order(const OreRing& r, const std::string& v, const std::string& last_op, const std::string& Y) {
  std::vector<std::string> names{v};
  for (size_t i = r.num_base(); i < r.size(); ++i)
    if (r.name(i) != last_op && r.name(i) != Y) names.push_back(r.name(i));
  names.push_back(Y);
  int y = r.index(Y);
  if (y >= 0 && r.is_operator(y)) names.push_back(r.name(r.op_base(y)));
  names.push_back(last_op);
  return TermOrder::lex(r, names);
}

TelescopeOre telescope(const std::vector<OrePoly>& ann, const std::string& v, const std::string& op, const Rat& val,
                       const std::string& Y, const TermOrder& order, const GroebnerLimits& lim, ErrorKind none,
                       const std::string& what) {
  if (ann.empty()) throw Error(ErrorKind::Usage, "no annihilators given");
  TelescopeOre out;
  out.basis = groebner(ann, order, lim);
  const OreRing& r = *out.basis.ring;
  int yi = r.index(Y);
  if (yi < 0 || !r.is_operator(yi)) throw Error(ErrorKind::Usage, Y + " is not an operator of the ring");
  auto cands = eliminate(out.basis, {v});
  std::stable_sort(cands.begin(), cands.end(), [&](const OrePoly& a, const OrePoly& b) {
    if (a.degree(yi) != b.degree(yi)) return a.degree(yi) < b.degree(yi);
    return order.greater(leading_exps(b, order), leading_exps(a, order));
  });
  for (auto& c : cands) {
    OrePoly s = substitute_operator(c, op, val);
    if (s.is_zero() || s.degree(yi) == 0) continue;
    bool only = true;
    for (size_t i = r.num_base(); i < r.size(); ++i)
      if (static_cast<int>(i) != yi && s.involves(i)) only = false;
    if (!only) continue;
    out.element = c;
    out.recurrence = to_operator_eq(s, Y).canonical();
    out.notes.push_back(what + "-free element " + c.str() + ", " + op + " = " + val.get_str());
    return out;
  }
  throw Error(none, "no " + what + "-free element with a nonzero " + Y + " part in the Gröbner basis");
}

}  // namespace

TermOrder default_sum_order(const OreRing& r, const std::string& k, const std::string& K, const std::string& N) {
  return elimination_order(r, k, K, N);
}

TermOrder default_integral_order(const OreRing& r, const std::string& x, const std::string& Dx, const std::string& Y) {
  return elimination_order(r, x, Dx, Y);
}

TelescopeOre telescope_sum(const std::vector<OrePoly>& ann, const std::string& k, const std::string& K,
                           const std::string& N, const TermOrder& order, const GroebnerLimits& lim) {
  auto out = telescope(ann, k, K, 1, N, order, lim, ErrorKind::NoKFreeElement, k);
  out.notes.push_back("summand assumed to have finite support in " + k);
  return out;
}

TelescopeOre telescope_integral(const std::vector<OrePoly>& ann, const std::string& x, const std::string& Dx,
                                const std::string& Y, const TermOrder& order, const GroebnerLimits& lim) {
  auto out = telescope(ann, x, Dx, 0, Y, order, lim, ErrorKind::NoXFreeElement, x);
  out.notes.push_back("assumes natural boundary conditions in " + x + " (not checked)");
  return out;
}

}  // namespace holo
