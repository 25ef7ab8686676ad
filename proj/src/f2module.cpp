#include "crit2/f2module.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>

namespace crit2 {

F2Mat f2_identity(uint32_t dim) {
  F2Mat a(dim);
  for (uint32_t i = 0; i < dim; i++) a[i] = F2Vec(1u << i);
  return a;
}

F2Vec f2_apply(const F2Mat& a, F2Vec v) {
  F2Vec out = 0;
  while (v) {
    uint32_t i = std::countr_zero(v);
    v &= F2Vec(v - 1);
    out ^= a[i];
  }
  return out;
}

F2Mat f2_mul(const F2Mat& a, const F2Mat& b) {
  F2Mat out(a.size());
  for (size_t i = 0; i < a.size(); i++) out[i] = f2_apply(b, a[i]);
  return out;
}

uint32_t f2_rank(F2Mat a) {
  uint32_t rank = 0;
  for (size_t col = 0; col < a.size(); col++) {
    size_t piv = rank;
    while (piv < a.size() && !(a[piv] >> col & 1)) piv++;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    for (size_t i = 0; i < a.size(); i++)
      if (i != rank && (a[i] >> col & 1)) a[i] ^= a[rank];
    rank++;
  }
  return rank;
}

bool f2_is_identity(const F2Mat& a) {
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] != F2Vec(1u << i)) return false;
  return true;
}

F2Mat f2_inverse(const F2Mat& a) {
  uint32_t dim = uint32_t(a.size());
  F2Mat m = a, inv = f2_identity(dim);
  uint32_t rank = 0;
  for (uint32_t col = 0; col < dim; col++) {
    uint32_t piv = rank;
    while (piv < dim && !(m[piv] >> col & 1)) piv++;
    if (piv == dim) continue;
    std::swap(m[rank], m[piv]);
    std::swap(inv[rank], inv[piv]);
    for (uint32_t i = 0; i < dim; i++)
      if (i != rank && (m[i] >> col & 1)) {
        m[i] ^= m[rank];
        inv[i] ^= inv[rank];
      }
    rank++;
  }
  if (rank != dim) throw Error(Err::domain, "matrix is singular");
  // rows of m are now e_{pivot order}; permute inv rows to match
  F2Mat out(dim);
  for (uint32_t i = 0; i < dim; i++) out[std::countr_zero(m[i])] = inv[i];
  return out;
}

void validate_module(const F2Module& m) {
  if (m.dim > kF2DimMax) throw Error(Err::domain, "module dimension exceeds 16");
  if (!m.labels.empty() && m.labels.size() != m.action.size())
    throw Error(Err::usage, "label list does not match the action list");
  for (const F2Mat& a : m.action) {
    if (a.size() != m.dim) throw Error(Err::domain, "action matrix has wrong shape");
    for (F2Vec row : a)
      if (m.dim < 16 && (row >> m.dim)) throw Error(Err::domain, "matrix row exceeds dimension");
    if (f2_rank(a) != m.dim) throw Error(Err::domain, "action matrix is singular");
  }
}

F2Mat action_of_word(const F2Module& m, const std::vector<int>& word) {
  F2Mat out = f2_identity(m.dim);
  for (int w : word) {
    size_t i = size_t(w > 0 ? w : -w) - 1;
    if (w == 0 || i >= m.action.size())
      throw Error(Err::usage, "word letter out of range");
    out = f2_mul(out, w > 0 ? m.action[i] : f2_inverse(m.action[i]));
  }
  return out;
}

uint32_t commutator_rank(const F2Module& m, const F2Mat& s) {
  if (s.size() != m.dim) throw Error(Err::usage, "operator has wrong dimension");
  F2Mat d = s;
  for (uint32_t i = 0; i < m.dim; i++) d[i] ^= F2Vec(1u << i);
  return f2_rank(d);
}

uint32_t commutator_rank(const F2Module& m, const std::vector<int>& word) {
  return commutator_rank(m, action_of_word(m, word));
}

uint32_t fixed_rank(const F2Module& m, const F2Mat& s) {
  return m.dim - commutator_rank(m, s);
}

uint32_t fixed_rank(const F2Module& m, const std::vector<int>& word) {
  return fixed_rank(m, action_of_word(m, word));
}

namespace {

// Reduced basis of a subspace: rows pairwise reduced, distinct pivots
// (lowest set bit), insertion order kept for coordinates.
struct Echelon {
  std::vector<F2Vec> rows;

  F2Vec reduce(F2Vec v) const {
    for (F2Vec r : rows) {
      uint32_t p = std::countr_zero(r);
      if (v >> p & 1) v ^= r;
    }
    return v;
  }

  // true when v was independent and inserted
  bool insert(F2Vec v) {
    v = reduce(v);
    if (!v) return false;
    uint32_t p = std::countr_zero(v);
    for (F2Vec& r : rows)
      if (r >> p & 1) r ^= v;
    rows.push_back(v);
    return true;
  }

  // coordinates of v in terms of rows; false when v is outside the span
  bool coords(F2Vec v, F2Vec& out) const {
    out = 0;
    for (size_t j = 0; j < rows.size(); j++) {
      uint32_t p = std::countr_zero(rows[j]);
      if (v >> p & 1) {
        v ^= rows[j];
        out ^= F2Vec(1u << j);
      }
    }
    return v == 0;
  }
};

// spin v under the action; gives up (nullopt) as soon as the dimension
// reaches cap, which cannot improve on an already known smaller spin
std::optional<Echelon> spin(const F2Module& m, F2Vec v, uint32_t cap) {
  Echelon e;
  e.insert(v);
  std::vector<F2Vec> queue = {e.rows[0]};
  for (size_t head = 0; head < queue.size(); head++)
    for (const F2Mat& a : m.action) {
      F2Vec w = f2_apply(a, queue[head]);
      if (e.insert(w)) {
        if (e.rows.size() >= cap) return std::nullopt;
        queue.push_back(e.rows.back());
      }
    }
  return e;
}

F2Module restrict_to(const F2Module& m, const Echelon& e) {
  F2Module out;
  out.dim = uint32_t(e.rows.size());
  out.labels = m.labels;
  for (const F2Mat& a : m.action) {
    F2Mat b(out.dim);
    for (uint32_t j = 0; j < out.dim; j++)
      if (!e.coords(f2_apply(a, e.rows[j]), b[j]))
        throw Error(Err::inconsistency, "spin is not invariant");
    out.action.push_back(std::move(b));
  }
  return out;
}

F2Module quotient_by(const F2Module& m, const Echelon& e) {
  uint32_t pivots = 0;
  for (F2Vec r : e.rows) pivots |= F2Vec(1u << std::countr_zero(r));
  std::vector<uint32_t> keep;
  for (uint32_t c = 0; c < m.dim; c++)
    if (!(pivots >> c & 1)) keep.push_back(c);
  auto compress = [&](F2Vec v) {
    F2Vec out = 0;
    for (size_t t = 0; t < keep.size(); t++)
      if (v >> keep[t] & 1) out ^= F2Vec(1u << t);
    return out;
  };
  F2Module out;
  out.dim = uint32_t(keep.size());
  out.labels = m.labels;
  for (const F2Mat& a : m.action) {
    F2Mat b(out.dim);
    for (size_t t = 0; t < keep.size(); t++)
      b[t] = compress(e.reduce(f2_apply(a, F2Vec(1u << keep[t]))));
    out.action.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::vector<F2Module> composition_factors(const F2Module& m, uint64_t seed) {
  validate_module(m);
  std::vector<F2Module> out;
  F2Module cur = m;
  while (cur.dim > 0) {
    std::vector<uint32_t> order;
    order.reserve((1u << cur.dim) - 1);
    for (uint32_t v = 1; v < (1u << cur.dim); v++) order.push_back(v);
    if (seed) {
      std::mt19937_64 rng(seed);
      std::shuffle(order.begin(), order.end(), rng);
    }
    std::optional<Echelon> best;
    for (uint32_t v : order) {
      uint32_t cap = best ? uint32_t(best->rows.size()) : cur.dim + 1;
      std::optional<Echelon> e = spin(cur, F2Vec(v), cap);
      if (e && (!best || e->rows.size() < best->rows.size())) best = std::move(e);
      if (best && best->rows.size() == 1) break;
    }
    if (!best || best->rows.size() == cur.dim) {
      out.push_back(std::move(cur));  // irreducible
      break;
    }
    out.push_back(restrict_to(cur, *best));
    cur = quotient_by(cur, *best);
  }
  return out;
}

std::optional<F2Module> moved_factor_witness(const F2Module& m,
                                             const std::vector<size_t>& s0,
                                             uint32_t k) {
  for (size_t i : s0)
    if (i >= m.action.size()) throw Error(Err::usage, "operator index out of range");
  for (F2Module& f : composition_factors(m)) {
    if (f.dim < 2 * k) continue;
    if (k >= 2) {
      bool moved = true;
      for (size_t i : s0)
        if (commutator_rank(f, f.action[i]) < 2) {
          moved = false;
          break;
        }
      if (!moved) continue;
    }
    return f;
  }
  return std::nullopt;
}

F2Module section_module(const Group& g, const Subgroup& upper,
                        const Subgroup& lower, const std::vector<Perm>& actors,
                        std::vector<std::string> labels) {
  if (upper.G != &g || lower.G != &g)
    throw Error(Err::usage, "section subgroups belong to a different group");
  std::vector<Elt> ups = upper.m.to_list();
  std::vector<Elt> lows = lower.m.to_list();
  for (Elt x : lows)
    if (!upper.contains(x)) throw Error(Err::domain, "section lower part not inside upper");
  for (Elt x : ups) {
    if (!lower.contains(g.op(x, x)))
      throw Error(Err::domain, "section is not elementary abelian in " + g.name);
    for (Elt y : ups)
      if (!lower.contains(g.comm(x, y)))
        throw Error(Err::domain, "section is not elementary abelian in " + g.name);
  }
  for (const Perm& a : actors) {
    if (a.size() != g.n) throw Error(Err::usage, "actor degree mismatch");
    for (Elt x : ups)
      if (!upper.contains(a[x]))
        throw Error(Err::domain, "actor does not preserve the section in " + g.name);
    for (Elt x : lows)
      if (!lower.contains(a[x]))
        throw Error(Err::domain, "actor does not preserve the section in " + g.name);
  }

  // basis cosets, least representative first
  std::vector<Elt> basis;
  Subgroup span = lower;
  for (Elt e : ups) {
    if (span.order == upper.order) break;
    if (span.contains(e)) continue;
    basis.push_back(e);
    span = extend(span, e);
  }
  if (basis.size() > kF2DimMax)
    throw Error(Err::size_cap, "section rank exceeds 16 in " + g.name);
  uint32_t r = uint32_t(basis.size());

  auto coset_min = [&](Elt x) {
    Elt best = g.n;
    for (Elt l : lows) best = std::min(best, g.op(x, l));
    return best;
  };
  std::vector<Elt> prod(size_t(1) << r, 0);
  std::unordered_map<Elt, F2Vec> coord_of;
  coord_of.reserve(prod.size());
  for (uint32_t mask = 0; mask < prod.size(); mask++) {
    if (mask) {
      uint32_t i = std::countr_zero(mask);
      prod[mask] = g.op(prod[mask & (mask - 1)], basis[i]);
    }
    coord_of[coset_min(prod[mask])] = F2Vec(mask);
  }
  if (coord_of.size() != prod.size())
    throw Error(Err::inconsistency, "coset coordinates collide in " + g.name);

  F2Module out;
  out.dim = r;
  out.labels = std::move(labels);
  for (const Perm& a : actors) {
    F2Mat mat(r);
    for (uint32_t i = 0; i < r; i++) mat[i] = coord_of.at(coset_min(a[basis[i]]));
    out.action.push_back(std::move(mat));
  }
  validate_module(out);
  return out;
}

F2Module frattini_module(const Group& g, const std::vector<Perm>& actors,
                         std::vector<std::string> labels) {
  if (!g.is_2group()) throw Error(Err::domain, "frattini section needs a 2-group");
  return section_module(g, full_subgroup(g), frattini(g), actors, std::move(labels));
}

}  // namespace crit2
