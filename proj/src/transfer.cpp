#include "crit2/transfer.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <memory>
#include <unordered_set>

namespace crit2 {

namespace {

Elt q_pow(const Group& g, Elt x, int64_t e) {
  if (e < 0) {
    x = g.iv(x);
    e = -e;
  }
  Elt acc = 0;
  while (e) {
    if (e & 1) acc = g.op(acc, x);
    x = g.op(x, x);
    e >>= 1;
  }
  return acc;
}

using Mat = std::vector<std::vector<int64_t>>;

Mat identity_mat(size_t k) {
  Mat m(k, std::vector<int64_t>(k, 0));
  for (size_t i = 0; i < k; i++) m[i][i] = 1;
  return m;
}

// Smith normal form of the square matrix a (rows are relations). Row ops are
// applied freely; column ops are mirrored into v (a -> a*E, v -> v*E) and
// undone in vinv (vinv -> E^-1 * vinv) so that new_coords = old_coords * v
// and row j of vinv expresses the j-th new basis vector over the old one.
void smith_normal_form(Mat& a, Mat& v, Mat& vinv) {
  const size_t k = a.size();
  v = identity_mat(k);
  vinv = identity_mat(k);
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t r = 0; r < k; r++) std::swap(a[r][i], a[r][j]);
    for (size_t r = 0; r < k; r++) std::swap(v[r][i], v[r][j]);
    std::swap(vinv[i], vinv[j]);
  };
  auto col_add = [&](size_t i, size_t j, int64_t c) {
    // col i += c * col j
    for (size_t r = 0; r < k; r++) a[r][i] += c * a[r][j];
    for (size_t r = 0; r < k; r++) v[r][i] += c * v[r][j];
    for (size_t s = 0; s < k; s++) vinv[j][s] -= c * vinv[i][s];
  };

  for (size_t t = 0; t < k; t++) {
    while (true) {
      size_t pi = k, pj = k;
      for (size_t i = t; i < k; i++)
        for (size_t j = t; j < k; j++)
          if (a[i][j] != 0 &&
              (pi == k || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == k) return;  // remaining block is zero
      if (pi != t) std::swap(a[t], a[pi]);
      if (pj != t) col_swap(t, pj);
      if (a[t][t] < 0)
        for (size_t j = 0; j < k; j++) a[t][j] = -a[t][j];

      bool dirty = false;
      for (size_t i = t + 1; i < k; i++)
        if (a[i][t] != 0) {
          int64_t c = a[i][t] / a[t][t];
          if (c != 0)
            for (size_t j = 0; j < k; j++) a[i][j] -= c * a[t][j];
          if (a[i][t] != 0) dirty = true;
        }
      for (size_t j = t + 1; j < k; j++)
        if (a[t][j] != 0) {
          int64_t c = a[t][j] / a[t][t];
          if (c != 0) col_add(j, t, -c);
          if (a[t][j] != 0) dirty = true;
        }
      if (dirty) continue;

      // pivot must divide everything below and to the right
      size_t bad = k;
      for (size_t i = t + 1; i < k && bad == k; i++)
        for (size_t j = t + 1; j < k; j++)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad != k) {
        for (size_t j = 0; j < k; j++) a[t][j] += a[bad][j];
        continue;
      }
      break;
    }
  }
}

std::vector<uint32_t> add_coords(const AbelianQuotient& aq,
                                 const std::vector<uint32_t>& x,
                                 const std::vector<uint32_t>& y) {
  std::vector<uint32_t> r(aq.factors.size());
  for (size_t j = 0; j < r.size(); j++) r[j] = (x[j] + y[j]) % aq.factors[j];
  return r;
}

// Transfer images on the already abelianized domain: for each class of dom
// compute the product of the h_i over a transversal, and insist the result
// is independent of both the in-class representative and the transversal.
std::vector<Elt> transfer_images(const Group& g, const AbelianQuotient& dom,
                                 const Bits& hm, const SubgroupAsGroup& hg,
                                 const AbelianQuotient& cod) {
  const uint32_t idx = g.n / hg.g.n;
  if (hg.g.n * idx != g.n) throw Error(Err::inconsistency, "coset count");

  auto build = [&](bool greatest) {
    std::vector<Elt> reps;
    reps.reserve(idx);
    std::vector<uint32_t> coset_of(g.n, idx);
    for (uint32_t step = 0; step < g.n; step++) {
      Elt x = Elt(greatest ? g.n - 1 - step : step);
      if (coset_of[x] != idx) continue;
      uint32_t ci = uint32_t(reps.size());
      reps.push_back(x);
      hm.for_each([&](uint32_t h) {
        Elt y = g.op(x, Elt(h));
        if (coset_of[y] != idx)
          throw Error(Err::inconsistency, "cosets overlap");
        coset_of[y] = ci;
      });
    }
    if (reps.size() != idx) throw Error(Err::inconsistency, "coset count");

    std::vector<Elt> img(dom.q.n, Elt(dom.q.n));
    for (Elt x = 0; x < g.n; x++) {
      Elt acc = 0;
      for (Elt r : reps) {
        Elt xr = g.op(x, r);
        Elt rs = reps[coset_of[xr]];
        Elt h = g.op(g.iv(rs), xr);
        if (!hm.test(h)) throw Error(Err::inconsistency, "coset factor");
        acc = cod.q.op(acc, cod.proj[hg.from_parent[h]]);
      }
      Elt dq = dom.proj[x];
      if (img[dq] == Elt(dom.q.n))
        img[dq] = acc;
      else if (img[dq] != acc)
        throw Error(Err::inconsistency, "transfer not constant on classes");
    }
    return img;
  };

  std::vector<Elt> img = build(false);
  if (img != build(true))
    throw Error(Err::inconsistency, "transfer depends on transversal");
  for (Elt a = 0; a < dom.q.n; a++)
    for (Elt b = 0; b < dom.q.n; b++)
      if (img[dom.q.op(a, b)] != cod.q.op(img[a], img[b]))
        throw Error(Err::inconsistency, "transfer not a homomorphism");
  return img;
}

}  // namespace

AbelianQuotient abelian_quotient(const Group& g, QuotMode mode) {
  if (mode == QuotMode::frattini && !g.is_2group())
    throw Error(Err::domain, "frattini quotient needs a 2-group");
  AbelianQuotient aq;
  aq.source = &g;
  aq.mode = mode;
  aq.kernel = mode == QuotMode::derived ? derived(g) : frattini(g);
  QuotientResult qr = quotient_group(g, aq.kernel);
  aq.q = std::move(qr.q);
  aq.proj = std::move(qr.proj);
  const Group& q = aq.q;
  for (Elt a = 0; a < q.n; a++)
    for (Elt b = 0; b < a; b++)
      if (q.op(a, b) != q.op(b, a))
        throw Error(Err::inconsistency, "quotient not abelian");

  if (q.n == 1) {
    aq.coord.assign(1, {});
    return aq;
  }

  // Triangular relation matrix over the BFS generators: the least power of
  // each generator landing in the span of the earlier ones, expressed there.
  const uint32_t k = uint32_t(q.gens.size());
  std::vector<std::vector<int64_t>> expo(q.n);
  std::vector<int8_t> got(q.n, 0);
  expo[0].assign(k, 0);
  got[0] = 1;
  std::vector<Elt> have = {0};
  have.reserve(q.n);
  Mat rel;
  for (uint32_t i = 0; i < k; i++) {
    Elt gi = q.gens[i];
    uint32_t m = 1;
    Elt pw = gi;
    while (!got[pw]) {
      pw = q.op(pw, gi);
      if (++m > q.n) throw Error(Err::inconsistency, "generator order");
    }
    std::vector<int64_t> row(k, 0);
    for (uint32_t j = 0; j < k; j++) row[j] = -expo[pw][j];
    row[i] += int64_t(m);
    rel.push_back(std::move(row));
    std::vector<Elt> snap = have;
    Elt p = 0;
    for (uint32_t t = 1; t < m; t++) {
      p = q.op(p, gi);
      for (Elt h : snap) {
        Elt y = q.op(h, p);
        if (got[y]) throw Error(Err::inconsistency, "span overlap");
        got[y] = 1;
        expo[y] = expo[h];
        expo[y][i] += t;
        have.push_back(y);
      }
    }
  }
  if (have.size() != q.n)
    throw Error(Err::inconsistency, "generators do not span quotient");

  Mat v, vinv;
  smith_normal_form(rel, v, vinv);
  std::vector<int64_t> d(k);
  uint64_t prod = 1;
  for (uint32_t t = 0; t < k; t++) {
    d[t] = rel[t][t];
    if (d[t] <= 0) throw Error(Err::inconsistency, "relation lattice rank");
    prod *= uint64_t(d[t]);
  }
  if (prod != q.n) throw Error(Err::inconsistency, "invariant factor product");

  std::vector<uint32_t> kept;
  for (uint32_t t = 0; t < k; t++)
    if (d[t] > 1) {
      kept.push_back(t);
      aq.factors.push_back(uint32_t(d[t]));
    }

  aq.coord.resize(q.n);
  for (Elt y = 0; y < q.n; y++) {
    std::vector<uint32_t> c(kept.size());
    for (size_t j = 0; j < kept.size(); j++) {
      uint32_t t = kept[j];
      int64_t s = 0;
      for (uint32_t i = 0; i < k; i++) s += expo[y][i] * v[i][t];
      c[j] = uint32_t(((s % d[t]) + d[t]) % d[t]);
    }
    aq.coord[y] = std::move(c);
  }

  for (size_t j = 0; j < kept.size(); j++) {
    uint32_t t = kept[j];
    Elt b = 0;
    for (uint32_t i = 0; i < k; i++)
      b = q.op(b, q_pow(q, q.gens[i], vinv[t][i]));
    if (element_order(q, b) != aq.factors[j])
      throw Error(Err::inconsistency, "basis element order");
    for (size_t jj = 0; jj < kept.size(); jj++)
      if (aq.coord[b][jj] != (jj == j ? 1u : 0u))
        throw Error(Err::inconsistency, "basis coordinates");
    aq.basis.push_back(b);
  }

  // coord is additive against every generator, hence a homomorphism; with
  // distinct values it is the full isomorphism onto the factor product.
  std::unordered_set<uint64_t> seen;
  for (Elt y = 0; y < q.n; y++) {
    uint64_t key = 0;
    for (size_t j = 0; j < kept.size(); j++)
      key = key * 1315423911u + aq.coord[y][j];
    if (!seen.insert(key).second)
      throw Error(Err::inconsistency, "coordinates collide");
    for (Elt gi : q.gens)
      if (aq.coord[q.op(y, gi)] != add_coords(aq, aq.coord[y], aq.coord[gi]))
        throw Error(Err::inconsistency, "coordinates not additive");
  }
  return aq;
}

Perm induced_on_quotient(const AbelianQuotient& aq, const Perm& alpha) {
  const Group& g = *aq.source;
  if (alpha.size() != g.n) throw Error(Err::usage, "degree mismatch");
  Perm out(aq.q.n, Elt(aq.q.n));
  for (Elt y = 0; y < g.n; y++) {
    Elt a = aq.proj[y];
    Elt b = aq.proj[alpha[y]];
    if (out[a] == Elt(aq.q.n))
      out[a] = b;
    else if (out[a] != b)
      throw Error(Err::inconsistency, "map does not preserve the kernel");
  }
  std::vector<int8_t> hit(aq.q.n, 0);
  for (Elt a = 0; a < aq.q.n; a++) {
    if (out[a] == Elt(aq.q.n) || hit[out[a]])
      throw Error(Err::inconsistency, "induced map not bijective");
    hit[out[a]] = 1;
  }
  return out;
}

TransferMap transfer_map(const Group& g, const Subgroup& h, QuotMode mode) {
  if (h.G != &g) throw Error(Err::usage, "subgroup of a different group");
  TransferMap tm;
  tm.sub = std::make_shared<SubgroupAsGroup>(
      subgroup_as_group(h, g.name + "-sub"));
  tm.dom = abelian_quotient(g, mode);
  tm.cod = abelian_quotient(tm.sub->g, mode);
  tm.map = transfer_images(g, tm.dom, h.m, *tm.sub, tm.cod);
  return tm;
}

KernelIntersection transfer_kernel_intersection(const Group& s,
                                                QuotMode mode) {
  if (!s.is_2group()) throw Error(Err::domain, "needs a 2-group");
  KernelIntersection ki{abelian_quotient(s, mode), Bits(0)};
  ki.kernel = Bits(ki.aq.q.n);
  for (Elt x = 0; x < ki.aq.q.n; x++) ki.kernel.set(x);
  for (const Subgroup& m : maximal_subgroups(s)) {
    SubgroupAsGroup hg = subgroup_as_group(m, s.name + "-max");
    AbelianQuotient cod = abelian_quotient(hg.g, mode);
    std::vector<Elt> img = transfer_images(s, ki.aq, m.m, hg, cod);
    for (Elt x = 0; x < ki.aq.q.n; x++)
      if (img[x] != 0) ki.kernel.reset(x);
  }
  if (!ki.kernel.test(0)) throw Error(Err::inconsistency, "kernel misses 1");
  return ki;
}

FixedResult transfer_fixed_subgroup(
    const Group& s, QuotMode mode, const std::vector<Perm>& auts_s,
    const std::vector<std::pair<Subgroup, std::vector<Perm>>>& subgroup_auts) {
  FixedResult fr{abelian_quotient(s, mode), Bits(0)};
  fr.fixed = Bits(fr.aq.q.n);
  for (Elt x = 0; x < fr.aq.q.n; x++) fr.fixed.set(x);
  for (const Perm& alpha : auts_s) {
    Perm abar = induced_on_quotient(fr.aq, alpha);
    for (Elt x = 0; x < fr.aq.q.n; x++)
      if (abar[x] != x) fr.fixed.reset(x);
  }
  for (const auto& [p, gens] : subgroup_auts) {
    if (p.G != &s) throw Error(Err::usage, "subgroup of a different group");
    SubgroupAsGroup hg = subgroup_as_group(p, s.name + "-crit");
    AbelianQuotient cod = abelian_quotient(hg.g, mode);
    std::vector<Elt> img = transfer_images(s, fr.aq, p.m, hg, cod);
    for (const Perm& beta : gens) {
      Perm bbar = induced_on_quotient(cod, beta);
      for (Elt x = 0; x < fr.aq.q.n; x++)
        if (bbar[img[x]] != img[x]) fr.fixed.reset(x);
    }
  }
  if (!(closure_bits(fr.aq.q, fr.fixed).m == fr.fixed))
    throw Error(Err::inconsistency, "fixed set not a subgroup");
  return fr;
}

}  // namespace crit2
