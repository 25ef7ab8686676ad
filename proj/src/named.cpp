#include "crit2/named.hpp"

#include <algorithm>

#include "crit2/subgroup.hpp"

namespace crit2 {

Group cyclic(uint32_t n) {
  if (n == 0 || n > 0xFFFF) throw Error(Err::usage, "bad cyclic order");
  std::vector<Elt> gens;
  if (n > 1) gens.push_back(1);
  Group g = group_from_fn(n, [n](Elt a, Elt b) { return Elt((a + b) % n); }, gens,
                          "C" + std::to_string(n));
  g.prov.kind = "named";
  g.prov.summary = "cyclic group of order " + std::to_string(n);
  g.prov.family = "cyclic";
  g.prov.params = {n};
  return g;
}

Group abelian(const std::vector<uint32_t>& orders) {
  Group g = cyclic(1);
  std::string name;
  for (uint32_t m : orders) {
    g = direct_product(g, cyclic(m));
    name += (name.empty() ? "" : "x") + ("C" + std::to_string(m));
  }
  g.name = name.empty() ? "C1" : name;
  g.prov.kind = "named";
  g.prov.summary = "abelian group " + g.name;
  g.prov.family = "abelian";
  g.prov.params = orders;
  return g;
}

Group elementary_abelian(uint32_t rank) {
  if (rank > 15) throw Error(Err::usage, "elementary abelian rank too large");
  uint32_t n = 1u << rank;
  std::vector<Elt> gens;
  for (uint32_t i = 0; i < rank; i++) gens.push_back(Elt(1) << i);
  Group g = group_from_fn(n, [](Elt a, Elt b) { return a ^ b; }, gens,
                          "C2^" + std::to_string(rank));
  g.prov.kind = "named";
  g.prov.summary = "elementary abelian of rank " + std::to_string(rank);
  g.prov.family = "elementary_abelian";
  g.prov.params = {rank};
  return g;
}

Group dihedral(uint32_t order) {
  if (order < 4 || order % 2) throw Error(Err::usage, "dihedral order must be even and >= 4");
  uint32_t m = order / 2;
  Group g = group_from_fn(
      order,
      [m](Elt a, Elt b) {
        Elt ia = a % m, ea = a / m, ib = b % m, eb = b / m;
        Elt i = ea ? (ia + m - ib) % m : (ia + ib) % m;
        return Elt((ea ^ eb) * m + i);
      },
      {1, m}, "D" + std::to_string(order));
  g.prov.kind = "named";
  g.prov.summary = "dihedral group of order " + std::to_string(order);
  g.prov.family = "dihedral";
  g.prov.params = {order};
  return g;
}

Group semidihedral(uint32_t order) {
  if (order < 16 || !is_pow2(order)) throw Error(Err::usage, "semidihedral order must be 2^n, n >= 4");
  uint32_t m = order / 2;
  uint32_t j = m / 2 - 1;  // s r s = r^j
  Group g = group_from_fn(
      order,
      [m, j](Elt a, Elt b) {
        Elt ia = a % m, ea = a / m, ib = b % m, eb = b / m;
        Elt i = ea ? (ia + uint64_t(j) * ib) % m : (ia + ib) % m;
        return Elt((ea ^ eb) * m + i);
      },
      {1, m}, "SD" + std::to_string(order));
  g.prov.kind = "named";
  g.prov.summary = "semidihedral group of order " + std::to_string(order);
  g.prov.family = "semidihedral";
  g.prov.params = {order};
  return g;
}

Group quaternion(uint32_t order) {
  if (order < 8 || !is_pow2(order)) throw Error(Err::usage, "quaternion order must be 2^n, n >= 3");
  uint32_t m = order / 2;
  Group g = group_from_fn(
      order,
      [m](Elt a, Elt b) {
        Elt ia = a % m, ea = a / m, ib = b % m, eb = b / m;
        Elt i = ea ? (ia + m - ib) % m : (ia + ib) % m;
        if (ea & eb) i = (i + m / 2) % m;  // s^2 = r^(m/2)
        return Elt((ea ^ eb) * m + i);
      },
      {1, m}, "Q" + std::to_string(order));
  g.prov.kind = "named";
  g.prov.summary = "generalized quaternion group of order " + std::to_string(order);
  g.prov.family = "quaternion";
  g.prov.params = {order};
  return g;
}

namespace {

// GF(q) multiplication for q in {2, 4, 8}: bit polynomials modulo
// x^2+x+1 (q=4) or x^3+x+1 (q=8)
uint32_t gf_mul(uint32_t a, uint32_t b, uint32_t q) {
  uint32_t mod = q == 4 ? 0b111 : 0b1011;
  uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & q) a ^= mod;
  }
  return r;
}

}  // namespace

Group unitriangular(uint32_t n, uint32_t q, const Caps& caps) {
  if (n < 2 || (q != 2 && q != 4 && q != 8)) throw Error(Err::usage, "unitriangular needs n >= 2, q in {2,4,8}");
  uint32_t npos = n * (n - 1) / 2;
  uint64_t total = 1;
  for (uint32_t i = 0; i < npos; i++) {
    total *= q;
    if (total > caps.table_cap) throw Error(Err::size_cap, "unitriangular group too large");
  }
  // strictly upper positions in row-major order
  std::vector<std::pair<uint32_t, uint32_t>> pos;
  for (uint32_t i = 0; i < n; i++)
    for (uint32_t j = i + 1; j < n; j++) pos.push_back({i, j});
  auto decode = [&](Elt e, std::vector<uint32_t>& mat) {
    std::fill(mat.begin(), mat.end(), 0);
    for (uint32_t i = 0; i < n; i++) mat[i * n + i] = 1;
    for (uint32_t k = 0; k < npos; k++) {
      mat[pos[k].first * n + pos[k].second] = e % q;
      e /= q;
    }
  };
  auto encode = [&](const std::vector<uint32_t>& mat) {
    Elt e = 0;
    for (uint32_t k = npos; k-- > 0;) e = Elt(e * q + mat[pos[k].first * n + pos[k].second]);
    return e;
  };
  std::vector<uint32_t> ma(n * n), mb(n * n), mc(n * n);
  auto f = [&](Elt a, Elt b) {
    decode(a, ma);
    decode(b, mb);
    for (uint32_t i = 0; i < n; i++)
      for (uint32_t j = i; j < n; j++) {
        uint32_t s = 0;
        for (uint32_t k = i; k <= j; k++) s ^= gf_mul(ma[i * n + k], mb[k * n + j], q);
        mc[i * n + j] = s;
      }
    return encode(mc);
  };
  // generators: superdiagonal transvections with each GF(2)-basis scalar
  std::vector<Elt> gens;
  std::vector<uint32_t> mg(n * n);
  for (uint32_t i = 0; i + 1 < n; i++)
    for (uint32_t v = 1; v < q; v <<= 1) {
      std::fill(mg.begin(), mg.end(), 0);
      for (uint32_t d = 0; d < n; d++) mg[d * n + d] = 1;
      mg[i * n + i + 1] = v;
      gens.push_back(encode(mg));
    }
  Group g = group_from_fn(uint32_t(total), f, gens,
                          "UT(" + std::to_string(n) + "," + std::to_string(q) + ")");
  g.prov.kind = "named";
  g.prov.summary = "upper unitriangular " + std::to_string(n) + "x" + std::to_string(n) +
                   " matrices over GF(" + std::to_string(q) + ")";
  g.prov.family = "unitriangular";
  g.prov.params = {n, q};
  return g;
}

Group direct_product(const Group& a, const Group& b, std::string name) {
  uint64_t total = uint64_t(a.n) * b.n;
  if (total > 0xFFFF) throw Error(Err::size_cap, "direct product too large");
  uint32_t nb = b.n;
  auto f = [&](Elt x, Elt y) {
    return Elt(a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb));
  };
  std::vector<Elt> gens;
  for (Elt x : a.gens) gens.push_back(x * nb);
  for (Elt y : b.gens) gens.push_back(y);
  if (name.empty()) name = a.name + "x" + b.name;
  Group g = group_from_fn(uint32_t(total), f, gens, std::move(name));
  g.prov.kind = "product";
  g.prov.summary = "direct product " + a.name + " x " + b.name;
  return g;
}

Group wreath_c2(const Group& h, std::string name, const Caps& caps) {
  uint64_t total = 2 * uint64_t(h.n) * h.n;
  if (total > caps.table_cap || total > 0xFFFF)
    throw Error(Err::size_cap, "wreath product too large: " + h.name);
  uint32_t nh = h.n;
  auto f = [&](Elt x, Elt y) {
    Elt xa = (x / nh) % nh, xb = x % nh, xe = x / (nh * nh);
    Elt ya = (y / nh) % nh, yb = y % nh, ye = y / (nh * nh);
    Elt ra = h.op(xa, xe ? yb : ya);
    Elt rb = h.op(xb, xe ? ya : yb);
    return Elt((xe ^ ye) * nh * nh + ra * nh + rb);
  };
  std::vector<Elt> gens;
  for (Elt a : h.gens) gens.push_back(a * nh);
  gens.push_back(nh * nh);  // the swap
  if (name.empty()) name = h.name + "wrC2";
  Group g = group_from_fn(uint32_t(total), f, gens, std::move(name));
  g.prov.kind = "product";
  g.prov.summary = "wreath product " + h.name + " wr C2";
  return g;
}

namespace {

Elt unique_central_involution(const Group& g) {
  Subgroup z = center(g);
  Elt found = 0;
  uint32_t count = 0;
  z.m.for_each([&](uint32_t x) {
    if (x != 0 && g.op(Elt(x), Elt(x)) == 0) {
      found = Elt(x);
      count++;
    }
  });
  if (count != 1)
    throw Error(Err::domain, "central involution not unique in " + g.name +
                                 " (found " + std::to_string(count) + ")");
  return found;
}

}  // namespace

Group central_product(const Group& a, const Group& b, Elt za, Elt zb, std::string name) {
  if (za >= a.n || zb >= b.n) throw Error(Err::usage, "central product element out of range");
  if (element_order(a, za) != 2 || element_order(b, zb) != 2 ||
      !center(a).contains(za) || !center(b).contains(zb))
    throw Error(Err::domain, "central product needs central involutions");
  Group dp = direct_product(a, b);
  // direct_product renumbered, so find the pair (za, zb) by replaying BFS
  // words over the embedded generators (dp.gens lists a's gens then b's)
  auto embed = [&](const Group& src, size_t gen_off, Elt x) {
    // express x as a word by BFS in src, then evaluate over dp's gens
    std::vector<Elt> img(src.n, dp.n);
    std::vector<Elt> queue{0};
    img[0] = 0;
    for (uint32_t head = 0; head < queue.size(); head++) {
      Elt u = queue[head];
      for (size_t i = 0; i < src.gens.size(); i++) {
        Elt v = src.op(u, src.gens[i]);
        if (img[v] == dp.n) {
          img[v] = dp.op(img[u], dp.gens[gen_off + i]);
          queue.push_back(v);
        }
      }
    }
    if (img[x] == dp.n) throw Error(Err::malformed, "generators do not generate " + src.name);
    return img[x];
  };
  Elt pa = embed(a, 0, za);
  Elt pb = embed(b, a.gens.size(), zb);
  Subgroup ncent = closure(dp, {dp.op(pa, pb)});
  auto qr = quotient_group(dp, ncent);
  Group g = std::move(qr.q);
  if (name.empty()) name = a.name + "o" + b.name;
  g.name = std::move(name);
  g.prov.kind = "product";
  g.prov.summary = "central product " + a.name + " o " + b.name;
  return g;
}

Group central_product(const Group& a, const Group& b, std::string name) {
  return central_product(a, b, unique_central_involution(a), unique_central_involution(b),
                         std::move(name));
}

Group extraspecial_plus(uint32_t n) {
  if (n == 0 || n > 4) throw Error(Err::usage, "extraspecial width out of range");
  Group g = dihedral(8);
  for (uint32_t i = 1; i < n; i++) g = central_product(g, dihedral(8));
  g.name = "2^(1+" + std::to_string(2 * n) + ")+";
  g.prov.kind = "named";
  g.prov.summary = "extraspecial plus type of order 2^" + std::to_string(2 * n + 1);
  g.prov.family = "extraspecial_plus";
  g.prov.params = {n};
  return g;
}

Group extraspecial_minus(uint32_t n) {
  if (n == 0 || n > 4) throw Error(Err::usage, "extraspecial width out of range");
  Group g = quaternion(8);
  for (uint32_t i = 1; i < n; i++) g = central_product(g, dihedral(8));
  g.name = "2^(1+" + std::to_string(2 * n) + ")-";
  g.prov.kind = "named";
  g.prov.summary = "extraspecial minus type of order 2^" + std::to_string(2 * n + 1);
  g.prov.family = "extraspecial_minus";
  g.prov.params = {n};
  return g;
}

Group named_group(const std::string& family, const std::vector<uint32_t>& params,
                  std::string name, const Caps& caps) {
  auto arity = [&](size_t k) {
    if (params.size() != k)
      throw Error(Err::usage, "family " + family + " takes " + std::to_string(k) + " parameter(s)");
  };
  Group g = [&]() -> Group {
    if (family == "cyclic") { arity(1); return cyclic(params[0]); }
    if (family == "abelian") return abelian(params);
    if (family == "elementary_abelian") { arity(1); return elementary_abelian(params[0]); }
    if (family == "dihedral") { arity(1); return dihedral(params[0]); }
    if (family == "semidihedral") { arity(1); return semidihedral(params[0]); }
    if (family == "quaternion") { arity(1); return quaternion(params[0]); }
    if (family == "unitriangular") { arity(2); return unitriangular(params[0], params[1], caps); }
    if (family == "extraspecial_plus") { arity(1); return extraspecial_plus(params[0]); }
    if (family == "extraspecial_minus") { arity(1); return extraspecial_minus(params[0]); }
    throw Error(Err::usage, "unknown group family: " + family);
  }();
  if (!name.empty()) g.name = std::move(name);
  return g;
}

}  // namespace crit2
