#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "crit2/fixtures.hpp"
#include "crit2/schreier.hpp"

using namespace crit2;

namespace {

Perm cycle_n(uint32_t n) {
  Perm p(n);
  for (uint32_t i = 0; i < n; i++) p[i] = uint16_t((i + 1) % n);
  return p;
}

Perm transposition(uint32_t n, uint32_t a, uint32_t b) {
  Perm p = perm_identity(n);
  p[a] = uint16_t(b);
  p[b] = uint16_t(a);
  return p;
}

uint64_t factorial(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; i++) f *= i;
  return f;
}

}  // namespace

TEST_CASE("symmetric and alternating group orders") {
  for (uint32_t n = 2; n <= 8; n++) {
    BSGS s(n, {transposition(n, 0, 1), cycle_n(n)});
    CHECK(s.order64() == factorial(n));
  }
  for (uint32_t n = 3; n <= 8; n++) {
    // A_n = <(0 1 2), (0 1)(n-2 n-1) or 3-cycles>: use (0 1 2) and an n-cycle
    // for odd n, (1 2 ... n-1) fixing 0 for even n
    std::vector<Perm> gens;
    Perm c3 = perm_identity(n);
    c3[0] = 1; c3[1] = 2; c3[2] = 0;
    gens.push_back(c3);
    if (n % 2) {
      gens.push_back(cycle_n(n));
    } else {
      Perm c = perm_identity(n);
      for (uint32_t i = 1; i < n; i++) c[i] = uint16_t(i == n - 1 ? 1 : i + 1);
      gens.push_back(c);
    }
    BSGS a(n, gens);
    CHECK(a.order64() == factorial(n) / 2);
  }
}

TEST_CASE("membership and parity") {
  uint32_t n = 6;
  Perm c3 = perm_identity(n);
  c3[0] = 1; c3[1] = 2; c3[2] = 0;
  Perm c5 = perm_identity(n);
  for (uint32_t i = 1; i < n; i++) c5[i] = uint16_t(i == n - 1 ? 1 : i + 1);
  BSGS a6(n, {c3, c5});
  REQUIRE(a6.order64() == 360);
  CHECK(a6.contains(perm_identity(n)));
  CHECK(a6.contains(perm_compose(c3, c5)));
  CHECK(!a6.contains(transposition(n, 0, 1)));
  CHECK(!a6.contains(transposition(n, 4, 5)));
  // all two-generator words stay inside
  std::vector<Perm> words = {c3, c5};
  for (const Perm& x : words)
    for (const Perm& y : words) {
      CHECK(a6.contains(perm_compose(x, y)));
      CHECK(a6.contains(perm_compose(x, perm_inverse(y))));
    }
}

TEST_CASE("bsgs order agrees with table closure on fixtures") {
  for (const char* name : {"sym3", "sym4", "sym5", "alt5", "alt6", "psl27", "psl28"}) {
    INFO(name);
    Group g = fixture(name);
    BSGS b(g.prov.degree, g.prov.perm_gens);
    CHECK(b.order64() == g.n);
  }
  Group s = a12_sylow();
  BSGS b(12, s.prov.perm_gens);
  CHECK(b.order64() == 512);
}

TEST_CASE("deterministic construction") {
  Group g = fixture("psl27");
  BSGS b1(g.prov.degree, g.prov.perm_gens);
  BSGS b2(g.prov.degree, g.prov.perm_gens);
  CHECK(b1.base() == b2.base());
  CHECK(b1.generators() == b2.generators());
}

TEST_CASE("element traversal") {
  BSGS s4(4, {transposition(4, 0, 1), cycle_n(4)});
  auto elems = s4.elements();
  CHECK(elems.size() == 24);
  std::set<Perm> uniq(elems.begin(), elems.end());
  CHECK(uniq.size() == 24);
  for (const Perm& p : elems) CHECK(s4.contains(p));
  // closed under products
  CHECK(uniq.count(perm_compose(elems[7], elems[13])) == 1);

  BSGS s8(8, {transposition(8, 0, 1), cycle_n(8)});
  CHECK_THROWS_AS(s8.for_each([](const Perm&) {}, 100), Error);

  BSGS triv(5, {});
  CHECK(triv.order64() == 1);
  CHECK(triv.elements().size() == 1);
  CHECK(triv.contains(perm_identity(5)));
  CHECK(!triv.contains(transposition(5, 0, 1)));
}

TEST_CASE("incremental generators") {
  BSGS g(5, {transposition(5, 0, 1)});
  CHECK(g.order64() == 2);
  CHECK(!g.add_generator(transposition(5, 0, 1)));  // already there
  CHECK(g.add_generator(cycle_n(5)));
  CHECK(g.order64() == 120);
  CHECK(!g.add_generator(transposition(5, 2, 3)));  // no growth
}

TEST_CASE("normal closure") {
  uint32_t n = 4;
  std::vector<Perm> s4 = {transposition(n, 0, 1), cycle_n(n)};
  Perm dbl = perm_compose(transposition(n, 0, 1), transposition(n, 2, 3));
  CHECK(normal_closure_perm(n, s4, {dbl}).order64() == 4);  // Klein four
  Perm c3 = perm_identity(n);
  c3[0] = 1; c3[1] = 2; c3[2] = 0;
  CHECK(normal_closure_perm(n, s4, {c3}).order64() == 12);  // A4
  CHECK(normal_closure_perm(n, s4, {transposition(n, 0, 1)}).order64() == 24);
  CHECK(normal_closure_perm(n, s4, {}).order64() == 1);

  // A5 is simple: every nontrivial element generates it as a normal subgroup
  Group a5 = fixture("alt5");
  const auto& gens5 = a5.prov.perm_gens;
  for (const Perm& x : gens5)
    CHECK(normal_closure_perm(5, gens5, {x}).order64() == 60);
}
