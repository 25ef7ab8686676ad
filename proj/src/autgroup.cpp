#include "crit2/autgroup.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

#include <json.hpp>

#include "crit2/subgroup.hpp"

namespace crit2 {

namespace {

uint64_t fnv1a(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; i++) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t hash_mix(uint64_t a, uint64_t b) {
  uint64_t buf[2] = {a, b};
  return fnv1a(buf, sizeof buf);
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

bool parse_u128(const std::string& s, unsigned __int128& out) {
  if (s.empty() || s.size() > 39) return false;
  unsigned __int128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + unsigned(c - '0');
  }
  out = v;
  return true;
}

}  // namespace

bool AutGroup::is_2group() const {
  unsigned __int128 o = order;
  while (o % 2 == 0) o /= 2;
  return o == 1;
}

bool AutGroup::out_is_2group() const {
  unsigned __int128 idx = order / inner_order;
  while (idx % 2 == 0) idx /= 2;
  return idx == 1;
}

Perm conj_perm(const Group& g, Elt x) {
  Perm p(g.n);
  for (Elt i = 0; i < g.n; i++) p[i] = uint16_t(g.conj(x, i));
  return p;
}

bool is_automorphism(const Group& g, const Perm& p) {
  if (p.size() != g.n || p[0] != 0 || !perm_is_bijection(p)) return false;
  for (Elt a = 0; a < g.n; a++)
    for (Elt b = 0; b < g.n; b++)
      if (p[g.op(a, b)] != g.op(p[a], p[b])) return false;
  return true;
}

std::vector<uint64_t> element_fingerprints(const Group& g) {
  uint32_t n = g.n;
  ConjClasses cc = conjugacy_classes(g);
  std::vector<uint64_t> f(n), nf(n);
  std::vector<uint32_t> csize(n), cent(n, 0);
  for (Elt x = 0; x < n; x++) csize[x] = uint32_t(cc.members[cc.of[x]].size());
  for (Elt x = 0; x < n; x++)
    for (Elt y = 0; y < n; y++)
      if (g.op(x, y) == g.op(y, x)) cent[x]++;
  for (Elt x = 0; x < n; x++) {
    uint64_t h = hash_mix(element_order(g, x), csize[x]);
    f[x] = hash_mix(h, cent[x]);
  }
  // refinement rounds: square's value plus the multiplication profile. The
  // profile of x is the sorted multiset of (f[y], f[xy], f[yx]) over all y;
  // an automorphism permutes the y's, so the multiset is invariant. Stop
  // when a round stops splitting classes.
  std::vector<uint64_t> profile;
  size_t classes = 0;
  for (int round = 0; round < 6; round++) {
    for (Elt x = 0; x < n; x++) {
      profile.clear();
      for (Elt y = 0; y < n; y++)
        profile.push_back(hash_mix(f[y], hash_mix(f[g.op(x, y)], f[g.op(y, x)])));
      std::sort(profile.begin(), profile.end());
      uint64_t h = hash_mix(f[x], f[g.op(x, x)]);
      nf[x] = hash_mix(h, fnv1a(profile.data(), profile.size() * sizeof(uint64_t)));
    }
    f.swap(nf);
    std::vector<uint64_t> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    size_t now = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
    if (now == classes) break;
    classes = now;
  }
  // conjugate elements must agree; anything else means a non-invariant leaked in
  for (const auto& cls : cc.members)
    for (Elt x : cls)
      if (f[x] != f[cls[0]])
        throw Error(Err::inconsistency, "fingerprint not conjugation invariant in " + g.name);
  return f;
}

namespace {

// Backtracking search state over images of a fixed generating sequence.
struct AutSearch {
  const Group& g;
  const Caps& caps;
  std::vector<Elt> gens;  // greedy generating sequence
  std::vector<uint64_t> fp;
  // per level: fill schedule (e, j, f, discovered) meaning e*gens[j] = f
  struct Trip {
    Elt e;
    uint32_t j;
    Elt f;
    bool disc;
  };
  std::vector<std::vector<Trip>> sched;
  std::vector<std::vector<Elt>> cand;  // fingerprint-compatible images per level

  std::vector<Elt> img;        // partial map, n = unset
  std::vector<char> used;      // image ids taken
  std::vector<Elt> log;        // assignment undo log (preimages)
  uint64_t work = 0;
  Perm leaf;                   // first completion found by exists()

  explicit AutSearch(const Group& g_, const Caps& caps_) : g(g_), caps(caps_) {
    fp = element_fingerprints(g);
    pick_generators();
    build_schedule();
    for (Elt gi : gens) {
      std::vector<Elt> c;
      for (Elt y = 0; y < g.n; y++)
        if (fp[y] == fp[gi]) c.push_back(y);
      cand.push_back(std::move(c));
    }
    img.assign(g.n, g.n);
    used.assign(g.n, 0);
    img[0] = 0;
    used[0] = 1;
  }

  // A sequence tuned for the search, not the canonical one: prefer the next
  // generator whose closure step is largest (fewer levels, constraints bind
  // sooner), then the one with the fewest fingerprint-compatible images.
  void pick_generators() {
    std::vector<uint32_t> fpcnt(g.n, 0);
    {
      std::map<uint64_t, uint32_t> by;
      for (Elt x = 0; x < g.n; x++) by[fp[x]]++;
      for (Elt x = 0; x < g.n; x++) fpcnt[x] = by[fp[x]];
    }
    std::vector<char> in(g.n, 0);
    in[0] = 1;
    uint32_t have = 1;
    std::vector<char> tmp;
    std::vector<Elt> queue;
    while (have < g.n) {
      Elt best = g.n;
      uint32_t best_size = 0;
      for (Elt x = 1; x < g.n; x++) {
        if (in[x]) continue;
        // closure of <current, x>: BFS from the current subgroup plus x,
        // multiplying by the chosen generators and x
        tmp = in;
        queue.clear();
        for (Elt e = 0; e < g.n; e++)
          if (tmp[e]) queue.push_back(e);
        tmp[x] = 1;
        queue.push_back(x);
        uint32_t size = have + 1;
        for (size_t head = 0; head < queue.size(); head++) {
          Elt e = queue[head];
          for (size_t j = 0; j <= gens.size(); j++) {
            Elt f2 = g.op(e, j < gens.size() ? gens[j] : x);
            if (!tmp[f2]) {
              tmp[f2] = 1;
              queue.push_back(f2);
              size++;
            }
          }
        }
        if (best == g.n || size > best_size ||
            (size == best_size && (fpcnt[x] < fpcnt[best] ||
                                   (fpcnt[x] == fpcnt[best] && x < best)))) {
          best = x;
          best_size = size;
        }
      }
      gens.push_back(best);
      // rebuild the closure flags for the extended sequence
      in.assign(g.n, 0);
      in[0] = 1;
      queue.clear();
      queue.push_back(0);
      for (Elt gi : gens)
        if (!in[gi]) {
          in[gi] = 1;
          queue.push_back(gi);
        }
      have = uint32_t(queue.size());
      for (size_t head = 0; head < queue.size(); head++)
        for (Elt gi : gens) {
          Elt f2 = g.op(queue[head], gi);
          if (!in[f2]) {
            in[f2] = 1;
            queue.push_back(f2);
            have++;
          }
        }
    }
  }

  void build_schedule() {
    // BFS worklists per level; element ids are fixed, so this is computed once
    std::vector<char> seen(g.n, 0);
    std::vector<Elt> reached = {0};
    seen[0] = 1;
    sched.resize(gens.size());
    for (size_t lvl = 0; lvl < gens.size(); lvl++) {
      // mark the new generator discovered "by fiat" at this level
      size_t head = 0;
      std::vector<Elt> queue = reached;
      if (!seen[gens[lvl]]) {
        seen[gens[lvl]] = 1;
        queue.push_back(gens[lvl]);
        reached.push_back(gens[lvl]);
      }
      while (head < queue.size()) {
        Elt e = queue[head++];
        for (uint32_t j = 0; j <= lvl; j++) {
          Elt f = g.op(e, gens[j]);
          bool disc = !seen[f];
          sched[lvl].push_back({e, j, f, disc});
          if (disc) {
            seen[f] = 1;
            queue.push_back(f);
            reached.push_back(f);
          }
        }
      }
    }
    if (reached.size() != g.n)
      throw Error(Err::inconsistency, "generators do not generate in " + g.name);
  }

  void bump() {
    if (++work > caps.aut_node_budget)
      throw Error(Err::resource, "automorphism search budget exceeded for " + g.name);
  }

  // try to place images for level lvl with gens[lvl] -> y; on failure the
  // state is already rolled back. On success caller must unwind(mark).
  bool assign(size_t lvl, Elt y, size_t& mark) {
    mark = log.size();
    if (used[y] || fp[y] != fp[gens[lvl]]) return false;
    img[gens[lvl]] = y;
    used[y] = 1;
    log.push_back(gens[lvl]);
    for (const Trip& t : sched[lvl]) {
      bump();
      // gens[lvl] itself is discovered by fiat; its image is already set
      Elt want = g.op(img[t.e], img[gens[t.j]]);
      if (t.disc) {
        if (used[want] || fp[want] != fp[t.f]) {
          unwind(mark);
          return false;
        }
        img[t.f] = want;
        used[want] = 1;
        log.push_back(t.f);
      } else if (img[t.f] != want) {
        unwind(mark);
        return false;
      }
    }
    return true;
  }

  void unwind(size_t mark) {
    while (log.size() > mark) {
      Elt e = log.back();
      log.pop_back();
      used[img[e]] = 0;
      img[e] = g.n;
    }
  }

  // does any completion exist from this level? fills leaf on success
  bool exists(size_t lvl) {
    if (lvl == gens.size()) {
      leaf.assign(img.begin(), img.end());
      return true;
    }
    for (Elt y : cand[lvl]) {
      size_t mark;
      if (!assign(lvl, y, mark)) continue;
      if (exists(lvl + 1)) {
        unwind(mark);
        return true;
      }
      unwind(mark);
    }
    return false;
  }
};

struct AutRaw {
  std::vector<Perm> witnesses;
  unsigned __int128 order;
};

// exact |Aut| = product over levels of the image counts with identity prefix,
// plus one witness per non-identity image choice
AutRaw aut_backtrack(const Group& g, const Caps& caps) {
  AutSearch s(g, caps);
  AutRaw out;
  out.order = 1;
  if (s.gens.empty()) return out;  // trivial group
  for (size_t lvl = 0; lvl < s.gens.size(); lvl++) {
    uint64_t count = 0;
    for (Elt y : s.cand[lvl]) {
      size_t mark;
      if (!s.assign(lvl, y, mark)) continue;
      if (y == s.gens[lvl]) {
        // identity extends the identity prefix
        count++;
      } else if (s.exists(lvl + 1)) {
        count++;
        out.witnesses.push_back(s.leaf);
      }
      s.unwind(mark);
    }
    if (count == 0) throw Error(Err::inconsistency, "no image for a generator in " + g.name);
    out.order *= count;
    // descend: fix gens[lvl] -> gens[lvl] and keep the identity prefix
    size_t mark;
    if (!s.assign(lvl, s.gens[lvl], mark))
      throw Error(Err::inconsistency, "identity prefix failed in " + g.name);
  }
  return out;
}

// ---- cache ----

std::string cache_key(const Group& g) {
  ConjClasses cc = conjugacy_classes(g);
  std::vector<std::pair<uint32_t, uint32_t>> prof;
  for (const auto& cls : cc.members)
    prof.push_back({element_order(g, cls[0]), uint32_t(cls.size())});
  std::sort(prof.begin(), prof.end());
  uint64_t h = fnv1a(prof.data(), prof.size() * sizeof(prof[0]));
  std::vector<uint32_t> dseries;
  Subgroup d = derived(g);
  dseries.push_back(g.n);
  while (d.order > 1 && (dseries.empty() || d.order != dseries.back())) {
    dseries.push_back(d.order);
    SubgroupAsGroup sub = subgroup_as_group(d, "d");
    Subgroup dd = derived(sub.g);
    Bits lifted(g.n);
    dd.m.for_each([&](uint32_t x) { lifted.set(sub.to_parent[x]); });
    d = Subgroup(g, lifted);
  }
  h = hash_mix(h, fnv1a(dseries.data(), dseries.size() * sizeof(uint32_t)));
  h = hash_mix(h, fnv1a(g.mul.data(), g.mul.size() * sizeof(uint16_t)));
  char buf[2 * sizeof(h) + 1];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

std::mutex cache_mu;

bool cache_load(const std::string& dir, const Group& g, const std::string& key,
                std::vector<Perm>& gens, unsigned __int128& order) {
  std::lock_guard<std::mutex> lk(cache_mu);
  std::ifstream in(dir + "/autcache.jsonl");
  if (!in) return false;
  std::string line;
  while (std::getline(in, line)) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    if (j.value("v", 0) != 1 || j.value("key", "") != key || j.value("n", 0u) != g.n) continue;
    unsigned __int128 o;
    if (!parse_u128(j.value("order", ""), o)) continue;
    auto gj = j.find("gens");
    if (gj == j.end() || !gj->is_array()) continue;
    std::vector<Perm> cand;
    bool ok = true;
    for (const auto& one : *gj) {
      if (!one.is_array() || one.size() != g.n) {
        ok = false;
        break;
      }
      Perm p;
      for (const auto& e : one) {
        if (!e.is_number_unsigned() || e.get<uint32_t>() >= g.n) {
          ok = false;
          break;
        }
        p.push_back(uint16_t(e.get<uint32_t>()));
      }
      if (!ok || !is_automorphism(g, p)) {
        ok = false;
        break;
      }
      cand.push_back(std::move(p));
    }
    if (!ok) continue;
    BSGS b(g.n, cand);
    if (b.order() != o) continue;  // stale or corrupt record
    gens = std::move(cand);
    order = o;
    return true;
  }
  return false;
}

void cache_store(const std::string& dir, const Group& g, const std::string& key,
                 const std::vector<Perm>& gens, unsigned __int128 order) {
  std::lock_guard<std::mutex> lk(cache_mu);
  std::ofstream out(dir + "/autcache.jsonl", std::ios::app);
  if (!out) return;  // cache is best-effort
  nlohmann::json j;
  j["v"] = 1;
  j["key"] = key;
  j["n"] = g.n;
  j["name"] = g.name;
  j["order"] = u128_to_string(order);
  nlohmann::json ga = nlohmann::json::array();
  for (const Perm& p : gens) {
    nlohmann::json one = nlohmann::json::array();
    for (uint16_t x : p) one.push_back(x);
    ga.push_back(std::move(one));
  }
  j["gens"] = std::move(ga);
  out << j.dump() << "\n";
}

}  // namespace

std::string aut_cache_dir() {
  const char* d = std::getenv("CRIT2_CACHE_DIR");
  return d ? d : "";
}

AutGroup automorphism_group(const Group& g, const Caps& caps, const std::string& cache_dir) {
  AutGroup a;
  a.G = std::make_shared<Group>(g);
  a.inner_order = g.n / center(g).order;

  std::string key;
  if (!cache_dir.empty()) {
    key = cache_key(g);
    std::vector<Perm> gens;
    unsigned __int128 order;
    if (cache_load(cache_dir, g, key, gens, order)) {
      a.gens = std::move(gens);
      a.order = order;
      a.chain = std::make_shared<BSGS>(g.n, a.gens);
      return a;
    }
  }

  AutRaw raw = aut_backtrack(g, caps);
  for (const Perm& w : raw.witnesses)
    if (!is_automorphism(g, w))
      throw Error(Err::inconsistency, "backtracking produced a non-automorphism in " + g.name);

  // independent recount through the stabilizer chain of the witness group
  auto chain = std::make_shared<BSGS>(g.n, raw.witnesses);
  if (chain->order() != raw.order)
    throw Error(Err::inconsistency, "automorphism order cross-check failed in " + g.name);
  if (raw.order % a.inner_order != 0)
    throw Error(Err::inconsistency, "inner automorphisms do not divide |Aut| in " + g.name);

  // slim generators: keep the witnesses that grow the group
  std::vector<Perm> slim;
  BSGS acc(g.n, {});
  for (const Perm& w : raw.witnesses)
    if (acc.add_generator(w)) slim.push_back(w);

  a.gens = std::move(slim);
  a.order = raw.order;
  a.chain = std::move(chain);
  if (!cache_dir.empty()) cache_store(cache_dir, g, key, a.gens, a.order);
  return a;
}

BSGS odd_residual(const AutGroup& a) {
  uint32_t deg = a.G->n;
  std::vector<Perm> cur = a.gens;
  unsigned __int128 cur_order = a.order;
  while (true) {
    std::vector<Perm> seeds;
    for (const Perm& s : cur) seeds.push_back(perm_compose(s, s));
    for (const Perm& s : cur)
      for (const Perm& t : cur)
        seeds.push_back(perm_compose(perm_compose(s, t),
                                     perm_compose(perm_inverse(s), perm_inverse(t))));
    BSGS n = normal_closure_perm(deg, cur, seeds);
    unsigned __int128 no = n.order();
    if (no == cur_order) return n;
    cur = n.generators();
    cur_order = no;
  }
}

std::vector<Perm> odd_residual_generators(const AutGroup& a) {
  return odd_residual(a).generators();
}

bool in_o2(const AutGroup& a, const Perm& alpha) {
  if (perm_is_identity(alpha)) return true;
  if (!a.contains(alpha)) return false;
  BSGS ncl = normal_closure_perm(a.G->n, a.gens, {alpha});
  unsigned __int128 o = ncl.order();
  while (o % 2 == 0) o /= 2;
  return o == 1;
}

BSGS o2_of_aut(const AutGroup& a, const Caps& caps) {
  if (a.order > caps.enum_cap)
    throw Error(Err::resource, "automorphism group too large to enumerate for O_2");
  BSGS k(a.G->n, {});
  a.chain->for_each(
      [&](const Perm& p) {
        if (perm_is_identity(p)) return;
        // cheap screen: elements of O_2 have 2-power order, i.e. every cycle
        // length is a power of two
        std::vector<char> seen(p.size(), 0);
        for (uint32_t i = 0; i < p.size(); i++) {
          if (seen[i]) continue;
          uint32_t len = 0, j = i;
          do {
            seen[j] = 1;
            j = p[j];
            len++;
          } while (j != i);
          if (!is_pow2(len)) return;
        }
        if (k.contains(p)) return;
        if (in_o2(a, p)) {
          BSGS ncl = normal_closure_perm(a.G->n, a.gens, {p});
          for (const Perm& s : ncl.generators()) k.add_generator(s);
        }
      },
      caps.enum_cap);
  return k;
}

}  // namespace crit2
