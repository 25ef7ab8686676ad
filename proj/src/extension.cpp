#include "crit2/extension.hpp"

#include <algorithm>

namespace crit2 {

Group cyclic_extension(const Group& base, const std::vector<Elt>& phi_gen_images,
                       uint32_t m, Elt z, std::string name, const Caps& caps) {
  if (m < 2) throw Error(Err::usage, "extension index must be at least 2 in " + name);
  if (z >= base.n) throw Error(Err::usage, "extension power out of range in " + name);
  uint64_t total = uint64_t(base.n) * m;
  if (total > caps.table_cap || total > 0xFFFF)
    throw Error(Err::size_cap, "extension order " + std::to_string(total) + " exceeds table cap in " + name);

  std::vector<Elt> phi = hom_from_gen_images(base, base, phi_gen_images);
  {
    std::vector<char> hit(base.n, 0);
    for (Elt x = 0; x < base.n; x++) hit[phi[x]] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      throw Error(Err::inconsistency, "phi is not an automorphism in " + name);
  }
  if (phi[z] != z)
    throw Error(Err::inconsistency, "t^m must be fixed by phi in " + name);
  // phi^m must equal conjugation by z
  std::vector<Elt> pw(base.n);
  for (Elt x = 0; x < base.n; x++) pw[x] = x;
  for (uint32_t k = 0; k < m; k++)
    for (Elt x = 0; x < base.n; x++) pw[x] = phi[pw[x]];
  for (Elt x = 0; x < base.n; x++)
    if (pw[x] != base.conj(z, x))
      throw Error(Err::inconsistency, "phi^m differs from conjugation by t^m in " + name);

  // powers of phi, for the pair product
  std::vector<std::vector<Elt>> phip(m);
  phip[0].resize(base.n);
  for (Elt x = 0; x < base.n; x++) phip[0][x] = x;
  for (uint32_t k = 1; k < m; k++) {
    phip[k].resize(base.n);
    for (Elt x = 0; x < base.n; x++) phip[k][x] = phi[phip[k - 1][x]];
  }

  uint32_t nb = base.n;
  auto f = [&](Elt a, Elt b) {
    Elt xa = a % nb, ia = a / nb, xb = b % nb, ib = b / nb;
    Elt c = base.op(xa, phip[ia][xb]);
    uint32_t k = ia + ib;
    if (k >= m) {
      c = base.op(c, z);
      k -= m;
    }
    return Elt(k * nb + c);
  };
  std::vector<Elt> gens;
  for (Elt g : base.gens) gens.push_back(g);
  gens.push_back(nb);  // t = (identity, 1)
  Group g = group_from_fn(uint32_t(total), f, gens, std::move(name));
  g.prov.kind = "extension";
  g.prov.summary = "cyclic index-" + std::to_string(m) + " extension of " + base.name;
  verify_table(g);
  return g;
}

Group build_extension(const Group& base, const std::vector<ExtensionStep>& steps,
                      std::string name, const Caps& caps) {
  Group g = base;
  for (size_t si = 0; si < steps.size(); si++) {
    const ExtensionStep& st = steps[si];
    if (st.phi.size() != g.gens.size())
      throw Error(Err::usage, "step " + std::to_string(si + 1) + " has " + std::to_string(st.phi.size()) +
                                  " phi words for " + std::to_string(g.gens.size()) + " generators in " + name);
    std::vector<Elt> images;
    for (const auto& w : st.phi) images.push_back(eval_word(g, w));
    Elt z = eval_word(g, st.power);
    std::string layer = si + 1 == steps.size() ? name : name + "#" + std::to_string(si + 1);
    g = cyclic_extension(g, images, st.index, z, layer, caps);
  }
  g.name = name;
  if (!steps.empty()) {
    // record the whole recipe so the group can be re-serialized as a spec
    g.prov.ext_base = std::make_shared<Group>(base);
    g.prov.ext_steps = steps;
  }
  return g;
}

}  // namespace crit2
