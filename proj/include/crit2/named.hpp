#pragma once

#include <string>
#include <vector>

#include "crit2/group.hpp"

namespace crit2 {

Group cyclic(uint32_t n);
// direct product of cyclic groups of the given orders
Group abelian(const std::vector<uint32_t>& orders);
Group elementary_abelian(uint32_t rank);  // (C2)^rank

Group dihedral(uint32_t order);      // even order >= 4
Group semidihedral(uint32_t order);  // 2^n, n >= 4
Group quaternion(uint32_t order);    // generalized quaternion, 2^n, n >= 3

// upper unitriangular n x n matrices over GF(q), q in {2, 4, 8}
Group unitriangular(uint32_t n, uint32_t q, const Caps& caps = default_caps());

Group direct_product(const Group& a, const Group& b, std::string name = "");
// wreath product G wr C2 = (G x G) : swap
Group wreath_c2(const Group& g, std::string name = "", const Caps& caps = default_caps());
// central product identifying za with zb (defaults: the unique central
// involution of each factor)
Group central_product(const Group& a, const Group& b, std::string name = "");
Group central_product(const Group& a, const Group& b, Elt za, Elt zb, std::string name = "");

// extraspecial groups of order 2^(2n+1): plus type = central power of D8,
// minus type = D8 central powers with one Q8 factor
Group extraspecial_plus(uint32_t n);
Group extraspecial_minus(uint32_t n);

// named-family dispatch for group files and the CLI catalog
Group named_group(const std::string& family, const std::vector<uint32_t>& params,
                  std::string name = "", const Caps& caps = default_caps());

}  // namespace crit2
