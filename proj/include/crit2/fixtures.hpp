#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crit2/group.hpp"

namespace crit2 {

// Built-in group catalog: the constructions the analyses and tests are
// anchored on. "corpus" marks the small 2-groups (order <= 64) swept by
// oracle-compare.
struct FixtureDef {
  std::string name;
  bool corpus = false;
  std::function<Group()> build;
};

const std::vector<FixtureDef>& fixture_catalog();
bool is_fixture(const std::string& name);
Group fixture(const std::string& name);

// the individually interesting constructions
Group a12_sylow();   // order 512, nine generating involution products on 12 points
Group on_sylow();    // order 512, (C4)^3 extended by s (index 4) and t (index 2), s^4 = v1 v3
Group hs_sylow();    // same skeleton with s^4 = 1
Group psp6_sylow();  // order 512, (Q8 wr C2) o Q8 over the common central involution

}  // namespace crit2
