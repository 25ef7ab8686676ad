#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crit2 {

using Elt = uint32_t;

enum class Err {
  malformed,      // bad input data (non-bijective generator, non-Latin table, ...)
  size_cap,       // a closure or enumeration exceeded its configured cap
  resource,       // a search exceeded its node/element budget
  domain,         // operation applied outside its domain (e.g. frattini of a non-2-group)
  inconsistency,  // extension data does not define a group
  usage,          // bad CLI/API arguments
  io,             // file or parse errors
};

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Resource caps threaded through the expensive searches. Defaults match the
// documented CLI defaults; the CLI flags override them.
struct Caps {
  uint64_t closure_cap = 1u << 20;       // max closure size for permutation groups
  uint64_t aut_node_budget = 200000000;  // backtracking nodes per automorphism search
  uint64_t enum_cap = 1u << 20;          // max elements for stored enumerations
  uint64_t stream_cap = 1u << 23;        // max elements for streamed (unstored) sweeps
  uint64_t oracle_cap = 10000;           // max |Out(P)| the embedding oracle will take
  uint64_t table_cap = 20000;            // max order for dense multiplication tables
  uint64_t candidate_cap = 200000;       // max subgroups visited by candidate ascent
};

inline const Caps& default_caps() {
  static const Caps c{};
  return c;
}

inline bool is_pow2(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// largest power of two dividing x
inline uint64_t two_part(uint64_t x) { return x & (~x + 1); }

}  // namespace crit2
