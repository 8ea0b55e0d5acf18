#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cleangraph/caps.hpp"
#include "cleangraph/ring.hpp"

namespace cleangraph {

// Idempotents of a ring with two-sided orthogonality counts.
struct IdempotentTable {
  std::vector<ElemIndex> all;         // by canonical index; contains 0 and 1
  std::vector<ElemIndex> nonzero;     // all \ {0}
  std::vector<ElemIndex> nontrivial;  // all \ {0, 1}
  // ortho[i] = O_e for e = all[i]: number of nonzero idempotents f with
  // ef = fe = 0.
  std::vector<std::size_t> ortho;

  // O_e for an idempotent e. Throws kDomain if e is not in the table.
  std::size_t ortho_count(ElemIndex e) const;
  bool contains(ElemIndex e) const;
  // Position of e in `all`, or -1.
  std::ptrdiff_t position(ElemIndex e) const;
};

// Units in the canonical pairing order: the involutions U' first by
// canonical index, then U'' arranged so that the unit at 0-based position
// t + i is inverse to the one at position size() - 1 - i. Within each inverse
// pair the smaller canonical index comes first.
struct UnitTable {
  std::vector<ElemIndex> units;
  std::vector<std::size_t> inverse_pos;  // position of the inverse of units[i]
  std::size_t involution_count = 0;      // t = |U'|
  std::vector<std::int64_t> pos_of;      // element index -> position or -1

  std::size_t size() const { return units.size(); }
  bool is_unit(ElemIndex a) const { return pos_of[a] >= 0; }
  bool is_involution(ElemIndex a) const {
    return is_unit(a) && static_cast<std::size_t>(pos_of[a]) < involution_count;
  }
  std::size_t position(ElemIndex u) const;
  ElemIndex inverse(ElemIndex u) const;

  std::vector<ElemIndex> involutions() const {
    return {units.begin(), units.begin() + involution_count};
  }
  std::vector<ElemIndex> non_involutions() const {
    return {units.begin() + involution_count, units.end()};
  }
};

IdempotentTable idempotents(const FiniteRing& ring, const Caps& caps = {});
UnitTable units(const FiniteRing& ring, const Caps& caps = {});

// A ring together with its idempotent and unit tables.
struct RingTables {
  FiniteRing ring;
  IdempotentTable idem;
  UnitTable unit;
};

RingTables analyze(const FiniteRing& ring, const Caps& caps = {});

// |U(M2(Z_p))| = p^4 - p^3 - p^2 + p.
std::uint64_t unit_count_m2_formula(std::uint64_t p);
// |U'(M2(Z_p))| = 4 for p = 2, p^2 + p + 2 otherwise.
std::uint64_t involution_count_m2_formula(std::uint64_t p);

// The involutions of M2(Z_p) split by the four shapes u^2 = I can take:
//   diagonal      b = 0, c = 0, a, d in {1, -1}
//   lower         b = 0, a = -d in {1, -1}, c != 0
//   upper         c = 0, a = -d in {1, -1}, b != 0
//   off_diagonal  a = -d not in {1, -1}, b != 0, c = (1 - a^2) / b
// Each family is a set of canonical indices (sorted, no repeats).
struct InvolutionFamilies {
  std::array<std::vector<ElemIndex>, 4> families;
  static constexpr std::array<const char*, 4> kNames = {
      "diagonal", "lower", "upper", "off_diagonal"};

  std::array<std::size_t, 4> sizes() const;
  std::size_t total() const;
};

InvolutionFamilies involutions_m2_classified(std::uint64_t p);

}  // namespace cleangraph
