#include "cleangraph/ring_analysis.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cleangraph/error.hpp"

namespace cleangraph {

namespace {

void require_within_cap(const FiniteRing& ring, const Caps& caps,
                        const char* what) {
  if (ring.order() > caps.max_ring_order) {
    throw budget_exceeded(std::string(what) + " refused: |" + ring.name() +
                          "| = " + std::to_string(ring.order()) +
                          " exceeds the ring-order cap " +
                          std::to_string(caps.max_ring_order));
  }
}

}  // namespace

std::ptrdiff_t IdempotentTable::position(ElemIndex e) const {
  const auto it = std::lower_bound(all.begin(), all.end(), e);
  if (it == all.end() || *it != e) return -1;
  return it - all.begin();
}

bool IdempotentTable::contains(ElemIndex e) const { return position(e) >= 0; }

std::size_t IdempotentTable::ortho_count(ElemIndex e) const {
  const auto pos = position(e);
  if (pos < 0) throw domain_error("not an idempotent: " + std::to_string(e));
  return ortho[static_cast<std::size_t>(pos)];
}

std::size_t UnitTable::position(ElemIndex u) const {
  if (u >= pos_of.size() || pos_of[u] < 0) {
    throw domain_error("not a unit: " + std::to_string(u));
  }
  return static_cast<std::size_t>(pos_of[u]);
}

ElemIndex UnitTable::inverse(ElemIndex u) const {
  return units[inverse_pos[position(u)]];
}

IdempotentTable idempotents(const FiniteRing& ring, const Caps& caps) {
  require_within_cap(ring, caps, "idempotent scan");
  IdempotentTable t;
  for (ElemIndex a = 0; a < ring.order(); ++a) {
    if (ring.mul(a, a) == a) t.all.push_back(a);
  }
  for (ElemIndex e : t.all) {
    if (e != ring.zero()) t.nonzero.push_back(e);
    if (e != ring.zero() && e != ring.one()) t.nontrivial.push_back(e);
  }
  t.ortho.reserve(t.all.size());
  for (ElemIndex e : t.all) {
    std::size_t count = 0;
    for (ElemIndex f : t.nonzero) {
      if (ring.mul(e, f) == ring.zero() && ring.mul(f, e) == ring.zero()) {
        ++count;
      }
    }
    t.ortho.push_back(count);
  }
  return t;
}

UnitTable units(const FiniteRing& ring, const Caps& caps) {
  require_within_cap(ring, caps, "unit scan");
  const ElemIndex one = ring.one();
  const std::uint32_t n = ring.order();

  // inverse_of[a] = two-sided inverse of a, or n when a is not a unit.
  std::vector<ElemIndex> inverse_of(n, n);
  for (ElemIndex a = 0; a < n; ++a) {
    if (inverse_of[a] != n) continue;
    for (ElemIndex b = 0; b < n; ++b) {
      if (ring.mul(a, b) == one && ring.mul(b, a) == one) {
        inverse_of[a] = b;
        inverse_of[b] = a;
        break;
      }
    }
  }

  std::vector<ElemIndex> involutions;
  std::vector<std::pair<ElemIndex, ElemIndex>> pairs;  // (smaller, larger)
  for (ElemIndex a = 0; a < n; ++a) {
    const ElemIndex inv = inverse_of[a];
    if (inv == n) continue;
    if (inv == a) {
      involutions.push_back(a);
    } else if (a < inv) {
      pairs.emplace_back(a, inv);
    }
  }

  UnitTable t;
  t.involution_count = involutions.size();
  t.units = involutions;
  for (const auto& pr : pairs) t.units.push_back(pr.first);
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    t.units.push_back(it->second);
  }
  t.pos_of.assign(n, -1);
  for (std::size_t i = 0; i < t.units.size(); ++i) {
    t.pos_of[t.units[i]] = static_cast<std::int64_t>(i);
  }
  t.inverse_pos.resize(t.units.size());
  for (std::size_t i = 0; i < t.units.size(); ++i) {
    t.inverse_pos[i] = static_cast<std::size_t>(t.pos_of[inverse_of[t.units[i]]]);
  }
  return t;
}

RingTables analyze(const FiniteRing& ring, const Caps& caps) {
  return {ring, idempotents(ring, caps), units(ring, caps)};
}

std::uint64_t unit_count_m2_formula(std::uint64_t p) {
  return p * p * p * p - p * p * p - p * p + p;
}

std::uint64_t involution_count_m2_formula(std::uint64_t p) {
  return p == 2 ? 4 : p * p + p + 2;
}

std::array<std::size_t, 4> InvolutionFamilies::sizes() const {
  return {families[0].size(), families[1].size(), families[2].size(),
          families[3].size()};
}

std::size_t InvolutionFamilies::total() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.size();
  return n;
}

InvolutionFamilies involutions_m2_classified(std::uint64_t p) {
  if (!is_prime(p)) {
    throw invalid_spec("involution classification needs a prime, got " +
                       std::to_string(p));
  }
  const std::uint64_t minus_one = p - 1;
  auto modinv = [p](std::uint64_t x) {
    // Fermat: x^(p-2) mod p.
    std::uint64_t result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  InvolutionFamilies out;
  auto& [diagonal, lower, upper, off_diagonal] = out.families;
  const std::array<std::uint64_t, 2> signs = {1, minus_one};
  for (auto a : signs) {
    for (auto d : signs) diagonal.push_back(m2_index(p, {a, 0, 0, d}));
  }
  for (std::uint64_t x = 1; x < p; ++x) {
    lower.push_back(m2_index(p, {1, 0, x, minus_one}));
    lower.push_back(m2_index(p, {minus_one, 0, x, 1}));
    upper.push_back(m2_index(p, {1, x, 0, minus_one}));
    upper.push_back(m2_index(p, {minus_one, x, 0, 1}));
  }
  for (std::uint64_t a = 0; a < p; ++a) {
    if (a == 1 || a == minus_one) continue;
    const std::uint64_t one_minus_a2 = (1 + p * p - a * a % p) % p;
    for (std::uint64_t b = 1; b < p; ++b) {
      const std::uint64_t c = one_minus_a2 * modinv(b) % p;
      off_diagonal.push_back(m2_index(p, {a, b, c, (p - a) % p}));
    }
  }
  for (auto& f : out.families) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  return out;
}

}  // namespace cleangraph
