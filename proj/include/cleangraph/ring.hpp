#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cleangraph {

using ElemIndex = std::uint32_t;

// ---------------------------------------------------------------------------
// Ring specifications: the abstract syntax of the rings this toolkit builds.
// ---------------------------------------------------------------------------

struct RingSpec;

namespace spec {

struct Zn {
  std::uint64_t n = 1;
  bool operator==(const Zn&) const = default;
};

struct M2p {
  std::uint64_t p = 2;
  bool operator==(const M2p&) const = default;
};

// Z_p[x] / (f), f given by ascending coefficients and monic.
struct QuotPoly {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> coeffs;
  bool operator==(const QuotPoly&) const = default;
};

struct Product {
  std::shared_ptr<const RingSpec> left;
  std::shared_ptr<const RingSpec> right;
  bool operator==(const Product& other) const;
};

}  // namespace spec

struct RingSpec {
  std::variant<spec::Zn, spec::M2p, spec::QuotPoly, spec::Product> node;

  static RingSpec zn(std::uint64_t n);
  static RingSpec m2(std::uint64_t p);
  static RingSpec quot_poly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static RingSpec product(RingSpec left, RingSpec right);

  bool operator==(const RingSpec& other) const { return node == other.node; }
};

// Canonical surface syntax, e.g. "Z3 x Z4", "M2(Z2)", "Z2[x]/(x^2)".
// Right-nested products are parenthesised.
std::string to_string(const RingSpec& spec);

// Checks the semantic constraints (n >= 1, p prime, f monic of degree >= 1).
// Throws Error(kInvalidSpec) on violation.
void validate(const RingSpec& spec);

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Finite rings.
// ---------------------------------------------------------------------------

namespace detail {
class RingImpl;
}

class FiniteRing;

// An element handle tied to its owning ring.
struct RingElement {
  std::uint64_t ring_id = 0;
  ElemIndex index = 0;
  bool operator==(const RingElement&) const = default;
  auto operator<=>(const RingElement&) const = default;
};

// Immutable, cheaply copyable handle to a finite ring with identity. Elements
// are addressed by canonical indices in [0, order()). Multiplication is not
// assumed commutative.
class FiniteRing {
 public:
  // Rings with at most this many elements cache their addition and
  // multiplication tables; larger ones compute by rule.
  static constexpr std::uint64_t kTableThreshold = 256;

  std::uint32_t order() const;
  ElemIndex zero() const;
  ElemIndex one() const;

  ElemIndex add(ElemIndex a, ElemIndex b) const;
  ElemIndex mul(ElemIndex a, ElemIndex b) const;
  ElemIndex neg(ElemIndex a) const;
  ElemIndex sub(ElemIndex a, ElemIndex b) const { return add(a, neg(b)); }

  RingElement element(ElemIndex index) const;
  RingElement add(RingElement a, RingElement b) const;
  RingElement mul(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;

  // Human-readable form: "5", "(1,2)", "[[1,1],[0,1]]", "1+x".
  std::string format(ElemIndex a) const;

  const RingSpec& spec() const;
  std::string name() const { return to_string(spec()); }
  std::uint64_t id() const;
  bool has_tables() const;

  // The two factors when this ring was built by make_product.
  std::optional<std::pair<FiniteRing, FiniteRing>> factors() const;

 private:
  friend FiniteRing make_ring_from_impl(std::shared_ptr<detail::RingImpl>);
  explicit FiniteRing(std::shared_ptr<const detail::RingImpl> impl)
      : impl_(std::move(impl)) {}

  ElemIndex checked(RingElement e) const;

  std::shared_ptr<const detail::RingImpl> impl_;
};

FiniteRing make_zn(std::uint64_t n);
FiniteRing make_product(const FiniteRing& left, const FiniteRing& right);
FiniteRing make_m2p(std::uint64_t p);
FiniteRing make_quot_poly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
FiniteRing build_ring(const RingSpec& spec);

// Entries of a 2x2 matrix over Z_p, row-major.
struct Matrix2 {
  std::uint64_t a = 0, b = 0, c = 0, d = 0;
  bool operator==(const Matrix2&) const = default;
};

// Canonical index of a matrix in M2(Z_p): base-p digits (a, b, c, d).
ElemIndex m2_index(std::uint64_t p, const Matrix2& m);
Matrix2 m2_entries(std::uint64_t p, ElemIndex index);

// Exhaustive check of the ring axioms. Returns a description of the first
// violation found, or nullopt. Refuses rings larger than max_order.
std::optional<std::string> check_ring_axioms(const FiniteRing& ring,
                                             std::uint32_t max_order = 512);

}  // namespace cleangraph
