#include "cleangraph/ring.hpp"

#include <atomic>
#include <limits>
#include <sstream>

#include "cleangraph/error.hpp"

namespace cleangraph {

// ---------------------------------------------------------------------------
// RingSpec
// ---------------------------------------------------------------------------

bool spec::Product::operator==(const Product& other) const {
  return *left == *other.left && *right == *other.right;
}

RingSpec RingSpec::zn(std::uint64_t n) { return {spec::Zn{n}}; }
RingSpec RingSpec::m2(std::uint64_t p) { return {spec::M2p{p}}; }
RingSpec RingSpec::quot_poly(std::uint64_t p,
                             std::vector<std::uint64_t> coeffs) {
  return {spec::QuotPoly{p, std::move(coeffs)}};
}
RingSpec RingSpec::product(RingSpec left, RingSpec right) {
  return {spec::Product{std::make_shared<const RingSpec>(std::move(left)),
                        std::make_shared<const RingSpec>(std::move(right))}};
}

namespace {

std::string poly_to_string(const std::vector<std::uint64_t>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const std::uint64_t c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const RingSpec& s) {
  struct Printer {
    std::string operator()(const spec::Zn& z) const {
      return "Z" + std::to_string(z.n);
    }
    std::string operator()(const spec::M2p& m) const {
      return "M2(Z" + std::to_string(m.p) + ")";
    }
    std::string operator()(const spec::QuotPoly& q) const {
      return "Z" + std::to_string(q.p) + "[x]/(" + poly_to_string(q.coeffs) +
             ")";
    }
    std::string operator()(const spec::Product& p) const {
      std::string right = to_string(*p.right);
      if (std::holds_alternative<spec::Product>(p.right->node)) {
        right = "(" + right + ")";
      }
      return to_string(*p.left) + " x " + right;
    }
  };
  return std::visit(Printer{}, s.node);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void validate(const RingSpec& s) {
  struct Validator {
    void operator()(const spec::Zn& z) const {
      if (z.n == 0) throw invalid_spec("Z0 is not a ring with identity");
    }
    void operator()(const spec::M2p& m) const {
      if (!is_prime(m.p)) {
        throw invalid_spec("M2(Z" + std::to_string(m.p) +
                           "): modulus must be prime");
      }
    }
    void operator()(const spec::QuotPoly& q) const {
      if (!is_prime(q.p)) {
        throw invalid_spec("Z" + std::to_string(q.p) +
                           "[x]/(f): modulus must be prime");
      }
      if (q.coeffs.size() < 2) {
        throw invalid_spec("quotient polynomial must have degree >= 1");
      }
      for (auto c : q.coeffs) {
        if (c >= q.p) {
          throw invalid_spec("polynomial coefficient out of range mod p");
        }
      }
      if (q.coeffs.back() != 1) {
        throw invalid_spec("quotient polynomial must be monic");
      }
    }
    void operator()(const spec::Product& p) const {
      validate(*p.left);
      validate(*p.right);
    }
  };
  std::visit(Validator{}, s.node);
}

// ---------------------------------------------------------------------------
// Ring implementations
// ---------------------------------------------------------------------------

namespace detail {

// Arithmetic by rule on canonical indices.
class RingRules {
 public:
  virtual ~RingRules() = default;
  virtual ElemIndex add(ElemIndex a, ElemIndex b) const = 0;
  virtual ElemIndex mul(ElemIndex a, ElemIndex b) const = 0;
  virtual ElemIndex neg(ElemIndex a) const = 0;
  virtual ElemIndex one() const = 0;
  virtual std::string format(ElemIndex a) const = 0;
};

class RingImpl {
 public:
  RingImpl(RingSpec spec, std::uint32_t order,
           std::unique_ptr<const RingRules> rules,
           std::optional<std::pair<FiniteRing, FiniteRing>> factors)
      : spec_(std::move(spec)),
        order_(order),
        rules_(std::move(rules)),
        factors_(std::move(factors)),
        id_(next_id_++) {
    one_ = rules_->one();
    if (order_ <= FiniteRing::kTableThreshold) {
      const std::size_t n = order_;
      add_table_.resize(n * n);
      mul_table_.resize(n * n);
      for (ElemIndex a = 0; a < n; ++a) {
        for (ElemIndex b = 0; b < n; ++b) {
          add_table_[a * n + b] = rules_->add(a, b);
          mul_table_[a * n + b] = rules_->mul(a, b);
        }
      }
    }
  }

  ElemIndex add(ElemIndex a, ElemIndex b) const {
    if (!add_table_.empty()) return add_table_[std::size_t{a} * order_ + b];
    return rules_->add(a, b);
  }
  ElemIndex mul(ElemIndex a, ElemIndex b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t{a} * order_ + b];
    return rules_->mul(a, b);
  }
  ElemIndex neg(ElemIndex a) const { return rules_->neg(a); }
  ElemIndex one() const { return one_; }
  std::uint32_t order() const { return order_; }
  std::string format(ElemIndex a) const { return rules_->format(a); }
  const RingSpec& spec() const { return spec_; }
  std::uint64_t id() const { return id_; }
  bool has_tables() const { return !mul_table_.empty(); }
  const std::optional<std::pair<FiniteRing, FiniteRing>>& factors() const {
    return factors_;
  }

 private:
  static inline std::atomic<std::uint64_t> next_id_{1};

  RingSpec spec_;
  std::uint32_t order_;
  std::unique_ptr<const RingRules> rules_;
  std::optional<std::pair<FiniteRing, FiniteRing>> factors_;
  std::uint64_t id_;
  ElemIndex one_ = 0;
  std::vector<ElemIndex> add_table_;
  std::vector<ElemIndex> mul_table_;
};

namespace {

constexpr std::uint64_t kMaxOrder = std::numeric_limits<std::int32_t>::max();

std::uint32_t checked_order(std::uint64_t order, const std::string& what) {
  if (order > kMaxOrder) {
    throw budget_exceeded(what + ": ring order exceeds the index range");
  }
  return static_cast<std::uint32_t>(order);
}

// Returns base^exp, or nullopt on exceeding kMaxOrder.
std::optional<std::uint64_t> bounded_pow(std::uint64_t base,
                                         std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > kMaxOrder / base) return std::nullopt;
    r *= base;
  }
  return r;
}

class ZnRules final : public RingRules {
 public:
  explicit ZnRules(std::uint32_t n) : n_(n) {}
  ElemIndex add(ElemIndex a, ElemIndex b) const override {
    return static_cast<ElemIndex>((std::uint64_t{a} + b) % n_);
  }
  ElemIndex mul(ElemIndex a, ElemIndex b) const override {
    return static_cast<ElemIndex>((std::uint64_t{a} * b) % n_);
  }
  ElemIndex neg(ElemIndex a) const override {
    return a == 0 ? 0 : static_cast<ElemIndex>(n_ - a);
  }
  ElemIndex one() const override { return n_ == 1 ? 0 : 1; }
  std::string format(ElemIndex a) const override { return std::to_string(a); }

 private:
  std::uint32_t n_;
};

class ProductRules final : public RingRules {
 public:
  ProductRules(FiniteRing left, FiniteRing right)
      : left_(std::move(left)), right_(std::move(right)) {}

  ElemIndex add(ElemIndex a, ElemIndex b) const override {
    return join(left_.add(hi(a), hi(b)), right_.add(lo(a), lo(b)));
  }
  ElemIndex mul(ElemIndex a, ElemIndex b) const override {
    return join(left_.mul(hi(a), hi(b)), right_.mul(lo(a), lo(b)));
  }
  ElemIndex neg(ElemIndex a) const override {
    return join(left_.neg(hi(a)), right_.neg(lo(a)));
  }
  ElemIndex one() const override { return join(left_.one(), right_.one()); }
  std::string format(ElemIndex a) const override {
    return "(" + left_.format(hi(a)) + "," + right_.format(lo(a)) + ")";
  }

 private:
  ElemIndex hi(ElemIndex a) const { return a / right_.order(); }
  ElemIndex lo(ElemIndex a) const { return a % right_.order(); }
  ElemIndex join(ElemIndex h, ElemIndex l) const {
    return h * right_.order() + l;
  }

  FiniteRing left_;
  FiniteRing right_;
};

class M2Rules final : public RingRules {
 public:
  explicit M2Rules(std::uint64_t p) : p_(p) {}

  ElemIndex add(ElemIndex x, ElemIndex y) const override {
    const Matrix2 a = m2_entries(p_, x), b = m2_entries(p_, y);
    return m2_index(p_, {(a.a + b.a) % p_, (a.b + b.b) % p_,
                         (a.c + b.c) % p_, (a.d + b.d) % p_});
  }
  ElemIndex mul(ElemIndex x, ElemIndex y) const override {
    const Matrix2 a = m2_entries(p_, x), b = m2_entries(p_, y);
    return m2_index(p_, {(a.a * b.a + a.b * b.c) % p_,
                         (a.a * b.b + a.b * b.d) % p_,
                         (a.c * b.a + a.d * b.c) % p_,
                         (a.c * b.b + a.d * b.d) % p_});
  }
  ElemIndex neg(ElemIndex x) const override {
    const Matrix2 a = m2_entries(p_, x);
    return m2_index(p_, {(p_ - a.a) % p_, (p_ - a.b) % p_, (p_ - a.c) % p_,
                         (p_ - a.d) % p_});
  }
  ElemIndex one() const override { return m2_index(p_, {1, 0, 0, 1}); }
  std::string format(ElemIndex x) const override {
    const Matrix2 a = m2_entries(p_, x);
    std::ostringstream os;
    os << "[[" << a.a << ',' << a.b << "],[" << a.c << ',' << a.d << "]]";
    return os.str();
  }

 private:
  std::uint64_t p_;
};

// Polynomials of degree < d over Z_p; index = sum c_i p^i.
class QuotPolyRules final : public RingRules {
 public:
  QuotPolyRules(std::uint64_t p, std::vector<std::uint64_t> modulus)
      : p_(p), modulus_(std::move(modulus)), degree_(modulus_.size() - 1) {}

  ElemIndex add(ElemIndex x, ElemIndex y) const override {
    auto a = decode(x), b = decode(y);
    for (std::size_t i = 0; i < degree_; ++i) a[i] = (a[i] + b[i]) % p_;
    return encode(a);
  }
  ElemIndex mul(ElemIndex x, ElemIndex y) const override {
    const auto a = decode(x), b = decode(y);
    std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
    for (std::size_t i = 0; i < degree_; ++i) {
      for (std::size_t j = 0; j < degree_; ++j) {
        prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
      }
    }
    // x^d = -(f_0 + ... + f_{d-1} x^{d-1}); eliminate from the top down.
    for (std::size_t k = prod.size(); k-- > degree_;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::size_t i = 0; i < degree_; ++i) {
        const std::size_t at = k - degree_ + i;
        prod[at] = (prod[at] + (p_ - c) * modulus_[i]) % p_;
      }
    }
    prod.resize(degree_);
    return encode(prod);
  }
  ElemIndex neg(ElemIndex x) const override {
    auto a = decode(x);
    for (auto& c : a) c = (p_ - c) % p_;
    return encode(a);
  }
  ElemIndex one() const override { return 1; }
  std::string format(ElemIndex x) const override {
    const auto a = decode(x);
    std::string out;
    for (std::size_t k = 0; k < degree_; ++k) {
      if (a[k] == 0) continue;
      if (!out.empty()) out += '+';
      if (k == 0) {
        out += std::to_string(a[k]);
        continue;
      }
      if (a[k] != 1) out += std::to_string(a[k]);
      out += 'x';
      if (k > 1) out += '^' + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<std::uint64_t> decode(ElemIndex x) const {
    std::vector<std::uint64_t> c(degree_);
    std::uint64_t v = x;
    for (std::size_t i = 0; i < degree_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  }
  ElemIndex encode(const std::vector<std::uint64_t>& c) const {
    std::uint64_t v = 0;
    for (std::size_t i = degree_; i-- > 0;) v = v * p_ + c[i];
    return static_cast<ElemIndex>(v);
  }

  std::uint64_t p_;
  std::vector<std::uint64_t> modulus_;
  std::size_t degree_;
};

}  // namespace
}  // namespace detail

FiniteRing make_ring_from_impl(std::shared_ptr<detail::RingImpl> impl) {
  return FiniteRing(std::move(impl));
}

FiniteRing make_zn(std::uint64_t n) {
  const RingSpec s = RingSpec::zn(n);
  validate(s);
  const auto order = detail::checked_order(n, to_string(s));
  return make_ring_from_impl(std::make_shared<detail::RingImpl>(
      s, order, std::make_unique<detail::ZnRules>(order), std::nullopt));
}

FiniteRing make_product(const FiniteRing& left, const FiniteRing& right) {
  RingSpec s = RingSpec::product(left.spec(), right.spec());
  const auto order = detail::checked_order(
      std::uint64_t{left.order()} * right.order(), to_string(s));
  return make_ring_from_impl(std::make_shared<detail::RingImpl>(
      std::move(s), order, std::make_unique<detail::ProductRules>(left, right),
      std::make_pair(left, right)));
}

FiniteRing make_m2p(std::uint64_t p) {
  const RingSpec s = RingSpec::m2(p);
  validate(s);
  const auto order = detail::bounded_pow(p, 4);
  if (!order) throw budget_exceeded(to_string(s) + ": ring order too large");
  return make_ring_from_impl(std::make_shared<detail::RingImpl>(
      s, static_cast<std::uint32_t>(*order),
      std::make_unique<detail::M2Rules>(p), std::nullopt));
}

FiniteRing make_quot_poly(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
  const RingSpec s = RingSpec::quot_poly(p, coeffs);
  validate(s);
  const auto order = detail::bounded_pow(p, coeffs.size() - 1);
  if (!order) throw budget_exceeded(to_string(s) + ": ring order too large");
  return make_ring_from_impl(std::make_shared<detail::RingImpl>(
      s, static_cast<std::uint32_t>(*order),
      std::make_unique<detail::QuotPolyRules>(p, std::move(coeffs)),
      std::nullopt));
}

FiniteRing build_ring(const RingSpec& s) {
  struct Builder {
    FiniteRing operator()(const spec::Zn& z) const { return make_zn(z.n); }
    FiniteRing operator()(const spec::M2p& m) const { return make_m2p(m.p); }
    FiniteRing operator()(const spec::QuotPoly& q) const {
      return make_quot_poly(q.p, q.coeffs);
    }
    FiniteRing operator()(const spec::Product& p) const {
      return make_product(build_ring(*p.left), build_ring(*p.right));
    }
  };
  return std::visit(Builder{}, s.node);
}

// ---------------------------------------------------------------------------
// FiniteRing
// ---------------------------------------------------------------------------

std::uint32_t FiniteRing::order() const { return impl_->order(); }
ElemIndex FiniteRing::zero() const { return 0; }
ElemIndex FiniteRing::one() const { return impl_->one(); }
ElemIndex FiniteRing::add(ElemIndex a, ElemIndex b) const {
  return impl_->add(a, b);
}
ElemIndex FiniteRing::mul(ElemIndex a, ElemIndex b) const {
  return impl_->mul(a, b);
}
ElemIndex FiniteRing::neg(ElemIndex a) const { return impl_->neg(a); }
std::string FiniteRing::format(ElemIndex a) const { return impl_->format(a); }
const RingSpec& FiniteRing::spec() const { return impl_->spec(); }
std::uint64_t FiniteRing::id() const { return impl_->id(); }
bool FiniteRing::has_tables() const { return impl_->has_tables(); }

std::optional<std::pair<FiniteRing, FiniteRing>> FiniteRing::factors() const {
  return impl_->factors();
}

RingElement FiniteRing::element(ElemIndex index) const {
  if (index >= order()) {
    throw domain_error("element index " + std::to_string(index) +
                       " out of range for " + name());
  }
  return {id(), index};
}

ElemIndex FiniteRing::checked(RingElement e) const {
  if (e.ring_id != id()) throw domain_error("element belongs to another ring");
  return e.index;
}

RingElement FiniteRing::add(RingElement a, RingElement b) const {
  return {id(), add(checked(a), checked(b))};
}
RingElement FiniteRing::mul(RingElement a, RingElement b) const {
  return {id(), mul(checked(a), checked(b))};
}
RingElement FiniteRing::neg(RingElement a) const {
  return {id(), neg(checked(a))};
}

ElemIndex m2_index(std::uint64_t p, const Matrix2& m) {
  return static_cast<ElemIndex>(((m.a * p + m.b) * p + m.c) * p + m.d);
}

Matrix2 m2_entries(std::uint64_t p, ElemIndex index) {
  std::uint64_t v = index;
  Matrix2 m;
  m.d = v % p;
  v /= p;
  m.c = v % p;
  v /= p;
  m.b = v % p;
  v /= p;
  m.a = v % p;
  return m;
}

std::optional<std::string> check_ring_axioms(const FiniteRing& ring,
                                             std::uint32_t max_order) {
  const std::uint32_t n = ring.order();
  if (n > max_order) {
    throw budget_exceeded("axiom check refused: |R| = " + std::to_string(n) +
                          " exceeds " + std::to_string(max_order));
  }
  auto fail = [&](const std::string& law, ElemIndex a, ElemIndex b,
                  ElemIndex c) {
    return law + " fails at (" + ring.format(a) + ", " + ring.format(b) +
           ", " + ring.format(c) + ")";
  };
  if (n > 1 && ring.zero() == ring.one()) return "zero equals one";
  for (ElemIndex a = 0; a < n; ++a) {
    if (ring.add(a, ring.zero()) != a) return fail("additive identity", a, 0, 0);
    if (ring.add(a, ring.neg(a)) != ring.zero()) {
      return fail("additive inverse", a, 0, 0);
    }
    if (ring.mul(a, ring.one()) != a || ring.mul(ring.one(), a) != a) {
      return fail("multiplicative identity", a, 0, 0);
    }
    for (ElemIndex b = 0; b < n; ++b) {
      if (ring.add(a, b) != ring.add(b, a)) {
        return fail("additive commutativity", a, b, 0);
      }
      const ElemIndex ab = ring.mul(a, b);
      const ElemIndex a_plus_b = ring.add(a, b);
      for (ElemIndex c = 0; c < n; ++c) {
        if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) {
          return fail("additive associativity", a, b, c);
        }
        if (ring.mul(ab, c) != ring.mul(a, ring.mul(b, c))) {
          return fail("multiplicative associativity", a, b, c);
        }
        if (ring.mul(c, a_plus_b) != ring.add(ring.mul(c, a), ring.mul(c, b))) {
          return fail("left distributivity", c, a, b);
        }
        if (ring.mul(a_plus_b, c) != ring.add(ring.mul(a, c), ring.mul(b, c))) {
          return fail("right distributivity", a, b, c);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace cleangraph
