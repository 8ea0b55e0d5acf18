#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cleangraph/caps.hpp"
#include "cleangraph/clean_graph.hpp"
#include "cleangraph/iso.hpp"
#include "cleangraph/ring.hpp"
#include "cleangraph/ring_analysis.hpp"
#include "json.hpp"

namespace cleangraph {

enum class InstanceVerdict { kPass, kFail, kInconclusive, kFinding };

const char* to_string(InstanceVerdict v);

struct InstanceResult {
  std::string key;
  InstanceVerdict verdict = InstanceVerdict::kPass;
  nlohmann::json witness;         // null when absent
  nlohmann::json counterexample;  // null when absent
  double millis = 0.0;
};

// Outcome of checking one claim over a set of instances. The suite verdict
// passes only with zero fails and zero inconclusives; findings (possible
// counterexamples to an open conjecture) do not fail it.
struct VerificationReport {
  std::string claim_id;
  std::string anchor;  // the statement being checked
  std::vector<InstanceResult> instances;
  double wall_millis = 0.0;

  std::size_t count(InstanceVerdict v) const;
  bool passed() const;
  const InstanceResult* find(const std::string& key) const;
};

// { claim_id, paper_anchor, instances: [{ key, verdict, witness?,
//   counterexample?, millis }], suite_verdict }
nlohmann::json to_json(const VerificationReport& report);

struct RingCatalog {
  std::vector<RingSpec> rings;

  // Z_n for n in 2..16, 25, 27; Z2[x]/(x^2), Z3[x]/(x^2); products of pairs
  // from {Z2, Z3, Z4, Z5}; M2(Z2), M2(Z3).
  static RingCatalog default_catalog();
};

// Caches ring tables, clean graphs, and Cl2 isomorphism verdicts across
// checks. Not thread-safe.
class Workspace {
 public:
  explicit Workspace(Caps caps = Caps::from_env()) : caps_(caps) {}

  const Caps& caps() const { return caps_; }
  const RingTables& tables(const RingSpec& spec);
  const CleanGraph& cl(const RingSpec& spec);
  const CleanGraph& cl2(const RingSpec& spec);

  // Cached is_isomorphic on Cl2 (or Cl) graphs; throws kInconclusive.
  const IsoResult& cl2_iso(const RingSpec& a, const RingSpec& b);
  const IsoResult& cl_iso(const RingSpec& a, const RingSpec& b);

 private:
  struct Entry {
    std::optional<RingTables> tables;
    std::optional<CleanGraph> cl;
    std::optional<CleanGraph> cl2;
  };
  Entry& entry(const RingSpec& spec);

  Caps caps_;
  std::map<std::string, Entry> entries_;
  std::map<std::pair<std::string, std::string>, IsoResult> cl2_iso_;
  std::map<std::pair<std::string, std::string>, IsoResult> cl_iso_;
};

// A pair of rings isomorphic through the map k*1 -> k*1 (both additively
// generated by 1, e.g. CRT pairs), checked up to the max_power-fold product.
struct KnownIsoPair {
  RingSpec a;
  RingSpec b;
  std::size_t max_power = 2;
};

std::vector<KnownIsoPair> default_iso_pairs();

// Ring isomorphism f induces the clean-graph isomorphism (e, u) -> (f e, f u),
// and so on for n-fold products.
VerificationReport check_ring_iso_lemma(Workspace& ws,
                                        const std::vector<KnownIsoPair>& pairs);

// Over every unordered catalog pair: Cl-iso and Cl2-iso verdicts agree.
VerificationReport check_cl_iff_cl2(Workspace& ws, const RingCatalog& catalog);

// Cl2-isomorphic catalog pairs have equal |Id| and |U|.
VerificationReport check_count_corollary(Workspace& ws,
                                         const RingCatalog& catalog);

// For Cl2-isomorphic pairs with |U| > 1: every isomorphism preserves O-values
// and the U'/U'' split, and |U'| agrees. Pairs whose Cl2 exceeds the
// enumeration guard are reduced to the |U'| check with a note.
VerificationReport check_uprime_lemma(
    Workspace& ws, const RingCatalog& catalog,
    const std::vector<std::pair<RingSpec, RingSpec>>& extra_pairs = {});

// All prime powers <= bound, ascending.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t bound);

// The arithmetic predicate for Cl2(Z_a) ~= Cl2(Z_b), a != b prime powers:
// {a, b} = {4, 3}, or both odd with equal totients.
bool prime_power_iso_predicate(std::uint64_t a, std::uint64_t b);

// Sweeps all pairs of prime powers <= bound.
VerificationReport check_prime_power_criterion(Workspace& ws,
                                               std::uint64_t bound);

struct ProductInstance {
  std::uint64_t p = 3, n = 1, q = 2, m = 2, k = 1;
};

std::vector<ProductInstance> default_product_instances();

// Explicit bijection Cl2(A x Z_k) -> Cl2(B x Z_k): idempotent coordinates by
// table position, unit coordinate of A mapped to the unit of B at the same
// unit-table position, Z_k coordinates fixed. cl2_a and cl2_b are the Cl2
// graphs of the products. Throws kDomain when the left tables differ in size.
std::vector<Vertex> product_transfer_map(const RingTables& left_a,
                                         const RingTables& left_b,
                                         std::uint32_t k,
                                         const CleanGraph& cl2_a,
                                         const CleanGraph& cl2_b);

VerificationReport check_product_theorem(
    Workspace& ws, const std::vector<ProductInstance>& instances);

struct ConjectureInstance {
  RingSpec r1, r2, p1, p2;
};

std::vector<ConjectureInstance> default_conjecture_instances();

// Cl2(R1) ~= Cl2(R2) and P1 ~= P2 => Cl2(R1 x P1) ~= Cl2(R2 x P2)? A no is
// reported as a finding.
VerificationReport explore_conjecture(
    Workspace& ws, const std::vector<ConjectureInstance>& instances);

// Cl2(M2(Z_p)) ~= Shu^t_n((p(p+1)/2) K2) with the counting formulas for t and
// n, for p in {2, 3}. Other p throw kOutOfScope.
VerificationReport check_m2_structure(Workspace& ws, std::uint64_t p);

// The closed-form Cl2 degree equals the counted degree at every vertex.
VerificationReport check_degree_formula(Workspace& ws,
                                        const RingCatalog& catalog);

// Cl2(R) ~= Shu^{|U'|}_{|U|}(I(R)) through the copy/apex bijection.
VerificationReport check_shuriken_structure(Workspace& ws,
                                            const RingCatalog& catalog);

// The small worked isomorphisms: Cl2(Z3) ~= Cl2(Z4) = 2K1,
// Cl2(Z7) ~= Cl2(Z9) = 2K1 u 2K2, the Z3xZ3 / Z3xZ4 / Z4xZ4 / Z12 chain,
// and Cl2(Z4) ~= Cl2(Z2[x]/(x^2)) for non-isomorphic rings.
VerificationReport check_worked_examples(Workspace& ws);

struct SuiteOptions {
  std::optional<std::string> claim;  // run only this claim id
  std::uint64_t prime_power_bound = 200;
};

std::vector<std::string> claim_ids();

// Runs the selected claims over the default catalog. Throws kDomain for an
// unknown claim id.
std::vector<VerificationReport> run_suite(Workspace& ws,
                                          const SuiteOptions& options);

}  // namespace cleangraph
