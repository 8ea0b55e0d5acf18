#include <algorithm>

#include "cleangraph/error.hpp"
#include "cleangraph/theorems.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cleangraph;

namespace {

auto z = RingSpec::zn;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kDomain;
}

// Every fail or finding must carry a counterexample.
void check_report_shape(const VerificationReport& r) {
  CHECK_FALSE(r.claim_id.empty());
  CHECK_FALSE(r.anchor.empty());
  CHECK(std::is_sorted(r.instances.begin(), r.instances.end(),
                       [](const auto& a, const auto& b) { return a.key < b.key; }));
  for (const auto& i : r.instances) {
    if (i.verdict == InstanceVerdict::kFail ||
        i.verdict == InstanceVerdict::kFinding) {
      CHECK_FALSE(i.counterexample.is_null());
    }
  }
}

nlohmann::json without_timing(nlohmann::json j) {
  for (auto& report : j) {
    for (auto& inst : report["instances"]) inst.erase("millis");
  }
  return j;
}

}  // namespace

TEST_CASE("prime powers up to 200 match an independent sieve") {
  const auto got = prime_powers_up_to(200);
  CHECK(got == support::sieve_prime_powers(200));
  CHECK(got.size() == 60);
  CHECK(got.size() * (got.size() - 1) / 2 == 1770);
  CHECK(got.front() == 2);
  CHECK(got.back() == 199);
  CHECK(std::count(got.begin(), got.end(), 128) == 1);
  CHECK(prime_powers_up_to(1).empty());
}

TEST_CASE("prime-power predicate") {
  CHECK(prime_power_iso_predicate(4, 3));
  CHECK(prime_power_iso_predicate(3, 4));
  CHECK(prime_power_iso_predicate(9, 7));
  CHECK_FALSE(prime_power_iso_predicate(25, 13));
  CHECK_FALSE(prime_power_iso_predicate(8, 4));
  CHECK_FALSE(prime_power_iso_predicate(2, 3));
  CHECK(prime_power_iso_predicate(27, 19));
  CHECK(kind_of([] { prime_power_iso_predicate(6, 5); }) == ErrorKind::kDomain);
}

TEST_CASE("prime-power sweep at a small bound") {
  Workspace ws;
  const VerificationReport r = check_prime_power_criterion(ws, 30);
  check_report_shape(r);
  CHECK(r.passed());
  const auto* e = r.find("enumeration");
  REQUIRE(e != nullptr);
  CHECK(e->witness["prime_powers"] == 16);
  const auto* nine = r.find("Z9 | Z7");
  REQUIRE(nine != nullptr);
  CHECK(nine->witness["iso"]["isomorphic"] == true);
  CHECK(nine->witness["order_criterion"]["holds"] == true);
  const auto* four = r.find("Z4 | Z3");
  REQUIRE(four != nullptr);
  CHECK(four->witness["predicate"] == true);
  const auto* t25 = r.find("Z25 | Z13");
  REQUIRE(t25 != nullptr);
  CHECK(t25->witness["iso"]["isomorphic"] == false);
}

TEST_CASE("count corollary examples") {
  Workspace ws;
  RingCatalog c;
  c.rings = {z(7), z(9), RingSpec::product(z(3), z(4)), z(12), z(5)};
  const VerificationReport r = check_count_corollary(ws, c);
  CHECK(r.passed());
  const auto* a = r.find("Z7 | Z9");
  REQUIRE(a != nullptr);
  CHECK(a->witness["idempotents"] == nlohmann::json::array({2, 2}));
  CHECK(a->witness["units"] == nlohmann::json::array({6, 6}));
  const auto* b = r.find("Z3 x Z4 | Z12");
  REQUIRE(b != nullptr);
  CHECK(b->witness["idempotents"] == nlohmann::json::array({4, 4}));
  CHECK(r.find("Z7 | Z5") == nullptr);
}

TEST_CASE("Cl and Cl2 verdicts agree on examples") {
  Workspace ws;
  RingCatalog c;
  c.rings = {z(3), z(4), z(7), RingSpec::quot_poly(2, {0, 0, 1})};
  const VerificationReport r = check_cl_iff_cl2(ws, c);
  CHECK(r.passed());
  CHECK(r.instances.size() == 6);
  CHECK(r.find("Z3 | Z4")->witness["cl"]["isomorphic"] == true);
  CHECK(r.find("Z3 | Z7")->witness["cl2"]["isomorphic"] == false);
  CHECK(r.find("Z4 | Z2[x]/(x^2)")->witness["cl"]["isomorphic"] == true);
}

TEST_CASE("U' lemma on tiny pairs") {
  Workspace ws;
  RingCatalog c;
  c.rings = {z(3), z(4), z(7), z(9)};
  const VerificationReport r = check_uprime_lemma(ws, c, {{z(12), z(12)}});
  check_report_shape(r);
  CHECK(r.passed());
  CHECK(r.find("Z7 | Z9")->witness["isomorphisms"] == 16);
  CHECK(r.find("Z3 | Z4")->witness["involutions"] ==
        nlohmann::json::array({2, 2}));
  CHECK(r.find("Z12 | Z12") != nullptr);

  // Over the enumeration guard only |U'| is compared.
  const VerificationReport big =
      check_uprime_lemma(ws, RingCatalog{},
                         {{z(35), RingSpec::product(z(5), z(7))}});
  CHECK(big.passed());
  CHECK(big.instances.at(0).witness.contains("note"));
}

TEST_CASE("ring isomorphisms lift to clean graphs") {
  Workspace ws;
  const VerificationReport r = check_ring_iso_lemma(ws, default_iso_pairs());
  check_report_shape(r);
  CHECK(r.passed());
  CHECK(r.find("Z6 | Z2 x Z3")->witness["vertices"] == 8);
  CHECK(r.find("Z15 | Z3 x Z5") != nullptr);
  CHECK(r.find("Z6 x Z6 | Z2 x Z3 x (Z2 x Z3)") != nullptr);
  // Z4 and Z2 x Z2 are not generated by 1 in the same way.
  CHECK(kind_of([&] {
          check_ring_iso_lemma(
              ws, {{z(4), RingSpec::product(z(2), z(2)), 1}});
        }) == ErrorKind::kDomain);
}

TEST_CASE("product transfer map") {
  Workspace ws;
  const RingSpec a = RingSpec::product(z(9), z(5));
  const RingSpec b = RingSpec::product(z(7), z(5));
  const CleanGraph& ca = ws.cl2(a);
  const CleanGraph& cb = ws.cl2(b);
  // |Id| = 4 and |U| = 24, so 3 * 24 vertices.
  CHECK(ca.graph.order() == 72);
  const auto map = product_transfer_map(ws.tables(z(9)), ws.tables(z(7)), 5, ca, cb);
  CHECK(verify_bijection(ca.graph, cb.graph, map).ok);

  const VerificationReport r =
      check_product_theorem(ws, default_product_instances());
  check_report_shape(r);
  CHECK(r.passed());
  for (std::uint64_t k = 1; k <= 10; ++k) {
    for (const char* prefix : {"(3,1,2,2,", "(3,2,7,1,"}) {
      const auto* i = r.find(prefix + std::to_string(k) + ")");
      REQUIRE(i != nullptr);
      CHECK(i->witness["route"] == "explicit");
    }
  }
  CHECK(r.find("(3,2,5,1,2)")->witness["products_iso"] == false);

  // Outside the hypothesis: Cl2(Z2) and Cl2(Z3) differ and 2 is even.
  const VerificationReport bad = check_product_theorem(ws, {{2, 1, 3, 1, 1}});
  check_report_shape(bad);
  CHECK_FALSE(bad.passed());
  CHECK(kind_of([&] {
          product_transfer_map(ws.tables(z(2)), ws.tables(z(3)), 1,
                               ws.cl2(z(2)), ws.cl2(z(3)));
        }) == ErrorKind::kDomain);
}

TEST_CASE("conjecture exploration reports findings without failing") {
  Workspace ws;
  const VerificationReport r =
      explore_conjecture(ws, default_conjecture_instances());
  check_report_shape(r);
  CHECK(r.passed());
  CHECK(r.find("Z3 x Z5 | Z3 x Z5")->verdict == InstanceVerdict::kPass);

  // P1 = Z4 and P2 = Z2 x Z2 are not isomorphic, so a "no" is expected; it
  // must surface as a finding with a serialized counterexample.
  const VerificationReport f = explore_conjecture(
      ws, {{z(3), z(3), z(4), RingSpec::product(z(2), z(2))}});
  check_report_shape(f);
  CHECK(f.passed());
  REQUIRE(f.instances.size() == 1);
  CHECK(f.instances[0].verdict == InstanceVerdict::kFinding);
  CHECK(f.count(InstanceVerdict::kFinding) == 1);

  const VerificationReport h = explore_conjecture(ws, {{z(3), z(7), z(2), z(2)}});
  CHECK_FALSE(h.passed());
}

TEST_CASE("M2 structure") {
  Workspace ws;
  for (std::uint64_t p : {2u, 3u}) {
    const VerificationReport r = check_m2_structure(ws, p);
    check_report_shape(r);
    CHECK(r.passed());
    CHECK(r.instances.size() == 5);
  }
  const VerificationReport two = check_m2_structure(ws, 2);
  const auto* s = two.find("M2(Z2) shuriken bijection");
  REQUIRE(s != nullptr);
  CHECK(s->witness["vertices"] == 42);
  CHECK(s->witness["t"] == 4);
  CHECK(s->witness["n"] == 6);
  const VerificationReport three = check_m2_structure(ws, 3);
  CHECK(three.find("M2(Z3) shuriken bijection")->witness["vertices"] == 624);
  CHECK(three.find("M2(Z3) idempotent graph")->witness["copies_of_k2"] == 6);

  CHECK(kind_of([&] { check_m2_structure(ws, 5); }) == ErrorKind::kOutOfScope);
  CHECK(kind_of([&] { check_m2_structure(ws, 4); }) == ErrorKind::kInvalidSpec);
}

TEST_CASE("worked examples record the ring distinction") {
  Workspace ws;
  const VerificationReport r = check_worked_examples(ws);
  check_report_shape(r);
  CHECK(r.passed());
  const auto* d = r.find("Z4 | Z2[x]/(x^2)");
  REQUIRE(d != nullptr);
  CHECK(d->witness["characteristic"] == nlohmann::json::array({4, 2}));
  CHECK(d->witness["square_zero"][1] == nlohmann::json::array({"x"}));
  CHECK(r.instances.size() == 9);
}

TEST_CASE("report JSON layout") {
  VerificationReport r;
  r.claim_id = "demo";
  r.anchor = "a statement";
  r.instances.push_back({"k1", InstanceVerdict::kPass, nullptr, nullptr, 1.5});
  r.instances.push_back(
      {"k2", InstanceVerdict::kFail, nullptr, {{"x", 1}}, 2.0});
  const nlohmann::json j = to_json(r);
  CHECK(j["claim_id"] == "demo");
  CHECK(j["paper_anchor"] == "a statement");
  CHECK(j["suite_verdict"] == "fail");
  CHECK_FALSE(j["instances"][0].contains("witness"));
  CHECK_FALSE(j["instances"][0].contains("counterexample"));
  CHECK(j["instances"][1]["verdict"] == "fail");
  CHECK(j["instances"][1]["counterexample"]["x"] == 1);
  CHECK(j["instances"][0]["millis"] == 1.5);
}

TEST_CASE("suite is deterministic and rejects unknown claims") {
  SuiteOptions opts;
  opts.prime_power_bound = 50;
  Workspace a, b;
  nlohmann::json ja = nlohmann::json::array(), jb = nlohmann::json::array();
  for (const auto& r : run_suite(a, opts)) ja.push_back(to_json(r));
  for (const auto& r : run_suite(b, opts)) jb.push_back(to_json(r));
  CHECK(without_timing(ja) == without_timing(jb));
  CHECK(ja.size() == claim_ids().size());
  for (const auto& r : ja) CHECK(r["suite_verdict"] == "pass");

  opts.claim = "no-such-claim";
  CHECK(kind_of([&] { run_suite(a, opts); }) == ErrorKind::kDomain);
  opts.claim = "worked-examples";
  CHECK(run_suite(a, opts).size() == 1);
}

TEST_CASE("default catalog") {
  const RingCatalog c = RingCatalog::default_catalog();
  CHECK(c.rings.size() == 31);
  CHECK(c.rings.size() * (c.rings.size() - 1) / 2 == 465);
  Workspace ws;
  for (const RingSpec& s : c.rings) {
    CHECK(ws.tables(s).ring.order() <= ws.caps().max_ring_order);
    CHECK(ws.cl(s).graph.order() <= ws.caps().max_vertices);
  }
}
