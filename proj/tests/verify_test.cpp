#include "doctest.h"

#include "json.hpp"

#include "desargues/error.hpp"
#include "desargues/verify.hpp"

using namespace desargues;

TEST_CASE("suite ids") {
  CHECK(suite_names() == std::vector<std::string>{
                             "involution-equivalence", "ramee", "biduality", "incidence-duality",
                             "quadrangle-independence", "pencil-theorem", "two-involutions",
                             "harmonic-FGXY", "transport", "classification"});
  for (const auto& name : suite_names()) CHECK_FALSE(suite_properties(name).empty());
  try {
    verify_suite("unknown", 1, 10);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSuite);
  }
}

TEST_CASE("reports are byte-identical for identical inputs") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto a = verify_suite(name, 7, 15);
    const auto b = verify_suite(name, 7, 15);
    CHECK(a.str() == b.str());
    CHECK(a.ok());
    CHECK(a.str().rfind("suite " + name + " seed=7 cases=15\n", 0) == 0);
  }
}

TEST_CASE("quadrangle independence and two involutions pass with seed 1") {
  for (const char* name : {"quadrangle-independence", "two-involutions"}) {
    const auto r = verify_suite(name, 1, 100);
    CHECK(r.ok());
    for (const auto& p : r.properties) {
      CAPTURE(p.name);
      CHECK(p.passed + p.discarded == 100);
      CHECK(p.failed == 0);
    }
  }
}

TEST_CASE("summary block is machine readable") {
  const auto r = verify_suite("biduality", 3, 10);
  const auto j = nlohmann::json::parse(r.summary_json());
  CHECK(j["suite"] == "biduality");
  CHECK(j["seed"] == 3);
  CHECK(j["cases"] == 10);
  CHECK(j["ok"] == true);
  const std::string text = r.str();
  CHECK(text.find("summary " + r.summary_json()) != std::string::npos);
}

TEST_CASE("failures are shrunk by halving") {
  // Fails for every integer of at least 10.
  const Property small{"below-ten", [](Draw& d) {
                         const long long x = d.integer(0, 100000);
                         return Outcome::check(x < 10, "x = " + std::to_string(x));
                       }};
  const PropertyResult r = run_property(small, 5, 30);
  CHECK(r.failed > 0);
  REQUIRE(r.counterexample);

  auto rng = case_rng(5, 0);
  Draw first(rng);
  const long long drawn = first.integer(0, 100000);
  REQUIRE(drawn >= 10);
  const auto [log, detail] = shrink(small, first.log(), "x = " + std::to_string(drawn));
  REQUIRE(log.size() == 1);
  // A fixed point of halving that still fails: at least 10, and halving passes.
  CHECK(log[0] >= Rat(10));
  CHECK(log[0] < Rat(20));
  CHECK(detail == "x = " + log[0].str());
  CHECK(r.counterexample->find("inputs [" + log[0].str() + "]") != std::string::npos);
}

TEST_CASE("rational inputs shrink toward simple values") {
  const Property p{"no-large-rationals", [](Draw& d) {
                     const Rat x = d.rat(1000);
                     return Outcome::check(x.abs() < Rat(1, 2), "x = " + x.str());
                   }};
  std::vector<Rat> log{Rat(-937, 613)};
  const auto [shrunk, detail] = shrink(p, log, "");
  REQUIRE(shrunk.size() == 1);
  CHECK(shrunk[0].abs() >= Rat(1, 2));
  CHECK(shrunk[0].num().get_si() * shrunk[0].num().get_si() <= 4);
}

TEST_CASE("errors count as failures and discards are retried") {
  const Property throws{"throws", [](Draw&) -> Outcome {
                          throw Error(ErrorKind::ZeroVector, "boom");
                        }};
  const auto r = run_property(throws, 1, 3);
  CHECK(r.failed == 3);
  CHECK(r.counterexample->find("unexpected error") != std::string::npos);

  const Property never{"never", [](Draw&) -> Outcome { throw Discard{}; }};
  const auto n = run_property(never, 1, 4);
  CHECK(n.discarded == 4);
  CHECK(n.ok());
}
