#include "doctest.h"

#include "spinor_forge/report.hpp"

using namespace spinor_forge;
using GR = GaussianRational;

namespace {

/// Default catalog with one phi_1 coefficient negated.
CatalogEntry corrupted(std::string_view name) {
  CatalogEntry e = catalog_lookup(name);
  if (name == "spin7_pure") {
    auto& raw = e.spinor.coeffs().raw();
    auto it = raw.begin();
    std::advance(it, 3);
    it->second = -it->second;
  }
  return e;
}

}  // namespace

TEST_CASE("criterion rows on the shipped catalog") {
  for (int id : {1, 10, 12}) {
    const CriterionResult r = run_criterion(id);
    CAPTURE(id);
    CHECK(r.pass);
    CHECK(r.id == id);
    CHECK_FALSE(r.name.empty());
    CHECK_FALSE(r.expected.empty());
    CHECK_FALSE(r.computed.empty());
  }
  const CriterionResult first = run_criterion(1);
  CHECK(first.computed == "21/21 rows equal");
  CHECK(first.time_limit == 5);
}

TEST_CASE("a corrupted phi_1 coefficient fails the table row") {
  const CriterionResult r = run_criterion(1, corrupted);
  CHECK_FALSE(r.pass);
  CHECK(r.computed.find("mismatched") != std::string::npos);
  // Rows that do not read the catalog are unaffected.
  CHECK(run_criterion(12, corrupted).pass);
  CHECK(run_criterion(10, corrupted).pass);
}

TEST_CASE("exceptions inside a criterion become failing rows") {
  const CatalogSource broken = [](std::string_view) -> CatalogEntry {
    throw Error(ErrorCode::UnknownName, "catalog unavailable");
  };
  const CriterionResult r = run_criterion(1, broken);
  CHECK_FALSE(r.pass);
  CHECK(r.computed.rfind("error: ", 0) == 0);
  CHECK_THROWS_AS(run_criterion(0), Error);
  CHECK_THROWS_AS(run_criterion(kCriterionCount + 1), Error);
}
