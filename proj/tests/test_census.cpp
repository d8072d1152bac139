#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fintop/census.hpp"
#include "fintop/notation.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

std::vector<std::uint64_t> rows_of(const FiniteSpace& s) {
  std::vector<std::uint64_t> rows;
  for (PointIndex x = 0; x < s.size(); ++x) rows.push_back(s.closure_bits(x));
  return rows;
}

}  // namespace

TEST_CASE("labeled enumeration matches the relation oracle exactly, in order") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto spaces = enumerate_topologies(n, EnumerationMode::labeled);
    const auto expected = oracle::preorders(n);
    REQUIRE(spaces.size() == expected.size());
    for (std::size_t i = 0; i < spaces.size(); ++i) CHECK(rows_of(spaces[i]) == expected[i]);
  }
}

TEST_CASE("counts") {
  const std::vector<std::size_t> labeled = {1, 1, 4, 29, 355, 6942};
  for (std::size_t n = 0; n < labeled.size(); ++n) {
    CHECK(enumerate_topologies(n, EnumerationMode::labeled).size() == labeled[n]);
  }
  const std::vector<std::size_t> iso = {1, 1, 3, 9, 33, 139, 718};
  for (std::size_t n = 0; n < iso.size(); ++n) {
    CHECK(enumerate_topologies(n, EnumerationMode::up_to_iso).size() == iso[n]);
  }
  for (std::size_t n = 0; n <= 4; ++n) CHECK(enumerate_topologies(n, EnumerationMode::up_to_iso).size() == oracle::iso_classes(n));

  const std::vector<std::size_t> t0 = {1, 3, 19, 219};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t expected = 0;
    for (const auto& rows : oracle::preorders(n)) expected += oracle::antisymmetric(rows) ? 1 : 0;
    CHECK(expected == t0[n - 1]);
    CHECK(count_by_axiom(n).at(AxiomId::T0) == t0[n - 1]);
  }
}

TEST_CASE("up-to-iso representatives are pairwise non-homeomorphic") {
  const auto reps = enumerate_topologies(4, EnumerationMode::up_to_iso);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(are_homeomorphic(reps[i], reps[j]));
  }
}

TEST_CASE("out of range") {
  CHECK_THROWS_AS(enumerate_topologies(7, EnumerationMode::labeled), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_topologies(8, EnumerationMode::up_to_iso), std::invalid_argument);
}

TEST_CASE("classification is deterministic across thread counts") {
  const auto spaces = enumerate_topologies(4, EnumerationMode::labeled);
  const auto one = classify_all(spaces, 1);
  const auto many = classify_all(spaces, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].index == i);
    CHECK(one[i].axioms == many[i].axioms);
    CHECK(one[i].lifting == many[i].lifting);
    CHECK(census_record_line(one[i]) == census_record_line(many[i]));
  }
}

TEST_CASE("equivalence suite") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto report = run_equivalence_suite(n);
    CHECK(report.hard_mismatches() == 0);
    CHECK(report.per_axiom.size() == 17);
    CHECK(report.at(AxiomId::TD).mismatches.empty());
  }
  const auto report = run_equivalence_suite(2);
  const auto& cn = report.at(AxiomId::COMPLETELY_NORMAL);
  CHECK_FALSE(cn.hard);
  CHECK(cn.checked == 4);
  CHECK(cn.fraction() == doctest::Approx(0.5));
  REQUIRE_FALSE(cn.mismatches.empty());
  CHECK(cn.mismatches.front().direct);
  CHECK_FALSE(cn.mismatches.front().lifting);
  CHECK(cn.mismatches.front().witness.has_value());
  CHECK_THROWS_AS(report.at(AxiomId::R1), std::invalid_argument);
}

TEST_CASE("implication suite") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto report = run_implication_suite(n);
    CHECK(report.results.size() == 16);
    for (const auto& r : report.results) CHECK_MESSAGE(r.violations.empty(), r.name);
  }
}

TEST_CASE("the strength chain of separation predicates") {
  std::vector<FiniteSpace> spaces;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (auto& s : enumerate_topologies(n, EnumerationMode::labeled)) spaces.push_back(std::move(s));
  }
  const auto report = predicate_chain_report(spaces);
  CHECK(report.results.size() == 5);
  CHECK(report.violation_count() == 0);
  CHECK(report.results.front().checked > 0);
}

TEST_CASE("census file format") {
  const auto records = classify_all(enumerate_topologies(2, EnumerationMode::labeled));
  const auto eq = equivalence_report(records);
  const auto imp = implication_report(records);
  std::ostringstream out;
  write_census(out, records, eq, &imp);
  std::istringstream in(out.str());
  std::vector<nlohmann::json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(nlohmann::json::parse(line));
  REQUIRE(lines.size() == 5);
  // Matrix order on two points: discrete, 0 in cl{1}, 1 in cl{0}, antidiscrete.
  CHECK(lines[1]["n"] == 2);
  CHECK(lines[1]["index"] == 1);
  CHECK(lines[1]["arrows"] == nlohmann::json::parse("[[1,0]]"));
  CHECK(lines[2]["arrows"] == nlohmann::json::parse("[[0,1]]"));
  CHECK(lines[2]["axioms"]["T0"] == true);
  CHECK(lines[2]["axioms"]["T1"] == false);
  CHECK(lines[2]["lifting_agrees"]["T1"] == true);
  CHECK_FALSE(lines[2]["lifting_agrees"].contains("R1"));
  CHECK(lines[4]["counts"]["spaces"] == 4);
  CHECK(lines[4]["counts"]["T0"] == 3);
  CHECK(lines[4]["counts"]["T1"] == 1);
  CHECK(lines[4]["violations"].empty());
}
