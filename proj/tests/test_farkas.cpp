#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lp_oracle.hpp"
#include "rnm/farkas.hpp"
#include "rnm/formula.hpp"

using rnm::Rational;
using rnm::Rel;
using rnm::SFormula;
using rnm::SLinearConstraint;
using rnm::SPoly;

namespace {

const Rational kLo(0);
const Rational kHi(100001, 100000);
const Rational kPrec(1, 10000000);

// phi(s) + nu*t + omega*u >= theta
SLinearConstraint row(SPoly phi, Rational nu, Rational omega, Rational theta) {
  return SLinearConstraint{std::move(phi), std::move(nu), std::move(omega), std::move(theta)};
}

std::vector<SLinearConstraint> random_system(std::mt19937& rng, int max_rows = 6) {
  std::uniform_int_distribution<int> nrows(1, max_rows);
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> deg(0, 2);
  std::vector<SLinearConstraint> rows;
  int n = nrows(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> cs(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = Rational(small(rng));
    rows.push_back(row(SPoly(cs), Rational(small(rng)), Rational(small(rng)), Rational(small(rng))));
  }
  return rows;
}

}  // namespace

TEST_CASE("feasibility condition on hand-checked systems") {
  SECTION("contradictory pair t >= 0, -t >= 1 is infeasible for every s") {
    auto f = rnm::feasibility_condition(
        {row(SPoly(Rational(0)), 1, 0, 0), row(SPoly(Rational(0)), -1, 0, 1)});
    for (int k = 0; k <= 10; ++k) CHECK_FALSE(f.eval_at(rnm::rat(k, 10)));
  }
  SECTION("a single halfplane is always feasible") {
    auto f = rnm::feasibility_condition({row(SPoly::variable(), 1, 1, 0)});
    CHECK(f.kind() == SFormula::Kind::True);
  }
  SECTION("t >= s and -t >= -1 is feasible exactly for s <= 1") {
    auto f = rnm::feasibility_condition(
        {row(SPoly(Rational(0)) - SPoly::variable(), 1, 0, 0), row(SPoly(Rational(0)), -1, 0, -1)});
    auto set = rnm::satisfying_set(f, kLo, kHi, kPrec);
    REQUIRE(set.intervals().size() == 1);
    CHECK(set.intervals()[0].lo == kLo);
    // the right endpoint is a root bracket refined only to kPrec
    CHECK(abs(set.intervals()[0].hi - Rational(1)) <= kPrec);
  }
  SECTION("the empty system is TRUE") {
    CHECK(rnm::feasibility_condition({}).kind() == SFormula::Kind::True);
  }
}

TEST_CASE("symbolic feasibility matches the exact planar oracle") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> snum(0, 100001);
  for (int trial = 0; trial < 200; ++trial) {
    auto rows = random_system(rng);
    SFormula f = rnm::feasibility_condition(rows);
    for (int k = 0; k < 20; ++k) {
      Rational s = rnm::rat(snum(rng), 100000);
      CAPTURE(trial, k, rnm::to_double(s));
      CHECK(f.eval_at(s) == rnm_tests::feasible_at(rows, s));
    }
  }
}

TEST_CASE("adding a constraint never enlarges the satisfying set") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    auto rows = random_system(rng, 4);
    auto base = rnm::satisfying_set(rnm::feasibility_condition(rows), kLo, kHi, kPrec);
    rows.push_back(row(SPoly(std::vector<Rational>{Rational(small(rng)), Rational(small(rng))}),
                       Rational(small(rng)), Rational(small(rng)), Rational(small(rng))));
    auto extended = rnm::satisfying_set(rnm::feasibility_condition(rows), kLo, kHi, kPrec);
    // compare on a grid, tolerating endpoint precision
    for (int k = 0; k <= 2000; ++k) {
      Rational s = kLo + rnm::rat(k, 2000) * (kHi - kLo);
      if (extended.contains(s) && !base.contains(s)) {
        bool near = false;
        for (const auto& iv : base.intervals())
          near = near || abs(s - iv.lo) <= kPrec || abs(s - iv.hi) <= kPrec;
        for (const auto& iv : extended.intervals())
          near = near || abs(s - iv.lo) <= kPrec || abs(s - iv.hi) <= kPrec;
        CHECK(near);
      }
    }
  }
}

TEST_CASE("three-row subsets decide full-system feasibility (planar Helly)") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> snum(0, 100001);
  for (int trial = 0; trial < 60; ++trial) {
    // force systems larger than any single checked subset
    std::vector<SLinearConstraint> rows = random_system(rng, 3);
    auto more = random_system(rng, 3);
    rows.insert(rows.end(), more.begin(), more.end());
    SFormula f = rnm::feasibility_condition(rows);
    for (int k = 0; k < 20; ++k) {
      Rational s = rnm::rat(snum(rng), 100000);
      CAPTURE(trial, k, rnm::to_double(s));
      CHECK(f.eval_at(s) == rnm_tests::feasible_at(rows, s));
    }
  }
}
