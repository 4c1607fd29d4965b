#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semistar/numsgr.hpp"

using namespace semistar;

namespace {

SemigroupPtr sg(std::vector<long> g) { return std::make_shared<const NumericalSemigroup>(std::move(g)); }

MonomialIdeal random_ideal(std::mt19937_64& rng, const SemigroupPtr& S, long lo, long hi) {
  std::vector<long> raw;
  for (uint64_t k = 1 + rng() % 3; k > 0; --k) raw.push_back(lo + static_cast<long>(rng() % (hi - lo + 1)));
  return ideal_normalize(S, raw);
}

}  // namespace

TEST_CASE("frobenius numbers and gaps") {
  CHECK(sg({3, 4, 5})->frobenius() == 2);
  CHECK(sg({3, 4, 5})->gaps() == std::vector<long>{1, 2});
  CHECK(sg({2, 3})->frobenius() == 1);
  CHECK(sg({4, 6, 9})->frobenius() == 11);
  CHECK(sg({3, 5})->frobenius() == 7);
  CHECK(sg({3, 5})->gaps().size() == 4);
  CHECK(sg({1})->frobenius() == -1);
  // redundant generators are dropped
  CHECK(sg({3, 4, 5, 6, 7})->generators() == std::vector<long>{3, 4, 5});
  CHECK_THROWS(sg({4, 6}));
}

TEST_CASE("ideal counts in the sweep window") {
  CHECK(enumerate_ideals(sg({3, 4, 5}), 0, 8).size() == 31);
  CHECK(enumerate_ideals(sg({2, 3}), 0, 7).size() == 15);
}

TEST_CASE("normal form") {
  auto S = sg({3, 4, 5});
  auto I = ideal_normalize(S, {7, 3, 4, 3, 9});
  CHECK(I.generators() == std::vector<long>{3, 4});
  CHECK(I.format() == "<x^3, x^4>");
  CHECK(I.contains(8));
  CHECK(!I.contains(5));
  CHECK(maximal_ideal(S).format() == "<x^3, x^4, x^5>");
}

TEST_CASE("divisorial closures on <3,4,5>") {
  auto S = sg({3, 4, 5});
  auto E = ideal_normalize(S, {3, 4}), F = ideal_normalize(S, {3, 5});
  CHECK(v_closure(E) == maximal_ideal(S));
  CHECK(v_closure(F) == maximal_ideal(S));
  CHECK(ideal_intersect(E, F) == ideal_normalize(S, {3}));
  CHECK(v_closure(ideal_normalize(S, {3})) == ideal_normalize(S, {3}));
}

TEST_CASE("colon by the quotient field is zero") {
  auto S = sg({2, 3});
  CHECK_THROWS_AS(ideal_colon(ring_ideal(S), MonomialIdeal::whole(S)), ZeroModuleError);
}

TEST_CASE("oracle sweep on <3,4,5> and <2,3>") {
  for (auto g : {std::vector<long>{3, 4, 5}, std::vector<long>{2, 3}}) {
    auto r = oracle::sweep_semigroup(g);
    INFO(r.first);
    CHECK(r.mismatches == 0);
    CHECK(r.pairs == r.ideals * r.ideals);
  }
}

TEST_CASE("v-closure laws, seeded") {
  std::mt19937_64 rng(17);
  for (auto g : {std::vector<long>{3, 4, 5}, std::vector<long>{4, 6, 9}, std::vector<long>{3, 5}}) {
    auto S = sg(g);
    for (int i = 0; i < 200; ++i) {
      auto A = random_ideal(rng, S, -4, 14), B = random_ideal(rng, S, -4, 14);
      auto vA = v_closure(A);
      CHECK(ideal_subset(A, vA));
      CHECK(v_closure(vA) == vA);
      if (ideal_subset(A, B)) CHECK(ideal_subset(vA, v_closure(B)));
      long h = static_cast<long>(rng() % 9) - 4;
      CHECK(v_closure(ideal_shift(A, h)) == ideal_shift(vA, h));
      CHECK(ideal_subset(ideal_mul(ideal_colon(A, B), B), A));
    }
  }
}

TEST_CASE("v-closure and colon laws on all enumerated ideals") {
  for (auto g : {std::vector<long>{3, 4, 5}, std::vector<long>{2, 3}, std::vector<long>{4, 6, 9}}) {
    auto S = sg(g);
    auto all = enumerate_ideals(S, 0, S->frobenius() + 6);
    CHECK(v_closure(maximal_ideal(S)) == maximal_ideal(S));
    for (const auto& a : all) {
      auto va = v_closure(a);
      CHECK(ideal_subset(a, va));
      CHECK(v_closure(va) == va);
    }
    // pairs: every pair for the small ones, a stride through <4,6,9>
    size_t step = all.size() > 100 ? 7 : 1;
    for (size_t i = 0; i < all.size(); i += step) {
      for (size_t j = 0; j < all.size(); j += step) {
        const auto& a = all[i];
        const auto& b = all[j];
        if (ideal_subset(a, b)) CHECK(ideal_subset(v_closure(a), v_closure(b)));
        auto q = ideal_colon(ideal_mul(a, b), b);
        CHECK(ideal_subset(a, q));
        CHECK(ideal_subset(v_closure(a), v_closure(q)));
        for (long h : {-3L, 2L}) {
          CHECK(ideal_sum(ideal_shift(a, h), b) == ideal_shift(ideal_sum(a, ideal_shift(b, -h)), h));
          CHECK(ideal_mul(ideal_shift(a, h), b) == ideal_shift(ideal_mul(a, b), h));
          CHECK(ideal_intersect(ideal_shift(a, h), ideal_shift(b, h)) == ideal_shift(ideal_intersect(a, b), h));
          CHECK(ideal_colon(ideal_shift(a, h), b) == ideal_shift(ideal_colon(a, b), h));
        }
      }
    }
  }
}
