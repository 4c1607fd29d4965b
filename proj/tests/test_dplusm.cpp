#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semistar/dplusm.hpp"

using namespace semistar;

namespace {

PullbackPtr quadratic(GroupKind g) {
  auto K = std::make_shared<const ExtensionField>(BaseField::rationals(), std::vector<Rational>{-2, 0, 1});
  return std::make_shared<const PullbackDomain>(K, ValueGroup(g));
}

Monomial mono(const PullbackPtr& D, Elem c, Rational level) { return {D->residue()->normalize(c), GroupElement(level)}; }

}  // namespace

TEST_CASE("membership agrees with leading-term reduction") {
  auto r = oracle::sweep_leveled(2024, 300);
  INFO(r.first);
  CHECK(r.mismatches == 0);
  // both answers are exercised
  CHECK(r.members > 30);
  CHECK(r.cases - r.members > 30);
}

TEST_CASE("pullback intersection mD n mxD") {
  auto D = quadratic(GroupKind::Rationals);
  auto mD = module_from_generators(D, {mono(D, {1, 0}, 1)});
  auto mxD = module_from_generators(D, {mono(D, {0, 1}, 1)});
  auto meet = module_intersect(mD, mxD);
  CHECK(meet == segment_module(D, Segment::open(D->group(), GroupElement(1))));
  CHECK(meet.format() == "<t(>1)>");
  CHECK(!meet.finitely_generated());
  CHECK(extend_to_V(mD) == extend_to_V(mxD));
}

TEST_CASE("mD n mxD = mM for random monomials m and units x outside k, seeded") {
  auto D = quadratic(GroupKind::Rationals);
  auto mM = [&](const Monomial& m) { return module_scale(maximal_module(D), m); };
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    Elem mc{Rational(static_cast<long>(rng() % 7) - 3), Rational(static_cast<long>(rng() % 7) - 3)};
    if (mc[0] == 0 && mc[1] == 0) mc[1] = 1;
    Rational lv(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
    Monomial m = mono(D, mc, lv);
    Elem xc{Rational(static_cast<long>(rng() % 7) - 3), Rational(1 + static_cast<long>(rng() % 5))};
    auto mx = Monomial{D->residue()->mul(m.coeff, D->residue()->normalize(xc)), m.level};
    auto meet = module_intersect(module_from_generators(D, {m}), module_from_generators(D, {mx}));
    CHECK(meet == mM(m));
    CHECK(!meet.finitely_generated());
  }
}

TEST_CASE("PVD colon and maximal ideal") {
  auto D = quadratic(GroupKind::Integers);
  auto M = maximal_module(D);
  CHECK(M == module_from_generators(D, {mono(D, {1, 0}, 1), mono(D, {0, 1}, 1)}));
  CHECK(M.finitely_generated());
  CHECK(M.format() == "<1*t(1), a*t(1)>");
  auto T = module_colon(ring_module(D), M);
  CHECK(T == overring_module(D));
  CHECK(module_colon(M, M) == T);
  CHECK(module_mul(M, T) == M);
  CHECK(v_closure_pullback(M) == M);
}

TEST_CASE("module arithmetic laws, seeded") {
  std::mt19937_64 rng(5);
  for (auto g : {GroupKind::Integers, GroupKind::Rationals}) {
    auto D = quadratic(g);
    auto random_module = [&]() {
      std::vector<Monomial> gens;
      for (uint64_t k = 1 + rng() % 2; k > 0; --k) {
        Elem c{Rational(static_cast<long>(rng() % 5) - 2), Rational(static_cast<long>(rng() % 5) - 2)};
        if (c[0] == 0 && c[1] == 0) c[0] = 1;
        gens.push_back(mono(D, c, Rational(static_cast<long>(rng() % 7) - 3, 1 + (g == GroupKind::Rationals ? rng() % 2 : 0))));
      }
      auto m = module_from_generators(D, gens);
      if (rng() % 4 == 0) m = module_sum(m, segment_module(D, Segment::open(D->group(), GroupElement(Rational(rng() % 3)))));
      return m;
    };
    for (int i = 0; i < 200; ++i) {
      auto A = random_module(), B = random_module(), C = random_module();
      CHECK(module_sum(A, B) == module_sum(B, A));
      CHECK(module_mul(A, B) == module_mul(B, A));
      CHECK(module_mul(A, module_mul(B, C)) == module_mul(module_mul(A, B), C));
      CHECK(module_subset(module_intersect(A, B), A));
      CHECK(module_subset(module_mul(module_colon(A, B), B), A));
      CHECK(module_subset(A, v_closure_pullback(A)));
      CHECK(v_closure_pullback(v_closure_pullback(A)) == v_closure_pullback(A));
      // distributivity of products over sums
      CHECK(module_mul(A, module_sum(B, C)) == module_sum(module_mul(A, B), module_mul(A, C)));
    }
  }
}

TEST_CASE("lex prime localization") {
  ValueGroup L(GroupKind::Lex);
  auto P = prime_segment(L, DomainPrime{0});
  CHECK(P == Segment::closed(L, GroupElement::neg_inf_at(1)));
  auto E = Segment::closed(L, GroupElement(0, 5));
  CHECK(lift_from_prime(localize_at(E, DomainPrime{0}), L) == Segment::closed(L, GroupElement::neg_inf_at(0)));
  CHECK_THROWS_AS(prime_segment(ValueGroup(GroupKind::Integers), DomainPrime{0}), UnsupportedOperation);
}

TEST_CASE("rank-two pullbacks are unsupported") {
  auto K = std::make_shared<const ExtensionField>(BaseField::rationals(), std::vector<Rational>{-2, 0, 1});
  CHECK_THROWS_AS(PullbackDomain(K, ValueGroup(GroupKind::Lex)), UnsupportedOperation);
}

TEST_CASE("canonical form keeps membership: 500 modules, 50 elements each") {
  auto r = oracle::sweep_leveled(77, 500, 50);
  INFO(r.first);
  CHECK(r.cases == 25000);
  CHECK(r.mismatches == 0);
}

TEST_CASE("segment modules of V follow segment arithmetic") {
  for (auto kind : {GroupKind::Integers, GroupKind::Rationals, GroupKind::Lex}) {
    ValueGroup G(kind);
    auto V = std::make_shared<const PullbackDomain>(ExtensionField::trivial(BaseField::rationals()), G);
    std::mt19937_64 rng(31 + static_cast<int>(kind));
    auto seg = [&]() {
      Rational x(static_cast<long>(rng() % 9) - 4, kind == GroupKind::Rationals ? 1 + rng() % 3 : 1);
      GroupElement g = kind == GroupKind::Lex ? GroupElement(x, static_cast<long>(rng() % 5) - 2) : GroupElement(x);
      return rng() % 2 ? Segment::open(G, g) : Segment::closed(G, g);
    };
    for (int i = 0; i < 200; ++i) {
      auto s = seg(), t = seg();
      auto a = segment_module(V, s), b = segment_module(V, t);
      CHECK(module_sum(a, b) == segment_module(V, segment_union(s, t)));
      CHECK(module_intersect(a, b) == segment_module(V, segment_intersect(s, t)));
      CHECK(module_mul(a, b) == segment_module(V, segment_add(s, t)));
      CHECK(module_colon(a, b) == segment_module(V, segment_colon(s, t)));
      CHECK(module_subset(a, b) == segment_subset(s, t));
    }
  }
}
