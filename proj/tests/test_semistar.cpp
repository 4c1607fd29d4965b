#include <doctest.h>

#include "semistar/classify.hpp"
#include "semistar/semistar.hpp"

using namespace semistar;

namespace {

Domain pvd() {
  auto K = std::make_shared<const ExtensionField>(BaseField::rationals(), std::vector<Rational>{-2, 0, 1});
  return DomainHandle::pullback(K, ValueGroup(GroupKind::Integers));
}

}  // namespace

TEST_CASE("operation terms print and reparse") {
  for (const char* s : {"d", "v", "t", "w", "st[V]", "st[ic]", "st[K]", "spec{P1}", "spec{M}", "spec{P1,M}",
                        "bar(v)", "tilde(st[V])", "ft(st[V])", "asc(v)", "desc(d)", "bar(tilde(desc(v)))"}) {
    auto op = op_parse(s);
    CHECK(op_print(op) == s);
    CHECK(op_same(op_parse(op_print(op)), op));
  }
  CHECK(op_print(op_parse(" bar ( v ) ")) == "bar(v)");
  CHECK(op_print(op_parse("ft(v)")) == "t");
  CHECK(op_print(op_parse("tilde(v)")) == "w");
}

TEST_CASE("operation term errors carry a column") {
  for (const char* s : {"", "q", "bar(v", "st[X]", "spec{}", "v)"}) {
    CAPTURE(s);
    CHECK_THROWS_WITH_AS(op_parse(s), doctest::Contains("column"), Error);
  }
}

TEST_CASE("constructor identities") {
  CHECK(op_print(op_normalize(op_parse("ft(d)"))) == "d");
  CHECK(op_print(op_normalize(op_parse("ft(t)"))) == "t");
  CHECK(op_print(op_normalize(op_parse("bar(w)"))) == "w");
  CHECK(op_print(op_normalize(op_parse("tilde(t)"))) == "w");
  CHECK(op_print(op_normalize(op_parse("ft(ft(st[V]))"))) == op_print(op_normalize(op_parse("ft(st[V])"))));
}

TEST_CASE("closure laws on catalog instances, seeded") {
  SampleSpec spec;
  spec.seed = 3;
  for (const auto& entry : catalog()) {
    Sampler s(entry.domain, spec, 99);
    std::vector<IdealHandle> pool;
    for (int i = 0; i < 25; ++i) pool.push_back(s.any());
    for (const auto& op : entry.ops) {
      CAPTURE(entry.name);
      CAPTURE(op_print(op));
      for (size_t i = 0; i < pool.size(); ++i) {
        const auto& E = pool[i];
        const auto& F = pool[(i * 7 + 3) % pool.size()];
        auto Eop = semistar::apply(op, E);
        CHECK(subset(E, Eop));
        CHECK(semistar::apply(op, Eop) == Eop);
        CHECK(subset(Eop, semistar::apply(op, add(E, F))));
        auto x = s.unit();
        CHECK(semistar::apply(op, scale(E, x)) == scale(Eop, x));
      }
    }
  }
}

TEST_CASE("PVD quasi-maximal ideals and the localizing system") {
  auto d = pvd();
  auto q = quasi_star_maximals(d, op_identity());
  REQUIRE(q.primes.size() == 1);
  CHECK(q.primes[0] == PrimeTag::Maximal);
  CHECK(prime_ideal(d, PrimeTag::Maximal) == maximal_of(d));
  CHECK(ls_contains(op_identity(), ring_of(d)));
  CHECK(!ls_contains(op_identity(), maximal_of(d)));
  CHECK(quasi_star_maximals(d, op_star(Overring::QuotientField)).empty_convention);
}

TEST_CASE("ordering of operations on a universe") {
  auto d = pvd();
  auto u = named_ideals(d);
  CHECK(!op_leq(op_identity(), op_v(), d, u).is_refuted());
  CHECK(op_leq(op_star(Overring::ValuationHull), op_identity(), d, u).is_refuted());
  CHECK(!ops_equal_on(op_t(), op_v(), d, u).is_refuted());
}

TEST_CASE("verdict text") {
  auto d = pvd();
  auto r = Verdict::refuted({maximal_of(d)});
  CHECK(r.summary() == "Refuted(<1*t(1), a*t(1)>)");
  CHECK(Verdict::unknown(200, "seed=0").summary().find("Unknown") == 0);
  CHECK(Verdict::holds("valuation domain", "x").is_holds());
}

TEST_CASE("witness rebuild from generators") {
  auto d = pvd();
  auto M = maximal_of(d);
  CHECK(M.finitely_generated());
  CHECK(M.from_witness() == M);
  auto q = DomainHandle::valuation(BaseField::rationals(), ValueGroup(GroupKind::Rationals));
  CHECK(!maximal_of(q).finitely_generated());
  CHECK_THROWS(maximal_of(q).from_witness());
}

TEST_CASE("constructor identities hold pointwise on sampled universes") {
  SampleSpec spec;
  spec.seed = 5;
  for (const auto& entry : catalog()) {
    auto u = sample_universe(entry.domain, spec, 71, 30);
    for (const auto& op : entry.ops) {
      CAPTURE(entry.name);
      CAPTURE(op_print(op));
      auto f = op_ft(op), b = op_stable(op);
      auto tl = op_tilde(op), bf = op_stable(op_ft(op));
      for (const auto& e : u) {
        CHECK(semistar::apply(op_ft(f), e) == semistar::apply(f, e));
        CHECK(subset(semistar::apply(b, e), semistar::apply(op, e)));
        CHECK(semistar::apply(tl, e) == semistar::apply(bf, e));
        if (is_integral(e)) CHECK(ls_contains(op, e) == ls_contains(b, e));
      }
    }
  }
}

TEST_CASE("localizing systems are ordered like their stable operations") {
  SampleSpec spec;
  for (const auto& entry : catalog()) {
    auto u = sample_universe(entry.domain, spec, 73, 30);
    std::vector<IdealHandle> integral;
    for (const auto& e : u)
      if (is_integral(e)) integral.push_back(e);
    for (const auto& p : domain_primes(entry.domain)) integral.push_back(prime_ideal(entry.domain, p));
    for (const auto& a : entry.ops) {
      for (const auto& b : entry.ops) {
        CAPTURE(entry.name);
        CAPTURE(op_print(a));
        CAPTURE(op_print(b));
        if (!op_leq(a, b, entry.domain, u).is_holds()) continue;
        for (const auto& i : integral)
          if (ls_contains(a, i)) CHECK(ls_contains(b, i));
      }
    }
  }
}
