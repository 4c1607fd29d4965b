#include <doctest.h>

#include "semistar/classify.hpp"

using namespace semistar;

namespace {

FieldPtr quadratic() {
  return std::make_shared<const ExtensionField>(BaseField::rationals(), std::vector<Rational>{-2, 0, 1});
}

Domain pvd() { return DomainHandle::pullback(quadratic(), ValueGroup(GroupKind::Integers)); }
Domain q_pullback() { return DomainHandle::pullback(quadratic(), ValueGroup(GroupKind::Rationals)); }
Domain v_over_q() { return DomainHandle::valuation(BaseField::rationals(), ValueGroup(GroupKind::Rationals)); }
Domain sg345() { return DomainHandle::semigroup_ring({3, 4, 5}); }

IdealHandle mono(const Domain& d, std::vector<long> g) { return IdealHandle(d, ideal_normalize(d->semigroup(), g)); }

SampleSpec small_spec() {
  SampleSpec s;
  s.count = 40;
  return s;
}

// Re-derive each refutation from its witness alone.
void replay(const std::string& what, const Verdict& v, const Op& op, const Domain& d) {
  if (!v.is_refuted()) return;
  CAPTURE(what);
  CAPTURE(op_print(op));
  CAPTURE(d->describe());
  const auto& w = v.witness;
  if (what == "star-domain") {
    REQUIRE(w.size() == 1);
    CHECK(w[0].finitely_generated());
    CHECK(!is_star_invertible(op, w[0]));
  } else if (what == "pstarmd") {
    REQUIRE(w.size() == 1);
    CHECK(!is_star_invertible(op_ft(op), w[0]));
  } else if (what == "ab") {
    REQUIRE(w.size() == 3);
    CHECK(subset(semistar::apply(op, mul(w[0], w[1])), semistar::apply(op, mul(w[0], w[2]))));
    CHECK(!subset(semistar::apply(op, w[1]), semistar::apply(op, w[2])));
  } else if (what == "truly") {
    REQUIRE(w.size() == 2);
    CHECK(star_finite_match(op, semistar::apply(op, meet(w[0], w[1]))).is_refuted());
  } else if (what == "coherent") {
    REQUIRE(w.size() == 2);
    CHECK(star_finite_match(op, meet(semistar::apply(op, w[0]), semistar::apply(op, w[1]))).is_refuted());
  } else if (what == "extra") {
    REQUIRE(w.size() == 2);
    auto inside = meet(w[0], w[1]);
    CHECK(star_finite_match(op, meet(semistar::apply(op, w[0]), semistar::apply(op, w[1])), &inside).is_refuted());
  }
}

}  // namespace

TEST_CASE("sampler is deterministic per seed and stream") {
  auto d = q_pullback();
  SampleSpec spec;
  spec.seed = 9;
  Sampler a(d, spec, 1), b(d, spec, 1), c(d, spec, 2);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    auto x = a.any(), y = b.any(), z = c.any();
    CHECK(x == y);
    if (!(x == z)) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("invertibility") {
  auto d = pvd();
  CHECK(!is_star_invertible(op_star(Overring::ValuationHull), maximal_of(d)));
  auto x = Scalar{quadratic()->add(quadratic()->one(), quadratic()->gen()), GroupElement(3)};
  for (const auto& op : {op_identity(), op_v(), op_star(Overring::ValuationHull), op_t()})
    CHECK(is_star_invertible(op, scale(ring_of(d), x)));
  auto s = sg345();
  // (E(D:E))^v against D for E = (3,4)
  auto E = mono(s, {3, 4});
  CHECK(is_star_invertible(op_v(), E) == (v_closure(ideal_mul(E.monomial(), ideal_colon(ring_ideal(s->semigroup()), E.monomial()))) == ring_ideal(s->semigroup())));
}

TEST_CASE("op-finiteness") {
  auto q = q_pullback();
  auto mM = IdealHandle(q, segment_module(q->pullback_domain(), Segment::open(ValueGroup(GroupKind::Rationals), GroupElement(1))));
  auto f = star_finite_match(op_star(Overring::ValuationHull), mM);
  CHECK(f.is_refuted());
  CHECK(f.note.find("cut parity") != std::string::npos);
  CHECK(star_finite_match(op_identity(), maximal_of(pvd())).is_holds());
  auto v = v_over_q();
  CHECK(is_star_finite(op_t(), maximal_of(v), true).is_refuted());
}

TEST_CASE("domain predicates on the standard instances") {
  auto spec = small_spec();
  auto stV = op_star(Overring::ValuationHull);
  auto sd = is_star_domain(stV, pvd(), spec);
  REQUIRE(sd.is_refuted());
  CHECK(sd.witness[0] == maximal_of(pvd()));
  CHECK(is_pstarmd(stV, pvd(), spec).is_refuted());
  CHECK(is_pstarmd(stV, q_pullback(), spec).is_refuted());
  CHECK(is_pstarmd(op_v(), v_over_q(), spec).is_holds());
  CHECK(is_star_domain(op_v(), v_over_q(), spec).is_holds());
  CHECK(is_ab(stV, pvd(), spec).is_holds());
  CHECK(is_ab(op_identity(), v_over_q(), spec).is_holds());
  auto ab345 = is_ab(op_identity(), sg345(), spec);
  CHECK(!ab345.is_holds());
}

TEST_CASE("coherence on the quadratic pullback over Q") {
  auto spec = small_spec();
  auto d = q_pullback();
  auto stV = op_star(Overring::ValuationHull);
  CHECK(coherence_check(Coherence::Coherent, stV, d, spec).is_holds());
  CHECK(!coherence_check(Coherence::Coherent, stV, d, spec, false).is_refuted());
  auto truly = coherence_check(Coherence::TrulyCoherent, stV, d, spec);
  REQUIRE(truly.is_refuted());
  CHECK(truly.witness_text() == "(<1*t(1)>, <a*t(1)>)");
  auto s = sg345();
  auto extra = coherence_check(Coherence::Extracoherent, op_v(), s, spec);
  REQUIRE(extra.is_refuted());
  CHECK(extra.witness[0] == mono(s, {3, 4}));
  CHECK(extra.witness[1] == mono(s, {3, 5}));
}

TEST_CASE("H and I on V over Q with v") {
  auto spec = small_spec();
  auto d = v_over_q();
  auto h = is_H_domain(op_v(), d, spec);
  REQUIRE(h.is_refuted());
  CHECK(h.witness[0] == maximal_of(d));
  bool any_holds = false;
  for (const auto& c : h_clauses(op_v(), d, spec)) {
    CAPTURE(c.name);
    if (c.verdict.is_holds()) any_holds = true;
  }
  CHECK(!any_holds);
  CHECK(is_I_domain(op_v(), d, spec).is_holds());
  CHECK(is_H_domain(op_t(), d, spec).is_holds());
}

TEST_CASE("noetherian and dedekind") {
  CHECK(is_star_noetherian(op_v(), sg345()).is_holds());
  auto chain = is_star_noetherian(op_v(), v_over_q());
  REQUIRE(chain.is_refuted());
  CHECK(chain.witness.size() >= 3);
  for (size_t i = 0; i + 1 < chain.witness.size(); ++i) {
    CHECK(subset(chain.witness[i], chain.witness[i + 1]));
    CHECK(!(chain.witness[i] == chain.witness[i + 1]));
  }
  auto dvr = DomainHandle::valuation(BaseField::rationals(), ValueGroup(GroupKind::Integers));
  CHECK(is_star_dedekind(op_identity(), dvr, small_spec()).is_holds());
}

TEST_CASE("every refutation replays from its witness") {
  auto spec = small_spec();
  for (const auto& entry : catalog()) {
    for (const auto& op : entry.ops) {
      replay("star-domain", is_star_domain(op, entry.domain, spec), op, entry.domain);
      replay("pstarmd", is_pstarmd(op, entry.domain, spec), op, entry.domain);
      replay("ab", is_ab(op, entry.domain, spec), op, entry.domain);
      replay("truly", coherence_check(Coherence::TrulyCoherent, op, entry.domain, spec), op, entry.domain);
      replay("coherent", coherence_check(Coherence::Coherent, op, entry.domain, spec), op, entry.domain);
      replay("extra", coherence_check(Coherence::Extracoherent, op, entry.domain, spec), op, entry.domain);
    }
  }
}

TEST_CASE("cross-predicate invariants over the catalog") {
  auto spec = small_spec();
  for (const auto& entry : catalog()) {
    for (const auto& op : entry.ops) {
      CAPTURE(entry.name);
      CAPTURE(op_print(op));
      const auto& d = entry.domain;
      if (is_pstarmd(op, d, spec).is_holds()) {
        CHECK(!is_ab(op, d, spec).is_refuted());
        CHECK(!is_eab(op, d, spec).is_refuted());
      }
      if (coherence_check(Coherence::Extracoherent, op, d, spec).is_holds()) {
        CHECK(!coherence_check(Coherence::Coherent, op, d, spec).is_refuted());
        CHECK(!coherence_check(Coherence::TrulyCoherent, op, d, spec).is_refuted());
      }
      if (coherence_check(Coherence::TrulyCoherent, op, d, spec).is_holds())
        CHECK(!coherence_check(Coherence::QuasiCoherent, op, d, spec).is_refuted());
      if (is_H_domain(op, d, spec).is_holds()) CHECK(!is_I_domain(op, d, spec).is_refuted());
      // monotone transfer from the identity
      auto u = named_ideals(d);
      if (op_leq(op_identity(), op, d, u).is_holds() && is_star_domain(op_identity(), d, spec).is_holds())
        CHECK(!is_star_domain(op, d, spec).is_refuted());
    }
  }
}

TEST_CASE("verdict combinators") {
  auto h = Verdict::holds("a", "x"), r = Verdict::refuted({}), u = Verdict::unknown(3, "p");
  CHECK(verdict_and({h, u}).is_unknown());
  CHECK(verdict_and({h, r, u}).is_refuted());
  CHECK(verdict_or({r, u}).is_unknown());
  CHECK(verdict_or({r, h}).is_holds());
}

TEST_CASE("basic formulas for st[V] and v on the pullbacks") {
  SampleSpec spec;
  for (const auto& d : {pvd(), q_pullback()}) {
    for (const auto& op : {op_star(Overring::ValuationHull), op_v()}) {
      auto v = check_basic_formulas(op, d, spec);
      CHECK(!v.is_refuted());
      CHECK(v.samples == 200);
    }
  }
}

TEST_CASE("equality of tilde and ft(bar) implies I") {
  auto spec = small_spec();
  for (const auto& entry : catalog()) {
    for (const auto& op : entry.ops) {
      CAPTURE(entry.name);
      CAPTURE(op_print(op));
      auto u = sample_universe(entry.domain, spec, 61, 20);
      if (ops_equal_on(op_tilde(op), op_ft(op_stable(op)), entry.domain, u).is_holds())
        CHECK(!is_I_domain(op, entry.domain, spec).is_refuted());
    }
  }
}
