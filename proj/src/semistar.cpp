#include "semistar/semistar.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace semistar {

// ---------------------------------------------------------------------------
// Domains and ideal handles

Domain DomainHandle::semigroup_ring(std::vector<long> generators) {
  auto d = std::shared_ptr<DomainHandle>(new DomainHandle());
  d->family_ = Family::SemigroupRing;
  d->sgr_ = std::make_shared<const NumericalSemigroup>(std::move(generators));
  d->caps_.noetherian = true;
  d->caps_.local = true;
  d->caps_.integrally_closed = d->sgr_->frobenius() < 0;
  d->caps_.valuation = d->caps_.integrally_closed;
  return d;
}

Domain DomainHandle::pullback(FieldPtr residue, ValueGroup group) {
  if (residue->degree() < 2) return valuation(residue->base(), group);
  auto d = std::shared_ptr<DomainHandle>(new DomainHandle());
  d->family_ = Family::Pullback;
  d->pb_ = std::make_shared<const PullbackDomain>(std::move(residue), group);
  d->caps_.local = true;
  d->caps_.noetherian = group.kind() == GroupKind::Integers;
  return d;
}

Domain DomainHandle::valuation(BaseField k, ValueGroup group) {
  auto d = std::shared_ptr<DomainHandle>(new DomainHandle());
  d->family_ = Family::Valuation;
  d->pb_ = std::make_shared<const PullbackDomain>(ExtensionField::trivial(k), group);
  d->caps_.local = true;
  d->caps_.valuation = true;
  d->caps_.all_ops_stable = true;
  d->caps_.integrally_closed = true;
  d->caps_.noetherian = group.kind() == GroupKind::Integers;
  return d;
}

bool DomainHandle::is_lex() const { return pb_ && pb_->group().kind() == GroupKind::Lex; }

std::string DomainHandle::describe() const {
  if (family_ == Family::SemigroupRing) return "numsgr" + sgr_->name();
  return pb_->name();
}

IdealHandle::IdealHandle(Domain d, MonomialIdeal m) : dom_(std::move(d)), payload_(std::move(m)) {
  if (dom_->family() != Family::SemigroupRing) throw StructuralError("monomial ideal outside a semigroup ring");
}

IdealHandle::IdealHandle(Domain d, LeveledModule m) : dom_(std::move(d)), payload_(std::move(m)) {
  if (dom_->family() == Family::SemigroupRing) throw StructuralError("leveled module inside a semigroup ring");
}

bool IdealHandle::is_whole() const { return is_monomial() ? monomial().is_whole() : leveled().is_whole(); }

bool IdealHandle::finitely_generated() const {
  return is_monomial() ? !monomial().is_whole() : leveled().finitely_generated();
}

IdealHandle IdealHandle::from_witness() const {
  if (!finitely_generated()) throw UnsupportedOperation("no generator witness for " + format());
  if (is_monomial()) return IdealHandle(dom_, ideal_normalize(monomial().ring(), monomial().generators()));
  return IdealHandle(dom_, module_from_generators(leveled().domain(), leveled().generators()));
}

std::string IdealHandle::format() const { return is_monomial() ? monomial().format() : leveled().format(); }

bool IdealHandle::operator==(const IdealHandle& o) const {
  if (dom_ != o.dom_ && dom_->describe() != o.dom_->describe()) return false;
  if (is_monomial() != o.is_monomial()) return false;
  return is_monomial() ? monomial() == o.monomial() : leveled() == o.leveled();
}

namespace {

void require_same(const IdealHandle& a, const IdealHandle& b) {
  if (a.domain() != b.domain() && a.domain()->describe() != b.domain()->describe())
    throw StructuralError("ideals over different domains");
}

}  // namespace

IdealHandle ring_of(const Domain& d) {
  if (d->family() == Family::SemigroupRing) return IdealHandle(d, ring_ideal(d->semigroup()));
  return IdealHandle(d, ring_module(d->pullback_domain()));
}

IdealHandle maximal_of(const Domain& d) {
  if (d->family() == Family::SemigroupRing) return IdealHandle(d, maximal_ideal(d->semigroup()));
  return IdealHandle(d, maximal_module(d->pullback_domain()));
}

IdealHandle overring_of(const Domain& d) {
  if (d->family() == Family::SemigroupRing) {
    std::vector<long> raw;
    for (long i = 0; i < d->semigroup()->generators().front(); ++i) raw.push_back(i);
    return IdealHandle(d, ideal_normalize(d->semigroup(), raw));
  }
  return IdealHandle(d, overring_module(d->pullback_domain()));
}

IdealHandle whole_of(const Domain& d) {
  if (d->family() == Family::SemigroupRing) return IdealHandle(d, MonomialIdeal::whole(d->semigroup()));
  return IdealHandle(d, segment_module(d->pullback_domain(), Segment::whole(d->pullback_domain()->group())));
}

IdealHandle add(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  if (a.is_monomial()) return IdealHandle(a.domain(), ideal_sum(a.monomial(), b.monomial()));
  return IdealHandle(a.domain(), module_sum(a.leveled(), b.leveled()));
}

IdealHandle mul(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  if (a.is_monomial()) return IdealHandle(a.domain(), ideal_mul(a.monomial(), b.monomial()));
  return IdealHandle(a.domain(), module_mul(a.leveled(), b.leveled()));
}

IdealHandle meet(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  if (a.is_monomial()) return IdealHandle(a.domain(), ideal_intersect(a.monomial(), b.monomial()));
  return IdealHandle(a.domain(), module_intersect(a.leveled(), b.leveled()));
}

IdealHandle colon(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  if (a.is_monomial()) return IdealHandle(a.domain(), ideal_colon(a.monomial(), b.monomial()));
  return IdealHandle(a.domain(), module_colon(a.leveled(), b.leveled()));
}

IdealHandle inverse(const IdealHandle& a) { return colon(ring_of(a.domain()), a); }

IdealHandle scale(const IdealHandle& a, const Scalar& x) {
  if (a.is_monomial()) {
    if (x.level.x.get_den() != 1) throw StructuralError("semigroup ring scalars have integer exponents");
    return IdealHandle(a.domain(), ideal_shift(a.monomial(), x.level.x.get_num().get_si()));
  }
  return IdealHandle(a.domain(), module_scale(a.leveled(), x));
}

bool subset(const IdealHandle& a, const IdealHandle& b) { return add(a, b) == b; }

bool is_integral(const IdealHandle& a) { return subset(a, ring_of(a.domain())); }

IdealHandle extend_to_overring(const IdealHandle& a) {
  if (a.is_whole()) return a;
  switch (a.domain()->family()) {
    case Family::SemigroupRing: {
      auto v = overring_of(a.domain());
      return scale(v, Scalar{{}, GroupElement(a.monomial().min())});
    }
    case Family::Pullback: return IdealHandle(a.domain(), extend_to_V(a.leveled()));
    case Family::Valuation: return a;
  }
  return a;
}

std::vector<PrimeTag> domain_primes(const Domain& d) {
  if (d->is_lex()) return {PrimeTag::Maximal, PrimeTag::Height1};
  return {PrimeTag::Maximal};
}

IdealHandle prime_ideal(const Domain& d, PrimeTag p) {
  if (p == PrimeTag::Maximal) return maximal_of(d);
  if (!d->is_lex()) throw UnsupportedOperation("no height-one prime below the maximal ideal in " + d->describe());
  return IdealHandle(d, segment_module(d->pullback_domain(), prime_segment(d->pullback_domain()->group(), {})));
}

std::string prime_name(PrimeTag p) { return p == PrimeTag::Maximal ? "M" : "P1"; }

IdealHandle localize(const IdealHandle& e, PrimeTag p) {
  if (p == PrimeTag::Maximal) return e;
  const auto& d = e.domain();
  if (!d->is_lex()) throw UnsupportedOperation("localization at P1 needs a rank-two valuation domain");
  const auto& G = d->pullback_domain()->group();
  Segment s = lift_from_prime(localize_at(e.leveled().tail(), DomainPrime{}), G);
  return IdealHandle(d, segment_module(d->pullback_domain(), s));
}

// ---------------------------------------------------------------------------
// Operation terms

namespace {

Op make(OpKind k, Op inner = nullptr) {
  auto t = std::make_shared<OpTerm>();
  t->kind = k;
  t->inner = std::move(inner);
  return t;
}

}  // namespace

Op op_identity() { return make(OpKind::Identity); }
Op op_v() { return make(OpKind::Divisorial); }
Op op_t() { return op_ft(op_v()); }
Op op_w() { return op_tilde(op_v()); }

Op op_star(Overring t) {
  auto o = std::make_shared<OpTerm>();
  o->kind = OpKind::StarOverring;
  o->overring = t;
  return o;
}

Op op_spectral(std::vector<PrimeTag> delta) {
  if (delta.empty()) throw Error("spectral operation needs at least one prime");
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  auto o = std::make_shared<OpTerm>();
  o->kind = OpKind::Spectral;
  o->delta = std::move(delta);
  return o;
}

Op op_ft(Op inner) { return make(OpKind::FiniteType, std::move(inner)); }
Op op_stable(Op inner) { return make(OpKind::Stable, std::move(inner)); }
Op op_tilde(Op inner) { return make(OpKind::Tilde, std::move(inner)); }
Op op_ascent(Op inner) { return make(OpKind::Ascent, std::move(inner)); }
Op op_descent(Op on_overring) { return make(OpKind::Descent, std::move(on_overring)); }

std::string op_print(const Op& op) {
  switch (op->kind) {
    case OpKind::Identity: return "d";
    case OpKind::Divisorial: return "v";
    case OpKind::StarOverring:
      switch (op->overring) {
        case Overring::IntegralClosure: return "st[ic]";
        case Overring::ValuationHull: return "st[V]";
        case Overring::QuotientField: return "st[K]";
      }
      break;
    case OpKind::Spectral: {
      std::string out = "spec{";
      for (size_t i = 0; i < op->delta.size(); ++i) out += (i ? "," : "") + prime_name(op->delta[i]);
      return out + "}";
    }
    case OpKind::FiniteType:
      if (op->inner->kind == OpKind::Divisorial) return "t";
      return "ft(" + op_print(op->inner) + ")";
    case OpKind::Stable: return "bar(" + op_print(op->inner) + ")";
    case OpKind::Tilde:
      if (op->inner->kind == OpKind::Divisorial) return "w";
      return "tilde(" + op_print(op->inner) + ")";
    case OpKind::Ascent: return "asc(" + op_print(op->inner) + ")";
    case OpKind::Descent: return "desc(" + op_print(op->inner) + ")";
  }
  return "?";
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

[[noreturn]] void op_fail(const std::string& s, size_t pos, const std::string& expected) {
  throw Error("operation term: expected " + expected + " at column " + std::to_string(pos + 1) + " in '" + s + "'");
}

void expect(const std::string& s, size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c) op_fail(s, pos, std::string("'") + c + "'");
  ++pos;
}

}  // namespace

Op op_parse_at(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
  std::string word = s.substr(start, pos - start);
  if (word == "d") return op_identity();
  if (word == "v") return op_v();
  if (word == "t") return op_t();
  if (word == "w") return op_w();
  if (word == "st") {
    expect(s, pos, '[');
    skip_ws(s, pos);
    size_t b = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string tag = s.substr(b, pos - b);
    Overring t;
    if (tag == "V")
      t = Overring::ValuationHull;
    else if (tag == "ic")
      t = Overring::IntegralClosure;
    else if (tag == "K")
      t = Overring::QuotientField;
    else
      op_fail(s, b, "one of V, ic, K");
    expect(s, pos, ']');
    return op_star(t);
  }
  if (word == "spec") {
    expect(s, pos, '{');
    std::vector<PrimeTag> delta;
    while (true) {
      skip_ws(s, pos);
      size_t b = pos;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string p = s.substr(b, pos - b);
      if (p == "M")
        delta.push_back(PrimeTag::Maximal);
      else if (p == "P1")
        delta.push_back(PrimeTag::Height1);
      else
        op_fail(s, b, "a prime name M or P1");
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(s, pos, '}');
    return op_spectral(delta);
  }
  if (word == "ft" || word == "bar" || word == "tilde" || word == "asc" || word == "desc") {
    expect(s, pos, '(');
    Op inner = op_parse_at(s, pos);
    expect(s, pos, ')');
    if (word == "ft") return op_ft(inner);
    if (word == "bar") return op_stable(inner);
    if (word == "tilde") return op_tilde(inner);
    if (word == "asc") return op_ascent(inner);
    return op_descent(inner);
  }
  op_fail(s, start, "an operation (d, v, t, w, st[..], spec{..}, ft, bar, tilde, asc, desc)");
}

Op op_parse(const std::string& text) {
  size_t pos = 0;
  Op op = op_parse_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) op_fail(text, pos, "end of term");
  return op;
}

bool op_same(const Op& a, const Op& b) { return op_print(a) == op_print(b); }

bool op_is_finite_type(const Op& op, const Domain& d) {
  if (d && d->caps().noetherian) return true;
  switch (op->kind) {
    case OpKind::Identity:
    case OpKind::StarOverring:
    case OpKind::Spectral:
    case OpKind::FiniteType:
    case OpKind::Tilde: return true;
    default: return false;
  }
}

bool op_is_stable(const Op& op, const Domain& d) {
  if (d && d->caps().all_ops_stable) return true;
  switch (op->kind) {
    case OpKind::Identity:
    case OpKind::Spectral:
    case OpKind::Stable:
    case OpKind::Tilde: return true;
    case OpKind::StarOverring: return op->overring == Overring::QuotientField;
    default: return false;
  }
}

Op op_normalize(const Op& op, const Domain& d) {
  if (!op->inner) return op;
  Op inner = op_normalize(op->inner, d);
  switch (op->kind) {
    case OpKind::FiniteType:
      if (op_is_finite_type(inner, d)) return inner;
      return op_ft(inner);
    case OpKind::Stable:
      if (op_is_stable(inner, d)) return inner;
      return op_stable(inner);
    case OpKind::Tilde:
      if (inner->kind == OpKind::FiniteType) inner = inner->inner;
      if (op_is_finite_type(inner, d) && op_is_stable(inner, d)) return inner;
      return op_tilde(inner);
    case OpKind::Ascent: return op_ascent(inner);
    case OpKind::Descent: return op_descent(inner);
    default: return op;
  }
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// The valuation overring as a domain of its own, with conversions.
Domain overring_domain(const Domain& d) {
  switch (d->family()) {
    case Family::SemigroupRing: return DomainHandle::valuation(BaseField::rationals(), ValueGroup(GroupKind::Integers));
    case Family::Pullback:
      return DomainHandle::valuation(d->pullback_domain()->residue()->base(), d->pullback_domain()->group());
    case Family::Valuation: return d;
  }
  return d;
}

IdealHandle to_overring(const IdealHandle& e, const Domain& t) {
  const auto& d = e.domain();
  if (d->family() == Family::Valuation) return e;
  auto et = extend_to_overring(e);
  if (d->family() == Family::SemigroupRing) {
    ValueGroup Z(GroupKind::Integers);
    if (et.is_whole()) return whole_of(t);
    return IdealHandle(t, segment_module(t->pullback_domain(), Segment::closed(Z, GroupElement(et.monomial().min()))));
  }
  return IdealHandle(t, segment_module(t->pullback_domain(), et.leveled().tail()));
}

IdealHandle from_overring(const IdealHandle& e, const Domain& d) {
  if (d->family() == Family::Valuation) return e;
  if (e.is_whole()) return whole_of(d);
  const Segment& s = e.leveled().tail();
  if (d->family() == Family::SemigroupRing) {
    if (!s.has_min()) throw ConsistencyError("segment over Z without a least element");
    return scale(overring_of(d), Scalar{{}, s.cut()});
  }
  return IdealHandle(d, segment_module(d->pullback_domain(), s));
}

IdealHandle apply_star_overring(Overring t, const IdealHandle& e) {
  if (t == Overring::QuotientField) return whole_of(e.domain());
  return extend_to_overring(e);
}

IdealHandle apply_spectral(const std::vector<PrimeTag>& delta, const IdealHandle& e) {
  std::optional<IdealHandle> acc;
  for (auto p : delta) {
    auto loc = localize(e, p);
    acc = acc ? meet(*acc, loc) : loc;
  }
  return *acc;
}

}  // namespace

IdealHandle apply(const Op& op, const IdealHandle& e) {
  switch (op->kind) {
    case OpKind::Identity: return e;
    case OpKind::Divisorial: {
      if (e.is_whole()) return e;
      auto d = ring_of(e.domain());
      return colon(d, colon(d, e));
    }
    case OpKind::StarOverring: return apply_star_overring(op->overring, e);
    case OpKind::Spectral: return apply_spectral(op->delta, e);
    case OpKind::FiniteType: return finite_type_apply(op->inner, e);
    case OpKind::Stable: return stable_apply(op->inner, e);
    case OpKind::Tilde: return tilde_apply(op->inner, e);
    case OpKind::Ascent: return semistar::apply(op->inner, extend_to_overring(e));
    case OpKind::Descent: {
      Domain t = overring_domain(e.domain());
      return from_overring(semistar::apply(op->inner, to_overring(e, t)), e.domain());
    }
  }
  throw ConsistencyError("unknown operation kind");
}

IdealHandle finite_type_apply(const Op& op, const IdealHandle& e) {
  if (e.is_whole()) return e;
  if (e.finitely_generated()) return semistar::apply(op, e);
  // E is a union of the principal segment modules t^g V for g in E, so the
  // closure is the union of their images.
  auto x = semistar::apply(op, overring_of(e.domain()));
  if (x.is_whole()) return x;
  Segment s = segment_add(e.leveled().tail(), x.leveled().hull());
  return IdealHandle(e.domain(), segment_module(e.domain()->pullback_domain(), s));
}

LocalizingSystemView localizing_system(const Domain& d, const Op& op) {
  auto D = ring_of(d);
  auto Dstar = semistar::apply(op, D);
  auto M = maximal_of(d);
  LocalizingSystemView ls;
  auto in_system = [&](const IdealHandle& i) { return semistar::apply(op, i) == Dstar; };
  bool dense = d->pullback_domain() && d->pullback_domain()->group().kind() == GroupKind::Rationals;
  if (d->is_lex()) {
    if (in_system(prime_ideal(d, PrimeTag::Height1))) {
      ls.kind = LsKind::All;
      ls.description = "P1 in the system, hence every nonzero ideal";
    } else if (in_system(M)) {
      ls.kind = LsKind::LocalizeP;
      ls.description = "ideals not inside P1 (powers of M are cofinal)";
      ls.cofinal.push_back(M);
    }
  } else if (dense) {
    const auto& G = d->pullback_domain()->group();
    IdealHandle small(d, segment_module(d->pullback_domain(), Segment::closed(G, GroupElement(1))));
    if (in_system(small)) {
      ls.kind = LsKind::All;
      ls.description = "t V in the system, hence every nonzero ideal";
    } else if (in_system(M)) {
      ls.kind = LsKind::Maximal;
      ls.description = "{M, D}";
      ls.cofinal.push_back(M);
    }
  } else if (in_system(M)) {
    ls.kind = LsKind::All;
    ls.description = "M in the system of a one-dimensional local domain, hence every nonzero ideal";
  }
  if (ls.kind == LsKind::Trivial) {
    ls.description = "{D}";
    ls.cofinal.push_back(D);
  }
  for (const auto& j : ls.cofinal)
    if (!in_system(j)) throw ConsistencyError("cofinal member " + j.format() + " is not in the system");
  ls.trivial = ls.kind == LsKind::Trivial;
  return ls;
}

bool ls_contains(const Op& op, const IdealHandle& i) { return semistar::apply(op, i) == semistar::apply(op, ring_of(i.domain())); }

IdealHandle stable_apply(const Op& op, const IdealHandle& e) {
  auto ls = localizing_system(e.domain(), op);
  switch (ls.kind) {
    case LsKind::Trivial: return e;
    case LsKind::Maximal: return colon(e, maximal_of(e.domain()));
    case LsKind::LocalizeP: return localize(e, PrimeTag::Height1);
    case LsKind::All: return whole_of(e.domain());
  }
  return e;
}

bool quasi_star_ideal_check(const Op& op, const IdealHandle& i) {
  auto D = ring_of(i.domain());
  if (!subset(i, D)) throw Error("quasi-ideal check needs an integral ideal");
  if (i == D) return false;
  return meet(semistar::apply(op, i), D) == i;
}

QuasiMaximals quasi_star_maximals(const Domain& d, const Op& op) {
  Op f = op_ft(op);
  QuasiMaximals q;
  // Primes form a chain, so the first quasi prime from the top is the only
  // quasi-maximal one.
  for (auto p : domain_primes(d)) {
    if (quasi_star_ideal_check(f, prime_ideal(d, p))) {
      q.primes.push_back(p);
      return q;
    }
  }
  if (!semistar::apply(f, ring_of(d)).is_whole())
    throw UnsupportedOperation("UnsupportedMaximalSpectrum: no quasi-maximal prime found for " + op_print(op));
  q.empty_convention = true;
  return q;
}

IdealHandle tilde_apply(const Op& op, const IdealHandle& e) {
  auto q = quasi_star_maximals(e.domain(), op);
  if (q.empty_convention) return whole_of(e.domain());
  return apply_spectral(q.primes, e);
}

// ---------------------------------------------------------------------------
// Verdicts and comparisons

Verdict Verdict::holds(std::string reason, std::string anchor) {
  Verdict v;
  v.outcome = Outcome::Holds;
  v.reason = std::move(reason);
  v.anchor = std::move(anchor);
  return v;
}

Verdict Verdict::refuted(std::vector<IdealHandle> witness, std::string note) {
  Verdict v;
  v.outcome = Outcome::Refuted;
  v.witness = std::move(witness);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::unknown(int samples, std::string params) {
  Verdict v;
  v.outcome = Outcome::Unknown;
  v.samples = samples;
  v.sample_params = std::move(params);
  return v;
}

std::string Verdict::outcome_name() const {
  switch (outcome) {
    case Outcome::Holds: return "Holds";
    case Outcome::Refuted: return "Refuted";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

std::string Verdict::witness_text() const {
  if (witness.empty()) return note;
  if (witness.size() == 1) return witness.front().format();
  std::string out = "(";
  for (size_t i = 0; i < witness.size(); ++i) out += (i ? ", " : "") + witness[i].format();
  return out + ")";
}

std::string Verdict::summary() const {
  switch (outcome) {
    case Outcome::Holds: return "Holds(" + reason + ")";
    case Outcome::Refuted: return "Refuted(" + witness_text() + ")";
    case Outcome::Unknown: return "Unknown(" + std::to_string(samples) + ")";
  }
  return "?";
}

namespace {

std::optional<Verdict> leq_by_terms(const Op& a0, const Op& b0, const Domain& d) {
  Op a = op_normalize(a0, d);
  Op b = op_normalize(b0, d);
  if (op_same(a, b)) return Verdict::holds("normalized terms coincide", "op1 = op2");
  if (a->kind == OpKind::Identity) return Verdict::holds("d is below every operation", "E in E^op");
  if (b->kind == OpKind::StarOverring && b->overring == Overring::QuotientField)
    return Verdict::holds("st[K] is the largest operation", "E^op in K");
  if (a->kind == OpKind::FiniteType && op_same(a->inner, b))
    return Verdict::holds("finite-type part is below", "star_f <= star");
  if (a->kind == OpKind::Stable && op_same(a->inner, b))
    return Verdict::holds("stable closure is below", "bar(star) <= star");
  if (a->kind == OpKind::Tilde) {
    if (op_same(a->inner, b) || (b->kind == OpKind::FiniteType && op_same(a->inner, b->inner)))
      return Verdict::holds("tilde is below the finite-type part", "tilde(star) <= star_f <= star");
    if (b->kind == OpKind::Stable && op_same(a->inner, b->inner))
      return Verdict::holds("tilde is the stable closure of star_f", "tilde(star) = bar(star_f) <= bar(star)");
  }
  if (b->kind == OpKind::Divisorial && semistar::apply(a, ring_of(d)) == ring_of(d))
    return Verdict::holds("v is the largest operation fixing D", "D^op = D implies op <= v");
  return std::nullopt;
}

}  // namespace

Verdict op_leq(const Op& a, const Op& b, const Domain& d, const std::vector<IdealHandle>& universe) {
  if (auto v = leq_by_terms(a, b, d)) return *v;
  for (const auto& e : universe)
    if (!subset(semistar::apply(a, e), semistar::apply(b, e))) return Verdict::refuted({e});
  return Verdict::unknown(static_cast<int>(universe.size()), "universe");
}

Verdict ops_equal_on(const Op& a, const Op& b, const Domain& d, const std::vector<IdealHandle>& universe) {
  if (op_same(op_normalize(a, d), op_normalize(b, d)))
    return Verdict::holds("normalized terms coincide", "op1 = op2");
  auto ab = leq_by_terms(a, b, d);
  auto ba = leq_by_terms(b, a, d);
  if (ab && ba) return Verdict::holds(ab->reason + "; " + ba->reason, ab->anchor + "; " + ba->anchor);
  for (const auto& e : universe)
    if (!(semistar::apply(a, e) == semistar::apply(b, e))) return Verdict::refuted({e});
  return Verdict::unknown(static_cast<int>(universe.size()), "universe");
}

}  // namespace semistar
