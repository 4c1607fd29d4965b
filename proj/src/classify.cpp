#include "semistar/classify.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace semistar {

std::string SampleSpec::describe() const {
  return "seed=" + std::to_string(seed) + " count=" + std::to_string(count) + " gens<=" +
         std::to_string(generator_bound) + " den<=" + std::to_string(denominator_bound) + " window=c+" +
         std::to_string(window_extra);
}

namespace {

bool is_numsgr(const Domain& d) { return d->family() == Family::SemigroupRing; }
bool is_valuation(const Domain& d) { return d->caps().valuation; }

GroupKind group_kind(const Domain& d) {
  return is_numsgr(d) ? GroupKind::Integers : d->pullback_domain()->group().kind();
}

// Every representable module other than K is finitely generated.
bool all_fg(const Domain& d) { return group_kind(d) == GroupKind::Integers; }

IdealHandle seg(const Domain& d, const Segment& s) { return IdealHandle(d, segment_module(d->pullback_domain(), s)); }

IdealHandle gens(const Domain& d, std::vector<Monomial> g) {
  return IdealHandle(d, module_from_generators(d->pullback_domain(), std::move(g)));
}

void push_unique(std::vector<IdealHandle>& out, const IdealHandle& i) {
  for (const auto& o : out)
    if (o == i) return;
  out.push_back(i);
}

bool same_term(const Op& a, const Op& b, const Domain& d) { return op_same(op_normalize(a, d), op_normalize(b, d)); }

bool finite_type_term(const Op& op, const Domain& d) { return same_term(op_ft(op), op, d); }

// E^op = e (T)^op for f.g. E = eT-generated, T a valuation overring: such
// operations cancel f.g. factors.
bool factors_through_valuation(const Op& n) {
  return n->kind == OpKind::StarOverring || n->kind == OpKind::Descent || n->kind == OpKind::Ascent;
}

// Ideals whose membership decides the localizing system of a local domain
// here: P1 and M in the rank-two case, t V and M over Q, M otherwise.
std::vector<IdealHandle> system_probes(const Domain& d) {
  if (d->is_lex()) return {prime_ideal(d, PrimeTag::Height1), maximal_of(d)};
  if (group_kind(d) == GroupKind::Rationals) {
    const auto& G = d->pullback_domain()->group();
    return {seg(d, Segment::closed(G, GroupElement(1))), maximal_of(d)};
  }
  return {maximal_of(d)};
}

// Integral ideals with 0 among their generators: 0 plus an antichain of gaps.
std::vector<IdealHandle> unit_ideals(const Domain& d) {
  const auto& S = d->semigroup();
  const auto& gaps = S->gaps();
  std::vector<IdealHandle> out;
  size_t n = std::min<size_t>(gaps.size(), 12);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    std::vector<long> raw{0};
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) raw.push_back(gaps[i]);
    push_unique(out, IdealHandle(d, ideal_normalize(S, raw)));
  }
  return out;
}

std::vector<IdealHandle> fg_named(const Domain& d) {
  std::vector<IdealHandle> out;
  for (const auto& i : named_ideals(d))
    if (i.finitely_generated()) out.push_back(i);
  return out;
}

// f.g. ideals to test for invertibility: fixed ones first, then samples.
std::vector<IdealHandle> invertibility_candidates(const Domain& d, const SampleSpec& spec) {
  std::vector<IdealHandle> out;
  push_unique(out, maximal_of(d).finitely_generated() ? maximal_of(d) : ring_of(d));
  if (is_numsgr(d)) {
    for (const auto& i : unit_ideals(d)) push_unique(out, i);
  } else {
    for (const auto& i : fg_named(d)) push_unique(out, i);
  }
  Sampler s(d, spec, 3);
  for (int k = 0; k < spec.count; ++k) out.push_back(s.fg());
  return out;
}

Verdict unknown_from(int n, const SampleSpec& spec) { return Verdict::unknown(n, spec.describe()); }

}  // namespace

// ---------------------------------------------------------------------------
// Sampling

Sampler::Sampler(Domain d, const SampleSpec& spec, uint64_t stream)
    : dom_(std::move(d)), spec_(spec), rng_(spec.seed * 0x9E3779B97F4A7C15ULL + stream * 0xBF58476D1CE4E5B9ULL + 1) {}

GroupElement Sampler::level(bool nonneg) {
  switch (group_kind(dom_)) {
    case GroupKind::Integers: return GroupElement(Rational(range(nonneg ? 0 : -3, 6)));
    case GroupKind::Rationals: {
      long den = range(1, spec_.denominator_bound);
      long num = range(nonneg ? 0 : -3 * den, 6 * den);
      Rational q{mpz_class(num), mpz_class(den)};
      q.canonicalize();
      return GroupElement(q);
    }
    case GroupKind::Lex: {
      long a = range(nonneg ? 0 : -2, 3);
      long b = (nonneg && a == 0) ? range(0, 3) : range(-3, 3);
      return GroupElement(Rational(a), Rational(b));
    }
  }
  return GroupElement();
}

Elem Sampler::coefficient(bool base_only) {
  const auto& K = dom_->pullback_domain()->residue();
  if (base_only || K->degree() == 1) {
    long c = range(1, 3) * (draw(2) ? 1 : -1);
    return K->from_base(Rational(c));
  }
  while (true) {
    Elem e(K->degree());
    for (auto& x : e) x = Rational(range(-3, 3));
    if (!K->is_zero(e)) return K->normalize(e);
  }
}

IdealHandle Sampler::fg(bool integral) {
  int n = 1 + static_cast<int>(draw(static_cast<uint64_t>(spec_.generator_bound)));
  if (is_numsgr(dom_)) {
    const auto& S = dom_->semigroup();
    long hi = S->conductor() + spec_.window_extra;
    std::vector<long> raw;
    for (int i = 0; i < n; ++i) raw.push_back(range(integral ? 0 : -3, hi));
    return IdealHandle(dom_, ideal_normalize(S, raw));
  }
  const auto& G = dom_->pullback_domain()->group();
  std::vector<Monomial> g;
  for (int i = 0; i < n; ++i) {
    GroupElement l = level(integral);
    g.push_back({coefficient(integral && l == G.zero()), l});
  }
  return gens(dom_, g);
}

IdealHandle Sampler::non_fg(bool integral) {
  switch (group_kind(dom_)) {
    case GroupKind::Rationals:
      return seg(dom_, Segment::open(dom_->pullback_domain()->group(), level(integral)));
    case GroupKind::Lex: {
      long a = range(integral ? 1 : -2, 3);
      return seg(dom_, Segment::closed(dom_->pullback_domain()->group(), GroupElement::neg_inf_at(Rational(a))));
    }
    case GroupKind::Integers: break;
  }
  return fg(integral);
}

IdealHandle Sampler::any() {
  if (!all_fg(dom_) && draw(4) == 0) return non_fg(false);
  return fg(false);
}

Scalar Sampler::unit() {
  if (is_numsgr(dom_)) return Scalar{{}, GroupElement(Rational(range(-3, 6)))};
  Elem c = coefficient(false);
  return Scalar{c, level(false)};
}

std::vector<IdealHandle> named_ideals(const Domain& d) {
  std::vector<IdealHandle> out{ring_of(d), maximal_of(d)};
  push_unique(out, overring_of(d));
  if (is_numsgr(d)) return out;
  const auto& G = d->pullback_domain()->group();
  const auto& K = d->pullback_domain()->residue();
  if (d->is_lex()) {
    push_unique(out, prime_ideal(d, PrimeTag::Height1));
    push_unique(out, seg(d, Segment::closed(G, GroupElement(Rational(1), Rational(0)))));
    return out;
  }
  push_unique(out, seg(d, Segment::closed(G, GroupElement(1))));
  push_unique(out, gens(d, {{K->one(), GroupElement(1)}}));
  return out;
}

std::vector<IdealHandle> sample_universe(const Domain& d, const SampleSpec& spec, uint64_t stream, int n) {
  auto out = named_ideals(d);
  Sampler s(d, spec, stream);
  for (int i = 0; i < n; ++i) out.push_back(s.any());
  return out;
}

// ---------------------------------------------------------------------------
// Invertibility and finiteness

bool is_star_invertible(const Op& op, const IdealHandle& i) {
  if (i.is_whole()) return false;
  return semistar::apply(op, mul(i, inverse(i))) == semistar::apply(op, ring_of(i.domain()));
}

Verdict star_finite_match(const Op& op, const IdealHandle& target, const IdealHandle* inside) {
  const Domain& d = target.domain();
  const auto D = ring_of(d);
  const auto Dstar = semistar::apply(op, D);
  auto found = [](const IdealHandle& j, const std::string& why) {
    Verdict v = Verdict::holds(why, "J^op = X");
    v.witness = {j};
    return v;
  };
  if (target.is_whole()) {
    if (Dstar.is_whole()) return found(D, "D^op = K");
    return Verdict::refuted({target}, "images of f.g. modules lie in a translate of D^op, which is not K");
  }
  if (!(semistar::apply(op, target) == target)) return Verdict::refuted({target}, "target is not op-closed");
  if (inside) {
    auto Astar = semistar::apply(op, *inside);
    // J inside A forces J^op inside A^op.
    if (!subset(target, Astar)) return Verdict::refuted({target}, "target is not inside the image of the bound");
    if (inside->finitely_generated() && Astar == target) return found(*inside, "the bound itself");
  } else if (target.finitely_generated()) {
    return found(target.from_witness(), "target is f.g. and op-closed");
  }
  if (all_fg(d)) return Verdict::refuted({target}, "no f.g. module inside the bound reaches the target");

  // Segment families: a f.g. module is c t^g J0 with J0 = D or V once the
  // residue degree is at most 2, so its image is c t^g J0^op.
  const auto& pb = d->pullback_domain();
  const auto& K = pb->residue();
  const auto& G = pb->group();
  std::vector<IdealHandle> bases{D};
  if (pb->is_proper()) bases.push_back(overring_of(d));
  bool exact = K->degree() <= 2;
  const auto& X = target.leveled();
  for (const auto& j0 : bases) {
    auto Y = semistar::apply(op, j0);
    if (Y.is_whole()) continue;
    const auto& Ym = Y.leveled();
    if (X.has_jump() != Ym.has_jump()) continue;
    Scalar s{K->one(), G.zero()};
    if (X.has_jump()) {
      const auto& wx = X.jump().space;
      const auto& wy = Ym.jump().space;
      if (wx.dim() != wy.dim()) continue;
      if (wx.dim() != 1) {
        exact = false;
        continue;
      }
      s.coeff = K->mul(wx.basis()[0], K->inv(wy.basis()[0]));
      s.level = G.sub(X.jump().level, Ym.jump().level);
    } else {
      const auto& xs = X.tail();
      const auto& ys = Ym.tail();
      if (xs.shape() != ys.shape() || xs.cut().y_neg_inf != ys.cut().y_neg_inf) continue;
      Rational dy = xs.cut().y_neg_inf ? Rational(0) : Rational(xs.cut().y - ys.cut().y);
      s.level = G.kind() == GroupKind::Lex ? GroupElement(xs.cut().x - ys.cut().x, dy) : GroupElement(xs.cut().x - ys.cut().x);
    }
    auto J = scale(j0, s);
    if (!(semistar::apply(op, J) == target)) continue;
    if (inside && !subset(J, *inside)) continue;
    return found(J, "matched against a scaled D or V");
  }
  if (!exact) return Verdict::unknown(static_cast<int>(bases.size()), "residue degree above 2");
  return Verdict::refuted({target}, "cut parity: no scaled image of D or V has this shape");
}

Verdict is_star_finite(const Op& op, const IdealHandle& i, bool inside) {
  if (i.finitely_generated()) {
    Verdict v = Verdict::holds("finitely generated", "J = I");
    v.witness = {i};
    return v;
  }
  return star_finite_match(op, semistar::apply(op, i), inside ? &i : nullptr);
}

Verdict is_star_domain(const Op& op, const Domain& d, const SampleSpec& spec) {
  if (is_valuation(d)) return Verdict::holds("valuation domain: f.g. ideals are principal", "(xD (xD)^-1)^op = D^op");
  if (semistar::apply(op, ring_of(d)).is_whole()) return Verdict::holds("D^op = K", "(II^-1)^op = K = D^op");
  auto cands = invertibility_candidates(d, spec);
  for (const auto& i : cands)
    if (!is_star_invertible(op, i)) return Verdict::refuted({i}, "(II^-1)^op != D^op");
  return unknown_from(static_cast<int>(cands.size()), spec);
}

Verdict is_pstarmd(const Op& op, const Domain& d, const SampleSpec& spec) {
  if (is_valuation(d)) return Verdict::holds("valuation domain: f.g. ideals are principal", "(II^-1)^op_f = D^op_f");
  Op f = op_ft(op);
  Op tl = op_tilde(op);
  if (semistar::apply(f, ring_of(d)).is_whole()) return Verdict::holds("D^op_f = K", "(II^-1)^op_f = K");
  auto q = quasi_star_maximals(d, op);
  auto cands = invertibility_candidates(d, spec);
  for (const auto& i : cands) {
    bool by_f = is_star_invertible(f, i);
    bool by_tilde = is_star_invertible(tl, i);
    auto prod = mul(i, inverse(i));
    bool by_max = true;
    for (auto p : q.primes)
      if (subset(prod, prime_ideal(d, p))) by_max = false;
    if (by_f != by_tilde || by_f != by_max)
      throw ConsistencyError("P*MD routes disagree on " + i.format() + " for " + op_print(op));
    if (!by_f) return Verdict::refuted({i}, "not op_f-invertible");
  }
  return unknown_from(static_cast<int>(cands.size()), spec);
}

namespace {

Verdict cancellation_search(const Op& op, const Domain& d, const SampleSpec& spec, bool fg_only) {
  std::vector<IdealHandle> es;
  std::vector<IdealHandle> pool;
  if (is_numsgr(d)) {
    push_unique(es, maximal_of(d));
    auto units = unit_ideals(d);
    for (size_t i = 0; i < units.size() && es.size() < 8; ++i) push_unique(es, units[i]);
    pool = named_ideals(d);
    for (size_t i = 0; i < units.size() && pool.size() < 12; ++i) push_unique(pool, units[i]);
  } else {
    es = fg_named(d);
    pool = named_ideals(d);
  }
  Sampler s(d, spec, 5);
  while (es.size() < 8) es.push_back(s.fg());
  while (pool.size() < 12) pool.push_back(fg_only ? s.fg() : s.any());
  std::vector<IdealHandle> fs;
  for (const auto& p : pool)
    if (!fg_only || p.finitely_generated()) fs.push_back(p);
  std::vector<IdealHandle> img;
  for (const auto& f : fs) img.push_back(semistar::apply(op, f));
  int tried = 0;
  for (const auto& e : es) {
    std::vector<IdealHandle> prod;
    for (const auto& f : fs) prod.push_back(semistar::apply(op, mul(e, f)));
    for (size_t a = 0; a < fs.size(); ++a)
      for (size_t b = 0; b < fs.size(); ++b) {
        ++tried;
        if (subset(prod[a], prod[b]) && !subset(img[a], img[b]))
          return Verdict::refuted({e, fs[a], fs[b]}, "(EF)^op c (EG)^op but F^op not in G^op");
      }
  }
  return unknown_from(tried, spec);
}

}  // namespace

Verdict is_ab(const Op& op, const Domain& d, const SampleSpec& spec) {
  const std::string anchor = "(EF)^op c (EG)^op => F^op c G^op";
  if (is_star_domain(op, d, spec).is_holds()) return Verdict::holds("op-domain, hence a.b.", anchor);
  if (factors_through_valuation(op_normalize(op, d)))
    return Verdict::holds("E^op is a principal module of a valuation overring for f.g. E", anchor);
  return cancellation_search(op, d, spec, false);
}

Verdict is_eab(const Op& op, const Domain& d, const SampleSpec& spec) {
  auto ab = is_ab(op, d, spec);
  if (ab.is_holds()) return Verdict::holds("a.b., hence e.a.b.", ab.anchor);
  return cancellation_search(op, d, spec, true);
}

// ---------------------------------------------------------------------------
// Coherence

std::string coherence_name(Coherence k) {
  switch (k) {
    case Coherence::Extracoherent: return "extracoherent";
    case Coherence::Coherent: return "coherent";
    case Coherence::TrulyCoherent: return "truly coherent";
    case Coherence::QuasiCoherent: return "quasi-coherent";
  }
  return "?";
}

std::vector<IdealPair> coherence_pairs(const Domain& d, const SampleSpec& spec) {
  std::vector<IdealPair> out;
  if (is_numsgr(d)) {
    const auto& S = d->semigroup();
    long m = S->generators().front();
    std::vector<IdealHandle> seeds;
    for (const auto& i : enumerate_ideals(S, m, m + S->conductor() + 1))
      if (i.generators().size() == 2 && seeds.size() < 4) seeds.emplace_back(d, i);
    for (size_t i = 0; i < seeds.size(); ++i)
      for (size_t j = i + 1; j < seeds.size(); ++j) out.emplace_back(seeds[i], seeds[j]);
  } else {
    const auto& K = d->pullback_domain()->residue();
    GroupElement one = d->is_lex() ? GroupElement(Rational(0), Rational(1)) : GroupElement(1);
    out.emplace_back(gens(d, {{K->one(), one}}), gens(d, {{K->gen(), one}}));
  }
  Sampler s(d, spec, 7);
  while (static_cast<int>(out.size()) < spec.count) {
    auto e = s.fg(true);
    auto f = s.fg(true);
    out.emplace_back(e, f);
  }
  return out;
}

Verdict coherence_check(Coherence kind, const Op& op, const Domain& d, const SampleSpec& spec, bool use_theorems) {
  const std::string anchor = [&] {
    switch (kind) {
      case Coherence::Extracoherent: return "J^op = E^op n F^op, J c E n F";
      case Coherence::Coherent: return "J^op = E^op n F^op";
      case Coherence::TrulyCoherent: return "J^op = (E n F)^op";
      case Coherence::QuasiCoherent: return "G^op = (D:F)^op";
    }
    return "";
  }();
  Op n = op_normalize(op, d);
  if (use_theorems) {
    if (semistar::apply(op, ring_of(d)).is_whole()) return Verdict::holds("D^op = K, so J = D works", anchor);
    if (is_valuation(d))
      return Verdict::holds("valuation domain: f.g. ideals are principal and op is stable", anchor);
    if (all_fg(d)) {
      if (kind != Coherence::Extracoherent)
        return Verdict::holds("every module other than K is f.g., and meets of op-closed modules are op-closed", anchor);
      if (op_is_stable(n, d)) return Verdict::holds("stable operation and f.g. intersections", anchor);
    }
    if (kind == Coherence::Coherent && (n->kind == OpKind::StarOverring || n->kind == OpKind::Descent))
      return Verdict::holds("images of f.g. modules are principal V-modules, which form a chain", anchor);
  }
  auto pairs = coherence_pairs(d, spec);
  for (const auto& [e, f] : pairs) {
    Verdict v;
    switch (kind) {
      case Coherence::Extracoherent: {
        auto a = meet(e, f);
        v = star_finite_match(op, meet(semistar::apply(op, e), semistar::apply(op, f)), &a);
        break;
      }
      case Coherence::Coherent:
        v = star_finite_match(op, meet(semistar::apply(op, e), semistar::apply(op, f)));
        break;
      case Coherence::TrulyCoherent: v = star_finite_match(op, semistar::apply(op, meet(e, f))); break;
      case Coherence::QuasiCoherent:
        v = star_finite_match(op, semistar::apply(op, inverse(e)));
        if (!v.is_refuted()) v = star_finite_match(op, semistar::apply(op, inverse(f)));
        break;
    }
    if (v.is_refuted()) return Verdict::refuted({e, f}, v.note);
  }
  return unknown_from(static_cast<int>(pairs.size()), spec);
}

// ---------------------------------------------------------------------------
// H and I

namespace {

Verdict same_system(const Op& a, const Op& b, const Domain& d, const std::string& anchor) {
  for (const auto& p : system_probes(d))
    if (ls_contains(a, p) != ls_contains(b, p)) return Verdict::refuted({p}, "in one localizing system only");
  return Verdict::holds("localizing systems agree on their generators", anchor);
}

Verdict h_clause_i(const Op& op, const Domain& d) {
  const std::string anchor = "F^op = F^op_f";
  if (finite_type_term(op, d)) return Verdict::holds("op is of finite type", anchor);
  return same_system(op, op_ft(op), d, anchor);
}

Verdict h_clause_quasi(const Op& op, const Domain& d, const std::string& anchor) {
  auto q = quasi_star_maximals(d, op);
  if (q.primes.empty()) return Verdict::holds("no quasi-op_f-maximal ideals", anchor);
  for (auto p : q.primes) {
    auto P = prime_ideal(d, p);
    if (!quasi_star_ideal_check(op, P)) return Verdict::refuted({P}, "quasi-op_f-maximal but not a quasi-op-ideal");
  }
  return Verdict::holds("the quasi-op_f-maximal prime is a quasi-op-ideal", anchor);
}

}  // namespace

std::vector<HClause> h_clauses(const Op& op, const Domain& d, const SampleSpec& spec) {
  Op f = op_ft(op);
  Op b = op_stable(op);
  auto U = sample_universe(d, spec, 31, 50);
  std::vector<HClause> out;
  out.push_back({"(i)", h_clause_i(op, d)});
  out.push_back({"(ii)", h_clause_quasi(op, d, "M(op_f) c quasi-op-ideals")});
  {
    Verdict v = unknown_from(static_cast<int>(U.size()), spec);
    if (finite_type_term(op, d)) {
      v = Verdict::holds("op is of finite type", "Inv(op) = Inv(op_f)");
    } else {
      for (const auto& i : U)
        if (is_star_invertible(op, i) != is_star_invertible(f, i)) {
          v = Verdict::refuted({i}, "op-invertible and op_f-invertible differ");
          break;
        }
    }
    out.push_back({"(iii)", v});
  }
  {
    Verdict v = unknown_from(static_cast<int>(U.size()), spec);
    if (finite_type_term(op, d)) {
      v = Verdict::holds("op is of finite type", "I op-invertible => I, I^-1 op_f-finite");
    } else {
      for (const auto& i : U) {
        if (!is_star_invertible(op, i)) continue;
        if (is_star_finite(f, i, true).is_refuted() || is_star_finite(f, inverse(i), true).is_refuted()) {
          v = Verdict::refuted({i}, "op-invertible but not op_f-finite");
          break;
        }
      }
    }
    out.push_back({"(iii')", v});
  }
  out.push_back({"(iv)", h_clause_quasi(op, d, "M(op_f) = M(op)")});
  out.push_back({"(v)", h_clause_quasi(op, d, "M(tilde op) = M(op)")});
  out.push_back({"(vi)", ops_equal_on(op_ft(b), b, d, U)});
  out.push_back({"(vii)", ops_equal_on(op_tilde(op), b, d, U)});
  out.push_back({"(viii)", op_leq(b, f, d, U)});
  {
    Verdict v = Verdict::holds("every prime in F^op is in F^op_f", "P^op = D^op => P op_f-finite");
    for (auto p : domain_primes(d)) {
      auto P = prime_ideal(d, p);
      if (ls_contains(op, P) && !ls_contains(f, P)) {
        v = Verdict::refuted({P}, "prime in F^op but not op_f-finite");
        break;
      }
    }
    out.push_back({"(ix)", v});
  }
  {
    const std::string anchor = "F^bar = F^(bar)_f";
    out.push_back({"(x)", finite_type_term(b, d) ? Verdict::holds("bar(op) is of finite type", anchor)
                                                : same_system(b, op_ft(b), d, anchor)});
  }
  return out;
}

Verdict is_H_domain(const Op& op, const Domain& d, const SampleSpec&) { return h_clause_i(op, d); }

Verdict is_I_domain(const Op& op, const Domain& d, const SampleSpec& spec) {
  const std::string anchor = "Inv(op) n f(D) = Inv(op_f) n f(D)";
  if (finite_type_term(op, d)) return Verdict::holds("op is of finite type", anchor);
  if (is_valuation(d)) return Verdict::holds("valuation domain: f.g. ideals are principal", anchor);
  if (h_clause_i(op, d).is_holds()) return Verdict::holds("H(op) holds", anchor);
  Op f = op_ft(op);
  auto cands = invertibility_candidates(d, spec);
  for (const auto& i : cands)
    if (is_star_invertible(op, i) && !is_star_invertible(f, i))
      return Verdict::refuted({i}, "op-invertible but not op_f-invertible");
  return unknown_from(static_cast<int>(cands.size()), spec);
}

Verdict is_star_noetherian(const Op& op, const Domain& d, int chain_length) {
  const std::string anchor = "ACC on quasi-op-ideals";
  if (d->caps().noetherian) return Verdict::holds("noetherian ring", anchor);
  if (semistar::apply(op, ring_of(d)).is_whole()) return Verdict::holds("D^op = K: no proper quasi-op-ideals", anchor);
  const auto& G = d->pullback_domain()->group();
  std::vector<IdealHandle> chain;
  for (int n = 1; n <= chain_length; ++n) {
    GroupElement cut = d->is_lex() ? GroupElement(Rational(1), Rational(-n)) : GroupElement(Rational(1, n));
    chain.push_back(seg(d, Segment::closed(G, cut)));
  }
  for (const auto& i : chain)
    if (!quasi_star_ideal_check(op, i)) return Verdict::unknown(chain_length, "chain members are not quasi-op-ideals");
  return Verdict::refuted(chain, "strictly ascending chain of quasi-op-ideals");
}

Verdict verdict_and(const std::vector<Verdict>& parts) {
  std::string reason;
  int samples = 0;
  bool all = true;
  for (const auto& p : parts) {
    if (p.is_refuted()) return p;
    if (!p.is_holds()) all = false;
    samples += p.samples;
    if (p.is_holds()) reason += (reason.empty() ? "" : " and ") + p.reason;
  }
  if (all) return Verdict::holds(reason, parts.empty() ? "" : parts.front().anchor);
  return Verdict::unknown(samples, "conjunction");
}

Verdict verdict_or(const std::vector<Verdict>& parts) {
  bool all = !parts.empty();
  for (const auto& p : parts) {
    if (p.is_holds()) return p;
    if (!p.is_refuted()) all = false;
  }
  if (all) return parts.front();
  return Verdict::unknown(0, "disjunction");
}

Verdict is_star_dedekind(const Op& op, const Domain& d, const SampleSpec& spec) {
  auto noeth = is_star_noetherian(op, d);
  auto a = verdict_and({is_pstarmd(op, d, spec), noeth});
  auto b = verdict_and({is_star_domain(op, d, spec), noeth});
  if ((a.is_holds() && b.is_refuted()) || (a.is_refuted() && b.is_holds()))
    throw ConsistencyError("op-Dedekind routes disagree for " + op_print(op));
  if (a.is_holds()) a.anchor = "P*MD and ACC on quasi-op-ideals";
  return a;
}

// ---------------------------------------------------------------------------
// Sampled identities

namespace {

Verdict pair_identity(const Domain& d, const SampleSpec& spec, uint64_t stream, int n, bool fg_left, bool fg_right,
                      const std::vector<IdealPair>& seeds,
                      const std::function<bool(const IdealHandle&, const IdealHandle&)>& ok, const std::string& note) {
  std::vector<IdealPair> pairs = seeds;
  Sampler s(d, spec, stream);
  while (static_cast<int>(pairs.size()) < n) {
    auto e = fg_left ? s.fg() : s.any();
    auto f = fg_right ? s.fg() : s.any();
    pairs.emplace_back(e, f);
  }
  for (const auto& [e, f] : pairs)
    if (!ok(e, f)) return Verdict::refuted({e, f}, note);
  return unknown_from(static_cast<int>(pairs.size()), spec);
}

}  // namespace

Verdict check_axioms(const Op& op, const Domain& d, const SampleSpec& spec) {
  Sampler s(d, spec, 11);
  for (int k = 0; k < spec.count; ++k) {
    auto x = s.unit();
    auto e = s.any();
    auto f = s.any();
    auto es = semistar::apply(op, e);
    if (!(semistar::apply(op, scale(e, x)) == scale(es, x))) return Verdict::refuted({e}, "(xE)^op != x E^op");
    auto g = add(e, f);
    if (!subset(es, semistar::apply(op, g))) return Verdict::refuted({e, g}, "E c G but E^op not in G^op");
    auto h = meet(e, f);
    if (!subset(semistar::apply(op, h), es)) return Verdict::refuted({h, e}, "E n F c E but images not nested");
    if (!subset(e, es)) return Verdict::refuted({e}, "E not in E^op");
    if (!(semistar::apply(op, es) == es)) return Verdict::refuted({e}, "E^op^op != E^op");
  }
  return unknown_from(spec.count, spec);
}

Verdict check_basic_formulas(const Op& op, const Domain& d, const SampleSpec& spec) {
  auto st = [&](const IdealHandle& x) { return semistar::apply(op, x); };
  Sampler s(d, spec, 13);
  for (int k = 0; k < spec.count; ++k) {
    auto e = s.any();
    auto f = s.any();
    auto es = st(e);
    auto fs = st(f);
    auto p = st(mul(e, f));
    if (!(p == st(mul(es, f)) && p == st(mul(e, fs)) && p == st(mul(es, fs))))
      return Verdict::refuted({e, f}, "product formula");
    auto q = st(add(e, f));
    if (!(q == st(add(es, f)) && q == st(add(e, fs)) && q == st(add(es, fs))))
      return Verdict::refuted({e, f}, "sum formula");
    try {
      auto c = colon(es, fs);
      if (!subset(st(colon(e, f)), c) || !(c == colon(es, f)) || !(c == st(c)))
        return Verdict::refuted({e, f}, "colon formula");
    } catch (const ZeroModuleError&) {
      return Verdict::refuted({e, f}, "colon formula: (E^op:F^op) vanished");
    }
    auto m = meet(es, fs);
    if (!subset(st(meet(e, f)), m) || !(m == st(m))) return Verdict::refuted({e, f}, "intersection formula");
  }
  return unknown_from(spec.count, spec);
}

Verdict check_tilde_product_identity(const Op& op, const Domain& d, const SampleSpec& spec, int pairs) {
  Op tl = op_tilde(op);
  return pair_identity(
      d, spec, 17, pairs, true, true, {},
      [&](const IdealHandle& e, const IdealHandle& f) {
        return semistar::apply(tl, mul(add(e, f), meet(e, f))) == semistar::apply(tl, mul(e, f));
      },
      "((E+F)(E n F))^tilde != (EF)^tilde");
}

// ---------------------------------------------------------------------------
// Implication suite

int SuiteReport::violations() const {
  return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const SuiteLine& l) { return l.outcome == "violated"; }));
}

namespace {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(SuiteReport& r) : r_(r) {}

  // A Holds and B Refuted is a violation.
  void implies(const std::string& check, const std::string& anchor, const std::string& an, const Verdict& a,
               const std::string& bn, const Verdict& b) {
    std::string outcome = !a.is_holds() ? "vacuous" : (b.is_refuted() ? "violated" : "ok");
    r_.lines.push_back({check, anchor, an + " " + a.summary(), bn + " " + b.summary(), outcome});
  }

  void iff(const std::string& check, const std::string& anchor, const std::string& an, const Verdict& a,
           const std::string& bn, const Verdict& b) {
    bool clash = (a.is_holds() && b.is_refuted()) || (a.is_refuted() && b.is_holds());
    std::string outcome = clash ? "violated" : (a.is_unknown() && b.is_unknown() ? "vacuous" : "ok");
    r_.lines.push_back({check, anchor, an + " " + a.summary(), bn + " " + b.summary(), outcome});
  }

 private:
  SuiteReport& r_;
};

Verdict fact(bool holds, const std::string& yes, const std::string& no) {
  if (holds) return Verdict::holds(yes, yes);
  return Verdict::refuted({}, no);
}

}  // namespace

SuiteReport theorem_suite(const Domain& d, const Op& op, const SampleSpec& spec) {
  SuiteReport rep;
  rep.instance = d->describe();
  rep.op = op_print(op);
  SuiteBuilder S(rep);

  Op f = op_ft(op);
  Op b = op_stable(op);
  Op tl = op_tilde(op);
  Op bf = op_ft(b);
  auto U = sample_universe(d, spec, 41, 50);
  auto D = ring_of(d);
  auto st = [&](const IdealHandle& x) { return semistar::apply(op, x); };

  auto sd = is_star_domain(op, d, spec);
  auto sd_f = is_star_domain(f, d, spec);
  auto sd_t = is_star_domain(tl, d, spec);
  auto sd_b = is_star_domain(b, d, spec);
  auto pm = is_pstarmd(op, d, spec);
  auto pm_b = is_pstarmd(b, d, spec);
  auto ab = is_ab(op, d, spec);
  auto eab = is_eab(op, d, spec);

  auto coh = [&](Coherence k, const Op& o) { return coherence_check(k, o, d, spec); };
  auto extra = coh(Coherence::Extracoherent, op);
  auto cohe = coh(Coherence::Coherent, op);
  auto truly = coh(Coherence::TrulyCoherent, op);
  auto quasi = coh(Coherence::QuasiCoherent, op);
  auto extra_f = coh(Coherence::Extracoherent, f);
  auto cohe_f = coh(Coherence::Coherent, f);
  auto truly_f = coh(Coherence::TrulyCoherent, f);
  auto quasi_f = coh(Coherence::QuasiCoherent, f);
  auto extra_t = coh(Coherence::Extracoherent, tl);
  auto cohe_t = coh(Coherence::Coherent, tl);
  auto truly_t = coh(Coherence::TrulyCoherent, tl);

  auto hc = h_clauses(op, d, spec);
  const auto& H = hc.front().verdict;
  auto I = is_I_domain(op, d, spec);
  auto I_b = is_I_domain(b, d, spec);
  auto noeth = is_star_noetherian(op, d);
  auto ded = is_star_dedekind(op, d, spec);

  auto eq_tilde_bf = ops_equal_on(tl, bf, d, U);
  auto eq_bf_f = ops_equal_on(bf, f, d, U);
  auto eq_tilde_f = ops_equal_on(tl, f, d, U);

  std::vector<IdealPair> seeds;
  for (const auto& i : fg_named(d)) seeds.emplace_back(D, i);
  auto einv = pair_identity(
      d, spec, 43, spec.count, true, true, seeds,
      [&](const IdealHandle& e, const IdealHandle& g) { return st(mul(g, colon(e, g))) == st(e); },
      "(F(E:F))^op != E^op");
  auto cor28 = pair_identity(
      d, spec, 47, spec.count, false, true, {},
      [&](const IdealHandle& e, const IdealHandle& g) {
        if (st(e).is_whole()) return st(mul(e, inverse(g))).is_whole();
        return st(mul(e, inverse(g))) == colon(st(e), g);
      },
      "(EF^-1)^op != (E^op:F)");
  auto Dstar = st(D);
  auto fstable = pair_identity(
      d, spec, 53, spec.count, true, true, {},
      [&](const IdealHandle& e, const IdealHandle& g) {
        auto left = st(meet(colon(e, g), D));
        auto right = meet(colon(st(e), g), Dstar);
        return left == right && st(meet(e, g)) == meet(st(e), st(g));
      },
      "(E:_D F)^op != (E^op :_D^op F)");
  auto inter = pair_identity(
      d, spec, 59, spec.count, true, true, {},
      [&](const IdealHandle& e, const IdealHandle& g) { return st(meet(e, g)) == meet(st(e), st(g)); },
      "(E n F)^op != E^op n F^op");
  auto p312 = check_tilde_product_identity(op, d, spec, 100);
  auto ic = fact(d->caps().integrally_closed, "integrally closed", "not integrally closed");

  // basic implications
  S.implies("monotone transfer", "op1 <= op2, op1-domain => op2-domain", "op_f<=op and op_f-domain",
            verdict_and({op_leq(f, op, d, U), sd_f}), "op-domain", sd);
  S.implies("monotone transfer", "op1 <= op2, op1-domain => op2-domain", "tilde<=op and tilde-domain",
            verdict_and({op_leq(tl, op, d, U), sd_t}), "op-domain", sd);
  S.implies("monotone transfer", "op1 <= op2, op1-domain => op2-domain", "bar<=op and bar-domain",
            verdict_and({op_leq(b, op, d, U), sd_b}), "op-domain", sd);
  S.iff("P*MD routes", "op_f-domain <=> tilde-domain <=> P*MD", "op_f-domain", sd_f, "P*MD", pm);
  S.iff("P*MD routes", "op_f-domain <=> tilde-domain <=> P*MD", "tilde-domain", sd_t, "P*MD", pm);
  S.implies("P*MD is an op-domain", "P*MD => op-domain", "P*MD", pm, "op-domain", sd);
  S.iff("stable closure", "op-domain <=> bar-domain", "op-domain", sd, "bar-domain", sd_b);
  S.implies("cancellation", "op-domain => a.b.", "op-domain", sd, "a.b.", ab);
  S.implies("cancellation", "a.b. => e.a.b.", "a.b.", ab, "e.a.b.", eab);
  S.implies("cancellation", "P*MD => a.b.", "P*MD", pm, "a.b.", ab);
  S.implies("cancellation", "P*MD => e.a.b.", "P*MD", pm, "e.a.b.", eab);
  S.implies("colon characterization", "op-domain => (F(E:F))^op = E^op", "op-domain", sd, "identity", einv);
  S.implies("colon characterization", "op-domain => (EF^-1)^op = (E^op:F)", "op-domain", sd, "identity", cor28);
  S.implies("finite stability", "op-domain, D int. closed => (E:_D F)^op = (E^op:_D^op F)", "op-domain and int. closed",
            verdict_and({sd, ic}), "identity", fstable);
  S.implies("finite stability", "((bar)_f, op_f)-domain => (E n F)^op = E^op n F^op", "((bar)_f, op_f)", eq_bf_f,
            "identity", inter);
  {
    Verdict up;
    if (Dstar.is_whole())
      up = Verdict::holds("D^op = K is a field", "");
    else if (Dstar == D)
      up = sd;
    else if (Dstar == overring_of(d))
      up = Verdict::holds("D^op is a valuation domain", "");
    else
      up = Verdict::unknown(0, "overring not representable");
    S.implies("ascent", "D op-domain => D^op op_i-domain", "op-domain", sd, "D^op op_i-domain", up);
    auto flat = fact(is_valuation(d), "V = D is flat", "V is not flat over D");
    auto down = is_star_domain(op_descent(op_identity()), d, spec);
    S.implies("descent", "T d_T-domain, T flat => D (d_T)^i-domain", "flat and T valuation", flat, "(d_T)^i-domain",
              down);
  }

  // coherence
  S.implies("coherence lattice", "extracoherent => coherent", "extracoherent", extra, "coherent", cohe);
  S.implies("coherence lattice", "extracoherent => truly coherent", "extracoherent", extra, "truly coherent", truly);
  S.implies("coherence lattice", "truly coherent => quasi-coherent", "truly coherent", truly, "quasi-coherent", quasi);
  S.iff("finite-type coherence", "op-extracoherent <=> op_f-extracoherent", "op", extra, "op_f", extra_f);
  S.iff("finite-type coherence", "op-coherent <=> op_f-coherent", "op", cohe, "op_f", cohe_f);
  S.implies("finite-type coherence", "truly op_f-coherent => truly op-coherent", "op_f", truly_f, "op", truly);
  S.implies("finite-type coherence", "op_f-quasi-coherent => op-quasi-coherent", "op_f", quasi_f, "op", quasi);
  S.implies("stable case", "((bar)_f, op_f), op-noetherian => extracoherent", "premise",
            verdict_and({eq_bf_f, noeth}), "extracoherent", extra);
  S.implies("stable case", "((bar)_f, op_f) => (truly coherent => coherent)", "premise and truly",
            verdict_and({eq_bf_f, truly}), "coherent", cohe);
  S.implies("stable case", "((bar)_f, op_f) => (coherent => truly coherent)", "premise and coherent",
            verdict_and({eq_bf_f, cohe}), "truly coherent", truly);
  S.implies("stable case", "((bar)_f, op_f) => (coherent => quasi-coherent)", "premise and coherent",
            verdict_and({eq_bf_f, cohe}), "quasi-coherent", quasi);
  S.implies("extracoherent equalities", "extracoherent => ((bar)_f, op_f)-domain", "extracoherent", extra,
            "((bar)_f, op_f)", eq_bf_f);
  S.implies("extracoherent equalities", "extracoherent => (tilde, op_f)-domain", "extracoherent", extra,
            "(tilde, op_f)", eq_tilde_f);
  S.iff("extracoherence equivalence", "op-extracoherent <=> tilde-extracoherent and (tilde, op_f)", "op", extra,
        "tilde and (tilde, op_f)", verdict_and({extra_t, eq_tilde_f}));
  S.iff("tilde coherence", "tilde: extracoherent <=> truly coherent", "extracoherent", extra_t, "truly", truly_t);
  S.iff("tilde coherence", "tilde: truly coherent <=> coherent", "truly", truly_t, "coherent", cohe_t);
  S.implies("P*MD coherence", "P*MD => tilde-extracoherent", "P*MD", pm, "tilde-extracoherent", extra_t);
  S.implies("P*MD coherence", "P*MD => ((E+F)(E n F))^tilde = (EF)^tilde", "P*MD", pm, "identity", p312);
  S.iff("main equivalence", "P*MD <=> extracoherent op-domain", "P*MD", pm, "op-domain and extracoherent",
        verdict_and({sd, extra}));
  S.iff("main equivalence", "P*MD <=> op_f-extracoherent op-domain", "P*MD", pm, "op-domain and op_f-extracoherent",
        verdict_and({sd, extra_f}));
  S.iff("main equivalence", "P*MD <=> tilde-extracoherent op-domain", "P*MD", pm, "op-domain and tilde-extracoherent",
        verdict_and({sd, extra_t}));
  S.iff("main equivalence", "P*MD <=> truly op_f-coherent op-domain", "P*MD", pm, "op-domain and truly op_f-coherent",
        verdict_and({sd, truly_f}));
  S.iff("Dedekind", "op-Dedekind <=> op-noetherian op-domain", "op-Dedekind", ded, "op-noetherian and op-domain",
        verdict_and({noeth, sd}));

  // H and I
  for (size_t i = 0; i < hc.size(); ++i)
    for (size_t j = i + 1; j < hc.size(); ++j)
      S.iff("H clauses", "H(op) clause " + hc[i].name + " <=> " + hc[j].name, hc[i].name, hc[i].verdict, hc[j].name,
            hc[j].verdict);
  S.implies("H and P*MD", "H(op) => (op-domain => P*MD)", "H and op-domain", verdict_and({H, sd}), "P*MD", pm);
  S.implies("H and P*MD", "H(op) => (P*MD => op-domain)", "H and P*MD", verdict_and({H, pm}), "op-domain", sd);
  S.implies("weak condition", "H(op) => I(op)", "H", H, "I", I);
  S.iff("weak condition", "I(op) <=> I(bar)", "I(op)", I, "I(bar)", I_b);
  S.implies("weak condition", "op_f-quasi-coherent => I(op)", "op_f-quasi-coherent", quasi_f, "I", I);
  S.iff("op-domain and I", "op-domain and I(op) <=> P*MD", "op-domain and I", verdict_and({sd, I}), "P*MD", pm);
  S.iff("op-domain and I", "P*MD <=> P(bar)MD", "P*MD", pm, "P(bar)MD", pm_b);
  S.implies("tilde equality", "H(op) or truly op_f-coherent => (tilde, (bar)_f)", "H or truly op_f",
            verdict_or({H, truly_f}), "(tilde, (bar)_f)", eq_tilde_bf);
  S.implies("tilde equality", "(tilde, (bar)_f) => I(op)", "(tilde, (bar)_f)", eq_tilde_bf, "I", I);
  {
    std::vector<std::pair<std::string, Verdict>> four{
        {"truly op_f-coherent", truly_f}, {"op_f-quasi-coherent", quasi_f}, {"(tilde, (bar)_f)", eq_tilde_bf}, {"I", I}};
    for (size_t i = 0; i < four.size(); ++i)
      for (size_t j = 0; j < four.size(); ++j) {
        if (i == j) continue;
        S.implies("op-domain conditions", "op-domain => (" + four[i].first + " => " + four[j].first + ")",
                  "op-domain and " + four[i].first, verdict_and({sd, four[i].second}), four[j].first, four[j].second);
      }
  }
  S.iff("tilde characterization", "P*MD <=> op-domain and (tilde, op_f)", "P*MD", pm, "op-domain and (tilde, op_f)",
        verdict_and({sd, eq_tilde_f}));
  S.iff("tilde characterization", "P*MD <=> a.b. and (tilde, op_f)", "P*MD", pm, "a.b. and (tilde, op_f)",
        verdict_and({ab, eq_tilde_f}));
  S.iff("tilde characterization", "P*MD <=> e.a.b. and (tilde, op_f)", "P*MD", pm, "e.a.b. and (tilde, op_f)",
        verdict_and({eab, eq_tilde_f}));
  S.iff("tilde characterization", "P*MD <=> bar-domain and (tilde, (bar)_f)", "P*MD", pm,
        "bar-domain and (tilde, (bar)_f)", verdict_and({sd_b, eq_tilde_bf}));

  std::stable_sort(rep.lines.begin(), rep.lines.end(), [](const SuiteLine& a, const SuiteLine& b) {
    return std::tie(a.anchor, a.check) < std::tie(b.anchor, b.check);
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Catalog

std::vector<CatalogEntry> catalog() {
  auto K = std::make_shared<const ExtensionField>(BaseField::rationals(), std::vector<Rational>{-2, 0, 1});
  auto parse_all = [](std::vector<std::string> names) {
    std::vector<Op> out;
    for (const auto& n : names) out.push_back(op_parse(n));
    return out;
  };
  std::vector<CatalogEntry> out;
  out.push_back({"numsgr-345", DomainHandle::semigroup_ring({3, 4, 5}),
                 parse_all({"d", "v", "t", "w", "st[ic]", "st[K]", "bar(v)"})});
  out.push_back({"numsgr-23", DomainHandle::semigroup_ring({2, 3}), parse_all({"d", "v", "st[ic]"})});
  out.push_back({"numsgr-469", DomainHandle::semigroup_ring({4, 6, 9}), parse_all({"d", "v"})});
  out.push_back({"pullback-Q", DomainHandle::pullback(K, ValueGroup(GroupKind::Rationals)),
                 parse_all({"d", "v", "t", "w", "st[V]", "st[K]", "bar(v)", "tilde(st[V])"})});
  out.push_back({"pullback-Z", DomainHandle::pullback(K, ValueGroup(GroupKind::Integers)),
                 parse_all({"d", "v", "st[V]", "st[K]", "bar(st[V])", "tilde(st[V])", "desc(d)"})});
  out.push_back({"valuation-Q", DomainHandle::valuation(BaseField::rationals(), ValueGroup(GroupKind::Rationals)),
                 parse_all({"d", "v", "t", "w", "bar(v)", "st[K]", "spec{M}"})});
  out.push_back({"valuation-Z", DomainHandle::valuation(BaseField::rationals(), ValueGroup(GroupKind::Integers)),
                 parse_all({"d", "v", "st[K]"})});
  out.push_back({"valuation-lex", DomainHandle::valuation(BaseField::rationals(), ValueGroup(GroupKind::Lex)),
                 parse_all({"d", "v", "t", "w", "spec{P1}", "spec{M}", "bar(v)", "st[K]"})});
  return out;
}

}  // namespace semistar
