#include "semistar/dplusm.hpp"

#include <algorithm>

namespace semistar {

PullbackDomain::PullbackDomain(FieldPtr residue, ValueGroup group)
    : residue_(std::move(residue)), group_(group) {
  if (!residue_) throw Error("pullback needs a residue extension");
  if (is_proper() && group_.kind() == GroupKind::Lex)
    throw UnsupportedOperation("rank-two groups are supported for valuation domains only");
}

std::string PullbackDomain::name() const {
  std::string g = group_.name();
  if (!is_proper()) return "valuation(k=" + residue_->base().name() + ", G=" + g + ")";
  return "pullback(k=" + residue_->base().name() + ", K=" + residue_->base().name() + "[a]/(" +
         residue_->modulus_string() + "), G=" + g + ")";
}

namespace {

std::string level_text(const ValueGroup& G, const GroupElement& g) {
  if (G.kind() != GroupKind::Lex) return G.format(g);
  return format_rational(g.x) + "," + (g.y_neg_inf ? std::string("-inf") : format_rational(g.y));
}

std::string coeff_text(const ExtensionField& K, const Elem& c) {
  std::string s = K.format(c);
  bool compound = s.find_first_of("+-", 1) != std::string::npos;
  return compound ? "(" + s + ")" : s;
}

}  // namespace

LeveledModule::LeveledModule(PullbackPtr domain, std::vector<Jump> jumps, Segment tail)
    : domain_(std::move(domain)), tail_(std::move(tail)) {
  const auto& G = domain_->group();
  if (!(tail_.group() == G)) throw StructuralError("tail segment over the wrong group");
  std::vector<Jump> merged;
  for (auto& j : jumps) {
    G.validate(j.level);
    if (j.level.y_neg_inf) throw StructuralError("jump level must be a group element");
    if (!same_field(j.space.ambient(), domain_->residue()))
      throw StructuralError("jump space over the wrong field");
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Jump& m) { return m.level == j.level; });
    if (it == merged.end())
      merged.push_back(j);
    else
      it->space = subspace_sum(it->space, j.space);
  }
  for (const auto& j : merged) {
    if (j.space.is_zero()) continue;
    Segment own = j.space.is_full() ? Segment::closed(G, j.level) : Segment::open(G, j.level);
    tail_ = segment_union(tail_, own);
  }
  for (auto& j : merged)
    if (!j.space.is_zero() && !segment_contains(tail_, j.level)) jumps_.push_back(std::move(j));
  if (jumps_.size() > 1) throw ConsistencyError("leveled module kept more than one jump");
  if (jumps_.empty() && tail_.is_empty()) throw ZeroModuleError("module is zero");
}

Subspace LeveledModule::space_at(const GroupElement& g) const {
  if (segment_contains(tail_, g)) return Subspace::full(domain_->residue());
  if (has_jump() && jump().level == g) return jump().space;
  return Subspace::zero(domain_->residue());
}

bool LeveledModule::contains_monomial(const Monomial& m) const {
  if (domain_->residue()->is_zero(m.coeff)) return true;
  return space_at(m.level).contains(m.coeff);
}

Segment LeveledModule::hull() const {
  if (!has_jump()) return tail_;
  return segment_union(tail_, Segment::closed(domain_->group(), jump().level));
}

std::vector<Monomial> LeveledModule::generators() const {
  if (!finitely_generated()) throw UnsupportedOperation("module is not finitely generated");
  std::vector<Monomial> out;
  if (has_jump()) {
    for (const auto& b : jump().space.basis()) out.push_back({b, jump().level});
  } else {
    Subspace full = Subspace::full(domain_->residue());
    for (const auto& b : full.basis()) out.push_back({b, tail_.cut()});
  }
  return out;
}

std::string LeveledModule::format() const {
  const auto& G = domain_->group();
  if (tail_.is_whole()) return "K";
  if (!finitely_generated()) {
    std::string op = tail_.shape() == Segment::Shape::Open ? ">" : ">=";
    std::string lv = G.kind() == GroupKind::Lex ? "(" + level_text(G, tail_.cut()) + ")" : level_text(G, tail_.cut());
    return "<t(" + op + lv + ")>";
  }
  std::string out = "<";
  bool first = true;
  for (const auto& m : generators()) {
    if (!first) out += ", ";
    first = false;
    out += coeff_text(*domain_->residue(), m.coeff) + "*t(" + level_text(G, m.level) + ")";
  }
  return out + ">";
}

bool LeveledModule::operator==(const LeveledModule& o) const {
  if (!(*domain_ == *o.domain_) || !(tail_ == o.tail_) || jumps_.size() != o.jumps_.size()) return false;
  for (size_t i = 0; i < jumps_.size(); ++i)
    if (!(jumps_[i].level == o.jumps_[i].level) || !(jumps_[i].space == o.jumps_[i].space)) return false;
  return true;
}

namespace {

void require_same(const LeveledModule& a, const LeveledModule& b) {
  if (!(*a.domain() == *b.domain())) throw StructuralError("modules over different domains");
}

}  // namespace

LeveledModule module_from_generators(const PullbackPtr& domain, const std::vector<Monomial>& gens) {
  if (gens.empty()) throw ZeroModuleError("empty generator list");
  std::vector<Jump> jumps;
  for (const auto& m : gens) {
    auto c = domain->residue()->normalize(m.coeff);
    if (domain->residue()->is_zero(c)) throw Error("zero coefficient in generator list");
    jumps.push_back({m.level, Subspace(domain->residue(), {c})});
  }
  return LeveledModule(domain, jumps, Segment::empty(domain->group()));
}

LeveledModule segment_module(const PullbackPtr& domain, const Segment& s) { return LeveledModule(domain, {}, s); }

LeveledModule ring_module(const PullbackPtr& domain) {
  return module_from_generators(domain, {{domain->residue()->one(), domain->group().zero()}});
}

LeveledModule maximal_module(const PullbackPtr& domain) {
  return segment_module(domain, Segment::open(domain->group(), domain->group().zero()));
}

LeveledModule overring_module(const PullbackPtr& domain) {
  return segment_module(domain, Segment::closed(domain->group(), domain->group().zero()));
}

LeveledModule module_sum(const LeveledModule& a, const LeveledModule& b) {
  require_same(a, b);
  std::vector<Jump> jumps = a.jumps();
  jumps.insert(jumps.end(), b.jumps().begin(), b.jumps().end());
  return LeveledModule(a.domain(), jumps, segment_union(a.tail(), b.tail()));
}

LeveledModule module_intersect(const LeveledModule& a, const LeveledModule& b) {
  require_same(a, b);
  std::vector<Jump> jumps;
  if (a.has_jump()) jumps.push_back({a.jump().level, subspace_intersect(a.jump().space, b.space_at(a.jump().level))});
  if (b.has_jump()) jumps.push_back({b.jump().level, subspace_intersect(b.jump().space, a.space_at(b.jump().level))});
  return LeveledModule(a.domain(), jumps, segment_intersect(a.tail(), b.tail()));
}

LeveledModule module_mul(const LeveledModule& a, const LeveledModule& b) {
  require_same(a, b);
  const auto& G = a.domain()->group();
  Segment tail = segment_add(a.tail(), b.tail());
  if (a.has_jump()) tail = segment_union(tail, segment_add(Segment::closed(G, a.jump().level), b.tail()));
  if (b.has_jump()) tail = segment_union(tail, segment_add(a.tail(), Segment::closed(G, b.jump().level)));
  std::vector<Jump> jumps;
  if (a.has_jump() && b.has_jump())
    jumps.push_back({G.add(a.jump().level, b.jump().level), subspace_product(a.jump().space, b.jump().space)});
  return LeveledModule(a.domain(), jumps, tail);
}

LeveledModule module_colon(const LeveledModule& a, const LeveledModule& b) {
  require_same(a, b);
  const auto& G = a.domain()->group();
  if (b.is_whole()) {
    if (a.is_whole()) return a;
    throw ZeroModuleError("colon of a proper module by the quotient field is zero");
  }
  if (a.is_whole()) return a;
  if (b.has_jump()) {
    // z = c t^h works iff h + g2 lies in a's tail, or h + g2 is a's jump
    // level and c W2 sits inside the jump space.
    const auto& g2 = b.jump().level;
    Segment tail = segment_shift(a.tail(), G.neg(g2));
    std::vector<Jump> jumps;
    if (a.has_jump())
      jumps.push_back({G.sub(a.jump().level, g2), subspace_quotient(a.jump().space, b.jump().space)});
    return LeveledModule(a.domain(), jumps, tail);
  }
  return LeveledModule(a.domain(), {}, segment_colon(a.tail(), b.tail()));
}

LeveledModule module_scale(const LeveledModule& a, const Monomial& m) {
  const auto& K = a.domain()->residue();
  const auto& G = a.domain()->group();
  auto c = K->normalize(m.coeff);
  if (K->is_zero(c)) throw ZeroModuleError("scaling by zero");
  std::vector<Jump> jumps;
  if (a.has_jump()) jumps.push_back({G.add(a.jump().level, m.level), subspace_scale(c, a.jump().space)});
  return LeveledModule(a.domain(), jumps, segment_shift(a.tail(), m.level));
}

LeveledModule extend_to_V(const LeveledModule& a) { return module_mul(a, overring_module(a.domain())); }

LeveledModule v_closure_pullback(const LeveledModule& a) {
  if (a.is_whole()) return a;
  auto d = ring_module(a.domain());
  return module_colon(d, module_colon(d, a));
}

bool module_subset(const LeveledModule& a, const LeveledModule& b) { return module_sum(a, b) == b; }

Segment prime_segment(const ValueGroup& lex, const DomainPrime& p) {
  if (lex.kind() != GroupKind::Lex || p.coordinate != 0)
    throw UnsupportedOperation("coarsening primes exist only for the rank-two lex group");
  return Segment::closed(lex, GroupElement::neg_inf_at(1));
}

Segment localize_at(const Segment& a, const DomainPrime& p) {
  if (a.group().kind() != GroupKind::Lex || p.coordinate != 0)
    throw UnsupportedOperation("localization needs a rank-two lex segment");
  ValueGroup Z(GroupKind::Integers);
  if (a.is_whole()) return Segment::whole(Z);
  if (a.is_empty()) return Segment::empty(Z);
  // Canonical lex segments are closed; any cut projects to its first coordinate.
  return Segment::closed(Z, GroupElement(a.cut().x));
}

Segment lift_from_prime(const Segment& projected, const ValueGroup& lex) {
  if (projected.is_whole()) return Segment::whole(lex);
  if (projected.is_empty()) return Segment::empty(lex);
  return Segment::closed(lex, GroupElement::neg_inf_at(projected.cut().x));
}

}  // namespace semistar
