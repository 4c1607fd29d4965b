// Valuation domains V = K + M over an ordered group and pullbacks D = k + M,
// with fractional D-submodules stored by leading coefficients.
#pragma once

#include "semistar/algebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace semistar {

// D = k + M inside V = K + M. With residue degree 1 the two coincide and D
// is the valuation domain itself.
class PullbackDomain {
 public:
  PullbackDomain(FieldPtr residue, ValueGroup group);

  const FieldPtr& residue() const { return residue_; }
  const ValueGroup& group() const { return group_; }
  bool is_proper() const { return residue_->degree() >= 2; }
  bool is_valuation() const { return !is_proper(); }
  std::string name() const;

  bool operator==(const PullbackDomain& o) const {
    return same_field(residue_, o.residue_) && group_ == o.group_;
  }

 private:
  FieldPtr residue_;
  ValueGroup group_;
};

using PullbackPtr = std::shared_ptr<const PullbackDomain>;

struct Monomial {
  Elem coeff;
  GroupElement level;
};

struct Jump {
  GroupElement level;
  Subspace space;
};

// W t^g plus full K on the tail segment. Every D-submodule of the quotient
// field has this shape with at most one jump, sitting just below the tail.
class LeveledModule {
 public:
  // Canonicalizes; throws ZeroModuleError if nothing is left.
  LeveledModule(PullbackPtr domain, std::vector<Jump> jumps, Segment tail);

  const PullbackPtr& domain() const { return domain_; }
  const std::vector<Jump>& jumps() const { return jumps_; }
  const Segment& tail() const { return tail_; }
  bool has_jump() const { return !jumps_.empty(); }
  const Jump& jump() const { return jumps_.front(); }
  bool is_whole() const { return tail_.is_whole(); }
  bool finitely_generated() const { return has_jump() || tail_.has_min(); }

  // Coefficients available at a level: full, the jump space, or zero.
  Subspace space_at(const GroupElement& g) const;
  bool contains_monomial(const Monomial& m) const;
  // Smallest segment module containing this one.
  Segment hull() const;
  // A generating set when the module is finitely generated.
  std::vector<Monomial> generators() const;
  std::string format() const;

  bool operator==(const LeveledModule& o) const;

 private:
  PullbackPtr domain_;
  std::vector<Jump> jumps_;
  Segment tail_;
};

LeveledModule module_from_generators(const PullbackPtr& domain, const std::vector<Monomial>& gens);
LeveledModule segment_module(const PullbackPtr& domain, const Segment& s);
LeveledModule ring_module(const PullbackPtr& domain);
LeveledModule maximal_module(const PullbackPtr& domain);
LeveledModule overring_module(const PullbackPtr& domain);

LeveledModule module_sum(const LeveledModule& a, const LeveledModule& b);
LeveledModule module_intersect(const LeveledModule& a, const LeveledModule& b);
LeveledModule module_mul(const LeveledModule& a, const LeveledModule& b);
LeveledModule module_colon(const LeveledModule& a, const LeveledModule& b);
LeveledModule module_scale(const LeveledModule& a, const Monomial& m);
LeveledModule extend_to_V(const LeveledModule& a);
LeveledModule v_closure_pullback(const LeveledModule& a);
bool module_subset(const LeveledModule& a, const LeveledModule& b);

// The height-one prime of a rank-two lex valuation domain: values with
// positive first coordinate.
struct DomainPrime {
  int coordinate = 0;
};

Segment prime_segment(const ValueGroup& lex, const DomainPrime& p);
// E V_P written over the first coordinate.
Segment localize_at(const Segment& a, const DomainPrime& p);
// Back to the rank-two group: the image is E V_P.
Segment lift_from_prime(const Segment& projected, const ValueGroup& lex);

}  // namespace semistar
