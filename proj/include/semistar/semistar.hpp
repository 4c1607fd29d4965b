// Domain handles, ideal handles and semistar operation terms with exact
// evaluators for the three representable families.
#pragma once

#include "semistar/algebra.hpp"
#include "semistar/dplusm.hpp"
#include "semistar/numsgr.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace semistar {

enum class Family { SemigroupRing, Pullback, Valuation };

struct Capabilities {
  bool noetherian = false;
  bool local = true;
  bool valuation = false;
  bool all_ops_stable = false;
  bool integrally_closed = false;
};

class DomainHandle;
using Domain = std::shared_ptr<const DomainHandle>;

class DomainHandle {
 public:
  static Domain semigroup_ring(std::vector<long> generators);
  static Domain pullback(FieldPtr residue, ValueGroup group);
  static Domain valuation(BaseField k, ValueGroup group);

  Family family() const { return family_; }
  const Capabilities& caps() const { return caps_; }
  const SemigroupPtr& semigroup() const { return sgr_; }
  const PullbackPtr& pullback_domain() const { return pb_; }
  bool is_lex() const;
  std::string describe() const;

 private:
  DomainHandle() = default;
  Family family_ = Family::SemigroupRing;
  Capabilities caps_;
  SemigroupPtr sgr_;
  PullbackPtr pb_;
};

class IdealHandle {
 public:
  IdealHandle(Domain d, MonomialIdeal m);
  IdealHandle(Domain d, LeveledModule m);

  const Domain& domain() const { return dom_; }
  bool is_monomial() const { return std::holds_alternative<MonomialIdeal>(payload_); }
  const MonomialIdeal& monomial() const { return std::get<MonomialIdeal>(payload_); }
  const LeveledModule& leveled() const { return std::get<LeveledModule>(payload_); }
  bool is_whole() const;
  bool finitely_generated() const;
  // Rebuilds the module from its generators; only for f.g. handles.
  IdealHandle from_witness() const;
  std::string format() const;

  bool operator==(const IdealHandle& o) const;

 private:
  Domain dom_;
  std::variant<MonomialIdeal, LeveledModule> payload_;
};

// A unit c t^g of the quotient field; semigroup rings read only level.x.
using Scalar = Monomial;

IdealHandle ring_of(const Domain& d);
IdealHandle maximal_of(const Domain& d);
// The valuation overring V, or K[[X]] for a semigroup ring.
IdealHandle overring_of(const Domain& d);
IdealHandle whole_of(const Domain& d);

IdealHandle add(const IdealHandle& a, const IdealHandle& b);
IdealHandle mul(const IdealHandle& a, const IdealHandle& b);
IdealHandle meet(const IdealHandle& a, const IdealHandle& b);
IdealHandle colon(const IdealHandle& a, const IdealHandle& b);
IdealHandle inverse(const IdealHandle& a);
IdealHandle scale(const IdealHandle& a, const Scalar& x);
bool subset(const IdealHandle& a, const IdealHandle& b);
bool is_integral(const IdealHandle& a);
// Segment hull E V (E K[[X]] for semigroup rings).
IdealHandle extend_to_overring(const IdealHandle& a);

enum class OpKind { Identity, Divisorial, StarOverring, Spectral, FiniteType, Stable, Tilde, Ascent, Descent };
enum class Overring { IntegralClosure, ValuationHull, QuotientField };
enum class PrimeTag { Height1, Maximal };

struct OpTerm;
using Op = std::shared_ptr<const OpTerm>;

struct OpTerm {
  OpKind kind = OpKind::Identity;
  Overring overring = Overring::ValuationHull;
  std::vector<PrimeTag> delta;
  Op inner;
};

Op op_identity();
Op op_v();
Op op_t();
Op op_w();
Op op_star(Overring t);
Op op_spectral(std::vector<PrimeTag> delta);
Op op_ft(Op inner);
Op op_stable(Op inner);
Op op_tilde(Op inner);
Op op_ascent(Op inner);
Op op_descent(Op on_overring);

std::string op_print(const Op& op);
Op op_parse(const std::string& text);
// Parses one term starting at pos and advances pos past it.
Op op_parse_at(const std::string& text, size_t& pos);
bool op_same(const Op& a, const Op& b);
// Rewrites by constructor identities; with a domain also by its capabilities.
Op op_normalize(const Op& op, const Domain& d = nullptr);
bool op_is_finite_type(const Op& op, const Domain& d = nullptr);
bool op_is_stable(const Op& op, const Domain& d = nullptr);

IdealHandle apply(const Op& op, const IdealHandle& e);
IdealHandle finite_type_apply(const Op& op, const IdealHandle& e);
IdealHandle stable_apply(const Op& op, const IdealHandle& e);
IdealHandle tilde_apply(const Op& op, const IdealHandle& e);

enum class LsKind { Trivial, Maximal, LocalizeP, All };

struct LocalizingSystemView {
  LsKind kind = LsKind::Trivial;
  // Certified members with J^op = D^op; empty when the system is all ideals.
  std::vector<IdealHandle> cofinal;
  bool trivial = true;
  std::string description;
};

LocalizingSystemView localizing_system(const Domain& d, const Op& op);
bool ls_contains(const Op& op, const IdealHandle& i);

std::vector<PrimeTag> domain_primes(const Domain& d);
IdealHandle prime_ideal(const Domain& d, PrimeTag p);
std::string prime_name(PrimeTag p);
bool quasi_star_ideal_check(const Op& op, const IdealHandle& i);

struct QuasiMaximals {
  std::vector<PrimeTag> primes;
  // Set when no prime is quasi-maximal and the finite-type closure of D is K.
  bool empty_convention = false;
};

QuasiMaximals quasi_star_maximals(const Domain& d, const Op& op);
IdealHandle localize(const IdealHandle& e, PrimeTag p);

struct Verdict {
  enum class Outcome { Holds, Refuted, Unknown };
  Outcome outcome = Outcome::Unknown;
  std::string reason;
  std::string anchor;
  std::vector<IdealHandle> witness;
  std::string note;
  int samples = 0;
  std::string sample_params;

  static Verdict holds(std::string reason, std::string anchor);
  static Verdict refuted(std::vector<IdealHandle> witness, std::string note = {});
  static Verdict unknown(int samples, std::string params);

  bool is_holds() const { return outcome == Outcome::Holds; }
  bool is_refuted() const { return outcome == Outcome::Refuted; }
  bool is_unknown() const { return outcome == Outcome::Unknown; }
  std::string outcome_name() const;
  std::string witness_text() const;
  std::string summary() const;
};

Verdict op_leq(const Op& a, const Op& b, const Domain& d, const std::vector<IdealHandle>& universe);
Verdict ops_equal_on(const Op& a, const Op& b, const Domain& d, const std::vector<IdealHandle>& universe);

}  // namespace semistar
