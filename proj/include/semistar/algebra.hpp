// Exact scalars, finite field extensions, coefficient subspaces and
// ordered value groups with their upper segments.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace semistar {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands from different rings, fields or groups were combined.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation would produce the zero module, which is not representable.
class ZeroModuleError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

std::string format_rational(const Rational& q);

class BaseField {
 public:
  enum class Kind { Rationals, PrimeField };

  static BaseField rationals();
  static BaseField prime(long p);

  Kind kind() const { return kind_; }
  long characteristic() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }

  Rational reduce(const Rational& a) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  bool is_zero(const Rational& a) const { return reduce(a) == 0; }

  std::string name() const;
  bool operator==(const BaseField& o) const { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  Kind kind_ = Kind::Rationals;
  long p_ = 0;
};

using Elem = std::vector<Rational>;

// K = k[a]/(modulus). Elements are coefficient vectors of length degree().
class ExtensionField {
 public:
  // modulus holds coefficients from the constant term up; it must be monic.
  ExtensionField(BaseField base, std::vector<Rational> modulus);
  static std::shared_ptr<const ExtensionField> trivial(BaseField base);

  const BaseField& base() const { return base_; }
  const std::vector<Rational>& modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }

  Elem zero() const;
  Elem one() const;
  Elem gen() const;
  Elem from_base(const Rational& c) const;
  Elem normalize(Elem e) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem inv(const Elem& x) const;
  Elem pow(const Elem& x, long n) const;
  bool is_zero(const Elem& x) const;
  bool in_base(const Elem& x) const;

  std::string format(const Elem& x) const;
  std::string modulus_string() const;
  bool operator==(const ExtensionField& o) const {
    return base_ == o.base_ && modulus_ == o.modulus_;
  }

 private:
  BaseField base_;
  std::vector<Rational> modulus_;
};

using FieldPtr = std::shared_ptr<const ExtensionField>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

// Row reduction over the base field; returns the nonzero rows in reduced
// echelon form.
std::vector<Elem> row_reduce(const BaseField& f, std::vector<Elem> rows);

// A k-subspace of K kept in reduced echelon form, so == is set equality.
class Subspace {
 public:
  Subspace(FieldPtr ambient, std::vector<Elem> vectors);
  static Subspace zero(FieldPtr ambient);
  static Subspace full(FieldPtr ambient);

  const FieldPtr& ambient() const { return ambient_; }
  const std::vector<Elem>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == ambient_->degree(); }
  bool contains(const Elem& x) const;
  bool subset_of(const Subspace& o) const;

  bool operator==(const Subspace& o) const;

 private:
  FieldPtr ambient_;
  std::vector<Elem> basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace subspace_scale(const Elem& c, const Subspace& w);
// span{x*y : x in a, y in b}
Subspace subspace_product(const Subspace& a, const Subspace& b);
// {c in K : c*b is contained in a}
Subspace subspace_quotient(const Subspace& a, const Subspace& b);

enum class GroupKind { Integers, Rationals, Lex };

// x carries the rank-one value; y is the second lex coordinate. y_neg_inf
// marks the cut (x, -inf) below every (x, y); it only occurs as a cut.
struct GroupElement {
  Rational x;
  Rational y;
  bool y_neg_inf = false;

  GroupElement() = default;
  explicit GroupElement(Rational a) : x(std::move(a)) { x.canonicalize(); }
  GroupElement(Rational a, Rational b) : x(std::move(a)), y(std::move(b)) {
    x.canonicalize();
    y.canonicalize();
  }
  static GroupElement neg_inf_at(Rational a) {
    GroupElement g(std::move(a));
    g.y_neg_inf = true;
    return g;
  }

  bool operator==(const GroupElement& o) const {
    return x == o.x && y_neg_inf == o.y_neg_inf && (y_neg_inf || y == o.y);
  }
  std::strong_ordering operator<=>(const GroupElement& o) const;
};

class ValueGroup {
 public:
  ValueGroup() = default;
  explicit ValueGroup(GroupKind k) : kind_(k) {}

  GroupKind kind() const { return kind_; }
  bool discrete() const { return kind_ != GroupKind::Rationals; }
  std::string name() const;

  GroupElement zero() const { return GroupElement(0, 0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  // Smallest element above a; only in discrete groups.
  GroupElement successor(const GroupElement& a) const;
  // Smallest strictly positive element; only in discrete groups.
  GroupElement unit_step() const;
  void validate(const GroupElement& a) const;
  std::string format(const GroupElement& a) const;

  bool operator==(const ValueGroup& o) const { return kind_ == o.kind_; }

 private:
  GroupKind kind_ = GroupKind::Integers;
};

// Upper set of the value group: everything, nothing, {g >= cut} or {g > cut}.
class Segment {
 public:
  enum class Shape { Whole, Empty, Closed, Open };

  static Segment whole(ValueGroup g);
  static Segment empty(ValueGroup g);
  static Segment closed(ValueGroup g, GroupElement cut);
  static Segment open(ValueGroup g, GroupElement cut);

  const ValueGroup& group() const { return group_; }
  Shape shape() const { return shape_; }
  const GroupElement& cut() const { return cut_; }
  bool is_whole() const { return shape_ == Shape::Whole; }
  bool is_empty() const { return shape_ == Shape::Empty; }
  // True when the segment has a least element.
  bool has_min() const;

  std::string format() const;
  bool operator==(const Segment& o) const;

 private:
  Segment(ValueGroup g, Shape s, GroupElement c) : group_(g), shape_(s), cut_(std::move(c)) {}
  ValueGroup group_;
  Shape shape_ = Shape::Empty;
  GroupElement cut_;
};

Segment segment_add(const Segment& s, const Segment& t);
Segment segment_colon(const Segment& s, const Segment& t);
Segment segment_intersect(const Segment& s, const Segment& t);
Segment segment_union(const Segment& s, const Segment& t);
Segment segment_shift(const Segment& s, const GroupElement& g);
bool segment_contains(const Segment& s, const GroupElement& g);
bool segment_subset(const Segment& s, const Segment& t);

}  // namespace semistar
