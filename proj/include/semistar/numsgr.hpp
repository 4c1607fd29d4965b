// Monomial fractional ideals of K[[S]] for a numerical semigroup S, stored
// as value sets generated by finitely many integers.
#pragma once

#include "semistar/algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace semistar {

class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<long> generators);

  const std::vector<long>& generators() const { return gens_; }
  // -1 when S is all of N.
  long frobenius() const { return frobenius_; }
  long conductor() const { return frobenius_ + 1; }
  const std::vector<long>& gaps() const { return gaps_; }
  bool contains(long n) const;
  std::string name() const;

  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

 private:
  std::vector<long> gens_;
  std::vector<long> gaps_;
  long frobenius_ = -1;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

// Either the quotient field (whole) or the union of g + S over the generators.
class MonomialIdeal {
 public:
  static MonomialIdeal whole(SemigroupPtr ring);

  const SemigroupPtr& ring() const { return ring_; }
  bool is_whole() const { return whole_; }
  const std::vector<long>& generators() const { return gens_; }
  long min() const;
  bool contains(long z) const;
  std::string format() const;

  bool operator==(const MonomialIdeal& o) const;

 private:
  friend MonomialIdeal ideal_normalize(SemigroupPtr ring, std::vector<long> raw);
  MonomialIdeal() = default;
  SemigroupPtr ring_;
  std::vector<long> gens_;
  bool whole_ = false;
};

MonomialIdeal ideal_normalize(SemigroupPtr ring, std::vector<long> raw);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_mul(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// {z : z + b in a}. Throws ZeroModuleError when b is whole and a is not.
MonomialIdeal ideal_colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_shift(const MonomialIdeal& a, long h);
MonomialIdeal v_closure(const MonomialIdeal& a);
bool ideal_membership(const MonomialIdeal& a, long z);
bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ring_ideal(const SemigroupPtr& ring);
MonomialIdeal maximal_ideal(const SemigroupPtr& ring);
// Every normalized ideal whose generators all lie in [lo, hi].
std::vector<MonomialIdeal> enumerate_ideals(const SemigroupPtr& ring, long lo, long hi);

}  // namespace semistar
