// Reference models used only by the tests: a bitset picture of monomial
// ideals and a leading-term reduction test for leveled-module membership.
// Neither calls into the code under test beyond plain data accessors.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <memory>
#include <string>
#include <vector>

#include "semistar/dplusm.hpp"
#include "semistar/numsgr.hpp"

namespace oracle {

using semistar::Elem;
using semistar::GroupElement;
using semistar::Monomial;

// Window [lo, hi] of a value set; values above hi count as members.
struct Bits {
  long lo = 0;
  long hi = 0;
  std::vector<char> in;

  bool has(long z) const { return z > hi || (z >= lo && in[z - lo]); }
};

class Semigroup {
 public:
  Semigroup(const std::vector<long>& gens, long limit) : in_(limit + 1, 0) {
    in_[0] = 1;
    for (long n = 1; n <= limit; ++n)
      for (long g : gens)
        if (g <= n && in_[n - g]) in_[n] = 1;
  }
  // Callers keep limit beyond the conductor.
  bool has(long n) const { return n >= 0 && (n >= static_cast<long>(in_.size()) || in_[n]); }

 private:
  std::vector<char> in_;
};

inline Bits from_generators(const Semigroup& s, const std::vector<long>& gens, long lo, long hi) {
  Bits b{lo, hi, std::vector<char>(hi - lo + 1, 0)};
  for (long z = lo; z <= hi; ++z)
    for (long g : gens)
      if (s.has(z - g)) b.in[z - lo] = 1;
  return b;
}

inline Bits combine(const Bits& a, const Bits& b, bool both) {
  Bits r = a;
  for (size_t i = 0; i < r.in.size(); ++i) r.in[i] = both ? (a.in[i] && b.in[i]) : (a.in[i] || b.in[i]);
  return r;
}

inline Bits product(const Bits& a, const Bits& b) {
  Bits r{a.lo, a.hi, std::vector<char>(a.in.size(), 0)};
  for (long x = a.lo; x <= a.hi; ++x) {
    if (!a.has(x)) continue;
    for (long y = b.lo; y <= b.hi; ++y)
      if (b.has(y) && x + y >= r.lo && x + y <= r.hi) r.in[x + y - r.lo] = 1;
  }
  return r;
}

// {z : z + B in A}, looking at B inside the window.
inline Bits colon(const Bits& a, const Bits& b) {
  Bits r{a.lo, a.hi, std::vector<char>(a.in.size(), 0)};
  for (long z = a.lo; z <= a.hi; ++z) {
    bool ok = true;
    for (long y = b.lo; y <= b.hi && ok; ++y)
      if (b.has(y) && !a.has(z + y)) ok = false;
    r.in[z - r.lo] = ok;
  }
  return r;
}

// z is a minimal generator iff z - s leaves the set for each semigroup
// generator s.
inline std::vector<long> minimal_generators(const std::vector<long>& sgens, const Bits& b, long top) {
  std::vector<long> out;
  for (long z = b.lo; z <= top; ++z) {
    if (!b.has(z)) continue;
    bool minimal = true;
    for (long s : sgens)
      if (z - s >= b.lo && b.has(z - s)) minimal = false;
    if (minimal) out.push_back(z);
  }
  return out;
}

struct SweepResult {
  long ideals = 0;
  long pairs = 0;
  long mismatches = 0;
  std::string first;
};

// Every pair of normalized ideals with generators in [0, F+6], all four
// operations, compared with the bitset model on a window wide enough that
// nothing outside it can differ.
inline SweepResult sweep_semigroup(const std::vector<long>& sgens) {
  auto ring = std::make_shared<const semistar::NumericalSemigroup>(sgens);
  long F = std::max(ring->frobenius(), 0L), c = ring->conductor();
  long top = F + 6;
  long lo = -top - 1, hi = 4 * top + 2 * c + 4;
  long mid = hi - top - c;
  Semigroup S(sgens, hi + top + 1);
  auto ideals = semistar::enumerate_ideals(ring, 0, top);
  std::vector<Bits> bits;
  for (const auto& I : ideals) bits.push_back(from_generators(S, I.generators(), lo, hi));

  SweepResult r;
  r.ideals = static_cast<long>(ideals.size());
  auto check = [&](const semistar::MonomialIdeal& got, const Bits& want, const char* what, size_t i, size_t j) {
    bool ok = !got.is_whole();
    for (long z = lo; ok && z <= mid; ++z)
      if (got.contains(z) != want.has(z)) ok = false;
    if (ok && got.generators() != minimal_generators(sgens, want, mid)) ok = false;
    if (!ok) {
      if (r.mismatches == 0)
        r.first = std::string(what) + " of " + ideals[i].format() + " and " + ideals[j].format() + " gave " + got.format();
      ++r.mismatches;
    }
  };
  for (size_t i = 0; i < ideals.size(); ++i) {
    for (size_t j = 0; j < ideals.size(); ++j) {
      ++r.pairs;
      check(semistar::ideal_sum(ideals[i], ideals[j]), combine(bits[i], bits[j], false), "sum", i, j);
      check(semistar::ideal_intersect(ideals[i], ideals[j]), combine(bits[i], bits[j], true), "intersection", i, j);
      check(semistar::ideal_mul(ideals[i], ideals[j]), product(bits[i], bits[j]), "product", i, j);
      check(semistar::ideal_colon(ideals[i], ideals[j]), colon(bits[i], bits[j]), "colon", i, j);
    }
  }
  return r;
}

// Leading-term reduction: a homogeneous c t^g lies in the D-module generated
// by monomials iff some generator sits strictly lower, or c is a base-field
// combination of the generators at level g. D = k + M, and every element of
// positive level is in M.
inline bool in_span(const semistar::ExtensionField& K, std::vector<Elem> rows, Elem target) {
  const auto& k = K.base();
  int n = K.degree();
  // Gaussian elimination over the base field, then reduce the target.
  std::vector<Elem> basis;
  std::vector<int> pivots;
  for (auto r : rows) {
    for (size_t i = 0; i < basis.size(); ++i) {
      auto f = r[pivots[i]];
      if (k.is_zero(f)) continue;
      for (int j = 0; j < n; ++j) r[j] = k.sub(r[j], k.mul(f, basis[i][j]));
    }
    int p = -1;
    for (int j = 0; j < n; ++j)
      if (!k.is_zero(r[j])) {
        p = j;
        break;
      }
    if (p < 0) continue;
    auto inv = k.inv(r[p]);
    for (int j = 0; j < n; ++j) r[j] = k.mul(r[j], inv);
    for (size_t i = 0; i < basis.size(); ++i) {
      auto f = basis[i][p];
      if (k.is_zero(f)) continue;
      for (int j = 0; j < n; ++j) basis[i][j] = k.sub(basis[i][j], k.mul(f, r[j]));
    }
    basis.push_back(r);
    pivots.push_back(p);
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    auto f = target[pivots[i]];
    if (k.is_zero(f)) continue;
    for (int j = 0; j < n; ++j) target[j] = k.sub(target[j], k.mul(f, basis[i][j]));
  }
  return std::all_of(target.begin(), target.end(), [&](const auto& x) { return k.is_zero(x); });
}

inline bool reduces_to_zero(const semistar::ExtensionField& K, const std::vector<Monomial>& gens,
                            const std::vector<Monomial>& element) {
  std::map<GroupElement, Elem> by_level;
  const auto& k = K.base();
  for (const auto& t : element) {
    auto it = by_level.find(t.level);
    if (it == by_level.end()) {
      by_level.emplace(t.level, t.coeff);
    } else {
      for (int j = 0; j < K.degree(); ++j) it->second[j] = k.add(it->second[j], t.coeff[j]);
    }
  }
  for (const auto& [g, c] : by_level) {
    if (std::all_of(c.begin(), c.end(), [&](const auto& x) { return k.is_zero(x); })) continue;
    bool lower = false;
    std::vector<Elem> same;
    for (const auto& m : gens) {
      if (m.level < g) lower = true;
      if (m.level == g) same.push_back(m.coeff);
    }
    if (lower) continue;
    if (!in_span(K, same, c)) return false;
  }
  return true;
}

struct MembershipSweep {
  long cases = 0;
  long members = 0;
  long mismatches = 0;
  std::string first;
};

// Seeded membership cases over several residue extensions and value groups.
// Modules are generated, summed or multiplied; elements are short sums of
// monomials placed near the generator levels so both answers occur.
inline MembershipSweep sweep_leveled(uint64_t seed, int cases, int elements_per_module = 1) {
  using namespace semistar;
  struct Setup {
    FieldPtr K;
    ValueGroup G;
  };
  auto Q = BaseField::rationals();
  std::vector<Setup> setups = {
      {std::make_shared<const ExtensionField>(Q, std::vector<Rational>{-2, 0, 1}), ValueGroup(GroupKind::Integers)},
      {std::make_shared<const ExtensionField>(Q, std::vector<Rational>{-2, 0, 1}), ValueGroup(GroupKind::Rationals)},
      {std::make_shared<const ExtensionField>(Q, std::vector<Rational>{-2, 0, 0, 1}), ValueGroup(GroupKind::Integers)},
      {std::make_shared<const ExtensionField>(Q, std::vector<Rational>{-2, 0, 0, 1}), ValueGroup(GroupKind::Rationals)},
      {std::make_shared<const ExtensionField>(BaseField::prime(5), std::vector<Rational>{-2, 0, 1}),
       ValueGroup(GroupKind::Integers)},
      {ExtensionField::trivial(Q), ValueGroup(GroupKind::Lex)},
      {ExtensionField::trivial(Q), ValueGroup(GroupKind::Rationals)},
  };
  std::mt19937_64 rng(seed);
  auto small = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1)); };
  MembershipSweep out;
  for (int n = 0; n < cases; ++n) {
    const auto& su = setups[rng() % setups.size()];
    auto D = std::make_shared<const PullbackDomain>(su.K, su.G);
    const auto& K = *su.K;
    auto level = [&]() {
      Rational x(small(-3, 3), su.G.kind() == GroupKind::Rationals ? small(1, 3) : 1);
      x.canonicalize();
      return su.G.kind() == GroupKind::Lex ? GroupElement(x, small(-2, 2)) : GroupElement(x);
    };
    auto coeff = [&]() {
      Elem e(K.degree());
      for (auto& c : e) c = Rational(small(-3, 3));
      if (K.is_zero(e)) e[0] = 1;
      return K.normalize(e);
    };
    auto gens = [&]() {
      std::vector<Monomial> g;
      for (long k = small(1, 3); k > 0; --k) g.push_back({coeff(), level()});
      return g;
    };
    auto A = gens();
    std::vector<Monomial> all = A;
    LeveledModule mod = module_from_generators(D, A);
    std::string shape = "gen";
    switch (rng() % 3) {
      case 1: {
        auto B = gens();
        all.insert(all.end(), B.begin(), B.end());
        mod = module_sum(mod, module_from_generators(D, B));
        shape = "sum";
        break;
      }
      case 2: {
        auto B = gens();
        all.clear();
        for (const auto& x : A)
          for (const auto& y : B) all.push_back({K.mul(x.coeff, y.coeff), su.G.add(x.level, y.level)});
        mod = module_mul(mod, module_from_generators(D, B));
        shape = "product";
        break;
      }
      default: break;
    }
    for (int e = 0; e < elements_per_module; ++e) {
      // element: one to three terms; levels are generator levels, nudged
      std::vector<Monomial> elem;
      for (long k = small(1, 3); k > 0; --k) {
        auto g = all[rng() % all.size()].level;
        if (rng() % 3 == 0) g = su.G.add(g, level());
        Elem c = K.zero();
        if (rng() % 2 == 0) {
          for (const auto& m : all)
            if (m.level == g) c = K.add(c, K.mul(K.from_base(Rational(small(-2, 2))), m.coeff));
        } else {
          c = coeff();
        }
        elem.push_back({c, g});
      }
      bool want = reduces_to_zero(K, all, elem);
      // the module side: every level's combined coefficient must be present
      std::map<GroupElement, Elem> by_level;
      for (const auto& t : elem) {
        auto [it, fresh] = by_level.emplace(t.level, t.coeff);
        if (!fresh) it->second = K.add(it->second, t.coeff);
      }
      bool got = true;
      for (const auto& [g, c] : by_level)
        if (!mod.contains_monomial({c, g})) got = false;
      ++out.cases;
      if (want) ++out.members;
      if (got != want) {
        if (out.mismatches == 0) out.first = shape + " module " + mod.format() + " over " + D->name();
        ++out.mismatches;
      }
    }
  }
  return out;
}

}  // namespace oracle
