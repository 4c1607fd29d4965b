// Predicates over (domain, operation) pairs, returning three-valued verdicts,
// and the implication suite that cross-checks them.
#pragma once

#include "semistar/semistar.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace semistar {

struct SampleSpec {
  uint64_t seed = 0;
  int count = 200;
  int generator_bound = 4;
  int denominator_bound = 12;
  // Semigroup-ring windows reach conductor + window_extra.
  int window_extra = 6;

  std::string describe() const;
};

// Deterministic ideal generator; the same (domain, spec, stream) always
// yields the same sequence.
class Sampler {
 public:
  Sampler(Domain d, const SampleSpec& spec, uint64_t stream = 0);

  IdealHandle fg(bool integral = false);
  // A module without a least value; in discrete rank-one groups there is
  // none, so this falls back to fg().
  IdealHandle non_fg(bool integral = false);
  IdealHandle any();
  Scalar unit();

  uint64_t draw(uint64_t n) { return rng_() % n; }
  long range(long lo, long hi) { return lo + static_cast<long>(draw(static_cast<uint64_t>(hi - lo + 1))); }

 private:
  GroupElement level(bool nonneg);
  Elem coefficient(bool base_only);

  Domain dom_;
  SampleSpec spec_;
  std::mt19937_64 rng_;
};

// D, M, the overring and a few fixed segment modules.
std::vector<IdealHandle> named_ideals(const Domain& d);
std::vector<IdealHandle> sample_universe(const Domain& d, const SampleSpec& spec, uint64_t stream, int n);

bool is_star_invertible(const Op& op, const IdealHandle& i);
// Is there a f.g. J with J^op = target? With inside set, J must lie in it.
Verdict star_finite_match(const Op& op, const IdealHandle& target, const IdealHandle* inside = nullptr);
Verdict is_star_finite(const Op& op, const IdealHandle& i, bool inside = false);

Verdict is_star_domain(const Op& op, const Domain& d, const SampleSpec& spec);
Verdict is_pstarmd(const Op& op, const Domain& d, const SampleSpec& spec);
Verdict is_ab(const Op& op, const Domain& d, const SampleSpec& spec);
Verdict is_eab(const Op& op, const Domain& d, const SampleSpec& spec);

enum class Coherence { Extracoherent, Coherent, TrulyCoherent, QuasiCoherent };
std::string coherence_name(Coherence k);
using IdealPair = std::pair<IdealHandle, IdealHandle>;
std::vector<IdealPair> coherence_pairs(const Domain& d, const SampleSpec& spec);
// With use_theorems off every pair is searched even when a family theorem
// would settle the question.
Verdict coherence_check(Coherence kind, const Op& op, const Domain& d, const SampleSpec& spec,
                        bool use_theorems = true);

struct HClause {
  std::string name;
  Verdict verdict;
};

std::vector<HClause> h_clauses(const Op& op, const Domain& d, const SampleSpec& spec);
Verdict is_H_domain(const Op& op, const Domain& d, const SampleSpec& spec);
Verdict is_I_domain(const Op& op, const Domain& d, const SampleSpec& spec);
Verdict is_star_noetherian(const Op& op, const Domain& d, int chain_length = 6);
Verdict is_star_dedekind(const Op& op, const Domain& d, const SampleSpec& spec);

// Sampled identities; Refuted carries the failing pair.
Verdict check_axioms(const Op& op, const Domain& d, const SampleSpec& spec);
Verdict check_basic_formulas(const Op& op, const Domain& d, const SampleSpec& spec);
// ((E+F)(E n F))^op~ = (EF)^op~ on f.g. pairs.
Verdict check_tilde_product_identity(const Op& op, const Domain& d, const SampleSpec& spec, int pairs = 100);

Verdict verdict_and(const std::vector<Verdict>& parts);
Verdict verdict_or(const std::vector<Verdict>& parts);

struct SuiteLine {
  std::string check;
  std::string anchor;
  std::string premise;
  std::string conclusion;
  // ok, vacuous or violated
  std::string outcome;
};

struct SuiteReport {
  std::string instance;
  std::string op;
  std::vector<SuiteLine> lines;
  int violations() const;
};

SuiteReport theorem_suite(const Domain& d, const Op& op, const SampleSpec& spec);

struct CatalogEntry {
  std::string name;
  Domain domain;
  std::vector<Op> ops;
};

std::vector<CatalogEntry> catalog();

}  // namespace semistar
