#include "semistar/numsgr.hpp"

#include <algorithm>
#include <numeric>

namespace semistar {

NumericalSemigroup::NumericalSemigroup(std::vector<long> generators) {
  if (generators.empty()) throw Error("numerical semigroup needs generators");
  long g = 0;
  for (long x : generators) {
    if (x <= 0) throw Error("semigroup generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw Error("semigroup generators must have gcd 1");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  // Mark members until a run of length min(generator) appears.
  long m = generators.front();
  std::vector<char> in{1};
  long run = 0;
  for (long n = 1; run < m; ++n) {
    char hit = 0;
    for (long x : generators)
      if (x <= n && in[n - x]) hit = 1;
    in.push_back(hit);
    run = hit ? run + 1 : 0;
    if (!hit) {
      gaps_.push_back(n);
      frobenius_ = n;
    }
  }
  // Keep only minimal generators: x is redundant when the smaller kept
  // generators already reach it.
  for (long x : generators) {
    std::vector<char> reach(x + 1, 0);
    reach[0] = 1;
    for (long n = 1; n <= x; ++n)
      for (long y : gens_)
        if (y <= n && reach[n - y]) reach[n] = 1;
    if (!reach[x]) gens_.push_back(x);
  }
}

bool NumericalSemigroup::contains(long n) const {
  if (n < 0) return false;
  if (n > frobenius_) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

std::string NumericalSemigroup::name() const {
  std::string out = "<";
  for (size_t i = 0; i < gens_.size(); ++i) out += (i ? "," : "") + std::to_string(gens_[i]);
  return out + ">";
}

MonomialIdeal MonomialIdeal::whole(SemigroupPtr ring) {
  MonomialIdeal m;
  m.ring_ = std::move(ring);
  m.whole_ = true;
  return m;
}

long MonomialIdeal::min() const {
  if (whole_) throw Error("the quotient field has no minimal value");
  return gens_.front();
}

bool MonomialIdeal::contains(long z) const { return ideal_membership(*this, z); }

std::string MonomialIdeal::format() const {
  if (whole_) return "K";
  std::string out = "<";
  for (size_t i = 0; i < gens_.size(); ++i) out += (i ? ", x^" : "x^") + std::to_string(gens_[i]);
  return out + ">";
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  return *ring_ == *o.ring_ && whole_ == o.whole_ && gens_ == o.gens_;
}

namespace {

void require_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(*a.ring() == *b.ring())) throw StructuralError("ideals of different semigroup rings");
}

// Members of a in [lo, hi].
std::vector<long> members(const MonomialIdeal& a, long lo, long hi) {
  std::vector<long> out;
  for (long z = lo; z <= hi; ++z)
    if (ideal_membership(a, z)) out.push_back(z);
  return out;
}

}  // namespace

MonomialIdeal ideal_normalize(SemigroupPtr ring, std::vector<long> raw) {
  if (raw.empty()) throw ZeroModuleError("empty generator set");
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  MonomialIdeal m;
  m.ring_ = std::move(ring);
  for (long g : raw) {
    bool covered = false;
    for (long k : m.gens_)
      if (m.ring_->contains(g - k)) {
        covered = true;
        break;
      }
    if (!covered) m.gens_.push_back(g);
  }
  return m;
}

bool ideal_membership(const MonomialIdeal& a, long z) {
  if (a.is_whole()) return true;
  for (long g : a.generators()) {
    if (g > z) break;
    if (a.ring()->contains(z - g)) return true;
  }
  return false;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  if (a.is_whole()) return a;
  if (b.is_whole()) return b;
  auto raw = a.generators();
  raw.insert(raw.end(), b.generators().begin(), b.generators().end());
  return ideal_normalize(a.ring(), raw);
}

MonomialIdeal ideal_mul(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  if (a.is_whole()) return a;
  if (b.is_whole()) return b;
  std::vector<long> raw;
  for (long x : a.generators())
    for (long y : b.generators()) raw.push_back(x + y);
  return ideal_normalize(a.ring(), raw);
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  if (a.is_whole()) return b;
  if (b.is_whole()) return a;
  long c = a.ring()->conductor();
  long lo = std::max(a.min(), b.min());
  // Both value sets contain every integer from lo + c on.
  long hi = lo + 2 * c;
  std::vector<long> raw;
  for (long z : members(a, lo, hi))
    if (ideal_membership(b, z)) raw.push_back(z);
  for (long z = lo + c; z <= hi; ++z)
    if (std::find(raw.begin(), raw.end(), z) == raw.end())
      throw ConsistencyError("intersection tail is not stable");
  return ideal_normalize(a.ring(), raw);
}

MonomialIdeal ideal_shift(const MonomialIdeal& a, long h) {
  if (a.is_whole()) return a;
  auto raw = a.generators();
  for (auto& g : raw) g += h;
  return ideal_normalize(a.ring(), raw);
}

MonomialIdeal ideal_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  if (a.is_whole()) return a;
  if (b.is_whole()) throw ZeroModuleError("colon of a proper module by the quotient field is zero");
  MonomialIdeal acc = ideal_shift(a, -b.generators().front());
  for (size_t i = 1; i < b.generators().size(); ++i)
    acc = ideal_intersect(acc, ideal_shift(a, -b.generators()[i]));
  return acc;
}

MonomialIdeal ring_ideal(const SemigroupPtr& ring) { return ideal_normalize(ring, {0}); }

MonomialIdeal maximal_ideal(const SemigroupPtr& ring) { return ideal_normalize(ring, ring->generators()); }

MonomialIdeal v_closure(const MonomialIdeal& a) {
  if (a.is_whole()) return a;
  MonomialIdeal d = ring_ideal(a.ring());
  return ideal_colon(d, ideal_colon(d, a));
}

bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b) { return ideal_sum(a, b) == b; }

namespace {

void extend_antichains(const SemigroupPtr& ring, const std::vector<long>& pool, size_t from,
                       std::vector<long>& chosen, std::vector<MonomialIdeal>& out) {
  for (size_t i = from; i < pool.size(); ++i) {
    long g = pool[i];
    bool ok = true;
    for (long k : chosen)
      if (ring->contains(g - k)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(g);
    out.push_back(ideal_normalize(ring, chosen));
    extend_antichains(ring, pool, i + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MonomialIdeal> enumerate_ideals(const SemigroupPtr& ring, long lo, long hi) {
  std::vector<long> pool;
  for (long z = lo; z <= hi; ++z) pool.push_back(z);
  std::vector<long> chosen;
  std::vector<MonomialIdeal> out;
  extend_antichains(ring, pool, 0, chosen, out);
  return out;
}

}  // namespace semistar
