#include "semistar/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace semistar {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

std::string format_rational(const Rational& q) { return q.get_str(); }

BaseField BaseField::rationals() { return BaseField(); }

BaseField BaseField::prime(long p) {
  if (!is_prime(p)) throw Error("base field characteristic " + std::to_string(p) + " is not prime");
  BaseField f;
  f.kind_ = Kind::PrimeField;
  f.p_ = p;
  return f;
}

Rational BaseField::reduce(const Rational& a) const {
  if (kind_ == Kind::Rationals) {
    Rational r = a;
    r.canonicalize();
    return r;
  }
  mpz_class P(p_);
  mpz_class num = a.get_num() % P;
  if (num < 0) num += P;
  mpz_class den = a.get_den() % P;
  if (den == 0) throw Error("denominator vanishes modulo " + std::to_string(p_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  mpz_class r = (num * inv) % P;
  return Rational(r);
}

Rational BaseField::add(const Rational& a, const Rational& b) const { return reduce(a + b); }
Rational BaseField::sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
Rational BaseField::mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
Rational BaseField::neg(const Rational& a) const { return reduce(-a); }

Rational BaseField::inv(const Rational& a) const {
  Rational r = reduce(a);
  if (r == 0) throw Error("division by zero in base field");
  if (kind_ == Kind::Rationals) return 1 / r;
  return reduce(Rational(1) / r);
}

std::string BaseField::name() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "Fp:" + std::to_string(p_);
}

// ---------------------------------------------------------------------------

namespace {

// Remainder of poly (low to high) modulo a monic polynomial.
std::vector<Rational> poly_rem(const BaseField& f, std::vector<Rational> a,
                               const std::vector<Rational>& m) {
  int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    Rational c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = f.sub(a[i - dm + j], f.mul(c, m[j]));
  }
  a.resize(std::max(dm, 0));
  return a;
}

bool has_rational_root(const std::vector<Rational>& coeffs) {
  mpz_class l = 1;
  for (const auto& c : coeffs) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  for (const auto& c : coeffs) z.push_back(mpz_class(c * l));
  if (z.front() == 0) return true;
  auto divisors = [](mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
    }
    return out;
  };
  if (abs(z.front()) > mpz_class("1000000000000") || abs(z.back()) > mpz_class("1000000000000"))
    throw Error("modulus coefficients too large for the rational root test");
  for (const auto& p : divisors(z.front())) {
    for (const auto& q : divisors(z.back())) {
      for (int sign : {1, -1}) {
        Rational r(sign * p, q);
        Rational acc = 0;
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) acc = acc * r + coeffs[i];
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

bool irreducible_mod_p(const BaseField& f, const std::vector<Rational>& m) {
  int d = static_cast<int>(m.size()) - 1;
  long p = f.characteristic();
  for (int k = 1; k <= d / 2; ++k) {
    double count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<double>(p);
    if (count > 2e6) throw Error("irreducibility check over Fp is too large");
    long total = static_cast<long>(count);
    for (long code = 0; code < total; ++code) {
      std::vector<Rational> cand(k + 1);
      long c = code;
      for (int i = 0; i < k; ++i) {
        cand[i] = Rational(c % p);
        c /= p;
      }
      cand[k] = 1;
      auto r = poly_rem(f, m, cand);
      bool zero = std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

ExtensionField::ExtensionField(BaseField base, std::vector<Rational> modulus)
    : base_(base), modulus_(std::move(modulus)) {
  for (auto& c : modulus_) c = base_.reduce(c);
  while (modulus_.size() > 1 && modulus_.back() == 0) modulus_.pop_back();
  if (modulus_.size() < 2) throw Error("modulus must have degree at least 1");
  if (modulus_.back() != 1) throw Error("modulus must be monic");
  int d = degree();
  if (base_.kind() == BaseField::Kind::Rationals) {
    if (d > 3) throw Error("extensions of Q are limited to degree 3");
    if (d >= 2 && has_rational_root(modulus_)) throw Error("modulus is reducible over Q");
  } else if (d >= 2 && !irreducible_mod_p(base_, modulus_)) {
    throw Error("modulus is reducible over " + base_.name());
  }
}

std::shared_ptr<const ExtensionField> ExtensionField::trivial(BaseField base) {
  return std::make_shared<const ExtensionField>(base, std::vector<Rational>{0, 1});
}

Elem ExtensionField::zero() const { return Elem(degree(), Rational(0)); }

Elem ExtensionField::one() const {
  Elem e = zero();
  e[0] = 1;
  return e;
}

Elem ExtensionField::gen() const {
  if (degree() == 1) return from_base(base_.neg(modulus_[0]));
  Elem e = zero();
  e[1] = 1;
  return e;
}

Elem ExtensionField::from_base(const Rational& c) const {
  Elem e = zero();
  e[0] = base_.reduce(c);
  return e;
}

Elem ExtensionField::normalize(Elem e) const {
  if (static_cast<int>(e.size()) > degree()) e = poly_rem(base_, e, modulus_);
  e.resize(degree(), Rational(0));
  for (auto& c : e) c = base_.reduce(c);
  return e;
}

Elem ExtensionField::add(const Elem& x, const Elem& y) const {
  Elem r(degree());
  for (int i = 0; i < degree(); ++i) r[i] = base_.add(x[i], y[i]);
  return r;
}

Elem ExtensionField::sub(const Elem& x, const Elem& y) const {
  Elem r(degree());
  for (int i = 0; i < degree(); ++i) r[i] = base_.sub(x[i], y[i]);
  return r;
}

Elem ExtensionField::neg(const Elem& x) const {
  Elem r(degree());
  for (int i = 0; i < degree(); ++i) r[i] = base_.neg(x[i]);
  return r;
}

Elem ExtensionField::mul(const Elem& x, const Elem& y) const {
  int d = degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(x[i], y[j]));
  }
  return normalize(std::move(prod));
}

Elem ExtensionField::inv(const Elem& x) const {
  if (is_zero(x)) throw Error("inverse of zero in extension field");
  int d = degree();
  // Columns of A are x * a^j; solve A y = 1.
  std::vector<Elem> cols;
  for (int j = 0; j < d; ++j) {
    Elem ej = zero();
    ej[j] = 1;
    cols.push_back(mul(x, ej));
  }
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m[i][j] = cols[j][i];
    m[i][d] = i == 0 ? 1 : 0;
  }
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int r = c; r < d; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("singular multiplication matrix; modulus not irreducible");
    std::swap(m[c], m[piv]);
    Rational iv = base_.inv(m[c][c]);
    for (auto& v : m[c]) v = base_.mul(v, iv);
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int k = 0; k <= d; ++k) m[r][k] = base_.sub(m[r][k], base_.mul(f, m[c][k]));
    }
  }
  Elem y(d);
  for (int i = 0; i < d; ++i) y[i] = m[i][d];
  return y;
}

Elem ExtensionField::pow(const Elem& x, long n) const {
  if (n < 0) return pow(inv(x), -n);
  Elem r = one();
  Elem b = x;
  while (n > 0) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

bool ExtensionField::is_zero(const Elem& x) const {
  return std::all_of(x.begin(), x.end(), [this](const Rational& c) { return base_.is_zero(c); });
}

bool ExtensionField::in_base(const Elem& x) const {
  for (int i = 1; i < degree(); ++i)
    if (x[i] != 0) return false;
  return true;
}

std::string ExtensionField::format(const Elem& x) const {
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    Rational c = x[i];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
    std::string coeff;
    bool negative = c < 0;
    Rational a = negative ? Rational(-c) : c;
    if (i == 0) {
      coeff = format_rational(a);
    } else if (a != 1) {
      coeff = format_rational(a) + "*";
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + coeff + mono;
    } else {
      out += (negative ? "-" : "+") + coeff + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string ExtensionField::modulus_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = modulus_[i];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
    bool negative = c < 0;
    Rational a = negative ? Rational(-c) : c;
    std::string coeff = (i == 0) ? format_rational(a) : (a == 1 ? "" : format_rational(a) + "*");
    if (out.empty())
      out = (negative ? "-" : "") + coeff + mono;
    else
      out += (negative ? "-" : "+") + coeff + mono;
  }
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------

std::vector<Elem> row_reduce(const BaseField& f, std::vector<Elem> rows) {
  if (rows.empty()) return rows;
  size_t n = rows.front().size();
  size_t r = 0;
  for (size_t c = 0; c < n && r < rows.size(); ++c) {
    size_t piv = rows.size();
    for (size_t i = r; i < rows.size(); ++i)
      if (!f.is_zero(rows[i][c])) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational iv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, iv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      Rational k = rows[i][c];
      for (size_t j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(k, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

Subspace::Subspace(FieldPtr ambient, std::vector<Elem> vectors) : ambient_(std::move(ambient)) {
  for (auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient_->degree())
      throw StructuralError("vector length does not match the field degree");
    v = ambient_->normalize(v);
  }
  basis_ = row_reduce(ambient_->base(), std::move(vectors));
}

Subspace Subspace::zero(FieldPtr ambient) { return Subspace(std::move(ambient), {}); }

Subspace Subspace::full(FieldPtr ambient) {
  std::vector<Elem> rows;
  for (int i = 0; i < ambient->degree(); ++i) {
    Elem e = ambient->zero();
    e[i] = 1;
    rows.push_back(e);
  }
  return Subspace(std::move(ambient), rows);
}

bool Subspace::contains(const Elem& x) const {
  auto rows = basis_;
  rows.push_back(ambient_->normalize(x));
  return static_cast<int>(row_reduce(ambient_->base(), rows).size()) == dim();
}

bool Subspace::subset_of(const Subspace& o) const {
  for (const auto& b : basis_)
    if (!o.contains(b)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return same_field(ambient_, o.ambient_) && basis_ == o.basis_;
}

namespace {
void require_same(const Subspace& a, const Subspace& b) {
  if (!same_field(a.ambient(), b.ambient())) throw StructuralError("subspaces live in different fields");
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  auto rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  const auto& K = a.ambient();
  int d = K->degree();
  // Zassenhaus: rows [u | u] for u in a and [w | 0] for w in b.
  std::vector<Elem> rows;
  for (const auto& u : a.basis()) {
    Elem r(u);
    r.insert(r.end(), u.begin(), u.end());
    rows.push_back(r);
  }
  for (const auto& w : b.basis()) {
    Elem r(w);
    r.insert(r.end(), d, Rational(0));
    rows.push_back(r);
  }
  rows = row_reduce(K->base(), rows);
  std::vector<Elem> out;
  for (const auto& r : rows) {
    bool left_zero = true;
    for (int i = 0; i < d; ++i)
      if (r[i] != 0) left_zero = false;
    if (left_zero) out.emplace_back(r.begin() + d, r.end());
  }
  return Subspace(K, out);
}

Subspace subspace_scale(const Elem& c, const Subspace& w) {
  const auto& K = w.ambient();
  if (K->is_zero(c)) throw Error("scaling a subspace by zero");
  std::vector<Elem> rows;
  for (const auto& b : w.basis()) rows.push_back(K->mul(c, b));
  return Subspace(K, rows);
}

Subspace subspace_product(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  const auto& K = a.ambient();
  std::vector<Elem> rows;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) rows.push_back(K->mul(x, y));
  return Subspace(K, rows);
}

Subspace subspace_quotient(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  const auto& K = a.ambient();
  Subspace acc = Subspace::full(K);
  for (const auto& w : b.basis()) acc = subspace_intersect(acc, subspace_scale(K->inv(w), a));
  return acc;
}

// ---------------------------------------------------------------------------

std::strong_ordering GroupElement::operator<=>(const GroupElement& o) const {
  if (x != o.x) return x < o.x ? std::strong_ordering::less : std::strong_ordering::greater;
  if (y_neg_inf || o.y_neg_inf) {
    if (y_neg_inf && o.y_neg_inf) return std::strong_ordering::equal;
    return y_neg_inf ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (y != o.y) return y < o.y ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ValueGroup::name() const {
  switch (kind_) {
    case GroupKind::Integers: return "Z";
    case GroupKind::Rationals: return "Q";
    case GroupKind::Lex: return "ZxZ_lex";
  }
  return "?";
}

GroupElement ValueGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(a.x + b.x, a.y + b.y);
  r.y_neg_inf = a.y_neg_inf || b.y_neg_inf;
  if (r.y_neg_inf) r.y = 0;
  return r;
}

GroupElement ValueGroup::neg(const GroupElement& a) const {
  if (a.y_neg_inf) throw StructuralError("cannot negate an infinite cut");
  return GroupElement(-a.x, -a.y);
}

GroupElement ValueGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement ValueGroup::successor(const GroupElement& a) const {
  switch (kind_) {
    case GroupKind::Integers: return GroupElement(a.x + 1, 0);
    case GroupKind::Lex:
      if (a.y_neg_inf) throw StructuralError("no successor of an infinite cut");
      return GroupElement(a.x, a.y + 1);
    case GroupKind::Rationals: break;
  }
  throw StructuralError("successor requested in a dense group");
}

GroupElement ValueGroup::unit_step() const {
  switch (kind_) {
    case GroupKind::Integers: return GroupElement(1, 0);
    case GroupKind::Lex: return GroupElement(0, 1);
    case GroupKind::Rationals: break;
  }
  throw StructuralError("no least positive element in a dense group");
}

void ValueGroup::validate(const GroupElement& a) const {
  switch (kind_) {
    case GroupKind::Integers:
      if (!is_integer(a.x) || a.y != 0 || a.y_neg_inf) throw StructuralError("not an element of Z");
      break;
    case GroupKind::Rationals:
      if (a.y != 0 || a.y_neg_inf) throw StructuralError("not an element of Q");
      break;
    case GroupKind::Lex:
      if (!is_integer(a.x) || !is_integer(a.y)) throw StructuralError("not an element of ZxZ");
      break;
  }
}

std::string ValueGroup::format(const GroupElement& a) const {
  if (kind_ != GroupKind::Lex) return format_rational(a.x);
  return "(" + format_rational(a.x) + "," + (a.y_neg_inf ? std::string("-inf") : format_rational(a.y)) + ")";
}

// ---------------------------------------------------------------------------

Segment Segment::whole(ValueGroup g) { return Segment(g, Shape::Whole, GroupElement()); }
Segment Segment::empty(ValueGroup g) { return Segment(g, Shape::Empty, GroupElement()); }

Segment Segment::closed(ValueGroup g, GroupElement cut) {
  g.validate(cut);
  if (cut.y_neg_inf) cut.y = 0;
  return Segment(g, Shape::Closed, std::move(cut));
}

Segment Segment::open(ValueGroup g, GroupElement cut) {
  g.validate(cut);
  if (g.kind() == GroupKind::Rationals) return Segment(g, Shape::Open, std::move(cut));
  if (cut.y_neg_inf) return closed(g, cut);
  return closed(g, g.successor(cut));
}

bool Segment::has_min() const { return shape_ == Shape::Closed && !cut_.y_neg_inf; }

std::string Segment::format() const {
  switch (shape_) {
    case Shape::Whole: return "K";
    case Shape::Empty: return "0";
    case Shape::Closed: return ">=" + group_.format(cut_);
    case Shape::Open: return ">" + group_.format(cut_);
  }
  return "?";
}

bool Segment::operator==(const Segment& o) const {
  if (!(group_ == o.group_) || shape_ != o.shape_) return false;
  if (shape_ == Shape::Whole || shape_ == Shape::Empty) return true;
  return cut_ == o.cut_;
}

namespace {
void require_same(const Segment& a, const Segment& b) {
  if (!(a.group() == b.group())) throw StructuralError("segments over different value groups");
}
}  // namespace

Segment segment_add(const Segment& s, const Segment& t) {
  require_same(s, t);
  const auto& G = s.group();
  if (s.is_empty() || t.is_empty()) return Segment::empty(G);
  if (s.is_whole() || t.is_whole()) return Segment::whole(G);
  GroupElement c = G.add(s.cut(), t.cut());
  if (s.shape() == Segment::Shape::Closed && t.shape() == Segment::Shape::Closed) return Segment::closed(G, c);
  return Segment::open(G, c);
}

Segment segment_colon(const Segment& s, const Segment& t) {
  require_same(s, t);
  const auto& G = s.group();
  if (t.is_empty()) throw Error("colon by the empty segment");
  if (s.is_whole()) return Segment::whole(G);
  if (t.is_whole() || s.is_empty()) return Segment::empty(G);
  const auto& a = s.cut();
  const auto& b = t.cut();
  if (G.kind() == GroupKind::Lex) {
    if (!b.y_neg_inf) {
      GroupElement d = a.y_neg_inf ? GroupElement::neg_inf_at(a.x - b.x) : G.sub(a, b);
      return Segment::closed(G, d);
    }
    if (a.y_neg_inf) return Segment::closed(G, GroupElement::neg_inf_at(a.x - b.x));
    return Segment::closed(G, GroupElement::neg_inf_at(a.x - b.x + 1));
  }
  GroupElement d = G.sub(a, b);
  bool s_open = s.shape() == Segment::Shape::Open;
  bool t_open = t.shape() == Segment::Shape::Open;
  if (s_open && !t_open) return Segment::open(G, d);
  return Segment::closed(G, d);
}

bool segment_subset(const Segment& s, const Segment& t) {
  require_same(s, t);
  if (s.is_empty() || t.is_whole()) return true;
  if (s.is_whole() || t.is_empty()) return false;
  auto cmp = s.cut() <=> t.cut();
  if (cmp > 0) return true;
  if (cmp < 0) return false;
  return t.shape() == Segment::Shape::Closed || s.shape() == Segment::Shape::Open;
}

Segment segment_intersect(const Segment& s, const Segment& t) { return segment_subset(s, t) ? s : t; }

Segment segment_union(const Segment& s, const Segment& t) { return segment_subset(s, t) ? t : s; }

Segment segment_shift(const Segment& s, const GroupElement& g) {
  if (s.is_whole() || s.is_empty()) return s;
  GroupElement c = s.group().add(s.cut(), g);
  if (s.shape() == Segment::Shape::Closed) return Segment::closed(s.group(), c);
  return Segment::open(s.group(), c);
}

bool segment_contains(const Segment& s, const GroupElement& g) {
  switch (s.shape()) {
    case Segment::Shape::Whole: return true;
    case Segment::Shape::Empty: return false;
    case Segment::Shape::Closed: return (g <=> s.cut()) >= 0;
    case Segment::Shape::Open: return (g <=> s.cut()) > 0;
  }
  return false;
}

}  // namespace semistar
