#include "semistar/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>

#include "json.hpp"

namespace semistar::cli {

ParseError::ParseError(int line, int column, const std::string& expected, const std::string& what)
    : CliError(ErrorKind::Parse, what), line_(line), column_(column), expected_(expected) {}

namespace {

std::pair<int, int> line_col(const std::string& s, size_t pos) {
  int line = 1, col = 1;
  for (size_t i = 0; i < pos && i < s.size(); ++i) {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void parse_fail(const std::string& s, size_t pos, const std::string& expected) {
  auto [l, c] = line_col(s, pos);
  std::string found = pos >= s.size() ? "end of input" : s[pos] == '\n' ? "end of line" : std::string("'") + s[pos] + "'";
  throw ParseError(l, c, expected,
                   "line " + std::to_string(l) + ", column " + std::to_string(c) + ": expected " + expected +
                       ", found " + found);
}

[[noreturn]] void semantic(const std::string& what) { throw CliError(ErrorKind::Semantic, what); }

bool is_ident(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Polynomial in a over the base field, constant term first.
std::vector<Rational> parse_polynomial(const std::string& s, const BaseField& k) {
  std::vector<Rational> coeffs;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  bool first = true;
  skip();
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      parse_fail(s, pos, "'+' or '-'");
    }
    first = false;
    Rational c(1);
    bool have_number = false;
    if (pos < s.size() && is_digit(s[pos])) {
      size_t b = pos;
      while (pos < s.size() && (is_digit(s[pos]) || s[pos] == '/')) ++pos;
      c = Rational(s.substr(b, pos - b));
      c.canonicalize();
      have_number = true;
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip();
        if (pos >= s.size() || s[pos] != 'a') parse_fail(s, pos, "'a'");
      }
    }
    long exp = 0;
    if (pos < s.size() && s[pos] == 'a') {
      ++pos;
      exp = 1;
      skip();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        skip();
        size_t b = pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (b == pos) parse_fail(s, pos, "an exponent");
        exp = std::stol(s.substr(b, pos - b));
      }
    } else if (!have_number) {
      parse_fail(s, pos, "a coefficient or 'a'");
    }
    skip();
    if (coeffs.size() <= static_cast<size_t>(exp)) coeffs.resize(exp + 1, Rational(0));
    coeffs[exp] = k.add(coeffs[exp], Rational(sign) * c);
  }
  if (coeffs.empty()) parse_fail(s, 0, "a polynomial in a");
  return coeffs;
}

std::vector<long> parse_int_list(const std::string& s) {
  std::vector<long> out;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip();
  if (pos >= s.size() || s[pos] != '[') parse_fail(s, pos, "'['");
  ++pos;
  while (true) {
    skip();
    size_t b = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (b == pos) parse_fail(s, pos, "an integer");
    out.push_back(std::stol(s.substr(b, pos - b)));
    skip();
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == ']') break;
    parse_fail(s, pos, "',' or ']'");
  }
  return out;
}

}  // namespace

Domain parse_domain(const std::string& text) {
  static const std::vector<std::string> known{"family", "generators", "base_field", "extension", "group"};
  std::map<std::string, std::string> kv;
  std::map<std::string, size_t> offset;
  size_t pos = 0;
  while (true) {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
    if (pos >= text.size()) break;
    size_t kb = pos;
    while (pos < text.size() && is_ident(text[pos])) ++pos;
    std::string key = text.substr(kb, pos - kb);
    if (key.empty()) parse_fail(text, pos, "a key");
    if (std::find(known.begin(), known.end(), key) == known.end())
      parse_fail(text, kb, "one of family, generators, base_field, extension, group");
    if (pos >= text.size() || text[pos] != '=') parse_fail(text, pos, "'='");
    ++pos;
    size_t vb = pos;
    if (pos < text.size() && text[pos] == '[') {
      while (pos < text.size() && text[pos] != ']') ++pos;
      if (pos >= text.size()) parse_fail(text, pos, "']'");
      ++pos;
    } else {
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '#') ++pos;
    }
    if (vb == pos) parse_fail(text, pos, "a value");
    if (kv.count(key)) semantic("key '" + key + "' given twice");
    kv[key] = text.substr(vb, pos - vb);
    offset[key] = vb;
  }
  if (!kv.count("family")) semantic("missing key 'family'");
  const std::string family = kv["family"];
  auto allow = [&](std::vector<std::string> keys) {
    keys.push_back("family");
    for (const auto& [k, v] : kv)
      if (std::find(keys.begin(), keys.end(), k) == keys.end())
        semantic("key '" + k + "' does not apply to family " + family);
  };
  auto require = [&](const std::string& k) {
    if (!kv.count(k)) semantic("family " + family + " needs key '" + k + "'");
    return kv[k];
  };
  // Values are parsed on their own; move diagnostics back into the document.
  auto in_doc = [&](const std::string& key, auto&& parse) {
    try {
      return parse(require(key));
    } catch (const ParseError& e) {
      parse_fail(text, offset[key] + e.column() - 1, e.expected());
    }
  };
  auto base = [&] {
    if (!kv.count("base_field") || kv["base_field"] == "Q") return BaseField::rationals();
    const std::string& b = kv["base_field"];
    if (b.rfind("Fp:", 0) == 0 && b.size() > 3 && std::all_of(b.begin() + 3, b.end(), is_digit))
      return BaseField::prime(std::stol(b.substr(3)));
    semantic("base_field must be Q or Fp:<p>, got '" + b + "'");
  };
  auto group = [&] {
    const std::string g = require("group");
    if (g == "Z") return ValueGroup(GroupKind::Integers);
    if (g == "Q") return ValueGroup(GroupKind::Rationals);
    if (g == "ZxZ_lex") return ValueGroup(GroupKind::Lex);
    semantic("group must be Z, Q or ZxZ_lex, got '" + g + "'");
  };
  try {
    if (family == "numsgr") {
      allow({"generators"});
      return DomainHandle::semigroup_ring(in_doc("generators", parse_int_list));
    }
    if (family == "pullback") {
      allow({"base_field", "extension", "group"});
      BaseField k = base();
      auto poly = in_doc("extension", [&](const std::string& v) { return parse_polynomial(v, k); });
      auto K = std::make_shared<const ExtensionField>(k, poly);
      if (K->degree() < 2) semantic("pullback needs an extension of degree at least 2");
      return DomainHandle::pullback(K, group());
    }
    if (family == "valuation") {
      allow({"base_field", "group"});
      return DomainHandle::valuation(base(), group());
    }
  } catch (const CliError&) {
    throw;
  } catch (const UnsupportedOperation& e) {
    throw CliError(ErrorKind::Unsupported, e.what());
  } catch (const Error& e) {
    semantic(e.what());
  }
  semantic("family must be numsgr, pullback or valuation, got '" + family + "'");
}

// ---------------------------------------------------------------------------
// Expressions

namespace {

std::string level_text(const ValueGroup& G, const GroupElement& g, bool wrap) {
  if (G.kind() != GroupKind::Lex) return G.format(g);
  std::string s = format_rational(g.x) + "," + (g.y_neg_inf ? std::string("-inf") : format_rational(g.y));
  return wrap ? "(" + s + ")" : s;
}

std::string coeff_text(const ExtensionField& K, const Elem& c) {
  std::string s = K.format(c);
  bool compound = s.find_first_of("+-", 1) != std::string::npos;
  return compound ? "(" + s + ")" : s;
}

int precedence(char op) {
  switch (op) {
    case ':': return 1;
    case '&': return 2;
    case '+': return 3;
    case '*': return 4;
  }
  return 5;
}

class ExprParser {
 public:
  ExprParser(const std::string& s, const Domain& d) : s_(s), d_(d) {}

  ExprPtr parse() {
    auto e = binary(1);
    skip();
    if (pos_ < s_.size()) fail("an operator '+', '*', '&', ':' or end of input");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }
  [[noreturn]] void fail(const std::string& expected) { parse_fail(s_, pos_, expected); }

  ExprPtr binary(int level) {
    if (level > 4) return unary();
    static const char ops[] = {0, ':', '&', '+', '*'};
    auto lhs = binary(level + 1);
    while (accept(ops[level])) {
      auto rhs = binary(level + 1);
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Binary;
      e->op = ops[level];
      e->lhs = lhs;
      e->rhs = rhs;
      lhs = e;
    }
    return lhs;
  }

  Op op_term() {
    try {
      return op_parse_at(s_, pos_);
    } catch (const CliError&) {
      throw;
    } catch (const Error&) {
      fail("an operation term");
    }
  }

  ExprPtr unary() {
    skip();
    if (accept('(')) {
      auto e = binary(1);
      expect(')');
      return e;
    }
    if (peek('<')) return gens();
    size_t start = pos_;
    while (pos_ < s_.size() && is_ident(s_[pos_])) ++pos_;
    std::string word = s_.substr(start, pos_ - start);
    auto e = std::make_shared<Expr>();
    if (word == "D" || word == "M" || word == "V") {
      e->kind = word == "D" ? Expr::Kind::Ring : word == "M" ? Expr::Kind::Maximal : Expr::Kind::Overring;
      if (word == "V" && d_->family() == Family::SemigroupRing)
        semantic("atom 'V' is not available in a semigroup ring");
      return e;
    }
    e->kind = Expr::Kind::Func;
    if (word == "v" || word == "t" || word == "w" || word == "inv") {
      e->func = word;
    } else if (word == "ft" || word == "bar" || word == "tilde" || word == "apply") {
      e->func = word;
      expect('[');
      e->term = op_term();
      expect(']');
    } else if (word == "st") {
      e->func = word;
      pos_ = start;
      e->term = op_term();
    } else {
      pos_ = start;
      fail("an ideal: '<', '(', D, M, V, v, t, w, inv, ft[..], bar[..], tilde[..], st[..] or apply[..]");
    }
    expect('(');
    e->lhs = binary(1);
    expect(')');
    return e;
  }

  ExprPtr gens() {
    expect('<');
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Gens;
    do {
      e->gens.push_back(gen());
    } while (accept(','));
    expect('>');
    return e;
  }

  long integer() {
    skip();
    size_t b = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (pos_ == b || s_[pos_ - 1] == '-') {
      pos_ = b;
      fail("an integer");
    }
    return std::stol(s_.substr(b, pos_ - b));
  }

  Rational rational() {
    skip();
    size_t b = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    size_t digits = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (pos_ == digits) {
      pos_ = b;
      fail("a number");
    }
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      size_t db = pos_;
      while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
      if (pos_ == db) fail("a denominator");
    }
    Rational q(s_.substr(b, pos_ - b));
    if (q.get_den() == 0) semantic("zero denominator");
    q.canonicalize();
    return q;
  }

  Gen gen() {
    skip();
    Gen g;
    if (d_->family() == Family::SemigroupRing) {
      if (!accept('x')) fail("a monomial x^n");
      g.kind = Gen::Kind::Power;
      g.exponent = 1;
      if (accept('^')) g.exponent = integer();
      return g;
    }
    const auto& K = d_->pullback_domain()->residue();
    g.coeff = K->one();
    if (!peek('t')) {
      g.coeff = coeff_product();
      expect('*');
      if (!peek('t')) fail("'t'");
      if (K->is_zero(g.coeff)) semantic("zero coefficient in a generator");
    }
    expect('t');
    expect('(');
    g.kind = Gen::Kind::Point;
    if (accept('>')) {
      g.kind = accept('=') ? Gen::Kind::AtLeast : Gen::Kind::Above;
      if (!(g.coeff == K->one())) semantic("tail generators take no coefficient");
    }
    g.level = level(g.kind != Gen::Kind::Point);
    expect(')');
    return g;
  }

  GroupElement level(bool tail) {
    const auto& G = d_->pullback_domain()->group();
    if (G.kind() != GroupKind::Lex) {
      GroupElement l(rational());
      try {
        G.validate(l);
      } catch (const Error& e) {
        semantic(e.what());
      }
      return l;
    }
    bool wrapped = accept('(');
    Rational x = rational();
    expect(',');
    skip();
    GroupElement l;
    if (s_.compare(pos_, 4, "-inf") == 0) {
      if (!tail) fail("a number");
      pos_ += 4;
      l = GroupElement::neg_inf_at(x);
    } else {
      l = GroupElement(x, rational());
      try {
        G.validate(l);
      } catch (const Error& e) {
        semantic(e.what());
      }
    }
    if (wrapped) expect(')');
    return l;
  }

  // Coefficients stop at the '*' that precedes t(.
  Elem coeff_product() {
    const auto& K = d_->pullback_domain()->residue();
    Elem c = coeff_factor();
    while (true) {
      size_t save = pos_;
      if (!accept('*')) break;
      if (peek('t')) {
        pos_ = save;
        break;
      }
      c = K->mul(c, coeff_factor());
    }
    return c;
  }

  Elem coeff_sum() {
    const auto& K = d_->pullback_domain()->residue();
    Elem c = coeff_product();
    while (true) {
      if (accept('+'))
        c = K->add(c, coeff_product());
      else if (accept('-'))
        c = K->sub(c, coeff_product());
      else
        return c;
    }
  }

  Elem coeff_factor() {
    const auto& K = d_->pullback_domain()->residue();
    skip();
    if (accept('-')) return K->neg(coeff_factor());
    if (accept('(')) {
      Elem c = coeff_sum();
      expect(')');
      return c;
    }
    if (accept('a')) {
      if (K->degree() < 2) semantic("coefficient 'a' needs a proper extension");
      long n = 1;
      if (accept('^')) n = integer();
      return K->pow(K->gen(), n);
    }
    if (pos_ < s_.size() && is_digit(s_[pos_])) return K->from_base(rational());
    fail("a coefficient");
  }

  const std::string& s_;
  const Domain& d_;
  size_t pos_ = 0;
};

std::string print_gen(const Gen& g, const Domain& d) {
  if (g.kind == Gen::Kind::Power) return "x^" + std::to_string(g.exponent);
  const auto& G = d->pullback_domain()->group();
  switch (g.kind) {
    case Gen::Kind::Above: return "t(>" + level_text(G, g.level, true) + ")";
    case Gen::Kind::AtLeast: return "t(>=" + level_text(G, g.level, true) + ")";
    default: break;
  }
  return coeff_text(*d->pullback_domain()->residue(), g.coeff) + "*t(" + level_text(G, g.level, false) + ")";
}

std::string print_node(const ExprPtr& e, const Domain& d, int min_prec) {
  switch (e->kind) {
    case Expr::Kind::Ring: return "D";
    case Expr::Kind::Maximal: return "M";
    case Expr::Kind::Overring: return "V";
    case Expr::Kind::Gens: {
      std::string out = "<";
      for (size_t i = 0; i < e->gens.size(); ++i) out += (i ? ", " : "") + print_gen(e->gens[i], d);
      return out + ">";
    }
    case Expr::Kind::Binary: {
      int p = precedence(e->op);
      std::string out =
          print_node(e->lhs, d, p) + " " + std::string(1, e->op) + " " + print_node(e->rhs, d, p + 1);
      return p < min_prec ? "(" + out + ")" : out;
    }
    case Expr::Kind::Func: {
      std::string head = e->func;
      if (e->func == "st")
        head = op_print(e->term);
      else if (e->term)
        head += "[" + op_print(e->term) + "]";
      return head + "(" + print_node(e->lhs, d, 0) + ")";
    }
  }
  return "?";
}

Op func_op(const Expr& e) {
  if (e.func == "v") return op_v();
  if (e.func == "t") return op_t();
  if (e.func == "w") return op_w();
  if (e.func == "ft") return op_ft(e.term);
  if (e.func == "bar") return op_stable(e.term);
  if (e.func == "tilde") return op_tilde(e.term);
  return e.term;
}

IdealHandle eval_gens(const Expr& e, const Domain& d) {
  if (d->family() == Family::SemigroupRing) {
    std::vector<long> raw;
    for (const auto& g : e.gens) raw.push_back(g.exponent);
    return IdealHandle(d, ideal_normalize(d->semigroup(), raw));
  }
  const auto& pb = d->pullback_domain();
  std::vector<Monomial> points;
  std::optional<IdealHandle> acc;
  auto join = [&](IdealHandle h) { acc = acc ? add(*acc, h) : h; };
  for (const auto& g : e.gens) {
    if (g.kind == Gen::Kind::Point)
      points.push_back({g.coeff, g.level});
    else
      join(IdealHandle(d, segment_module(pb, g.kind == Gen::Kind::Above ? Segment::open(pb->group(), g.level)
                                                                         : Segment::closed(pb->group(), g.level))));
  }
  if (!points.empty()) join(IdealHandle(d, module_from_generators(pb, points)));
  return *acc;
}

}  // namespace

ExprPtr parse_expr(const std::string& text, const Domain& d) { return ExprParser(text, d).parse(); }

std::string print_expr(const ExprPtr& e, const Domain& d) { return print_node(e, d, 0); }

IdealHandle eval(const ExprPtr& e, const Domain& d) {
  try {
    switch (e->kind) {
      case Expr::Kind::Ring: return ring_of(d);
      case Expr::Kind::Maximal: return maximal_of(d);
      case Expr::Kind::Overring:
        if (d->family() == Family::SemigroupRing) semantic("atom 'V' is not available in a semigroup ring");
        return overring_of(d);
      case Expr::Kind::Gens: return eval_gens(*e, d);
      case Expr::Kind::Binary: {
        auto a = eval(e->lhs, d);
        auto b = eval(e->rhs, d);
        switch (e->op) {
          case '+': return add(a, b);
          case '*': return mul(a, b);
          case '&': return meet(a, b);
          default: return colon(a, b);
        }
      }
      case Expr::Kind::Func: {
        auto a = eval(e->lhs, d);
        if (e->func == "inv") return inverse(a);
        return semistar::apply(func_op(*e), a);
      }
    }
  } catch (const CliError&) {
    throw;
  } catch (const ZeroModuleError& x) {
    throw CliError(ErrorKind::Zero, "in '" + print_expr(e, d) + "': " + x.what());
  } catch (const UnsupportedOperation& x) {
    throw CliError(ErrorKind::Unsupported, "in '" + print_expr(e, d) + "': " + x.what());
  } catch (const ConsistencyError& x) {
    throw CliError(ErrorKind::Internal, "in '" + print_expr(e, d) + "': " + x.what());
  } catch (const Error& x) {
    throw CliError(ErrorKind::Semantic, "in '" + print_expr(e, d) + "': " + x.what());
  }
  throw CliError(ErrorKind::Internal, "unknown expression node");
}

std::string eval_text(const std::string& domain_text, const std::string& expr) {
  auto d = parse_domain(domain_text);
  auto e = parse_expr(expr, d);
  return print_expr(e, d) + " = " + eval(e, d).format() + "\n";
}

std::string eval_json(const std::string& domain_text, const std::string& expr) {
  auto d = parse_domain(domain_text);
  auto e = parse_expr(expr, d);
  auto v = eval(e, d);
  nlohmann::ordered_json j;
  j["domain"] = d->describe();
  j["expr"] = print_expr(e, d);
  j["value"] = v.format();
  j["finitely_generated"] = v.finitely_generated();
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Scenarios

int Report::failed() const {
  return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const ReportLine& l) { return l.outcome != "PASS"; }));
}

namespace {

const char* kNumsgr345 = "family=numsgr generators=[3,4,5]";
const char* kPullbackQ = "family=pullback base_field=Q extension=a^2-2 group=Q";
const char* kPullbackZ = "family=pullback base_field=Q extension=a^2-2 group=Z";
const char* kValuationQ = "family=valuation base_field=Q group=Q";
const char* kValuationLex = "family=valuation base_field=Q group=ZxZ_lex";

enum class Want { Holds, Refuted, NotRefuted, Unknown };

class Scenario {
 public:
  Scenario(std::string name, const std::string& domain_text, const SampleSpec& spec, Report& r)
      : name_(std::move(name)), d_(parse_domain(domain_text)), spec_(spec), r_(r) {}

  const Domain& domain() const { return d_; }
  const SampleSpec& spec() const { return spec_; }
  void anchor(std::string a) { anchor_ = std::move(a); }

  void eq(const std::string& lhs, const std::string& rhs) { compare(lhs, rhs, "=", true); }
  void ne(const std::string& lhs, const std::string& rhs) { compare(lhs, rhs, "!=", false); }

  void proper_subset(const std::string& lhs, const std::string& rhs) {
    guarded(lhs + " < " + rhs, [&](ReportLine& l) {
      auto a = parse_expr(lhs, d_);
      auto b = parse_expr(rhs, d_);
      l.expr_or_predicate = print_expr(a, d_) + " < " + print_expr(b, d_);
      auto va = eval(a, d_);
      auto vb = eval(b, d_);
      l.expected = "proper subset of " + vb.format();
      l.actual = va.format();
      return subset(va, vb) && !(va == vb);
    });
  }

  void verdict(const std::string& label, const std::function<Verdict()>& f, Want want, const std::string& witness = {}) {
    guarded(label, [&](ReportLine& l) {
      switch (want) {
        case Want::Holds: l.expected = "Holds"; break;
        case Want::Refuted: l.expected = witness.empty() ? "Refuted" : "Refuted(" + witness + ")"; break;
        case Want::NotRefuted: l.expected = "not Refuted"; break;
        case Want::Unknown: l.expected = "Unknown"; break;
      }
      Verdict v = f();
      l.actual = v.summary();
      switch (want) {
        case Want::Holds: return v.is_holds();
        case Want::Refuted: return v.is_refuted() && (witness.empty() || v.witness_text() == witness);
        case Want::NotRefuted: return !v.is_refuted();
        case Want::Unknown: return v.is_unknown();
      }
      return false;
    });
  }

  void text(const std::string& label, const std::string& expected, const std::function<std::string()>& f) {
    guarded(label, [&](ReportLine& l) {
      l.expected = expected;
      l.actual = f();
      return l.actual == expected;
    });
  }

  std::string format(const std::string& expr) { return eval(parse_expr(expr, d_), d_).format(); }

 private:
  void compare(const std::string& lhs, const std::string& rhs, const std::string& rel, bool want_equal) {
    guarded(lhs + " " + rel + " " + rhs, [&](ReportLine& l) {
      auto a = parse_expr(lhs, d_);
      auto b = parse_expr(rhs, d_);
      l.expr_or_predicate = print_expr(a, d_) + " " + rel + " " + print_expr(b, d_);
      auto va = eval(a, d_);
      auto vb = eval(b, d_);
      l.expected = (want_equal ? "" : "not ") + vb.format();
      l.actual = va.format();
      return (va == vb) == want_equal;
    });
  }

  void guarded(const std::string& label, const std::function<bool(ReportLine&)>& body) {
    ReportLine l{name_, anchor_, label, "", "", "FAIL"};
    try {
      if (body(l)) l.outcome = "PASS";
    } catch (const std::exception& e) {
      l.actual = std::string("error: ") + e.what();
    }
    r_.lines.push_back(l);
  }

  std::string name_;
  Domain d_;
  SampleSpec spec_;
  Report& r_;
  std::string anchor_;
};

std::vector<IdealHandle> universe_of_size(const Domain& d, const SampleSpec& spec, int n) {
  auto named = named_ideals(d);
  return sample_universe(d, spec, 61, std::max(0, n - static_cast<int>(named.size())));
}

std::string primes_text(const QuasiMaximals& q) {
  std::string out = "{";
  for (size_t i = 0; i < q.primes.size(); ++i) out += (i ? ", " : "") + prime_name(q.primes[i]);
  return out + "}" + (q.empty_convention ? " (empty convention)" : "");
}

void numsgr_345(Scenario& s) {
  const auto& d = s.domain();
  const auto& spec = s.spec();
  auto v = op_v();
  s.anchor("(E n F)^v c E^v n F^v");
  s.eq("v(<x^3, x^4>)", "<x^3, x^4, x^5>");
  s.eq("v(<x^3, x^5>)", "<x^3, x^4, x^5>");
  s.eq("<x^3, x^4> & <x^3, x^5>", "<x^3>");
  s.eq("v(<x^3>)", "<x^3>");
  s.proper_subset("v(<x^3, x^4> & <x^3, x^5>)", "v(<x^3, x^4>) & v(<x^3, x^5>)");
  s.anchor("J c E n F, J^v = E^v n F^v");
  s.verdict("extracoherent(v)", [&] { return coherence_check(Coherence::Extracoherent, v, d, spec); }, Want::Refuted,
            "(<x^3, x^4>, <x^3, x^5>)");
  s.verdict("coherent(v)", [&] { return coherence_check(Coherence::Coherent, v, d, spec); }, Want::Holds);
  s.verdict("truly coherent(v)", [&] { return coherence_check(Coherence::TrulyCoherent, v, d, spec); }, Want::Holds);
  s.anchor("(D:M) = N, (D:N) = M");
  s.eq("D : M", "<x^0, x^1, x^2>");
  s.eq("D : (D : M)", "M");
  s.eq("v(M)", "M");
  s.anchor("(II^-1)^op = D^op for f.g. I");
  s.verdict("op-domain(v)", [&] { return is_star_domain(v, d, spec); }, Want::Refuted, s.format("M"));
  s.verdict("a.b.(d)", [&] { return is_ab(op_identity(), d, spec); }, Want::Refuted);
  s.verdict("e.a.b.(v)", [&] { return is_eab(v, d, spec); }, Want::Refuted);
  s.verdict("op-noetherian(v)", [&] { return is_star_noetherian(v, d); }, Want::Holds);
}

void coherent_318(Scenario& s) {
  const auto& d = s.domain();
  const auto& spec = s.spec();
  auto sv = op_star(Overring::ValuationHull);
  s.anchor("mD n mxD = mM");
  s.eq("<t(1)> & <a*t(1)>", "<t(>1)>");
  s.eq("st[V](<t(1)>) & st[V](<a*t(1)>)", "<t(>=1)>");
  s.eq("st[V](<t(1)> & <a*t(1)>)", "<t(>1)>");
  s.ne("st[V](<t(1)> & <a*t(1)>)", "<t(>=1)>");
  s.anchor("J^op = E^op n F^op");
  s.verdict("coherent(st[V]) on sampled pairs",
            [&] { return coherence_check(Coherence::Coherent, sv, d, spec, false); }, Want::NotRefuted);
  s.verdict("coherent(st[V])", [&] { return coherence_check(Coherence::Coherent, sv, d, spec); }, Want::Holds);
  s.anchor("J^op = (E n F)^op");
  s.verdict("truly coherent(st[V])", [&] { return coherence_check(Coherence::TrulyCoherent, sv, d, spec, false); },
            Want::Refuted, "(" + s.format("<t(1)>") + ", " + s.format("<a*t(1)>") + ")");
  s.verdict("op-finite(st[V], mM)", [&] { return is_star_finite(sv, eval(parse_expr("<t(>1)>", d), d)); },
            Want::Refuted);
  s.anchor("(II^-1)^op_f = D^op_f for f.g. I");
  s.verdict("P*MD(st[V])", [&] { return is_pstarmd(sv, d, spec); }, Want::Refuted);
}

void pvd_26(Scenario& s) {
  const auto& d = s.domain();
  const auto& spec = s.spec();
  auto sv = op_star(Overring::ValuationHull);
  s.anchor("(D:M) = (M:M) = V");
  s.eq("D : M", "V");
  s.eq("M : M", "V");
  s.eq("st[V](M * (D : M))", "M");
  s.eq("st[V](D)", "V");
  s.ne("st[V](M * (D : M))", "st[V](D)");
  s.text("M finitely generated", "witness " + s.format("M"), [&] {
    auto m = maximal_of(d);
    if (!m.finitely_generated() || !(m.from_witness() == m)) return std::string("no witness");
    return "witness " + m.from_witness().format();
  });
  s.anchor("M(op_f) = {M}");
  s.text("quasi-maximals(st[V])", "{M}", [&] { return primes_text(quasi_star_maximals(d, sv)); });
  s.anchor("(II^-1)^op = D^op for f.g. I");
  s.verdict("op-domain(st[V])", [&] { return is_star_domain(sv, d, spec); }, Want::Refuted, s.format("M"));
  s.verdict("P*MD(st[V])", [&] { return is_pstarmd(sv, d, spec); }, Want::Refuted, s.format("M"));
  s.verdict("a.b.(st[V])", [&] { return is_ab(sv, d, spec); }, Want::Holds);
}

void flatness_214(Scenario& s) {
  const auto& d = s.domain();
  const auto& spec = s.spec();
  auto desc = op_descent(op_identity());
  s.anchor("(MM^-1)^op = MV = M != D");
  s.eq("inv(M)", "V");
  s.eq("apply[desc(d)](M * inv(M))", "M");
  s.ne("apply[desc(d)](M * inv(M))", "D");
  s.eq("apply[desc(d)](D)", "V");
  s.verdict("op-domain(desc(d))", [&] { return is_star_domain(desc, d, spec); }, Want::Refuted, s.format("M"));
  s.anchor("T d_T-domain, T flat => D (d_T)^i-domain");
  s.text("V flat over D", "no", [&] { return d->caps().valuation ? std::string("yes") : std::string("no"); });
  s.text("descent line of the implication suite", "vacuous", [&] {
    auto rep = theorem_suite(d, desc, spec);
    for (const auto& l : rep.lines)
      if (l.check == "descent") return l.outcome;
    return std::string("missing");
  });
}

void valuation_h_44(Scenario& s) {
  const auto& d = s.domain();
  const auto& spec = s.spec();
  auto v = op_v();
  std::string m = s.format("M");
  s.anchor("M c M^v = V");
  s.eq("v(M)", "V");
  s.eq("t(M)", "M");
  s.ne("M", "V");
  s.anchor("w = t = d");
  auto U = universe_of_size(d, spec, 50);
  s.text("universe size", "50", [&] { return std::to_string(U.size()); });
  s.verdict("w = d", [&] { return ops_equal_on(op_w(), op_identity(), d, U); }, Want::NotRefuted);
  s.verdict("t = d", [&] { return ops_equal_on(op_t(), op_identity(), d, U); }, Want::NotRefuted);
  s.verdict("bar(v) = v", [&] { return ops_equal_on(op_stable(v), v, d, U); }, Want::Holds);
  s.anchor("F^op = F^op_f");
  auto clauses = h_clauses(v, d, spec);
  for (const auto& c : clauses)
    if (c.name == "(i)" || c.name == "(vii)" || c.name == "(ix)")
      s.verdict("H(v) clause " + c.name, [&] { return c.verdict; }, Want::Refuted, m);
  s.verdict("H(v)", [&] { return is_H_domain(v, d, spec); }, Want::Refuted, m);
  s.anchor("(II^-1)^op_f = D^op_f for f.g. I");
  s.verdict("P*MD(v)", [&] { return is_pstarmd(v, d, spec); }, Want::Holds);
  s.anchor("Inv(op) n f(D) = Inv(op_f) n f(D)");
  s.verdict("I(v)", [&] { return is_I_domain(v, d, spec); }, Want::Holds);
  s.anchor("ACC on quasi-op-ideals");
  s.verdict("op-noetherian(v)", [&] { return is_star_noetherian(v, d); }, Want::Refuted);
}

void spectral_lex(Scenario& s) {
  const auto& d = s.domain();
  const auto& spec = s.spec();
  auto sp = op_spectral({PrimeTag::Height1});
  s.anchor("E^op = E V_P1");
  s.eq("apply[spec{P1}](D)", "<t(>=(0,-inf))>");
  s.eq("apply[spec{P1}](M)", "<t(>=(0,-inf))>");
  s.eq("apply[spec{P1}](<t(>=(1,-inf))>)", "<t(>=(1,-inf))>");
  s.eq("v(<t(>=(1,-inf))>)", "<t(>=(1,-inf))>");
  s.anchor("M(op_f) = {P1}");
  s.text("quasi-maximals(spec{P1})", "{P1}", [&] { return primes_text(quasi_star_maximals(d, sp)); });
  s.anchor("(II^-1)^op = D^op for f.g. I");
  s.verdict("op-domain(spec{P1})", [&] { return is_star_domain(sp, d, spec); }, Want::Holds);
  s.verdict("a.b.(spec{P1})", [&] { return is_ab(sp, d, spec); }, Want::Holds);
  s.verdict("P*MD(spec{P1})", [&] { return is_pstarmd(sp, d, spec); }, Want::Holds);
  s.anchor("ACC on quasi-op-ideals");
  s.verdict("op-noetherian(spec{P1})", [&] { return is_star_noetherian(sp, d); }, Want::Unknown);
  s.verdict("op-noetherian(d)", [&] { return is_star_noetherian(op_identity(), d); }, Want::Refuted);
}

struct Entry {
  const char* name;
  const char* domain;
  void (*run)(Scenario&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"coherent-3.18", kPullbackQ, coherent_318},   {"flatness-2.14", kPullbackZ, flatness_214},
      {"numsgr-345", kNumsgr345, numsgr_345},        {"pvd-2.6", kPullbackZ, pvd_26},
      {"spectral-lex", kValuationLex, spectral_lex}, {"valuation-H-4.4", kValuationQ, valuation_h_44},
  };
  return e;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

Report run_scenarios(const std::vector<std::string>& names, const SampleSpec& spec) {
  std::vector<std::string> wanted;
  for (const auto& n : names) {
    if (n == "all") {
      wanted = scenario_names();
      break;
    }
    bool found = false;
    for (const auto& e : entries()) found = found || n == e.name;
    if (!found) semantic("unknown scenario '" + n + "'");
    if (std::find(wanted.begin(), wanted.end(), n) == wanted.end()) wanted.push_back(n);
  }
  Report r;
  for (const auto& e : entries()) {
    if (std::find(wanted.begin(), wanted.end(), e.name) == wanted.end()) continue;
    Scenario s(e.name, e.domain, spec, r);
    e.run(s);
  }
  std::stable_sort(r.lines.begin(), r.lines.end(), [](const ReportLine& a, const ReportLine& b) {
    return std::tie(a.scenario, a.anchor) < std::tie(b.scenario, b.anchor);
  });
  return r;
}

std::string report_text(const Report& r) {
  std::string out;
  for (const auto& l : r.lines)
    out += l.outcome + "  " + l.scenario + "  [" + l.anchor + "]  " + l.expr_or_predicate + "\n      expected: " +
           l.expected + "\n      actual:   " + l.actual + "\n";
  int failed = r.failed();
  out += std::to_string(r.lines.size() - failed) + " passed, " + std::to_string(failed) + " failed\n";
  return out;
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json lines = nlohmann::ordered_json::array();
  for (const auto& l : r.lines) {
    nlohmann::ordered_json j;
    j["scenario"] = l.scenario;
    j["anchor"] = l.anchor;
    j["expr_or_predicate"] = l.expr_or_predicate;
    j["expected"] = l.expected;
    j["actual"] = l.actual;
    j["outcome"] = l.outcome;
    lines.push_back(j);
  }
  nlohmann::ordered_json out;
  out["lines"] = lines;
  out["passed"] = static_cast<int>(r.lines.size()) - r.failed();
  out["failed"] = r.failed();
  return out.dump(2) + "\n";
}

}  // namespace semistar::cli
