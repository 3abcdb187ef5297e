#include "supercong/hyperterm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "supercong/pochhammer.hpp"

namespace supercong {

namespace {

long mod2(long x) { return ((x % 2) + 2) % 2; }

bool is_positive_integer(const Rational& a) { return a.get_den() == 1 && a > 0; }

std::string rational_text(const Rational& q) { return supercong::to_string(q); }

}  // namespace

std::string LinearForm::to_string() const {
  std::string out;
  auto term = [&out](long c, const char* var) {
    if (c == 0) return;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + "*";
    out += var;
  };
  term(coef_n, "n");
  term(coef_k, "k");
  if (constant != 0 || out.empty()) {
    if (constant < 0) {
      out += std::to_string(constant);
    } else {
      if (!out.empty()) out += '+';
      out += std::to_string(constant);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// HyperTerm

void HyperTerm::normalize() {
  if (poly_prefactor.is_zero() || scalar == 0) {
    throw DomainError("hypergeometric term is identically zero");
  }
  scalar *= poly_prefactor.content();
  poly_prefactor = poly_prefactor.primitive_part();
  // A constant sign moves into the scalar so equal terms compare equal.
  if (mod2(sign_exponent.constant) == 1) scalar = -scalar;
  sign_exponent = {mod2(sign_exponent.coef_n), mod2(sign_exponent.coef_k), 0};

  std::sort(factors.begin(), factors.end(), [](const PochFactor& a, const PochFactor& b) {
    if (a.param != b.param) return a.param < b.param;
    return a.arg < b.arg;
  });
  std::vector<PochFactor> merged;
  for (const auto& f : factors) {
    if (!merged.empty() && merged.back().param == f.param && merged.back().arg == f.arg) {
      merged.back().exponent += f.exponent;
    } else {
      merged.push_back(f);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const PochFactor& f) { return f.exponent == 0; }),
               merged.end());
  factors = std::move(merged);
}

bool HyperTerm::is_polynomial() const {
  return factors.empty() && mod2(sign_exponent.coef_n) == 0 && mod2(sign_exponent.coef_k) == 0;
}

bool HyperTerm::operator==(const HyperTerm& other) const {
  return sign_exponent == other.sign_exponent && poly_prefactor == other.poly_prefactor &&
         scalar == other.scalar && factors == other.factors;
}

std::string HyperTerm::to_string() const {
  std::vector<std::string> num;
  std::vector<std::string> den;
  for (const auto& f : factors) {
    std::string s = "poch(" + rational_text(f.param) + "," + f.arg.to_string() + ")";
    const long e = f.exponent < 0 ? -f.exponent : f.exponent;
    if (e != 1) s += "^" + std::to_string(e);
    (f.exponent > 0 ? num : den).push_back(s);
  }
  if (!(poly_prefactor == BiPoly(1))) {
    num.insert(num.begin(), "(" + poly_prefactor.to_string() + ")");
  }
  const LinearForm& s = sign_exponent;
  if (s.coef_n != 0 || s.coef_k != 0) {
    const std::string lin = s.to_string();
    const bool bare = s.constant == 0 && s.coef_n + s.coef_k == 1;
    num.insert(num.begin(), "(-1)^" + (bare ? lin : "(" + lin + ")"));
  }
  if (scalar != 1 || num.empty()) {
    num.insert(num.begin(), rational_text(scalar));
  }

  std::string out;
  for (std::size_t i = 0; i < num.size(); ++i) out += (i ? " * " : "") + num[i];
  if (!den.empty()) {
    out += " / (";
    for (std::size_t i = 0; i < den.size(); ++i) out += (i ? " * " : "") + den[i];
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    const int start = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, text.substr(i, j - i), line, start});
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, text.substr(i, j - i), line, start});
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, start);
    }
    out.push_back({kind, std::string(1, c), line, start});
    ++column;
    ++i;
  }
  // End of input is reported just after the last token.
  int end_line = 1;
  int end_column = 1;
  if (!out.empty()) {
    end_line = out.back().line;
    end_column = out.back().column + static_cast<int>(out.back().text.size());
  }
  out.push_back({Tok::End, "", end_line, end_column});
  return out;
}

HyperTerm constant_term(const BiPoly& p) {
  HyperTerm t;
  t.poly_prefactor = p;
  return t;
}

// Value of a polynomial-only term, scalar and sign folded in.
BiPoly as_poly(const HyperTerm& t) {
  const Rational sign = mod2(t.sign_exponent.constant) == 0 ? 1 : -1;
  return t.poly_prefactor * BiPoly(t.scalar * sign);
}

HyperTerm multiply(HyperTerm a, const HyperTerm& b) {
  a.sign_exponent = {a.sign_exponent.coef_n + b.sign_exponent.coef_n,
                     a.sign_exponent.coef_k + b.sign_exponent.coef_k,
                     a.sign_exponent.constant + b.sign_exponent.constant};
  a.poly_prefactor *= b.poly_prefactor;
  a.scalar *= b.scalar;
  a.factors.insert(a.factors.end(), b.factors.begin(), b.factors.end());
  return a;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  HyperTerm parse_all() {
    const Token& first = peek();
    HyperTerm t = expression();
    expect(Tok::End, "end of input");
    if (t.poly_prefactor.is_zero() || t.scalar == 0) {
      throw ParseError("term is identically zero", first.line, first.column);
    }
    t.normalize();
    return t;
  }

  BiPoly parse_polynomial_all() {
    const Token& first = peek();
    HyperTerm t = expression();
    expect(Tok::End, "end of input");
    if (!t.is_polynomial()) {
      throw ParseError("expected a polynomial in n and k", first.line, first.column);
    }
    return as_poly(t);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      const Token& t = peek();
      const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
      throw ParseError(std::string("expected ") + what + ", found " + found, t.line, t.column);
    }
    return next();
  }
  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    throw ParseError(message, at.line, at.column);
  }

  // expression := product (('+' | '-') product)*
  HyperTerm expression() {
    const Token& start = peek();
    HyperTerm acc = product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      HyperTerm rhs = product();
      if (!acc.is_polynomial()) fail(start, "only polynomials can be added or subtracted");
      if (!rhs.is_polynomial()) fail(op, "only polynomials can be added or subtracted");
      acc = constant_term(op.kind == Tok::Plus ? as_poly(acc) + as_poly(rhs)
                                               : as_poly(acc) - as_poly(rhs));
    }
    return acc;
  }

  // product := unary (('*' | '/') unary)*
  HyperTerm product() {
    HyperTerm acc = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      const HyperTerm rhs = unary();
      acc = op.kind == Tok::Star ? multiply(acc, rhs) : multiply(acc, reciprocal(rhs, op));
    }
    return acc;
  }

  // unary := '-' unary | power
  HyperTerm unary() {
    if (accept(Tok::Minus)) {
      HyperTerm t = unary();
      t.scalar = -t.scalar;
      return t;
    }
    return power();
  }

  // power := atom ('^' exponent)?
  HyperTerm power() {
    const Token& start = peek();
    HyperTerm base = atom();
    if (!accept(Tok::Caret)) return base;
    const Token& at = peek();
    const BiPoly e = exponent();
    // (-1)^lin
    if (base.is_polynomial() && as_poly(base) == BiPoly(-1)) {
      HyperTerm t;
      t.sign_exponent = to_linear(e, at, "the exponent of -1");
      return t;
    }
    if (!e.is_constant() || e.coefficient(0, 0).get_den() != 1) {
      fail(at, "exponent must be an integer");
    }
    const long m = e.coefficient(0, 0).get_num().get_si();
    if (m == 0 && !base.factors.empty()) fail(at, "zero exponent");
    return raise(base, m, start);
  }

  // exponent := '-'? (number | identifier | '(' expression ')')
  BiPoly exponent() {
    const bool negative = accept(Tok::Minus);
    const Token& t = peek();
    BiPoly value;
    if (t.kind == Tok::Number) {
      next();
      value = BiPoly(Rational(BigInt(t.text)));
    } else if (t.kind == Tok::Ident && (t.text == "n" || t.text == "k")) {
      next();
      value = t.text == "n" ? BiPoly::n() : BiPoly::k();
    } else if (accept(Tok::LParen)) {
      const HyperTerm inner = expression();
      expect(Tok::RParen, "')'");
      if (!inner.is_polynomial()) fail(t, "exponent must be polynomial");
      value = as_poly(inner);
    } else {
      fail(t, "expected an exponent");
    }
    return negative ? -value : value;
  }

  // atom := number | 'n' | 'k' | poch '(' expression ',' expression ')' | '(' expression ')'
  HyperTerm atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return constant_term(BiPoly(Rational(BigInt(t.text))));
      case Tok::Ident:
        next();
        if (t.text == "n") return constant_term(BiPoly::n());
        if (t.text == "k") return constant_term(BiPoly::k());
        if (t.text == "poch") return pochhammer();
        fail(t, "unknown identifier '" + t.text + "'");
      case Tok::LParen: {
        next();
        HyperTerm inner = expression();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail(t, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  HyperTerm pochhammer() {
    expect(Tok::LParen, "'(' after poch");
    const Token& param_at = peek();
    const HyperTerm param = expression();
    if (!param.is_polynomial() || !as_poly(param).is_constant()) {
      fail(param_at, "Pochhammer parameter must be a rational number");
    }
    expect(Tok::Comma, "','");
    const Token& arg_at = peek();
    const HyperTerm arg = expression();
    expect(Tok::RParen, "')'");
    if (!arg.is_polynomial()) fail(arg_at, "Pochhammer length must be linear in n and k");
    HyperTerm out;
    out.factors.push_back(
        {as_poly(param).coefficient(0, 0), to_linear(as_poly(arg), arg_at, "a Pochhammer length"),
         1});
    return out;
  }

  static LinearForm to_linear(const BiPoly& p, const Token& at, const char* what) {
    if (p.total_degree() > 1) fail(at, std::string(what) + " must be linear in n and k");
    LinearForm out;
    const Rational cn = p.coefficient(1, 0);
    const Rational ck = p.coefficient(0, 1);
    const Rational c0 = p.coefficient(0, 0);
    if (cn.get_den() != 1 || ck.get_den() != 1 || c0.get_den() != 1 ||
        !mpz_fits_slong_p(cn.get_num_mpz_t()) || !mpz_fits_slong_p(ck.get_num_mpz_t()) ||
        !mpz_fits_slong_p(c0.get_num_mpz_t())) {
      fail(at, std::string(what) + " must have integer coefficients");
    }
    out.coef_n = cn.get_num().get_si();
    out.coef_k = ck.get_num().get_si();
    out.constant = c0.get_num().get_si();
    return out;
  }

  static HyperTerm reciprocal(const HyperTerm& t, const Token& at) {
    if (!t.poly_prefactor.is_constant()) {
      fail(at, "cannot divide by a non-constant polynomial");
    }
    if (t.poly_prefactor.is_zero() || t.scalar == 0) fail(at, "division by zero");
    return raise(t, -1, at);
  }

  static HyperTerm raise(const HyperTerm& t, long e, const Token& at) {
    HyperTerm out = t;
    out.sign_exponent = {t.sign_exponent.coef_n * e, t.sign_exponent.coef_k * e,
                         t.sign_exponent.constant * e};
    for (auto& f : out.factors) f.exponent *= e;
    if (e >= 0) {
      out.poly_prefactor = t.poly_prefactor.pow(static_cast<unsigned>(e));
      mpq_class s;
      mpz_pow_ui(s.get_num_mpz_t(), t.scalar.get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(s.get_den_mpz_t(), t.scalar.get_den_mpz_t(), static_cast<unsigned long>(e));
      out.scalar = s;
      return out;
    }
    if (!t.poly_prefactor.is_constant()) fail(at, "negative power of a non-constant polynomial");
    const Rational c = t.scalar * t.poly_prefactor.coefficient(0, 0);
    if (c == 0) fail(at, "division by zero");
    Rational s = 1;
    for (long i = 0; i < -e; ++i) s /= c;
    out.poly_prefactor = BiPoly(1);
    out.scalar = s;
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

HyperTerm parse_term(const std::string& text) { return Parser(text).parse_all(); }

BiPoly parse_polynomial(const std::string& text) { return Parser(text).parse_polynomial_all(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// (a)_L for any integer L; empty when the extension has a pole.
std::optional<Rational> poch_value(const Rational& a, long L) {
  if (L >= 0) return rising_exact(a, static_cast<std::uint64_t>(L));
  if (is_positive_integer(a) && a + L <= 0) return std::nullopt;
  Rational den = 1;
  for (long j = 1; j <= -L; ++j) den *= a - j;
  return 1 / den;
}

Rational power(const Rational& x, long e) {
  Rational out = 1;
  const Rational base = e < 0 ? 1 / x : x;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

std::string describe(const PochFactor& f) {
  return "(" + rational_text(f.param) + ")_{" + f.arg.to_string() + "}";
}

}  // namespace

Rational eval(const HyperTerm& t, long n, long k) {
  bool vanishes = false;
  Rational product = 1;
  for (const auto& f : t.factors) {
    const long L = f.arg.eval(n, k);
    const auto value = poch_value(f.param, L);
    if (!value) {
      if (f.exponent > 0) {
        throw DomainError(describe(f) + " has a pole at n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
      }
      vanishes = true;
      continue;
    }
    if (*value == 0 && f.exponent < 0) {
      throw DomainError("reciprocal of " + describe(f) + " = 0 at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k));
    }
    product *= power(*value, f.exponent);
  }
  if (vanishes) return 0;
  const long s = t.sign_exponent.eval(n, k);
  return (mod2(s) == 0 ? 1 : -1) * t.scalar * t.poly_prefactor.eval(n, k) * product;
}

long term_valuation(const HyperTerm& t, long n, long k, std::uint64_t p) {
  long total = 0;
  bool zero = false;
  for (const auto& f : t.factors) {
    const long L = f.arg.eval(n, k);
    if (L < 0 && is_positive_integer(f.param) && f.param + L <= 0) {
      if (f.exponent > 0) throw DomainError(describe(f) + " has a pole");
      zero = true;
      continue;
    }
    const long v = poch_valuation(f.param, L, p);
    if (v == kInfinite) {
      if (f.exponent < 0) throw DomainError("reciprocal of " + describe(f) + " = 0");
      zero = true;
      continue;
    }
    total += f.exponent * v;
  }
  const Rational prefactor = t.poly_prefactor.eval(n, k);
  if (zero || prefactor == 0) return kInfinite;
  return total + valuation(t.scalar, p) + valuation(prefactor, p);
}

// ---------------------------------------------------------------------------
// Ratios

RationalFunction cross_ratio(const HyperTerm& a, const HyperTerm& b, long dn, long dk) {
  const LinearForm sa = a.sign_exponent.shifted(dn, dk);
  const LinearForm& sb = b.sign_exponent;
  if (mod2(sa.coef_n - sb.coef_n) != 0 || mod2(sa.coef_k - sb.coef_k) != 0) {
    throw NonSimilar("sign exponents differ: (-1)^(" + sa.to_string() + ") vs (-1)^(" +
                     sb.to_string() + ")");
  }
  const Rational sign = mod2(sa.constant - sb.constant) == 0 ? 1 : -1;

  BiPoly num = a.poly_prefactor.shifted(dn, dk) * BiPoly(sign * a.scalar);
  BiPoly den = b.poly_prefactor * BiPoly(b.scalar);

  // Factors sharing a parameter and slope differ only in the constant of
  // their length; each is rewritten against the shortest one.
  using Key = std::tuple<Rational, long, long>;
  std::map<Key, std::vector<std::pair<long, long>>> groups;
  for (const auto& f : a.factors) {
    const LinearForm L = f.arg.shifted(dn, dk);
    groups[{f.param, L.coef_n, L.coef_k}].push_back({L.constant, f.exponent});
  }
  for (const auto& f : b.factors) {
    groups[{f.param, f.arg.coef_n, f.arg.coef_k}].push_back({f.arg.constant, -f.exponent});
  }
  for (const auto& [key, members] : groups) {
    const auto& [param, cn, ck] = key;
    long balance = 0;
    long base = members.front().first;
    for (const auto& [c, e] : members) {
      balance += e;
      base = std::min(base, c);
    }
    if (balance != 0) {
      throw NonSimilar("Pochhammer factors with parameter " + rational_text(param) +
                       " do not cancel");
    }
    for (const auto& [c, e] : members) {
      // (a)_{L+c} = (a)_{L+base} * prod_{j=base}^{c-1} (a + L + j)
      BiPoly extra(1);
      for (long j = base; j < c; ++j) extra *= BiPoly::linear(cn, ck, param + j);
      const BiPoly raised = extra.pow(static_cast<unsigned>(e < 0 ? -e : e));
      (e > 0 ? num : den) *= raised;
    }
  }
  return RationalFunction(num, den);
}

RationalFunction shift_ratio(const HyperTerm& t, long dn, long dk) {
  return cross_ratio(t, t, dn, dk);
}

}  // namespace supercong
