#include "supercong/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace supercong {

namespace {

// Univariate polynomials in k, index = degree.
using UPoly = std::vector<Rational>;

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  utrim(out);
  return out;
}

UPoly uneg(UPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

UPoly usub(const UPoly& a, const UPoly& b) { return uadd(a, uneg(b)); }

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  utrim(out);
  return out;
}

UPoly uscale(UPoly a, const Rational& c) {
  for (auto& x : a) x *= c;
  utrim(a);
  return a;
}

// Quotient and remainder over Q.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  UPoly q;
  while (!a.empty() && udeg(a) >= udeg(b)) {
    const int shift = udeg(a) - udeg(b);
    const Rational c = a.back() / b.back();
    if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    utrim(a);
  }
  utrim(q);
  return {q, a};
}

UPoly umonic(UPoly a) {
  if (a.empty()) return a;
  const Rational lead = a.back();
  return uscale(std::move(a), 1 / lead);
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

UPoly udiv_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = udivmod(a, b);
  if (!r.empty()) throw DomainError("polynomial division is not exact");
  return q;
}

// A bivariate polynomial viewed in Q[k][n]: element i is the coefficient of n^i.
using NPoly = std::vector<UPoly>;

void ntrim(NPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

int ndeg(const NPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly ncontent(const NPoly& a) {
  UPoly g;
  for (const auto& c : a) g = ugcd(g, c);
  return g;
}

NPoly ndiv_scalar(const NPoly& a, const UPoly& c) {
  NPoly out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(udiv_exact(x, c));
  return out;
}

NPoly nprimitive(const NPoly& a) {
  if (a.empty()) return a;
  return ndiv_scalar(a, ncontent(a));
}

// lc(b)^e * a = q * b + r with deg r < deg b; returns r.
NPoly npseudo_remainder(NPoly a, const NPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && ndeg(a) >= ndeg(b)) {
    const int shift = ndeg(a) - ndeg(b);
    const UPoly la = a.back();
    for (auto& c : a) c = umul(c, lb);
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = usub(a[i + shift], umul(la, b[i]));
    }
    ntrim(a);
  }
  return a;
}

NPoly to_npoly(const BiPoly& p) {
  NPoly out;
  for (const auto& row : p.rows()) out.push_back(row);
  return out;
}

}  // namespace

BiPoly from_rows(std::vector<std::vector<Rational>> rows) {
  BiPoly out;
  out.rows_ = std::move(rows);
  out.trim();
  return out;
}

BiPoly::BiPoly(const Rational& constant) {
  if (constant != 0) rows_ = {{constant}};
}

BiPoly BiPoly::n() { return from_rows({{}, {Rational(1)}}); }

BiPoly BiPoly::k() { return from_rows({{Rational(0), Rational(1)}}); }

BiPoly BiPoly::linear(const Rational& cn, const Rational& ck, const Rational& c0) {
  return from_rows({{c0, ck}, {cn}});
}

void BiPoly::trim() {
  for (auto& row : rows_) utrim(row);
  ntrim(rows_);
}

bool BiPoly::is_constant() const { return rows_.size() <= 1 && degree_k() <= 0; }

int BiPoly::degree_k() const {
  int d = -1;
  for (const auto& row : rows_) d = std::max(d, udeg(row));
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].empty()) d = std::max(d, static_cast<int>(i) + udeg(rows_[i]));
  }
  return d;
}

Rational BiPoly::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(rows_.size())) return 0;
  const auto& row = rows_[i];
  return j < static_cast<int>(row.size()) ? row[j] : Rational(0);
}

void BiPoly::set_coefficient(int i, int j, const Rational& value) {
  if (i < 0 || j < 0) throw DomainError("negative exponent in polynomial");
  if (static_cast<int>(rows_.size()) <= i) rows_.resize(i + 1);
  auto& row = rows_[i];
  if (static_cast<int>(row.size()) <= j) row.resize(j + 1);
  row[j] = value;
  trim();
}

Rational BiPoly::leading_coefficient() const {
  return rows_.empty() ? Rational(0) : rows_.back().back();
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& row : out.rows_) row = uneg(row);
  return out;
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
  NPoly out(std::max(rows_.size(), rhs.rows_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const UPoly empty;
    out[i] = uadd(i < rows_.size() ? rows_[i] : empty, i < rhs.rows_.size() ? rhs.rows_[i] : empty);
  }
  return from_rows(std::move(out));
}

BiPoly BiPoly::operator-(const BiPoly& rhs) const { return *this + (-rhs); }

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  NPoly out(rows_.size() + rhs.rows_.size() - 1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.rows_.size(); ++j) {
      out[i + j] = uadd(out[i + j], umul(rows_[i], rhs.rows_[j]));
    }
  }
  return from_rows(std::move(out));
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly out(1);
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

BiPoly BiPoly::shifted(const Rational& dn, const Rational& dk) const {
  const BiPoly n_sub = linear(1, 0, dn);
  const BiPoly k_sub = linear(0, 1, dk);
  // Horner in n with each row evaluated by Horner in k.
  BiPoly out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    BiPoly row;
    for (auto c = it->rbegin(); c != it->rend(); ++c) row = row * k_sub + BiPoly(*c);
    out = out * n_sub + row;
  }
  return out;
}

Rational BiPoly::eval(const Rational& n, const Rational& k) const {
  Rational out = 0;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Rational row = 0;
    for (auto c = it->rbegin(); c != it->rend(); ++c) row = row * k + *c;
    out = out * n + row;
  }
  return out;
}

BiPoly BiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * BiPoly(1 / leading_coefficient());
}

Rational BiPoly::content() const {
  if (is_zero()) return 0;
  BigInt num = 0;
  BigInt den = 1;
  for (const auto& row : rows_) {
    for (const auto& c : row) {
      if (c == 0) continue;
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  Rational out = make_rational(num, den);
  return leading_coefficient() < 0 ? -out : out;
}

BiPoly BiPoly::primitive_part() const {
  if (is_zero()) return *this;
  return *this * BiPoly(1 / content());
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest degrees first.
  for (int i = degree_n(); i >= 0; --i) {
    const auto& row = rows_[i];
    for (int j = udeg(row); j >= 0; --j) {
      Rational c = row[j];
      if (c == 0) continue;
      const bool negative = c < 0;
      if (negative) c = -c;
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? '-' : '+');
      }
      first = false;
      std::string mono;
      auto append = [&mono](const char* var, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += '*';
        mono += var;
        if (e > 1) mono += '^' + std::to_string(e);
      };
      append("n", i);
      append("k", j);
      if (mono.empty()) {
        out << supercong::to_string(c);
      } else if (c == 1) {
        out << mono;
      } else {
        out << supercong::to_string(c) << '*' << mono;
      }
    }
  }
  return out.str();
}

BiPoly divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  NPoly r = to_npoly(a);
  const NPoly d = to_npoly(b);
  NPoly q;
  while (!r.empty() && ndeg(r) >= ndeg(d)) {
    const int shift = ndeg(r) - ndeg(d);
    const UPoly c = udiv_exact(r.back(), d.back());
    if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1);
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[i + shift] = usub(r[i + shift], umul(c, d[i]));
    ntrim(r);
  }
  if (!r.empty()) throw DomainError("polynomial division is not exact");
  return from_rows(std::move(q));
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  NPoly x = to_npoly(a);
  NPoly y = to_npoly(b);
  const UPoly c = ugcd(ncontent(x), ncontent(y));
  x = nprimitive(x);
  y = nprimitive(y);
  if (ndeg(x) < ndeg(y)) std::swap(x, y);
  while (!y.empty()) {
    NPoly r = npseudo_remainder(x, y);
    x = std::move(y);
    y = nprimitive(r);
  }
  for (auto& row : x) row = umul(row, c);
  return from_rows(std::move(x)).monic();
}

RationalFunction::RationalFunction(const BiPoly& num) : num_(num), den_(1) { normalize(); }

RationalFunction::RationalFunction(const BiPoly& num, const BiPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = BiPoly(1);
    return;
  }
  const BiPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  const BiPoly scale(1 / den_.content());
  num_ *= scale;
  den_ *= scale;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return {num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  return *this + (-rhs);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return {num_ * rhs.num_, den_ * rhs.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  if (rhs.is_zero()) throw DomainError("division by the zero rational function");
  return {num_ * rhs.den_, den_ * rhs.num_};
}

RationalFunction RationalFunction::pow(long e) const {
  const unsigned m = static_cast<unsigned>(e < 0 ? -e : e);
  RationalFunction base = e < 0 ? RationalFunction(1) / *this : *this;
  return {base.num_.pow(m), base.den_.pow(m)};
}

std::optional<Rational> RationalFunction::eval(const Rational& n, const Rational& k) const {
  const Rational d = den_.eval(n, k);
  if (d == 0) return std::nullopt;
  return num_.eval(n, k) / d;
}

std::string RationalFunction::to_string() const {
  if (den_ == BiPoly(1)) return "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace supercong
