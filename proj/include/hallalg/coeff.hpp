#pragma once

// Exact scalars: rationals, Q(v) with v^2 = q, and rational functions in L.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hallalg/errors.hpp"

namespace hallalg {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  static Rational parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpz_class(s));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) throw std::domain_error("Rational: zero denominator");
      return Rational(mpq_class(mpz_class(s.substr(0, slash)), den));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "a/b", or "a" when the denominator is 1.
  std::string to_string() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class v_{0};
};

inline Rational qpow(long e, long q) {
  mpz_class base(q), r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  Rational out(r);
  return e < 0 ? out.inverse() : out;
}

// a + b*v with v^2 = q. A zero q marks a constant not yet bound to an algebra.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, long q) : a_(std::move(a)), b_(std::move(b)), q_(q) {
    if (!b_.is_zero() && q_ == 0) throw std::invalid_argument("QuadExt: v-part without q");
  }

  // v^e in Q(v).
  static QuadExt v_pow(long e, long q) {
    long half = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    Rational c = qpow(half, q);
    if (e - 2 * half == 0) return QuadExt(c, 0, q);
    return QuadExt(0, c, q);
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long q() const { return q_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt& operator+=(const QuadExt& o) {
    q_ = join(q_, o.q_);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    q_ = join(q_, o.q_);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  QuadExt operator-() const { return QuadExt(-a_, -b_, q_); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    long q = join(x.q_, y.q_);
    QuadExt r;
    r.q_ = q;
    r.a_ = x.a_ * y.a_ + Rational(q) * x.b_ * y.b_;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    return r;
  }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  QuadExt inverse() const {
    if (is_zero()) throw std::domain_error("QuadExt: inverse of zero");
    Rational norm = a_ * a_ - Rational(q_) * b_ * b_;
    if (norm.is_zero()) throw std::domain_error("QuadExt: zero norm (q is a square?)");
    QuadExt r;
    r.q_ = q_;
    r.a_ = a_ / norm;
    r.b_ = -b_ / norm;
    return r;
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const {
    std::string bs = b_.to_string();
    if (b_.sign() < 0) return a_.to_string() + bs + "*v";
    return a_.to_string() + "+" + bs + "*v";
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

  static QuadExt parse(std::string_view text, long q) {
    std::string s(text);
    if (s.size() < 2 || s.substr(s.size() - 2) != "*v") return QuadExt(Rational::parse(s));
    s.resize(s.size() - 2);
    // split at the last sign that is not the leading one
    std::size_t cut = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if (s[i] == '+' || s[i] == '-') {
        cut = i;
        break;
      }
    }
    if (cut == std::string::npos) return QuadExt(0, Rational::parse(s), q);
    Rational a = Rational::parse(s.substr(0, cut));
    Rational b = Rational::parse(s[cut] == '+' ? s.substr(cut + 1) : s.substr(cut));
    return QuadExt(a, b, q);
  }

 private:
  static long join(long p, long q) {
    if (p == 0) return q;
    if (q == 0 || p == q) return p;
    throw std::invalid_argument("QuadExt: mixing different q contexts");
  }

  Rational a_{0};
  Rational b_{0};
  long q_ = 0;
};

// Polynomial in L with rational coefficients; coefficient i multiplies L^i.
class PolyL {
 public:
  PolyL() = default;
  PolyL(Rational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  PolyL(long c) : PolyL(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit PolyL(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static PolyL L() { return PolyL(std::vector<Rational>{0, 1}); }
  static PolyL monomial(int degree, Rational c = 1) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = std::move(c);
    return PolyL(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend PolyL operator+(const PolyL& a, const PolyL& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return PolyL(std::move(v));
  }
  PolyL operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return PolyL(std::move(v));
  }
  friend PolyL operator-(const PolyL& a, const PolyL& b) { return a + (-b); }
  friend PolyL operator*(const PolyL& a, const PolyL& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return PolyL(std::move(v));
  }
  friend bool operator==(const PolyL& a, const PolyL& b) { return a.c_ == b.c_; }

  // Euclidean division over Q.
  static std::pair<PolyL, PolyL> divmod(const PolyL& a, const PolyL& b) {
    if (b.is_zero()) throw std::domain_error("PolyL: division by zero polynomial");
    PolyL quot, rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      PolyL t = monomial(rem.degree() - b.degree(), rem.lead() / b.lead());
      quot = quot + t;
      rem = rem - t * b;
    }
    return {quot, rem};
  }

  PolyL monic() const {
    if (is_zero()) return {};
    Rational l = lead().inverse();
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= l;
    return PolyL(std::move(v));
  }

  static PolyL gcd(PolyL a, PolyL b) {
    while (!b.is_zero()) {
      PolyL r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // e.g. "L^2-1", "1/2*L+3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = c_[i];
      if (c.is_zero()) continue;
      Rational mag = c.sign() < 0 ? -c : c;
      if (c.sign() < 0) out += "-";
      else if (!out.empty()) out += "+";
      bool unit = mag == Rational(1);
      if (i == 0) {
        out += mag.to_string();
        continue;
      }
      if (!unit) out += mag.to_string() + "*";
      out += "L";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  static PolyL parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("PolyL: empty string");
    PolyL out;
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string term = s.substr(i, j - i);
      Rational sign(1);
      if (term[0] == '+' || term[0] == '-') {
        if (term[0] == '-') sign = Rational(-1);
        term = term.substr(1);
      }
      auto lpos = term.find('L');
      if (lpos == std::string::npos) {
        out = out + PolyL(sign * Rational::parse(term));
      } else {
        Rational c(1);
        if (lpos > 0) {
          std::string cs = term.substr(0, lpos);
          if (cs.back() != '*') throw std::invalid_argument("PolyL: cannot parse '" + term + "'");
          c = Rational::parse(cs.substr(0, cs.size() - 1));
        }
        int deg = 1;
        if (lpos + 1 < term.size()) {
          if (term[lpos + 1] != '^') throw std::invalid_argument("PolyL: cannot parse '" + term + "'");
          deg = std::stoi(term.substr(lpos + 2));
        }
        out = out + monomial(deg, sign * c);
      }
      i = j;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Reduced fraction num/den with monic den.
class RatFuncL {
 public:
  RatFuncL() : den_(1) {}
  RatFuncL(PolyL num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncL(Rational c) : RatFuncL(PolyL(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  RatFuncL(long c) : RatFuncL(PolyL(c)) {}                 // NOLINT(google-explicit-constructor)
  RatFuncL(PolyL num, PolyL den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFuncL L() { return RatFuncL(PolyL::L()); }
  static RatFuncL L_pow(long k) {
    if (k >= 0) return RatFuncL(PolyL::monomial(static_cast<int>(k)));
    return RatFuncL(PolyL(1), PolyL::monomial(static_cast<int>(-k)));
  }

  const PolyL& num() const { return num_; }
  const PolyL& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFuncL: pole at " + x.to_string());
    return num_.eval(x) / d;
  }

  friend RatFuncL operator+(const RatFuncL& f, const RatFuncL& g) {
    if (f.den_ == g.den_) return RatFuncL(f.num_ + g.num_, f.den_);
    return RatFuncL(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  RatFuncL operator-() const { return RatFuncL(-num_, den_); }
  friend RatFuncL operator-(const RatFuncL& f, const RatFuncL& g) { return f + (-g); }
  friend RatFuncL operator*(const RatFuncL& f, const RatFuncL& g) {
    return RatFuncL(f.num_ * g.num_, f.den_ * g.den_);
  }
  RatFuncL inverse() const {
    if (is_zero()) throw std::domain_error("RatFuncL: inverse of zero");
    return RatFuncL(den_, num_);
  }
  friend RatFuncL operator/(const RatFuncL& f, const RatFuncL& g) { return f * g.inverse(); }
  RatFuncL& operator+=(const RatFuncL& o) { return *this = *this + o; }
  RatFuncL& operator-=(const RatFuncL& o) { return *this = *this - o; }
  RatFuncL& operator*=(const RatFuncL& o) { return *this = *this * o; }

  friend bool operator==(const RatFuncL& f, const RatFuncL& g) { return f.num_ == g.num_ && f.den_ == g.den_; }

  // "(num)/(den)" with coprime integer coefficients and positive leading denominator coefficient.
  std::string to_string() const {
    mpz_class l = 1;
    for (const auto* poly : {&num_, &den_})
      for (const auto& c : poly->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> n, d;
    mpz_class g = 0;
    auto scale = [&](const PolyL& poly, std::vector<mpz_class>& out) {
      for (const auto& c : poly.coeffs()) {
        mpz_class v = c.numerator() * (l / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
      }
    };
    scale(num_, n);
    scale(den_, d);
    auto render = [&](const std::vector<mpz_class>& ints) {
      std::vector<Rational> rs;
      for (const auto& v : ints) rs.emplace_back(mpz_class(v / g));
      return PolyL(std::move(rs)).to_string();
    };
    return "(" + render(n) + ")/(" + render(d) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFuncL& f) { return os << f.to_string(); }

  static RatFuncL parse(std::string_view text) {
    std::string s(text);
    auto mid = s.find(")/(");
    if (s.size() < 5 || s.front() != '(' || s.back() != ')' || mid == std::string::npos)
      return RatFuncL(PolyL::parse(s));
    return RatFuncL(PolyL::parse(s.substr(1, mid - 1)), PolyL::parse(s.substr(mid + 3, s.size() - mid - 4)));
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("RatFuncL: zero denominator");
    if (num_.is_zero()) {
      den_ = PolyL(1);
      return;
    }
    PolyL g = PolyL::gcd(num_, den_);
    num_ = PolyL::divmod(num_, g).first;
    den_ = PolyL::divmod(den_, g).first;
    Rational l = den_.lead();
    num_ = num_ * PolyL(l.inverse());
    den_ = den_.monic();
  }

  PolyL num_;
  PolyL den_;
};

// Fits the first degree_bound+1 samples and checks the rest exactly.
inline PolyL interpolate_poly(const std::vector<std::pair<Rational, Rational>>& samples, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("interpolate_poly: negative degree bound");
  std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (samples.size() < need) throw std::invalid_argument("interpolate_poly: not enough samples");
  PolyL result;
  for (std::size_t i = 0; i < need; ++i) {
    PolyL basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < need; ++j) {
      if (j == i) continue;
      if (samples[i].first == samples[j].first) throw std::invalid_argument("interpolate_poly: repeated abscissa");
      basis = basis * PolyL(std::vector<Rational>{-samples[j].first, 1});
      denom *= samples[i].first - samples[j].first;
    }
    result = result + basis * PolyL(samples[i].second / denom);
  }
  for (std::size_t i = need; i < samples.size(); ++i) {
    if (result.eval(samples[i].first) != samples[i].second) {
      throw InterpolationFailure("interpolate_poly: sample at " + samples[i].first.to_string() + " is " +
                                 samples[i].second.to_string() + " but the fit gives " +
                                 result.eval(samples[i].first).to_string());
    }
  }
  return result;
}

}  // namespace hallalg
