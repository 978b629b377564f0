#pragma once

#include <cstdlib>
#include <string>
#include <utility>

#include "spreadlen/big_float.hpp"
#include "spreadlen/errors.hpp"
#include "spreadlen/rational.hpp"

namespace spreadlen {

// Canonical exact number of the form  rational * sqrt(radicand) * pi^(pi_quarters/4)
// with a squarefree radicand >= 1. Zero is stored as (0, 1, 0). Two values are
// equal exactly when all three fields coincide.
//
// The pi exponent is kept in quarter-integers so that values such as
// (2^n n! sqrt(pi))^{-1/2} = rational * sqrt(t) * pi^{-1/4} stay exact; every
// quantity surfaced through serialization carries an even quarter count and
// prints in the pi^(a/2) form.
class ExactReal {
 public:
  ExactReal() : rational_(0), radicand_(1), pi_quarters_(0) {}
  explicit ExactReal(const Rational& r) : rational_(r), radicand_(1), pi_quarters_(0) {
    rational_.canonicalize();
    if (rational_ == 0) pi_quarters_ = 0;
  }
  explicit ExactReal(long i) : ExactReal(Rational(i)) {}

  // rational * sqrt(radicand) * pi^(pi_quarters/4), normalized.
  static ExactReal surd(const Rational& rational, const Integer& radicand,
                        long pi_quarters = 0) {
    if (radicand < 1) throw DomainError("ExactReal: radicand must be >= 1");
    ExactReal x;
    x.rational_ = rational;
    x.rational_.canonicalize();
    x.radicand_ = radicand;
    x.pi_quarters_ = pi_quarters;
    x.normalize();
    return x;
  }

  static ExactReal zero() { return ExactReal(); }
  static ExactReal one() { return ExactReal(Rational(1)); }

  const Rational& rational() const { return rational_; }
  const Integer& radicand() const { return radicand_; }
  long pi_quarters() const { return pi_quarters_; }
  // Valid whenever the quarter count is even (all serialized quantities).
  long pi_half_exponent() const { return pi_quarters_ / 2; }

  bool is_zero() const { return rational_ == 0; }
  bool is_rational() const { return radicand_ == 1 && pi_quarters_ == 0; }
  int sign() const { return sgn(rational_); }

  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.rational_ == b.rational_ && a.radicand_ == b.radicand_ &&
           a.pi_quarters_ == b.pi_quarters_;
  }
  friend bool operator!=(const ExactReal& a, const ExactReal& b) { return !(a == b); }

  friend ExactReal operator*(const ExactReal& a, const ExactReal& b) {
    if (a.is_zero() || b.is_zero()) return ExactReal();
    ExactReal r;
    r.rational_ = a.rational_ * b.rational_;
    // For squarefree t1, t2: t1*t2 = g^2 * (t1/g)(t2/g) with the cofactors
    // coprime and squarefree, so no re-extraction is needed.
    Integer g = gcd(a.radicand_, b.radicand_);
    r.rational_ *= g;
    r.radicand_ = (a.radicand_ / g) * (b.radicand_ / g);
    r.pi_quarters_ = a.pi_quarters_ + b.pi_quarters_;
    return r;
  }

  friend ExactReal operator+(const ExactReal& a, const ExactReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.radicand_ != b.radicand_ || a.pi_quarters_ != b.pi_quarters_)
      throw KindMismatch("ExactReal: cannot add values of different surd/pi kinds");
    Rational sum = a.rational_ + b.rational_;
    if (sum == 0) return ExactReal();
    ExactReal r;
    r.rational_ = sum;
    r.radicand_ = a.radicand_;
    r.pi_quarters_ = a.pi_quarters_;
    return r;
  }

  friend ExactReal operator-(const ExactReal& a) {
    ExactReal r = a;
    r.rational_ = -r.rational_;
    return r;
  }
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b) { return a + (-b); }

  ExactReal inverse() const {
    if (is_zero()) throw DomainError("ExactReal: division by zero");
    ExactReal r;
    r.rational_ = Rational(1) / (rational_ * radicand_);
    r.radicand_ = radicand_;
    r.pi_quarters_ = -pi_quarters_;
    return r;
  }
  friend ExactReal operator/(const ExactReal& a, const ExactReal& b) {
    return a * b.inverse();
  }

  ExactReal pow(long e) const {
    if (e == 0) return one();
    if (e < 0) return inverse().pow(-e);
    if (is_zero()) return ExactReal();
    ExactReal r;
    r.rational_ = rat_pow(rational_, e) * int_pow(radicand_, static_cast<unsigned long>(e / 2));
    r.radicand_ = (e % 2 != 0) ? radicand_ : Integer(1);
    r.pi_quarters_ = pi_quarters_ * e;
    return r;
  }

  // Round-to-nearest evaluation at the requested precision; computed with
  // 64 guard bits so the result is correct to within one ulp.
  BigFloat to_float(mpfr_prec_t precision_bits) const {
    const mpfr_prec_t work = precision_bits + 64;
    BigFloat acc(rational_, work);
    if (radicand_ != 1) acc *= BigFloat(radicand_, work).sqrt();
    if (pi_quarters_ != 0) {
      BigFloat e(Rational(pi_quarters_, 4), work);
      acc *= BigFloat::pi(work).pow(e);
    }
    BigFloat out(precision_bits);
    mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
    return out;
  }
  double to_double() const { return to_float(64).to_double(); }

  // Text form "r * sqrt(t) * pi^(a/2)" (pi^(a/4) when the quarter count is odd).
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s = rational_.get_str();
    if (radicand_ != 1) s += " * sqrt(" + radicand_.get_str() + ")";
    if (pi_quarters_ != 0) {
      if (pi_quarters_ % 2 == 0)
        s += " * pi^(" + std::to_string(pi_quarters_ / 2) + "/2)";
      else
        s += " * pi^(" + std::to_string(pi_quarters_) + "/4)";
    }
    return s;
  }

  static ExactReal parse(const std::string& text) {
    Rational r(0);
    Integer t(1);
    long quarters = 0;
    size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
      size_t next = text.find(" * ", pos);
      std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
      if (first) {
        if (mpq_set_str(r.get_mpq_t(), tok.c_str(), 10) != 0)
          throw DomainError("ExactReal::parse: bad rational '" + tok + "'");
        r.canonicalize();
        first = false;
      } else if (tok.rfind("sqrt(", 0) == 0 && tok.back() == ')') {
        t = Integer(tok.substr(5, tok.size() - 6));
      } else if (tok.rfind("pi^(", 0) == 0 && tok.back() == ')') {
        std::string e = tok.substr(4, tok.size() - 5);
        size_t slash = e.find('/');
        if (slash == std::string::npos)
          throw DomainError("ExactReal::parse: bad pi exponent '" + tok + "'");
        long num = std::strtol(e.substr(0, slash).c_str(), nullptr, 10);
        long den = std::strtol(e.substr(slash + 1).c_str(), nullptr, 10);
        if (den == 2)
          quarters = 2 * num;
        else if (den == 4)
          quarters = num;
        else
          throw DomainError("ExactReal::parse: bad pi exponent '" + tok + "'");
      } else {
        throw DomainError("ExactReal::parse: unrecognized factor '" + tok + "'");
      }
      pos = (next == std::string::npos) ? text.size() : next + 3;
    }
    if (first) throw DomainError("ExactReal::parse: empty input");
    return surd(r, t, quarters);
  }

 private:
  void normalize() {
    if (rational_ == 0) {
      radicand_ = 1;
      pi_quarters_ = 0;
      return;
    }
    if (radicand_ == 1) return;
    auto [square_root, squarefree] = extract_square(radicand_);
    rational_ *= square_root;
    radicand_ = squarefree;
  }

  // t = s^2 * t' with t' squarefree; returns (s, t'). Trial division: once all
  // divisors d with d^2 <= t are stripped, the remainder is 1 or prime.
  static std::pair<Integer, Integer> extract_square(Integer t) {
    Integer s(1);
    Integer squarefree(1);
    Integer d(2);
    while (d * d <= t) {
      if (t % d == 0) {
        unsigned count = 0;
        while (t % d == 0) {
          t /= d;
          ++count;
        }
        if (count >= 2) s *= int_pow(d, count / 2);
        if (count % 2 != 0) squarefree *= d;
      }
      d += (d == 2) ? 1 : 2;
    }
    return {s, squarefree * t};
  }

  Rational rational_;
  Integer radicand_;
  long pi_quarters_;
};

}  // namespace spreadlen
