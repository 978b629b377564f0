#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "spreadlen/rational.hpp"

namespace spreadlen {

// Dense univariate polynomial with exact rational coefficients, indexed by
// power. The coefficient vector is trimmed so the leading coefficient is
// nonzero unless the polynomial is identically zero.
class DensePolynomial {
 public:
  DensePolynomial() : coeffs_{} {}
  explicit DensePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  static DensePolynomial from_integers(const std::vector<Integer>& c) {
    std::vector<Rational> r;
    r.reserve(c.size());
    for (const auto& z : c) r.emplace_back(z);
    return DensePolynomial(std::move(r));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is not defined; callers check is_zero().
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.size(); }
  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return DensePolynomial();
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return DensePolynomial(std::move(out));
  }

  Rational evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

// Constraint for the partition sums: multiplicity vectors (j_1..j_{m-l+1})
// with  j_1 + ... + j_{m-l+1} = l  and  j_1 + 2 j_2 + ... = m.
struct PartitionConstraint {
  unsigned weighted_sum;  // m
  unsigned part_count;    // l
  unsigned max_index() const {
    return weighted_sum >= part_count ? weighted_sum - part_count + 1 : 0;
  }
};

// Emits each multiplicity vector exactly once, in lexicographic order of
// (j_1, j_2, ...). Infeasible constraints emit nothing.
inline void enumerate_partitions(const PartitionConstraint& c,
                                 const std::function<void(const std::vector<unsigned>&)>& emit) {
  const unsigned m = c.weighted_sum, l = c.part_count;
  if (m < l) return;
  if (l == 0) {
    if (m == 0) emit({});
    return;
  }
  const unsigned width = m - l + 1;
  std::vector<unsigned> j(width, 0);
  // choose j_1..j_width recursively; suffix starting at part size i must
  // supply `parts` parts of total weight `weight`
  auto rec = [&](auto&& self, unsigned i, unsigned parts, unsigned weight) -> void {
    if (i > width) {
      if (parts == 0 && weight == 0) emit(j);
      return;
    }
    for (unsigned take = 0; take <= parts && take * i <= weight; ++take) {
      const unsigned rest_parts = parts - take;
      const unsigned rest_weight = weight - take * i;
      if (rest_weight < static_cast<unsigned long>(rest_parts) * (i + 1) &&
          !(rest_parts == 0 && rest_weight == 0))
        continue;
      if (static_cast<unsigned long>(rest_parts) * width < rest_weight) continue;
      j[i - 1] = take;
      self(self, i + 1, rest_parts, rest_weight);
      j[i - 1] = 0;
    }
  };
  rec(rec, 1, l, m);
}

inline std::vector<std::vector<unsigned>> partitions(const PartitionConstraint& c) {
  std::vector<std::vector<unsigned>> out;
  enumerate_partitions(c, [&](const std::vector<unsigned>& j) { out.push_back(j); });
  return out;
}

// B_{m,l}(x_1..x_{m-l+1}) summed directly over partitions (reference path,
// exponential in m; used as the oracle for the recurrence).
inline Rational bell_enumerated(unsigned m, unsigned l, std::span<const Rational> args) {
  Rational total(0);
  enumerate_partitions(PartitionConstraint{m, l}, [&](const std::vector<unsigned>& j) {
    Rational term(factorial(m));
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i] == 0) continue;
      term /= Rational(factorial(j[i]));
      term *= rat_pow(args[i] / Rational(factorial(static_cast<unsigned long>(i) + 1)),
                      static_cast<long>(j[i]));
    }
    total += term;
  });
  return total;
}

namespace detail {

// Table of B_{m,l} for m <= m_max, l <= l_max via the convolution recurrence
//   B_{m,l} = sum_i C(m-1, i-1) x_i B_{m-i, l-1}.
inline std::vector<std::vector<Rational>> bell_table(unsigned m_max, unsigned l_max,
                                                     std::span<const Rational> args) {
  std::vector<std::vector<Rational>> table(m_max + 1, std::vector<Rational>(l_max + 1, Rational(0)));
  table[0][0] = 1;
  for (unsigned m = 1; m <= m_max; ++m) {
    for (unsigned l = 1; l <= l_max && l <= m; ++l) {
      Rational acc(0);
      const unsigned top = m - l + 1;
      for (unsigned i = 1; i <= top && i <= args.size(); ++i) {
        if (args[i - 1] == 0) continue;
        acc += Rational(binomial(m - 1, i - 1)) * args[i - 1] * table[m - i][l - 1];
      }
      table[m][l] = acc;
    }
  }
  return table;
}

}  // namespace detail

// Same value as bell_enumerated for every input, in O(m^2 l) rational ops.
inline Rational bell_recurrence(unsigned m, unsigned l, std::span<const Rational> args) {
  if (l > m) return Rational(0);
  return detail::bell_table(m, l, args)[m][l];
}

// y^p as p-1 successive multiplications; the independent oracle for the
// Bell-based power.
inline DensePolynomial poly_power_direct(const DensePolynomial& y, unsigned p) {
  if (p == 0) throw DomainError("poly_power_direct: p must be >= 1");
  DensePolynomial acc = y;
  for (unsigned i = 1; i < p; ++i) acc = acc * y;
  return acc;
}

// y^p with coefficient of x^k equal to  p!/(k+p)! B_{k+p,p}(c_0, 2!c_1, ..., (k+1)!c_k).
inline DensePolynomial poly_power_bell(const DensePolynomial& y, unsigned p) {
  if (p == 0) throw DomainError("poly_power_bell: p must be >= 1");
  if (y.is_zero()) return DensePolynomial();
  const std::size_t n = y.degree();
  const std::size_t out_degree = n * p;
  // x_i = i! * c_{i-1}
  std::vector<Rational> args(out_degree + p, Rational(0));
  for (std::size_t i = 1; i <= args.size(); ++i)
    args[i - 1] = Rational(factorial(i)) * y.coeff(i - 1);
  auto table = detail::bell_table(static_cast<unsigned>(out_degree + p), p, args);
  std::vector<Rational> coeffs(out_degree + 1, Rational(0));
  const Rational p_fact(factorial(p));
  for (std::size_t k = 0; k <= out_degree; ++k)
    coeffs[k] = p_fact / Rational(factorial(k + p)) * table[k + p][p];
  return DensePolynomial(std::move(coeffs));
}

}  // namespace spreadlen
