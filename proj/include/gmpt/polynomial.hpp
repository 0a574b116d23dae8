#pragma once

// Sparse trivariate polynomials over real or complex coefficients, used to
// represent solid harmonics and the polynomial far-field data of the
// transmission problems.

#include <complex>
#include <map>

#include "gmpt/multiindex.hpp"

namespace gmpt {

using Complex = std::complex<double>;

template <typename Scalar>
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Scalar>;

  Polynomial() = default;

  static Polynomial monomial(const MultiIndex& b, Scalar coeff = Scalar(1)) {
    Polynomial p;
    p.terms_[b] = coeff;
    return p;
  }
  static Polynomial constant(Scalar c) { return monomial(MultiIndex(), c); }

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Scalar coefficient(const MultiIndex& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const MultiIndex& b, Scalar c) {
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      if (c != Scalar(0)) terms_[b] = c;
    } else {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  Scalar operator()(const Vec3& x) const {
    Scalar acc(0);
    for (const auto& [b, c] : terms_) acc += c * b.monomial(x);
    return acc;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [b, c] : o.terms_) r.add_term(b, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [b1, c1] : terms_)
      for (const auto& [b2, c2] : o.terms_) r.add_term(b1 + b2, c1 * c2);
    return r;
  }
  Polynomial operator*(Scalar s) const {
    Polynomial r;
    if (s == Scalar(0)) return r;
    for (const auto& [b, c] : terms_) r.terms_[b] = c * s;
    return r;
  }

  Polynomial derivative(int axis) const {
    Polynomial r;
    for (const auto& [b, c] : terms_)
      if (b[axis] > 0) r.add_term(b.lowered(axis), c * Scalar(b[axis]));
    return r;
  }

  Polynomial laplacian() const {
    Polynomial r;
    for (int d = 0; d < 3; ++d) r = r + derivative(d).derivative(d);
    return r;
  }

  int degree() const {
    int d = 0;
    for (const auto& [b, c] : terms_) d = std::max(d, b.order());
    return d;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [b, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  TermMap terms_;
};

using RealPolynomial = Polynomial<double>;
using ComplexPolynomial = Polynomial<Complex>;

inline ComplexPolynomial to_complex(const RealPolynomial& p) {
  ComplexPolynomial r;
  for (const auto& [b, c] : p.terms()) r.add_term(b, Complex(c, 0.0));
  return r;
}

}  // namespace gmpt
