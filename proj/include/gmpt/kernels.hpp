#pragma once

// Monomial-rational fields c·x^b/|x|^p closed under exact differentiation.
// These represent the point-source kernels (1/|x| and its derivatives, the
// decaying solid harmonics K_n^m, and I_n^m(x)/|x|^{2n+1}) whose first and
// second derivatives enter the field and voltage predictions.  No finite
// differences: the derivative of x^b/|x|^p is applied term by term,
//   ∂_i (x^b/|x|^p) = b_i x^{b−e_i}/|x|^p − p x^{b+e_i}/|x|^{p+2}.

#include <array>
#include <map>

#include "gmpt/polynomial.hpp"

namespace gmpt {

class RationalField {
 public:
  // key: (monomial exponents, inverse power p of |x|)
  using TermMap = std::map<std::pair<MultiIndex, int>, Complex>;

  RationalField() = default;

  static RationalField term(const MultiIndex& b, int inv_power, Complex coeff);
  // P(x)/|x|^p for a polynomial numerator.
  static RationalField from_polynomial(const ComplexPolynomial& num, int inv_power);

  const TermMap& terms() const { return terms_; }

  void add_term(const MultiIndex& b, int inv_power, Complex c);

  Complex operator()(const Vec3& x) const;

  RationalField derivative(int axis) const;
  // ∂^β, applied recursively.
  RationalField derivative(const MultiIndex& beta) const;

  RationalField operator+(const RationalField& o) const;
  RationalField operator*(Complex s) const;

  std::size_t size() const { return terms_.size(); }

 private:
  TermMap terms_;
};

// Hessian (D²f)_{ij} = ∂_i∂_j f of a scalar field, as a 3×3 array of fields.
using RationalHessian = std::array<std::array<RationalField, 3>, 3>;
RationalHessian hessian(const RationalField& f);

// Evaluate a Hessian at a point into a complex 3×3 matrix.
Eigen::Matrix3cd eval_hessian(const RationalHessian& h, const Vec3& x);

// Free-space kernel 1/(4π|x|) as a rational field.
RationalField newton_kernel();

// K_n^m(x) = H_n^m(x)/|x|^{2n+1} as a rational field.
RationalField K_field(int n, int m);

// I_n^m(x)/|x|^{2n+1} as a (real-coefficient) rational field.
RationalField I_decay_field(int n, int m);

}  // namespace gmpt
