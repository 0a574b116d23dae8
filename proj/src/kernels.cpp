#include "gmpt/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "gmpt/harmonics.hpp"

namespace gmpt {

RationalField RationalField::term(const MultiIndex& b, int inv_power, Complex coeff) {
  RationalField f;
  f.add_term(b, inv_power, coeff);
  return f;
}

RationalField RationalField::from_polynomial(const ComplexPolynomial& num,
                                             int inv_power) {
  RationalField f;
  for (const auto& [b, c] : num.terms()) f.add_term(b, inv_power, c);
  return f;
}

void RationalField::add_term(const MultiIndex& b, int inv_power, Complex c) {
  if (c == Complex(0.0, 0.0)) return;
  const auto key = std::make_pair(b, inv_power);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_[key] = c;
  } else {
    it->second += c;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
  }
}

Complex RationalField::operator()(const Vec3& x) const {
  const double r = x.norm();
  Complex acc(0.0, 0.0);
  for (const auto& [key, c] : terms_) {
    const auto& [b, p] = key;
    if (p > 0 && r == 0.0)
      throw std::domain_error("RationalField: evaluation at the singular point");
    acc += c * b.monomial(x) / std::pow(r, p);
  }
  return acc;
}

RationalField RationalField::derivative(int axis) const {
  RationalField d;
  for (const auto& [key, c] : terms_) {
    const auto& [b, p] = key;
    if (b[axis] > 0) d.add_term(b.lowered(axis), p, c * static_cast<double>(b[axis]));
    if (p != 0) d.add_term(b.raised(axis), p + 2, -c * static_cast<double>(p));
  }
  return d;
}

RationalField RationalField::derivative(const MultiIndex& beta) const {
  RationalField d = *this;
  for (int axis = 0; axis < 3; ++axis)
    for (int rep = 0; rep < beta[axis]; ++rep) d = d.derivative(axis);
  return d;
}

RationalField RationalField::operator+(const RationalField& o) const {
  RationalField r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, c);
  return r;
}

RationalField RationalField::operator*(Complex s) const {
  RationalField r;
  if (s == Complex(0.0, 0.0)) return r;
  for (const auto& [key, c] : terms_) r.terms_[key] = c * s;
  return r;
}

RationalHessian hessian(const RationalField& f) {
  RationalHessian h;
  std::array<RationalField, 3> first;
  for (int i = 0; i < 3; ++i) first[static_cast<size_t>(i)] = f.derivative(i);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          first[static_cast<size_t>(i)].derivative(j);
  return h;
}

Eigen::Matrix3cd eval_hessian(const RationalHessian& h, const Vec3& x) {
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = h[static_cast<size_t>(i)][static_cast<size_t>(j)](x);
  return m;
}

RationalField newton_kernel() {
  return RationalField::term(MultiIndex(), 1,
                             Complex(1.0 / (4.0 * 3.14159265358979323846), 0.0));
}

RationalField K_field(int n, int m) {
  return RationalField::from_polynomial(HarmonicBasis::get(n).H(m), 2 * n + 1);
}

RationalField I_decay_field(int n, int m) {
  return RationalField::from_polynomial(to_complex(HarmonicBasis::get(n).I(m)),
                                        2 * n + 1);
}

}  // namespace gmpt
