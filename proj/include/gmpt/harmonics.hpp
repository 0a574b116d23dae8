#pragma once

// Solid spherical harmonics (real I_n^m, complex H_n^m, decaying K_n^m),
// the monomial/real-basis change matrices, Green's-function addition
// theorems, Wigner rotation blocks and solid-harmonic translation tables.

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "gmpt/polynomial.hpp"

namespace gmpt {

// Degree cap for the coefficient tables (basis change, Wigner, translation).
// Raw harmonic evaluation and the Green series go up to kMaxEvalDegree.
inline constexpr int kMaxTableDegree = 6;
inline constexpr int kMaxEvalDegree = 12;

enum class HarmonicKind { I, H, K };

// Exact surface integral of a monomial over the unit sphere:
//   ∫ x^b1 y^b2 z^b3 dS = 4π (b1−1)!!(b2−1)!!(b3−1)!!/(|b|+1)!!  (all bi even)
// and zero when any exponent is odd.
double sphere_monomial_integral(const MultiIndex& b);

// L²(∂S) inner products of polynomials, ⟨f,g⟩ = ∫ conj(f)·g dS, via the exact
// monomial integrals above.
double sphere_inner(const RealPolynomial& f, const RealPolynomial& g);
Complex sphere_inner(const ComplexPolynomial& f, const ComplexPolynomial& g);

// Per-degree harmonic basis: the 2n+1 solid harmonics of degree n in both the
// complex (H) and real (I) forms, with their basis-change matrices.  Immutable
// once built; access through HarmonicBasis::get (cached per degree).
class HarmonicBasis {
 public:
  explicit HarmonicBasis(int degree);

  static const HarmonicBasis& get(int degree);

  int degree() const { return n_; }

  // Solid harmonics; m in [-n, n].
  const ComplexPolynomial& H(int m) const { return H_.at(static_cast<size_t>(m + n_)); }
  const RealPolynomial& I(int m) const { return I_.at(static_cast<size_t>(m + n_)); }

  Complex eval_H(int m, const Vec3& x) const { return H(m)(x); }
  double eval_I(int m, const Vec3& x) const { return I(m)(x); }
  // K_n^m(x) = H_n^m(x)/|x|^{2n+1}; singular at the origin.
  Complex eval_K(int m, const Vec3& x) const;

  // a^IH: H_n^m = Σ_u a^IH_{um} I_n^u.  Entry (u+n, m+n); unitary.
  const Eigen::MatrixXcd& aIH() const { return aIH_; }

  // a^MH: H_n^m = Σ_{|β|=n} a^MH_{βm} x^β.  Row order: enumerate_multiindices(n);
  // column m+n.
  const Eigen::MatrixXcd& aMH() const { return aMH_; }

 private:
  int n_;
  std::vector<ComplexPolynomial> H_;
  std::vector<RealPolynomial> I_;
  Eigen::MatrixXcd aIH_;
  Eigen::MatrixXcd aMH_;
};

// Single-value front-end used by the CLI and tests.
Complex eval_solid_harmonic(HarmonicKind kind, int n, int m, const Vec3& x);

// Truncated addition theorem for G(x,x') = 1/(4π|x−x'|), valid for |x'| < |x|:
//   Σ_{n≤N} 1/(2n+1) Σ_m K_n^m(x) conj(H_n^m(x')).
double green_series(const Vec3& x, const Vec3& xp, int N);

// Same series resummed in the real basis:
//   Σ_{n≤N} |x|^{−(2n+1)}/(2n+1) Σ_ℓ I_n^ℓ(x') I_n^ℓ(x).
double green_series_real_basis(const Vec3& x, const Vec3& xp, int N);

// Compares, for every |β| ≤ N, the finite-difference β-derivative of
// G(x,0) = 1/(4π|x|) against the harmonic-side expansion
// (1/(2|β|+1)) Σ_m K_{|β|}^m(x) conj(a^MH_{βm}); returns the max abs
// discrepancy (finite-difference limited).
double taylor_vs_harmonic_check(const Vec3& x, int N);

// Wigner rotation block of degree n for a proper rotation R:
//   H_n^m(R ξ) = Σ_{m'} ρ_n^{m',m} H_n^{m'}(ξ).
// rho(m'+n, m+n) stores ρ_n^{m',m}.  Determined by sampling the defining
// identity at ≥ 4(2n+1)² points and solving the overdetermined system.
struct WignerBlock {
  int n = 0;
  Eigen::MatrixXcd rho;
};

WignerBlock wigner_block(const Eigen::Matrix3d& R, int n);

// Q_ℓ(R) as used by the ro­tation law of the harmonic tensor families:
// (Q_ℓ)_{m,m'} = ρ_ℓ^{m',m}, i.e. the transpose of the rho block.
Eigen::MatrixXcd wigner_Q(const WignerBlock& block);

// Translation coefficients C_{νμnm} (real in this basis convention) with
//   H_n^m(ξ+z) = Σ_{ν,μ} C_{νμnm} H_{n−ν}^{m−μ}(z) H_ν^μ(ξ),
// summed over 0 ≤ ν ≤ n, −ν ≤ μ ≤ ν, |m−μ| ≤ n−ν.  Built degree-by-degree by
// sample-and-solve least squares; construction fails if any residual exceeds
// 1e-10.
class TranslationTable {
 public:
  explicit TranslationTable(int n_max);

  int n_max() const { return n_max_; }

  // Zero outside the admissible index set.
  double C(int nu, int mu, int n, int m) const;

 private:
  int n_max_;
  // flat[n][m+n] -> dense (nu, mu) table of size (n+1) x (2n+1)
  std::vector<std::vector<Eigen::MatrixXd>> table_;
};

// Fixed sphere quadrature with polynomial exactness ≥ `exactness`
// (product Gauss–Legendre in cosθ × equiangular in φ).
struct SphereQuadrature {
  std::vector<Vec3> points;
  std::vector<double> weights;  // sums to 4π
};

SphereQuadrature sphere_quadrature(int exactness);

}  // namespace gmpt
