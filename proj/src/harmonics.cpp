#include "gmpt/harmonics.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>

namespace gmpt {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Legendre polynomial P_n(t) coefficients (index = power of t) via the
// three-term recursion (n+1)P_{n+1} = (2n+1) t P_n − n P_{n−1}.
std::vector<double> legendre_coefficients(int n) {
  std::vector<std::vector<double>> P(static_cast<size_t>(n) + 1);
  P[0] = {1.0};
  if (n >= 1) P[1] = {0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(static_cast<size_t>(k) + 2, 0.0);
    for (size_t j = 0; j < P[static_cast<size_t>(k)].size(); ++j)
      next[j + 1] += (2.0 * k + 1.0) * P[static_cast<size_t>(k)][j] / (k + 1.0);
    for (size_t j = 0; j < P[static_cast<size_t>(k) - 1].size(); ++j)
      next[j] -= k * P[static_cast<size_t>(k) - 1][j] / (k + 1.0);
    P[static_cast<size_t>(k) + 1] = std::move(next);
  }
  return P[static_cast<size_t>(n)];
}

std::vector<double> poly1d_derivative(std::vector<double> c, int times) {
  for (int rep = 0; rep < times; ++rep) {
    if (c.size() <= 1) return {0.0};
    std::vector<double> d(c.size() - 1);
    for (size_t j = 1; j < c.size(); ++j) d[j - 1] = c[j] * static_cast<double>(j);
    c = std::move(d);
  }
  return c;
}

// (n−m)!/(n+m)! evaluated as a running product to avoid large factorials.
double factorial_ratio(int n, int m) {
  double r = 1.0;
  for (int k = n - m + 1; k <= n + m; ++k) r /= k;
  return r;
}

ComplexPolynomial conj_coefficients(const ComplexPolynomial& p) {
  ComplexPolynomial r;
  for (const auto& [b, c] : p.terms()) r.add_term(b, std::conj(c));
  return r;
}

ComplexPolynomial ipow(const ComplexPolynomial& p, int e) {
  ComplexPolynomial r = ComplexPolynomial::constant(Complex(1.0, 0.0));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

RealPolynomial real_part(const ComplexPolynomial& p) {
  RealPolynomial r;
  for (const auto& [b, c] : p.terms()) r.add_term(b, c.real());
  return r;
}
RealPolynomial imag_part(const ComplexPolynomial& p) {
  RealPolynomial r;
  for (const auto& [b, c] : p.terms()) r.add_term(b, c.imag());
  return r;
}

double dfact(int n) {  // (n)!! with (−1)!! = 0!! = 1
  double r = 1.0;
  for (int k = n; k >= 2; k -= 2) r *= k;
  return r;
}

}  // namespace

double sphere_monomial_integral(const MultiIndex& b) {
  if (b[0] % 2 || b[1] % 2 || b[2] % 2) return 0.0;
  return 4.0 * kPi * dfact(b[0] - 1) * dfact(b[1] - 1) * dfact(b[2] - 1) /
         dfact(b.order() + 1);
}

double sphere_inner(const RealPolynomial& f, const RealPolynomial& g) {
  double acc = 0.0;
  for (const auto& [bf, cf] : f.terms())
    for (const auto& [bg, cg] : g.terms())
      acc += cf * cg * sphere_monomial_integral(bf + bg);
  return acc;
}

Complex sphere_inner(const ComplexPolynomial& f, const ComplexPolynomial& g) {
  Complex acc(0.0, 0.0);
  for (const auto& [bf, cf] : f.terms())
    for (const auto& [bg, cg] : g.terms())
      acc += std::conj(cf) * cg * sphere_monomial_integral(bf + bg);
  return acc;
}

HarmonicBasis::HarmonicBasis(int degree) : n_(degree) {
  if (degree < 0 || degree > kMaxEvalDegree)
    throw std::invalid_argument("HarmonicBasis: degree out of range");

  const auto Pn = legendre_coefficients(n_);
  const auto x_plus_iy = ComplexPolynomial::monomial(MultiIndex(1, 0, 0)) +
                         ComplexPolynomial::monomial(MultiIndex(0, 1, 0)) *
                             Complex(0.0, 1.0);
  const auto r2 = ComplexPolynomial::monomial(MultiIndex(2, 0, 0)) +
                  ComplexPolynomial::monomial(MultiIndex(0, 2, 0)) +
                  ComplexPolynomial::monomial(MultiIndex(0, 0, 2));

  H_.resize(static_cast<size_t>(2 * n_ + 1));
  I_.resize(static_cast<size_t>(2 * n_ + 1));

  for (int m = 0; m <= n_; ++m) {
    // r^n Y_n^m as a polynomial: N_nm (x+iy)^m Σ_j c_j z^j r^{n−m−j} with
    // c_j the coefficients of d^m/dt^m P_n (j and n−m−j of equal parity).
    const auto dmP = poly1d_derivative(Pn, m);
    const double Nnm =
        std::sqrt((2.0 * n_ + 1.0) / (4.0 * kPi) * factorial_ratio(n_, m));
    ComplexPolynomial sum;
    for (size_t j = 0; j < dmP.size(); ++j) {
      if (dmP[j] == 0.0) continue;
      const int rpow = n_ - m - static_cast<int>(j);
      if (rpow < 0 || rpow % 2 != 0) continue;
      auto term = ipow(r2, rpow / 2) *
                  ComplexPolynomial::monomial(MultiIndex(0, 0, static_cast<int>(j)),
                                              Complex(dmP[j], 0.0));
      sum = sum + term;
    }
    H_[static_cast<size_t>(m + n_)] = ipow(x_plus_iy, m) * sum * Complex(Nnm, 0.0);
    if (m > 0)  // H_n^{−m} := conj pattern (real coefficients conjugated)
      H_[static_cast<size_t>(n_ - m)] =
          conj_coefficients(H_[static_cast<size_t>(m + n_)]);
  }

  const double sqrt2 = std::sqrt(2.0);
  I_[static_cast<size_t>(n_)] = real_part(H_[static_cast<size_t>(n_)]);
  for (int m = 1; m <= n_; ++m) {
    I_[static_cast<size_t>(m + n_)] = real_part(H_[static_cast<size_t>(m + n_)]) * sqrt2;
    I_[static_cast<size_t>(n_ - m)] = imag_part(H_[static_cast<size_t>(m + n_)]) * sqrt2;
  }

  // a^MH: monomial coefficients of H_n^m over the degree-n monomial list.
  const auto monos = enumerate_multiindices(n_);
  aMH_.setZero(static_cast<Eigen::Index>(monos.size()), 2 * n_ + 1);
  for (int m = -n_; m <= n_; ++m)
    for (size_t r = 0; r < monos.size(); ++r)
      aMH_(static_cast<Eigen::Index>(r), m + n_) = H(m).coefficient(monos[r]);

  // a^IH from exact surface inner products: a_{um} = ⟨I_u, H_m⟩.
  aIH_.setZero(2 * n_ + 1, 2 * n_ + 1);
  for (int u = -n_; u <= n_; ++u)
    for (int m = -n_; m <= n_; ++m)
      aIH_(u + n_, m + n_) = sphere_inner(to_complex(I(u)), H(m));
}

const HarmonicBasis& HarmonicBasis::get(int degree) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<HarmonicBasis>> cache(
      static_cast<size_t>(kMaxEvalDegree) + 1);
  std::lock_guard<std::mutex> lock(mu);
  if (degree < 0 || degree > kMaxEvalDegree)
    throw std::invalid_argument("HarmonicBasis::get: degree out of range");
  auto& slot = cache[static_cast<size_t>(degree)];
  if (!slot) slot = std::make_unique<HarmonicBasis>(degree);
  return *slot;
}

Complex HarmonicBasis::eval_K(int m, const Vec3& x) const {
  const double r = x.norm();
  if (r == 0.0) throw std::domain_error("K_n^m singular at the origin");
  return H(m)(x) / std::pow(r, 2 * n_ + 1);
}

Complex eval_solid_harmonic(HarmonicKind kind, int n, int m, const Vec3& x) {
  const auto& basis = HarmonicBasis::get(n);
  if (m < -n || m > n) throw std::invalid_argument("eval_solid_harmonic: |m| > n");
  switch (kind) {
    case HarmonicKind::I:
      return Complex(basis.eval_I(m, x), 0.0);
    case HarmonicKind::H:
      return basis.eval_H(m, x);
    case HarmonicKind::K:
      return basis.eval_K(m, x);
  }
  throw std::logic_error("unreachable");
}

double green_series(const Vec3& x, const Vec3& xp, int N) {
  if (xp.norm() >= x.norm())
    throw std::domain_error("green_series requires |x'| < |x|");
  Complex acc(0.0, 0.0);
  for (int n = 0; n <= N; ++n) {
    const auto& basis = HarmonicBasis::get(n);
    Complex level(0.0, 0.0);
    for (int m = -n; m <= n; ++m)
      level += basis.eval_K(m, x) * std::conj(basis.eval_H(m, xp));
    acc += level / (2.0 * n + 1.0);
  }
  return acc.real();
}

double green_series_real_basis(const Vec3& x, const Vec3& xp, int N) {
  if (xp.norm() >= x.norm())
    throw std::domain_error("green_series requires |x'| < |x|");
  const double r = x.norm();
  double acc = 0.0;
  for (int n = 0; n <= N; ++n) {
    const auto& basis = HarmonicBasis::get(n);
    double level = 0.0;
    for (int m = -n; m <= n; ++m) level += basis.eval_I(m, xp) * basis.eval_I(m, x);
    acc += level / ((2.0 * n + 1.0) * std::pow(r, 2 * n + 1));
  }
  return acc;
}

namespace {

// Central finite difference of the β-derivative of f (recursively per axis).
double central_difference(const std::function<double(const Vec3&)>& f,
                          const MultiIndex& b, const Vec3& x, double h) {
  for (int axis = 0; axis < 3; ++axis) {
    if (b[axis] > 0) {
      const MultiIndex lower = b.lowered(axis);
      Vec3 dx = Vec3::Zero();
      dx[axis] = h;
      return (central_difference(f, lower, x + dx, h) -
              central_difference(f, lower, x - dx, h)) /
             (2.0 * h);
    }
  }
  return f(x);
}

}  // namespace

double taylor_vs_harmonic_check(const Vec3& x, int N) {
  if (x.norm() == 0.0) throw std::domain_error("taylor_vs_harmonic_check: x = 0");
  const auto G0 = [](const Vec3& y) { return 1.0 / (4.0 * kPi * y.norm()); };
  const double h = 0.005 * x.norm();
  double worst = 0.0;
  for (int order = 0; order <= N; ++order) {
    const auto& basis = HarmonicBasis::get(order);
    const auto monos = enumerate_multiindices(order);
    for (size_t r = 0; r < monos.size(); ++r) {
      const MultiIndex& b = monos[r];
      const double sign = (b.order() % 2 == 0) ? 1.0 : -1.0;
      const double lhs = sign / static_cast<double>(b.factorial()) *
                         central_difference(G0, b, x, h);
      Complex rhs(0.0, 0.0);
      for (int m = -order; m <= order; ++m)
        rhs += basis.eval_K(m, x) *
               std::conj(basis.aMH()(static_cast<Eigen::Index>(r), m + order));
      rhs /= (2.0 * order + 1.0);
      worst = std::max(worst, std::abs(Complex(lhs, 0.0) - rhs));
    }
  }
  return worst;
}

WignerBlock wigner_block(const Eigen::Matrix3d& R, int n) {
  if ((R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-12 ||
      std::abs(R.determinant() - 1.0) > 1e-12)
    throw std::domain_error("wigner_block: R is not a proper rotation");
  if (n < 0 || n > kMaxTableDegree)
    throw std::invalid_argument("wigner_block: degree out of range");

  const auto& basis = HarmonicBasis::get(n);
  const int dim = 2 * n + 1;
  const int npts = 4 * dim * dim;

  std::mt19937 rng(20240517u + static_cast<unsigned>(n));
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::MatrixXcd S(npts, dim), B(npts, dim);
  for (int i = 0; i < npts; ++i) {
    Vec3 xi(gauss(rng), gauss(rng), gauss(rng));
    xi.normalize();
    const Vec3 rxi = R * xi;
    for (int m = -n; m <= n; ++m) {
      S(i, m + n) = basis.eval_H(m, xi);
      B(i, m + n) = basis.eval_H(m, rxi);
    }
  }

  WignerBlock block;
  block.n = n;
  block.rho = S.colPivHouseholderQr().solve(B);
  const double resid = (S * block.rho - B).norm() / B.norm();
  if (resid > 1e-10)
    throw std::runtime_error("wigner_block: sample system residual " +
                             std::to_string(resid));
  return block;
}

Eigen::MatrixXcd wigner_Q(const WignerBlock& block) { return block.rho.transpose(); }

TranslationTable::TranslationTable(int n_max) : n_max_(n_max) {
  if (n_max < 0 || n_max > kMaxTableDegree)
    throw std::invalid_argument("TranslationTable: n_max out of range");

  std::mt19937 rng(77250315u);
  std::normal_distribution<double> gauss(0.0, 1.0);

  table_.resize(static_cast<size_t>(n_max_) + 1);
  for (int n = 0; n <= n_max_; ++n) {
    const auto& basis_n = HarmonicBasis::get(n);
    table_[static_cast<size_t>(n)].assign(static_cast<size_t>(2 * n + 1),
                                          Eigen::MatrixXd());
    for (int m = -n; m <= n; ++m) {
      // admissible (nu, mu): 0 ≤ nu ≤ n, −nu ≤ mu ≤ nu, |m−mu| ≤ n−nu
      std::vector<std::pair<int, int>> idx;
      for (int nu = 0; nu <= n; ++nu)
        for (int mu = -nu; mu <= nu; ++mu)
          if (std::abs(m - mu) <= n - nu) idx.emplace_back(nu, mu);

      const int K = static_cast<int>(idx.size());
      const int npts = std::max(6 * K, 40);
      Eigen::MatrixXcd A(npts, K);
      Eigen::VectorXcd b(npts);
      for (int p = 0; p < npts; ++p) {
        const Vec3 xi(gauss(rng), gauss(rng), gauss(rng));
        const Vec3 z(gauss(rng), gauss(rng), gauss(rng));
        for (int c = 0; c < K; ++c) {
          const auto [nu, mu] = idx[static_cast<size_t>(c)];
          A(p, c) = HarmonicBasis::get(n - nu).eval_H(m - mu, z) *
                    HarmonicBasis::get(nu).eval_H(mu, xi);
        }
        b(p) = basis_n.eval_H(m, Vec3(xi + z));
      }

      // Real unknowns: stack real and imaginary parts.
      Eigen::MatrixXd A2(2 * npts, K);
      Eigen::VectorXd b2(2 * npts);
      A2 << A.real(), A.imag();
      b2 << b.real(), b.imag();
      Eigen::VectorXd C = A2.colPivHouseholderQr().solve(b2);
      const double resid = (A2 * C - b2).norm() / b2.norm();
      if (resid > 1e-10)
        throw std::runtime_error("translation_table: residual " + std::to_string(resid));

      Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n + 1, 2 * n + 1);
      for (int c = 0; c < K; ++c) {
        const auto [nu, mu] = idx[static_cast<size_t>(c)];
        dense(nu, mu + nu) = C(c);
      }
      table_[static_cast<size_t>(n)][static_cast<size_t>(m + n)] = std::move(dense);
    }
  }
}

double TranslationTable::C(int nu, int mu, int n, int m) const {
  if (n < 0 || n > n_max_ || std::abs(m) > n) return 0.0;
  if (nu < 0 || nu > n || std::abs(mu) > nu || std::abs(m - mu) > n - nu) return 0.0;
  return table_[static_cast<size_t>(n)][static_cast<size_t>(m + n)](nu, mu + nu);
}

SphereQuadrature sphere_quadrature(int exactness) {
  const int nt = std::max(1, (exactness + 2) / 2);  // Gauss–Legendre in cosθ
  const int np = std::max(4, exactness + 2);        // equiangular in φ

  // Gauss–Legendre nodes on [−1,1] by Newton iteration on P_nt.
  const auto Pc = legendre_coefficients(nt);
  const auto dPc = poly1d_derivative(Pc, 1);
  auto poly_eval = [](const std::vector<double>& c, double t) {
    double acc = 0.0;
    for (size_t j = c.size(); j-- > 0;) acc = acc * t + c[j];
    return acc;
  };

  SphereQuadrature q;
  for (int i = 1; i <= nt; ++i) {
    double t = std::cos(kPi * (i - 0.25) / (nt + 0.5));
    for (int it = 0; it < 100; ++it) {
      const double f = poly_eval(Pc, t);
      const double df = poly_eval(dPc, t);
      const double step = f / df;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const double dP = poly_eval(dPc, t);
    const double wt = 2.0 / ((1.0 - t * t) * dP * dP);
    const double st = std::sqrt(1.0 - t * t);
    for (int k = 0; k < np; ++k) {
      const double phi = 2.0 * kPi * k / np;
      q.points.emplace_back(st * std::cos(phi), st * std::sin(phi), t);
      q.weights.push_back(wt * 2.0 * kPi / np);
    }
  }
  return q;
}

}  // namespace gmpt
