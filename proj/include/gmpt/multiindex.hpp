#pragma once

// Multi-index and tensor-tuple arithmetic: the index bookkeeping shared by the
// polynomial, harmonic and tensor-coefficient layers.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gmpt {

using Vec3 = Eigen::Vector3d;

// Ordered triple of non-negative exponents (b1, b2, b3) with the usual
// conventions: order |b| = b1+b2+b3, factorial b! = b1!b2!b3!, and the
// monomial x^b = x1^b1 x2^b2 x3^b3.
class MultiIndex {
 public:
  constexpr MultiIndex() : b_{0, 0, 0} {}
  constexpr MultiIndex(int b1, int b2, int b3) : b_{b1, b2, b3} {
    if (b1 < 0 || b2 < 0 || b3 < 0)
      throw std::invalid_argument("MultiIndex: negative exponent");
  }

  constexpr int operator[](int i) const { return b_[static_cast<size_t>(i)]; }
  constexpr int order() const { return b_[0] + b_[1] + b_[2]; }

  std::int64_t factorial() const {
    auto f = [](int n) {
      std::int64_t r = 1;
      for (int i = 2; i <= n; ++i) r *= i;
      return r;
    };
    return f(b_[0]) * f(b_[1]) * f(b_[2]);
  }

  double monomial(const Vec3& x) const {
    auto p = [](double v, int n) {
      double r = 1.0;
      for (int i = 0; i < n; ++i) r *= v;
      return r;
    };
    return p(x[0], b_[0]) * p(x[1], b_[1]) * p(x[2], b_[2]);
  }

  // Exponent raised/lowered along one axis; lowering below zero is a domain error.
  MultiIndex raised(int axis) const {
    std::array<int, 3> c = b_;
    c[static_cast<size_t>(axis)] += 1;
    return MultiIndex(c[0], c[1], c[2]);
  }
  MultiIndex lowered(int axis) const {
    std::array<int, 3> c = b_;
    c[static_cast<size_t>(axis)] -= 1;
    return MultiIndex(c[0], c[1], c[2]);
  }

  MultiIndex operator+(const MultiIndex& o) const {
    return MultiIndex(b_[0] + o.b_[0], b_[1] + o.b_[1], b_[2] + o.b_[2]);
  }

  bool operator==(const MultiIndex& o) const { return b_ == o.b_; }
  bool operator!=(const MultiIndex& o) const { return b_ != o.b_; }

  // Graded-lexicographic order: by total order first, then lexicographically
  // by (b1, b2, b3) with larger leading exponents first.  This is the
  // canonical enumeration and serialization order.
  bool operator<(const MultiIndex& o) const {
    if (order() != o.order()) return order() < o.order();
    return b_ > o.b_;  // descending lexicographic within a degree
  }

  // Serialized form used by every external interface: "b1.b2.b3".
  std::string str() const {
    return std::to_string(b_[0]) + "." + std::to_string(b_[1]) + "." +
           std::to_string(b_[2]);
  }
  static MultiIndex parse(const std::string& s);

 private:
  std::array<int, 3> b_;
};

// Highest total order handled anywhere in the library (truncation cap M <= 6).
inline constexpr int kMaxOrder = 6;

// All multi-indices of exactly the given total order, graded-lex order
// (first entry of order n is (n,0,0)).  Size C(order+2, 2).
std::vector<MultiIndex> enumerate_multiindices(int order);

// All multi-indices with total order <= max_order, graded-lex across degrees.
std::vector<MultiIndex> enumerate_multiindices_upto(int max_order);

// Ordered tuple J(p) with entries in {1,2,3} (1-based axes as in tensor-index
// notation).  The associated product is (Pi(xi))_{J(p)} = xi_{j1}...xi_{jp};
// the empty tuple gives 1.
using TensorTuple = std::vector<int>;

// Counts axis occurrences: tuple [1,3] -> (1,0,1).  Entries outside {1,2,3}
// are a domain error.
MultiIndex tuple_to_multiindex(const TensorTuple& t);

// (Pi(xi))_{J(p)}: product of the selected components.
double tuple_product(const TensorTuple& t, const Vec3& xi);

// All tuples of the given length (3^p of them), lexicographic.
std::vector<TensorTuple> enumerate_tuples(int length);

// Number of length-p tuples mapping to b, i.e. the multinomial p!/b! with
// p = |b|.
std::int64_t tuple_multiplicity(const MultiIndex& b);

// ---------------------------------------------------------------------------
// Inline small implementations (kept header-only for use in constexpr-ish
// contexts and to keep the dependency graph flat).
// ---------------------------------------------------------------------------

inline std::vector<MultiIndex> enumerate_multiindices(int order) {
  if (order < 0) throw std::invalid_argument("enumerate_multiindices: order < 0");
  std::vector<MultiIndex> out;
  for (int b1 = order; b1 >= 0; --b1)
    for (int b2 = order - b1; b2 >= 0; --b2)
      out.emplace_back(b1, b2, order - b1 - b2);
  return out;
}

inline std::vector<MultiIndex> enumerate_multiindices_upto(int max_order) {
  std::vector<MultiIndex> out;
  for (int n = 0; n <= max_order; ++n) {
    auto level = enumerate_multiindices(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline MultiIndex tuple_to_multiindex(const TensorTuple& t) {
  std::array<int, 3> c{0, 0, 0};
  for (int axis : t) {
    if (axis < 1 || axis > 3)
      throw std::invalid_argument("tuple_to_multiindex: entry outside {1,2,3}");
    c[static_cast<size_t>(axis - 1)] += 1;
  }
  return MultiIndex(c[0], c[1], c[2]);
}

inline double tuple_product(const TensorTuple& t, const Vec3& xi) {
  double r = 1.0;
  for (int axis : t) r *= xi[axis - 1];
  return r;
}

inline std::vector<TensorTuple> enumerate_tuples(int length) {
  std::vector<TensorTuple> out;
  TensorTuple cur(static_cast<size_t>(length), 1);
  if (length == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = length - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == 3) {
      cur[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    cur[static_cast<size_t>(i)] += 1;
  }
  return out;
}

inline std::int64_t tuple_multiplicity(const MultiIndex& b) {
  std::int64_t pf = 1;
  for (int i = 2; i <= b.order(); ++i) pf *= i;
  return pf / b.factorial();
}

inline MultiIndex MultiIndex::parse(const std::string& s) {
  std::array<int, 3> c{0, 0, 0};
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t dot = (i < 2) ? s.find('.', pos) : s.size();
    if (dot == std::string::npos)
      throw std::invalid_argument("MultiIndex::parse: expected b1.b2.b3, got " + s);
    c[static_cast<size_t>(i)] = std::stoi(s.substr(pos, dot - pos));
    pos = dot + 1;
  }
  return MultiIndex(c[0], c[1], c[2]);
}

}  // namespace gmpt
