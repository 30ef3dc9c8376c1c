#pragma once

#include <Eigen/Core>

#include <vector>

#include "ksg/quadext.hpp"

namespace ksg {

using Mat = Eigen::Matrix<QuadExt, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<QuadExt, Eigen::Dynamic, 1>;

// Exact Euclidean inner product. Entries are real, so no conjugation.
template <typename DerivedU, typename DerivedV>
QuadExt inner(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("inner product of vectors with sizes " + std::to_string(u.size()) +
                            " and " + std::to_string(v.size()));
  }
  QuadExt acc = 0;
  for (Eigen::Index i = 0; i < u.size(); ++i) acc += u(i) * v(i);
  return acc;
}

template <typename Derived>
QuadExt norm2(const Eigen::MatrixBase<Derived>& u) {
  return inner(u, u);
}

bool is_zero(const Mat& m);
bool is_identity(const Mat& m);

// Entrywise real-number lexicographic comparison: -1, 0, +1.
int compare_real_lex(const Vec& u, const Vec& v);

// A projective ray, stored as the canonical representative of
// { lambda * v : lambda in Q(sqrt(r)), lambda != 0 }. The representative has
// integer coefficients with overall content 1 and a positive first nonzero
// entry; among the two such vectors in the orbit (they differ by a sqrt(r)
// factor) the entrywise smaller one is kept.
class Ray {
 public:
  Ray(const Vec& entries, long ambient_radical);

  const Vec& entries() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.size()); }
  long ambient_radical() const { return radical_; }

  friend bool operator==(const Ray& x, const Ray& y) {
    return x.dim() == y.dim() && compare_real_lex(x.entries_, y.entries_) == 0;
  }
  friend bool operator!=(const Ray& x, const Ray& y) { return !(x == y); }
  friend bool operator<(const Ray& x, const Ray& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    return compare_real_lex(x.entries_, y.entries_) < 0;
  }

 private:
  Vec entries_;
  long radical_;
};

// Square, symmetric, exactly idempotent matrix together with its rank.
class Projector {
 public:
  // Validates symmetry and idempotence; rank = trace (must be a positive integer).
  explicit Projector(Mat matrix);

  static Projector from_ray(const Vec& u);  // outer(u,u) / norm2(u)
  static Projector from_ray(const Ray& u) { return from_ray(u.entries()); }

  const Mat& matrix() const { return matrix_; }
  int rank() const { return rank_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  friend bool operator==(const Projector& x, const Projector& y) {
    return x.matrix_ == y.matrix_;
  }

 private:
  Mat matrix_;
  int rank_;
};

// Bipartite pure state |psi> = sum_ij coeff(i,j) |i>|j>, kept unnormalized;
// norm2 = sum of squared coefficients.
class PureState {
 public:
  explicit PureState(Mat coeff);

  const Mat& coeff() const { return coeff_; }
  const QuadExt& norm2() const { return norm2_; }
  int dim_a() const { return static_cast<int>(coeff_.rows()); }
  int dim_b() const { return static_cast<int>(coeff_.cols()); }

 private:
  Mat coeff_;
  QuadExt norm2_;
};

// Row echelon reduction in place (exact division, leftmost pivot, first
// nonzero row). Returns the rank; pivot column indices appended if requested.
int row_reduce(Mat& m, std::vector<int>* pivot_columns = nullptr);

// Indices of a maximal linearly independent column subset (leftmost-greedy).
std::vector<int> independent_columns(const Mat& m);

// Exact inverse by Gauss-Jordan elimination. Throws ValidationError if singular.
Mat inverse(const Mat& m);

// Projector onto the column space of a symmetric PSD matrix, computed as
// M (M^T M)^-1 M^T over a maximal independent column subset M.
// Throws ValidationError on the zero matrix.
Projector support_projector(const Mat& m);

// Unnormalized reduced operators on Alice's space for a projective outcome:
// post-measurement on Alice's side  Pi C C^T Pi, and pre-measurement
// conditioned on Bob's outcome  C Pi C^T (real entries, so Bob's projector
// enters untransposed). Callers normalize by the exact trace when needed.
Mat reduced_alice_post(const PureState& state, const Projector& pi);
Mat reduced_alice_pre(const PureState& state, const Projector& pi);

}  // namespace ksg
