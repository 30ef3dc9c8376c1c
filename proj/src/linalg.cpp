#include "ksg/linalg.hpp"

#include <utility>

namespace ksg {

bool is_zero(const Mat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_identity(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  return m == Mat::Identity(m.rows(), m.cols());
}

int compare_real_lex(const Vec& u, const Vec& v) {
  for (Eigen::Index i = 0; i < u.size() && i < v.size(); ++i) {
    int c = (u(i) - v(i)).sign();
    if (c != 0) return c;
  }
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  return 0;
}

namespace {

// Scales v by the unique positive rational making all coefficients (rational
// and radical parts alike) integers with overall content 1, then flips the
// sign so the first nonzero entry is positive.
Vec content_normalize(Vec v) {
  Integer lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v(i).rational_part().get_den_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v(i).radical_part().get_den_mpz_t());
  }
  QuadExt scale = Rational(lcm_den);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) *= scale;

  Integer content = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v(i).rational_part().get_num_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v(i).radical_part().get_num_mpz_t());
  }
  if (content > 1) {
    QuadExt inv_content = make_rational(Integer(1), content);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) *= inv_content;
  }

  for (Eigen::Index i = 0; i < v.size(); ++i) {
    int s = v(i).sign();
    if (s == 0) continue;
    if (s < 0)
      for (Eigen::Index j = i; j < v.size(); ++j) v(j) = -v(j);
    break;
  }
  return v;
}

}  // namespace

Ray::Ray(const Vec& entries, long ambient_radical) : radical_(ambient_radical) {
  if (ambient_radical != 0) validate_radical(ambient_radical);
  Eigen::Index first = -1;
  for (Eigen::Index i = 0; i < entries.size(); ++i) {
    if (!entries(i).is_zero()) {
      first = i;
      break;
    }
  }
  if (first < 0) throw ValidationError("a ray cannot be the zero vector");
  if (entries.size() < 2) throw ValidationError("ray dimension must be >= 2");

  // Dividing by the first nonzero entry picks a unique representative of the
  // full field-scaling orbit; content normalization then gives integer
  // coefficients.
  QuadExt lead_inv = entries(first).inverse();
  Vec w = entries;
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) *= lead_inv;
  Vec a = content_normalize(std::move(w));

  if (ambient_radical >= 2) {
    Vec scaled = a;
    QuadExt root = QuadExt::sqrt_of(ambient_radical);
    for (Eigen::Index i = 0; i < scaled.size(); ++i) scaled(i) *= root;
    Vec b = content_normalize(std::move(scaled));
    entries_ = compare_real_lex(b, a) < 0 ? std::move(b) : std::move(a);
  } else {
    entries_ = std::move(a);
  }
}

Projector::Projector(Mat matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw ValidationError("projector matrix must be square");
  if (!(matrix_ == Mat(matrix_.transpose()))) {
    throw ValidationError("projector matrix must be symmetric");
  }
  if (!(Mat(matrix_ * matrix_) == matrix_)) {
    throw ValidationError("projector matrix must be idempotent");
  }
  QuadExt tr = matrix_.trace();
  if (!tr.is_rational() || tr.rational_part().get_den() != 1 || tr.rational_part() < 1) {
    throw ValidationError("projector trace must be a positive integer, got " + to_string(tr));
  }
  rank_ = static_cast<int>(tr.rational_part().get_num().get_si());
}

Projector Projector::from_ray(const Vec& u) {
  QuadExt n2 = norm2(u);
  if (n2.is_zero()) throw ValidationError("cannot project onto the zero vector");
  QuadExt scale = n2.inverse();
  Mat p(u.size(), u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i)
    for (Eigen::Index j = 0; j < u.size(); ++j) p(i, j) = u(i) * u(j) * scale;
  return Projector(std::move(p));
}

PureState::PureState(Mat coeff) : coeff_(std::move(coeff)), norm2_(0) {
  for (Eigen::Index j = 0; j < coeff_.cols(); ++j)
    for (Eigen::Index i = 0; i < coeff_.rows(); ++i) norm2_ += coeff_(i, j) * coeff_(i, j);
  if (norm2_.is_zero()) throw ValidationError("pure state coefficient grid is zero");
}

int row_reduce(Mat& m, std::vector<int>* pivot_columns) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = pivot_row; i < rows; ++i) {
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) m.row(sel).swap(m.row(pivot_row));
    QuadExt inv_p = m(pivot_row, col).inverse();
    for (Eigen::Index i = pivot_row + 1; i < rows; ++i) {
      if (m(i, col).is_zero()) continue;
      QuadExt f = m(i, col) * inv_p;
      for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= f * m(pivot_row, j);
    }
    if (pivot_columns) pivot_columns->push_back(static_cast<int>(col));
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

std::vector<int> independent_columns(const Mat& m) {
  Mat work = m;
  std::vector<int> cols;
  row_reduce(work, &cols);
  return cols;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  Mat aug(n, 2 * n);
  aug << m, Mat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = col; i < n; ++i) {
      if (!aug(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) throw ValidationError("matrix is singular");
    if (sel != col) aug.row(sel).swap(aug.row(col));
    QuadExt inv_p = aug(col, col).inverse();
    for (Eigen::Index j = col; j < 2 * n; ++j) aug(col, j) *= inv_p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || aug(i, col).is_zero()) continue;
      QuadExt f = aug(i, col);
      for (Eigen::Index j = col; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  return aug.rightCols(n);
}

Projector support_projector(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("support of non-square matrix");
  if (is_zero(m)) throw ValidationError("zero matrix has empty support");
  std::vector<int> cols = independent_columns(m);
  Mat basis(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) basis.col(static_cast<Eigen::Index>(k)) = m.col(cols[k]);
  Mat gram = basis.transpose() * basis;
  return Projector(basis * inverse(gram) * basis.transpose());
}

Mat reduced_alice_post(const PureState& state, const Projector& pi) {
  if (pi.dim() != state.dim_a()) {
    throw DimensionMismatch("Alice-side projector dimension " + std::to_string(pi.dim()) +
                            " != " + std::to_string(state.dim_a()));
  }
  const Mat& c = state.coeff();
  return pi.matrix() * (c * c.transpose()) * pi.matrix();
}

Mat reduced_alice_pre(const PureState& state, const Projector& pi) {
  if (pi.dim() != state.dim_b()) {
    throw DimensionMismatch("Bob-side projector dimension " + std::to_string(pi.dim()) +
                            " != " + std::to_string(state.dim_b()));
  }
  const Mat& c = state.coeff();
  return c * pi.matrix() * c.transpose();
}

}  // namespace ksg
