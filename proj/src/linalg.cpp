#include "orehom/linalg.hpp"

#include <algorithm>

namespace orehom {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat mat_add(const ScalarRing& ring, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    fail(ErrorKind::BadShape, "matrix addition shape mismatch");
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i)
    r.a[i] = ring.add(x.a[i], y.a[i]);
  return r;
}

Mat mat_sub(const ScalarRing& ring, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    fail(ErrorKind::BadShape, "matrix subtraction shape mismatch");
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i)
    r.a[i] = ring.sub(x.a[i], y.a[i]);
  return r;
}

Mat mat_scale(const ScalarRing& ring, const Scalar& c, const Mat& x) {
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = ring.mul(c, x.a[i]);
  return r;
}

Mat mat_mul(const ScalarRing& ring, const Mat& x, const Mat& y) {
  if (x.cols != y.rows)
    fail(ErrorKind::BadShape, "matrix product shape mismatch");
  Mat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (ring.is_zero(x.at(i, k))) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) =
            ring.add(r.at(i, j), ring.mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

std::vector<Scalar> mat_apply(const ScalarRing& ring, const Mat& m,
                              const std::vector<Scalar>& v) {
  if (m.cols != v.size())
    fail(ErrorKind::BadShape, "matrix apply shape mismatch");
  std::vector<Scalar> r(m.rows, Scalar(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      r[i] = ring.add(r[i], ring.mul(m.at(i, j), v[j]));
  return r;
}

bool mat_is_zero(const ScalarRing& ring, const Mat& m) {
  return std::all_of(m.a.begin(), m.a.end(),
                     [&](const Scalar& x) { return ring.is_zero(x); });
}

bool mat_eq(const ScalarRing& ring, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (!ring.eq(x.a[i], y.a[i])) return false;
  return true;
}

std::vector<std::size_t> rref(const ScalarRing& ring, Mat& m) {
  if (!ring.is_field())
    fail(ErrorKind::NotAField, "row reduction requires a field, got Z");
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && ring.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(sel, j), m.at(row, j));
    Scalar inv = ring.inv(m.at(row, col));
    for (std::size_t j = 0; j < m.cols; ++j)
      m.at(row, j) = ring.mul(inv, m.at(row, j));
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || ring.is_zero(m.at(i, col))) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = ring.sub(m.at(i, j), ring.mul(f, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const ScalarRing& ring, Mat m) {
  if (ring.kind == RingKind::Integers) {
    // torsion-free setting: rank over the fraction field
    return rank(ScalarRing::Q(), std::move(m));
  }
  return rref(ring, m).size();
}

AffineSolutionSet solve_affine(const ScalarRing& ring, const Mat& A,
                               const std::vector<Scalar>& b) {
  if (A.rows != b.size())
    fail(ErrorKind::BadShape, "solve_affine shape mismatch");
  if (!ring.is_field())
    fail(ErrorKind::NotAField, "linear solving requires a field, got Z");
  Mat aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<std::size_t> pivots = rref(ring, aug);
  AffineSolutionSet out;
  if (!pivots.empty() && pivots.back() == A.cols) {
    out.consistent = false;
    return out;
  }
  out.consistent = true;
  std::vector<bool> is_pivot(A.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  out.particular.assign(A.cols, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    out.particular[pivots[r]] = aug.at(r, A.cols);
  for (std::size_t free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> k(A.cols, Scalar(0));
    k[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k[pivots[r]] = ring.neg(aug.at(r, free));
    out.kernel.push_back(std::move(k));
  }
  return out;
}

std::vector<std::vector<Scalar>> enumerate_affine(
    const ScalarRing& ring, const AffineSolutionSet& set, std::uint64_t cap) {
  std::vector<std::vector<Scalar>> out;
  if (!set.consistent) return out;
  if (set.kernel.empty()) {
    out.push_back(set.particular);
    return out;
  }
  if (ring.kind != RingKind::PrimeField)
    fail(ErrorKind::NotAField,
         "point enumeration of a positive-dimensional set requires F_p");
  std::uint64_t p = static_cast<std::uint64_t>(ring.p);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < set.kernel.size(); ++i) {
    if (count > cap / p)
      fail(ErrorKind::EnumerationBudgetExceeded,
           "p^" + std::to_string(set.kernel.size()) + " points exceed cap " +
               std::to_string(cap));
    count *= p;
  }
  std::size_t n = set.particular.size();
  std::vector<std::uint64_t> digits(set.kernel.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = set.kernel.size(); i-- > 0;) {
      digits[i] = t % p;
      t /= p;
    }
    std::vector<Scalar> v = set.particular;
    for (std::size_t i = 0; i < set.kernel.size(); ++i) {
      if (digits[i] == 0) continue;
      Scalar c(BigInt(digits[i]));
      for (std::size_t j = 0; j < n; ++j)
        v[j] = ring.add(v[j], ring.mul(c, set.kernel[i][j]));
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_span(const ScalarRing& ring,
             const std::vector<std::vector<Scalar>>& vectors,
             const std::vector<Scalar>& v) {
  if (vectors.empty())
    return std::all_of(v.begin(), v.end(),
                       [&](const Scalar& x) { return ring.is_zero(x); });
  std::size_t n = v.size();
  Mat A(n, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) A.at(i, j) = vectors[j][i];
  return solve_affine(ring, A, v).consistent;
}

}  // namespace orehom
