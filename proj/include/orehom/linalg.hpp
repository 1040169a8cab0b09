#pragma once

#include <cstddef>
#include <vector>

#include "orehom/scalar.hpp"

namespace orehom {

struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Scalar(0)) {}
  Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }
  static Mat identity(std::size_t n);
  bool operator==(const Mat& o) const = default;
};

Mat mat_add(const ScalarRing& ring, const Mat& x, const Mat& y);
Mat mat_sub(const ScalarRing& ring, const Mat& x, const Mat& y);
Mat mat_scale(const ScalarRing& ring, const Scalar& c, const Mat& x);
Mat mat_mul(const ScalarRing& ring, const Mat& x, const Mat& y);
std::vector<Scalar> mat_apply(const ScalarRing& ring, const Mat& m,
                              const std::vector<Scalar>& v);
bool mat_is_zero(const ScalarRing& ring, const Mat& m);
bool mat_eq(const ScalarRing& ring, const Mat& x, const Mat& y);

// In-place reduced row echelon form; returns pivot column per pivot row.
// Requires a field (NotAField over Z).
std::vector<std::size_t> rref(const ScalarRing& ring, Mat& m);

std::size_t rank(const ScalarRing& ring, Mat m);

// Solution set of A x = b over a field, in canonical RREF parameterization:
// particular solution with free variables set to 0, kernel basis with one
// unit free variable each, ordered by free column index.
struct AffineSolutionSet {
  bool consistent = false;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
  std::size_t kernel_dim() const { return kernel.size(); }
};

AffineSolutionSet solve_affine(const ScalarRing& ring, const Mat& A,
                               const std::vector<Scalar>& b);

// All points of an affine set over F_p (p^kdim points, lexicographically
// ordered by free-variable assignment). EnumerationBudgetExceeded if the
// count exceeds cap.
std::vector<std::vector<Scalar>> enumerate_affine(
    const ScalarRing& ring, const AffineSolutionSet& set,
    std::uint64_t cap = kEnumerationCap);

bool in_span(const ScalarRing& ring,
             const std::vector<std::vector<Scalar>>& vectors,
             const std::vector<Scalar>& v);

}  // namespace orehom
