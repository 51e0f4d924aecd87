#pragma once

#include <vector>

#include "tenstab/rational.hpp"

namespace tenstab {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row major

/// Reduced row echelon form in place; returns the rank.
int rref_in_place(Mat& m);
int rank_of(Mat m);

/// Determinant of a square matrix by fraction-free style elimination over Rat.
Rat det(const Mat& m);

/// Canonical basis of the right kernel {v : m v = 0}. Each basis vector is
/// scaled to a primitive integer vector whose first nonzero entry is positive.
Mat kernel_basis(const Mat& m);

/// Scale a rational vector to a primitive integer vector, first nonzero > 0.
Vec normalize_primitive(Vec v);

/// True if v lies in the row span of basis_rows.
bool in_span(const Mat& basis_rows, const Vec& v);

Mat identity_mat(int n);
Vec unit_vec(int n, int i);

}  // namespace tenstab
