#include "tenstab/linalg.hpp"

#include <algorithm>

#include "tenstab/errors.hpp"

namespace tenstab {

int rref_in_place(Mat& m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = rows;
    for (size_t r = pivot_row; r < rows; ++r) {
      if (m[r][col] != Rat(0)) { sel = r; break; }
    }
    if (sel == rows) continue;
    std::swap(m[pivot_row], m[sel]);
    Rat inv = Rat(1) / m[pivot_row][col];
    for (size_t c = col; c < cols; ++c) m[pivot_row][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == Rat(0)) continue;
      Rat f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[pivot_row][c];
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

int rank_of(Mat m) { return rref_in_place(m); }

Rat det(const Mat& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(Errc::Invariant, "determinant of a non-square matrix");
  Mat a = m;
  Rat result(1);
  for (size_t col = 0; col < n; ++col) {
    size_t sel = n;
    for (size_t r = col; r < n; ++r) {
      if (a[r][col] != Rat(0)) { sel = r; break; }
    }
    if (sel == n) return Rat(0);
    if (sel != col) { std::swap(a[sel], a[col]); result = -result; }
    result *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == Rat(0)) continue;
      Rat f = a[r][col] * inv;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return result;
}

Vec normalize_primitive(Vec v) {
  Int lcm_den(1);
  for (const Rat& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, x.denominator());
  Int g(0);
  for (const Rat& x : v) g = boost::multiprecision::gcd(g, Int(x.numerator() * (lcm_den / x.denominator())));
  if (g == 0) return v;  // zero vector
  int lead = 0;
  for (const Rat& x : v) {
    if (x != Rat(0)) { lead = x.sign(); break; }
  }
  Rat scale = Rat(lcm_den, g) * Rat(lead);
  for (Rat& x : v) x *= scale;
  return v;
}

Mat kernel_basis(const Mat& m) {
  if (m.empty()) return {};
  Mat a = m;
  size_t cols = a[0].size();
  int rank = rref_in_place(a);
  std::vector<int> pivot_col_of_row(static_cast<size_t>(rank), -1);
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < rank; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      if (a[static_cast<size_t>(r)][c] != Rat(0)) {
        pivot_col_of_row[static_cast<size_t>(r)] = static_cast<int>(c);
        is_pivot[c] = true;
        break;
      }
    }
  }
  Mat basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(cols, Rat(0));
    v[free_col] = Rat(1);
    for (int r = 0; r < rank; ++r) {
      int pc = pivot_col_of_row[static_cast<size_t>(r)];
      v[static_cast<size_t>(pc)] = -a[static_cast<size_t>(r)][free_col];
    }
    basis.push_back(normalize_primitive(std::move(v)));
  }
  return basis;
}

bool in_span(const Mat& basis_rows, const Vec& v) {
  Mat m = basis_rows;
  int base = rref_in_place(m);
  m.push_back(v);
  return rref_in_place(m) == base;
}

Mat identity_mat(int n) {
  Mat m(static_cast<size_t>(n), Vec(static_cast<size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
  return m;
}

Vec unit_vec(int n, int i) {
  Vec v(static_cast<size_t>(n), Rat(0));
  v[static_cast<size_t>(i)] = Rat(1);
  return v;
}

}  // namespace tenstab
