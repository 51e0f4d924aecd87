#include "tenstab/form.hpp"

#include <cmath>

#include "tenstab/errors.hpp"

namespace tenstab {

TensorForm::TensorForm(int arity, int copies, int dim, Symmetry sym)
    : arity_(arity), copies_(copies), dim_(dim), sym_(sym) {
  if (arity < 1 || copies < 1 || dim < 1)
    fail(Errc::Invariant, "tensor form needs arity, copies, dim >= 1");
  if (sym != Symmetry::None && (arity != 2 || copies != 1))
    fail(Errc::Invariant, "symmetry flags apply to s=2, c=1 forms only");
  size_t count = static_cast<size_t>(copies);
  for (int j = 0; j < arity; ++j) count *= static_cast<size_t>(dim);
  entries_.assign(count, Rat(0));
}

TensorForm TensorForm::bilinear(const Mat& m, Symmetry sym) {
  int p = static_cast<int>(m.size());
  TensorForm f(2, 1, p, sym);
  for (int i = 0; i < p; ++i) {
    if (static_cast<int>(m[static_cast<size_t>(i)].size()) != p)
      fail(Errc::Invariant, "bilinear form needs a square matrix");
    for (int j = 0; j < p; ++j) {
      int idx[2] = {i, j};
      f.set_entry(0, idx, m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
  }
  f.validate_symmetry();
  return f;
}

size_t TensorForm::offset(int copy, std::span<const int> idx) const {
  if (copy < 0 || copy >= copies_ || static_cast<int>(idx.size()) != arity_)
    fail(Errc::Invariant, "tensor index out of shape");
  size_t o = static_cast<size_t>(copy);
  for (int j = 0; j < arity_; ++j) {
    if (idx[static_cast<size_t>(j)] < 0 || idx[static_cast<size_t>(j)] >= dim_)
      fail(Errc::Invariant, "tensor index out of range");
    o = o * static_cast<size_t>(dim_) + static_cast<size_t>(idx[static_cast<size_t>(j)]);
  }
  return o;
}

const Rat& TensorForm::entry(int copy, std::span<const int> idx) const {
  return entries_[offset(copy, idx)];
}

void TensorForm::set_entry(int copy, std::span<const int> idx, const Rat& v) {
  entries_[offset(copy, idx)] = v;
}

bool TensorForm::is_zero() const {
  for (const Rat& e : entries_)
    if (e != Rat(0)) return false;
  return true;
}

Mat TensorForm::matrix() const {
  if (arity_ != 2 || copies_ != 1)
    fail(Errc::NotSupported, "matrix view requires s=2, c=1");
  Mat m(static_cast<size_t>(dim_), Vec(static_cast<size_t>(dim_), Rat(0)));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      int idx[2] = {i, j};
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry(0, idx);
    }
  return m;
}

void TensorForm::for_each_entry(
    const std::function<void(int, std::span<const int>, const Rat&)>& fn) const {
  std::vector<int> idx(static_cast<size_t>(arity_), 0);
  for (int k = 0; k < copies_; ++k) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      fn(k, idx, entries_[offset(k, idx)]);
      int j = arity_ - 1;
      while (j >= 0 && ++idx[static_cast<size_t>(j)] == dim_) {
        idx[static_cast<size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
    }
  }
}

void TensorForm::validate_symmetry() const {
  if (sym_ == Symmetry::None) return;
  Mat m = matrix();
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Rat& a = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const Rat& b = m[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (sym_ == Symmetry::Symmetric && a != b)
        fail(Errc::Invariant, "entries violate the symmetric flag");
      if (sym_ == Symmetry::Antisymmetric && a != -b)
        fail(Errc::Invariant, "entries violate the antisymmetric flag");
    }
}

}  // namespace tenstab
