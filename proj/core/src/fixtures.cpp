#include "tenstab/fixtures.hpp"

namespace tenstab {

OrthSheafModel builtin_example() {
  SheafModel sheaf(Space::P2, {{0, 2}, {0, 1}, {0, 0}});
  Mat q{{Rat(0), Rat(0), Rat(1, 2)},
        {Rat(0), Rat(1), Rat(1, 2)},
        {Rat(1, 2), Rat(1, 2), Rat(1)}};
  return OrthSheafModel{std::move(sheaf), TensorForm::bilinear(q, Symmetry::Symmetric),
                        FormKind::Orthogonal, std::nullopt};
}

SheafModel trivial_sheaf(int r, Space space) {
  std::vector<Summand> s(static_cast<size_t>(r), Summand{0, 0});
  return SheafModel(space, std::move(s));
}

TensorForm hyperbolic_form(int p) {
  Mat m(static_cast<size_t>(p), Vec(static_cast<size_t>(p), Rat(0)));
  for (int i = 0; i < p; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(p - 1 - i)] = Rat(1);
  return TensorForm::bilinear(m, Symmetry::Symmetric);
}

TensorForm identity_form(int p) { return TensorForm::bilinear(identity_mat(p), Symmetry::Symmetric); }

}  // namespace tenstab
