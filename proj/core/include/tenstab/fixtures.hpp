#pragma once

#include "tenstab/orth.hpp"

namespace tenstab {

/// Built-in example: the split sheaf I_2 + I_1 + O on P2 (ideal sheaves of
/// two points and one point) with the symmetric pairing
/// [[0,0,1/2],[0,1,1/2],[1/2,1/2,1]]. The first summand is isotropic and its
/// perpendicular is I_2 + I_1.
OrthSheafModel builtin_example();

/// O^r on the given space.
SheafModel trivial_sheaf(int r, Space space);

/// Antidiagonal ones (hyperbolic pairing).
TensorForm hyperbolic_form(int p);

TensorForm identity_form(int p);

}  // namespace tenstab
