#include "tenstab/orth.hpp"

#include <algorithm>

#include "tenstab/errors.hpp"

namespace tenstab {

namespace {

Mat slots_basis(int dim, const std::vector<int>& slots) {
  Mat b;
  for (int s : slots) {
    if (s < 0 || s >= dim) fail(Errc::Invariant, "slot out of range");
    b.push_back(unit_vec(dim, s));
  }
  return b;
}

void check_bilinear(const TensorForm& q) {
  if (q.arity() != 2 || q.copies() != 1)
    fail(Errc::NotSupported, "orthogonal machinery requires a bilinear form (s=2, c=1)");
}

// Q restricted to U x W as basisU * Q * basisW^T.
Mat restrict_form(const Mat& q, const Mat& bu, const Mat& bw) {
  Mat out(bu.size(), Vec(bw.size(), Rat(0)));
  for (size_t i = 0; i < bu.size(); ++i)
    for (size_t j = 0; j < bw.size(); ++j) {
      Rat acc(0);
      for (size_t a = 0; a < q.size(); ++a) {
        if (bu[i][a] == Rat(0)) continue;
        for (size_t b = 0; b < q.size(); ++b) acc += bu[i][a] * q[a][b] * bw[j][b];
      }
      out[i][j] = acc;
    }
  return out;
}

bool matrix_zero(const Mat& m) {
  for (const Vec& row : m)
    for (const Rat& x : row)
      if (x != Rat(0)) return false;
  return true;
}

}  // namespace

OrthValidation validate(const OrthSheafModel& model) {
  check_bilinear(model.form);
  OrthValidation rep;
  const SheafModel& E = model.sheaf;
  int r = E.rank();
  bool symplectic = model.kind == FormKind::Symplectic;

  if (model.form.dim() != r)
    fail(Errc::RankMismatch, "form dimension must equal the sheaf rank");

  int degree = E.degree();
  if (symplectic) {
    rep.checks.push_back({"OS1", degree == 0 && r % 2 == 0,
                          degree != 0 ? "det E is not trivial (twists must sum to 0)"
                                      : (r % 2 ? "symplectic rank must be even" : "")});
  } else {
    rep.checks.push_back({"OS1", degree == 0,
                          degree != 0 ? "(det E)^2 has nonzero degree (twists must sum to 0)" : ""});
  }

  Mat q = model.form.matrix();
  bool sym_ok = true;
  for (int i = 0; i < r && sym_ok; ++i)
    for (int j = 0; j < r && sym_ok; ++j) {
      const Rat& a = q[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const Rat& b = q[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (symplectic ? (a != -b) : (a != b)) sym_ok = false;
    }
  rep.checks.push_back({"OS2", sym_ok, symplectic ? "form must be antisymmetric" : "form must be symmetric"});

  rep.checks.push_back({"OS3", true, "split models are torsion free by construction"});

  rep.det = det(q);
  rep.checks.push_back({"OS4", rep.det != Rat(0), rep.det == Rat(0) ? "the pairing is degenerate" : ""});

  // constant entries may only pair summands of opposite twist
  bool pairing_ok = true;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (q[static_cast<size_t>(i)][static_cast<size_t>(j)] != Rat(0) &&
          E.summands()[static_cast<size_t>(i)].twist + E.summands()[static_cast<size_t>(j)].twist != 0)
        pairing_ok = false;
  rep.checks.push_back({"twist-pairing", pairing_ok,
                        pairing_ok ? "" : "nonzero entries must pair opposite twists"});

  if (model.psi) {
    rep.checks.push_back({"SOS1", model.psi->sign() != 0 && degree == 0,
                          "psi must be a nonzero trivialization of det E"});
    rep.checks.push_back({"SOS5", rep.det == (*model.psi) * (*model.psi),
                          "det(form) must equal psi^2"});
  }
  return rep;
}

Mat perp_subspace(const TensorForm& q, const Mat& basis_f) {
  check_bilinear(q);
  Mat rows;
  Mat m = q.matrix();
  for (const Vec& f : basis_f) {
    Vec row(static_cast<size_t>(q.dim()), Rat(0));
    for (int b = 0; b < q.dim(); ++b) {
      Rat acc(0);
      for (int a = 0; a < q.dim(); ++a) acc += f[static_cast<size_t>(a)] * m[static_cast<size_t>(a)][static_cast<size_t>(b)];
      row[static_cast<size_t>(b)] = acc;
    }
    rows.push_back(std::move(row));
  }
  return kernel_basis(rows);
}

PerpResult perp(const OrthSheafModel& model, const std::vector<int>& slots) {
  check_bilinear(model.form);
  Rat d = det(model.form.matrix());
  if (d == Rat(0)) fail(Errc::Degenerate, "perp needs a nondegenerate pairing");
  Mat bf = slots_basis(model.form.dim(), slots);
  PerpResult res;
  res.basis = perp_subspace(model.form, bf);
  res.rank = static_cast<int>(res.basis.size());
  res.degree_of_f = Rat(model.sheaf.subset_degree(slots));

  // coordinate when every basis vector is a unit vector
  std::vector<int> pslots;
  bool coordinate = true;
  for (const Vec& v : res.basis) {
    int nonzero = -1;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == Rat(0)) continue;
      if (nonzero >= 0 || v[i] != Rat(1)) { nonzero = -2; break; }
      nonzero = static_cast<int>(i);
    }
    if (nonzero < 0) { coordinate = false; break; }
    pslots.push_back(nonzero);
  }
  if (coordinate) {
    std::sort(pslots.begin(), pslots.end());
    res.slots = pslots;
    res.hilbert = model.sheaf.subset_hilbert(pslots);
  }
  return res;
}

bool is_isotropic(const TensorForm& q, const Mat& basis_f) {
  check_bilinear(q);
  if (basis_f.empty()) return true;  // the zero subspace is vacuously isotropic
  return matrix_zero(restrict_form(q.matrix(), basis_f, basis_f));
}

bool is_isotropic(const TensorForm& q, const std::vector<int>& slots) {
  return is_isotropic(q, slots_basis(q.dim(), slots));
}

std::vector<IsotropicDatum> coordinate_isotropic_family(const OrthSheafModel& model) {
  check_bilinear(model.form);
  int r = model.sheaf.rank();
  std::vector<IsotropicDatum> family;
  for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
    std::vector<int> slots;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) slots.push_back(i);
    if (!is_isotropic(model.form, slots)) continue;
    PerpResult pr = perp(model, slots);
    if (!pr.hilbert) continue;  // non-coordinate perp: Hilbert data not derivable
    IsotropicDatum d;
    d.slots = slots;
    d.rank = static_cast<int>(slots.size());
    d.hilbert_f = model.sheaf.subset_hilbert(slots);
    d.hilbert_perp = *pr.hilbert;
    d.degree_f = Rat(model.sheaf.subset_degree(slots));
    family.push_back(std::move(d));
  }
  std::sort(family.begin(), family.end(), [](const IsotropicDatum& a, const IsotropicDatum& b) {
    return std::make_pair(a.rank, *a.slots) < std::make_pair(b.rank, *b.slots);
  });
  return family;
}

namespace {

void validate_datum(const OrthSheafModel& model, const IsotropicDatum& d) {
  int r = model.sheaf.rank();
  Mat basis = d.basis ? *d.basis : (d.slots ? slots_basis(r, *d.slots) : Mat{});
  if (basis.empty()) fail(Errc::InvalidDatum, "isotropic datum needs slots or a basis");
  if (static_cast<int>(basis.size()) != d.rank)
    fail(Errc::InvalidDatum, "datum rank must match its subspace dimension");
  if (!is_isotropic(model.form, basis))
    fail(Errc::InvalidDatum, "the subsheaf is not isotropic under the pairing");
  if (d.rank <= 0 || d.rank >= r) fail(Errc::InvalidDatum, "isotropic rank must be proper");
  Space sp = model.sheaf.space();
  if (d.hilbert_f.degree() != space_dim(sp) || d.hilbert_perp.degree() != space_dim(sp))
    fail(Errc::InvalidDatum, "isotropic datum needs full-degree Hilbert polynomials");
  if (degree_of(d.hilbert_perp, r - d.rank, sp) != degree_of(d.hilbert_f, d.rank, sp))
    fail(Errc::InvalidDatum, "deg F^perp must equal deg F for saturated F");
}

}  // namespace

StabilityVerdict orth_stability(const OrthSheafModel& model, OrthMode mode,
                                const std::vector<IsotropicDatum>& isotropics) {
  OrthValidation val = validate(model);
  if (!val.all_passed()) fail(Errc::InvalidDatum, "the model fails its axioms; run validate");
  const EvPoly P = model.sheaf.hilbert();
  StabilityVerdict verdict;
  verdict.status = Status::Stable;
  verdict.relative_to_family = true;
  for (const IsotropicDatum& d : isotropics) {
    validate_datum(model, d);
    int sign;
    Certificate cert;
    Step f_step = d.slots ? coordinate_step(model.sheaf, *d.slots)
                          : subspace_step(model.sheaf, *d.basis, d.hilbert_f, d.label);
    cert.filtration.steps = {f_step};
    cert.filtration.weights = {Rat(1)};
    if (mode == OrthMode::Gieseker) {
      EvPoly lhs = d.hilbert_f + d.hilbert_perp - P;
      sign = sign_eventual(lhs);
      cert.lhs = std::move(lhs);
      cert.slope_mode = false;
    } else {
      Rat lhs = d.degree_f;
      sign = lhs.sign();
      cert.slope_lhs = lhs;
      cert.slope_mode = true;
    }
    if (sign > 0) {
      verdict.status = Status::Unstable;
      verdict.relative_to_family = false;
      verdict.certificate = std::move(cert);
      return verdict;
    }
    if (sign == 0 && verdict.status == Status::Stable) {
      verdict.status = Status::StrictlySemistable;
      verdict.certificate = std::move(cert);
    }
  }
  return verdict;
}

BridgeResult critgm_bridge(const OrthSheafModel& model, const IsotropicDatum& datum) {
  validate_datum(model, datum);
  int r = model.sheaf.rank();
  Mat basis_f = datum.basis ? *datum.basis : slots_basis(r, *datum.slots);
  Mat basis_perp = perp_subspace(model.form, basis_f);
  if (static_cast<int>(basis_perp.size()) != r - datum.rank)
    fail(Errc::RankMismatch, "rk F^perp must equal r - rk F");
  for (const Vec& f : basis_f)
    if (!in_span(basis_perp, f))
      fail(Errc::InvalidDatum, "an isotropic F must sit inside F^perp");

  BridgeResult out;
  std::vector<Step> steps;
  Step f_step = datum.slots ? coordinate_step(model.sheaf, *datum.slots)
                            : subspace_step(model.sheaf, basis_f, datum.hilbert_f, datum.label);
  steps.push_back(f_step);
  std::vector<Rat> weights{Rat(1)};
  if (static_cast<int>(basis_perp.size()) > datum.rank) {
    Step p_step = subspace_step(model.sheaf, basis_perp, datum.hilbert_perp, "perp");
    // prefer the coordinate description when the perp is coordinate
    if (datum.slots) {
      PerpResult pr = perp(model, *datum.slots);
      if (pr.slots) p_step = coordinate_step(model.sheaf, *pr.slots);
    }
    steps.push_back(p_step);
    weights.push_back(Rat(1));
  }

  std::vector<int> ranks;
  for (const Step& st : steps) ranks.push_back(st.rank);
  VanishingPattern pat = pattern_from_form(model.form, steps);
  MuResult mr = mu(pat, r, ranks, weights);
  out.mu = mr.mu;
  out.mu_zero = (mr.mu == Rat(0));
  out.filtration = make_filtration(steps, weights);
  out.filtration_side = stability_first_term(model.sheaf.hilbert(), out.filtration);
  out.orth_side = Rat(r) * (datum.hilbert_f + datum.hilbert_perp - model.sheaf.hilbert());
  // the one-step degenerate case (F = F^perp) doubles the single term
  if (steps.size() == 1) out.filtration_side = Rat(2) * out.filtration_side;
  out.identity_holds = (out.filtration_side == out.orth_side);
  return out;
}

DegeneracyCertificate degeneracy_certificate(const OrthSheafModel& model) {
  check_bilinear(model.form);
  if (model.form.is_zero()) fail(Errc::FormZero, "tensors must not vanish identically");
  Mat q = model.form.matrix();
  if (det(q) != Rat(0)) fail(Errc::NotDegenerate, "the pairing is nondegenerate");
  int r = model.sheaf.rank();
  Rat d(model.sheaf.degree());

  DegeneracyCertificate out;
  out.kernel = kernel_basis(q);
  out.kernel_rank = static_cast<int>(out.kernel.size());

  // the kernel subsheaf's degree: each canonical kernel vector must stay in a
  // single twist class
  Rat deg_kernel(0);
  for (const Vec& v : out.kernel) {
    std::optional<int> twist;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == Rat(0)) continue;
      int tw = model.sheaf.summands()[i].twist;
      if (twist && *twist != tw)
        fail(Errc::NotSupported, "kernel mixes summands of different twists");
      twist = tw;
    }
    deg_kernel += Rat(twist.value_or(0));
  }

  EvPoly hperp = hilbert_from_chern(model.sheaf.space(), out.kernel_rank,
                                    deg_kernel.numerator().convert_to<int>(), 0);
  Step step = subspace_step(model.sheaf, out.kernel, hperp, "E^perp");
  std::vector<Step> steps{step};
  std::vector<Rat> weights{Rat(1)};
  std::vector<int> ranks{out.kernel_rank};
  VanishingPattern pat = pattern_from_form(model.form, steps);
  MuResult mr = mu(pat, r, ranks, weights);
  out.mu = mr.mu;
  out.filtration = make_filtration(steps, weights);
  out.slope_lhs_tau1 = slope_stability_lhs(r, d, out.filtration, mr, Rat(1));
  if (out.mu.sign() <= 0)
    fail(Errc::Invariant, "a degenerate pairing must have positive weight against its kernel");
  return out;
}

bool sos_check(const TensorForm& q, const Rat& psi) {
  check_bilinear(q);
  Rat d = det(q.matrix());
  if (d == Rat(0)) fail(Errc::Degenerate, "the special orthogonal check needs det != 0");
  return d == psi * psi;
}

int sign_class_count(int r, bool simple) {
  if (r <= 0) fail(Errc::Invariant, "rank must be positive");
  if (r % 2 == 1) return 1;
  if (!simple)
    fail(Errc::NotSupported,
         "even rank without simplicity: the class count is indeterminate in this model");
  return 2;
}

}  // namespace tenstab
