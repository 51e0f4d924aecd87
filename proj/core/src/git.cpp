#include "tenstab/git.hpp"

#include <algorithm>

#include "tenstab/cones.hpp"
#include "tenstab/errors.hpp"

namespace tenstab {

OnePS make_oneps(std::vector<Int> weights) {
  if (weights.empty()) fail(Errc::Invariant, "one-parameter subgroup needs weights");
  Int sum(0);
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i > 0 && weights[i] < weights[i - 1])
      fail(Errc::Invariant, "one-parameter subgroup weights must be nondecreasing");
    sum += weights[i];
  }
  if (sum != 0) fail(Errc::Invariant, "one-parameter subgroup weights must sum to zero");
  return OnePS{std::move(weights)};
}

OnePS oneps_from_filtration(int p, std::span<const int> dims, std::span<const Int> weights) {
  if (dims.size() != weights.size()) fail(Errc::RankOrder, "dims and weights length mismatch");
  std::vector<Int> g(static_cast<size_t>(p), Int(0));
  int prev = 0;
  for (size_t i = 0; i < dims.size(); ++i) {
    int k = dims[i];
    if (k <= prev || k >= p) fail(Errc::RankOrder, "dims must satisfy 0 < d_1 < ... < d_t < p");
    prev = k;
    if (weights[i] <= 0) fail(Errc::RankOrder, "weights must be positive");
    for (int pos = 0; pos < p; ++pos) g[static_cast<size_t>(pos)] += weights[i] * Int(pos < k ? k - p : k);
  }
  return make_oneps(std::move(g));
}

namespace {

Rat weight_of(const OnePS& lam, std::span<const int> idx) {
  Int w(0);
  for (int i : idx) w += lam.weights[static_cast<size_t>(i)];
  return Rat(w);
}

void check_shape(const TensorForm& form, const OnePS& lam) {
  if (static_cast<int>(lam.weights.size()) != form.dim())
    fail(Errc::RankMismatch, "one-parameter subgroup dimension must match the form");
}

Rat det_of_form(const TensorForm& q) { return det(q.matrix()); }

}  // namespace

Rat mu_point(const TensorForm& form, const OnePS& lam) {
  check_shape(form, lam);
  if (form.is_zero()) fail(Errc::FormZero, "mu of the zero form");
  std::optional<Rat> best;
  form.for_each_entry([&](int, std::span<const int> idx, const Rat& v) {
    if (v == Rat(0)) return;
    Rat w = weight_of(lam, idx);
    if (!best || w < *best) best = w;
  });
  return *best;
}

TensorForm limit_form(const TensorForm& form, const OnePS& lam) {
  check_shape(form, lam);
  if (form.is_zero()) fail(Errc::FormZero, "limit of the zero form");
  TensorForm out(form.arity(), form.copies(), form.dim());
  form.for_each_entry([&](int copy, std::span<const int> idx, const Rat& v) {
    if (v == Rat(0)) return;
    Rat w = weight_of(lam, idx);
    if (w.sign() < 0)
      fail(Errc::NegativeWeightEntry, "a nonzero entry has negative weight; the limit leaves the affine chart");
    if (w.sign() == 0) out.set_entry(copy, idx, v);
  });
  return out;
}

SemistableCheckReport nondegenerate_semistable_check(const TensorForm& q,
                                                     const std::vector<OnePS>& lams) {
  if (q.arity() != 2 || q.copies() != 1)
    fail(Errc::NotSupported, "the nondegeneracy check applies to bilinear forms");
  SemistableCheckReport rep;
  rep.det = det_of_form(q);
  if (rep.det == Rat(0)) fail(Errc::Degenerate, "the form is degenerate");
  for (const OnePS& lam : lams) {
    Rat m = mu_point(q, lam);
    if (m.sign() > 0) rep.violations.push_back({lam, m});
  }
  return rep;
}

LimitAnalysis analyze_zero_weight_limit(const TensorForm& q, std::span<const int> ranks,
                                        std::span<const Rat> weights) {
  if (q.arity() != 2 || q.copies() != 1)
    fail(Errc::NotSupported, "limit analysis applies to bilinear forms");
  int r = q.dim();
  LimitAnalysis out{TensorForm(2, 1, r), Rat(0), Rat(0), {}, false, false, false, false, false};
  out.det_original = det_of_form(q);
  if (out.det_original == Rat(0)) fail(Errc::Degenerate, "the form is degenerate");

  GammaVector g = gamma_vector(r, ranks, weights);
  int t = static_cast<int>(ranks.size());
  auto block_of = [&](int slot) {
    for (int i = 0; i < t; ++i)
      if (slot < ranks[static_cast<size_t>(i)]) return i + 1;
    return t + 1;
  };

  // mu over the nonzero entries must be exactly zero
  std::optional<Rat> mu_val;
  Mat m = q.matrix();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      if (m[static_cast<size_t>(a)][static_cast<size_t>(b)] == Rat(0)) continue;
      Rat w = g.entries[static_cast<size_t>(a)] + g.entries[static_cast<size_t>(b)];
      if (!mu_val || w < *mu_val) mu_val = w;
    }
  if (!mu_val || *mu_val != Rat(0))
    fail(Errc::NotZeroWeight, "the filtration weight of the form is not zero");

  Mat lim(static_cast<size_t>(r), Vec(static_cast<size_t>(r), Rat(0)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Rat w = g.entries[static_cast<size_t>(a)] + g.entries[static_cast<size_t>(b)];
      if (w == Rat(0)) lim[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          m[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }
  out.limit = TensorForm::bilinear(lim);
  out.det_limit = det(lim);
  out.det_match = (out.det_limit == out.det_original);

  // support must be exactly the antidiagonal blocks (i, t+2-i)
  out.antidiagonal_support = true;
  for (int i = 1; i <= t + 1; ++i)
    for (int j = 1; j <= t + 1; ++j) {
      bool nonzero = false;
      for (int a = 0; a < r && !nonzero; ++a)
        for (int b = 0; b < r && !nonzero; ++b)
          if (block_of(a) == i && block_of(b) == j &&
              lim[static_cast<size_t>(a)][static_cast<size_t>(b)] != Rat(0))
            nonzero = true;
      if (nonzero) out.support_blocks.emplace_back(i, j);
      bool antidiag = (j == t + 2 - i);
      if (nonzero != antidiag) out.antidiagonal_support = false;
    }

  out.ranks_palindromic = true;
  auto rank_at = [&](int i) {  // r_i with r_0 = 0, r_{t+1} = r
    if (i <= 0) return 0;
    if (i >= t + 1) return r;
    return ranks[static_cast<size_t>(i - 1)];
  };
  for (int i = 1; i <= t; ++i)
    if (rank_at(i) != r - rank_at(t + 1 - i)) out.ranks_palindromic = false;

  out.weights_palindromic = true;
  for (int i = 1; i <= t; ++i)
    if (weights[static_cast<size_t>(i - 1)] != weights[static_cast<size_t>(t - i)])
      out.weights_palindromic = false;

  // W_i^perp (w.r.t. the original form) must equal W_{t+1-i}
  out.perps_match = true;
  for (int i = 1; i <= t; ++i) {
    Mat rows;
    for (int a = 0; a < rank_at(i); ++a) rows.push_back(m[static_cast<size_t>(a)]);
    Mat perp = kernel_basis(rows);
    int want = rank_at(t + 1 - i);
    if (static_cast<int>(perp.size()) != want) { out.perps_match = false; continue; }
    for (const Vec& v : perp)
      for (int pos = want; pos < r; ++pos)
        if (v[static_cast<size_t>(pos)] != Rat(0)) out.perps_match = false;
  }
  return out;
}

GradedDeformationResult graded_deformation(const TensorForm& form,
                                           const std::vector<std::vector<int>>& chain_slots,
                                           std::span<const Rat> weights) {
  if (form.is_zero()) fail(Errc::FormZero, "deformation of the zero form");
  int r = form.dim();
  int t = static_cast<int>(chain_slots.size());
  if (weights.size() != chain_slots.size())
    fail(Errc::RankOrder, "weights must match the filtration length");

  std::vector<int> ranks;
  for (const auto& s : chain_slots) ranks.push_back(static_cast<int>(s.size()));
  GammaVector g = gamma_vector(r, ranks, weights);

  // level of each slot: first filtration step containing it
  std::vector<int> level(static_cast<size_t>(r), t + 1);
  for (int i = t - 1; i >= 0; --i)
    for (int slot : chain_slots[static_cast<size_t>(i)]) {
      if (slot < 0 || slot >= r) fail(Errc::Invariant, "slot out of range");
      level[static_cast<size_t>(slot)] = i + 1;
    }
  std::vector<Rat> slot_weight(static_cast<size_t>(r));
  for (int slot = 0; slot < r; ++slot)
    slot_weight[static_cast<size_t>(slot)] = g.at_level(level[static_cast<size_t>(slot)], ranks);

  std::optional<Rat> mu_val;
  form.for_each_entry([&](int, std::span<const int> idx, const Rat& v) {
    if (v == Rat(0)) return;
    Rat w(0);
    for (int i : idx) w += slot_weight[static_cast<size_t>(i)];
    if (!mu_val || w < *mu_val) mu_val = w;
  });

  GradedDeformationResult res{std::vector<int>(), TensorForm(form.arity(), form.copies(), r),
                              *mu_val};
  int prev = 0;
  for (int i = 0; i < t; ++i) {
    res.graded_dims.push_back(ranks[static_cast<size_t>(i)] - prev);
    prev = ranks[static_cast<size_t>(i)];
  }
  res.graded_dims.push_back(r - prev);

  form.for_each_entry([&](int copy, std::span<const int> idx, const Rat& v) {
    if (v == Rat(0)) return;
    Rat w(0);
    for (int i : idx) w += slot_weight[static_cast<size_t>(i)];
    if (w == *mu_val) res.form.set_entry(copy, idx, v);
  });
  return res;
}

int stabilizer_dimension(const TensorForm& q) {
  if (q.arity() != 2 || q.copies() != 1)
    fail(Errc::NotSupported, "stabilizer dimension applies to bilinear forms");
  if (q.is_zero()) fail(Errc::FormZero, "stabilizer of the zero form");
  int p = q.dim();
  Mat Q = q.matrix();
  // unknowns: A_{00..pp} row major, then a; equations (A^T Q + Q A - a Q)_{ij} = 0
  Mat sys;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      Vec row(static_cast<size_t>(p * p + 1), Rat(0));
      for (int k = 0; k < p; ++k) {
        row[static_cast<size_t>(k * p + i)] += Q[static_cast<size_t>(k)][static_cast<size_t>(j)];
        row[static_cast<size_t>(k * p + j)] += Q[static_cast<size_t>(i)][static_cast<size_t>(k)];
      }
      row[static_cast<size_t>(p * p)] -= Q[static_cast<size_t>(i)][static_cast<size_t>(j)];
      sys.push_back(std::move(row));
    }
  }
  return p * p + 1 - rank_of(std::move(sys));
}

SEquivResult s_equiv_representative(const TensorForm& form, const DeltaPoly& delta,
                                    const SheafModel& model, const SearchFamily& family) {
  if (form.arity() != 2)
    fail(Errc::NotSupported, "S-equivalence is implemented for bilinear tensors (s = 2)");
  StabilityVerdict v = search_verdict(model, form, delta, family);
  if (v.status == Status::Unstable)
    fail(Errc::NotSemistable, "the tensor is unstable; it has no S-equivalence class");

  SEquivResult res{form, 0, 0, {}};
  if (v.status == Status::Stable) {
    res.stabilizer_dim = stabilizer_dimension(form);
    return res;
  }

  const EvPoly P = model.hilbert();
  int max_iter = model.rank() * model.rank() + 1;
  while (res.iterations < max_iter) {
    int current_dim = stabilizer_dimension(res.representative);
    res.stabilizer_dim = current_dim;
    bool advanced = false;
    // admissible = equality filtration; apply the first one whose deformation
    // strictly raises the stabilizer dimension
    for (const CoordChain& chain :
         enumerate_coordinate_filtrations(model, family.max_coordinate_steps)) {
      std::vector<Step> steps;
      for (const auto& subset : chain) steps.push_back(coordinate_step(model, subset));
      std::vector<int> ranks;
      for (const Step& st : steps) ranks.push_back(st.rank);
      for (const auto& cand : weight_candidates(model.rank(), ranks, form.arity())) {
        if (std::any_of(cand.begin(), cand.end(), [](const Rat& w) { return w == Rat(0); }))
          continue;
        std::vector<Rat> ws = cand;
        if (ws.size() == 1) ws[0] = Rat(1);
        VanishingPattern pat = pattern_from_form(res.representative, steps);
        if (!pat.any_nonzero()) continue;
        MuResult mr = mu(pat, model.rank(), ranks, ws);
        WeightedFiltration filt = make_filtration(steps, ws);
        EvPoly lhs = delta_stability_lhs(P, filt, mr, delta);
        if (sign_eventual(lhs) != 0) continue;
        GradedDeformationResult def = graded_deformation(res.representative, chain, ws);
        if (stabilizer_dimension(def.form) > current_dim) {
          Certificate cert;
          cert.filtration = std::move(filt);
          cert.lhs = std::move(lhs);
          cert.mu = mr.mu;
          res.trace.push_back(std::move(cert));
          res.representative = std::move(def.form);
          advanced = true;
          break;
        }
      }
      if (advanced) break;
    }
    if (!advanced) break;
    ++res.iterations;
  }
  res.stabilizer_dim = stabilizer_dimension(res.representative);
  return res;
}

Rat combined_git_weight(std::span<const int> dims, const Rat& P_at_l, int p,
                        std::span<const Rat> P_EVi_at_l, std::span<const Rat> weights,
                        const Rat& mu_phi, const Rat& n1, const Rat& n2) {
  if (dims.size() != weights.size() || dims.size() != P_EVi_at_l.size())
    fail(Errc::RankOrder, "dims, weights and evaluations must have equal length");
  int prev = 0;
  for (int d : dims) {
    if (d <= prev || d >= p) fail(Errc::RankOrder, "dims must satisfy 0 < d_1 < ... < d_t < p");
    prev = d;
  }
  Rat acc(0);
  for (size_t i = 0; i < dims.size(); ++i)
    acc += weights[i] * (Rat(dims[i]) * P_at_l - Rat(p) * P_EVi_at_l[i]);
  return n1 * acc + n2 * mu_phi;
}

Rat polarization_ratio(const EvPoly& P, const EvPoly& delta, int m, int l, int s) {
  Rat denom = P(Rat(m)) - Rat(s) * delta(Rat(m));
  if (denom == Rat(0)) fail(Errc::ZeroDenominator, "P(m) - s delta(m) vanishes");
  return (P(Rat(l)) * delta(Rat(m)) - delta(Rat(l)) * P(Rat(m))) / denom;
}

}  // namespace tenstab
