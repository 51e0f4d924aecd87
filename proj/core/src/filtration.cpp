#include "tenstab/filtration.hpp"

#include <algorithm>

#include "tenstab/errors.hpp"

namespace tenstab {

const Rat& GammaVector::at_level(int level, std::span<const int> ranks) const {
  int t = static_cast<int>(ranks.size());
  int pos = (level <= t) ? ranks[static_cast<size_t>(level - 1)] - 1
                         : static_cast<int>(entries.size()) - 1;
  return entries[static_cast<size_t>(pos)];
}

GammaVector gamma_vector(int r, std::span<const int> ranks, std::span<const Rat> weights) {
  if (ranks.size() != weights.size())
    fail(Errc::RankOrder, "ranks and weights must have equal length");
  int prev = 0;
  for (int k : ranks) {
    if (k <= prev || k >= r) fail(Errc::RankOrder, "ranks must satisfy 0 < r_1 < ... < r_t < r");
    prev = k;
  }
  for (const Rat& m : weights)
    if (m.sign() <= 0) fail(Errc::RankOrder, "weights must be positive");
  GammaVector g;
  g.entries.assign(static_cast<size_t>(r), Rat(0));
  for (size_t i = 0; i < ranks.size(); ++i) {
    int k = ranks[i];
    for (int pos = 0; pos < r; ++pos)
      g.entries[static_cast<size_t>(pos)] += weights[i] * Rat(pos < k ? k - r : k);
  }
  return g;
}

VanishingPattern::VanishingPattern(int levels, int arity) : levels_(levels), arity_(arity) {
  if (levels < 1 || arity < 1) fail(Errc::Invariant, "pattern needs levels, arity >= 1");
  size_t count = 1;
  for (int j = 0; j < arity; ++j) count *= static_cast<size_t>(levels);
  nz_.assign(count, 0);
}

size_t VanishingPattern::offset(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != arity_) fail(Errc::Invariant, "pattern index arity");
  size_t o = 0;
  for (int v : index) {
    if (v < 0 || v >= levels_) fail(Errc::Invariant, "pattern index out of range");
    o = o * static_cast<size_t>(levels_) + static_cast<size_t>(v);
  }
  return o;
}

void VanishingPattern::mark_nonzero(std::span<const int> index) { nz_[offset(index)] = 1; }

VanishingPattern VanishingPattern::from_generators(
    int levels, int arity, const std::vector<std::vector<int>>& generators) {
  VanishingPattern p(levels, arity);
  // upward closure: everything componentwise >= a generator is nonzero
  std::vector<int> idx(static_cast<size_t>(arity), 0);
  auto advance = [&]() {
    int j = arity - 1;
    while (j >= 0 && ++idx[static_cast<size_t>(j)] == levels) {
      idx[static_cast<size_t>(j)] = 0;
      --j;
    }
    return j >= 0;
  };
  do {
    for (const auto& g : generators) {
      if (static_cast<int>(g.size()) != arity) fail(Errc::Invariant, "generator arity");
      bool ge = true;
      for (int j = 0; j < arity; ++j)
        if (idx[static_cast<size_t>(j)] < g[static_cast<size_t>(j)]) { ge = false; break; }
      if (ge) { p.mark_nonzero(idx); break; }
    }
  } while (advance());
  return p;
}

bool VanishingPattern::upward_closed() const {
  std::vector<int> idx(static_cast<size_t>(arity_), 0);
  auto advance = [&]() {
    int j = arity_ - 1;
    while (j >= 0 && ++idx[static_cast<size_t>(j)] == levels_) {
      idx[static_cast<size_t>(j)] = 0;
      --j;
    }
    return j >= 0;
  };
  do {
    if (!nonzero(idx)) continue;
    for (int j = 0; j < arity_; ++j) {
      if (idx[static_cast<size_t>(j)] + 1 >= levels_) continue;
      std::vector<int> up = idx;
      ++up[static_cast<size_t>(j)];
      if (!nonzero(up)) return false;
    }
  } while (advance());
  return true;
}

bool VanishingPattern::any_nonzero() const {
  return std::any_of(nz_.begin(), nz_.end(), [](char c) { return c != 0; });
}

std::vector<std::vector<int>> VanishingPattern::nonzero_indexes() const {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<size_t>(arity_), 0);
  auto advance = [&]() {
    int j = arity_ - 1;
    while (j >= 0 && ++idx[static_cast<size_t>(j)] == levels_) {
      idx[static_cast<size_t>(j)] = 0;
      --j;
    }
    return j >= 0;
  };
  do {
    if (nonzero(idx)) out.push_back(idx);
  } while (advance());
  return out;
}

Step coordinate_step(const SheafModel& model, std::vector<int> slots) {
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  if (slots.empty() || static_cast<int>(slots.size()) >= model.rank())
    fail(Errc::RankOrder, "coordinate subsets must be proper and nonempty");
  if (slots.front() < 0 || slots.back() >= model.rank())
    fail(Errc::Invariant, "slot index out of range");
  Step s;
  s.rank = static_cast<int>(slots.size());
  s.hilbert = model.subset_hilbert(slots);
  s.degree = Rat(model.subset_degree(slots));
  s.slots = std::move(slots);
  return s;
}

Step declared_step(const SheafModel& model, int rank, EvPoly hilbert, std::string label) {
  if (rank <= 0 || rank >= model.rank())
    fail(Errc::RankOrder, "declared rank must lie strictly between 0 and the ambient rank");
  if (hilbert.degree() != space_dim(model.space()) || hilbert.leading().sign() <= 0)
    fail(Errc::InvalidDatum, "declared Hilbert polynomial must have full degree and positive lead");
  Step s;
  s.rank = rank;
  s.degree = degree_of(hilbert, rank, model.space());
  s.hilbert = std::move(hilbert);
  s.label = std::move(label);
  return s;
}

Step subspace_step(const SheafModel& model, Mat basis, EvPoly hilbert, std::string label) {
  Mat reduced = basis;
  int rk = rref_in_place(reduced);
  if (rk != static_cast<int>(basis.size()))
    fail(Errc::InvalidDatum, "subspace basis rows must be independent");
  Step s = declared_step(model, rk, std::move(hilbert), std::move(label));
  for (auto& row : basis)
    if (static_cast<int>(row.size()) != model.rank())
      fail(Errc::InvalidDatum, "subspace basis width must equal the ambient rank");
  s.basis = std::move(basis);
  return s;
}

WeightedFiltration make_filtration(std::vector<Step> steps, std::vector<Rat> weights) {
  if (steps.empty() || steps.size() != weights.size())
    fail(Errc::RankOrder, "a weighted filtration needs matching nonempty steps and weights");
  for (size_t i = 1; i < steps.size(); ++i) {
    if (steps[i - 1].rank >= steps[i].rank)
      fail(Errc::RankOrder, "filtration ranks must strictly increase");
    if (steps[i - 1].slots && steps[i].slots &&
        !std::includes(steps[i].slots->begin(), steps[i].slots->end(),
                       steps[i - 1].slots->begin(), steps[i - 1].slots->end()))
      fail(Errc::RankOrder, "coordinate filtration steps must be nested");
  }
  for (const Rat& m : weights)
    if (m.sign() <= 0) fail(Errc::RankOrder, "weights must be positive");
  return WeightedFiltration{std::move(steps), std::move(weights)};
}

namespace {

Mat step_basis(const Step& s, int ambient) {
  if (s.basis) return *s.basis;
  if (!s.slots) fail(Errc::NotSupported, "step carries neither slots nor a basis");
  Mat b;
  for (int slot : *s.slots) b.push_back(unit_vec(ambient, slot));
  return b;
}

// Restriction of the form to the tuple of subspaces: nonzero iff some
// contracted entry is nonzero for some copy.
bool restriction_nonzero(const TensorForm& form, const std::vector<const Mat*>& bases) {
  int s = form.arity();
  std::vector<int> col(static_cast<size_t>(s), 0);
  auto advance_cols = [&]() {
    int j = s - 1;
    while (j >= 0 &&
           ++col[static_cast<size_t>(j)] == static_cast<int>(bases[static_cast<size_t>(j)]->size())) {
      col[static_cast<size_t>(j)] = 0;
      --j;
    }
    return j >= 0;
  };
  for (int copy = 0; copy < form.copies(); ++copy) {
    std::fill(col.begin(), col.end(), 0);
    do {
      // contract entry(copy, b_1, ..., b_s) * prod basis_j[col_j][b_j]
      Rat acc(0);
      std::vector<int> b(static_cast<size_t>(s), 0);
      auto advance_b = [&]() {
        int j = s - 1;
        while (j >= 0 && ++b[static_cast<size_t>(j)] == form.dim()) {
          b[static_cast<size_t>(j)] = 0;
          --j;
        }
        return j >= 0;
      };
      do {
        Rat prod(1);
        for (int j = 0; j < s && prod != Rat(0); ++j)
          prod *= (*bases[static_cast<size_t>(j)])[static_cast<size_t>(col[static_cast<size_t>(j)])]
                                                  [static_cast<size_t>(b[static_cast<size_t>(j)])];
        if (prod != Rat(0)) acc += prod * form.entry(copy, b);
      } while (advance_b());
      if (acc != Rat(0)) return true;
    } while (advance_cols());
  }
  return false;
}

}  // namespace

VanishingPattern pattern_from_form(const TensorForm& form, std::span<const Step> steps) {
  int t = static_cast<int>(steps.size());
  int s = form.arity();
  std::vector<Mat> bases;
  bases.reserve(static_cast<size_t>(t) + 1);
  for (const Step& st : steps) bases.push_back(step_basis(st, form.dim()));
  bases.push_back(identity_mat(form.dim()));

  VanishingPattern p(t + 1, s);
  std::vector<int> idx(static_cast<size_t>(s), 0);
  auto advance = [&]() {
    int j = s - 1;
    while (j >= 0 && ++idx[static_cast<size_t>(j)] == t + 1) {
      idx[static_cast<size_t>(j)] = 0;
      --j;
    }
    return j >= 0;
  };
  do {
    std::vector<const Mat*> tuple;
    tuple.reserve(static_cast<size_t>(s));
    for (int v : idx) tuple.push_back(&bases[static_cast<size_t>(v)]);
    if (restriction_nonzero(form, tuple)) p.mark_nonzero(idx);
  } while (advance());
  return p;
}

MuResult mu(const VanishingPattern& pattern, int r, std::span<const int> ranks,
            std::span<const Rat> weights) {
  int t = static_cast<int>(ranks.size());
  if (pattern.levels() != t + 1)
    fail(Errc::Invariant, "pattern levels must equal steps + 1");
  if (!pattern.any_nonzero()) fail(Errc::EmptyPattern, "form vanishes on every block");
  if (!pattern.upward_closed()) fail(Errc::Invariant, "pattern is not upward closed");
  GammaVector g = gamma_vector(r, ranks, weights);
  int s = pattern.arity();

  std::optional<Rat> best;
  std::vector<int> best_idx;
  std::vector<int> idx(static_cast<size_t>(s), 0);
  auto advance = [&]() {
    int j = s - 1;
    while (j >= 0 && ++idx[static_cast<size_t>(j)] == t + 1) {
      idx[static_cast<size_t>(j)] = 0;
      --j;
    }
    return j >= 0;
  };
  do {
    if (!pattern.nonzero(idx)) continue;
    Rat w(0);
    for (int v : idx) w += g.at_level(v + 1, ranks);
    if (!best || w < *best) {  // lexicographic iteration order, first minimizer kept
      best = w;
      best_idx = idx;
    }
  } while (advance());

  MuResult res;
  res.mu = *best;
  res.argmin = best_idx;
  res.epsilon.assign(static_cast<size_t>(t), 0);
  for (int i = 1; i <= t; ++i)
    for (int v : best_idx)
      if (v + 1 <= i) ++res.epsilon[static_cast<size_t>(i - 1)];
  res.nu = res.epsilon;
  return res;
}

}  // namespace tenstab
