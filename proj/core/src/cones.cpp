#include "tenstab/cones.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tenstab/errors.hpp"
#include "tenstab/linalg.hpp"

namespace tenstab {

namespace {

using IVec = std::vector<Int>;

void check_scale(int r, std::span<const int> ranks, int s) {
  if (r > 6 || s > 3 || static_cast<int>(ranks.size()) > 3)
    fail(Errc::ScaleLimit, "cone enumeration is limited to r <= 6, s <= 3, t <= 3");
  if (s < 1) fail(Errc::ScaleLimit, "arity must be at least 1");
  int prev = 0;
  for (int k : ranks) {
    if (k <= prev || k >= r) fail(Errc::RankOrder, "ranks must satisfy 0 < r_1 < ... < r_t < r");
    prev = k;
  }
  if (ranks.empty()) fail(Errc::RankOrder, "at least one filtration step is required");
}

// Sorted multisets of levels 1..t+1 of size s.
std::vector<std::vector<int>> level_multisets(int levels, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(s), 1);
  while (true) {
    out.push_back(cur);
    int j = s - 1;
    while (j >= 0 && cur[static_cast<size_t>(j)] == levels) --j;
    if (j < 0) break;
    int v = ++cur[static_cast<size_t>(j)];
    for (int k = j + 1; k < s; ++k) cur[static_cast<size_t>(k)] = v;
  }
  return out;
}

// L_M(m) = sum_i m_i (s r_i - nu_i(M) r) as an integer coefficient vector.
IVec block_sum_coeffs(const std::vector<int>& multiset, std::span<const int> ranks, int r, int s) {
  int t = static_cast<int>(ranks.size());
  IVec c(static_cast<size_t>(t));
  for (int i = 1; i <= t; ++i) {
    int nu = 0;
    for (int lv : multiset)
      if (lv <= i) ++nu;
    c[static_cast<size_t>(i - 1)] = Int(s) * ranks[static_cast<size_t>(i - 1)] - Int(nu) * r;
  }
  return c;
}

// Divide by the gcd, keeping the orientation.
IVec primitive_dir(IVec v) {
  Int g(0);
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) return v;
  for (Int& x : v) x /= g;
  return v;
}

// Primitive with the first nonzero entry positive; for deduplicating
// hyperplane normals where +/- describe the same wall.
IVec primitive_signed(IVec v) {
  v = primitive_dir(std::move(v));
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  return v;
}

Int dot(const IVec& a, const IVec& b) {
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool feasible(const std::vector<IVec>& rows, const IVec& v) {
  for (const IVec& row : rows)
    if (dot(row, v) < 0) return false;
  return true;
}

// Extreme rays of the pointed cone {m : rows . m >= 0} in R^t, t <= 3.
std::vector<IVec> extreme_rays(const std::vector<IVec>& rows, int t) {
  std::set<IVec> rays;
  auto try_insert = [&](IVec v) {
    v = primitive_dir(std::move(v));
    if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) return;
    if (feasible(rows, v)) {
      rays.insert(std::move(v));
      return;
    }
    for (Int& x : v) x = -x;
    if (feasible(rows, v)) rays.insert(std::move(v));
  };
  if (t == 1) {
    try_insert(IVec{Int(1)});
  } else if (t == 2) {
    for (const IVec& row : rows) try_insert(IVec{row[1], -row[0]});
  } else {
    for (size_t a = 0; a < rows.size(); ++a) {
      for (size_t b = a + 1; b < rows.size(); ++b) {
        // kernel of two rows in R^3: cross product
        const IVec& x = rows[a];
        const IVec& y = rows[b];
        try_insert(IVec{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
                        x[0] * y[1] - x[1] * y[0]});
      }
    }
  }
  return {rays.begin(), rays.end()};
}

int span_rank(const std::vector<IVec>& vs, int t) {
  Mat m;
  for (const IVec& v : vs) {
    Vec row;
    for (const Int& x : v) row.push_back(Rat(x));
    m.push_back(std::move(row));
  }
  if (m.empty()) return 0;
  (void)t;
  return rank_of(std::move(m));
}

struct RawCell {
  std::vector<IVec> rows;
  std::vector<IVec> rays;
};

std::vector<RawCell> chamber_complex(int r, std::span<const int> ranks, int s) {
  int t = static_cast<int>(ranks.size());
  std::vector<std::vector<int>> multisets = level_multisets(t + 1, s);
  std::vector<IVec> coeffs;
  coeffs.reserve(multisets.size());
  for (const auto& M : multisets) coeffs.push_back(block_sum_coeffs(M, ranks, r, s));

  // Walls between componentwise-incomparable multisets; comparable pairs can
  // only become equal on coordinate faces, which the orthant already carries.
  std::set<IVec> walls;
  for (size_t a = 0; a < multisets.size(); ++a) {
    for (size_t b = a + 1; b < multisets.size(); ++b) {
      bool le = true, ge = true;
      for (int j = 0; j < s; ++j) {
        if (multisets[a][static_cast<size_t>(j)] > multisets[b][static_cast<size_t>(j)]) le = false;
        if (multisets[a][static_cast<size_t>(j)] < multisets[b][static_cast<size_t>(j)]) ge = false;
      }
      if (le || ge) continue;
      IVec d(static_cast<size_t>(t));
      for (int i = 0; i < t; ++i)
        d[static_cast<size_t>(i)] = coeffs[a][static_cast<size_t>(i)] - coeffs[b][static_cast<size_t>(i)];
      d = primitive_signed(std::move(d));
      if (std::any_of(d.begin(), d.end(), [](const Int& x) { return x != 0; })) walls.insert(d);
    }
  }

  std::vector<IVec> orthant;
  for (int i = 0; i < t; ++i) {
    IVec e(static_cast<size_t>(t), Int(0));
    e[static_cast<size_t>(i)] = 1;
    orthant.push_back(std::move(e));
  }
  std::vector<RawCell> cells{RawCell{orthant, {}}};
  for (const IVec& w : walls) {
    std::vector<RawCell> next;
    for (RawCell& c : cells) {
      for (int sign : {+1, -1}) {
        RawCell half;
        half.rows = c.rows;
        IVec row = w;
        if (sign < 0)
          for (Int& x : row) x = -x;
        half.rows.push_back(std::move(row));
        half.rays = extreme_rays(half.rows, t);
        if (span_rank(half.rays, t) == t) next.push_back(std::move(half));
      }
    }
    cells = std::move(next);
  }
  for (RawCell& c : cells)
    if (c.rays.empty()) c.rays = extreme_rays(c.rows, t);
  return cells;
}

IVec gamma_of_weights(int r, std::span<const int> ranks, const IVec& m) {
  IVec g(static_cast<size_t>(r), Int(0));
  for (size_t i = 0; i < ranks.size(); ++i) {
    int k = ranks[i];
    for (int pos = 0; pos < r; ++pos)
      g[static_cast<size_t>(pos)] += m[i] * Int(pos < k ? k - r : k);
  }
  return g;
}

}  // namespace

std::vector<ConeCell> subdivide(int r, std::span<const int> ranks, int s) {
  check_scale(r, ranks, s);
  int t = static_cast<int>(ranks.size());
  std::vector<std::vector<int>> multisets = level_multisets(t + 1, s);
  std::vector<IVec> coeffs;
  for (const auto& M : multisets) coeffs.push_back(block_sum_coeffs(M, ranks, r, s));

  std::vector<ConeCell> out;
  for (RawCell& raw : chamber_complex(r, ranks, s)) {
    ConeCell cell;
    cell.inequalities = std::move(raw.rows);
    cell.rays = std::move(raw.rays);
    std::sort(cell.rays.begin(), cell.rays.end());
    // interior sample: sum of the extreme rays
    IVec inner(static_cast<size_t>(t), Int(0));
    for (const IVec& v : cell.rays)
      for (int i = 0; i < t; ++i) inner[static_cast<size_t>(i)] += v[static_cast<size_t>(i)];
    Int best;
    bool have = false;
    for (size_t k = 0; k < multisets.size(); ++k) {
      Int val = dot(coeffs[k], inner);
      if (!have || val < best) { best = val; cell.argmin = multisets[k]; have = true; }
    }
    out.push_back(std::move(cell));
  }
  std::sort(out.begin(), out.end(), [](const ConeCell& a, const ConeCell& b) {
    if (a.argmin != b.argmin) return a.argmin < b.argmin;
    return a.rays < b.rays;
  });
  return out;
}

RaySet edges(int r, std::span<const int> ranks, int s) {
  check_scale(r, ranks, s);
  int t = static_cast<int>(ranks.size());
  std::set<IVec> mrays;
  for (const RawCell& c : chamber_complex(r, ranks, s))
    mrays.insert(c.rays.begin(), c.rays.end());

  RaySet rs;
  rs.a1 = 0;
  for (const IVec& m : mrays) {
    IVec gamma = primitive_dir(gamma_of_weights(r, ranks, m));
    for (Int& x : gamma) x *= r;
    ConeRay ray;
    ray.weights.assign(static_cast<size_t>(t), Int(0));
    for (int i = 0; i < t; ++i) {
      Int jump = gamma[static_cast<size_t>(ranks[static_cast<size_t>(i)])] -
                 gamma[static_cast<size_t>(ranks[static_cast<size_t>(i)] - 1)];
      if (jump < 0 || jump % r != 0)
        fail(Errc::Invariant, "edge vector does not decompose into nonnegative weights");
      ray.weights[static_cast<size_t>(i)] = jump / r;
    }
    if (gamma_of_weights(r, ranks, ray.weights) != gamma)
      fail(Errc::Invariant, "recovered weights do not reproduce the edge vector");
    for (const Int& w : ray.weights) rs.a1 = std::max(rs.a1, w);
    ray.gamma = std::move(gamma);
    rs.rays.push_back(std::move(ray));
  }
  std::sort(rs.rays.begin(), rs.rays.end(),
            [](const ConeRay& a, const ConeRay& b) { return a.gamma < b.gamma; });
  return rs;
}

std::vector<std::vector<Rat>> weight_candidates(int r, std::span<const int> ranks, int s) {
  RaySet rs = edges(r, ranks, s);
  std::set<std::vector<Rat>> seen;
  for (const ConeRay& ray : rs.rays) {
    IVec w = ray.weights;
    int nonzero = 0;
    for (const Int& x : w)
      if (x != 0) ++nonzero;
    if (nonzero == 0) continue;
    std::vector<Rat> cand(w.size(), Rat(0));
    if (nonzero == 1) {
      for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) cand[i] = Rat(1);  // one-step convention m = 1
    } else {
      Int g(0);
      for (const Int& x : w) g = boost::multiprecision::gcd(g, x);
      for (size_t i = 0; i < w.size(); ++i) cand[i] = Rat(w[i] / g);
    }
    seen.insert(std::move(cand));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace tenstab
