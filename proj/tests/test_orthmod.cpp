#include <doctest.h>

#include "oracles.hpp"
#include "tenstab/errors.hpp"
#include "tenstab/fixtures.hpp"
#include "tenstab/orth.hpp"

using namespace tenstab;

namespace {

// pairing of slot i with slot p-1-i plus random isotropic-safe noise
OrthSheafModel random_hyperbolic_model(oracles::Rng& rng, int p) {
  Mat m(static_cast<size_t>(p), Vec(static_cast<size_t>(p), Rat(0)));
  for (int i = 0; i < p; ++i) {
    Rat v(rng.uniform(1, 3));
    m[static_cast<size_t>(i)][static_cast<size_t>(p - 1 - i)] = v;
    m[static_cast<size_t>(p - 1 - i)][static_cast<size_t>(i)] = v;
  }
  std::vector<Summand> summands;
  for (int i = 0; i < p; ++i) summands.push_back({0, rng.uniform(0, 2)});
  return OrthSheafModel{SheafModel(Space::P2, std::move(summands)),
                        TensorForm::bilinear(m, Symmetry::Symmetric), FormKind::Orthogonal,
                        std::nullopt};
}

}  // namespace

TEST_CASE("axiom validation on the built-in example") {
  OrthSheafModel ex = builtin_example();
  OrthValidation rep = validate(ex);
  CHECK(rep.all_passed());
  CHECK(rep.det == Rat(-1, 4));

  OrthSheafModel singular = ex;
  Mat m = ex.form.matrix();
  m[2][2] = Rat(1, 4);  // makes the third row dependent: det becomes 0
  m[2][1] = Rat(1, 2);
  singular.form = TensorForm::bilinear({{Rat(1), Rat(0)}, {Rat(0), Rat(0)}});
  singular.sheaf = trivial_sheaf(2, Space::P2);
  OrthValidation bad = validate(singular);
  CHECK_FALSE(bad.all_passed());
  bool os4_failed = false;
  for (const AxiomCheck& c : bad.checks)
    if (c.axiom == "OS4" && !c.passed) os4_failed = true;
  CHECK(os4_failed);

  // odd-rank antisymmetric pairings are always degenerate
  OrthSheafModel odd{trivial_sheaf(3, Space::P2),
                     TensorForm::bilinear({{Rat(0), Rat(1), Rat(0)},
                                           {Rat(-1), Rat(0), Rat(0)},
                                           {Rat(0), Rat(0), Rat(0)}},
                                          Symmetry::Antisymmetric),
                     FormKind::Symplectic, std::nullopt};
  OrthValidation oddrep = validate(odd);
  CHECK_FALSE(oddrep.all_passed());
}

TEST_CASE("perpendicular subsheaves of the example") {
  OrthSheafModel ex = builtin_example();
  PerpResult a = perp(ex, {0});
  CHECK(a.rank == 2);
  REQUIRE(a.slots.has_value());
  CHECK(*a.slots == std::vector<int>{0, 1});  // I_2 perp = I_2 + I_1
  REQUIRE(a.hilbert.has_value());
  CHECK(*a.hilbert == ex.sheaf.subset_hilbert(std::vector<int>{0, 1}));

  PerpResult b = perp(ex, {1});
  CHECK(b.rank == 2);
  CHECK_FALSE(b.slots.has_value());
  REQUIRE(b.basis.size() == 2);
  CHECK(b.basis[0] == Vec{Rat(1), Rat(0), Rat(0)});
  CHECK(b.basis[1] == Vec{Rat(0), Rat(1), Rat(-2)});

  OrthSheafModel id{trivial_sheaf(3, Space::P2), identity_form(3), FormKind::Orthogonal,
                    std::nullopt};
  PerpResult c = perp(id, {0});
  REQUIRE(c.slots.has_value());
  CHECK(*c.slots == std::vector<int>{1, 2});
}

TEST_CASE("isotropy") {
  OrthSheafModel ex = builtin_example();
  CHECK(is_isotropic(ex.form, std::vector<int>{0}));
  CHECK_FALSE(is_isotropic(ex.form, std::vector<int>{2}));
  CHECK(is_isotropic(ex.form, Mat{}));  // zero subspace, vacuously
}

TEST_CASE("perp is rank complementary and involutive on coordinate isotropics") {
  oracles::Rng rng(73);
  for (int it = 0; it < 40; ++it) {
    int p = rng.uniform(2, 4);
    TensorForm q = oracles::random_nondegenerate(rng, p, false);
    for (unsigned mask = 1; mask + 1 < (1u << p); ++mask) {
      Mat basis;
      for (int i = 0; i < p; ++i)
        if (mask & (1u << i)) basis.push_back(unit_vec(p, i));
      Mat pb = perp_subspace(q, basis);
      CHECK(static_cast<int>(pb.size()) == p - static_cast<int>(basis.size()));
      if (is_isotropic(q, basis)) {
        for (const Vec& f : basis) CHECK(in_span(pb, f));
        Mat back = perp_subspace(q, pb);
        CHECK(back.size() == basis.size());
        for (const Vec& f : basis) CHECK(in_span(back, f));
      }
    }
  }
}

TEST_CASE("orthogonal stability of the example") {
  OrthSheafModel ex = builtin_example();
  std::vector<IsotropicDatum> family = coordinate_isotropic_family(ex);
  REQUIRE(family.size() == 1);
  CHECK(*family[0].slots == std::vector<int>{0});

  StabilityVerdict g = orth_stability(ex, OrthMode::Gieseker, family);
  CHECK(g.status == Status::Stable);

  // equality witness: a datum with P_F + P_perp = P
  OrthSheafModel hyp = random_hyperbolic_model(*(new oracles::Rng(79)), 2);
  hyp.sheaf = trivial_sheaf(2, Space::P2);
  std::vector<IsotropicDatum> hfam = coordinate_isotropic_family(hyp);
  REQUIRE(hfam.size() == 2);
  StabilityVerdict eq = orth_stability(hyp, OrthMode::Gieseker, hfam);
  CHECK(eq.status == Status::StrictlySemistable);

  // positive-degree isotropic subsheaf: slope unstable
  OrthSheafModel twisted{SheafModel(Space::P2, {{1, 0}, {-1, 0}}),
                         TensorForm::bilinear({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}},
                                              Symmetry::Symmetric),
                         FormKind::Orthogonal, std::nullopt};
  std::vector<IsotropicDatum> tfam = coordinate_isotropic_family(twisted);
  StabilityVerdict slope = orth_stability(twisted, OrthMode::Slope, tfam);
  CHECK(slope.status == Status::Unstable);
  REQUIRE(slope.certificate.has_value());
  CHECK(slope.certificate->slope_lhs == Rat(1));
}

TEST_CASE("bridge from isotropic subsheaves to two-step filtrations") {
  OrthSheafModel ex = builtin_example();
  std::vector<IsotropicDatum> family = coordinate_isotropic_family(ex);
  BridgeResult br = critgm_bridge(ex, family[0]);
  CHECK(br.mu_zero);
  CHECK(br.identity_holds);
  CHECK(br.filtration_side == EvPoly::constant(Rat(-6)));
  CHECK(br.orth_side == EvPoly::constant(Rat(-6)));
  CHECK(br.filtration.steps.size() == 2);
  CHECK(br.filtration.weights == std::vector<Rat>{Rat(1), Rat(1)});

  // hyperbolic O + O: F = e1 equals its own perpendicular, both sides vanish
  OrthSheafModel hyp{trivial_sheaf(2, Space::P2), hyperbolic_form(2), FormKind::Orthogonal,
                     std::nullopt};
  std::vector<IsotropicDatum> hfam = coordinate_isotropic_family(hyp);
  REQUIRE(!hfam.empty());
  BridgeResult hbr = critgm_bridge(hyp, hfam[0]);
  CHECK(hbr.mu_zero);
  CHECK(hbr.identity_holds);
  CHECK(hbr.filtration_side.is_zero());
  CHECK(hbr.orth_side.is_zero());

  // a datum with the wrong perpendicular rank is rejected
  IsotropicDatum wrong = family[0];
  wrong.rank = 1;
  wrong.hilbert_perp = ex.sheaf.subset_hilbert(std::vector<int>{2});
  CHECK_THROWS_AS(critgm_bridge(ex, wrong), Error);
}

TEST_CASE("bridge identity on random hyperbolic fixtures") {
  oracles::Rng rng(83);
  for (int it = 0; it < 40; ++it) {
    int p = rng.uniform(2, 4);
    OrthSheafModel model = random_hyperbolic_model(rng, p);
    for (const IsotropicDatum& d : coordinate_isotropic_family(model)) {
      BridgeResult br = critgm_bridge(model, d);
      CHECK(br.mu_zero);
      CHECK(br.identity_holds);
    }
  }
}

TEST_CASE("stability criteria agree between the orthogonal and tensor sides") {
  oracles::Rng rng(89);
  SearchFamily fam;
  for (int it = 0; it < 30; ++it) {
    int p = rng.uniform(2, 4);
    OrthSheafModel model = random_hyperbolic_model(rng, p);
    std::vector<IsotropicDatum> family = coordinate_isotropic_family(model);
    if (family.empty()) continue;

    // delta_1 > 0 regime
    DeltaPoly delta(EvPoly({Rat(1), Rat(0)}), Space::P2);
    StabilityVerdict orth_g = orth_stability(model, OrthMode::Gieseker, family);
    StabilityVerdict tens = search_verdict(model.sheaf, model.form, delta, fam);
    // semistable on one side must be semistable on the other
    CHECK((orth_g.status != Status::Unstable) == (tens.status != Status::Unstable));

    StabilityVerdict orth_s = orth_stability(model, OrthMode::Slope, family);
    StabilityVerdict tens_s = slope_search_verdict(model.sheaf, model.form, Rat(1), fam);
    CHECK((orth_s.status != Status::Unstable) == (tens_s.status != Status::Unstable));
  }
}

TEST_CASE("degeneracy certificates") {
  OrthSheafModel deg{trivial_sheaf(2, Space::P2),
                     TensorForm::bilinear({{Rat(1), Rat(0)}, {Rat(0), Rat(0)}},
                                          Symmetry::Symmetric),
                     FormKind::Orthogonal, std::nullopt};
  DegeneracyCertificate cert = degeneracy_certificate(deg);
  CHECK(cert.kernel_rank == 1);
  CHECK(cert.kernel[0] == Vec{Rat(0), Rat(1)});
  CHECK(cert.mu == Rat(2));
  CHECK(cert.slope_lhs_tau1 == Rat(2));

  OrthSheafModel ex = builtin_example();
  CHECK_THROWS_AS(degeneracy_certificate(ex), Error);  // nondegenerate
  OrthSheafModel zero{trivial_sheaf(2, Space::P2), TensorForm(2, 1, 2), FormKind::Orthogonal,
                      std::nullopt};
  CHECK_THROWS_AS(degeneracy_certificate(zero), Error);  // identically zero
}

TEST_CASE("degeneracy certificates always have positive slope violation") {
  oracles::Rng rng(97);
  int found = 0;
  for (int it = 0; it < 200 && found < 60; ++it) {
    int p = rng.uniform(2, 4);
    TensorForm q = oracles::random_symmetric_form(rng, p);
    if (det(q.matrix()) != Rat(0)) continue;
    OrthSheafModel model{trivial_sheaf(p, Space::P2), q, FormKind::Orthogonal, std::nullopt};
    DegeneracyCertificate cert = degeneracy_certificate(model);
    CHECK(cert.mu * Rat(1) > Rat(0));
    CHECK(cert.slope_lhs_tau1 > Rat(0));
    ++found;
  }
  CHECK(found > 0);
}

TEST_CASE("special orthogonal data") {
  CHECK(sos_check(identity_form(2), Rat(1)));
  CHECK(sos_check(identity_form(2), Rat(-1)));
  CHECK_FALSE(sos_check(TensorForm::bilinear({{Rat(1), Rat(0)}, {Rat(0), Rat(2)}}), Rat(1)));
  CHECK_THROWS_AS(sos_check(TensorForm::bilinear({{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}), Rat(1)),
                  Error);

  CHECK(sign_class_count(3, false) == 1);
  CHECK(sign_class_count(2, true) == 2);
  CHECK(sign_class_count(4, true) == 2);
  CHECK_THROWS_AS(sign_class_count(2, false), Error);
}
