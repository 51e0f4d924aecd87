// Command line front end: parse model/form/filtration files, dispatch to the
// library, and emit machine-readable JSON reports.
//
// Exit codes: 0 = stable/ok, 1 = unstable or violation found, 2 = input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tenstab/cones.hpp"
#include "tenstab/errors.hpp"
#include "tenstab/fixtures.hpp"
#include "tenstab/git.hpp"
#include "tenstab/io.hpp"
#include "tenstab/orth.hpp"
#include "tenstab/stability.hpp"

using json = nlohmann::ordered_json;
using namespace tenstab;

namespace {

constexpr const char* kSchema = "tenstab-report/1";

json poly_json(const EvPoly& p) {
  json out = json::array();
  for (const Rat& c : p.coeffs()) out.push_back(c.str());
  if (p.is_zero()) out.push_back("0");
  return out;
}

json filtration_json(const WeightedFiltration& filt) {
  return json::parse(filtration_to_json(filt));
}

json certificate_json(const Certificate& cert) {
  json j = filtration_json(cert.filtration);
  if (cert.slope_mode) j["slope_lhs"] = cert.slope_lhs.str();
  else j["lhs"] = poly_json(cert.lhs);
  j["mu"] = cert.mu.str();
  return j;
}

json verdict_json(const StabilityVerdict& v) {
  json j;
  j["verdict"] = status_name(v.status);
  j["relative_to_family"] = v.relative_to_family;
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
  return j;
}

std::string family_description(const SearchFamily& fam) {
  std::string s;
  if (fam.use_coordinate)
    s = "coordinate chains up to " + std::to_string(fam.max_coordinate_steps) + " steps";
  if (!fam.declared.empty()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(fam.declared.size()) + " declared chain(s)";
  }
  return s.empty() ? "empty" : s;
}

std::vector<int> parse_int_csv(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) out.push_back(std::stoi(cur));
  return out;
}

std::vector<Rat> parse_rat_csv(const std::string& csv) {
  std::vector<Rat> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) out.push_back(Rat::parse(cur));
  return out;
}

struct CommonInputs {
  std::string model_path;
  std::string form_path;
  std::vector<std::string> filtration_paths;
  std::string family_mode = "both";  // coordinate | declared | both
  int max_steps = 2;
};

struct Loaded {
  SheafModel model;
  TensorForm form;
  SearchFamily family;
};

Loaded load_inputs(const CommonInputs& in) {
  if (in.model_path.empty()) fail(Errc::ParseError, "--model is required");
  std::string text = read_file(in.model_path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed model JSON");
  SheafModel model = parse_model(text);
  std::optional<TensorForm> form;
  if (j.contains("form")) form = parse_form(j["form"].dump());
  if (!in.form_path.empty()) form = parse_form(read_file(in.form_path));
  if (!form) fail(Errc::ParseError, "no form: embed one in the model file or pass --form");

  SearchFamily fam;
  fam.max_coordinate_steps = in.max_steps;
  fam.use_coordinate = (in.family_mode != "declared");
  if (in.family_mode != "coordinate") {
    for (const std::string& path : in.filtration_paths)
      fam.declared.push_back(parse_filtration(read_file(path), model, form->arity()));
  }
  if (in.family_mode == "declared" && fam.declared.empty())
    fail(Errc::ParseError, "--family declared needs at least one --filtration");
  return Loaded{std::move(model), std::move(*form), std::move(fam)};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int run_check(const CommonInputs& common, const std::string& delta_csv, const std::string& tau_str) {
  Loaded in = load_inputs(common);
  json report;
  report["schema"] = kSchema;
  report["command"] = "check";
  report["family"] = family_description(in.family);
  StabilityVerdict v = [&]() {
    if (!tau_str.empty()) {
      report["tau"] = Rat::parse(tau_str).str();
      return slope_search_verdict(in.model, in.form, Rat::parse(tau_str), in.family);
    }
    DeltaPoly delta = parse_delta_coeffs(delta_csv, in.model.space());
    report["delta"] = poly_json(delta.poly());
    return search_verdict(in.model, in.form, delta, in.family);
  }();
  report.update(verdict_json(v));
  emit(report);
  return v.status == Status::Unstable ? 1 : 0;
}

int run_threshold(const CommonInputs& common) {
  Loaded in = load_inputs(common);
  ThresholdResult res = delta2_threshold(in.model, in.form, in.family);
  json report;
  report["schema"] = kSchema;
  report["command"] = "threshold";
  report["family"] = family_description(in.family);
  report["threshold"] = res.threshold.str();
  report["unbounded"] = res.unbounded;
  if (res.achiever) {
    json a = filtration_json(res.achiever->filtration);
    a["first_term"] = res.achiever->first_term_constant.str();
    a["mu"] = res.achiever->mu.str();
    report["achieved_by"] = std::move(a);
  }
  json entries = json::array();
  for (const ThresholdEntry& e : res.entries) {
    json row = filtration_json(e.filtration);
    row["first_term"] = e.first_term_constant.str();
    row["mu"] = e.mu.str();
    row["threshold"] = e.threshold.str();
    entries.push_back(std::move(row));
  }
  report["entries"] = std::move(entries);
  report["warnings"] = res.warnings;
  emit(report);
  return 0;
}

int run_mu(const CommonInputs& common, const std::string& delta_csv) {
  Loaded in = load_inputs(common);
  if (in.family.declared.empty())
    fail(Errc::ParseError, "mu needs a --filtration file");
  json report;
  report["schema"] = kSchema;
  report["command"] = "mu";
  json results = json::array();
  for (const DeclaredChain& chain : in.family.declared) {
    std::vector<Rat> weights =
        chain.weights ? *chain.weights : std::vector<Rat>(chain.steps.size(), Rat(1));
    if (weights.size() == 1) weights[0] = Rat(1);
    std::vector<int> ranks;
    for (const Step& st : chain.steps) ranks.push_back(st.rank);
    VanishingPattern pattern = chain.pattern
        ? *chain.pattern
        : pattern_from_form(in.form, chain.steps);
    MuResult mr = mu(pattern, in.model.rank(), ranks, weights);
    WeightedFiltration filt = make_filtration(chain.steps, weights);
    json row = filtration_json(filt);
    row["mu"] = mr.mu.str();
    json arg = json::array();
    for (int v : mr.argmin) arg.push_back(v + 1);
    row["argmin"] = std::move(arg);
    row["epsilon"] = mr.epsilon;
    GammaVector g = gamma_vector(in.model.rank(), ranks, weights);
    json gam = json::array();
    for (const Rat& x : g.entries) gam.push_back(x.str());
    row["gamma"] = std::move(gam);
    if (!delta_csv.empty()) {
      DeltaPoly delta = parse_delta_coeffs(delta_csv, in.model.space());
      row["lhs"] = poly_json(delta_stability_lhs(in.model.hilbert(), filt, mr, delta));
    }
    results.push_back(std::move(row));
  }
  report["results"] = std::move(results);
  emit(report);
  return 0;
}

int run_cone(int r, const std::string& ranks_csv, int s) {
  std::vector<int> ranks = parse_int_csv(ranks_csv);
  json report;
  report["schema"] = kSchema;
  report["command"] = "cone";
  report["r"] = r;
  report["ranks"] = ranks;
  report["s"] = s;
  json cells = json::array();
  for (const ConeCell& cell : subdivide(r, ranks, s)) {
    json c;
    c["argmin"] = cell.argmin;
    json rays = json::array();
    for (const auto& ray : cell.rays) {
      json rv = json::array();
      for (const Int& x : ray) rv.push_back(x.str());
      rays.push_back(std::move(rv));
    }
    c["rays"] = std::move(rays);
    cells.push_back(std::move(c));
  }
  report["cells"] = std::move(cells);
  RaySet rs = edges(r, ranks, s);
  json rays = json::array();
  for (const ConeRay& ray : rs.rays) {
    json rj;
    json g = json::array();
    for (const Int& x : ray.gamma) g.push_back(x.str());
    json w = json::array();
    for (const Int& x : ray.weights) w.push_back(x.str());
    rj["gamma"] = std::move(g);
    rj["weights"] = std::move(w);
    rays.push_back(std::move(rj));
  }
  report["rays"] = std::move(rays);
  report["a1"] = rs.a1.str();
  json cands = json::array();
  for (const auto& cand : weight_candidates(r, ranks, s)) {
    json cv = json::array();
    for (const Rat& x : cand) cv.push_back(x.str());
    cands.push_back(std::move(cv));
  }
  report["candidates"] = std::move(cands);
  emit(report);
  return 0;
}

OnePS lambda_from_csv(const std::string& csv) {
  std::vector<Int> w;
  for (int v : parse_int_csv(csv)) w.push_back(Int(v));
  return make_oneps(std::move(w));
}

int run_git_mu_point(const std::string& form_path, const std::string& lambda_csv) {
  TensorForm form = parse_form(read_file(form_path));
  OnePS lam = lambda_from_csv(lambda_csv);
  json report;
  report["schema"] = kSchema;
  report["command"] = "git mu-point";
  report["mu"] = mu_point(form, lam).str();
  emit(report);
  return 0;
}

int run_git_limit(const std::string& form_path, const std::string& lambda_csv) {
  TensorForm form = parse_form(read_file(form_path));
  OnePS lam = lambda_from_csv(lambda_csv);
  TensorForm lim = limit_form(form, lam);
  json report;
  report["schema"] = kSchema;
  report["command"] = "git limit";
  report["mu"] = mu_point(form, lam).str();
  report["limit"] = json::parse(form_to_json(lim));
  emit(report);
  return 0;
}

int run_git_analyze(const std::string& form_path, const std::string& ranks_csv,
                    const std::string& weights_csv) {
  TensorForm form = parse_form(read_file(form_path));
  std::vector<int> ranks = parse_int_csv(ranks_csv);
  std::vector<Rat> weights = weights_csv.empty()
      ? std::vector<Rat>(ranks.size(), Rat(1))
      : parse_rat_csv(weights_csv);
  LimitAnalysis an = analyze_zero_weight_limit(form, ranks, weights);
  json report;
  report["schema"] = kSchema;
  report["command"] = "git analyze";
  report["det"] = an.det_original.str();
  report["det_limit"] = an.det_limit.str();
  report["limit"] = json::parse(form_to_json(an.limit));
  json blocks = json::array();
  for (auto [i, j] : an.support_blocks) blocks.push_back(json::array({i, j}));
  report["support_blocks"] = std::move(blocks);
  report["verified"] = {{"det_match", an.det_match},
                        {"antidiagonal_support", an.antidiagonal_support},
                        {"ranks_palindromic", an.ranks_palindromic},
                        {"weights_palindromic", an.weights_palindromic},
                        {"perps_match", an.perps_match}};
  emit(report);
  return an.all_verified() ? 0 : 1;
}

int run_orth_check(const std::string& model_path) {
  OrthSheafModel model = parse_orth_model(read_file(model_path));
  json report;
  report["schema"] = kSchema;
  report["command"] = "orth check";
  OrthValidation val = validate(model);
  json axioms = json::array();
  for (const AxiomCheck& c : val.checks)
    axioms.push_back({{"axiom", c.axiom}, {"passed", c.passed}, {"note", c.note}});
  report["axioms"] = std::move(axioms);
  report["det"] = val.det.str();
  if (!val.all_passed()) {
    if (val.det == Rat(0) && !model.form.is_zero()) {
      DegeneracyCertificate cert = degeneracy_certificate(model);
      json c = filtration_json(cert.filtration);
      c["mu"] = cert.mu.str();
      c["slope_lhs_tau1"] = cert.slope_lhs_tau1.str();
      report["degeneracy_certificate"] = std::move(c);
    }
    emit(report);
    return 1;
  }
  std::vector<IsotropicDatum> family = coordinate_isotropic_family(model);
  json fam = json::array();
  for (const IsotropicDatum& d : family) {
    json slots = json::array();
    for (int s : *d.slots) slots.push_back(s + 1);
    fam.push_back(std::move(slots));
  }
  report["isotropic_family"] = std::move(fam);
  StabilityVerdict g = orth_stability(model, OrthMode::Gieseker, family);
  StabilityVerdict s = orth_stability(model, OrthMode::Slope, family);
  report["gieseker"] = verdict_json(g);
  report["slope"] = verdict_json(s);
  emit(report);
  return (g.status == Status::Unstable || s.status == Status::Unstable) ? 1 : 0;
}

int run_orth_perp(const std::string& model_path, const std::string& subset_csv) {
  OrthSheafModel model = parse_orth_model(read_file(model_path));
  std::vector<int> slots;
  for (int v : parse_int_csv(subset_csv)) slots.push_back(v - 1);
  PerpResult pr = perp(model, slots);
  json report;
  report["schema"] = kSchema;
  report["command"] = "orth perp";
  report["isotropic"] = is_isotropic(model.form, slots);
  json basis = json::array();
  for (const Vec& row : pr.basis) {
    json rv = json::array();
    for (const Rat& x : row) rv.push_back(x.str());
    basis.push_back(std::move(rv));
  }
  report["basis"] = std::move(basis);
  report["rank"] = pr.rank;
  report["degree"] = pr.degree_of_f.str();
  if (pr.slots) {
    json s = json::array();
    for (int v : *pr.slots) s.push_back(v + 1);
    report["coordinate"] = std::move(s);
  }
  if (pr.hilbert) report["hilbert"] = poly_json(*pr.hilbert);
  emit(report);
  return 0;
}

int run_orth_example() {
  std::cout << orth_model_to_json(builtin_example()) << "\n";
  return 0;
}

int run_sequiv(const CommonInputs& common, const std::string& delta_csv) {
  Loaded in = load_inputs(common);
  DeltaPoly delta = parse_delta_coeffs(delta_csv, in.model.space());
  SEquivResult res = s_equiv_representative(in.form, delta, in.model, in.family);
  json report;
  report["schema"] = kSchema;
  report["command"] = "sequiv";
  report["iterations"] = res.iterations;
  report["stabilizer_dimension"] = res.stabilizer_dim;
  report["representative"] = json::parse(form_to_json(res.representative));
  json trace = json::array();
  for (const Certificate& c : res.trace) trace.push_back(certificate_json(c));
  report["trace"] = std::move(trace);
  emit(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stability checks for tensor, orthogonal and symplectic sheaves"};
  app.require_subcommand(1);

  CommonInputs common;
  std::string delta_csv, tau_str;

  auto add_common = [&](CLI::App* cmd, bool with_form_inputs = true) {
    if (with_form_inputs) {
      cmd->add_option("--model", common.model_path, "model JSON file");
      cmd->add_option("--form", common.form_path, "form JSON file (overrides embedded form)");
      cmd->add_option("--filtration", common.filtration_paths, "declared filtration JSON file(s)");
      cmd->add_option("--family", common.family_mode, "coordinate | declared | both")
          ->check(CLI::IsMember({"coordinate", "declared", "both"}));
      cmd->add_option("--max-steps", common.max_steps, "max coordinate chain length");
    }
  };

  CLI::App* check = app.add_subcommand("check", "delta- or slope-stability verdict");
  add_common(check);
  check->add_option("--delta", delta_csv, "delta coefficients, highest degree first");
  check->add_option("--tau", tau_str, "slope parameter (selects slope mode)");

  CLI::App* threshold = app.add_subcommand("threshold", "delta_2 instability threshold");
  add_common(threshold);

  CLI::App* mu_cmd = app.add_subcommand("mu", "mu-weight of declared filtrations");
  add_common(mu_cmd);
  mu_cmd->add_option("--delta", delta_csv, "also evaluate the stability left hand side");

  int cone_r = 0, cone_s = 2;
  std::string cone_ranks;
  CLI::App* cone = app.add_subcommand("cone", "weight-cone subdivision and edge rays");
  cone->add_option("--r", cone_r, "ambient rank")->required();
  cone->add_option("--ranks", cone_ranks, "filtration ranks, comma separated")->required();
  cone->add_option("--s", cone_s, "form arity");

  std::string git_form, git_lambda, git_ranks, git_weights;
  CLI::App* git = app.add_subcommand("git", "finite-dimensional weight operations");
  git->require_subcommand(1);
  CLI::App* gmu = git->add_subcommand("mu-point", "Hilbert-Mumford weight of a form");
  gmu->add_option("--form", git_form)->required();
  gmu->add_option("--lambda", git_lambda, "integer weights, comma separated")->required();
  CLI::App* glim = git->add_subcommand("limit", "one-parameter-subgroup limit of a form");
  glim->add_option("--form", git_form)->required();
  glim->add_option("--lambda", git_lambda)->required();
  CLI::App* gan = git->add_subcommand("analyze", "zero-weight limit block analysis");
  gan->add_option("--form", git_form)->required();
  gan->add_option("--ranks", git_ranks)->required();
  gan->add_option("--weights", git_weights);

  std::string orth_model, orth_subset;
  CLI::App* orth = app.add_subcommand("orth", "orthogonal/symplectic sheaf operations");
  orth->require_subcommand(1);
  CLI::App* ocheck = orth->add_subcommand("check", "axioms plus stability over isotropics");
  ocheck->add_option("--model", orth_model)->required();
  CLI::App* operp = orth->add_subcommand("perp", "perpendicular of a coordinate subsheaf");
  operp->add_option("--model", orth_model)->required();
  operp->add_option("--subset", orth_subset, "1-based summand indices")->required();
  orth->add_subcommand("example", "print the built-in P2 example model");

  CLI::App* sequiv = app.add_subcommand("sequiv", "S-equivalence representative");
  add_common(sequiv);
  sequiv->add_option("--delta", delta_csv, "delta coefficients, highest degree first");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      if (delta_csv.empty() && tau_str.empty())
        fail(Errc::ParseError, "check needs --delta or --tau");
      return run_check(common, delta_csv, tau_str);
    }
    if (threshold->parsed()) return run_threshold(common);
    if (mu_cmd->parsed()) return run_mu(common, delta_csv);
    if (cone->parsed()) return run_cone(cone_r, cone_ranks, cone_s);
    if (git->parsed()) {
      if (gmu->parsed()) return run_git_mu_point(git_form, git_lambda);
      if (glim->parsed()) return run_git_limit(git_form, git_lambda);
      if (gan->parsed()) return run_git_analyze(git_form, git_ranks, git_weights);
    }
    if (orth->parsed()) {
      if (ocheck->parsed()) return run_orth_check(orth_model);
      if (operp->parsed()) return run_orth_perp(orth_model, orth_subset);
      return run_orth_example();
    }
    if (sequiv->parsed()) {
      if (delta_csv.empty()) fail(Errc::ParseError, "sequiv needs --delta");
      return run_sequiv(common, delta_csv);
    }
  } catch (const Error& e) {
    json err;
    err["schema"] = kSchema;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["schema"] = kSchema;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  }
  return 2;
}
