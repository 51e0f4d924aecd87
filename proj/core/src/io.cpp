#include "tenstab/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tenstab/errors.hpp"

namespace tenstab {

using json = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON");
  return j;
}

Rat rat_field(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  fail(Errc::ParseError, "rationals must be strings like \"3/2\" or integers");
}

EvPoly poly_field(const json& j) {
  if (!j.is_array()) fail(Errc::ParseError, "polynomials are coefficient arrays, highest first");
  std::vector<Rat> coeffs;
  for (const auto& c : j) coeffs.push_back(rat_field(c));
  return EvPoly(std::move(coeffs));
}

json poly_json(const EvPoly& p) {
  json out = json::array();
  for (const Rat& c : p.coeffs()) out.push_back(c.str());
  if (p.is_zero()) out.push_back("0");
  return out;
}

SheafModel model_from_json(const json& j) {
  if (!j.contains("space") || !j.contains("summands"))
    fail(Errc::ParseError, "model needs 'space' and 'summands'");
  Space space = parse_space(j["space"].get<std::string>());
  std::vector<Summand> summands;
  for (const auto& s : j["summands"]) {
    Summand sm;
    sm.twist = s.value("twist", 0);
    sm.colength = s.value("colength", 0);
    summands.push_back(sm);
  }
  return SheafModel(space, std::move(summands));
}

void fill_entries(TensorForm& form, int copy, std::vector<int>& idx, int depth, const json& node) {
  if (depth == form.arity()) {
    form.set_entry(copy, idx, rat_field(node));
    return;
  }
  if (!node.is_array() || static_cast<int>(node.size()) != form.dim())
    fail(Errc::ParseError, "entries must nest to depth s with dim-many values per level");
  for (int i = 0; i < form.dim(); ++i) {
    idx[static_cast<size_t>(depth)] = i;
    fill_entries(form, copy, idx, depth + 1, node[static_cast<size_t>(i)]);
  }
}

TensorForm form_from_json(const json& j) {
  int s = j.value("s", 2);
  int c = j.value("c", 1);
  if (!j.contains("dim")) fail(Errc::ParseError, "form needs 'dim'");
  int dim = j["dim"].get<int>();
  Symmetry sym = Symmetry::None;
  if (j.value("symmetric", false)) sym = Symmetry::Symmetric;
  if (j.value("antisymmetric", false)) sym = Symmetry::Antisymmetric;
  TensorForm form(s, c, dim, sym);
  std::vector<int> idx(static_cast<size_t>(s), 0);
  if (j.contains("copies")) {
    const json& copies = j["copies"];
    if (static_cast<int>(copies.size()) != c) fail(Errc::ParseError, "'copies' must list c blocks");
    for (int k = 0; k < c; ++k) fill_entries(form, k, idx, 0, copies[static_cast<size_t>(k)]);
  } else if (j.contains("entries")) {
    if (c != 1) fail(Errc::ParseError, "c > 1 forms use 'copies'");
    fill_entries(form, 0, idx, 0, j["entries"]);
  } else {
    fail(Errc::ParseError, "form needs 'entries' or 'copies'");
  }
  form.validate_symmetry();
  return form;
}

json entries_json(const TensorForm& form, int copy, std::vector<int>& idx, int depth) {
  json out = json::array();
  if (depth == form.arity() - 1) {
    for (int i = 0; i < form.dim(); ++i) {
      idx[static_cast<size_t>(depth)] = i;
      out.push_back(form.entry(copy, idx).str());
    }
    return out;
  }
  for (int i = 0; i < form.dim(); ++i) {
    idx[static_cast<size_t>(depth)] = i;
    out.push_back(entries_json(form, copy, idx, depth + 1));
  }
  return out;
}

json form_json(const TensorForm& form) {
  json j;
  j["s"] = form.arity();
  j["c"] = form.copies();
  j["dim"] = form.dim();
  if (form.symmetry() == Symmetry::Symmetric) j["symmetric"] = true;
  if (form.symmetry() == Symmetry::Antisymmetric) j["antisymmetric"] = true;
  std::vector<int> idx(static_cast<size_t>(form.arity()), 0);
  if (form.copies() == 1) {
    j["entries"] = entries_json(form, 0, idx, 0);
  } else {
    json copies = json::array();
    for (int k = 0; k < form.copies(); ++k) copies.push_back(entries_json(form, k, idx, 0));
    j["copies"] = std::move(copies);
  }
  return j;
}

}  // namespace

SheafModel parse_model(const std::string& text) { return model_from_json(parse_text(text)); }

TensorForm parse_form(const std::string& text) { return form_from_json(parse_text(text)); }

OrthSheafModel parse_orth_model(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("form")) fail(Errc::ParseError, "orth model needs an embedded 'form'");
  OrthSheafModel m{model_from_json(j), form_from_json(j["form"]), FormKind::Orthogonal,
                   std::nullopt};
  std::string kind = j.value("kind", "orthogonal");
  if (kind == "symplectic") m.kind = FormKind::Symplectic;
  else if (kind != "orthogonal") fail(Errc::ParseError, "kind must be orthogonal or symplectic");
  if (j.contains("psi")) m.psi = rat_field(j["psi"]);
  return m;
}

DeclaredChain parse_filtration(const std::string& text, const SheafModel& model, int arity) {
  json j = parse_text(text);
  if (!j.contains("steps")) fail(Errc::ParseError, "filtration needs 'steps'");
  DeclaredChain chain;
  for (const auto& s : j["steps"]) {
    if (s.contains("coordinate")) {
      std::vector<int> slots;
      for (const auto& v : s["coordinate"]) slots.push_back(v.get<int>() - 1);  // 1-based in files
      chain.steps.push_back(coordinate_step(model, std::move(slots)));
    } else if (s.contains("declared")) {
      const json& d = s["declared"];
      chain.steps.push_back(declared_step(model, d.at("rank").get<int>(),
                                          poly_field(d.at("hilbert")), d.value("label", "")));
    } else if (s.contains("basis")) {
      Mat basis;
      for (const auto& row : s["basis"]) {
        Vec v;
        for (const auto& x : row) v.push_back(rat_field(x));
        basis.push_back(std::move(v));
      }
      chain.steps.push_back(
          subspace_step(model, std::move(basis), poly_field(s.at("hilbert")), s.value("label", "")));
    } else {
      fail(Errc::ParseError, "each step needs 'coordinate', 'declared' or 'basis'");
    }
  }
  if (j.contains("weights")) {
    std::vector<Rat> w;
    for (const auto& v : j["weights"]) w.push_back(rat_field(v));
    if (w.size() != chain.steps.size())
      fail(Errc::ParseError, "weights must match the number of steps");
    chain.weights = std::move(w);
  }
  if (j.contains("pattern")) {
    std::vector<std::vector<int>> gens;
    for (const auto& g : j["pattern"].at("nonzero")) {
      std::vector<int> idx;
      for (const auto& v : g) idx.push_back(v.get<int>() - 1);  // 1-based levels in files
      gens.push_back(std::move(idx));
    }
    chain.pattern = VanishingPattern::from_generators(
        static_cast<int>(chain.steps.size()) + 1, arity, gens);
  }
  chain.name = j.value("name", "");
  return chain;
}

DeltaPoly parse_delta_coeffs(const std::string& csv, Space space) {
  std::vector<Rat> coeffs;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) coeffs.push_back(Rat::parse(cur));
  if (coeffs.empty()) fail(Errc::ParseError, "delta needs at least one coefficient");
  return DeltaPoly(EvPoly(std::move(coeffs)), space);
}

std::string model_to_json(const SheafModel& model) {
  json j;
  j["space"] = space_name(model.space());
  json arr = json::array();
  for (const Summand& s : model.summands()) arr.push_back({{"twist", s.twist}, {"colength", s.colength}});
  j["summands"] = std::move(arr);
  return j.dump(2);
}

std::string form_to_json(const TensorForm& form) { return form_json(form).dump(2); }

std::string orth_model_to_json(const OrthSheafModel& model) {
  json j = json::parse(model_to_json(model.sheaf));
  j["kind"] = model.kind == FormKind::Symplectic ? "symplectic" : "orthogonal";
  j["form"] = form_json(model.form);
  if (model.psi) j["psi"] = model.psi->str();
  return j.dump(2);
}

std::string filtration_to_json(const WeightedFiltration& filt) {
  json j;
  json steps = json::array();
  for (const Step& s : filt.steps) {
    json st;
    if (s.slots) {
      json slots = json::array();
      for (int v : *s.slots) slots.push_back(v + 1);
      st["coordinate"] = std::move(slots);
    } else if (s.basis) {
      json basis = json::array();
      for (const Vec& row : *s.basis) {
        json r = json::array();
        for (const Rat& x : row) r.push_back(x.str());
        basis.push_back(std::move(r));
      }
      st["basis"] = std::move(basis);
      st["hilbert"] = poly_json(s.hilbert);
      if (!s.label.empty()) st["label"] = s.label;
    } else {
      st["declared"] = {{"rank", s.rank}, {"hilbert", poly_json(s.hilbert)}, {"label", s.label}};
    }
    steps.push_back(std::move(st));
  }
  j["steps"] = std::move(steps);
  json w = json::array();
  for (const Rat& x : filt.weights) w.push_back(x.str());
  j["weights"] = std::move(w);
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace tenstab
