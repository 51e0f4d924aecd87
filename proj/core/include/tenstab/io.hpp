#pragma once

#include <string>

#include "tenstab/orth.hpp"
#include "tenstab/stability.hpp"

namespace tenstab {

// JSON file formats (rationals are strings "p/q" or "p", indices 1-based):
//   model:       {"space":"P2","summands":[{"twist":0,"colength":2},...]}
//   form:        {"s":2,"c":1,"dim":3,"symmetric":true,
//                 "entries":[["0","0","1/2"],...]}        (depth-s nesting;
//                 c>1 uses "copies":[entries,...])
//   filtration:  {"steps":[{"coordinate":[1,2]} |
//                          {"declared":{"rank":1,"hilbert":["1","3","1"],"label":"J"}} |
//                          {"basis":[["1","0","0"],...],"hilbert":[...]}],
//                 "weights":["1","1"],
//                 "pattern":{"nonzero":[[1,1],...]}}       (pattern optional)
//   orth model:  model plus "form", "kind":"orthogonal"|"symplectic", "psi"
//   delta:       {"coeffs":["0","3/2"]}  highest degree first

SheafModel parse_model(const std::string& json_text);
TensorForm parse_form(const std::string& json_text);
OrthSheafModel parse_orth_model(const std::string& json_text);
DeclaredChain parse_filtration(const std::string& json_text, const SheafModel& model, int arity);
DeltaPoly parse_delta_coeffs(const std::string& comma_separated, Space space);

std::string model_to_json(const SheafModel& model);
std::string form_to_json(const TensorForm& form);
std::string orth_model_to_json(const OrthSheafModel& model);
/// Serialize a certificate's filtration so it can be fed back via
/// --filtration (steps, weights, and the declared pattern when needed).
std::string filtration_to_json(const WeightedFiltration& filt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tenstab
