#pragma once

#include <string>

#include "json.hpp"
#include "ufn/pathalg.hpp"
#include "ufn/presentation.hpp"
#include "ufn/quiver.hpp"
#include "ufn/veronese.hpp"

namespace ufn {

// Presentation schema:
//   {"generators": ["x", "y"], "relations": [["y","y","y"], ...]}
// A relation may also be a compact string ("yyy") when every generator name
// is a single character. Unknown keys are ignored.
Presentation parse_presentation(const std::string& json_text);

// Adds ell / normalized_relations / normalized_ell diagnostics next to the
// round-trippable generators + relations.
nlohmann::ordered_json presentation_json(const Presentation& p);

// A word as emitted: compact string when the alphabet allows it, otherwise an
// array of generator names.
nlohmann::ordered_json word_json(const Presentation& p, const Word& w);

nlohmann::ordered_json quiver_json(const Quiver& q);

// Reads a quiver for comparison purposes. Accepts the output of quiver_json
// as well as the leaner input schema:
//   {"vertices": ["1","2"],
//    "arrows": [{"name":"a","from":"1","to":"2"}, ...]}
Quiver parse_quiver(const std::string& json_text);

// Same schema plus "forbidden_paths": [["a","b"], ...] (arrow name lists).
QuiverInput parse_quiver_input(const std::string& json_text);

// A matrix is an array of equal-length arrays of nonnegative integers.
NatMatrix parse_matrix(const std::string& json_text);
nlohmann::ordered_json matrix_json(const NatMatrix& m);

}  // namespace ufn
