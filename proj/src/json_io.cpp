#include "ufn/json_io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "ufn/errors.hpp"

namespace ufn {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
}

// Names appearing in input files: identifier-ish, so compact word strings and
// dotted joins stay unambiguous.
bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string require_name(const json& j, const char* what) {
  if (!j.is_string() || !valid_name(j.get<std::string>())) {
    throw input_error(std::string(what) +
                      " must be a nonempty alphanumeric/underscore string");
  }
  return j.get<std::string>();
}

ordered_json bigint_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return ordered_json(static_cast<std::uint64_t>(v));
  }
  return ordered_json(v.str());
}

}  // namespace

Presentation parse_presentation(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object()) throw input_error("presentation must be a JSON object");
  if (!j.contains("generators") || !j["generators"].is_array() ||
      j["generators"].empty()) {
    throw input_error("presentation needs a nonempty \"generators\" array");
  }
  std::vector<std::string> names;
  for (const json& g : j["generators"]) {
    names.push_back(require_name(g, "generator name"));
  }
  bool single = true;
  for (const std::string& n : names) single = single && n.size() == 1;

  std::vector<Word> forbidden;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) {
      throw input_error("\"relations\" must be an array");
    }
    std::map<std::string, Letter, std::less<>> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      index.emplace(names[i], static_cast<Letter>(i));
    }
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw input_error("relation uses unknown generator: " + name);
      }
      return it->second;
    };
    for (const json& r : j["relations"]) {
      Word w;
      if (r.is_string()) {
        if (!single) {
          throw input_error(
              "compact relation strings need single-character generator "
              "names");
        }
        for (char c : r.get<std::string>()) w.push_back(lookup({c}));
      } else if (r.is_array()) {
        for (const json& s : r) {
          if (!s.is_string()) {
            throw input_error("relation entries must be generator names");
          }
          w.push_back(lookup(s.get<std::string>()));
        }
      } else {
        throw input_error("each relation must be a string or a name array");
      }
      forbidden.push_back(std::move(w));
    }
  }
  return Presentation(names, forbidden);
}

nlohmann::ordered_json word_json(const Presentation& p, const Word& w) {
  if (p.single_char_names()) {
    std::string s;
    for (Letter x : w) s += p.letter_name(x);
    return ordered_json(s);
  }
  ordered_json arr = ordered_json::array();
  for (Letter x : w) arr.push_back(p.letter_name(x));
  return arr;
}

nlohmann::ordered_json presentation_json(const Presentation& p) {
  ordered_json j;
  j["generators"] = ordered_json::array();
  for (Letter x = 0; x < p.alphabet_size(); ++x) {
    j["generators"].push_back(p.letter_name(x));
  }
  j["relations"] = ordered_json::array();
  for (const Word& w : p.forbidden()) j["relations"].push_back(word_json(p, w));
  j["ell"] = p.ell();
  j["normalized_relations"] = ordered_json::array();
  for (const Word& w : p.normalized_forbidden()) {
    j["normalized_relations"].push_back(word_json(p, w));
  }
  j["normalized_ell"] = p.normalized_ell();
  return j;
}

nlohmann::ordered_json quiver_json(const Quiver& q) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (int v = 0; v < q.vertex_count(); ++v) {
    j["vertices"].push_back(q.vertex(v).name);
  }
  j["arrows"] = ordered_json::array();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    ordered_json e;
    e["name"] = arr.name;
    e["from"] = q.vertex(arr.source).name;
    e["to"] = q.vertex(arr.target).name;
    j["arrows"].push_back(std::move(e));
  }
  return j;
}

namespace {

Quiver quiver_from_json(const json& j) {
  if (!j.is_object()) throw input_error("quiver must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw input_error("quiver needs a \"vertices\" array");
  }
  Quiver q;
  std::map<std::string, int, std::less<>> vid;
  for (const json& v : j["vertices"]) {
    std::string name;
    if (v.is_string()) {
      name = require_name(v, "vertex name");
    } else if (v.is_object() && v.contains("name")) {
      name = require_name(v["name"], "vertex name");
    } else {
      throw input_error("each vertex must be a name or an object with one");
    }
    if (vid.count(name)) throw input_error("duplicate vertex name: " + name);
    vid.emplace(name, q.add_vertex(Vertex{name, std::nullopt}));
  }
  std::set<std::string> arrow_names;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) {
      throw input_error("\"arrows\" must be an array");
    }
    for (const json& a : j["arrows"]) {
      if (!a.is_object() || !a.contains("from") || !a.contains("to")) {
        throw input_error("each arrow needs \"from\" and \"to\"");
      }
      const std::string from = require_name(a["from"], "arrow \"from\"");
      const std::string to = require_name(a["to"], "arrow \"to\"");
      auto fi = vid.find(from);
      auto ti = vid.find(to);
      if (fi == vid.end() || ti == vid.end()) {
        throw input_error("arrow references unknown vertex");
      }
      std::string name;
      if (a.contains("name")) {
        name = require_name(a["name"], "arrow name");
      } else {
        name = "a" + std::to_string(q.arrow_count());
      }
      if (!arrow_names.insert(name).second) {
        throw input_error("duplicate arrow name: " + name);
      }
      q.add_arrow(Arrow{fi->second, ti->second, name, std::nullopt,
                        std::nullopt});
    }
  }
  return q;
}

}  // namespace

Quiver parse_quiver(const std::string& json_text) {
  return quiver_from_json(parse_text(json_text));
}

QuiverInput parse_quiver_input(const std::string& json_text) {
  const json j = parse_text(json_text);
  QuiverInput qi;
  qi.quiver = quiver_from_json(j);
  if (!j.contains("forbidden_paths")) return qi;
  if (!j["forbidden_paths"].is_array()) {
    throw input_error("\"forbidden_paths\" must be an array");
  }
  std::map<std::string, int, std::less<>> aid;
  for (int a = 0; a < qi.quiver.arrow_count(); ++a) {
    aid.emplace(qi.quiver.arrow(a).name, a);
  }
  for (const json& path : j["forbidden_paths"]) {
    if (!path.is_array()) {
      throw input_error("each forbidden path must be an arrow-name array");
    }
    std::vector<int> ids;
    for (const json& s : path) {
      const std::string name = require_name(s, "forbidden path entry");
      auto it = aid.find(name);
      if (it == aid.end()) {
        throw input_error("forbidden path uses unknown arrow: " + name);
      }
      ids.push_back(it->second);
    }
    qi.forbidden_paths.push_back(std::move(ids));
  }
  return qi;
}

NatMatrix parse_matrix(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_array()) throw input_error("matrix must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw input_error("matrix rows must be arrays");
    cols = j[0].size();
  }
  NatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw input_error("matrix rows must all have the same length");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const json& e = j[i][k];
      if (!e.is_number_integer() && !e.is_number_unsigned()) {
        throw input_error("matrix entries must be integers");
      }
      if (e.is_number_integer() && e.get<long long>() < 0) {
        throw input_error("matrix entries must be nonnegative");
      }
      m.at(i, k) = BigInt(e.get<unsigned long long>());
    }
  }
  return m;
}

nlohmann::ordered_json matrix_json(const NatMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(bigint_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ufn
