#include "ufn/render.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "json.hpp"
#include "ufn/errors.hpp"
#include "ufn/hom.hpp"
#include "ufn/json_io.hpp"
#include "ufn/verify.hpp"
#include "ufn/veronese.hpp"

namespace ufn {

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json bigint_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return ordered_json(static_cast<std::uint64_t>(v));
  }
  return ordered_json(v.str());
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string counted_list(const std::vector<std::string>& parts) {
  if (parts.empty()) return "(none)";
  return join(parts, ", ");
}

[[noreturn]] void no_dot_form(const char* what) {
  throw input_error(std::string(what) + " has no dot form");
}

ordered_json term_json(const Path& path, const BigInt& c, const Quiver& q) {
  ordered_json t;
  t["path"] = path_string(path, q);
  ordered_json arrows = ordered_json::array();
  for (int id : path.arrows()) arrows.push_back(q.arrow(id).name);
  t["arrows"] = std::move(arrows);
  t["from"] = q.vertex(path.source()).name;
  t["to"] = q.vertex(path.target()).name;
  t["coefficient"] = bigint_json(c);
  return t;
}

ordered_json image_json(const Presentation& p, const Word& w,
                        const PathSum& s, const Quiver& q) {
  ordered_json j;
  j["word"] = word_json(p, w);
  j["degree"] = w.size();
  j["zero"] = s.is_zero();
  ordered_json terms = ordered_json::array();
  for (const auto& [path, c] : s.terms()) terms.push_back(term_json(path, c, q));
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "dot") return Format::dot;
  throw input_error("unknown format: \"" + std::string(s) +
                    "\" (expected text, json or dot)");
}

std::string path_string(const Path& p, const Quiver& q) {
  if (p.is_trivial()) return "e_" + q.vertex(p.source()).name;
  std::vector<std::string> parts;
  for (int id : p.arrows()) parts.push_back("a_" + q.arrow(id).name);
  return join(parts, ".");
}

std::string path_sum_string(const PathSum& s, const Quiver& q) {
  if (s.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [path, c] : s.terms()) {
    std::string t = path_string(path, q);
    if (c != 1) t = c.str() + "*" + t;
    parts.push_back(std::move(t));
  }
  return join(parts, " + ");
}

std::string render_presentation_info(const Presentation& p, Format fmt) {
  if (fmt == Format::dot) no_dot_form("presentation info");
  if (fmt == Format::json) return dump(presentation_json(p));

  auto words = [&](const std::vector<Word>& ws) {
    std::vector<std::string> parts;
    for (const Word& w : ws) parts.push_back(p.word_string(w));
    return counted_list(parts);
  };
  std::string out;
  out += "generators (" + std::to_string(p.alphabet_size()) +
         "): " + counted_list(p.generator_names()) + "\n";
  out += "relations (" + std::to_string(p.forbidden().size()) +
         "): " + words(p.forbidden()) + "\n";
  out += "ell: " + std::to_string(p.ell()) + "\n";
  out += "normalized relations (" +
         std::to_string(p.normalized_forbidden().size()) +
         "): " + words(p.normalized_forbidden()) + "\n";
  out += "normalized ell: " + std::to_string(p.normalized_ell()) + "\n";
  return out;
}

std::string render_graph(const UfnGraph& g, Format fmt, ArrowNaming naming) {
  const Quiver& q = g.quiver();
  const Presentation& p = g.presentation();
  if (fmt == Format::dot) {
    return to_dot(q, naming,
                  [&p](Letter x) { return p.letter_name(x); });
  }
  if (fmt == Format::json) {
    ordered_json j;
    j["ell"] = g.ell();
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
      if (arr.label) e["label"] = p.letter_name(*arr.label);
      j["arrows"].push_back(std::move(e));
    }
    return dump(j);
  }

  std::string out = "ell: " + std::to_string(g.ell()) + "\n";
  std::vector<std::string> names;
  for (int v = 0; v < q.vertex_count(); ++v) names.push_back(q.vertex(v).name);
  out += "vertices (" + std::to_string(q.vertex_count()) +
         "): " + counted_list(names) + "\n";
  out += "arrows (" + std::to_string(q.arrow_count()) + "):\n";
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    out += "  a_" + arr.name + ": " + q.vertex(arr.source).name + " -> " +
           q.vertex(arr.target).name;
    if (arr.label) out += "  [" + p.letter_name(*arr.label) + "]";
    out += "\n";
  }
  return out;
}

std::string render_hom(const UfnGraph& g, const std::optional<Word>& query,
                       Format fmt) {
  if (fmt == Format::dot) no_dot_form("homomorphism output");
  const Presentation& p = g.presentation();
  const Quiver& q = g.quiver();

  if (query) {
    const PathSum s = f_word(*query, g);
    if (fmt == Format::json) return dump(image_json(p, *query, s, q));
    return "f(" + p.word_string(*query) + ") = " + path_sum_string(s, q) +
           "\n";
  }

  if (fmt == Format::json) {
    ordered_json j;
    j["letters"] = ordered_json::array();
    for (Letter x = 0; x < p.alphabet_size(); ++x) {
      j["letters"].push_back(image_json(p, Word{x}, f_letter(x, g), q));
    }
    return dump(j);
  }
  std::string out;
  for (Letter x = 0; x < p.alphabet_size(); ++x) {
    out += "f(" + p.letter_name(x) +
           ") = " + path_sum_string(f_letter(x, g), q) + "\n";
  }
  return out;
}

std::string render_kernel(const Presentation& p, const UfnGraph& g,
                          int max_degree, Format fmt) {
  if (fmt == Format::dot) no_dot_form("kernel output");
  const KernelData k = kernel_generators(p, g);
  const auto rows = kernel_dimension_table(p, g, k, max_degree);

  if (fmt == Format::json) {
    ordered_json j;
    j["ell"] = k.ell;
    j["generators"] = ordered_json::array();
    for (std::size_t i = 0; i < k.words.size(); ++i) {
      ordered_json e;
      e["word"] = word_json(p, k.words[i]);
      e["legal"] = static_cast<bool>(k.word_is_legal[i]);
      j["generators"].push_back(std::move(e));
    }
    j["dimensions"] = ordered_json::array();
    for (const DimensionRow& r : rows) {
      ordered_json e;
      e["degree"] = r.degree;
      e["algebra"] = r.algebra;
      e["kernel"] = r.kernel;
      e["image"] = r.image;
      j["dimensions"].push_back(std::move(e));
    }
    return dump(j);
  }

  std::string out = "ell: " + std::to_string(k.ell) + "\n";
  out += "kernel generators (" + std::to_string(k.words.size()) + "):\n";
  for (std::size_t i = 0; i < k.words.size(); ++i) {
    out += "  " + p.word_string(k.words[i]) +
           (k.word_is_legal[i] ? "  (legal)" : "  (illegal)") + "\n";
  }
  out += "dimensions to degree " + std::to_string(max_degree) + ":\n";
  for (const DimensionRow& r : rows) {
    out += "  degree " + std::to_string(r.degree) + ": algebra " +
           std::to_string(r.algebra) + ", kernel " + std::to_string(r.kernel) +
           ", image " + std::to_string(r.image) + "\n";
  }
  return out;
}

std::string render_verify(const Presentation& p, const UfnGraph& g,
                          int max_degree, Format fmt, bool* all_passed) {
  if (fmt == Format::dot) no_dot_form("verification output");
  const VerifyReport report = run_checks(p, g, max_degree);
  if (all_passed) *all_passed = report.all_passed();

  std::size_t passed = 0;
  for (const CheckResult& c : report.checks) passed += c.passed ? 1 : 0;

  if (fmt == Format::json) {
    ordered_json j;
    j["max_degree"] = max_degree;
    j["checks"] = ordered_json::array();
    for (const CheckResult& c : report.checks) {
      ordered_json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["cases"] = c.cases;
      e["degree_lo"] = c.degree_lo;
      e["degree_hi"] = c.degree_hi;
      if (!c.counterexample.empty()) e["counterexample"] = c.counterexample;
      j["checks"].push_back(std::move(e));
    }
    j["passed_count"] = passed;
    j["check_count"] = report.checks.size();
    j["all_passed"] = report.all_passed();
    return dump(j);
  }

  std::string out = "checks to degree " + std::to_string(max_degree) + ":\n";
  for (const CheckResult& c : report.checks) {
    out += std::string("  [") + (c.passed ? "PASS" : "FAIL") + "] " + c.name +
           " (" + std::to_string(c.cases) + " cases, degrees " +
           std::to_string(c.degree_lo) + ".." + std::to_string(c.degree_hi) +
           ")";
    if (!c.passed) out += ": counterexample " + c.counterexample;
    out += "\n";
  }
  out += "summary: " + std::to_string(passed) + "/" +
         std::to_string(report.checks.size()) + " passed\n";
  return out;
}

std::string render_veronese(const Presentation& p, int n, int max_degree,
                            const std::vector<std::string>& aliases,
                            Format fmt) {
  if (max_degree < 0) throw input_error("degree bound must be nonnegative");
  const VeronesePresentation vp = veronese_presentation(p, n);
  const Presentation bp = vp.to_presentation(aliases);
  const UfnGraph vg(bp);
  const UfnGraph base(p);

  // dim V_m == dim A_{mn}, with both sides counted through path powers of
  // the respective graphs (the word/path count agreement per graph is
  // checked independently by the verification battery).
  struct AgreementRow {
    int m;
    BigInt veronese;
    int base_degree;
    BigInt base;
    bool match;
  };
  std::vector<AgreementRow> table;
  bool all_match = true;
  for (int m = 0; m <= max_degree; ++m) {
    AgreementRow row;
    row.m = m;
    row.base_degree = m * n;
    row.veronese =
        m == 0 ? BigInt(1) : total_path_count(vg.quiver(), m - 1);
    row.base = m == 0 ? BigInt(1)
                      : total_path_count(base.quiver(), m * n - p.ell());
    row.match = row.veronese == row.base;
    all_match = all_match && row.match;
    table.push_back(std::move(row));
  }

  if (fmt == Format::dot) {
    return to_dot(vg.quiver(), ArrowNaming::payload);
  }

  if (fmt == Format::json) {
    ordered_json j;
    j["n"] = n;
    j["blocks"] = ordered_json::array();
    for (std::size_t i = 0; i < vp.blocks.size(); ++i) {
      ordered_json e;
      e["word"] = word_json(p, vp.blocks[i]);
      e["name"] = bp.letter_name(static_cast<Letter>(i));
      j["blocks"].push_back(std::move(e));
    }
    j["relations"] = ordered_json::array();
    for (const Word& w : bp.forbidden()) {
      j["relations"].push_back(word_json(bp, w));
    }
    ordered_json graph;
    graph["vertices"] = vg.quiver().vertex_count();
    graph["arrows"] = vg.quiver().arrow_count();
    j["graph"] = std::move(graph);
    j["dimensions"] = ordered_json::array();
    for (const AgreementRow& row : table) {
      ordered_json e;
      e["m"] = row.m;
      e["veronese"] = bigint_json(row.veronese);
      e["base_degree"] = row.base_degree;
      e["base"] = bigint_json(row.base);
      e["match"] = row.match;
      j["dimensions"].push_back(std::move(e));
    }
    j["all_match"] = all_match;
    return dump(j);
  }

  std::string out = "veronese degree: " + std::to_string(n) + "\n";
  out += "blocks (" + std::to_string(vp.blocks.size()) + "):\n";
  for (std::size_t i = 0; i < vp.blocks.size(); ++i) {
    const std::string word = p.word_string(vp.blocks[i]);
    const std::string& name = bp.letter_name(static_cast<Letter>(i));
    out += "  " + name + (name == word ? "" : " = " + word) + "\n";
  }
  std::vector<std::string> rel;
  for (const Word& w : bp.forbidden()) rel.push_back(bp.word_string(w));
  out += "relations (" + std::to_string(rel.size()) +
         "): " + counted_list(rel) + "\n";
  out += "graph: " + std::to_string(vg.quiver().vertex_count()) +
         " vertices, " + std::to_string(vg.quiver().arrow_count()) +
         " arrows\n";
  out += "dimension agreement to degree " + std::to_string(max_degree) +
         ":\n";
  for (const AgreementRow& row : table) {
    out += "  m=" + std::to_string(row.m) + ": veronese " +
           row.veronese.str() + ", base degree " +
           std::to_string(row.base_degree) + ": " + row.base.str() +
           (row.match ? ", ok" : ", MISMATCH") + "\n";
  }
  return out;
}

namespace {

struct IsoOutcome {
  std::string variant;  // "direct", "transpose" or "none"
  std::vector<std::string> mapping;  // "ours->theirs" per vertex
};

IsoOutcome compare_with(const Quiver& ours, const Quiver& ref,
                        int vertex_bound) {
  IsoOutcome out;
  if (auto m = graphs_isomorphic(ours, ref, vertex_bound)) {
    out.variant = "direct";
    for (int v = 0; v < ours.vertex_count(); ++v) {
      out.mapping.push_back(ours.vertex(v).name + "->" +
                            ref.vertex((*m)[static_cast<std::size_t>(v)]).name);
    }
    return out;
  }
  const Quiver flipped = reversed(ref);
  if (auto m = graphs_isomorphic(ours, flipped, vertex_bound)) {
    out.variant = "transpose";
    for (int v = 0; v < ours.vertex_count(); ++v) {
      out.mapping.push_back(
          ours.vertex(v).name + "->" +
          flipped.vertex((*m)[static_cast<std::size_t>(v)]).name);
    }
    return out;
  }
  out.variant = "none";
  return out;
}

std::string matrix_block(const NatMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += " ";
    for (std::size_t k = 0; k < m.cols(); ++k) out += " " + m.at(i, k).str();
    out += "\n";
  }
  return out;
}

}  // namespace

std::string render_lrrl(const std::string& l_json, const std::string& r_json,
                        const LrRlOptions& opts) {
  if (opts.format == Format::dot) no_dot_form("matrix pair output");
  const NatMatrix l = parse_matrix(l_json);
  const NatMatrix r = parse_matrix(r_json);
  const auto [lrq, rlq] = lr_rl_pair(l, r);
  const NatMatrix lr = multiply(l, r);
  const NatMatrix rl = multiply(r, l);

  std::optional<IsoOutcome> lr_iso, rl_iso;
  if (opts.reference_lr_json) {
    lr_iso = compare_with(lrq, parse_quiver(*opts.reference_lr_json),
                          opts.vertex_bound);
  }
  if (opts.reference_rl_json) {
    rl_iso = compare_with(rlq, parse_quiver(*opts.reference_rl_json),
                          opts.vertex_bound);
  }

  if (opts.format == Format::json) {
    ordered_json j;
    ordered_json lj;
    lj["matrix"] = matrix_json(lr);
    lj["vertices"] = lrq.vertex_count();
    lj["arrows"] = lrq.arrow_count();
    j["lr"] = std::move(lj);
    ordered_json rj;
    rj["matrix"] = matrix_json(rl);
    rj["vertices"] = rlq.vertex_count();
    rj["arrows"] = rlq.arrow_count();
    j["rl"] = std::move(rj);
    auto iso_json = [](const IsoOutcome& iso) {
      ordered_json e;
      e["isomorphic"] = iso.variant != "none";
      e["variant"] = iso.variant;
      ordered_json mapping = ordered_json::array();
      for (const std::string& s : iso.mapping) mapping.push_back(s);
      e["mapping"] = std::move(mapping);
      return e;
    };
    if (lr_iso) j["reference_lr"] = iso_json(*lr_iso);
    if (rl_iso) j["reference_rl"] = iso_json(*rl_iso);
    return dump(j);
  }

  std::string out;
  out += "L: " + std::to_string(l.rows()) + "x" + std::to_string(l.cols()) +
         ", R: " + std::to_string(r.rows()) + "x" + std::to_string(r.cols()) +
         "\n";
  out += "LR: " + std::to_string(lrq.vertex_count()) + " vertices, " +
         std::to_string(lrq.arrow_count()) + " arrows\n";
  out += matrix_block(lr);
  out += "RL: " + std::to_string(rlq.vertex_count()) + " vertices, " +
         std::to_string(rlq.arrow_count()) + " arrows\n";
  out += matrix_block(rl);
  auto iso_line = [](const char* which, const IsoOutcome& iso) {
    std::string s = std::string("reference ") + which + ": ";
    if (iso.variant == "none") {
      s += "not isomorphic (checked direct and transpose)\n";
    } else {
      s += "isomorphic (" + iso.variant + "); mapping: " +
           join(iso.mapping, ", ") + "\n";
    }
    return s;
  };
  if (lr_iso) out += iso_line("LR", *lr_iso);
  if (rl_iso) out += iso_line("RL", *rl_iso);
  return out;
}

}  // namespace ufn
