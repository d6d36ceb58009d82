#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ufn/dot.hpp"
#include "ufn/pathalg.hpp"
#include "ufn/presentation.hpp"
#include "ufn/ufngraph.hpp"

namespace ufn {

enum class Format { text, json, dot };
Format parse_format(std::string_view s);  // "text" | "json" | "dot"

// "a_xx" for a single arrow, "a_yxx.a_xxx" for a longer path, "e_x" for a
// trivial path.
std::string path_string(const Path& p, const Quiver& q);
std::string path_sum_string(const PathSum& s, const Quiver& q);

std::string render_presentation_info(const Presentation& p, Format fmt);
std::string render_graph(const UfnGraph& g, Format fmt, ArrowNaming naming);
std::string render_hom(const UfnGraph& g, const std::optional<Word>& query,
                       Format fmt);
std::string render_kernel(const Presentation& p, const UfnGraph& g,
                          int max_degree, Format fmt);

// Runs the verification battery; *all_passed reports the outcome.
std::string render_verify(const Presentation& p, const UfnGraph& g,
                          int max_degree, Format fmt, bool* all_passed);

std::string render_veronese(const Presentation& p, int n, int max_degree,
                            const std::vector<std::string>& aliases,
                            Format fmt);

struct LrRlOptions {
  std::optional<std::string> reference_lr_json;
  std::optional<std::string> reference_rl_json;
  int vertex_bound = kDefaultIsomorphismVertexBound;
  Format format = Format::text;
};
std::string render_lrrl(const std::string& l_json, const std::string& r_json,
                        const LrRlOptions& opts);

}  // namespace ufn
