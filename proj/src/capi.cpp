#include "ufn/ufn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ufn/errors.hpp"
#include "ufn/json_io.hpp"
#include "ufn/presentation.hpp"
#include "ufn/render.hpp"
#include "ufn/ufngraph.hpp"
#include "ufn/veronese.hpp"

struct ufn_presentation {
  ufn::Presentation impl;
};

struct ufn_graph {
  ufn::UfnGraph impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
ufn_status guarded(F&& body) {
  try {
    return body();
  } catch (const ufn::guard_error& e) {
    g_last_error = e.what();
    return UFN_GUARD_ERROR;
  } catch (const ufn::input_error& e) {
    g_last_error = e.what();
    return UFN_INPUT_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UFN_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return UFN_INTERNAL_ERROR;
  }
}

ufn_status null_arg(const char* what) {
  g_last_error = std::string(what) + " must not be NULL";
  return UFN_INPUT_ERROR;
}

// A word argument: a JSON array of generator names, the compact form for
// single-character alphabets, or dot-joined names otherwise. "" and a bare
// "1" (when no generator claims that name) denote the empty word.
ufn::Word parse_word_arg(const ufn::Presentation& p, const std::string& text) {
  if (text.empty()) return {};
  if (text == "1" && !p.letter_index("1")) return {};
  if (text.front() == '[') {
    nlohmann::json arr;
    try {
      arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ufn::input_error(std::string("invalid word JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ufn::input_error("word JSON must be an array");
    std::vector<std::string> names;
    for (const auto& s : arr) {
      if (!s.is_string())
        throw ufn::input_error("word entries must be generator names");
      names.push_back(s.get<std::string>());
    }
    return p.word_from_names(names);
  }
  if (p.single_char_names()) return p.word_from_compact(text);
  std::vector<std::string> names;
  std::string token;
  for (char c : text) {
    if (c == '.') {
      names.push_back(std::exchange(token, ""));
    } else {
      token += c;
    }
  }
  names.push_back(token);
  return p.word_from_names(names);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  auto flush = [&] {
    const auto b = token.find_first_not_of(' ');
    const auto e = token.find_last_not_of(' ');
    out.push_back(b == std::string::npos
                      ? std::string()
                      : token.substr(b, e - b + 1));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

}  // namespace

extern "C" {

const char* ufn_last_error(void) { return g_last_error.c_str(); }

void ufn_string_free(char* s) { std::free(s); }

ufn_status ufn_presentation_parse(const char* json_text,
                                  ufn_presentation** out) {
  if (!json_text) return null_arg("json_text");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new ufn_presentation{ufn::parse_presentation(json_text)};
    return UFN_OK;
  });
}

ufn_status ufn_presentation_from_quiver(const char* json_text,
                                        ufn_presentation** out) {
  if (!json_text) return null_arg("json_text");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new ufn_presentation{
        ufn::quiver_to_presentation(ufn::parse_quiver_input(json_text))};
    return UFN_OK;
  });
}

void ufn_presentation_free(ufn_presentation* p) { delete p; }

void ufn_presentation_set_guard(ufn_presentation* p, uint64_t max_candidates) {
  if (p) p->impl.set_enumeration_guard(max_candidates);
}

int ufn_presentation_ell(const ufn_presentation* p) {
  return p ? p->impl.ell() : -1;
}

ufn_status ufn_presentation_info(const ufn_presentation* p, const char* format,
                                 char** out) {
  if (!p) return null_arg("presentation");
  if (!format) return null_arg("format");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup_string(
        ufn::render_presentation_info(p->impl, ufn::parse_format(format)));
    return UFN_OK;
  });
}

ufn_status ufn_graph_build(const ufn_presentation* p, ufn_graph** out) {
  if (!p) return null_arg("presentation");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new ufn_graph{ufn::UfnGraph(p->impl)};
    return UFN_OK;
  });
}

void ufn_graph_free(ufn_graph* g) { delete g; }

ufn_status ufn_graph_render(const ufn_graph* g, const char* format,
                            int arrows_by_label, char** out) {
  if (!g) return null_arg("graph");
  if (!format) return null_arg("format");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup_string(ufn::render_graph(
        g->impl, ufn::parse_format(format),
        arrows_by_label ? ufn::ArrowNaming::label : ufn::ArrowNaming::payload));
    return UFN_OK;
  });
}

ufn_status ufn_hom_render(const ufn_graph* g, const char* word,
                          const char* format, char** out) {
  if (!g) return null_arg("graph");
  if (!format) return null_arg("format");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::optional<ufn::Word> query;
    if (word) query = parse_word_arg(g->impl.presentation(), word);
    *out = dup_string(
        ufn::render_hom(g->impl, query, ufn::parse_format(format)));
    return UFN_OK;
  });
}

ufn_status ufn_kernel_render(const ufn_graph* g, int max_degree,
                             const char* format, char** out) {
  if (!g) return null_arg("graph");
  if (!format) return null_arg("format");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup_string(ufn::render_kernel(g->impl.presentation(), g->impl,
                                         max_degree,
                                         ufn::parse_format(format)));
    return UFN_OK;
  });
}

ufn_status ufn_verify_run(const ufn_graph* g, int max_degree,
                          const char* format, int* all_passed, char** out) {
  if (!g) return null_arg("graph");
  if (!format) return null_arg("format");
  if (!out) return null_arg("out");
  return guarded([&] {
    bool ok = false;
    std::string text =
        ufn::render_verify(g->impl.presentation(), g->impl, max_degree,
                           ufn::parse_format(format), &ok);
    *out = dup_string(text);
    if (all_passed) *all_passed = ok ? 1 : 0;
    if (!ok) {
      g_last_error = "a verification check reported a counterexample";
      return UFN_VERIFY_FAILED;
    }
    return UFN_OK;
  });
}

ufn_status ufn_veronese_render(const ufn_presentation* p, int n,
                               int max_degree, const char* aliases,
                               const char* format, char** out) {
  if (!p) return null_arg("presentation");
  if (!format) return null_arg("format");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::vector<std::string> names;
    if (aliases) names = split_csv(aliases);
    *out = dup_string(ufn::render_veronese(p->impl, n, max_degree, names,
                                           ufn::parse_format(format)));
    return UFN_OK;
  });
}

ufn_status ufn_lrrl_render(const char* l_json, const char* r_json,
                           const char* reference_lr, const char* reference_rl,
                           int vertex_bound, const char* format, char** out) {
  if (!l_json) return null_arg("l_json");
  if (!r_json) return null_arg("r_json");
  if (!format) return null_arg("format");
  if (!out) return null_arg("out");
  return guarded([&] {
    ufn::LrRlOptions opts;
    if (reference_lr) opts.reference_lr_json = std::string(reference_lr);
    if (reference_rl) opts.reference_rl_json = std::string(reference_rl);
    opts.vertex_bound = vertex_bound;
    opts.format = ufn::parse_format(format);
    *out = dup_string(ufn::render_lrrl(l_json, r_json, opts));
    return UFN_OK;
  });
}

}  // extern "C"
