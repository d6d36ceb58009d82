#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ufn/ufn.h"

namespace {

struct CliError {
  std::string message;
};

struct StatusError {
  ufn_status status;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot read file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct PresDeleter {
  void operator()(ufn_presentation* p) const { ufn_presentation_free(p); }
};
struct GraphDeleter {
  void operator()(ufn_graph* g) const { ufn_graph_free(g); }
};
using PresPtr = std::unique_ptr<ufn_presentation, PresDeleter>;
using GraphPtr = std::unique_ptr<ufn_graph, GraphDeleter>;

struct InputOpts {
  std::string file;
  std::string format = "text";
  bool quiver_input = false;
  std::uint64_t guard = 0;
  bool guard_set = false;
};

PresPtr load_presentation(const InputOpts& o) {
  const std::string text = read_file(o.file);
  ufn_presentation* p = nullptr;
  const ufn_status st =
      o.quiver_input ? ufn_presentation_from_quiver(text.c_str(), &p)
                     : ufn_presentation_parse(text.c_str(), &p);
  if (st != UFN_OK) throw StatusError{st};
  PresPtr out(p);
  if (o.guard_set) ufn_presentation_set_guard(p, o.guard);
  return out;
}

GraphPtr build_graph(const PresPtr& p) {
  ufn_graph* g = nullptr;
  const ufn_status st = ufn_graph_build(p.get(), &g);
  if (st != UFN_OK) throw StatusError{st};
  return GraphPtr(g);
}

int finish(ufn_status st, char* out) {
  if (out) {
    std::fputs(out, stdout);
    ufn_string_free(out);
  }
  if (st != UFN_OK && st != UFN_VERIFY_FAILED) throw StatusError{st};
  return static_cast<int>(st);
}

// "from-quiver <file> [leaf] [options]" reads the file as a quiver with
// relations and hands it to the leaf subcommand (info when omitted).
std::vector<std::string> rewrite_from_quiver(std::vector<std::string> args) {
  if (args.empty() || args[0] != "from-quiver") return args;
  static const std::set<std::string> leaves = {"info", "graph",  "hom",
                                               "kernel", "verify", "veronese"};
  std::vector<std::string> out;
  std::string file;
  std::size_t i = 1;
  if (i < args.size() && !args[i].empty() && args[i][0] != '-') {
    file = args[i++];
  }
  std::string leaf = "info";
  if (i < args.size() && leaves.count(args[i])) leaf = args[i++];
  out.push_back(leaf);
  if (!file.empty()) out.push_back(file);
  out.push_back("--quiver-input");
  for (; i < args.size(); ++i) out.push_back(args[i]);
  return out;
}

void add_input_options(CLI::App* sub, InputOpts& o, bool with_dot) {
  sub->add_option("file", o.file, "Presentation JSON file")->required();
  sub->add_option("--format", o.format,
                  with_dot ? "Output format: text, json or dot"
                           : "Output format: text or json");
  sub->add_flag("--quiver-input", o.quiver_input,
                "Read the file as a quiver with relations instead");
  sub->add_option("--guard", o.guard,
                  "Enumeration guard (default 10000000 nodes)");
}

void note_guard(CLI::App* sub, InputOpts& o) {
  o.guard_set = sub->count("--guard") > 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  args = rewrite_from_quiver(std::move(args));

  CLI::App app{"Ufnarovskii graphs of finitely presented monomial algebras"};
  app.require_subcommand(1);

  InputOpts info_o;
  auto* info = app.add_subcommand(
      "info", "Generators, relations and the overlap bound ell");
  add_input_options(info, info_o, false);

  InputOpts graph_o;
  std::string arrow_names = "payload";
  auto* graph =
      app.add_subcommand("graph", "The graph: one vertex per legal word of "
                                  "length ell, one arrow per legal word of "
                                  "length ell+1");
  add_input_options(graph, graph_o, true);
  graph->add_option("--arrow-names", arrow_names,
                    "DOT arrow captions: payload (defining word) or label "
                    "(first letter)");

  InputOpts hom_o;
  std::string hom_word;
  auto* hom = app.add_subcommand(
      "hom", "The graded map into the path algebra: generator images, or the "
             "image of --word");
  add_input_options(hom, hom_o, false);
  hom->add_option("--word", hom_word,
                  "Word to map (compact, dot-joined, or a JSON name array)");

  InputOpts kernel_o;
  int kernel_degree = 10;
  auto* kernel = app.add_subcommand(
      "kernel", "Kernel generators and the degreewise dimension split");
  add_input_options(kernel, kernel_o, false);
  kernel->add_option("--max-degree", kernel_degree,
                     "Dimension table degree bound");

  InputOpts verify_o;
  int verify_degree = 10;
  auto* verify = app.add_subcommand(
      "verify", "Exhaustively check the construction up to a degree bound");
  add_input_options(verify, verify_o, false);
  verify->add_option("--max-degree", verify_degree,
                     "Exhaustive search degree bound");

  InputOpts veronese_o;
  int veronese_n = 0;
  int veronese_degree = 10;
  std::string aliases;
  auto* veronese = app.add_subcommand(
      "veronese", "The n-th Veronese subalgebra as a block presentation");
  add_input_options(veronese, veronese_o, true);
  veronese->add_option("n", veronese_n, "Veronese degree (n >= ell)")
      ->required();
  veronese->add_option("--max-degree", veronese_degree,
                       "Dimension agreement degree bound");
  veronese->add_option("--alias", aliases,
                       "Comma-separated new names for the block generators");

  std::string lrrl_l, lrrl_r, ref_lr_file, ref_rl_file;
  std::string lrrl_format = "text";
  int vertex_bound = 12;
  auto* lrrl = app.add_subcommand(
      "lrrl", "Quivers of the products L.R and R.L of a matrix pair");
  lrrl->add_option("L", lrrl_l, "Left matrix JSON file")->required();
  lrrl->add_option("R", lrrl_r, "Right matrix JSON file")->required();
  lrrl->add_option("--reference-lr", ref_lr_file,
                   "Quiver JSON to compare the L.R graph against");
  lrrl->add_option("--reference-rl", ref_rl_file,
                   "Quiver JSON to compare the R.L graph against");
  lrrl->add_option("--vertex-bound", vertex_bound,
                   "Isomorphism search refuses above this many vertices");
  lrrl->add_option("--format", lrrl_format, "Output format: text or json");

  app.add_subcommand("from-quiver",
                     "from-quiver <file> [info|graph|hom|kernel|verify|"
                     "veronese] [options]: run a subcommand on a quiver with "
                     "relations");

  try {
    std::vector<const char*> cargv;
    cargv.push_back(argc > 0 ? argv[0] : "ufn");
    for (const std::string& s : args) cargv.push_back(s.c_str());
    try {
      app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return static_cast<int>(UFN_INPUT_ERROR);
    }

    char* out = nullptr;
    if (app.got_subcommand(info)) {
      note_guard(info, info_o);
      PresPtr p = load_presentation(info_o);
      const ufn_status st =
          ufn_presentation_info(p.get(), info_o.format.c_str(), &out);
      return finish(st, out);
    }
    if (app.got_subcommand(graph)) {
      note_guard(graph, graph_o);
      if (arrow_names != "payload" && arrow_names != "label") {
        throw CliError{"--arrow-names must be payload or label"};
      }
      PresPtr p = load_presentation(graph_o);
      GraphPtr g = build_graph(p);
      const ufn_status st = ufn_graph_render(
          g.get(), graph_o.format.c_str(), arrow_names == "label" ? 1 : 0,
          &out);
      return finish(st, out);
    }
    if (app.got_subcommand(hom)) {
      note_guard(hom, hom_o);
      PresPtr p = load_presentation(hom_o);
      GraphPtr g = build_graph(p);
      const bool has_word = hom->count("--word") > 0;
      const ufn_status st =
          ufn_hom_render(g.get(), has_word ? hom_word.c_str() : nullptr,
                         hom_o.format.c_str(), &out);
      return finish(st, out);
    }
    if (app.got_subcommand(kernel)) {
      note_guard(kernel, kernel_o);
      PresPtr p = load_presentation(kernel_o);
      GraphPtr g = build_graph(p);
      const ufn_status st = ufn_kernel_render(g.get(), kernel_degree,
                                              kernel_o.format.c_str(), &out);
      return finish(st, out);
    }
    if (app.got_subcommand(verify)) {
      note_guard(verify, verify_o);
      PresPtr p = load_presentation(verify_o);
      GraphPtr g = build_graph(p);
      int all_passed = 0;
      const ufn_status st = ufn_verify_run(
          g.get(), verify_degree, verify_o.format.c_str(), &all_passed, &out);
      return finish(st, out);
    }
    if (app.got_subcommand(veronese)) {
      note_guard(veronese, veronese_o);
      PresPtr p = load_presentation(veronese_o);
      const bool has_alias = veronese->count("--alias") > 0;
      const ufn_status st = ufn_veronese_render(
          p.get(), veronese_n, veronese_degree,
          has_alias ? aliases.c_str() : nullptr, veronese_o.format.c_str(),
          &out);
      return finish(st, out);
    }
    if (app.got_subcommand(lrrl)) {
      const std::string l_text = read_file(lrrl_l);
      const std::string r_text = read_file(lrrl_r);
      std::string ref_lr, ref_rl;
      if (!ref_lr_file.empty()) ref_lr = read_file(ref_lr_file);
      if (!ref_rl_file.empty()) ref_rl = read_file(ref_rl_file);
      const ufn_status st = ufn_lrrl_render(
          l_text.c_str(), r_text.c_str(),
          ref_lr_file.empty() ? nullptr : ref_lr.c_str(),
          ref_rl_file.empty() ? nullptr : ref_rl.c_str(), vertex_bound,
          lrrl_format.c_str(), &out);
      return finish(st, out);
    }
    throw CliError{"no subcommand given"};
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return static_cast<int>(UFN_INPUT_ERROR);
  } catch (const StatusError& e) {
    std::fprintf(stderr, "error: %s\n", ufn_last_error());
    return static_cast<int>(e.status);
  }
}
