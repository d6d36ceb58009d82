#include "ufn/dot.hpp"

namespace ufn {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const Quiver& q, ArrowNaming naming,
                   const std::function<std::string(Letter)>& letter_name) {
  std::string out = "digraph Q {\n  rankdir=LR;\n";
  for (int v = 0; v < q.vertex_count(); ++v) {
    out += "  " + quoted(q.vertex(v).name) + ";\n";
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    std::string caption = arr.name;
    if (naming == ArrowNaming::label && letter_name && arr.label) {
      caption = letter_name(*arr.label);
    }
    out += "  " + quoted(q.vertex(arr.source).name) + " -> " +
           quoted(q.vertex(arr.target).name) + " [label=" + quoted(caption) +
           "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ufn
