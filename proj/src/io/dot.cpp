#include "io/dot.hpp"

#include <sstream>

namespace pmlat {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void emit_nodes(std::ostringstream& os, const Poset& p) {
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << p.elem(i).digest() << " [label=" << quote(p.elem(i).label())
       << "];\n";
}

}  // namespace

std::string emit_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  emit_nodes(os, p);
  for (auto [a, b] : p.cover_pairs())
    os << "  n" << p.elem(a).digest() << " -> n" << p.elem(b).digest() << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_dot(const MeasuredPoset& m) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  emit_nodes(os, m.poset);
  for (auto [a, b] : m.poset.cover_pairs()) {
    os << "  n" << m.poset.elem(a).digest() << " -> n" << m.poset.elem(b).digest();
    int v = m.val(b, a);
    if (v != m.target->zero())
      os << " [label=" << quote(m.target->elem(v).name()) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pmlat
