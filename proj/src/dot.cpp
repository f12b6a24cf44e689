#include "catlim/dot.hpp"

#include <sstream>

namespace catlim {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void emit_edges(std::ostream& os, const FinCat& c) {
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    os << "  n" << c.dom(m) << " -> n" << c.cod(m)
       << " [label=" << quote(c.morphism_name(m)) << "];\n";
  }
}

}  // namespace

std::string dot_category(const FinCat& c) {
  std::ostringstream os;
  os << "digraph category {\n";
  for (ObjId o = 0; o < c.object_count(); ++o)
    os << "  n" << o << " [label=" << quote(c.object_name(o)) << "];\n";
  emit_edges(os, c);
  os << "}\n";
  return os.str();
}

std::string dot_hocolim(const Hocolim& g) {
  const FinCat& ix = *g.diagram.index;
  std::ostringstream os;
  os << "digraph grothendieck {\n";
  for (ObjId i = 0; i < ix.object_count(); ++i) {
    os << "  subgraph cluster_" << i << " {\n"
       << "    label=" << quote(ix.object_name(i)) << ";\n";
    for (ObjId o = 0; o < g.cat->object_count(); ++o)
      if (g.objects[o].i == i)
        os << "    n" << o << " [label=" << quote(g.cat->object_name(o))
           << "];\n";
    os << "  }\n";
  }
  emit_edges(os, *g.cat);
  os << "}\n";
  return os.str();
}

}  // namespace catlim
