#include "folp/textio/dot.hpp"

#include <sstream>

namespace folp {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string set_label(const SignedSet& content) {
  std::string out = "{";
  bool first = true;
  for (const auto& sp : content) {
    if (!first) out += ", ";
    first = false;
    out += (sp.positive ? "" : "not ") + sp.pred.name;
  }
  return out + "}";
}

std::string atom_name(const CompletionStructure& cs, const AtomKey& k) {
  if (k.is_binary()) return cs.ctx->bpred_at(k.pred).name + "(" + cs.name(k.node) + "," + cs.name(k.leaf) + ")";
  return cs.ctx->upred_at(k.pred).name + "(" + cs.name(k.node) + ")";
}

}  // namespace

std::string to_dot(const CompletionStructure& cs) {
  std::ostringstream out;
  out << "digraph completion {\n";
  for (int x = 0; x < static_cast<int>(cs.ef.size()); ++x) {
    out << "  " << quote(cs.name(x)) << " [label=" << quote(cs.name(x) + "\n" + set_label(cs.content(x)));
    if (cs.is_constant(x)) out << ", shape=box";
    out << "];\n";
  }
  for (int a = 0; a < static_cast<int>(cs.ef.arc_count()); ++a) {
    const auto& arc = cs.ef.arc(a);
    out << "  " << quote(cs.name(arc.from)) << " -> " << quote(cs.name(arc.to))
        << " [label=" << quote(set_label(cs.arc_content(a)));
    if (arc.es) out << ", style=dashed";
    out << "];\n";
  }
  for (const auto& [blocking, blocked] : cs.bl) {
    out << "  " << quote(cs.name(blocked)) << " -> " << quote(cs.name(blocking))
        << " [label=\"blocks\", style=dotted, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dependency_dot(const CompletionStructure& cs) {
  std::ostringstream out;
  out << "digraph dependencies {\n";
  for (int v = 0; v < static_cast<int>(cs.g.vertex_count()); ++v) {
    out << "  v" << v << " [label=" << quote(atom_name(cs, cs.g.atom(v))) << "];\n";
  }
  for (const auto& [from, to] : cs.g.arcs()) out << "  v" << from << " -> v" << to << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const MarkedGraph& graph) {
  std::ostringstream out;
  out << "digraph predicates {\n";
  for (const auto& p : graph.vertices) out << "  " << quote(p.name + "/" + std::to_string(p.arity)) << ";\n";
  for (const auto& arc : graph.arcs) {
    out << "  " << quote(arc.from.name + "/" + std::to_string(arc.from.arity)) << " -> "
        << quote(arc.to.name + "/" + std::to_string(arc.to.arity));
    if (arc.marked) out << " [label=\"m\", style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace folp
