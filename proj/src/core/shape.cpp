#include <algorithm>
#include <optional>

#include "folp/core/program.hpp"

namespace folp {

namespace {

GeneralRule general(const FlatRule& flat, std::string reason) {
  return GeneralRule{flat.head, flat.free, flat.body, flat.neq, std::move(reason)};
}

SignedPredicate signed_of(const Literal& lit) { return {lit.atom.pred, lit.positive}; }

bool arity_ok(const Atom& a) {
  return (a.pred.arity == 1 || a.pred.arity == 2) && a.args.size() == static_cast<std::size_t>(a.pred.arity);
}

std::optional<Term> constraint_root(const FlatRule& flat) {
  std::optional<Term> root;
  for (const auto& lit : flat.body) {
    if (lit.atom.pred.arity != 2) continue;
    if (root && *root != lit.atom.args[0]) return std::nullopt;
    root = lit.atom.args[0];
  }
  if (root) return root;
  std::vector<Term> vars;
  for (const auto& lit : flat.body) {
    const Term& t = lit.atom.args[0];
    if (t.is_variable() && std::find(vars.begin(), vars.end(), t) == vars.end()) vars.push_back(t);
  }
  if (vars.size() > 1) return std::nullopt;
  if (vars.size() == 1) return vars.front();
  if (flat.body.empty()) return std::nullopt;
  return flat.body.front().atom.args[0];
}

// Binary shape applies to constraints whose arcs all lead to one other term.
bool binary_constraint_shape(const FlatRule& flat, const Term& root) {
  if (!flat.neq.empty()) return false;
  std::optional<Term> leaf;
  for (const auto& lit : flat.body) {
    if (lit.atom.pred.arity != 2) continue;
    if (lit.atom.args[1] == root) return false;
    if (leaf && *leaf != lit.atom.args[1]) return false;
    leaf = lit.atom.args[1];
  }
  if (!leaf) return false;
  return std::all_of(flat.body.begin(), flat.body.end(), [&](const Literal& lit) {
    return lit.atom.pred.arity == 2 || lit.atom.args[0] == root || lit.atom.args[0] == *leaf;
  });
}

std::variant<UnaryBody, std::string> shape_unary(const FlatRule& flat, const Term& root) {
  UnaryBody body;
  body.root = root;
  auto group = [&](const Term& t) -> Successor* {
    for (auto& s : body.successors) {
      if (s.term == t) return &s;
    }
    return nullptr;
  };
  for (const auto& lit : flat.body) {
    if (lit.atom.pred.arity == 2) {
      if (lit.atom.args[0] != root) return std::string("binary literal not rooted at the head term");
      const Term& t = lit.atom.args[1];
      Successor* s = group(t);
      if (!s) {
        body.successors.push_back({t, {}, {}});
        s = &body.successors.back();
      }
      insert_unique(s->gamma, signed_of(lit));
    }
  }
  for (const auto& lit : flat.body) {
    if (lit.atom.pred.arity != 1) continue;
    const Term& t = lit.atom.args[0];
    if (t == root) {
      insert_unique(body.beta, signed_of(lit));
      continue;
    }
    Successor* s = group(t);
    if (!s) {
      if (t.is_variable()) return "term " + t.name + " is not connected to the root";
      body.successors.push_back({t, {}, {}});
      s = &body.successors.back();
    }
    insert_unique(s->delta, signed_of(lit));
  }
  // Successor order follows first appearance in the body.
  auto first_pos = [&](const Term& t) {
    for (std::size_t i = 0; i < flat.body.size(); ++i) {
      const auto& a = flat.body[i].atom;
      if ((a.pred.arity == 2 && a.args[0] == root && a.args[1] == t) || (a.pred.arity == 1 && a.args[0] == t && t != root)) {
        return i;
      }
    }
    return flat.body.size();
  };
  std::stable_sort(body.successors.begin(), body.successors.end(),
                   [&](const Successor& a, const Successor& b) { return first_pos(a.term) < first_pos(b.term); });
  for (const auto& ne : flat.neq) {
    auto idx = [&](const Term& t) -> int {
      for (std::size_t i = 0; i < body.successors.size(); ++i) {
        if (body.successors[i].term == t) return static_cast<int>(i);
      }
      return -1;
    };
    int i = idx(ne.lhs);
    int j = idx(ne.rhs);
    if (i < 0 || j < 0 || !ne.lhs.is_variable() || !ne.rhs.is_variable()) {
      return std::string("inequality must relate successor variables");
    }
    body.psi.emplace_back(std::min(i, j), std::max(i, j));
  }
  return body;
}

std::variant<BinaryBody, std::string> shape_binary(const FlatRule& flat, const Term& root, const Term& leaf) {
  if (!flat.neq.empty()) return std::string("inequality in a binary rule");
  BinaryBody body;
  body.root = root;
  body.leaf = leaf;
  for (const auto& lit : flat.body) {
    const auto& a = lit.atom;
    if (a.pred.arity == 2) {
      if (a.args[0] != root || a.args[1] != leaf) return std::string("binary literal does not follow the head arc");
      insert_unique(body.gamma, signed_of(lit));
    } else if (a.args[0] == root) {
      insert_unique(body.beta, signed_of(lit));
    } else if (a.args[0] == leaf) {
      insert_unique(body.delta, signed_of(lit));
    } else {
      return "term " + a.args[0].name + " is not connected to the head";
    }
  }
  return body;
}

}  // namespace

Rule shape_rule(const FlatRule& flat) {
  if (flat.head && !arity_ok(*flat.head)) return general(flat, "predicate arity must be 1 or 2");
  for (const auto& lit : flat.body) {
    if (!arity_ok(lit.atom)) return general(flat, "predicate arity must be 1 or 2");
  }
  if (flat.free) {
    if (!flat.head || !flat.body.empty() || !flat.neq.empty()) return general(flat, "free rule with a body");
    return FreeRule{flat.head->pred, flat.head->args};
  }
  if (flat.head) {
    const Atom& h = *flat.head;
    if (h.pred.arity == 1) {
      auto b = shape_unary(flat, h.args[0]);
      if (auto* err = std::get_if<std::string>(&b)) return general(flat, *err);
      return UnaryRule{h.pred, std::get<UnaryBody>(b)};
    }
    auto b = shape_binary(flat, h.args[0], h.args[1]);
    if (auto* err = std::get_if<std::string>(&b)) return general(flat, *err);
    return BinaryRule{h.pred, std::get<BinaryBody>(b)};
  }
  auto root = constraint_root(flat);
  if (!root) return general(flat, "constraint body has no single root term");
  if (binary_constraint_shape(flat, *root)) {
    Term leaf;
    for (const auto& lit : flat.body) {
      if (lit.atom.pred.arity == 2) leaf = lit.atom.args[1];
    }
    auto b = shape_binary(flat, *root, leaf);
    if (auto* err = std::get_if<std::string>(&b)) return general(flat, *err);
    return BinaryConstraint{std::get<BinaryBody>(b)};
  }
  auto b = shape_unary(flat, *root);
  if (auto* err = std::get_if<std::string>(&b)) return general(flat, *err);
  return UnaryConstraint{std::get<UnaryBody>(b)};
}

}  // namespace folp
