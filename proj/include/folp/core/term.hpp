#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace folp {

struct Term {
  enum class Kind : std::uint8_t { constant, variable };

  Kind kind = Kind::constant;
  std::string name;

  static Term constant(std::string n) { return {Kind::constant, std::move(n)}; }
  static Term variable(std::string n) { return {Kind::variable, std::move(n)}; }

  bool is_variable() const { return kind == Kind::variable; }
  bool is_constant() const { return kind == Kind::constant; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

struct Predicate {
  std::string name;
  int arity = 1;

  bool is_unary() const { return arity == 1; }
  bool is_binary() const { return arity == 2; }

  auto operator<=>(const Predicate&) const = default;
  bool operator==(const Predicate&) const = default;
};

// A predicate together with a polarity, written p or not p.
struct SignedPredicate {
  Predicate pred;
  bool positive = true;

  SignedPredicate flipped() const { return {pred, !positive}; }

  auto operator<=>(const SignedPredicate&) const = default;
  bool operator==(const SignedPredicate&) const = default;
};

// Ordered, duplicate-free; order is the source order and drives search order.
using SignedSet = std::vector<SignedPredicate>;

void insert_unique(SignedSet& set, const SignedPredicate& sp);

struct Atom {
  Predicate pred;
  std::vector<Term> args;

  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;
};

struct Literal {
  Atom atom;
  bool positive = true;

  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;
};

struct Inequality {
  Term lhs;
  Term rhs;

  auto operator<=>(const Inequality&) const = default;
  bool operator==(const Inequality&) const = default;
};

}  // namespace folp
