#pragma once

// Expression trees over the indexed quantities of a subdivided triangle.

#include <array>
#include <string>
#include <vector>

namespace sixcircles {

enum class Quantity {
  Inradius,       ///< r_i: incircle of small triangle i
  ExradiusC1,     ///< excircle of large triangle i beyond segment i
  ExradiusC2,     ///< R_i: excircle of small triangle i beyond segment i
  LargeInradius,  ///< incircle of large triangle i
  SmallSemi,      ///< semiperimeter of small triangle i
  LargeSemi,      ///< semiperimeter of large triangle i
  SmallArea,      ///< area of small triangle i
  Segment,        ///< length of side segment i
  CosHalfA,       ///< cos(A/2); unindexed
  CosHalfB,
  CosHalfC,
};

constexpr bool is_indexed(Quantity q) {
  return q != Quantity::CosHalfA && q != Quantity::CosHalfB && q != Quantity::CosHalfC;
}

/// Relabeling of indices 1..6, stored zero-based: label i becomes perm[i].
using Permutation = std::array<int, 6>;

inline constexpr Permutation kIdentityPermutation{0, 1, 2, 3, 4, 5};

struct Expr {
  enum class Op { Var, Add, Sub, Mul, Div };

  Op op = Op::Var;
  Quantity quantity = Quantity::Inradius;
  int index = 0;  // zero-based
  std::vector<Expr> args;

  static Expr var(Quantity q, int label) { return {Op::Var, q, label - 1, {}}; }
  static Expr unindexed(Quantity q) { return {Op::Var, q, 0, {}}; }
  static Expr sum(std::vector<Expr> terms) { return {Op::Add, {}, 0, std::move(terms)}; }
  static Expr product(std::vector<Expr> factors) { return {Op::Mul, {}, 0, std::move(factors)}; }
  static Expr difference(Expr x, Expr y) { return {Op::Sub, {}, 0, {std::move(x), std::move(y)}}; }
  static Expr quotient(Expr x, Expr y) { return {Op::Div, {}, 0, {std::move(x), std::move(y)}}; }
};

/// Evaluate with leaf values supplied by lookup(quantity, zero-based index).
template <class T, class Lookup>
T evaluate(const Expr& e, const Lookup& lookup, const Permutation& perm = kIdentityPermutation) {
  switch (e.op) {
    case Expr::Op::Var:
      return lookup(e.quantity, is_indexed(e.quantity) ? perm[e.index] : 0);
    case Expr::Op::Add: {
      T acc(0);
      for (const auto& a : e.args) acc += evaluate<T>(a, lookup, perm);
      return acc;
    }
    case Expr::Op::Mul: {
      T acc(1);
      for (const auto& a : e.args) acc *= evaluate<T>(a, lookup, perm);
      return acc;
    }
    case Expr::Op::Sub:
      return evaluate<T>(e.args[0], lookup, perm) - evaluate<T>(e.args[1], lookup, perm);
    default:
      return evaluate<T>(e.args[0], lookup, perm) / evaluate<T>(e.args[1], lookup, perm);
  }
}

/// Calls fn(quantity, zero-based index) for every leaf.
template <class Fn>
void for_each_leaf(const Expr& e, Fn&& fn) {
  if (e.op == Expr::Op::Var) {
    fn(e.quantity, e.index);
    return;
  }
  for (const auto& a : e.args) for_each_leaf(a, fn);
}

std::string to_string(const Expr& e);
std::string quantity_symbol(Quantity q);

}  // namespace sixcircles
