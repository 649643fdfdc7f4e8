#include "sixcircles/expr.hpp"

namespace sixcircles {

std::string quantity_symbol(Quantity q) {
  switch (q) {
    case Quantity::Inradius:
      return "r";
    case Quantity::ExradiusC1:
      return "e";
    case Quantity::ExradiusC2:
      return "R";
    case Quantity::LargeInradius:
      return "q";
    case Quantity::SmallSemi:
      return "s";
    case Quantity::LargeSemi:
      return "S";
    case Quantity::SmallArea:
      return "K";
    case Quantity::Segment:
      return "seg";
    case Quantity::CosHalfA:
      return "cos(A/2)";
    case Quantity::CosHalfB:
      return "cos(B/2)";
    default:
      return "cos(C/2)";
  }
}

namespace {

std::string render(const Expr& e, int parent_precedence) {
  auto wrap = [&](std::string s, int precedence) {
    return precedence < parent_precedence ? "(" + s + ")" : s;
  };
  switch (e.op) {
    case Expr::Op::Var:
      return is_indexed(e.quantity) ? quantity_symbol(e.quantity) + std::to_string(e.index + 1)
                                    : quantity_symbol(e.quantity);
    case Expr::Op::Add: {
      std::string s;
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? " + " : "") + render(e.args[i], 1);
      return wrap(s, 1);
    }
    case Expr::Op::Sub:
      return wrap(render(e.args[0], 1) + " - " + render(e.args[1], 2), 1);
    case Expr::Op::Mul: {
      if (e.args.empty()) return "1";
      std::string s;
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? "*" : "") + render(e.args[i], 2);
      return wrap(s, 2);
    }
    default:
      return wrap(render(e.args[0], 2) + "/" + render(e.args[1], 3), 2);
  }
}

}  // namespace

std::string to_string(const Expr& e) { return render(e, 0); }

}  // namespace sixcircles
