#ifndef NONSIN_EXPR_HPP
#define NONSIN_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nonsin/errors.hpp>

namespace nonsin {

/// Immutable arithmetic expression in one variable `x`.
///
/// Supported grammar (see docs/grammar.ebnf): decimal literals, `pi`, `x`,
/// unary minus, `abs`, the binary operators + - * / ^ and the functions
/// sin cos sinh cosh exp ln sqrt.  `^` binds tightest and is
/// right-associative.  Expressions are plain value types; copies share the
/// underlying node pool, and evaluation never mutates state, so instances
/// may be used concurrently.
class Expr {
 public:
  enum class Op : std::uint8_t {
    Number,
    Var,
    Pi,
    Neg,
    Abs,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Exp,
    Ln,
    Sqrt,
  };

  struct Node {
    Op op;
    double value = 0.0;  // Number payload
    int lhs = -1;
    int rhs = -1;
  };

  Expr() = default;

  /// Evaluates at `x`.  Domain violations (ln of a non-positive value,
  /// sqrt of a negative value, division by zero, 0 raised to a negative
  /// power, a negative base under a non-integer exponent) raise
  /// DomainError rather than producing NaN.
  double eval(double x) const;

  /// Canonical text form; parse_expr(str()) rebuilds an identical tree.
  std::string str() const;

  /// Structural equality (same shape, same literals).
  bool identical(const Expr& other) const;

  /// New expression with `x` replaced by `scale*x + offset`.
  Expr substitute_affine(double scale, double offset) const;

  /// True when no Var node occurs (the expression is a constant).
  bool is_constant() const;

  bool empty() const { return nodes_ == nullptr || nodes_->empty(); }

  static Expr number(double v);
  static Expr variable();
  static Expr sum(const Expr& a, const Expr& b);
  static Expr difference(const Expr& a, const Expr& b);
  static Expr product(const Expr& a, const Expr& b);
  static Expr scaled(double k, const Expr& a);  // k * a
  static Expr shifted(const Expr& a, double c);  // a + c
  static Expr negated(const Expr& a);

 private:
  friend class ExprParser;

  // Nodes are stored in a flat pool; `root_` indexes into it.  Combining
  // expressions copies the operand pools into a fresh one.
  std::shared_ptr<const std::vector<Node>> nodes_;
  int root_ = -1;

  Expr(std::shared_ptr<const std::vector<Node>> nodes, int root)
      : nodes_(std::move(nodes)), root_(root) {}

  double eval_node(int idx, double x) const;
  void print_node(int idx, std::string& out, int parent_prec, bool rhs_of_pow) const;
  bool identical_nodes(int idx, const Expr& other, int other_idx) const;
  static Expr combine(Op op, const Expr& a, const Expr& b);
  static Expr apply(Op op, const Expr& a);
};

/// Parses `text` into an Expr.  Throws ParseError carrying the 0-based
/// byte offset of the failure and the token set expected there.
Expr parse_expr(std::string_view text);

}  // namespace nonsin

#endif  // NONSIN_EXPR_HPP
