#include <nonsin/expr.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

namespace nonsin {

namespace {

// Printing precedence levels: additive 1, multiplicative 2, unary 3,
// power 4, primary 5.
int precedence(Expr::Op op) {
  switch (op) {
    case Expr::Op::Add:
    case Expr::Op::Sub:
      return 1;
    case Expr::Op::Mul:
    case Expr::Op::Div:
      return 2;
    case Expr::Op::Neg:
      return 3;
    case Expr::Op::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* function_name(Expr::Op op) {
  switch (op) {
    case Expr::Op::Abs: return "abs";
    case Expr::Op::Sin: return "sin";
    case Expr::Op::Cos: return "cos";
    case Expr::Op::Sinh: return "sinh";
    case Expr::Op::Cosh: return "cosh";
    case Expr::Op::Exp: return "exp";
    case Expr::Op::Ln: return "ln";
    case Expr::Op::Sqrt: return "sqrt";
    default: return nullptr;
  }
}

double integer_power(double base, long long n) {
  // Exponentiation by squaring keeps integer powers exact for exact bases.
  double result = 1.0;
  double factor = base;
  unsigned long long m = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                               : static_cast<unsigned long long>(n);
  while (m != 0) {
    if (m & 1) result *= factor;
    factor *= factor;
    m >>= 1;
  }
  if (n < 0) {
    if (result == 0.0) throw DomainError("zero raised to a negative power");
    return 1.0 / result;
  }
  return result;
}

}  // namespace

double Expr::eval(double x) const {
  if (empty()) throw DomainError("evaluating an empty expression");
  double v = eval_node(root_, x);
  if (!std::isfinite(v)) throw DomainError("expression evaluated to a non-finite value");
  return v;
}

double Expr::eval_node(int idx, double x) const {
  const Node& n = (*nodes_)[static_cast<std::size_t>(idx)];
  switch (n.op) {
    case Op::Number: return n.value;
    case Op::Var: return x;
    case Op::Pi: return std::numbers::pi;
    case Op::Neg: return -eval_node(n.lhs, x);
    case Op::Abs: return std::abs(eval_node(n.lhs, x));
    case Op::Add: return eval_node(n.lhs, x) + eval_node(n.rhs, x);
    case Op::Sub: return eval_node(n.lhs, x) - eval_node(n.rhs, x);
    case Op::Mul: return eval_node(n.lhs, x) * eval_node(n.rhs, x);
    case Op::Div: {
      double denom = eval_node(n.rhs, x);
      if (denom == 0.0) throw DomainError("division by zero");
      return eval_node(n.lhs, x) / denom;
    }
    case Op::Pow: {
      double base = eval_node(n.lhs, x);
      double expo = eval_node(n.rhs, x);
      if (expo == std::floor(expo) && std::abs(expo) <= 4096.0) {
        return integer_power(base, static_cast<long long>(expo));
      }
      if (base < 0.0) {
        throw DomainError("negative base under a non-integer exponent");
      }
      if (base == 0.0 && expo < 0.0) {
        throw DomainError("zero raised to a negative power");
      }
      return std::pow(base, expo);
    }
    case Op::Sin: return std::sin(eval_node(n.lhs, x));
    case Op::Cos: return std::cos(eval_node(n.lhs, x));
    case Op::Sinh: return std::sinh(eval_node(n.lhs, x));
    case Op::Cosh: return std::cosh(eval_node(n.lhs, x));
    case Op::Exp: return std::exp(eval_node(n.lhs, x));
    case Op::Ln: {
      double v = eval_node(n.lhs, x);
      if (v <= 0.0) throw DomainError("logarithm of a non-positive value");
      return std::log(v);
    }
    case Op::Sqrt: {
      double v = eval_node(n.lhs, x);
      if (v < 0.0) throw DomainError("square root of a negative value");
      return std::sqrt(v);
    }
  }
  throw DomainError("corrupt expression node");
}

std::string Expr::str() const {
  std::string out;
  if (!empty()) print_node(root_, out, 0, false);
  return out;
}

void Expr::print_node(int idx, std::string& out, int parent_prec, bool rhs_of_binary) const {
  const Node& n = (*nodes_)[static_cast<std::size_t>(idx)];
  int prec = precedence(n.op);
  if (n.op == Op::Number && n.value < 0.0) prec = precedence(Op::Neg);
  // Right operands of left-associative operators need strictly higher
  // precedence to survive a round trip: a-(b-c), a/(b*c).
  bool need_parens = rhs_of_binary ? prec <= parent_prec : prec < parent_prec;
  if (need_parens) out += '(';
  switch (n.op) {
    case Op::Number: out += format_double(n.value); break;
    case Op::Var: out += 'x'; break;
    case Op::Pi: out += "pi"; break;
    case Op::Neg:
      out += '-';
      print_node(n.lhs, out, precedence(Op::Neg), false);
      break;
    case Op::Add:
      print_node(n.lhs, out, 1, false);
      out += '+';
      print_node(n.rhs, out, 1, true);
      break;
    case Op::Sub:
      print_node(n.lhs, out, 1, false);
      out += '-';
      print_node(n.rhs, out, 1, true);
      break;
    case Op::Mul:
      print_node(n.lhs, out, 2, false);
      out += '*';
      print_node(n.rhs, out, 2, true);
      break;
    case Op::Div:
      print_node(n.lhs, out, 2, false);
      out += '/';
      print_node(n.rhs, out, 2, true);
      break;
    case Op::Pow:
      // Base must be a primary; exponent may be any unary factor.
      print_node(n.lhs, out, 5, false);
      out += '^';
      print_node(n.rhs, out, 3, false);
      break;
    default:
      out += function_name(n.op);
      out += '(';
      print_node(n.lhs, out, 0, false);
      out += ')';
      break;
  }
  if (need_parens) out += ')';
}

bool Expr::identical(const Expr& other) const {
  if (empty() || other.empty()) return empty() == other.empty();
  return identical_nodes(root_, other, other.root_);
}

bool Expr::identical_nodes(int idx, const Expr& other, int other_idx) const {
  const Node& a = (*nodes_)[static_cast<std::size_t>(idx)];
  const Node& b = (*other.nodes_)[static_cast<std::size_t>(other_idx)];
  if (a.op != b.op) return false;
  if (a.op == Op::Number) return a.value == b.value;
  if (a.lhs >= 0) {
    if (b.lhs < 0 || !identical_nodes(a.lhs, other, b.lhs)) return false;
  } else if (b.lhs >= 0) {
    return false;
  }
  if (a.rhs >= 0) {
    if (b.rhs < 0 || !identical_nodes(a.rhs, other, b.rhs)) return false;
  } else if (b.rhs >= 0) {
    return false;
  }
  return true;
}

bool Expr::is_constant() const {
  if (empty()) return true;
  for (const Node& n : *nodes_) {
    if (n.op == Op::Var) return false;
  }
  return true;
}

namespace {

int clone_into(const std::vector<Expr::Node>& src, int idx, std::vector<Expr::Node>& dst,
               double scale, double offset, bool substitute) {
  const Expr::Node& n = src[static_cast<std::size_t>(idx)];
  if (substitute && n.op == Expr::Op::Var) {
    // x -> scale*x + offset, folding the degenerate cases.
    int var = static_cast<int>(dst.size());
    dst.push_back({Expr::Op::Var, 0.0, -1, -1});
    int cur = var;
    if (scale != 1.0) {
      int k = static_cast<int>(dst.size());
      dst.push_back({Expr::Op::Number, scale, -1, -1});
      int mul = static_cast<int>(dst.size());
      dst.push_back({Expr::Op::Mul, 0.0, k, cur});
      cur = mul;
    }
    if (offset != 0.0) {
      int c = static_cast<int>(dst.size());
      dst.push_back({Expr::Op::Number, offset, -1, -1});
      int add = static_cast<int>(dst.size());
      dst.push_back({Expr::Op::Add, 0.0, cur, c});
      cur = add;
    }
    return cur;
  }
  Expr::Node copy = n;
  if (n.lhs >= 0) copy.lhs = clone_into(src, n.lhs, dst, scale, offset, substitute);
  if (n.rhs >= 0) copy.rhs = clone_into(src, n.rhs, dst, scale, offset, substitute);
  int pos = static_cast<int>(dst.size());
  dst.push_back(copy);
  return pos;
}

}  // namespace

Expr Expr::substitute_affine(double scale, double offset) const {
  if (empty()) return *this;
  auto pool = std::make_shared<std::vector<Node>>();
  int root = clone_into(*nodes_, root_, *pool, scale, offset, true);
  return Expr(std::move(pool), root);
}

Expr Expr::number(double v) {
  auto pool = std::make_shared<std::vector<Node>>();
  pool->push_back({Op::Number, v, -1, -1});
  return Expr(std::move(pool), 0);
}

Expr Expr::variable() {
  auto pool = std::make_shared<std::vector<Node>>();
  pool->push_back({Op::Var, 0.0, -1, -1});
  return Expr(std::move(pool), 0);
}

Expr Expr::combine(Op op, const Expr& a, const Expr& b) {
  auto pool = std::make_shared<std::vector<Node>>();
  int lhs = clone_into(*a.nodes_, a.root_, *pool, 1.0, 0.0, false);
  int rhs = clone_into(*b.nodes_, b.root_, *pool, 1.0, 0.0, false);
  int root = static_cast<int>(pool->size());
  pool->push_back({op, 0.0, lhs, rhs});
  return Expr(std::move(pool), root);
}

Expr Expr::apply(Op op, const Expr& a) {
  auto pool = std::make_shared<std::vector<Node>>();
  int lhs = clone_into(*a.nodes_, a.root_, *pool, 1.0, 0.0, false);
  int root = static_cast<int>(pool->size());
  pool->push_back({op, 0.0, lhs, -1});
  return Expr(std::move(pool), root);
}

Expr Expr::sum(const Expr& a, const Expr& b) { return combine(Op::Add, a, b); }
Expr Expr::difference(const Expr& a, const Expr& b) { return combine(Op::Sub, a, b); }
Expr Expr::product(const Expr& a, const Expr& b) { return combine(Op::Mul, a, b); }

Expr Expr::scaled(double k, const Expr& a) {
  if (k == 1.0) return a;
  return combine(Op::Mul, number(k), a);
}

Expr Expr::shifted(const Expr& a, double c) {
  if (c == 0.0) return a;
  return combine(Op::Add, a, number(c));
}

Expr Expr::negated(const Expr& a) { return apply(Op::Neg, a); }

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    pool_ = std::make_shared<std::vector<Expr::Node>>();
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_, "an expression");
    int root = parse_sum();
    skip_ws();
    if (!at_end()) {
      throw ParseError("unexpected trailing input", pos_, "end of expression or an operator");
    }
    return Expr(std::move(pool_), root);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::shared_ptr<std::vector<Expr::Node>> pool_;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int push(Expr::Node n) {
    pool_->push_back(n);
    return static_cast<int>(pool_->size()) - 1;
  }

  int parse_sum() {
    int lhs = parse_term();
    for (;;) {
      if (consume('+')) {
        int rhs = parse_term();
        lhs = push({Expr::Op::Add, 0.0, lhs, rhs});
      } else if (consume('-')) {
        int rhs = parse_term();
        lhs = push({Expr::Op::Sub, 0.0, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  int parse_term() {
    int lhs = parse_factor();
    for (;;) {
      if (consume('*')) {
        int rhs = parse_factor();
        lhs = push({Expr::Op::Mul, 0.0, lhs, rhs});
      } else if (consume('/')) {
        int rhs = parse_factor();
        lhs = push({Expr::Op::Div, 0.0, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  int parse_factor() {
    skip_ws();
    if (consume('-')) {
      int operand = parse_factor();
      const Expr::Node& n = (*pool_)[static_cast<std::size_t>(operand)];
      if (n.op == Expr::Op::Number) {
        // Fold so negative literals survive print/parse round trips.
        (*pool_)[static_cast<std::size_t>(operand)].value = -n.value;
        return operand;
      }
      return push({Expr::Op::Neg, 0.0, operand, -1});
    }
    return parse_power();
  }

  int parse_power() {
    int base = parse_primary();
    if (consume('^')) {
      int expo = parse_factor();  // right-associative; allows 2^-3 and a^b^c
      return push({Expr::Op::Pow, 0.0, base, expo});
    }
    return base;
  }

  int parse_primary() {
    skip_ws();
    if (at_end()) {
      throw ParseError("unexpected end of input", pos_,
                       "a number, 'pi', 'x', a function call or '('");
    }
    char c = peek();
    if (c == '(') {
      ++pos_;
      int inner = parse_sum();
      skip_ws();
      if (!consume(')')) throw ParseError("unbalanced parenthesis", pos_, "')'");
      return inner;
    }
    if ((c >= '0' && c <= '9') || c == '.') return parse_number();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return parse_identifier();
    throw ParseError("unexpected character", pos_,
                     "a number, 'pi', 'x', a function call or '('");
  }

  int parse_number() {
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) {
      throw ParseError("malformed number", pos_, "a decimal literal");
    }
    pos_ += static_cast<std::size_t>(end - begin);
    return push({Expr::Op::Number, v, -1, -1});
  }

  int parse_identifier() {
    std::size_t start = pos_;
    while (!at_end() && ((peek() >= 'a' && peek() <= 'z') || (peek() >= 'A' && peek() <= 'Z') ||
                         (peek() >= '0' && peek() <= '9') || peek() == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return push({Expr::Op::Var, 0.0, -1, -1});
    if (name == "pi") return push({Expr::Op::Pi, 0.0, -1, -1});

    Expr::Op op;
    if (name == "abs") op = Expr::Op::Abs;
    else if (name == "sin") op = Expr::Op::Sin;
    else if (name == "cos") op = Expr::Op::Cos;
    else if (name == "sinh") op = Expr::Op::Sinh;
    else if (name == "cosh") op = Expr::Op::Cosh;
    else if (name == "exp") op = Expr::Op::Exp;
    else if (name == "ln") op = Expr::Op::Ln;
    else if (name == "sqrt") op = Expr::Op::Sqrt;
    else {
      throw ParseError("unknown identifier '" + std::string(name) + "'", start,
                       "'x', 'pi' or one of sin cos sinh cosh exp ln sqrt abs");
    }
    skip_ws();
    if (!consume('(')) throw ParseError("function call needs '('", pos_, "'('");
    int arg = parse_sum();
    skip_ws();
    if (!consume(')')) throw ParseError("unbalanced function call", pos_, "')'");
    return push({op, 0.0, arg, -1});
  }
};

Expr parse_expr(std::string_view text) {
  ExprParser parser(text);
  return parser.parse();
}

}  // namespace nonsin
