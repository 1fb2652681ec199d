#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "c3k/context.hpp"
#include "c3k/real.hpp"

namespace c3k {

enum class ExprKind {
  IntLit,
  RatLit,
  Pi,
  GoldenRatio,
  Sqrt,
  Cbrt,
  Log,
  Arctan,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
};

std::string_view to_string(ExprKind kind);

// Immutable closed-form expression tree. Copies share nodes.
class Expr {
 public:
  Expr();  // IntLit 0

  static Expr integer(long v);
  static Expr integer(const BigInt& v);
  static Expr rational(const BigRational& v);  // canonicalized; IntLit when den == 1
  static Expr pi();
  static Expr golden_ratio();
  static Expr unary(ExprKind kind, Expr child);
  static Expr binary(ExprKind kind, Expr lhs, Expr rhs);
  static Expr power(Expr base, long exponent);

  ExprKind kind() const;
  const BigInt& int_value() const;       // IntLit only
  const BigRational& rat_value() const;  // RatLit only
  long exponent() const;                 // Pow only
  std::size_t arity() const;
  const Expr& child(std::size_t i) const;

  // Infix rendering; parse(to_string()) evaluates identically.
  std::string to_string() const;

  nlohmann::json to_json() const;
  static Expr from_json(const nlohmann::json& j);

  // Infix grammar: + - * / ^ (or **), unary minus, parentheses, integer
  // literals, pi, alpha, sqrt() cbrt() log() atan().
  static Expr parse(std::string_view text);

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr sqrt(Expr a);
Expr cbrt(Expr a);
Expr log(Expr a);
Expr atan(Expr a);
Expr pow(Expr a, long e);

// Throws DomainError naming the offending subtree.
Real eval_expr(const Expr& e, const PrecisionContext& ctx);
Real eval_expr(const Expr& e, mpfr_prec_t bits);

}  // namespace c3k
