#include "c3k/expr.hpp"

#include <array>
#include <cctype>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>

#include "c3k/errors.hpp"

namespace c3k {

struct Expr::Node {
  ExprKind kind = ExprKind::IntLit;
  BigInt i;
  BigRational q;
  long exp = 0;
  std::vector<Expr> kids;
};

namespace {

struct KindInfo {
  ExprKind kind;
  std::string_view name;
  int arity;  // -1: literal with a string argument
};

constexpr std::array<KindInfo, 14> kKinds{{
    {ExprKind::IntLit, "IntLit", -1},
    {ExprKind::RatLit, "RatLit", -1},
    {ExprKind::Pi, "Pi", 0},
    {ExprKind::GoldenRatio, "GoldenRatio", 0},
    {ExprKind::Sqrt, "Sqrt", 1},
    {ExprKind::Cbrt, "Cbrt", 1},
    {ExprKind::Log, "Log", 1},
    {ExprKind::Arctan, "Arctan", 1},
    {ExprKind::Neg, "Neg", 1},
    {ExprKind::Add, "Add", 2},
    {ExprKind::Sub, "Sub", 2},
    {ExprKind::Mul, "Mul", 2},
    {ExprKind::Div, "Div", 2},
    {ExprKind::Pow, "Pow", 1},
}};

const KindInfo& info(ExprKind k) { return kKinds[static_cast<std::size_t>(k)]; }

bool is_unary(ExprKind k) {
  return k == ExprKind::Sqrt || k == ExprKind::Cbrt || k == ExprKind::Log ||
         k == ExprKind::Arctan || k == ExprKind::Neg;
}

bool is_binary(ExprKind k) {
  return k == ExprKind::Add || k == ExprKind::Sub || k == ExprKind::Mul || k == ExprKind::Div;
}

}  // namespace

std::string_view to_string(ExprKind kind) { return info(kind).name; }

Expr::Expr() : Expr(std::make_shared<const Node>()) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::integer(long v) { return integer(BigInt(v)); }

Expr Expr::integer(const BigInt& v) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::IntLit;
  n->i = v;
  return Expr(std::move(n));
}

Expr Expr::rational(const BigRational& v) {
  BigRational c(v);
  c.canonicalize();
  if (c.get_den() == 1) return integer(c.get_num());
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::RatLit;
  n->q = c;
  return Expr(std::move(n));
}

Expr Expr::pi() {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Pi;
  return Expr(std::move(n));
}

Expr Expr::golden_ratio() {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::GoldenRatio;
  return Expr(std::move(n));
}

Expr Expr::unary(ExprKind kind, Expr child) {
  if (!is_unary(kind)) throw ParseError("not a unary kind: " + std::string(c3k::to_string(kind)));
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->kids.push_back(std::move(child));
  return Expr(std::move(n));
}

Expr Expr::binary(ExprKind kind, Expr lhs, Expr rhs) {
  if (!is_binary(kind)) throw ParseError("not a binary kind: " + std::string(c3k::to_string(kind)));
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->kids.push_back(std::move(lhs));
  n->kids.push_back(std::move(rhs));
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, long exponent) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Pow;
  n->exp = exponent;
  n->kids.push_back(std::move(base));
  return Expr(std::move(n));
}

ExprKind Expr::kind() const { return node_->kind; }
const BigInt& Expr::int_value() const { return node_->i; }
const BigRational& Expr::rat_value() const { return node_->q; }
long Expr::exponent() const { return node_->exp; }
std::size_t Expr::arity() const { return node_->kids.size(); }
const Expr& Expr::child(std::size_t i) const { return node_->kids.at(i); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.kids.size() != y.kids.size()) return false;
  switch (x.kind) {
    case ExprKind::IntLit: return x.i == y.i;
    case ExprKind::RatLit: return x.q == y.q;
    case ExprKind::Pow:
      if (x.exp != y.exp) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < x.kids.size(); ++i) {
    if (!(x.kids[i] == y.kids[i])) return false;
  }
  return true;
}

Expr operator+(Expr a, Expr b) { return Expr::binary(ExprKind::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(ExprKind::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(ExprKind::Mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(ExprKind::Div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::unary(ExprKind::Neg, std::move(a)); }
Expr sqrt(Expr a) { return Expr::unary(ExprKind::Sqrt, std::move(a)); }
Expr cbrt(Expr a) { return Expr::unary(ExprKind::Cbrt, std::move(a)); }
Expr log(Expr a) { return Expr::unary(ExprKind::Log, std::move(a)); }
Expr atan(Expr a) { return Expr::unary(ExprKind::Arctan, std::move(a)); }
Expr pow(Expr a, long e) { return Expr::power(std::move(a), e); }

// ---------------------------------------------------------------- rendering

namespace {

int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::RatLit: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::IntLit: return e.int_value() < 0 ? 3 : 5;
    case ExprKind::Pow: return 4;
    default: return 5;
  }
}

void render(const Expr& e, std::string& out);

void render_child(const Expr& c, int min_prec, std::string& out) {
  if (precedence(c) < min_prec) {
    out += '(';
    render(c, out);
    out += ')';
  } else {
    render(c, out);
  }
}

void render(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case ExprKind::IntLit: out += e.int_value().get_str(); return;
    case ExprKind::RatLit:
      out += e.rat_value().get_num().get_str();
      out += '/';
      out += e.rat_value().get_den().get_str();
      return;
    case ExprKind::Pi: out += "pi"; return;
    case ExprKind::GoldenRatio: out += "alpha"; return;
    case ExprKind::Sqrt:
    case ExprKind::Cbrt:
    case ExprKind::Log:
    case ExprKind::Arctan: {
      static constexpr std::array<std::string_view, 4> names{"sqrt", "cbrt", "log", "atan"};
      out += names[static_cast<std::size_t>(e.kind()) - static_cast<std::size_t>(ExprKind::Sqrt)];
      out += '(';
      render(e.child(0), out);
      out += ')';
      return;
    }
    case ExprKind::Neg:
      out += '-';
      render_child(e.child(0), 3, out);
      return;
    case ExprKind::Add:
    case ExprKind::Sub: {
      render_child(e.child(0), 1, out);
      out += e.kind() == ExprKind::Add ? " + " : " - ";
      render_child(e.child(1), 2, out);
      return;
    }
    case ExprKind::Mul:
    case ExprKind::Div:
      render_child(e.child(0), 2, out);
      out += e.kind() == ExprKind::Mul ? "*" : "/";
      render_child(e.child(1), 3, out);
      return;
    case ExprKind::Pow:
      render_child(e.child(0), 5, out);
      out += '^';
      if (e.exponent() < 0) {
        out += "(" + std::to_string(e.exponent()) + ")";
      } else {
        out += std::to_string(e.exponent());
      }
      return;
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  render(*this, out);
  return out;
}

// ---------------------------------------------------------------- json

nlohmann::json Expr::to_json() const {
  nlohmann::json args = nlohmann::json::array();
  switch (kind()) {
    case ExprKind::IntLit: args.push_back(int_value().get_str()); break;
    case ExprKind::RatLit:
      args.push_back(rat_value().get_num().get_str() + "/" + rat_value().get_den().get_str());
      break;
    case ExprKind::Pow:
      args.push_back(child(0).to_json());
      args.push_back(std::to_string(exponent()));
      break;
    default:
      for (const auto& c : node_->kids) args.push_back(c.to_json());
  }
  return nlohmann::json{{"kind", std::string(c3k::to_string(kind()))}, {"args", args}};
}


namespace {

BigInt parse_bigint(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("bad integer literal '" + s + "'");
  return v;
}

BigRational parse_bigrational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return BigRational(parse_bigint(s));
  BigInt num = parse_bigint(s.substr(0, slash));
  BigInt den = parse_bigint(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string literal_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("literal argument must be a decimal string");
}

}  // namespace

Expr Expr::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("expression node must be an object with \"kind\"");
  const std::string name = j.at("kind").get<std::string>();
  const KindInfo* ki = nullptr;
  for (const auto& k : kKinds) {
    if (k.name == name) ki = &k;
  }
  if (ki == nullptr) throw ParseError("unknown expression kind '" + name + "'");
  const nlohmann::json args = j.value("args", nlohmann::json::array());
  if (!args.is_array()) throw ParseError("\"args\" must be an array in " + name);
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw ParseError(name + " expects " + std::to_string(n) + " args, got " + std::to_string(args.size()));
    }
  };
  switch (ki->kind) {
    case ExprKind::IntLit: need(1); return integer(parse_bigint(literal_text(args[0])));
    case ExprKind::RatLit: {
      need(1);
      BigRational q = parse_bigrational(literal_text(args[0]));
      if (q.get_den() == 1) {
        auto n = std::make_shared<Node>();
        n->kind = ExprKind::RatLit;
        n->q = q;
        return Expr(std::move(n));
      }
      return rational(q);
    }
    case ExprKind::Pi: need(0); return pi();
    case ExprKind::GoldenRatio: need(0); return golden_ratio();
    case ExprKind::Pow: {
      need(2);
      const std::string e = literal_text(args[1]);
      BigInt ev = parse_bigint(e);
      if (!ev.fits_slong_p()) throw ParseError("exponent out of range: " + e);
      return power(from_json(args[0]), ev.get_si());
    }
    default: break;
  }
  if (is_unary(ki->kind)) {
    need(1);
    return unary(ki->kind, from_json(args[0]));
  }
  need(2);
  return binary(ki->kind, from_json(args[0]), from_json(args[1]));
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse_all() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek_pow() {
    skip();
    return s_.substr(pos_, 1) == "^" || s_.substr(pos_, 2) == "**";
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept("+")) {
        lhs = lhs + term();
      } else if (accept("-")) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary_expr();
    for (;;) {
      skip();
      if (s_.substr(pos_, 2) == "**") return lhs;
      if (accept("*")) {
        lhs = lhs * unary_expr();
      } else if (accept("/")) {
        Expr rhs = unary_expr();
        if (lhs.kind() == ExprKind::IntLit && rhs.kind() == ExprKind::IntLit && rhs.int_value() != 0 &&
            !mpz_divisible_p(lhs.int_value().get_mpz_t(), rhs.int_value().get_mpz_t())) {
          lhs = Expr::rational(BigRational(lhs.int_value(), rhs.int_value()));
        } else {
          lhs = lhs / rhs;
        }
      } else {
        return lhs;
      }
    }
  }

  Expr unary_expr() {
    if (accept("-")) {
      Expr e = unary_expr();
      if (e.kind() == ExprKind::IntLit && e.int_value() >= 0 && !last_was_group_) {
        return Expr::integer(-e.int_value());
      }
      return -e;
    }
    if (accept("+")) return unary_expr();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek_pow()) {
      if (!accept("**")) accept("^");
      last_was_group_ = false;
      bool neg = false;
      bool paren = accept("(");
      if (accept("-")) neg = true;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("integer exponent expected");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (paren && !accept(")")) fail("')' expected");
      return Expr::power(std::move(base), neg ? -e : e);
    }
    return base;
  }

  Expr primary() {
    skip();
    last_was_group_ = false;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!accept(")")) fail("')' expected");
      last_was_group_ = true;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Expr::integer(parse_bigint(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string id(s_.substr(start, pos_ - start));
      if (id == "pi") return Expr::pi();
      if (id == "alpha") return Expr::golden_ratio();
      ExprKind k;
      if (id == "sqrt") {
        k = ExprKind::Sqrt;
      } else if (id == "cbrt") {
        k = ExprKind::Cbrt;
      } else if (id == "log" || id == "ln") {
        k = ExprKind::Log;
      } else if (id == "atan" || id == "arctan") {
        k = ExprKind::Arctan;
      } else {
        pos_ = start;
        fail("unknown identifier '" + id + "'");
      }
      if (!accept("(")) fail("'(' expected after " + id);
      Expr arg = expr();
      if (!accept(")")) fail("')' expected");
      return Expr::unary(k, std::move(arg));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  bool last_was_group_ = false;
};

}  // namespace

Expr Expr::parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------- evaluation

namespace {

Real eval_node(const Expr& e, mpfr_prec_t bits) {
  switch (e.kind()) {
    case ExprKind::IntLit: return Real(e.int_value(), bits);
    case ExprKind::RatLit: return Real(e.rat_value(), bits);
    case ExprKind::Pi: return pi(bits);
    case ExprKind::GoldenRatio: return (sqrt(Real(5, bits)) + 1) / 2;
    case ExprKind::Sqrt: {
      Real v = eval_node(e.child(0), bits);
      if (v < 0) throw DomainError("sqrt of negative value in " + e.to_string());
      return sqrt(v);
    }
    case ExprKind::Cbrt: return cbrt(eval_node(e.child(0), bits));
    case ExprKind::Log: {
      Real v = eval_node(e.child(0), bits);
      if (!(v > 0)) throw DomainError("log of nonpositive value in " + e.to_string());
      return log(v);
    }
    case ExprKind::Arctan: return atan(eval_node(e.child(0), bits));
    case ExprKind::Neg: return -eval_node(e.child(0), bits);
    case ExprKind::Add: return eval_node(e.child(0), bits) + eval_node(e.child(1), bits);
    case ExprKind::Sub: return eval_node(e.child(0), bits) - eval_node(e.child(1), bits);
    case ExprKind::Mul: return eval_node(e.child(0), bits) * eval_node(e.child(1), bits);
    case ExprKind::Div: {
      Real d = eval_node(e.child(1), bits);
      if (d.is_zero()) throw DomainError("division by zero in " + e.to_string());
      return eval_node(e.child(0), bits) / d;
    }
    case ExprKind::Pow: {
      Real b = eval_node(e.child(0), bits);
      if (b.is_zero() && e.exponent() < 0) throw DomainError("zero to a negative power in " + e.to_string());
      return pow(b, e.exponent());
    }
  }
  throw DomainError("corrupt expression node");
}

}  // namespace

Real eval_expr(const Expr& e, mpfr_prec_t bits) { return eval_node(e, bits); }

Real eval_expr(const Expr& e, const PrecisionContext& ctx) { return eval_node(e, ctx.bits()); }

}  // namespace c3k
