#include "uconf/expr_parser.hpp"

#include <cctype>
#include <limits>
#include <set>

namespace uconf {

const char* to_string(ExprErrorKind kind) {
  switch (kind) {
    case ExprErrorKind::Syntax: return "SyntaxError";
    case ExprErrorKind::UnknownPoint: return "UnknownPoint";
    case ExprErrorKind::BasisOutOfRange: return "BasisOutOfRange";
    case ExprErrorKind::ConfigMismatch: return "ConfigMismatch";
    case ExprErrorKind::OverlappingConfigurations: return "OverlappingConfigurations";
  }
  return "?";
}

namespace {

std::string describe(ExprErrorKind kind, std::size_t position, const std::string& message) {
  return std::string(to_string(kind)) + " at offset " + std::to_string(position) + ": " + message;
}

}  // namespace

ExprError::ExprError(ExprErrorKind kind, std::size_t position, std::string message,
                     std::vector<std::string> expected)
    : Error(describe(kind, position, message)),
      kind_(kind),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprAst parse() {
    ExprAst root = element();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character", {"+", "#", ".", "end of input"});
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) {
    std::string msg = what;
    if (pos_ < text_.size()) msg += " '" + std::string(1, text_[pos_]) + "'";
    else msg += " (end of input)";
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += " or ";
        msg += expected[i];
      }
    }
    throw ExprError(ExprErrorKind::Syntax, pos_, msg, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  void expect(std::string_view token) {
    if (!at(token)) fail("unexpected input", {"'" + std::string(token) + "'"});
    pos_ += token.size();
  }

  bool starts_atom() { return at("e[") || at("1[") || at("0@[") || at("("); }

  ExprAst element() {
    skip_ws();
    ExprAst first = term();
    if (!at("+")) return first;
    ExprAst sum;
    sum.kind = ExprAst::Kind::Sum;
    sum.begin = first.begin;
    sum.children.push_back(std::move(first));
    while (at("+")) {
      sum.operator_positions.push_back(pos_);
      ++pos_;
      sum.children.push_back(term());
    }
    sum.end = sum.children.back().end;
    return sum;
  }

  ExprAst term() {
    skip_ws();
    const std::size_t begin = pos_;
    if (at("-") || (pos_ < text_.size() && is_digit(text_[pos_]) && !starts_atom())) {
      Scalar c = coeff();
      expect("*");
      ExprAst node;
      node.kind = ExprAst::Kind::ScalarMul;
      node.begin = begin;
      node.scalar = std::move(c);
      node.children.push_back(cfactor());
      node.end = node.children.back().end;
      return node;
    }
    if (!starts_atom()) fail("unexpected input", {"coefficient", "'e['", "'1['", "'0@['", "'('"});
    return cfactor();
  }

  ExprAst cfactor() { return chain(ExprAst::Kind::CauchyProd, "#", [this] { return hfactor(); }); }
  ExprAst hfactor() { return chain(ExprAst::Kind::HadamardProd, ".", [this] { return atom(); }); }

  template <class Next>
  ExprAst chain(ExprAst::Kind kind, std::string_view op, Next next) {
    ExprAst first = next();
    if (!at(op)) return first;
    ExprAst node;
    node.kind = kind;
    node.begin = first.begin;
    node.children.push_back(std::move(first));
    while (at(op)) {
      node.operator_positions.push_back(pos_);
      pos_ += op.size();
      node.children.push_back(next());
    }
    node.end = node.children.back().end;
    return node;
  }

  ExprAst atom() {
    skip_ws();
    const std::size_t begin = pos_;
    ExprAst node;
    node.begin = begin;
    if (at("e[")) {
      pos_ += 2;
      node.kind = ExprAst::Kind::Gen;
      node.points.push_back(ident());
      expect(",");
      skip_ws();
      node.index_position = pos_;
      node.index = nat();
      expect("]");
    } else if (at("1[")) {
      pos_ += 2;
      node.kind = ExprAst::Kind::Unit;
      ident_list(node);
    } else if (at("0@[")) {
      pos_ += 3;
      node.kind = ExprAst::Kind::Zero;
      ident_list(node);
    } else if (at("(")) {
      ++pos_;
      ExprAst inner = element();
      expect(")");
      inner.begin = begin;
      inner.end = pos_;
      return inner;
    } else {
      fail("unexpected input", {"'e['", "'1['", "'0@['", "'('"});
    }
    node.end = pos_;
    return node;
  }

  void ident_list(ExprAst& node) {
    if (at("]")) {
      ++pos_;
      return;
    }
    node.points.push_back(ident());
    while (at(",")) {
      ++pos_;
      node.points.push_back(ident());
    }
    expect("]");
  }

  ExprAst::Ident ident() {
    skip_ws();
    const std::size_t begin = pos_;
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("unexpected input", {"identifier"});
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return {PointId(std::string(text_.substr(begin, pos_ - begin))), begin};
  }

  std::uint64_t nat() {
    skip_ws();
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("unexpected input", {"number"});
    const std::size_t begin = pos_;
    std::uint64_t value = 0;
    bool overflow = false;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) overflow = true;
      value = value * 10 + digit;
      ++pos_;
    }
    if (overflow) {
      pos_ = begin;
      fail("number too large", {"number"});
    }
    return value;
  }

  Scalar coeff() {
    skip_ws();
    bool negative = false;
    if (at("-")) {
      negative = true;
      ++pos_;
      skip_ws();
    }
    const std::size_t num_begin = pos_;
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("unexpected input", {"number"});
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    mpz_class num(std::string(text_.substr(num_begin, pos_ - num_begin)), 10);
    mpz_class den = 1;
    if (at("/")) {
      ++pos_;
      skip_ws();
      const std::size_t den_begin = pos_;
      if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("unexpected input", {"number"});
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      den = mpz_class(std::string(text_.substr(den_begin, pos_ - den_begin)), 10);
      if (den == 0) {
        pos_ = den_begin;
        fail("zero denominator", {"nonzero number"});
      }
    }
    Scalar q(num, den);
    q.canonicalize();
    return negative ? Scalar(-q) : q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Configuration configuration_of(const ExprAst& node, const BaseSpace& base) {
  std::set<PointId> seen;
  std::vector<PointId> pts;
  for (const auto& id : node.points) {
    if (!base.contains(id.point))
      throw ExprError(ExprErrorKind::UnknownPoint, id.position,
                      "unknown point '" + id.point.label + "'");
    if (!seen.insert(id.point).second)
      throw ExprError(ExprErrorKind::OverlappingConfigurations, id.position,
                      "point '" + id.point.label + "' repeated in a configuration");
    pts.push_back(id.point);
  }
  return Configuration(std::move(pts));
}

FibreElement eval(const ExprAst& node, const BaseSpace& base) {
  using Kind = ExprAst::Kind;
  switch (node.kind) {
    case Kind::Gen: {
      const auto& id = node.points.front();
      if (!base.contains(id.point))
        throw ExprError(ExprErrorKind::UnknownPoint, id.position,
                        "unknown point '" + id.point.label + "'");
      const auto rank = base.rank(id.point);
      if (node.index >= rank)
        throw ExprError(ExprErrorKind::BasisOutOfRange, node.index_position,
                        "basis index " + std::to_string(node.index) + " out of range for '" +
                            id.point.label + "' of rank " + std::to_string(rank));
      return embed_generator(base, id.point, static_cast<std::uint32_t>(node.index));
    }
    case Kind::Unit:
      return unit_hadamard(configuration_of(node, base));
    case Kind::Zero:
      return FibreElement(configuration_of(node, base));
    case Kind::ScalarMul:
      return node.scalar * eval(node.children.front(), base);
    case Kind::Sum:
    case Kind::CauchyProd:
    case Kind::HadamardProd: {
      FibreElement acc = eval(node.children.front(), base);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        FibreElement rhs = eval(node.children[i], base);
        const std::size_t op = node.operator_positions[i - 1];
        if (node.kind == Kind::CauchyProd) {
          if (intersects(acc.config(), rhs.config()))
            throw ExprError(ExprErrorKind::OverlappingConfigurations, op,
                            "Cauchy product of " + acc.config().to_string() + " and " +
                                rhs.config().to_string() + ", which overlap");
          acc = cauchy_mul(acc, rhs);
        } else {
          if (acc.config() != rhs.config())
            throw ExprError(ExprErrorKind::ConfigMismatch, op,
                            std::string(node.kind == Kind::Sum ? "sum" : "Hadamard product") +
                                " of elements over " + acc.config().to_string() + " and " +
                                rhs.config().to_string());
          if (node.kind == Kind::Sum) acc += rhs;
          else acc = hadamard_mul(acc, rhs);
        }
      }
      return acc;
    }
  }
  return FibreElement();
}

std::string point_list(const Configuration& x) {
  std::string out;
  for (const auto& p : x) {
    if (!out.empty()) out += ',';
    out += p.label;
  }
  return out;
}

}  // namespace

ExprAst parse_ast(std::string_view text) { return Parser(text).parse(); }

FibreElement elaborate(const ExprAst& ast, const BaseSpace& base) { return eval(ast, base); }

FibreElement parse_element(std::string_view text, const BaseSpace& base) {
  return elaborate(parse_ast(text), base);
}

std::string render(const CauchyMonomial& m) {
  if (m.degree() == 0) return "1[" + point_list(m.config()) + "]";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += " # ";
    if (f.is_unit()) {
      out += "1[" + f.point.label + "]";
      continue;
    }
    bool first = true;
    for (const auto& [i, mult] : f.exponents)
      for (std::uint32_t t = 0; t < mult; ++t) {
        if (!first) out += " . ";
        first = false;
        out += "e[" + f.point.label + "," + std::to_string(i) + "]";
      }
  }
  return out;
}

std::string render(const FibreElement& e) {
  if (e.is_zero()) return "0@[" + point_list(e.config()) + "]";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + " * ";
    out += render(m);
  }
  return out;
}

}  // namespace uconf
