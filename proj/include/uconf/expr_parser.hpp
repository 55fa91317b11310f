#ifndef UCONF_EXPR_PARSER_HPP
#define UCONF_EXPR_PARSER_HPP

// Text form of fibre elements.
//
//   element := term { "+" term } ;
//   term    := [ coeff "*" ] cfactor ;
//   cfactor := hfactor { "#" hfactor } ;      Cauchy product ⊡
//   hfactor := atom { "." atom } ;            Hadamard product ⊙, binds tighter
//   atom    := gen | unit | zero | "(" element ")" ;
//   gen     := "e[" ident "," nat "]" ;
//   unit    := "1[" [ ident { "," ident } ] "]" ;
//   zero    := "0@[" [ ident { "," ident } ] "]" ;
//   coeff   := [ "-" ] nat [ "/" nat ] ;
//
// Whitespace may separate tokens. Error positions are byte offsets into the
// source text.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "uconf/configspace.hpp"
#include "uconf/errors.hpp"
#include "uconf/fibre_algebra.hpp"

namespace uconf {

enum class ExprErrorKind {
  Syntax,
  UnknownPoint,
  BasisOutOfRange,
  ConfigMismatch,
  OverlappingConfigurations,
};

const char* to_string(ExprErrorKind kind);

class ExprError : public Error {
 public:
  ExprError(ExprErrorKind kind, std::size_t position, std::string message,
            std::vector<std::string> expected = {});

  ExprErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }
  /// Tokens that would have been accepted; only set for syntax errors.
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  ExprErrorKind kind_;
  std::size_t position_;
  std::vector<std::string> expected_;
};

struct ExprAst {
  enum class Kind { Sum, CauchyProd, HadamardProd, Gen, Unit, Zero, ScalarMul };

  struct Ident {
    PointId point;
    std::size_t position = 0;
  };

  Kind kind = Kind::Unit;
  std::size_t begin = 0;  // byte span of the node in the source
  std::size_t end = 0;

  std::vector<ExprAst> children;              // Sum, CauchyProd, HadamardProd, ScalarMul
  std::vector<std::size_t> operator_positions;  // one per operator between children
  std::vector<Ident> points;                  // Gen (one), Unit, Zero
  std::uint64_t index = 0;                    // Gen
  std::size_t index_position = 0;             // Gen
  Scalar scalar;                              // ScalarMul
};

/// Syntax only; throws ExprError of kind Syntax.
ExprAst parse_ast(std::string_view text);

/// Checks points and ranks against `base` and evaluates the tree.
FibreElement elaborate(const ExprAst& ast, const BaseSpace& base);

FibreElement parse_element(std::string_view text, const BaseSpace& base);

/// Canonical text; parse_element(render(e), base) == e.
std::string render(const FibreElement& e);
std::string render(const CauchyMonomial& m);

}  // namespace uconf

#endif  // UCONF_EXPR_PARSER_HPP
