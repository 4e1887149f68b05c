#ifndef DUNKL_EXPRPARSE_HPP
#define DUNKL_EXPRPARSE_HPP

#include <memory>
#include <string>
#include <vector>

#include "dunkl/cherednik.hpp"

namespace dunkl {

/// AST for the operator expression language:
///   expr   := ('-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' int)?
///   atom   := rational | 'c' | 'x<i>' | 'y<i>' | 'd<i>' | 'del'
///           | 's(' int ',' int ')' | 'e' | 'e_' | '(' expr ')'
/// y<i> denotes the Dunkl operator at parameter c. Unary minus on the first
/// term is accepted as an extension so rendered output round-trips.
struct ExprNode {
    enum class Kind { Sum, Product, Power, Rational, Param, X, Y, D, Del, Transposition, E, ESign };

    Kind kind;
    std::size_t offset = 0;                        // source byte offset
    std::vector<std::unique_ptr<ExprNode>> children; // Sum/Product operands, Power base
    std::vector<int> signs;                        // Sum: +1/-1 per operand
    int exponent = 0;                              // Power
    Rational value;                                // Rational
    int index = 0, index2 = 0;                     // X/Y/D (1-based), Transposition
};

using ExprAst = std::unique_ptr<ExprNode>;

/// Parses src against the grammar; indices are validated against n.
ExprAst parse(const std::string& src, int n);

/// Folds the AST into a normal-form operator; y<i> becomes the Dunkl
/// operator with kappa = c. Negative exponents are legal only on del and
/// on nonzero scalar subexpressions.
SkewOperator elaborate(const ExprNode& ast, int n);

/// Canonical re-parseable text of a normal-form operator; never emits y<i>.
std::string render(const SkewOperator& u);

/// Text for values of the natural action on C[h][delta^{-1}].
std::string render(const LocFrac& f);

} // namespace dunkl

#endif
