#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace frhopf::expr {

/// Expression AST for coefficient functions a_i(alpha, mu). Nodes are
/// immutable after parsing; trees are freely shareable.
///
/// Grammar (left associative, ^ binds tighter than unary minus):
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' int)?
///   atom   := number | ident | '(' expr ')' | func '(' expr ')'
struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class NodeKind { Number, Identifier, Negate, Add, Sub, Mul, Div, Pow, Call };

// sin cos tan tanh exp sqrt abs
enum class Func { Sin, Cos, Tan, Tanh, Exp, Sqrt, Abs };

struct Node {
    NodeKind kind;
    double number = 0.0;     // Number
    std::string name;        // Identifier
    Func func = Func::Sin;   // Call
    long long exponent = 0;  // Pow
    NodePtr lhs, rhs;        // operands (rhs unused for unary)
};

NodePtr parse(std::string_view source);

/// Throws UnboundIdentifier if the tree references names outside
/// `bound_names`. "pi" is always available; callers list "alpha" explicitly
/// when they provide it at eval time.
void bind_check(const NodePtr& ast, const std::vector<std::string>& bound_names);

/// Standard real evaluation. Division by zero, domain errors and
/// non-finite intermediates surface as errors instead of silent NaN/inf.
double eval(const NodePtr& ast, const std::map<std::string, double>& bindings);

/// Minimal-parenthesis rendering; parse(pretty_print(ast)) is structurally
/// identical to ast.
std::string pretty_print(const NodePtr& ast);

bool structurally_equal(const NodePtr& a, const NodePtr& b);

std::vector<std::string> free_identifiers(const NodePtr& ast);

} // namespace frhopf::expr
