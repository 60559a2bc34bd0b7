#include "expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <set>

#include "errors.hpp"

namespace frhopf::expr {

namespace {

const std::map<std::string, Func, std::less<>> kFunctions = {
    {"sin", Func::Sin}, {"cos", Func::Cos},   {"tan", Func::Tan},  {"tanh", Func::Tanh},
    {"exp", Func::Exp}, {"sqrt", Func::Sqrt}, {"abs", Func::Abs},
};

const char* func_name(Func f) {
    switch (f) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Tanh: return "tanh";
        case Func::Exp: return "exp";
        case Func::Sqrt: return "sqrt";
        case Func::Abs: return "abs";
    }
    return "?";
}

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    // offsets are 1-based byte positions
    [[noreturn]] void fail(const std::string& expected) {
        throw Error(ErrorCode::SyntaxError,
                    "syntax error at offset " + std::to_string(pos + 1) + ": expected " + expected,
                    pos + 1);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }

    NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

    NodePtr parse_expr() {
        NodePtr acc = parse_term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            NodePtr rhs = parse_term();
            Node n;
            n.kind = c == '+' ? NodeKind::Add : NodeKind::Sub;
            n.lhs = acc;
            n.rhs = rhs;
            acc = make(std::move(n));
        }
        return acc;
    }

    NodePtr parse_term() {
        NodePtr acc = parse_unary();
        while (true) {
            char c = peek();
            if (c != '*' && c != '/') break;
            ++pos;
            NodePtr rhs = parse_unary();
            Node n;
            n.kind = c == '*' ? NodeKind::Mul : NodeKind::Div;
            n.lhs = acc;
            n.rhs = rhs;
            acc = make(std::move(n));
        }
        return acc;
    }

    NodePtr parse_unary() {
        if (consume('-')) {
            Node n;
            n.kind = NodeKind::Negate;
            n.lhs = parse_unary();
            return make(std::move(n));
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (peek() != '^') return base;
        ++pos;
        Node n;
        n.kind = NodeKind::Pow;
        n.lhs = base;
        n.exponent = parse_int_literal();
        return make(std::move(n));
    }

    long long parse_int_literal() {
        skip_ws();
        std::size_t start = pos;
        bool negative = false;
        if (pos < src.size() && src[pos] == '-') { negative = true; ++pos; }
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos]))) {
            pos = start;
            fail("integer exponent");
        }
        long long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            if (v > 1000) fail("exponent magnitude <= 1000");
            ++pos;
        }
        return negative ? -v : v;
    }

    NodePtr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            NodePtr inner = parse_expr();
            if (!consume(')')) fail("')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident_or_call();
        fail("number, identifier or '('");
    }

    NodePtr parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.'))
            ++pos;
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            std::size_t mark = pos;
            ++pos;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            } else {
                pos = mark; // the 'e' belongs to an identifier-like token, not this literal
            }
        }
        std::string text(src.substr(start, pos - start));
        try {
            std::size_t used = 0;
            double v = std::stod(text, &used);
            if (used != text.size()) { pos = start; fail("numeric literal"); }
            Node n;
            n.kind = NodeKind::Number;
            n.number = v;
            return make(std::move(n));
        } catch (const std::exception&) {
            pos = start;
            fail("numeric literal");
        }
    }

    NodePtr parse_ident_or_call() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        std::string name(src.substr(start, pos - start));
        if (peek() == '(') {
            auto it = kFunctions.find(name);
            if (it == kFunctions.end())
                throw Error(ErrorCode::UnknownFunction,
                            "unknown function '" + name + "' at offset " + std::to_string(start + 1),
                            start + 1);
            ++pos; // '('
            NodePtr arg = parse_expr();
            if (!consume(')')) fail("')' closing call");
            Node n;
            n.kind = NodeKind::Call;
            n.func = it->second;
            n.lhs = arg;
            return make(std::move(n));
        }
        Node n;
        if (name == "pi") {
            n.kind = NodeKind::Number;
            n.number = std::numbers::pi;
        } else {
            n.kind = NodeKind::Identifier;
            n.name = std::move(name);
        }
        return make(std::move(n));
    }
};

void collect_identifiers(const NodePtr& ast, std::set<std::string>& out) {
    if (!ast) return;
    if (ast->kind == NodeKind::Identifier) out.insert(ast->name);
    collect_identifiers(ast->lhs, out);
    collect_identifiers(ast->rhs, out);
}

double checked(double v, const char* what) {
    if (!std::isfinite(v))
        throw Error(ErrorCode::EvalNonFinite, std::string("non-finite value from ") + what);
    return v;
}

double ipow(double base, long long e) {
    if (e < 0) {
        if (base == 0.0)
            throw Error(ErrorCode::EvalDivByZero, "zero raised to a negative exponent");
        return 1.0 / ipow(base, -e);
    }
    double acc = 1.0;
    double b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace

NodePtr parse(std::string_view source) {
    Parser p{source};
    NodePtr ast = p.parse_expr();
    p.skip_ws();
    if (p.pos != source.size()) p.fail("end of input");
    return ast;
}

void bind_check(const NodePtr& ast, const std::vector<std::string>& bound_names) {
    std::set<std::string> ids;
    collect_identifiers(ast, ids);
    for (const auto& id : ids) {
        bool ok = false;
        for (const auto& b : bound_names)
            if (b == id) { ok = true; break; }
        if (!ok)
            throw Error(ErrorCode::UnboundIdentifier, "unbound identifier '" + id + "'");
    }
}

double eval(const NodePtr& ast, const std::map<std::string, double>& bindings) {
    switch (ast->kind) {
        case NodeKind::Number:
            return ast->number;
        case NodeKind::Identifier: {
            auto it = bindings.find(ast->name);
            if (it == bindings.end())
                throw Error(ErrorCode::EvalUnbound, "unbound identifier '" + ast->name + "'");
            return it->second;
        }
        case NodeKind::Negate:
            return -eval(ast->lhs, bindings);
        case NodeKind::Add:
            return checked(eval(ast->lhs, bindings) + eval(ast->rhs, bindings), "+");
        case NodeKind::Sub:
            return checked(eval(ast->lhs, bindings) - eval(ast->rhs, bindings), "-");
        case NodeKind::Mul:
            return checked(eval(ast->lhs, bindings) * eval(ast->rhs, bindings), "*");
        case NodeKind::Div: {
            double denom = eval(ast->rhs, bindings);
            if (denom == 0.0) throw Error(ErrorCode::EvalDivByZero, "division by zero");
            return checked(eval(ast->lhs, bindings) / denom, "/");
        }
        case NodeKind::Pow:
            return checked(ipow(eval(ast->lhs, bindings), ast->exponent), "^");
        case NodeKind::Call: {
            double x = eval(ast->lhs, bindings);
            double v = 0.0;
            switch (ast->func) {
                case Func::Sin: v = std::sin(x); break;
                case Func::Cos: v = std::cos(x); break;
                case Func::Tan: v = std::tan(x); break;
                case Func::Tanh: v = std::tanh(x); break;
                case Func::Exp: v = std::exp(x); break;
                case Func::Sqrt:
                    if (x < 0.0)
                        throw Error(ErrorCode::EvalNonFinite, "sqrt of a negative value");
                    v = std::sqrt(x);
                    break;
                case Func::Abs: v = std::abs(x); break;
            }
            return checked(v, func_name(ast->func));
        }
    }
    throw Error(ErrorCode::EvalNonFinite, "corrupt expression node");
}

namespace {

int precedence(NodeKind k) {
    switch (k) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Mul:
        case NodeKind::Div: return 2;
        case NodeKind::Negate: return 3;
        case NodeKind::Pow: return 4;
        default: return 5;
    }
}

void print(const NodePtr& ast, std::string& out, int parent_prec, bool right_side) {
    const int prec = precedence(ast->kind);
    const bool need_paren =
        prec < parent_prec ||
        (prec == parent_prec && right_side && (ast->kind == NodeKind::Add || ast->kind == NodeKind::Sub ||
                                               ast->kind == NodeKind::Mul || ast->kind == NodeKind::Div));
    if (need_paren) out += '(';
    switch (ast->kind) {
        case NodeKind::Number: {
            char buf[64];
            snprintf(buf, sizeof buf, "%.17g", ast->number);
            out += buf;
            break;
        }
        case NodeKind::Identifier:
            out += ast->name;
            break;
        case NodeKind::Negate:
            out += '-';
            print(ast->lhs, out, prec, true);
            break;
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div:
            print(ast->lhs, out, prec, false);
            out += ast->kind == NodeKind::Add ? " + "
                 : ast->kind == NodeKind::Sub ? " - "
                 : ast->kind == NodeKind::Mul ? "*" : "/";
            print(ast->rhs, out, prec, true);
            break;
        case NodeKind::Pow:
            print(ast->lhs, out, prec + 1, false); // operand of ^ must be an atom
            out += '^';
            out += std::to_string(ast->exponent);
            break;
        case NodeKind::Call:
            out += func_name(ast->func);
            out += '(';
            print(ast->lhs, out, 0, false);
            out += ')';
            break;
    }
    if (need_paren) out += ')';
}

} // namespace

std::string pretty_print(const NodePtr& ast) {
    std::string out;
    print(ast, out, 0, false);
    return out;
}

bool structurally_equal(const NodePtr& a, const NodePtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case NodeKind::Number: return a->number == b->number;
        case NodeKind::Identifier: return a->name == b->name;
        case NodeKind::Pow:
            return a->exponent == b->exponent && structurally_equal(a->lhs, b->lhs);
        case NodeKind::Call:
            return a->func == b->func && structurally_equal(a->lhs, b->lhs);
        case NodeKind::Negate:
            return structurally_equal(a->lhs, b->lhs);
        default:
            return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
    }
}

std::vector<std::string> free_identifiers(const NodePtr& ast) {
    std::set<std::string> ids;
    collect_identifiers(ast, ids);
    return {ids.begin(), ids.end()};
}

} // namespace frhopf::expr
