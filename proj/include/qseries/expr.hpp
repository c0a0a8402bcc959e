#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <qseries/errors.hpp>
#include <qseries/functions.hpp>
#include <qseries/series.hpp>

namespace qseries {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntegerLiteral {
    Integer value;
};

// q^exponent
struct MonomialNode {
    Exponent exponent = 1;
};

// fn(q^power); for nu the power is even and the node denotes nu(q^power).
struct NamedNode {
    NamedFunction fn = NamedFunction::E;
    Exponent power = 1;
};

// sign * q^offset; "-1" is {-1, 0}
struct PochhammerGenerator {
    int sign = 1;
    Exponent offset = 1;

    friend bool operator==(const PochhammerGenerator &, const PochhammerGenerator &) = default;
};

// (g1, g2, ...; q^base)_inf
struct PochhammerNode {
    std::vector<PochhammerGenerator> generators;
    Exponent base = 1;
};

struct NegNode {
    ExprPtr inner;
};

enum class BinaryOp { Add, Sub, Mul, Div };

struct BinaryNode {
    BinaryOp op = BinaryOp::Add;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct PowNode {
    ExprPtr base;
    std::int64_t exponent = 1;
};

// sum_n c(m n + r) q^n of the inner expression
struct DissectNode {
    ExprPtr inner;
    Exponent modulus = 1;
    Exponent residue = 0;
};

struct Expr {
    std::variant<IntegerLiteral, MonomialNode, NamedNode, PochhammerNode, NegNode, BinaryNode, PowNode, DissectNode> node;
};

// Structural (deep) equality.
bool operator==(const Expr &a, const Expr &b);

template <typename Node>
ExprPtr make_expr(Node n)
{
    return std::make_shared<const Expr>(Expr{std::move(n)});
}

enum class ParseErrorKind { Lexical, Syntax, Argument };

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t offset, std::string message, std::vector<std::string> expected = {});

    ParseErrorKind kind() const noexcept { return kind_; }
    // Byte offset into the parsed text.
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string> &expected() const noexcept { return expected_; }

private:
    ParseErrorKind kind_;
    std::size_t offset_;
    std::vector<std::string> expected_;
};

ExprPtr parse(std::string_view text);

// Canonical text; parse(to_text(e)) is structurally equal to e.
std::string to_text(const Expr &e);

} // namespace qseries
