#include <qseries/expr.hpp>

#include <cctype>
#include <limits>
#include <sstream>

namespace qseries {

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, std::string message, std::vector<std::string> expected)
    : Error(std::move(message)), kind_(kind), offset_(offset), expected_(std::move(expected))
{
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Semicolon, Inf, End };

struct Token {
    Tok type;
    std::string text;
    std::size_t offset;
};

std::string describe(const Token &t)
{
    switch (t.type) {
        case Tok::End:
            return "end of input";
        case Tok::Int:
        case Tok::Ident:
            return "'" + t.text + "'";
        default:
            return "'" + t.text + "'";
    }
}

bool is_known_identifier(std::string_view s)
{
    return s == "q" || s == "dissect" || named_function_from(s).has_value();
}

std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                ++i;
            }
            out.push_back({Tok::Int, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                ++i;
            }
            std::string word(text.substr(start, i - start));
            if (word == "_inf") {
                out.push_back({Tok::Inf, word, start});
            } else if (is_known_identifier(word)) {
                out.push_back({Tok::Ident, word, start});
            } else {
                throw ParseError(ParseErrorKind::Lexical, start, "unknown identifier '" + word + "' at byte " + std::to_string(start));
            }
            continue;
        }
        Tok t;
        switch (c) {
            case '+': t = Tok::Plus; break;
            case '-': t = Tok::Minus; break;
            case '*': t = Tok::Star; break;
            case '/': t = Tok::Slash; break;
            case '^': t = Tok::Caret; break;
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case ',': t = Tok::Comma; break;
            case ';': t = Tok::Semicolon; break;
            default:
                throw ParseError(ParseErrorKind::Lexical, start,
                                 std::string("unexpected character '") + c + "' at byte " + std::to_string(start));
        }
        out.push_back({t, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    ExprPtr parse_all()
    {
        auto e = expr();
        expect(Tok::End, {"operator", "end of input"});
        return e;
    }

private:
    const Token &peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at(Tok t) const { return peek().type == t; }
    bool at_ident(std::string_view name) const { return at(Tok::Ident) && peek().text == name; }

    const Token &advance() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const Token &t = peek();
        std::ostringstream os;
        os << "syntax error at byte " << t.offset << ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            os << (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") << expected[i];
        }
        os << ", found " << describe(t);
        throw ParseError(ParseErrorKind::Syntax, t.offset, os.str(), std::move(expected));
    }

    [[noreturn]] void argument_error(std::size_t offset, const std::string &what) const
    {
        throw ParseError(ParseErrorKind::Argument, offset, what + " (at byte " + std::to_string(offset) + ")");
    }

    const Token &expect(Tok t, std::vector<std::string> expected)
    {
        if (!at(t)) {
            fail(std::move(expected));
        }
        return advance();
    }

    const Token &expect_q()
    {
        if (!at_ident("q")) {
            fail({"'q'"});
        }
        return advance();
    }

    Integer integer_literal(const Token &t) { return Integer(t.text, 10); }

    std::int64_t small_integer(const Token &t, bool negative)
    {
        Integer v = integer_literal(t);
        if (negative) {
            v = -v;
        }
        if (!v.fits_slong_p()) {
            argument_error(t.offset, "exponent " + v.get_str() + " does not fit in 64 bits");
        }
        return v.get_si();
    }

    std::int64_t uint_value() { return small_integer(expect(Tok::Int, {"unsigned integer"}), false); }

    std::int64_t sint_value()
    {
        bool negative = false;
        if (at(Tok::Minus) || at(Tok::Plus)) {
            negative = advance().type == Tok::Minus;
        }
        return small_integer(expect(Tok::Int, {"integer"}), negative);
    }

    // "q" [ "^" uint ] -> the power, already consumed 'q'
    std::int64_t optional_power()
    {
        if (at(Tok::Caret)) {
            advance();
            return uint_value();
        }
        return 1;
    }

    ExprPtr expr()
    {
        auto lhs = term();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const auto op = advance().type == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
            lhs = make_expr(BinaryNode{op, lhs, term()});
        }
        return lhs;
    }

    ExprPtr term()
    {
        auto lhs = unary();
        while (at(Tok::Star) || at(Tok::Slash)) {
            const auto op = advance().type == Tok::Star ? BinaryOp::Mul : BinaryOp::Div;
            lhs = make_expr(BinaryNode{op, lhs, unary()});
        }
        return lhs;
    }

    ExprPtr unary()
    {
        if (at(Tok::Minus)) {
            advance();
            return make_expr(NegNode{factor()});
        }
        return factor();
    }

    ExprPtr factor()
    {
        auto base = atom();
        if (at(Tok::Caret)) {
            advance();
            return make_expr(PowNode{base, sint_value()});
        }
        return base;
    }

    bool paren_is_pochhammer() const
    {
        // pos_ is at '('; look for ';' at depth 0 before the matching ')'
        int depth = 0;
        for (std::size_t i = pos_ + 1; i < toks_.size(); ++i) {
            switch (toks_[i].type) {
                case Tok::LParen: ++depth; break;
                case Tok::RParen:
                    if (depth == 0) {
                        return false;
                    }
                    --depth;
                    break;
                case Tok::Semicolon:
                    if (depth == 0) {
                        return true;
                    }
                    break;
                case Tok::End: return false;
                default: break;
            }
        }
        return false;
    }

    ExprPtr atom()
    {
        const Token &t = peek();
        switch (t.type) {
            case Tok::Int: advance(); return make_expr(IntegerLiteral{integer_literal(t)});
            case Tok::LParen:
                if (paren_is_pochhammer()) {
                    return pochhammer();
                } else {
                    advance();
                    auto inner = expr();
                    expect(Tok::RParen, {"')'", "operator"});
                    return inner;
                }
            case Tok::Ident:
                if (t.text == "q") {
                    advance();
                    if (at(Tok::Caret)) {
                        advance();
                        return make_expr(MonomialNode{sint_value()});
                    }
                    return make_expr(MonomialNode{1});
                }
                if (t.text == "dissect") {
                    return dissect();
                }
                return named();
            default: fail({"integer", "'q'", "function name", "'('", "'dissect'"});
        }
    }

    ExprPtr named()
    {
        const Token &name = advance();
        const auto fn = *named_function_from(name.text);
        expect(Tok::LParen, {"'(' after '" + name.text + "'"});
        const auto arg_at = peek().offset;
        expect_q();
        const auto power = optional_power();
        expect(Tok::RParen, {"')'"});
        if (power < 1) {
            argument_error(arg_at, name.text + " needs an argument q^m with m >= 1");
        }
        if (fn == NamedFunction::Nu && power % 2 != 0) {
            argument_error(arg_at, "nu is only available at even powers of q, e.g. nu(q^2)");
        }
        return make_expr(NamedNode{fn, power});
    }

    PochhammerGenerator generator()
    {
        const auto at_offset = peek().offset;
        int sign = 1;
        if (at(Tok::Minus)) {
            advance();
            sign = -1;
        }
        Exponent offset = 0;
        if (at(Tok::Int)) {
            const Token &t = advance();
            if (t.text != "1") {
                argument_error(t.offset, "Pochhammer generators are +-1 or +-q^n, not " + t.text);
            }
            offset = 0;
        } else if (at_ident("q")) {
            advance();
            offset = optional_power();
        } else {
            fail({"'1'", "'q'"});
        }
        if (offset == 0 && sign == 1) {
            argument_error(at_offset, "Pochhammer generator 1 makes the product zero");
        }
        return {sign, offset};
    }

    ExprPtr pochhammer()
    {
        expect(Tok::LParen, {"'('"});
        PochhammerNode node;
        node.generators.push_back(generator());
        while (at(Tok::Comma)) {
            advance();
            node.generators.push_back(generator());
        }
        expect(Tok::Semicolon, {"','", "';'"});
        const auto base_at = peek().offset;
        expect_q();
        node.base = optional_power();
        if (node.base < 1) {
            argument_error(base_at, "Pochhammer base must be q^m with m >= 1");
        }
        expect(Tok::RParen, {"')'"});
        expect(Tok::Inf, {"'_inf'"});
        return make_expr(std::move(node));
    }

    ExprPtr dissect()
    {
        advance();
        expect(Tok::LParen, {"'(' after 'dissect'"});
        auto inner = expr();
        expect(Tok::Comma, {"','", "operator"});
        const auto m_at = peek().offset;
        const auto m = uint_value();
        expect(Tok::Comma, {"','"});
        const auto r_at = peek().offset;
        const auto r = uint_value();
        expect(Tok::RParen, {"')'"});
        if (m < 1) {
            argument_error(m_at, "dissect modulus must be at least 1");
        }
        if (r >= m) {
            argument_error(r_at, "dissect residue must be below the modulus");
        }
        return make_expr(DissectNode{std::move(inner), m, r});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse(std::string_view text)
{
    return Parser(text).parse_all();
}

} // namespace qseries
