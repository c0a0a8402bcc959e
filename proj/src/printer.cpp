#include <qseries/expr.hpp>

#include <type_traits>

namespace qseries {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same(const ExprPtr &a, const ExprPtr &b)
{
    return a == b || (a && b && *a == *b);
}

std::string power_suffix(Exponent p)
{
    return p == 1 ? "q" : "q^" + std::to_string(p);
}

std::string generator_text(const PochhammerGenerator &g)
{
    std::string s = g.sign < 0 ? "-" : "";
    return s + (g.offset == 0 ? "1" : power_suffix(g.offset));
}

bool prints_as_atom(const Expr &e)
{
    return std::holds_alternative<IntegerLiteral>(e.node) || std::holds_alternative<NamedNode>(e.node)
           || std::holds_alternative<PochhammerNode>(e.node) || std::holds_alternative<DissectNode>(e.node);
}

// Binary nodes already print with their own parentheses.
std::string wrapped(const Expr &e)
{
    return std::holds_alternative<BinaryNode>(e.node) ? to_text(e) : "(" + to_text(e) + ")";
}

} // namespace

bool operator==(const Expr &a, const Expr &b)
{
    if (a.node.index() != b.node.index()) {
        return false;
    }
    return std::visit(
        [&](const auto &x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto &y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, MonomialNode>) {
                return x.exponent == y.exponent;
            } else if constexpr (std::is_same_v<T, NamedNode>) {
                return x.fn == y.fn && x.power == y.power;
            } else if constexpr (std::is_same_v<T, PochhammerNode>) {
                return x.base == y.base && x.generators == y.generators;
            } else if constexpr (std::is_same_v<T, NegNode>) {
                return same(x.inner, y.inner);
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<T, PowNode>) {
                return x.exponent == y.exponent && same(x.base, y.base);
            } else {
                return x.modulus == y.modulus && x.residue == y.residue && same(x.inner, y.inner);
            }
        },
        a.node);
}

std::string to_text(const Expr &e)
{
    return std::visit(
        overloaded{
            [](const IntegerLiteral &n) { return n.value.get_str(); },
            [](const MonomialNode &n) { return n.exponent == 1 ? std::string("q") : "q^" + std::to_string(n.exponent); },
            [](const NamedNode &n) { return std::string(name_of(n.fn)) + "(" + power_suffix(n.power) + ")"; },
            [](const PochhammerNode &n) {
                std::string s = "(";
                for (std::size_t i = 0; i < n.generators.size(); ++i) {
                    s += (i ? "," : "") + generator_text(n.generators[i]);
                }
                return s + ";" + power_suffix(n.base) + ")_inf";
            },
            [](const NegNode &n) {
                const auto &in = *n.inner;
                const bool bare = prints_as_atom(in) || std::holds_alternative<MonomialNode>(in.node)
                                  || std::holds_alternative<PowNode>(in.node);
                return "-" + (bare ? to_text(in) : wrapped(in));
            },
            [](const BinaryNode &n) {
                static constexpr const char *ops[] = {" + ", " - ", " * ", " / "};
                return "(" + to_text(*n.lhs) + ops[static_cast<int>(n.op)] + to_text(*n.rhs) + ")";
            },
            [](const PowNode &n) {
                const auto &b = *n.base;
                const std::string base = prints_as_atom(b) ? to_text(b) : wrapped(b);
                return base + "^" + std::to_string(n.exponent);
            },
            [](const DissectNode &n) {
                return "dissect(" + to_text(*n.inner) + ", " + std::to_string(n.modulus) + ", " + std::to_string(n.residue) + ")";
            },
        },
        e.node);
}

} // namespace qseries
