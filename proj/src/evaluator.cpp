#include <qseries/evaluator.hpp>

#include <algorithm>
#include <string>
#include <type_traits>

#include <qseries/errors.hpp>
#include <qseries/functions.hpp>

namespace qseries {

namespace {

// A divisor came out zero to its working precision; only a larger W can help.
struct NeedsDeeper {};

bool is_unit(const Integer &c)
{
    return c == 1 || c == -1;
}

QSeries evaluate_at(const Expr &e, Exponent target, const EvalOptions &options);

QSeries raw(const Expr &e, Exponent w, const EvalOptions &options)
{
    if (auto form = product_form(e)) {
        return expand(*form, w);
    }
    return std::visit(
        [&](const auto &n) -> QSeries {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return QSeries::constant(n.value, w);
            } else if constexpr (std::is_same_v<T, MonomialNode>) {
                return QSeries::monomial(1, n.exponent, w);
            } else if constexpr (std::is_same_v<T, NamedNode>) {
                return expand(named_product(n.fn, n.power), w);
            } else if constexpr (std::is_same_v<T, PochhammerNode>) {
                throw DomainError("unfoldable Pochhammer symbol");
            } else if constexpr (std::is_same_v<T, NegNode>) {
                return neg(raw(*n.inner, w, options));
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                const auto lhs = raw(*n.lhs, w, options);
                const auto rhs = raw(*n.rhs, w, options);
                switch (n.op) {
                    case BinaryOp::Add: return lhs + rhs;
                    case BinaryOp::Sub: return lhs - rhs;
                    case BinaryOp::Mul: return lhs * rhs;
                    case BinaryOp::Div:
                        if (rhs.is_zero()) {
                            throw NeedsDeeper{};
                        }
                        return lhs * invert(rhs);
                }
                throw DomainError("unknown binary operator");
            } else if constexpr (std::is_same_v<T, PowNode>) {
                const auto base = raw(*n.base, w, options);
                if (n.exponent <= 0 && base.is_zero()) {
                    throw NeedsDeeper{};
                }
                return pow(base, n.exponent);
            } else {
                const auto inner = evaluate_at(*n.inner, n.modulus * (w - 1) + n.residue + 1, options);
                return dissect(inner, n.modulus, n.residue);
            }
        },
        e.node);
}

QSeries evaluate_at(const Expr &e, Exponent target, const EvalOptions &options)
{
    Exponent w = target;
    for (int attempt = 0;; ++attempt) {
        Exponent grow = 0;
        try {
            auto s = raw(e, w, options);
            if (s.precision() >= target) {
                return s;
            }
            grow = (target - s.precision()) << std::min(attempt, 30);
        } catch (const NeedsDeeper &) {
            grow = std::max<Exponent>(w, 16) << std::min(attempt, 30);
        }
        w += grow;
        if (w - target > options.guard_cap) {
            throw InsufficientPrecisionError("evaluation to q^" + std::to_string(target) + " needs a working order above "
                                             + std::to_string(target + options.guard_cap) + " (guard cap "
                                             + std::to_string(options.guard_cap) + ")");
        }
    }
}

} // namespace

std::optional<ProductForm> product_form(const Expr &e)
{
    return std::visit(
        [&](const auto &n) -> std::optional<ProductForm> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntegerLiteral>) {
                return ProductForm::constant(n.value);
            } else if constexpr (std::is_same_v<T, MonomialNode>) {
                return ProductForm::monomial(n.exponent);
            } else if constexpr (std::is_same_v<T, NamedNode>) {
                return named_product(n.fn, n.power);
            } else if constexpr (std::is_same_v<T, PochhammerNode>) {
                ProductForm f;
                for (const auto &g : n.generators) {
                    f.times_generator(g.sign, g.offset, n.base, 1);
                }
                return f;
            } else if constexpr (std::is_same_v<T, NegNode>) {
                auto inner = product_form(*n.inner);
                if (inner) {
                    inner->scale = -inner->scale;
                }
                return inner;
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                if (n.op == BinaryOp::Add || n.op == BinaryOp::Sub) {
                    return std::nullopt;
                }
                auto lhs = product_form(*n.lhs);
                if (!lhs) {
                    return std::nullopt;
                }
                auto rhs = product_form(*n.rhs);
                if (!rhs) {
                    return std::nullopt;
                }
                if (n.op == BinaryOp::Mul) {
                    return *lhs * *rhs;
                }
                if (!is_unit(rhs->scale)) {
                    return std::nullopt;
                }
                return *lhs / *rhs;
            } else if constexpr (std::is_same_v<T, PowNode>) {
                auto base = product_form(*n.base);
                if (!base || (n.exponent < 0 && !is_unit(base->scale)) || (n.exponent == 0 && base->is_zero())) {
                    return std::nullopt;
                }
                return pow(*base, n.exponent);
            } else {
                return std::nullopt;
            }
        },
        e.node);
}

QSeries evaluate(const Expr &e, Exponent order, const EvalOptions &options)
{
    if (order < 1) {
        throw DomainError("evaluation order must be at least 1");
    }
    return evaluate_at(e, order, options);
}

} // namespace qseries
