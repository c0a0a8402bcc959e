#pragma once

#include <optional>

#include <qseries/expr.hpp>
#include <qseries/products.hpp>
#include <qseries/series.hpp>

namespace qseries {

struct EvalOptions {
    // Largest amount by which the working order of any (sub)evaluation may
    // exceed its target before InsufficientPrecisionError is raised.
    Exponent guard_cap = 4096;
};

/**
 * Evaluate e to a series exact below q^order (or better).
 *
 * Leaves are expanded at a working order W, starting at W = order. Laurent
 * prefactors and quotients by series of positive valuation lose precision;
 * when the achieved bound P is short, the evaluation is redone with
 *
 *     W <- W + (order - P) * 2^attempt
 *
 * until P >= order or W - order exceeds options.guard_cap. A divisor that is
 * zero to its precision grows W by max(W, 16) * 2^attempt instead.
 *
 * Pure products (Pochhammer symbols, named functions, monomials, integer
 * constants combined with *, / and ^) are folded into one ProductForm and
 * expanded directly, without series multiplication.
 */
QSeries evaluate(const Expr &e, Exponent order, const EvalOptions &options = {});

// Closed product form of e, when e is a product/quotient/power of products.
std::optional<ProductForm> product_form(const Expr &e);

} // namespace qseries
