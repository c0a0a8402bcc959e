#include <doctest.h>

#include <random>

#include <qseries/errors.hpp>
#include <qseries/evaluator.hpp>
#include <qseries/expr.hpp>
#include <qseries/functions.hpp>

#include "oracles.hpp"

using namespace qseries;

namespace {

QSeries eval(std::string_view text, Exponent n)
{
    return evaluate(*parse(text), n);
}

std::vector<long> values(const QSeries &f, Exponent from, Exponent to)
{
    std::vector<long> out;
    for (Exponent i = from; i < to; ++i) {
        out.push_back(f.coeff(i).get_si());
    }
    return out;
}

} // namespace

TEST_SUITE("evaluator")
{
    TEST_CASE("E(q)")
    {
        const auto f = eval("E(q)", 8);
        CHECK(f.precision() >= 8);
        CHECK(values(f, 0, 8) == std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1});
    }

    TEST_CASE("constants and cancellation")
    {
        CHECK(values(eval("q^0", 5), 0, 5) == std::vector<long>{1, 0, 0, 0, 0});
        CHECK(values(eval("R(q)/R(q)", 30), 0, 30) == values(QSeries::one(30), 0, 30));
        CHECK(eval("E(q) - E(q)", 12).is_zero());
        CHECK(values(eval("(q^0 - q)^-1", 10), 0, 10) == std::vector<long>(10, 1));
        CHECK(values(eval("-3*q^2 + 7", 4), 0, 4) == std::vector<long>{7, 0, -3, 0});
    }

    TEST_CASE("substitution consistency")
    {
        const Exponent n = 120;
        const auto direct = eval("R(q^2)", n);
        const auto sub = substitute(eval("R(q)", n), 2);
        CHECK(equal_to_order(direct, sub, n).equal);
        CHECK(equal_to_order(eval("E(q^3)^2", n), substitute(pow(euler(n), 2), 3), n).equal);
    }

    TEST_CASE("Laurent prefactors reach the requested order")
    {
        const auto f = eval("1/(q*E(q)) - E(q)/q", 50);
        CHECK(f.valuation() == -1 + 1);
        CHECK(f.precision() >= 50);
        const auto g = eval("q^-7 * E(q^2)", 10);
        CHECK(g.precision() >= 10);
        CHECK(g.coeff(-7) == 1);
        CHECK(g.coeff(-5) == -1);
        const auto h = eval("(E(q) - 1)^-1", 20);
        CHECK(h.valuation() == -1);
        CHECK(h.precision() >= 20);
        CHECK(equal_to_order(h * (eval("E(q)", 40) - QSeries::one(40)), QSeries::one(20), 20).equal);
    }

    TEST_CASE("products are folded before expansion")
    {
        const auto form = product_form(*parse("q^2 * (q;q^2)_inf^3 / (-1;q)_inf^-1 * 5"));
        REQUIRE(form.has_value());
        CHECK(form->scale == 5);
        CHECK(form->shift == 2);
        CHECK_FALSE(product_form(*parse("E(q) + 1")).has_value());
        CHECK_FALSE(product_form(*parse("E(q)/2")).has_value());
        CHECK_FALSE(product_form(*parse("dissect(E(q), 2, 1)")).has_value());
        CHECK(product_form(*parse("(q^2, q^8; q^10)_inf / (-1; q^10)_inf")).has_value());
    }

    TEST_CASE("dissect nodes")
    {
        const auto e = eval("dissect(E(q), 5, 2)", 40);
        const auto direct = dissect(euler(5 * 40), 5, 2);
        CHECK(equal_to_order(e, direct, 40).equal);
        CHECK_THROWS_AS(eval("dissect(q^-1 + 1, 2, 0)", 5), DomainError);
        // alpha(10n+3) vanish through nested dissection
        CHECK(eval("dissect(dissect(nu(q^2), 2, 1), 5, 1)", 100).is_zero());
    }

    TEST_CASE("evaluation errors")
    {
        CHECK_THROWS_AS(eval("E(q)", 0), DomainError);
        CHECK_THROWS_AS(eval("1/(2*E(q))", 5), NonUnitError);
        CHECK_THROWS_AS(eval("(1;q)_inf^-1 + 0", 5), ParseError);
        CHECK_THROWS_AS(eval("1/(E(q) - E(q))", 5), InsufficientPrecisionError);
        CHECK_THROWS_AS(eval("(E(q)-E(q))^0", 5), InsufficientPrecisionError);
        CHECK_THROWS_AS(eval("1/(-1;q)_inf", 5), NonUnitError);
        EvalOptions small;
        small.guard_cap = 10;
        CHECK_THROWS_AS(evaluate(*parse("(E(q) - 1)^-40"), 10, small), InsufficientPrecisionError);
        CHECK_NOTHROW(evaluate(*parse("(E(q) - 1)^-40"), 10));
    }

    TEST_CASE("monotone refinement")
    {
        std::mt19937 rng(8080);
        const std::vector<std::string> texts{
            "E(q)^3 - 3*q*E(q^9)^3",
            "1/(R(q)*R(q^4)) + q^2*R(q)*R(q^4)",
            "(E(q) - 1)^-2 * q^5 + G(q^3)",
            "dissect(k(q)^2 - k(q), 3, 1)",
            "mu(q)^-1 - mu(q)",
            "nu(q^2)*nu(q^4) / (q^2 + 1)",
        };
        for (const auto &t : texts) {
            const auto e = parse(t);
            const Exponent n = std::uniform_int_distribution<int>(5, 60)(rng);
            const Exponent np = n + std::uniform_int_distribution<int>(1, 80)(rng);
            const auto lo = evaluate(*e, n), hi = evaluate(*e, np);
            CHECK(lo.precision() >= n);
            CHECK(hi.precision() >= np);
            CHECK_MESSAGE(equal_to_order(lo, hi, n).equal, t);
        }
    }

    TEST_CASE("Euler reciprocal counts partitions")
    {
        const auto p = eval("1/E(q)", 51);
        for (int n = 0; n <= 50; ++n) {
            CHECK(p.coeff(n) == oracle::partitions(n));
        }
    }
}
