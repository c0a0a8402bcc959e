#include <doctest.h>

#include <random>
#include <set>

#include <qseries/errors.hpp>
#include <qseries/evaluator.hpp>
#include <qseries/expr.hpp>
#include <qseries/functions.hpp>
#include <qseries/registry.hpp>

#include "oracles.hpp"

using namespace qseries;

namespace {

bool same_to(const QSeries &a, const QSeries &b, Exponent n)
{
    return equal_to_order(a, b, n).equal;
}

// Generalized pentagonal numbers k(3k-1)/2 with sign (-1)^k.
std::map<Exponent, int> pentagonal_below(Exponent n)
{
    std::map<Exponent, int> out;
    for (Exponent k = -60; k <= 60; ++k) {
        const Exponent e = k * (3 * k - 1) / 2;
        if (e < n) {
            out[e] = (k % 2 == 0) ? 1 : -1;
        }
    }
    return out;
}

// Part of f supported on exponents congruent to c mod m.
QSeries residue_part(const QSeries &f, Exponent m, Exponent c)
{
    std::vector<Term> terms;
    for (Exponent n = f.valuation(); n < f.precision(); ++n) {
        if (((n % m) + m) % m == c && sgn(f.stored(n)) != 0) {
            terms.push_back({n, f.stored(n)});
        }
    }
    return QSeries::from_terms(terms, f.precision());
}

Exponent support_class(const QSeries &f, Exponent m)
{
    std::set<Exponent> classes;
    for (Exponent n = f.valuation(); n < f.precision(); ++n) {
        if (sgn(f.stored(n)) != 0) {
            classes.insert(((n % m) + m) % m);
        }
    }
    REQUIRE(classes.size() <= 1);
    return classes.empty() ? -1 : *classes.begin();
}

} // namespace

TEST_SUITE("functions")
{
    TEST_CASE("euler")
    {
        const auto e = euler(100);
        CHECK(e.coeff(0) == 1);
        CHECK(oracle::dense(e, 100)
              == oracle::product(ProductSpec{{ProductFactor{1, 1, 1, 1}}}, 100));
        const auto pent = pentagonal_below(100);
        for (Exponent n = 0; n < 100; ++n) {
            const auto it = pent.find(n);
            CHECK(e.coeff(n) == (it == pent.end() ? 0 : it->second));
        }
        const auto big = euler(2000);
        for (Exponent n = 0; n < 2000; ++n) {
            if (n % 5 == 3 || n % 5 == 4) {
                CHECK(big.coeff(n) == 0);
            }
        }
    }

    TEST_CASE("Rogers-Ramanujan functions")
    {
        const Exponent n = 60;
        const auto g = rr_G(n), h = rr_H(n), r = rr_R(n);
        CHECK(g.coeff(0) == 1);
        CHECK(h.coeff(0) == 1);
        CHECK(r.coeff(0) == 1);
        CHECK(same_to(r * g, h, n));
        const ProductSpec g_inv{{ProductFactor{1, 1, 5, 1}, ProductFactor{1, 4, 5, 1}}};
        const ProductSpec h_inv{{ProductFactor{1, 2, 5, 1}, ProductFactor{1, 3, 5, 1}}};
        CHECK(same_to(g * expand_product(g_inv, n), QSeries::one(n), n));
        CHECK(same_to(h * expand_product(h_inv, n), QSeries::one(n), n));
        // R by the quotient spec, multiplied out naively
        const ProductSpec r_spec{{ProductFactor{1, 1, 5, 1}, ProductFactor{1, 4, 5, 1}, ProductFactor{1, 2, 5, -1},
                                  ProductFactor{1, 3, 5, -1}}};
        CHECK(oracle::dense(r, 10) == oracle::product(r_spec, 10));
        // G(q) = sum q^(n^2) / (q;q)_n has coefficients = partitions into parts 1,4 mod 5
        CHECK(g.coeff(4) == 2);
        CHECK(g.coeff(9) == 5);
    }

    TEST_CASE("parameters")
    {
        const Exponent n = 200;
        const auto k = param_k(n);
        CHECK(k.valuation() == 1);
        CHECK(k.precision() >= n);
        CHECK(param_mu(n).valuation() == 1);
        const auto nu2 = param_nu2(n);
        CHECK(nu2.coeff(0) == 1);
        CHECK(param_kappa(n).coeff(0) == 1);
        const auto kappa = param_kappa(n);
        CHECK(same_to(nu2, kappa * substitute(kappa, 2), n));
        // k = q R(q) R(q^2)^2 built from series arithmetic
        const auto r = rr_R(n);
        CHECK(same_to(k, shift(r * pow(substitute(r, 2), 2), 1), n));
        CHECK_THROWS_AS(named_product(NamedFunction::Nu, 3), DomainError);
    }

    TEST_CASE("nu product equals the alpha text")
    {
        const auto alpha = evaluate(*parse(series_text::alpha), 300);
        CHECK(same_to(alpha, param_nu2(300), 300));
        const auto beta = evaluate(*parse(series_text::beta), 300);
        CHECK(same_to(alpha * beta, QSeries::one(300), 300));
    }

    TEST_CASE("gamma and delta have two equivalent product forms")
    {
        const Exponent n = 250;
        const auto gamma = evaluate(*parse(series_text::gamma), n);
        const auto delta = evaluate(*parse(series_text::delta), n);
        const auto gamma_r = evaluate(*parse("R(q^2)/R(q)^2 * (q^2,q^8;q^10)_inf/(q^3,q^7;q^10)_inf"), n);
        const auto delta_r = evaluate(*parse("R(q)^2/R(q^2) * (q^4,q^6;q^10)_inf/(q,q^9;q^10)_inf"), n);
        CHECK(same_to(gamma, gamma_r, n));
        CHECK(same_to(delta, delta_r, n));
        for (Exponent e = 4; e < n; e += 5) {
            CHECK(gamma.coeff(e) == 0);
            CHECK(delta.coeff(e) == 0);
        }
    }

    TEST_CASE("dissect")
    {
        const auto f = QSeries(0, {Integer(1), Integer(2), Integer(3), Integer(4), Integer(5)}, 5);
        const auto d = dissect(f, 2, 1);
        CHECK(d.coeff(0) == 2);
        CHECK(d.coeff(1) == 4);
        CHECK(d.precision() == 2);
        CHECK(dissect(f, 1, 0) == f);
        CHECK(dissect(f, 2, 0).precision() == 3);
        CHECK_THROWS_AS(dissect(QSeries::monomial(1, -1, 4), 2, 0), DomainError);
        CHECK_THROWS_AS(dissect(f, 0, 0), DomainError);
        CHECK_THROWS_AS(dissect(f, 3, 3), DomainError);
        const auto alpha = param_nu2(400);
        CHECK(dissect(alpha, 10, 3).is_zero());
        CHECK(dissect(alpha, 10, 7).is_zero());
    }

    TEST_CASE("dissection components reconstruct the series")
    {
        std::mt19937 rng(2718);
        for (int trial = 0; trial < 60; ++trial) {
            const Exponent n = std::uniform_int_distribution<int>(1, 60)(rng);
            const auto spec = oracle::random_spec(rng);
            const auto f = expand_product(spec, n);
            const Exponent m = std::uniform_int_distribution<int>(1, 7)(rng);
            QSeries sum = QSeries::zero(f.precision());
            for (Exponent r = 0; r < m; ++r) {
                sum = sum + shift(substitute(dissect(f, m, r), m), r);
            }
            // q -> q^m only vouches for exponents up to m (P - 1)
            REQUIRE(sum.precision() > f.precision() - m);
            CHECK(same_to(sum, f, std::min(sum.precision(), f.precision())));
        }
    }

    TEST_CASE("Jordan-Kronecker with p = 1 is the left side itself")
    {
        const JordanKroneckerParams params{{1, 2}, {-1, 3}, 1, 7};
        CHECK(jk_term_form(params, 0) == jk_lhs_form(params));
    }

    TEST_CASE("Jordan-Kronecker grid, p <= 7")
    {
        int checked = 0;
        for (Exponent base = 1; base <= 6; ++base) {
            for (Exponent alpha = 1; alpha < base; ++alpha) {
                for (Exponent beta = 1; beta < base; ++beta) {
                    for (int sa : {1, -1}) {
                        for (int sz : {1, -1}) {
                            for (Exponent p = 1; p <= 7; ++p) {
                                if ((sa * sz == 1 && (alpha + beta == 0 || alpha + beta == base)) || alpha + beta > base) {
                                    continue;
                                }
                                const JordanKroneckerParams params{{sa, alpha}, {sz, beta}, p, base};
                                try {
                                    const auto sides = jk_general(params, 60);
                                    CHECK_MESSAGE(same_to(sides.lhs, sides.rhs, 60), "base ", base, " a ", sa, "q^", alpha,
                                                  " z ", sz, "q^", beta, " p ", p);
                                    ++checked;
                                } catch (const UnsupportedSpecializationError &) {
                                }
                            }
                        }
                    }
                }
            }
        }
        CHECK(checked > 300);
    }

    TEST_CASE("Jordan-Kronecker rejections")
    {
        CHECK_THROWS_AS(jk_lhs_form({{1, 5}, {1, 1}, 2, 3}), UnsupportedSpecializationError);
        CHECK_THROWS_AS(jk_lhs_form({{1, 0}, {1, 1}, 2, 3}), ZeroProductError);
        CHECK_THROWS_AS(jk_lhs_form({{-1, 0}, {1, 1}, 2, 3}), UnsupportedSpecializationError);
        CHECK_THROWS_AS(jk_term_form({{1, 1}, {1, 1}, 2, 3}, 2), DomainError);
        CHECK_THROWS_AS(jk_general({{1, 1}, {1, 1}, 0, 3}, 10), DomainError);
    }

    TEST_CASE("Andrews-Bressoud k-dissection")
    {
        const auto lhs = ab_dissection_lhs(4, 1, 100);
        const auto terms = ab_dissection_terms(4, 1, 100);
        REQUIRE(terms.size() == 4);
        QSeries sum = QSeries::zero(100);
        for (const auto &t : terms) {
            sum = sum + t;
        }
        CHECK(same_to(sum, lhs, 100));
        for (Exponent k = 2; k <= 7; ++k) {
            for (Exponent r = 1; r < k; ++r) {
                if (!is_andrews_bressoud_pair(k, r)) {
                    continue;
                }
                std::set<Exponent> seen;
                for (const auto &t : ab_dissection_terms(k, r, 150)) {
                    const auto c = support_class(t, k);
                    if (c >= 0) {
                        CHECK(seen.insert(c).second);
                    }
                }
            }
        }
        CHECK(is_andrews_bressoud_pair(5, 2));
        CHECK_FALSE(is_andrews_bressoud_pair(5, 3));
        CHECK_FALSE(is_andrews_bressoud_pair(6, 3));
        CHECK_THROWS_AS(andrews_bressoud(5, 5), DomainError);
    }

    TEST_CASE("(5,2) terms match the closed-form dissection")
    {
        const Exponent n = 120;
        const auto *rec = [] {
            for (const auto &r : builtin_registry()) {
                if (r.id == "AB-52") {
                    return &r;
                }
            }
            return static_cast<const IdentityRecord *>(nullptr);
        }();
        REQUIRE(rec != nullptr);
        const auto display = evaluate(*parse(rec->rhs), n);
        const auto efactor = expand(pow(named_product(NamedFunction::E, 10), 2)
                                        / pow([] {
                                              ProductForm f;
                                              f.times_generator(1, 5, 10, 1);
                                              return f;
                                          }(),
                                              2),
                                    n);
        const auto inv = invert(efactor);
        int nonzero = 0;
        for (const auto &t : ab_dissection_terms(5, 2, n)) {
            const auto c = support_class(t, 5);
            if (c < 0) {
                continue;
            }
            ++nonzero;
            CHECK(same_to(t * inv, residue_part(display, 5, c), n));
        }
        CHECK(nonzero == 4);
    }
}
