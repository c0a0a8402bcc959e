#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <qseries/products.hpp>
#include <qseries/series.hpp>

namespace qseries {

// The named series of the expression language.
enum class NamedFunction {
    E,     // (q;q)_inf
    G,     // 1/(q,q^4;q^5)_inf
    H,     // 1/(q^2,q^3;q^5)_inf
    R,     // (q,q^4;q^5)_inf / (q^2,q^3;q^5)_inf
    K,     // q R(q) R(q^2)^2
    Kappa, // R(q)^2 / R(q^2)
    Mu,    // q R(q) R(q^4)
    Nu,    // nu at an even power of q, see named_product
};

std::string_view name_of(NamedFunction fn);
std::optional<NamedFunction> named_function_from(std::string_view name);

// Closed product form of fn evaluated at q^m. For NamedFunction::Nu, m is the
// full argument power and must be even: the result is nu(q^m), whose integral
// product form only exists for even m.
ProductForm named_product(NamedFunction fn, Exponent m = 1);

// Each constructor is exact below q^order.
QSeries euler(Exponent order);
QSeries rr_G(Exponent order);
QSeries rr_H(Exponent order);
QSeries rr_R(Exponent order);
QSeries param_k(Exponent order);
QSeries param_kappa(Exponent order);
QSeries param_mu(Exponent order);
QSeries param_nu2(Exponent order);

// sum_n c(m n + r) q^n. Needs valuation >= 0 and 0 <= r < m.
QSeries dissect(const QSeries &f, Exponent m, Exponent r);

// sign * q^exponent
struct Monomial {
    int sign = 1;
    Exponent exponent = 0;
};

/**
 * Monomial specialization of the Jordan-Kronecker p-dissection
 *
 *   (q, q, az, q/(az); a, q/a, z, q/z; q)_inf
 *     = sum_{j<p} z^j (q^p, q^p, a q^j z^p, q^(p-j)/(a z^p); a q^j, q^(p-j)/a, z^p, q^p/z^p; q^p)_inf
 *
 * with a, z signed monomials and the identity's q replaced by q^base.
 */
struct JordanKroneckerParams {
    Monomial a;
    Monomial z;
    Exponent p = 1;
    Exponent base = 1;
};

// Left side. Every generator must have a nonnegative exponent
// (UnsupportedSpecializationError otherwise); a +1 generator is a ZeroProductError.
ProductForm jk_lhs_form(const JordanKroneckerParams &params);

// Summand j of the right side, 0 <= j < p. Generators with negative exponents
// are reflected into a Laurent monomial; a summand containing (1; q^n)_inf in
// its numerator is the zero form.
ProductForm jk_term_form(const JordanKroneckerParams &params, Exponent j);

struct SeriesPair {
    QSeries lhs;
    QSeries rhs;
};

SeriesPair jk_general(const JordanKroneckerParams &params, Exponent order);

// (q^r, q^(2k-r); q^(k-r), q^(k+r); q^(2k))_inf
ProductForm andrews_bressoud(Exponent k, Exponent r);

// True when 1 <= r <= k-1, gcd(k, r) = 1 and k, r have opposite parity.
bool is_andrews_bressoud_pair(Exponent k, Exponent r);

// Left side of the product k-dissection: andrews_bressoud(k, r) times
// (q^(2k), q^(2k); q^k, q^k; q^(2k))_inf.
QSeries ab_dissection_lhs(Exponent k, Exponent r, Exponent order);

// The k summands q^(j(k-r)) * (product in q^(2k^2)), j = 0..k-1, each exact below q^order.
std::vector<QSeries> ab_dissection_terms(Exponent k, Exponent r, Exponent order);

} // namespace qseries
