#include <qseries/functions.hpp>

#include <array>
#include <numeric>
#include <string>
#include <utility>

#include <qseries/errors.hpp>

namespace qseries {

namespace {

constexpr std::array<std::pair<NamedFunction, std::string_view>, 8> kNames{{
    {NamedFunction::E, "E"},
    {NamedFunction::G, "G"},
    {NamedFunction::H, "H"},
    {NamedFunction::R, "R"},
    {NamedFunction::K, "k"},
    {NamedFunction::Kappa, "kappa"},
    {NamedFunction::Mu, "mu"},
    {NamedFunction::Nu, "nu"},
}};

ProductForm poch(std::initializer_list<std::pair<int, Exponent>> gens, Exponent modulus, std::int64_t exponent)
{
    ProductForm f;
    for (const auto &[sign, offset] : gens) {
        f.times_generator(sign, offset, modulus, exponent);
    }
    return f;
}

ProductForm rr_R_form(Exponent m)
{
    return poch({{1, m}, {1, 4 * m}}, 5 * m, 1) * poch({{1, 2 * m}, {1, 3 * m}}, 5 * m, -1);
}

} // namespace

std::string_view name_of(NamedFunction fn)
{
    for (const auto &[f, n] : kNames) {
        if (f == fn) {
            return n;
        }
    }
    return "?";
}

std::optional<NamedFunction> named_function_from(std::string_view name)
{
    for (const auto &[f, n] : kNames) {
        if (n == name) {
            return f;
        }
    }
    return std::nullopt;
}

ProductForm named_product(NamedFunction fn, Exponent m)
{
    if (m < 1) {
        throw DomainError("named function argument q^" + std::to_string(m) + " needs a positive power");
    }
    switch (fn) {
        case NamedFunction::E:
            return poch({{1, m}}, m, 1);
        case NamedFunction::G:
            return poch({{1, m}, {1, 4 * m}}, 5 * m, -1);
        case NamedFunction::H:
            return poch({{1, 2 * m}, {1, 3 * m}}, 5 * m, -1);
        case NamedFunction::R:
            return rr_R_form(m);
        case NamedFunction::K:
            return ProductForm::monomial(m) * rr_R_form(m) * pow(rr_R_form(2 * m), 2);
        case NamedFunction::Kappa:
            return pow(rr_R_form(m), 2) / rr_R_form(2 * m);
        case NamedFunction::Mu:
            return ProductForm::monomial(m) * rr_R_form(m) * rr_R_form(4 * m);
        case NamedFunction::Nu: {
            if (m % 2 != 0) {
                throw DomainError("nu(q^" + std::to_string(m) + ") has no integral product form; the power must be even");
            }
            const Exponent h = m / 2;
            // (q,q^4;q^5)^2 (-q^4,-q^6;q^10) / ((q^2,q^3;q^5)^2 (-q^2,-q^8;q^10)) at q -> q^h
            return poch({{1, h}, {1, 4 * h}}, 5 * h, 2) * poch({{-1, 4 * h}, {-1, 6 * h}}, 10 * h, 1)
                   * poch({{1, 2 * h}, {1, 3 * h}}, 5 * h, -2) * poch({{-1, 2 * h}, {-1, 8 * h}}, 10 * h, -1);
        }
    }
    throw DomainError("unknown named function");
}

QSeries euler(Exponent order)
{
    return expand(named_product(NamedFunction::E), order);
}

QSeries rr_G(Exponent order)
{
    return expand(named_product(NamedFunction::G), order);
}

QSeries rr_H(Exponent order)
{
    return expand(named_product(NamedFunction::H), order);
}

QSeries rr_R(Exponent order)
{
    return expand(named_product(NamedFunction::R), order);
}

QSeries param_k(Exponent order)
{
    return expand(named_product(NamedFunction::K), order);
}

QSeries param_kappa(Exponent order)
{
    return expand(named_product(NamedFunction::Kappa), order);
}

QSeries param_mu(Exponent order)
{
    return expand(named_product(NamedFunction::Mu), order);
}

QSeries param_nu2(Exponent order)
{
    return expand(named_product(NamedFunction::Nu, 2), order);
}

QSeries dissect(const QSeries &f, Exponent m, Exponent r)
{
    if (m < 1) {
        throw DomainError("dissect: modulus must be positive, got " + std::to_string(m));
    }
    if (r < 0 || r >= m) {
        throw DomainError("dissect: residue " + std::to_string(r) + " is outside [0, " + std::to_string(m) + ")");
    }
    if (f.valuation() < 0) {
        throw DomainError("dissect: series has negative valuation " + std::to_string(f.valuation())
                          + "; shift it to a power series first");
    }
    const Exponent num = f.precision() - r - 1;
    const Exponent p = (num >= 0 ? num / m : -((-num + m - 1) / m)) + 1;
    std::vector<Integer> c(static_cast<std::size_t>(p));
    for (Exponent n = 0; n < p; ++n) {
        const Exponent src = m * n + r;
        if (src >= f.valuation()) {
            c[static_cast<std::size_t>(n)] = f.stored(src);
        }
    }
    return QSeries(0, std::move(c), p);
}

namespace {

void check_params(const JordanKroneckerParams &params)
{
    if (params.p < 1) {
        throw DomainError("Jordan-Kronecker dissection needs p >= 1");
    }
    if (params.base < 1) {
        throw DomainError("Jordan-Kronecker base q^" + std::to_string(params.base) + " needs a positive power");
    }
    for (const auto *mono : {&params.a, &params.z}) {
        if (mono->sign != 1 && mono->sign != -1) {
            throw DomainError("monomial sign must be +1 or -1");
        }
    }
}

int sign_pow(int sign, Exponent e)
{
    return (sign < 0 && e % 2 != 0) ? -1 : 1;
}

struct Generator {
    int sign;
    Exponent offset;
    std::int64_t exponent;
};

} // namespace

ProductForm jk_lhs_form(const JordanKroneckerParams &params)
{
    check_params(params);
    const auto s = params.base;
    const auto [sa, alpha] = params.a;
    const auto [sz, beta] = params.z;
    const std::array<Generator, 8> gens{{
        {1, s, 1},
        {1, s, 1},
        {sa * sz, alpha + beta, 1},
        {sa * sz, s - alpha - beta, 1},
        {sa, alpha, -1},
        {sa, s - alpha, -1},
        {sz, beta, -1},
        {sz, s - beta, -1},
    }};
    ProductForm out;
    for (const auto &g : gens) {
        if (g.offset < 0) {
            throw UnsupportedSpecializationError("Jordan-Kronecker left side has generator q^" + std::to_string(g.offset)
                                                 + " with a negative exponent; not a formal power series");
        }
        if (g.offset == 0 && g.sign == 1) {
            throw ZeroProductError("Jordan-Kronecker left side has a Pochhammer symbol with generator +1");
        }
        if (g.offset == 0 && g.exponent < 0) {
            throw UnsupportedSpecializationError("Jordan-Kronecker left side has (-1; q^n)_inf in a denominator");
        }
        out.times_generator(g.sign, g.offset, s, g.exponent);
    }
    return out;
}

ProductForm jk_term_form(const JordanKroneckerParams &params, Exponent j)
{
    check_params(params);
    if (j < 0 || j >= params.p) {
        throw DomainError("Jordan-Kronecker summand index " + std::to_string(j) + " is outside [0, p)");
    }
    const auto s = params.base;
    const auto p = params.p;
    const auto [sa, alpha] = params.a;
    const auto [sz, beta] = params.z;
    const Exponent big = s * p;
    const int szp = sign_pow(sz, p);
    const std::array<Generator, 8> gens{{
        {1, big, 1},
        {1, big, 1},
        {sa * szp, alpha + s * j + p * beta, 1},
        {sa * szp, s * (p - j) - alpha - p * beta, 1},
        {sa, alpha + s * j, -1},
        {sa, s * (p - j) - alpha, -1},
        {szp, p * beta, -1},
        {szp, big - p * beta, -1},
    }};
    ProductForm out = ProductForm::constant(sign_pow(sz, j)) * ProductForm::monomial(beta * j);
    for (const auto &g : gens) {
        out.times_generator(g.sign, g.offset, big, g.exponent);
    }
    for (const auto &f : out.spec.factors) {
        if (f.offset == 0 && f.exponent < 0) {
            throw UnsupportedSpecializationError("Jordan-Kronecker summand " + std::to_string(j)
                                                 + " has (-1; q^n)_inf in a denominator");
        }
    }
    return out;
}

SeriesPair jk_general(const JordanKroneckerParams &params, Exponent order)
{
    SeriesPair out{expand(jk_lhs_form(params), order), QSeries::zero(order)};
    for (Exponent j = 0; j < params.p; ++j) {
        out.rhs = out.rhs + expand(jk_term_form(params, j), order);
    }
    return out;
}

ProductForm andrews_bressoud(Exponent k, Exponent r)
{
    if (k < 2 || r < 1 || r > k - 1) {
        throw DomainError("Andrews-Bressoud product needs 1 <= r <= k-1 (k = " + std::to_string(k) + ", r = " + std::to_string(r)
                          + ")");
    }
    return poch({{1, r}, {1, 2 * k - r}}, 2 * k, 1) * poch({{1, k - r}, {1, k + r}}, 2 * k, -1);
}

bool is_andrews_bressoud_pair(Exponent k, Exponent r)
{
    return k >= 2 && r >= 1 && r <= k - 1 && std::gcd(k, r) == 1 && (k + r) % 2 == 1;
}

QSeries ab_dissection_lhs(Exponent k, Exponent r, Exponent order)
{
    const auto form = andrews_bressoud(k, r) * poch({{1, 2 * k}}, 2 * k, 2) * poch({{1, k}}, 2 * k, -2);
    return expand(form, order);
}

std::vector<QSeries> ab_dissection_terms(Exponent k, Exponent r, Exponent order)
{
    andrews_bressoud(k, r); // range check
    const JordanKroneckerParams params{{1, k}, {1, k - r}, k, 2 * k};
    std::vector<QSeries> terms;
    terms.reserve(static_cast<std::size_t>(k));
    for (Exponent j = 0; j < k; ++j) {
        terms.push_back(expand(jk_term_form(params, j), order));
    }
    return terms;
}

} // namespace qseries
