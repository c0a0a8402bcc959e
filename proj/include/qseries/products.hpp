#pragma once

#include <cstdint>
#include <vector>

#include <qseries/series.hpp>

namespace qseries {

// (sign * q^offset; q^modulus)_inf ^ exponent
struct ProductFactor {
    int sign = -1;
    Exponent offset = 0;
    Exponent modulus = 1;
    std::int64_t exponent = 1;

    friend bool operator==(const ProductFactor &, const ProductFactor &) = default;
};

// Product of factors; the empty list is the constant 1.
struct ProductSpec {
    std::vector<ProductFactor> factors;

    friend bool operator==(const ProductSpec &, const ProductSpec &) = default;
};

// Throws DomainError / ZeroProductError when the factor invariants fail.
void validate(const ProductFactor &f);

// Multiply out every binomial (1 - sign q^(offset + k*modulus)) below q^order.
// Negative exponents divide by the binomial (exact: each binomial starts with 1).
QSeries expand_product(const ProductSpec &spec, Exponent order);

/**
 * scale * q^shift * spec, the closed form of any product/quotient of
 * Pochhammer symbols, monomials and integer constants.
 *
 * Factors are kept sorted with equal generators merged, so algebraically
 * equal forms compare equal. scale == 0 is the zero product.
 */
struct ProductForm {
    Integer scale = 1;
    Exponent shift = 0;
    ProductSpec spec;

    static ProductForm monomial(Exponent j);
    static ProductForm constant(const Integer &c);

    // Multiply by (sign * q^offset; q^modulus)_inf ^ exponent for any integer offset.
    // Negative offsets are reflected: (1 - e q^-c) = -e q^-c (1 - e q^c).
    // A generator that lands on +1 zeroes the form (exponent > 0) or throws
    // ZeroProductError (exponent < 0, a pole).
    ProductForm &times_generator(int sign, Exponent offset, Exponent modulus, std::int64_t exponent);

    ProductForm &operator*=(const ProductForm &other);
    // Needs reciprocal(other) to exist: other.scale must be +1 or -1.
    ProductForm &operator/=(const ProductForm &other);

    bool is_zero() const { return sgn(scale) == 0; }

    friend bool operator==(const ProductForm &, const ProductForm &) = default;

private:
    void merge(const ProductFactor &f);
};

ProductForm operator*(ProductForm a, const ProductForm &b);
ProductForm operator/(ProductForm a, const ProductForm &b);
ProductForm pow(const ProductForm &f, std::int64_t e);

// Exact below q^order.
QSeries expand(const ProductForm &f, Exponent order);

} // namespace qseries
