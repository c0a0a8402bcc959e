#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qseries {

using Integer = mpz_class;
using Exponent = std::int64_t;

struct Term {
    Exponent exponent;
    Integer coefficient;
};

/**
 * Truncated Laurent series in q with exact integer coefficients.
 *
 * The series stores the coefficients of q^valuation, ..., q^(precision-1).
 * Every coefficient below `precision` is exact; nothing is known at or above it.
 * The stored leading coefficient is always nonzero, except for the
 * zero-to-precision series, whose canonical form is valuation == precision
 * with no stored coefficients.
 *
 * Values are immutable once built; every operation returns a new series.
 */
class QSeries {
public:
    // Zero to precision 0.
    QSeries() = default;

    // Takes coefficients of q^valuation, q^(valuation+1), ...; the vector must
    // hold exactly precision - valuation entries. Leading zeros are stripped.
    QSeries(Exponent valuation, std::vector<Integer> coeffs, Exponent precision);

    static QSeries from_terms(std::span<const Term> terms, Exponent precision);
    static QSeries zero(Exponent precision);
    static QSeries constant(const Integer &c, Exponent precision);
    static QSeries one(Exponent precision) { return constant(1, precision); }
    static QSeries monomial(const Integer &c, Exponent exponent, Exponent precision);

    Exponent valuation() const noexcept { return valuation_; }
    Exponent precision() const noexcept { return precision_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    // Exact coefficient of q^n. Throws OutOfWindowError for n >= precision.
    Integer coeff(Exponent n) const;
    // Same as coeff() but returns a reference; n must lie in [valuation, precision).
    const Integer &stored(Exponent n) const { return coeffs_[static_cast<std::size_t>(n - valuation_)]; }

    // Drop everything at or above p (p <= precision required).
    QSeries truncated(Exponent p) const;

    friend bool operator==(const QSeries &, const QSeries &) = default;

private:
    void normalize();

    Exponent valuation_ = 0;
    Exponent precision_ = 0;
    std::vector<Integer> coeffs_;
};

QSeries operator-(const QSeries &f);
QSeries operator+(const QSeries &f, const QSeries &g);
QSeries operator-(const QSeries &f, const QSeries &g);
QSeries operator*(const QSeries &f, const QSeries &g);

QSeries neg(const QSeries &f);
QSeries add(const QSeries &f, const QSeries &g);
QSeries sub(const QSeries &f, const QSeries &g);
QSeries scale(const QSeries &f, const Integer &c);

// Cauchy product by schoolbook convolution, O(n^2); zero coefficients are skipped.
// Precision: min(P_f + v_g, P_g + v_f).
QSeries mul(const QSeries &f, const QSeries &g);

// Requires a lowest coefficient of +1 or -1. Result: valuation -v, precision P - 2v.
QSeries invert(const QSeries &f);

QSeries pow(const QSeries &f, std::int64_t e);

// Multiply by q^j.
QSeries shift(const QSeries &f, Exponent j);

// q -> q^m, m >= 1. Precision becomes m*(P-1)+1.
QSeries substitute(const QSeries &f, Exponent m);

struct Comparison {
    bool equal = true;
    std::optional<Exponent> first_discrepancy;

    explicit operator bool() const noexcept { return equal; }
};

// Compares every coefficient with min(v_f, v_g) <= n < order.
// Throws InsufficientPrecisionError when order exceeds either precision.
Comparison equal_to_order(const QSeries &f, const QSeries &g, Exponent order);

// Human-readable "1 - q - q^2 + O(q^8)".
std::string to_string(const QSeries &f);

} // namespace qseries
