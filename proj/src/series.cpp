#include <qseries/series.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <utility>

#include <qseries/errors.hpp>

namespace qseries {

QSeries::QSeries(Exponent valuation, std::vector<Integer> coeffs, Exponent precision)
    : valuation_(valuation), precision_(precision), coeffs_(std::move(coeffs))
{
    if (precision_ - valuation_ != static_cast<Exponent>(coeffs_.size())) {
        throw DomainError("QSeries: coefficient count must equal precision - valuation");
    }
    normalize();
}

void QSeries::normalize()
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return sgn(c) != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        valuation_ = precision_;
        return;
    }
    const auto lead = first - coeffs_.begin();
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), first);
        valuation_ += lead;
    }
}

QSeries QSeries::from_terms(std::span<const Term> terms, Exponent precision)
{
    if (terms.empty()) {
        return zero(precision);
    }
    std::unordered_set<Exponent> seen;
    Exponent low = precision;
    for (const auto &t : terms) {
        if (t.exponent >= precision) {
            throw OutOfWindowError("from_terms: exponent " + std::to_string(t.exponent)
                                   + " is not below precision " + std::to_string(precision));
        }
        if (!seen.insert(t.exponent).second) {
            throw DomainError("from_terms: duplicate exponent " + std::to_string(t.exponent));
        }
        low = std::min(low, t.exponent);
    }
    std::vector<Integer> coeffs(static_cast<std::size_t>(precision - low));
    for (const auto &t : terms) {
        coeffs[static_cast<std::size_t>(t.exponent - low)] = t.coefficient;
    }
    return QSeries(low, std::move(coeffs), precision);
}

QSeries QSeries::zero(Exponent precision)
{
    return QSeries(precision, {}, precision);
}

QSeries QSeries::constant(const Integer &c, Exponent precision)
{
    return monomial(c, 0, precision);
}

QSeries QSeries::monomial(const Integer &c, Exponent exponent, Exponent precision)
{
    if (exponent >= precision || sgn(c) == 0) {
        return zero(precision);
    }
    std::vector<Integer> coeffs(static_cast<std::size_t>(precision - exponent));
    coeffs[0] = c;
    return QSeries(exponent, std::move(coeffs), precision);
}

Integer QSeries::coeff(Exponent n) const
{
    if (n >= precision_) {
        throw OutOfWindowError("coefficient of q^" + std::to_string(n) + " requested but the series is only exact below q^"
                               + std::to_string(precision_));
    }
    if (n < valuation_) {
        return 0;
    }
    return stored(n);
}

QSeries QSeries::truncated(Exponent p) const
{
    if (p > precision_) {
        throw InsufficientPrecisionError("cannot truncate a series exact below q^" + std::to_string(precision_)
                                         + " to q^" + std::to_string(p));
    }
    if (p <= valuation_) {
        return zero(p);
    }
    std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + (p - valuation_));
    return QSeries(valuation_, std::move(c), p);
}

namespace {

// f + sign*g
QSeries combine(const QSeries &f, const QSeries &g, int sign)
{
    const Exponent p = std::min(f.precision(), g.precision());
    const Exponent v = std::min({f.valuation(), g.valuation(), p});
    std::vector<Integer> c(static_cast<std::size_t>(p - v));
    for (Exponent n = f.valuation(); n < std::min(p, f.precision()); ++n) {
        c[static_cast<std::size_t>(n - v)] = f.stored(n);
    }
    for (Exponent n = g.valuation(); n < p; ++n) {
        auto &slot = c[static_cast<std::size_t>(n - v)];
        if (sign > 0) {
            slot += g.stored(n);
        } else {
            slot -= g.stored(n);
        }
    }
    return QSeries(v, std::move(c), p);
}

} // namespace

QSeries neg(const QSeries &f)
{
    std::vector<Integer> c(f.coeffs().begin(), f.coeffs().end());
    for (auto &x : c) {
        x = -x;
    }
    return QSeries(f.valuation(), std::move(c), f.precision());
}

QSeries add(const QSeries &f, const QSeries &g)
{
    return combine(f, g, 1);
}

QSeries sub(const QSeries &f, const QSeries &g)
{
    return combine(f, g, -1);
}

QSeries scale(const QSeries &f, const Integer &c)
{
    std::vector<Integer> out(f.coeffs().begin(), f.coeffs().end());
    for (auto &x : out) {
        x *= c;
    }
    return QSeries(f.valuation(), std::move(out), f.precision());
}

QSeries mul(const QSeries &f, const QSeries &g)
{
    const Exponent p = std::min(f.precision() + g.valuation(), g.precision() + f.valuation());
    const Exponent v = f.valuation() + g.valuation();
    if (f.is_zero() || g.is_zero()) {
        return QSeries::zero(p);
    }
    const auto len = static_cast<std::size_t>(p - v);
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    std::vector<Integer> c(len);
    for (std::size_t i = 0; i < std::min(a.size(), len); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        const std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (sgn(b[j]) != 0) {
                mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
            }
        }
    }
    return QSeries(v, std::move(c), p);
}

QSeries invert(const QSeries &f)
{
    if (f.is_zero()) {
        throw NonUnitError("cannot invert a series that is zero to its precision");
    }
    const auto u = f.coeffs();
    const Integer &lead = u[0];
    if (lead != 1 && lead != -1) {
        throw NonUnitError("cannot invert over the integers: lowest coefficient is " + lead.get_str());
    }
    const std::size_t len = u.size();
    std::vector<Integer> h(len);
    h[0] = lead;
    Integer acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (sgn(u[i]) != 0 && sgn(h[n - i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), h[n - i].get_mpz_t());
            }
        }
        // lead is its own inverse
        h[n] = lead > 0 ? Integer(-acc) : acc;
    }
    const Exponent v = f.valuation();
    return QSeries(-v, std::move(h), f.precision() - 2 * v);
}

QSeries pow(const QSeries &f, std::int64_t e)
{
    if (e < 0) {
        return pow(invert(f), -e);
    }
    if (e == 0) {
        if (f.is_zero()) {
            throw DomainError("pow: 0^0 is indeterminate for a series that is zero to its precision");
        }
        return QSeries::one(f.precision() - f.valuation());
    }
    QSeries base = f;
    std::optional<QSeries> acc;
    while (true) {
        if (e & 1) {
            acc = acc ? mul(*acc, base) : base;
        }
        e >>= 1;
        if (e == 0) {
            break;
        }
        base = mul(base, base);
    }
    return *acc;
}

QSeries shift(const QSeries &f, Exponent j)
{
    std::vector<Integer> c(f.coeffs().begin(), f.coeffs().end());
    return QSeries(f.valuation() + j, std::move(c), f.precision() + j);
}

QSeries substitute(const QSeries &f, Exponent m)
{
    if (m < 1) {
        throw DomainError("substitute: q -> q^m needs m >= 1, got " + std::to_string(m));
    }
    const Exponent p = m * (f.precision() - 1) + 1;
    if (f.is_zero()) {
        return QSeries::zero(p);
    }
    const Exponent v = m * f.valuation();
    std::vector<Integer> c(static_cast<std::size_t>(p - v));
    const auto src = f.coeffs();
    for (std::size_t i = 0; i < src.size(); ++i) {
        c[i * static_cast<std::size_t>(m)] = src[i];
    }
    return QSeries(v, std::move(c), p);
}

QSeries operator-(const QSeries &f)
{
    return neg(f);
}

QSeries operator+(const QSeries &f, const QSeries &g)
{
    return add(f, g);
}

QSeries operator-(const QSeries &f, const QSeries &g)
{
    return sub(f, g);
}

QSeries operator*(const QSeries &f, const QSeries &g)
{
    return mul(f, g);
}

Comparison equal_to_order(const QSeries &f, const QSeries &g, Exponent order)
{
    if (order > f.precision() || order > g.precision()) {
        throw InsufficientPrecisionError("comparison to q^" + std::to_string(order) + " needs both series exact there (precisions "
                                         + std::to_string(f.precision()) + ", " + std::to_string(g.precision()) + ")");
    }
    const Exponent low = std::min(f.valuation(), g.valuation());
    for (Exponent n = low; n < order; ++n) {
        if (f.coeff(n) != g.coeff(n)) {
            return {false, n};
        }
    }
    return {};
}

std::string to_string(const QSeries &f)
{
    std::ostringstream os;
    bool first = true;
    for (Exponent n = f.valuation(); n < f.precision(); ++n) {
        const Integer &c = f.stored(n);
        if (sgn(c) == 0) {
            continue;
        }
        const Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (n == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (n != 0) {
            os << "q";
            if (n != 1) {
                os << "^" << n;
            }
        }
    }
    if (!first) {
        os << " + ";
    }
    os << "O(q^" << f.precision() << ")";
    return os.str();
}

} // namespace qseries
