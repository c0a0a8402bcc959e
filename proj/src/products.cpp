#include <qseries/products.hpp>

#include <algorithm>
#include <string>
#include <tuple>

#include <qseries/errors.hpp>

namespace qseries {

void validate(const ProductFactor &f)
{
    if (f.sign != 1 && f.sign != -1) {
        throw DomainError("Pochhammer generator sign must be +1 or -1");
    }
    if (f.modulus < 1) {
        throw DomainError("Pochhammer base q^" + std::to_string(f.modulus) + " needs a positive exponent");
    }
    if (f.offset < 0) {
        throw DomainError("Pochhammer generator q^" + std::to_string(f.offset) + " has a negative exponent");
    }
    if (f.offset == 0 && f.sign == 1) {
        throw ZeroProductError("Pochhammer generator +1 makes the product identically zero");
    }
}

namespace {

void times_binomial(std::vector<Integer> &c, int sign, Exponent n)
{
    // c *= (1 - sign q^n), n >= 1
    const auto order = static_cast<Exponent>(c.size());
    for (Exponent i = order - 1; i >= n; --i) {
        const auto &src = c[static_cast<std::size_t>(i - n)];
        if (sgn(src) == 0) {
            continue;
        }
        auto &dst = c[static_cast<std::size_t>(i)];
        if (sign > 0) {
            dst -= src;
        } else {
            dst += src;
        }
    }
}

void over_binomial(std::vector<Integer> &c, int sign, Exponent n)
{
    // c /= (1 - sign q^n), n >= 1
    const auto order = static_cast<Exponent>(c.size());
    for (Exponent i = n; i < order; ++i) {
        const auto &src = c[static_cast<std::size_t>(i - n)];
        if (sgn(src) == 0) {
            continue;
        }
        auto &dst = c[static_cast<std::size_t>(i)];
        if (sign > 0) {
            dst += src;
        } else {
            dst -= src;
        }
    }
}

} // namespace

QSeries expand_product(const ProductSpec &spec, Exponent order)
{
    if (order < 1) {
        throw DomainError("expand_product: order must be at least 1");
    }
    std::vector<Integer> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (const auto &f : spec.factors) {
        validate(f);
        if (f.exponent == 0) {
            continue;
        }
        const std::int64_t reps = f.exponent > 0 ? f.exponent : -f.exponent;
        for (Exponent n = f.offset; n < order; n += f.modulus) {
            if (n == 0) {
                // binomial (1 + 1)
                if (f.exponent < 0) {
                    throw NonUnitError("Pochhammer (-1; q^m)_inf in a denominator contributes 1/2");
                }
                for (auto &x : c) {
                    x <<= static_cast<mp_bitcnt_t>(reps);
                }
                continue;
            }
            for (std::int64_t r = 0; r < reps; ++r) {
                if (f.exponent > 0) {
                    times_binomial(c, f.sign, n);
                } else {
                    over_binomial(c, f.sign, n);
                }
            }
        }
    }
    return QSeries(0, std::move(c), order);
}

ProductForm ProductForm::monomial(Exponent j)
{
    ProductForm f;
    f.shift = j;
    return f;
}

ProductForm ProductForm::constant(const Integer &c)
{
    ProductForm f;
    f.scale = c;
    if (sgn(c) == 0) {
        f.shift = 0;
    }
    return f;
}

void ProductForm::merge(const ProductFactor &f)
{
    if (f.exponent == 0) {
        return;
    }
    auto key = [](const ProductFactor &x) { return std::tuple(x.modulus, x.offset, x.sign); };
    auto &fs = spec.factors;
    auto it = std::lower_bound(fs.begin(), fs.end(), f, [&](const ProductFactor &a, const ProductFactor &b) { return key(a) < key(b); });
    if (it != fs.end() && key(*it) == key(f)) {
        it->exponent += f.exponent;
        if (it->exponent == 0) {
            fs.erase(it);
        }
    } else {
        fs.insert(it, f);
    }
}

namespace {

Integer signed_unit_pow(int sign, std::int64_t e)
{
    // sign^e for sign in {+1, -1}; valid for negative e as well
    return (sign < 0 && (e % 2 != 0)) ? Integer(-1) : Integer(1);
}

} // namespace

ProductForm &ProductForm::times_generator(int sign, Exponent offset, Exponent modulus, std::int64_t exponent)
{
    if (sign != 1 && sign != -1) {
        throw DomainError("Pochhammer generator sign must be +1 or -1");
    }
    if (modulus < 1) {
        throw DomainError("Pochhammer base q^" + std::to_string(modulus) + " needs a positive exponent");
    }
    if (exponent == 0) {
        return *this;
    }
    Exponent b = offset;
    while (b < 0) {
        const Exponent c = -b;
        scale *= signed_unit_pow(-sign, exponent);
        shift -= c * exponent;
        // the finite binomial (1 - sign q^c) as a quotient of two infinite products
        merge({sign, c, modulus, exponent});
        merge({sign, c + modulus, modulus, -exponent});
        b += modulus;
    }
    if (b == 0 && sign == 1) {
        if (exponent < 0) {
            throw ZeroProductError("Pochhammer generator +1 in a denominator (the quotient has a pole)");
        }
        scale = 0;
    } else {
        merge({sign, b, modulus, exponent});
    }
    if (is_zero()) {
        shift = 0;
        spec.factors.clear();
    }
    return *this;
}

ProductForm &ProductForm::operator*=(const ProductForm &other)
{
    scale *= other.scale;
    shift += other.shift;
    for (const auto &f : other.spec.factors) {
        merge(f);
    }
    if (is_zero()) {
        shift = 0;
        spec.factors.clear();
    }
    return *this;
}

ProductForm &ProductForm::operator/=(const ProductForm &other)
{
    if (other.scale != 1 && other.scale != -1) {
        throw NonUnitError("cannot divide a product by the non-unit constant " + other.scale.get_str());
    }
    scale *= other.scale;
    shift -= other.shift;
    for (auto f : other.spec.factors) {
        f.exponent = -f.exponent;
        merge(f);
    }
    if (is_zero()) {
        shift = 0;
        spec.factors.clear();
    }
    return *this;
}

ProductForm operator*(ProductForm a, const ProductForm &b)
{
    a *= b;
    return a;
}

ProductForm operator/(ProductForm a, const ProductForm &b)
{
    a /= b;
    return a;
}

ProductForm pow(const ProductForm &f, std::int64_t e)
{
    if (e == 0) {
        if (f.is_zero()) {
            throw DomainError("0^0 is indeterminate");
        }
        return ProductForm{};
    }
    if (e < 0 && f.scale != 1 && f.scale != -1) {
        throw NonUnitError("cannot raise the non-unit constant " + f.scale.get_str() + " to a negative power");
    }
    ProductForm out;
    const std::int64_t mag = e > 0 ? e : -e;
    if (e > 0) {
        mpz_pow_ui(out.scale.get_mpz_t(), f.scale.get_mpz_t(), static_cast<unsigned long>(mag));
    } else {
        out.scale = (f.scale < 0 && mag % 2 != 0) ? -1 : 1;
    }
    if (out.is_zero()) {
        return out;
    }
    out.shift = f.shift * e;
    out.spec = f.spec;
    for (auto &x : out.spec.factors) {
        x.exponent *= e;
    }
    return out;
}

QSeries expand(const ProductForm &f, Exponent order)
{
    if (f.is_zero() || f.shift >= order) {
        return QSeries::zero(order);
    }
    auto s = expand_product(f.spec, order - f.shift);
    if (f.scale != 1) {
        s = scale(s, f.scale);
    }
    return shift(s, f.shift);
}

} // namespace qseries
