// Acceptance checks: one [PASS]/[FAIL] line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <qseries/evaluator.hpp>
#include <qseries/expr.hpp>
#include <qseries/functions.hpp>
#include <qseries/harness.hpp>
#include <qseries/registry.hpp>

#include "oracles.hpp"

using namespace qseries;

namespace {

// Pinned parameters.
constexpr Exponent kRegistryOrder = 200;
constexpr double kRegistrySeconds = 30.0;
constexpr Exponent kVanishTop = 2000;   // exponents 0..2000 inclusive
constexpr Exponent kCrossOrder = 200;
constexpr Exponent kJkOrder = 150;
constexpr Exponent kJkMaxK = 7;
constexpr Exponent kSignsTop = 1000;     // exponents 0..1000 inclusive
constexpr int kOracleSpecs = 100;
constexpr Exponent kOracleMaxN = 80;
constexpr int kPartitionsTop = 50;
constexpr Exponent kDefectExponent = 50;

int failures = 0;

void report(const char *id, bool ok, const std::string &what)
{
    std::printf("[%s] %s %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

void criterion(const char *id, const std::function<std::pair<bool, std::string>()> &body)
{
    try {
        const auto [ok, what] = body();
        report(id, ok, what);
    } catch (const std::exception &e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

const IdentityRecord &record(std::string_view id)
{
    for (const auto &r : builtin_registry()) {
        if (r.id == id) {
            return r;
        }
    }
    throw DomainError("missing record " + std::string(id));
}

QSeries eval(std::string_view text, Exponent n)
{
    return evaluate(*parse(text), n);
}

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

// Residue class mod m carrying the whole support of f, -1 for zero, -2 if split.
Exponent support_class(const QSeries &f, Exponent m)
{
    std::set<Exponent> cs;
    for (Exponent n = f.valuation(); n < f.precision(); ++n) {
        if (sgn(f.stored(n)) != 0) {
            cs.insert(((n % m) + m) % m);
        }
    }
    return cs.empty() ? -1 : cs.size() == 1 ? *cs.begin() : -2;
}

std::string str(const std::ostringstream &os)
{
    return os.str();
}

} // namespace

int main()
{
    criterion("AC1", [] {
        const Harness h;
        const auto start = std::chrono::steady_clock::now();
        const auto reps = h.verify_all(kRegistryOrder, true);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::set<std::string> ids;
        std::size_t passed = 0;
        std::string bad;
        for (const auto &r : reps) {
            ids.insert(r.subject);
            if (r.status == Status::Pass) {
                ++passed;
            } else {
                bad += " " + r.subject;
            }
        }
        bool spot = true;
        for (const char *id : {"HIR-4", "KEY-1", "CT-1", "CT-2", "R-2Q", "GF-A2", "GF-A3", "AB-52", "AB-54", "GF-A1",
                               "GF-A4", "GF-B1", "GF-B2", "GF-B3", "GF-B4"}) {
            spot = spot && ids.contains(id);
        }
        std::ostringstream os;
        os << "registry " << passed << "/" << reps.size() << " pass at N=" << kRegistryOrder << " in " << secs
           << " s (limit " << kRegistrySeconds << " s); spot list " << (spot ? "present" : "MISSING") << bad;
        return std::pair{passed == reps.size() && reps.size() == 36 && spot && secs < kRegistrySeconds, str(os)};
    });

    criterion("AC2", [] {
        const Exponent n = kVanishTop + 1;
        const std::set<Exponent> res{3, 7};
        const auto a = scan_vanishing(*parse(series_text::alpha), 10, res, n);
        const auto b = scan_vanishing(*parse(series_text::beta), 10, res, n);
        std::ostringstream os;
        os << "alpha, beta coefficients at n = 3, 7 mod 10, n <= " << kVanishTop << ": " << to_string(a.status) << ", "
           << to_string(b.status);
        return std::pair{a.status == Status::Pass && b.status == Status::Pass, str(os)};
    });

    criterion("AC3", [] {
        const Exponent n = kVanishTop + 1;
        const auto g = scan_vanishing(*parse(series_text::gamma), 5, {4}, n);
        const auto d = scan_vanishing(*parse(series_text::delta), 5, {4}, n);
        std::ostringstream os;
        os << "gamma, delta coefficients at n = 4 mod 5, n <= " << kVanishTop << ": " << to_string(g.status) << ", "
           << to_string(d.status);
        return std::pair{g.status == Status::Pass && d.status == Status::Pass, str(os)};
    });

    criterion("AC4", [] {
        const Exponent n = kVanishTop + 1;
        const auto a = eval(series_text::alpha, n);
        const auto b = eval(series_text::beta, n);
        Exponent checked = 0;
        std::optional<Exponent> bad;
        for (Exponent e = 0; e <= kVanishTop; ++e) {
            if (e % 5 == 2 || e % 5 == 3) {
                ++checked;
                if (a.coeff(e) != b.coeff(e) && !bad) {
                    bad = e;
                }
            }
        }
        std::ostringstream os;
        os << "alpha(n) = beta(n) for n = 2, 3 mod 5, n <= " << kVanishTop << " (" << checked << " exponents)";
        if (bad) {
            os << "; differs at " << *bad;
        }
        return std::pair{!bad.has_value(), str(os)};
    });

    criterion("AC5", [] {
        const auto a2 = eval(record("GF-A2").lhs, kCrossOrder);
        const auto a3 = eval(record("GF-A3").lhs, kCrossOrder);
        const auto r2 = eval(record("GF-A2").rhs, kCrossOrder);
        const auto r3 = eval(record("GF-A3").rhs, kCrossOrder);
        const auto direct2 = dissect(eval(series_text::alpha, 5 * kCrossOrder), 5, 2);
        const auto direct3 = dissect(eval(series_text::alpha, 5 * kCrossOrder), 5, 3);
        const bool eq2 = equal_to_order(a2, r2, kCrossOrder).equal && equal_to_order(direct2, r2, kCrossOrder).equal;
        const bool eq3 = equal_to_order(a3, r3, kCrossOrder).equal && equal_to_order(direct3, r3, kCrossOrder).equal;
        const bool even = support_class(r2.truncated(kCrossOrder), 2) == 0;
        const bool odd = support_class(r3.truncated(kCrossOrder), 2) == 1;
        std::ostringstream os;
        os << "dissect(alpha,5,2) = GF-A2 rhs: " << eq2 << ", dissect(alpha,5,3) = GF-A3 rhs: " << eq3
           << ", A2 rhs even: " << even << ", A3 rhs odd: " << odd << " (order " << kCrossOrder << ")";
        return std::pair{eq2 && eq3 && even && odd, str(os)};
    });

    criterion("AC6", [] {
        int pairs = 0;
        bool all = true;
        std::string bad;
        for (Exponent k = 2; k <= kJkMaxK; ++k) {
            for (Exponent r = 1; r < k; ++r) {
                if (!is_andrews_bressoud_pair(k, r)) {
                    continue;
                }
                ++pairs;
                const auto lhs = ab_dissection_lhs(k, r, kJkOrder);
                QSeries sum = QSeries::zero(kJkOrder);
                for (const auto &t : ab_dissection_terms(k, r, kJkOrder)) {
                    sum = sum + t;
                }
                if (!equal_to_order(lhs, sum, kJkOrder).equal) {
                    all = false;
                    bad += " (" + std::to_string(k) + "," + std::to_string(r) + ")";
                }
            }
        }
        // (5,2) and (5,4): term j over (q^10;q^10)^2/(q^5;q^10)^2 is the part of the registry rhs in its residue class.
        ProductForm ef = pow(named_product(NamedFunction::E, 10), 2);
        ef.times_generator(1, 5, 10, -2);
        const auto inv = invert(expand(ef, kJkOrder));
        bool displays = true;
        for (const auto &[r, id] : {std::pair<Exponent, const char *>{2, "AB-52"}, {4, "AB-54"}}) {
            const auto &rec = record(id);
            const auto display = eval(rec.rhs, kJkOrder);
            displays = displays && equal_to_order(eval(rec.lhs, kJkOrder), display, kJkOrder).equal;
            int nonzero = 0;
            for (const auto &t : ab_dissection_terms(5, r, kJkOrder)) {
                const auto c = support_class(t, 5);
                if (c == -1) {
                    continue;
                }
                ++nonzero;
                displays = displays && c >= 0 && equal_to_order(t * inv, residue_part(display, 5, c), kJkOrder).equal;
            }
            displays = displays && nonzero == 4;
        }
        std::ostringstream os;
        os << pairs << " coprime opposite-parity (k,r), 2 <= k <= " << kJkMaxK << ", both sides agree at order "
           << kJkOrder << ": " << all << bad << "; (5,2), (5,4) terms match the registry rhs per residue: " << displays;
        return std::pair{all && displays && pairs > 0, str(os)};
    });

    criterion("AC7", [] {
        const auto rs = parse(series_text::richmond_szekeres);
        const auto v = scan_vanishing(*rs, 4, {3}, kVanishTop + 1);
        const auto found = discover_vanishing(*rs, 8, kVanishTop);
        const bool has43 = std::find(found.begin(), found.end(), ResidueClass{4, 3}) != found.end();
        std::ostringstream os;
        os << "c(4n+3) = 0 for 4n+3 <= " << kVanishTop << ": " << to_string(v.status)
           << "; discovery up to m = 8 lists (4,3): " << has43;
        return std::pair{v.status == Status::Pass && has43, str(os)};
    });

    criterion("AC8", [] {
        using SC = SignClass;
        const std::map<Exponent, SC> p1{{0, SC::Positive}, {1, SC::Negative}, {2, SC::Positive}, {3, SC::Zero},
                                        {4, SC::Negative}, {5, SC::Positive}, {6, SC::Negative}, {7, SC::Zero},
                                        {8, SC::Negative}, {9, SC::Positive}};
        const std::map<Exponent, SC> p2{{0, SC::Positive}, {1, SC::Positive}, {2, SC::Positive}, {3, SC::Zero},
                                        {4, SC::Negative}, {5, SC::Negative}, {6, SC::Negative}, {7, SC::Zero},
                                        {8, SC::Negative}, {9, SC::Negative}};
        const auto a = scan_signs(*parse(series_text::alpha), 10, kSignsTop + 1, {6});
        const auto b = scan_signs(*parse(series_text::beta), 10, kSignsTop + 1, {6});
        const auto a6 = eval(series_text::alpha, 7).coeff(6);
        const auto b6 = eval(series_text::beta, 7).coeff(6);
        const bool ok = a.sign_classes == p1 && b.sign_classes == p2 && a.empirical && b.empirical && a6 == 0 && b6 == 0;
        std::ostringstream os;
        os << "(empirical) alpha pattern " << (a.sign_classes == p1) << ", beta pattern " << (b.sign_classes == p2)
           << " for n <= " << kSignsTop << " except n = 6; alpha(6) = " << a6.get_str() << ", beta(6) = " << b6.get_str();
        return std::pair{ok, str(os)};
    });

    criterion("AC9", [] {
        std::mt19937 rng(20190611);
        int agree = 0;
        for (int i = 0; i < kOracleSpecs; ++i) {
            const auto spec = oracle::random_spec(rng);
            const Exponent n = std::uniform_int_distribution<int>(1, static_cast<int>(kOracleMaxN))(rng);
            if (oracle::dense(expand_product(spec, n), n) == oracle::product(spec, n)) {
                ++agree;
            }
        }
        const auto p = invert(euler(kPartitionsTop + 1));
        int part_ok = 0;
        for (int n = 0; n <= kPartitionsTop; ++n) {
            part_ok += p.coeff(n) == oracle::partitions(n) ? 1 : 0;
        }
        std::ostringstream os;
        os << agree << "/" << kOracleSpecs << " random specs (N <= " << kOracleMaxN << ") match the binomial oracle; "
           << part_ok << "/" << (kPartitionsTop + 1) << " partition numbers p(n), n <= " << kPartitionsTop;
        return std::pair{agree == kOracleSpecs && part_ok == kPartitionsTop + 1, str(os)};
    });

    criterion("AC10", [] {
        // rhs * (1 + q^50) first differs at q^(50 + v), v the valuation of rhs;
        // rhs + q^50 first differs at q^50 exactly.
        int flipped = 0, mult_ok = 0, add_ok = 0;
        std::string bad;
        const auto &reg = builtin_registry();
        for (const auto &r : reg) {
            const auto v = eval(r.rhs, kRegistryOrder).valuation();
            const std::string bump = "q^" + std::to_string(kDefectExponent);
            auto mult = r;
            mult.rhs = "(" + r.rhs + ") * (1 + " + bump + ")";
            auto add = r;
            add.rhs = "(" + r.rhs + ") + " + bump;
            const auto rm = verify(mult, kRegistryOrder);
            const auto ra = verify(add, kRegistryOrder);
            const bool m_ok = rm.status == Status::Fail && rm.witness && rm.witness->exponent == kDefectExponent + v;
            const bool a_ok = ra.status == Status::Fail && ra.witness && ra.witness->exponent == kDefectExponent;
            flipped += (rm.status == Status::Fail && ra.status == Status::Fail) ? 1 : 0;
            mult_ok += m_ok ? 1 : 0;
            add_ok += a_ok ? 1 : 0;
            if (!m_ok || !a_ok) {
                bad += " " + r.id;
            }
        }
        const int n = static_cast<int>(reg.size());
        std::ostringstream os;
        os << flipped << "/" << n << " perturbed records fail; witness at q^50 for rhs + q^50: " << add_ok << "/" << n
           << "; at q^(50+v(rhs)) for rhs*(1+q^50): " << mult_ok << "/" << n << bad;
        return std::pair{flipped == n && mult_ok == n && add_ok == n, str(os)};
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
