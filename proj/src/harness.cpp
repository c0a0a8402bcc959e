#include <qseries/harness.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include <qseries/errors.hpp>

namespace qseries {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Exponent floor_mod(Exponent n, Exponent m)
{
    const Exponent r = n % m;
    return r < 0 ? r + m : r;
}

void check_modulus(Exponent m)
{
    if (m < 1) {
        throw DomainError("modulus must be at least 1");
    }
}

} // namespace

std::string_view to_string(ReportKind k)
{
    switch (k) {
        case ReportKind::Verify: return "verify";
        case ReportKind::Vanish: return "vanish";
        case ReportKind::Signs: return "signs";
    }
    return "?";
}

std::string_view to_string(Status s)
{
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::InsufficientPrecision: return "insufficient_precision";
        case Status::Error: return "error";
    }
    return "?";
}

std::string_view to_string(SignClass c)
{
    switch (c) {
        case SignClass::Positive: return "positive";
        case SignClass::Negative: return "negative";
        case SignClass::Zero: return "zero";
        case SignClass::Mixed: return "mixed";
        case SignClass::Empty: return "empty";
    }
    return "?";
}

Report verify(const IdentityRecord &record, Exponent order, const EvalOptions &options)
{
    const auto start = Clock::now();
    Report rep;
    rep.kind = ReportKind::Verify;
    rep.subject = record.id;
    rep.order = order;
    try {
        const auto lhs_expr = parse(record.lhs);
        const auto rhs_expr = parse(record.rhs);
        const auto lhs = evaluate(*lhs_expr, order, options);
        const auto rhs = evaluate(*rhs_expr, order, options);
        const auto cmp = equal_to_order(lhs, rhs, order);
        if (cmp.equal) {
            rep.status = Status::Pass;
        } else {
            rep.status = Status::Fail;
            const Exponent n = *cmp.first_discrepancy;
            rep.witness = Witness{n, lhs.coeff(n), rhs.coeff(n)};
        }
    } catch (const InsufficientPrecisionError &ex) {
        rep.status = Status::InsufficientPrecision;
        rep.message = ex.what();
    } catch (const std::exception &ex) {
        rep.status = Status::Error;
        rep.message = ex.what();
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

Harness::Harness(std::vector<IdentityRecord> records, EvalOptions options)
    : records_(std::move(records)), options_(options)
{
    validate_registry(records_);
}

const IdentityRecord *Harness::find(std::string_view id) const
{
    const auto it = std::find_if(records_.begin(), records_.end(), [&](const auto &r) { return r.id == id; });
    return it == records_.end() ? nullptr : &*it;
}

std::vector<std::string> Harness::ids() const
{
    std::vector<std::string> out;
    out.reserve(records_.size());
    for (const auto &r : records_) {
        out.push_back(r.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Report Harness::verify(std::string_view id, Exponent order) const
{
    const auto *rec = find(id);
    if (!rec) {
        throw DomainError("unknown identity id '" + std::string(id) + "'");
    }
    return qseries::verify(*rec, order, options_);
}

std::vector<Report> Harness::verify_all(Exponent order, bool parallel,
                                        const std::function<void(const Report &)> &on_report) const
{
    std::vector<Report> out(records_.size());
    std::mutex mu;
    auto run_one = [&](std::size_t i) {
        out[i] = qseries::verify(records_[i], order, options_);
        if (on_report) {
            std::lock_guard lock(mu);
            on_report(out[i]);
        }
    };

    if (parallel && records_.size() > 1) {
        const auto hw = std::max(1u, std::thread::hardware_concurrency());
        const auto n_workers = std::min<std::size_t>(hw, records_.size());
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < records_.size(); i = next++) {
                    run_one(i);
                }
            });
        }
    } else {
        for (std::size_t i = 0; i < records_.size(); ++i) {
            run_one(i);
        }
    }

    std::sort(out.begin(), out.end(), [](const Report &a, const Report &b) { return a.subject < b.subject; });
    return out;
}

Report scan_vanishing(const QSeries &f, std::string subject, Exponent m, const std::set<Exponent> &residues,
                      Exponent order)
{
    check_modulus(m);
    Report rep;
    rep.kind = ReportKind::Vanish;
    rep.subject = std::move(subject);
    rep.order = order;
    rep.modulus = m;
    for (const auto r : residues) {
        if (r < 0 || r >= m) {
            throw DomainError("residue " + std::to_string(r) + " out of range for modulus " + std::to_string(m));
        }
        rep.residues.push_back(r);
    }
    if (f.precision() < order) {
        throw InsufficientPrecisionError("series is exact only below q^" + std::to_string(f.precision()));
    }
    rep.status = Status::Pass;
    for (Exponent n = f.valuation(); n < order; ++n) {
        if (residues.contains(floor_mod(n, m)) && sgn(f.stored(n)) != 0) {
            rep.status = Status::Fail;
            rep.witness = Witness{n, f.stored(n), Integer(0)};
            break;
        }
    }
    return rep;
}

Report scan_vanishing(const Expr &e, Exponent m, const std::set<Exponent> &residues, Exponent order,
                      const EvalOptions &options)
{
    const auto start = Clock::now();
    auto rep = scan_vanishing(evaluate(e, order, options), to_text(e), m, residues, order);
    rep.millis = elapsed_ms(start);
    return rep;
}

std::vector<ResidueClass> discover_vanishing(const QSeries &f, Exponent m_max, Exponent order)
{
    if (m_max < 1) {
        throw DomainError("largest modulus must be at least 1");
    }
    if (order < 50 * m_max) {
        throw DomainError("discovery needs an order of at least 50 * m_max = " + std::to_string(50 * m_max));
    }
    if (f.precision() < order) {
        throw InsufficientPrecisionError("series is exact only below q^" + std::to_string(f.precision()));
    }
    std::set<ResidueClass> zero;
    for (Exponent m = 1; m <= m_max; ++m) {
        std::vector<bool> hit(static_cast<std::size_t>(m), false);
        for (Exponent n = f.valuation(); n < order; ++n) {
            if (sgn(f.stored(n)) != 0) {
                hit[static_cast<std::size_t>(floor_mod(n, m))] = true;
            }
        }
        for (Exponent r = 0; r < m; ++r) {
            if (!hit[static_cast<std::size_t>(r)]) {
                zero.insert({m, r});
            }
        }
    }
    std::vector<ResidueClass> out;
    for (const auto &c : zero) {
        bool implied = false;
        for (Exponent d = 1; d < c.modulus && !implied; ++d) {
            if (c.modulus % d == 0 && zero.contains({d, c.residue % d})) {
                implied = true;
            }
        }
        if (!implied) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<ResidueClass> discover_vanishing(const Expr &e, Exponent m_max, Exponent order,
                                             const EvalOptions &options)
{
    // Preconditions are checked before the (possibly long) evaluation.
    discover_vanishing(QSeries::zero(order), m_max, order);
    return discover_vanishing(evaluate(e, order, options), m_max, order);
}

Report scan_signs(const QSeries &f, std::string subject, Exponent m, Exponent order,
                  const std::set<Exponent> &exceptions)
{
    check_modulus(m);
    if (f.precision() < order) {
        throw InsufficientPrecisionError("series is exact only below q^" + std::to_string(f.precision()));
    }
    Report rep;
    rep.kind = ReportKind::Signs;
    rep.subject = std::move(subject);
    rep.order = order;
    rep.modulus = m;
    rep.exceptions.assign(exceptions.begin(), exceptions.end());
    rep.empirical = true;
    rep.status = Status::Pass;

    struct Seen {
        bool pos = false, neg = false, zero = false;
    };
    std::vector<Seen> seen(static_cast<std::size_t>(m));
    const Exponent from = std::min<Exponent>(0, f.valuation());
    for (Exponent n = from; n < order; ++n) {
        if (exceptions.contains(n)) {
            continue;
        }
        auto &s = seen[static_cast<std::size_t>(floor_mod(n, m))];
        const int sign = sgn(f.coeff(n));
        (sign > 0 ? s.pos : sign < 0 ? s.neg : s.zero) = true;
    }
    for (Exponent r = 0; r < m; ++r) {
        const auto &s = seen[static_cast<std::size_t>(r)];
        const int kinds = int(s.pos) + int(s.neg) + int(s.zero);
        SignClass c = SignClass::Empty;
        if (kinds > 1) {
            c = SignClass::Mixed;
        } else if (s.pos) {
            c = SignClass::Positive;
        } else if (s.neg) {
            c = SignClass::Negative;
        } else if (s.zero) {
            c = SignClass::Zero;
        }
        rep.sign_classes[r] = c;
    }
    return rep;
}

Report scan_signs(const Expr &e, Exponent m, Exponent order, const std::set<Exponent> &exceptions,
                  const EvalOptions &options)
{
    const auto start = Clock::now();
    auto rep = scan_signs(evaluate(e, order, options), to_text(e), m, order, exceptions);
    rep.millis = elapsed_ms(start);
    return rep;
}

} // namespace qseries
