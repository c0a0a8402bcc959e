#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <qseries/evaluator.hpp>
#include <qseries/expr.hpp>
#include <qseries/registry.hpp>
#include <qseries/series.hpp>

namespace qseries {

enum class ReportKind { Verify, Vanish, Signs };
enum class Status { Pass, Fail, InsufficientPrecision, Error };
enum class SignClass { Positive, Negative, Zero, Mixed, Empty };

std::string_view to_string(ReportKind k);
std::string_view to_string(Status s);
std::string_view to_string(SignClass c);

// First disagreeing coefficient. For vanishing scans rhs is the expected 0.
struct Witness {
    Exponent exponent = 0;
    Integer lhs;
    Integer rhs;
};

struct Report {
    ReportKind kind = ReportKind::Verify;
    std::string subject; // identity id or expression text
    Exponent order = 0;
    Status status = Status::Pass;
    std::optional<Witness> witness;
    double millis = 0;
    std::string message;

    // vanish / signs
    Exponent modulus = 0;
    std::vector<Exponent> residues;
    std::map<Exponent, SignClass> sign_classes;
    std::vector<Exponent> exceptions;
    // Sign patterns are observations over the scanned window, not theorems.
    bool empirical = false;
};

// Compare both sides over the full common Laurent window below q^order.
Report verify(const IdentityRecord &record, Exponent order, const EvalOptions &options = {});

class Harness {
public:
    explicit Harness(std::vector<IdentityRecord> records = builtin_registry(), EvalOptions options = {});

    const std::vector<IdentityRecord> &records() const noexcept { return records_; }
    const IdentityRecord *find(std::string_view id) const;
    std::vector<std::string> ids() const;

    // Throws DomainError for an unknown id.
    Report verify(std::string_view id, Exponent order) const;

    // Every record; result sorted by id whatever the execution order.
    // on_report, if given, is called (serialized) as each report completes.
    std::vector<Report> verify_all(Exponent order, bool parallel,
                                   const std::function<void(const Report &)> &on_report = {}) const;

private:
    std::vector<IdentityRecord> records_;
    EvalOptions options_;
};

// Pass iff every coefficient at exponents n < order with n mod m in residues is zero.
Report scan_vanishing(const Expr &e, Exponent m, const std::set<Exponent> &residues, Exponent order,
                      const EvalOptions &options = {});

struct ResidueClass {
    Exponent modulus;
    Exponent residue;

    friend bool operator==(const ResidueClass &, const ResidueClass &) = default;
    friend auto operator<=>(const ResidueClass &, const ResidueClass &) = default;
};

// Minimal classes (m <= m_max) whose coefficients all vanish below q^order;
// a class implied by a zero class of a proper divisor modulus is left out.
// Needs order >= 50 * m_max.
std::vector<ResidueClass> discover_vanishing(const Expr &e, Exponent m_max, Exponent order,
                                             const EvalOptions &options = {});

// Sign of each residue class mod m over exponents below q^order, skipping `exceptions`.
// A class is Mixed as soon as two of positive, negative and zero occur in it.
Report scan_signs(const Expr &e, Exponent m, Exponent order, const std::set<Exponent> &exceptions = {},
                  const EvalOptions &options = {});

// Same scans on an already evaluated series.
Report scan_vanishing(const QSeries &f, std::string subject, Exponent m, const std::set<Exponent> &residues, Exponent order);
std::vector<ResidueClass> discover_vanishing(const QSeries &f, Exponent m_max, Exponent order);
Report scan_signs(const QSeries &f, std::string subject, Exponent m, Exponent order, const std::set<Exponent> &exceptions = {});

} // namespace qseries
