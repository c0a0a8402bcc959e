#include <qseries/registry.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include <qseries/errors.hpp>
#include <qseries/expr.hpp>

namespace qseries {

namespace {

std::string dissect_of(std::string_view series, int m, int r)
{
    return "dissect(" + std::string(series) + ", " + std::to_string(m) + ", " + std::to_string(r) + ")";
}

// Every identity is stored in closed form, Laurent prefactors included.
std::vector<IdentityRecord> build_table()
{
    using namespace series_text;
    std::vector<IdentityRecord> t = {
        // Euler-product (eta quotient) identities
        {"HIR-4", "E(q^2)^10/(E(q)^4*E(q^4)^4) - E(q^10)^10/(E(q^5)^4*E(q^20)^4)",
         "4*q*E(q^2)^2*E(q^5)*E(q^20)/(E(q)*E(q^4))", "eta-quotient identity of level 20"},
        {"HIR-21", "E(q^2)^4/E(q)^2 - q*E(q^10)^4/E(q^5)^2", "E(q^2)*E(q^5)^3/(E(q)*E(q^10))",
         "eta-quotient identity of level 10"},

        // Rogers-Ramanujan functions at q and q^2
        {"HIR-1", "G(q)^2*H(q^2) + G(q^2)*H(q)^2", "2*G(q)*G(q^2)^2*E(q^10)^2/E(q^5)^2",
         "G/H relation at q and q^2, sum form"},
        {"HIR-2", "G(q)^2*H(q^2) - G(q^2)*H(q)^2", "2*q*H(q)*H(q^2)^2*E(q^10)^2/E(q^5)^2",
         "G/H relation at q and q^2, difference form"},
        {"HIR-3", "G(q)*G(q^2)^2 - q*H(q)*H(q^2)^2", "G(q^2)*H(q)^2*E(q^5)^2/E(q^10)^2",
         "G/H relation at q and q^2, cubic form"},

        // 5-dissections of kappa and its reciprocal
        {"CT-1", "R(q)^2/R(q^2)",
         "G(q^5)^2*H(q^5)^6/(G(q^10)*H(q^10)^3)"
         " - 2*q*G(q^5)^4*H(q^5)^3*E(q^50)^2/(G(q^10)*H(q^10)^2*E(q^25)^2)"
         " + 4*q^2*G(q^5)^3*H(q^5)^4*E(q^50)^2/(G(q^10)*H(q^10)^2*E(q^25)^2)"
         " - 4*q^3*G(q^5)^3*H(q^5)^3*E(q^50)^4/(H(q^10)^2*E(q^25)^4)"
         " + 2*q^4*G(q^5)^3*H(q^5)^4*E(q^50)^2/(G(q^10)^2*H(q^10)*E(q^25)^2)",
         "5-dissection of kappa(q) = R(q)^2/R(q^2)"},
        {"CT-2", "R(q^2)/R(q)^2",
         "G(q^5)^6*H(q^5)^2/(G(q^10)^3*H(q^10))"
         " + 2*q*G(q^5)^4*H(q^5)^3*E(q^50)^2/(G(q^10)*H(q^10)^2*E(q^25)^2)"
         " - 4*q^7*G(q^5)^3*H(q^5)^3*E(q^50)^4/(G(q^10)^2*E(q^25)^4)"
         " - 4*q^3*G(q^5)^4*H(q^5)^3*E(q^50)^2/(G(q^10)^2*H(q^10)*E(q^25)^2)"
         " - 2*q^4*G(q^5)^3*H(q^5)^4*E(q^50)^2/(G(q^10)^2*H(q^10)*E(q^25)^2)",
         "5-dissection of 1/kappa(q) = R(q^2)/R(q)^2"},

        // R(q) at q and q^2
        {"BK-1", "1/(R(q)*R(q^2)^2) - q^2*R(q)*R(q^2)^2", "E(q^2)*E(q^5)^5/(E(q)*E(q^10)^5)",
         "R(q), R(q^2) relation, first form"},
        {"BK-2", "R(q^2)/R(q)^2 - R(q)^2/R(q^2)", "4*q*E(q)*E(q^10)^5/(E(q^2)*E(q^5)^5)",
         "R(q), R(q^2) relation, second form"},
        {"KEY-1", "H(q)^4*G(q^2)^2 - G(q)^4*H(q^2)^2 + G(q)^2*H(q)^2*G(q^2)*H(q^2)",
         "G(q^2)^3*H(q^2)^3/(G(q)^2*H(q)^2)", "quartic G/H relation at q and q^2"},

        // Ramanujan's parameters
        {"K-RESTATE", "1/k(q) - k(q)", "E(q^2)*E(q^5)^5/(q*E(q)*E(q^10)^5)", "BK-1 written in k(q)"},
        {"KAPPA-RESTATE", "1/kappa(q) - kappa(q)", "4*q*E(q)*E(q^10)^5/(E(q^2)*E(q^5)^5)", "BK-2 written in kappa(q)"},
        {"MU-1", "1/mu(q) - mu(q)", "E(q^2)^3*E(q^10)^5/(q*E(q)*E(q^4)*E(q^5)^3*E(q^20)^3)", "mu(q) and its reciprocal"},
        {"NU-1", "1/nu(q^2) - nu(q^2)", "4*q*E(q^4)*E(q^20)^3/E(q^10)^4", "nu(q^2) and its reciprocal"},
        {"NU-KAPPA", "1/(kappa(q)*kappa(q^2)) - kappa(q)*kappa(q^2)", "4*q*E(q^4)*E(q^20)^3/E(q^10)^4",
         "NU-1 with nu(q^2) = kappa(q)*kappa(q^2)"},
        {"KK-1", "k(q)/k(q^2) - k(q^2)/k(q)", "E(q)*E(q^5)^3/(q*E(q^10)^4)", "k(q) and k(q^2)"},

        // R(q), R(q^2), R(q^4)
        {"R-124", "R(q)/(R(q^2)*R(q^4)) - q^2*R(q^2)*R(q^4)/R(q)",
         "E(q)*E(q^4)*E(q^10)^10/(E(q^2)^2*E(q^5)^5*E(q^20)^5)", "R(q), R(q^2), R(q^4) eta-quotient relation"},
        {"R-2Q", "(1/(R(q)*R(q^4)) + q^2*R(q)*R(q^4)) - (R(q)/(R(q^2)*R(q^4)) - q^2*R(q^2)*R(q^4)/R(q))", "2*q",
         "R(q), R(q^2), R(q^4) relation with constant right side"},
        {"HIR-449", "G(q)*G(q^4) - q*H(q)*H(q^4)", "E(q^10)^5/(E(q^2)*E(q^5)^2*E(q^20)^2)",
         "G/H relation at q and q^4"},
        {"STEP-2", "1/(R(q)*R(q^4)) + q^2*R(q)*R(q^4)", "2*q + E(q)*E(q^4)*E(q^10)^10/(E(q^2)^2*E(q^5)^5*E(q^20)^5)",
         "HIR-449 squared and divided by G(q)H(q)G(q^4)H(q^4)"},
        {"MU-RESTATE", "1/(R(q)*R(q^4)) - q^2*R(q)*R(q^4)", "E(q^2)^3*E(q^10)^5/(E(q)*E(q^4)*E(q^5)^3*E(q^20)^3)",
         "MU-1 written in R"},
        {"NU-RESTATE", "R(q^4)/(R(q)^2*R(q^2)) - R(q)^2*R(q^2)/R(q^4)", "4*q*E(q^4)*E(q^20)^3/E(q^10)^4",
         "NU-1 written in R"},
        {"KK-RESTATE", "R(q)*R(q^2)/R(q^4)^2 - q^2*R(q^4)^2/(R(q)*R(q^2))", "E(q)*E(q^5)^3/E(q^10)^4",
         "KK-1 written in R"},
        {"BB-122", "1/(R(q^2)^3*R(q^4)) + q^4*R(q^2)^3*R(q^4)",
         "4*q^4*E(q^2)*E(q^20)^5/(E(q^4)*E(q^10)^5) + E(q^4)*E(q^10)^5/(E(q^2)*E(q^20)^5) + 2*q^2",
         "R(q^2), R(q^4) relation"},
        {"BB-121", "R(q)/R(q^2)^3 + q^2*R(q^2)^3/R(q)",
         "E(q^2)*E(q^5)^5/(E(q)*E(q^10)^5) + 4*q^2*E(q)*E(q^10)^5/(E(q^2)*E(q^5)^5) - 2*q",
         "R(q), R(q^2) relation"},

        // 5-dissection of nu(q^2)
        {"ZERO-1", "2*q*G(q)^3*H(q)^4*H(q^2)^4*G(q^4)*E(q^10)^4/(E(q^5)^2*E(q^20)^2)",
         "2*q*G(q)^4*H(q)^4*G(q^2)*H(q^2)*G(q^4)*H(q^4) - 2*q^2*G(q)^5*H(q)^3*H(q^2)^2*H(q^4)^2",
         "auxiliary G/H relation at q, q^2, q^4, from R-2Q"},
        {"GF-A2", dissect_of(alpha, 5, 2), "2*G(q^2)^4*H(q^2)^3*E(q^20)^2/(G(q^4)*H(q^4)^2*E(q^10)^2)",
         "sum alpha(5n+2) q^n. The 25-term product CT-1(q) * CT-2(q^2) for nu(q^2) is not stored "
         "separately: its residue-2 and residue-3 parts are GF-A2 and GF-A3"},
        {"GF-A3", dissect_of(alpha, 5, 3), "-2*q*G(q^2)^3*H(q^2)^4*E(q^20)^2/(G(q^4)^2*H(q^4)*E(q^10)^2)",
         "sum alpha(5n+3) q^n"},

        // Andrews-Bressoud products for k = 5
        {"AB-52", "(q^2,q^8;q^10)_inf/(q^3,q^7;q^10)_inf",
         "G(q^10)^3*H(q^10)^2*E(q^25)^2/(G(q^5)*H(q^5)*E(q^50)^2)"
         " + q^6*G(q^10)^2*H(q^10)^4/(G(q^5)^2*H(q^5))"
         " - q^2*G(q^10)^2*H(q^10)^3*E(q^25)^2/(G(q^5)*H(q^5)*E(q^50)^2)"
         " + q^3*G(q^10)^2*H(q^10)^3*E(q^25)^2/(G(q^5)^2*E(q^50)^2)",
         "5-dissection of the Andrews-Bressoud product, k = 5, r = 2"},
        {"AB-54", "(q^4,q^6;q^10)_inf/(q,q^9;q^10)_inf",
         "G(q^10)^3*H(q^10)^2*E(q^25)^2/(H(q^5)^2*E(q^50)^2)"
         " + q*G(q^10)^3*H(q^10)^2*E(q^25)^2/(G(q^5)*H(q^5)*E(q^50)^2)"
         " + q^2*G(q^10)^4*H(q^10)^2/(G(q^5)*H(q^5)^2)"
         " + q^3*G(q^10)^2*H(q^10)^3*E(q^25)^2/(G(q^5)*H(q^5)*E(q^50)^2)",
         "5-dissection of the Andrews-Bressoud product, k = 5, r = 4"},

        // remaining components of the 5-dissections of nu(q^2) and 1/nu(q^2)
        {"GF-A1", dissect_of(alpha, 5, 1), "-2*H(q)*G(q^2)^3*H(q^2)^3*E(q^5)^2*E(q^20)^2/(G(q^4)*H(q^4)^2*E(q^10)^4)",
         "sum alpha(5n+1) q^n"},
        {"GF-A4", dissect_of(alpha, 5, 4), "-2*G(q^2)^4*H(q^2)^5*E(q^10)^2/(G(q)*G(q^4)^2*H(q^4)^2*E(q^5)^2)",
         "sum alpha(5n+4) q^n"},
        {"GF-B1", dissect_of(beta, 5, 1), "2*G(q^2)^5*H(q^2)^4*E(q^10)^2/(H(q)*G(q^4)^2*H(q^4)^2*E(q^5)^2)",
         "sum beta(5n+1) q^n"},
        {"GF-B2", dissect_of(beta, 5, 2), "2*G(q^2)^4*H(q^2)^3*E(q^20)^2/(G(q^4)*H(q^4)^2*E(q^10)^2)",
         "sum beta(5n+2) q^n"},
        {"GF-B3", dissect_of(beta, 5, 3), "-2*q*G(q^2)^3*H(q^2)^4*E(q^20)^2/(G(q^4)^2*H(q^4)*E(q^10)^2)",
         "sum beta(5n+3) q^n"},
        {"GF-B4", dissect_of(beta, 5, 4), "-2*G(q)*G(q^2)^3*H(q^2)^3*E(q^5)^2*E(q^20)^2/(G(q^4)^2*H(q^4)*E(q^10)^4)",
         "sum beta(5n+4) q^n"},
    };
    validate_registry(t);
    return t;
}

std::vector<std::string> split_tabs(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        out.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
        if (tab == std::string_view::npos) {
            break;
        }
        start = tab + 1;
    }
    return out;
}

} // namespace

const std::vector<IdentityRecord> &builtin_registry()
{
    static const std::vector<IdentityRecord> table = build_table();
    return table;
}

void validate_registry(std::span<const IdentityRecord> records)
{
    std::set<std::string> ids;
    for (const auto &r : records) {
        if (r.id.empty()) {
            throw DomainError("registry record with an empty id");
        }
        if (!ids.insert(r.id).second) {
            throw DomainError("duplicate registry id '" + r.id + "'");
        }
        if (r.default_order < 2) {
            throw DomainError("registry record '" + r.id + "' has default order below 2");
        }
        for (const auto *side : {&r.lhs, &r.rhs}) {
            try {
                parse(*side);
            } catch (const ParseError &e) {
                throw DomainError("registry record '" + r.id + "': " + (side == &r.lhs ? "lhs" : "rhs") + ": " + e.what());
            }
        }
    }
}

std::vector<IdentityRecord> parse_registry(std::string_view text)
{
    std::vector<IdentityRecord> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#') {
            continue;
        }
        auto fields = split_tabs(line);
        if (fields.size() != 5) {
            throw DomainError("registry line " + std::to_string(line_no) + ": expected 5 tab-separated fields, found "
                              + std::to_string(fields.size()));
        }
        IdentityRecord r{fields[0], fields[1], fields[2], fields[3], 0};
        try {
            std::size_t used = 0;
            r.default_order = std::stoll(fields[4], &used);
            if (used != fields[4].size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw DomainError("registry line " + std::to_string(line_no) + ": order '" + fields[4] + "' is not an integer");
        }
        out.push_back(std::move(r));
    }
    validate_registry(out);
    return out;
}

std::vector<IdentityRecord> load_registry_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open registry file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_registry(ss.str());
}

std::vector<IdentityRecord> merged_registry(std::span<const IdentityRecord> extra)
{
    std::vector<IdentityRecord> all = builtin_registry();
    all.insert(all.end(), extra.begin(), extra.end());
    validate_registry(all);
    return all;
}

} // namespace qseries
