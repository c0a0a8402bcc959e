#include <qseries/report.hpp>

#include <cstdio>
#include <sstream>

namespace qseries {

namespace {

std::string classes_text(const Report &r)
{
    std::string out;
    for (const auto &[res, c] : r.sign_classes) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(res) + '=' + std::string(to_string(c));
    }
    return out;
}

std::string residues_text(const std::vector<Exponent> &v)
{
    std::string out;
    for (const auto x : v) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(x);
    }
    return out;
}

std::string millis_text(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

} // namespace

nlohmann::json to_json(const QSeries &f)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : f.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    return {{"valuation", f.valuation()}, {"precision", f.precision()}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json to_json(const Report &r)
{
    nlohmann::json j;
    j["kind"] = to_string(r.kind);
    j[r.kind == ReportKind::Verify ? "id" : "expr"] = r.subject;
    j["order"] = r.order;
    j["status"] = to_string(r.status);
    if (r.witness) {
        j["witness"] = {{"exponent", r.witness->exponent},
                        {"lhs_coeff", r.witness->lhs.get_str()},
                        {"rhs_coeff", r.witness->rhs.get_str()}};
    } else {
        j["witness"] = nullptr;
    }
    j["millis"] = r.millis;
    if (!r.message.empty()) {
        j["message"] = r.message;
    }
    if (r.kind != ReportKind::Verify) {
        j["modulus"] = r.modulus;
    }
    if (r.kind == ReportKind::Vanish) {
        j["residues"] = r.residues;
    }
    if (r.kind == ReportKind::Signs) {
        nlohmann::json classes = nlohmann::json::object();
        for (const auto &[res, c] : r.sign_classes) {
            classes[std::to_string(res)] = to_string(c);
        }
        j["classes"] = std::move(classes);
        j["exceptions"] = r.exceptions;
        j["empirical"] = r.empirical;
    }
    return j;
}

std::string csv_quote(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

void write_csv_header(std::ostream &os)
{
    os << "kind,subject,order,status,witness_exponent,witness_lhs,witness_rhs,millis,detail\n";
}

void write_csv_row(std::ostream &os, const Report &r)
{
    std::string detail = r.message;
    if (r.kind == ReportKind::Vanish) {
        detail = "mod " + std::to_string(r.modulus) + " residues " + residues_text(r.residues);
    } else if (r.kind == ReportKind::Signs) {
        detail = "empirical mod " + std::to_string(r.modulus) + ": " + classes_text(r);
    }
    os << to_string(r.kind) << ',' << csv_quote(r.subject) << ',' << r.order << ',' << to_string(r.status) << ',';
    if (r.witness) {
        os << r.witness->exponent << ',' << r.witness->lhs.get_str() << ',' << r.witness->rhs.get_str();
    } else {
        os << ",,";
    }
    os << ',' << millis_text(r.millis) << ',' << csv_quote(detail) << '\n';
}

void write_csv(std::ostream &os, std::span<const Report> reports)
{
    write_csv_header(os);
    for (const auto &r : reports) {
        write_csv_row(os, r);
    }
}

std::string summary_line(const Report &r)
{
    std::ostringstream os;
    os << r.subject << ": " << to_string(r.status) << " (N=" << r.order << ", " << millis_text(r.millis) << " ms)";
    if (r.witness) {
        os << " first discrepancy at q^" << r.witness->exponent << ": lhs " << r.witness->lhs.get_str() << ", rhs "
           << r.witness->rhs.get_str();
    }
    if (!r.message.empty()) {
        os << " " << r.message;
    }
    return os.str();
}

} // namespace qseries
