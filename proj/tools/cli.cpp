#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <qseries/errors.hpp>
#include <qseries/evaluator.hpp>
#include <qseries/expr.hpp>
#include <qseries/harness.hpp>
#include <qseries/registry.hpp>
#include <qseries/report.hpp>

namespace qseries::cli {

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExprSource {
    std::string text;
    bool alpha = false, beta = false, gamma = false, delta = false;
};

void add_expr_options(CLI::App &cmd, ExprSource &src)
{
    cmd.add_option("expr", src.text, "Expression in the series DSL, or - to read it from stdin");
    cmd.add_flag("--alpha", src.alpha, "Use the product for nu(q^2)");
    cmd.add_flag("--beta", src.beta, "Use the product for 1/nu(q^2)");
    cmd.add_flag("--gamma", src.gamma, "Use the gamma product");
    cmd.add_flag("--delta", src.delta, "Use the delta product");
}

std::string resolve_text(const ExprSource &src, std::istream &in)
{
    std::vector<std::string> picked;
    if (src.alpha) picked.emplace_back(series_text::alpha);
    if (src.beta) picked.emplace_back(series_text::beta);
    if (src.gamma) picked.emplace_back(series_text::gamma);
    if (src.delta) picked.emplace_back(series_text::delta);
    if (!src.text.empty()) {
        if (src.text == "-") {
            picked.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        } else {
            picked.push_back(src.text);
        }
    }
    if (picked.size() != 1) {
        throw Usage("give exactly one expression (text, -, --alpha, --beta, --gamma or --delta)");
    }
    auto &t = picked.front();
    while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) {
        t.pop_back();
    }
    return t;
}

void report_parse_error(std::ostream &err, const std::string &text, const ParseError &e)
{
    err << "error: " << e.what() << '\n';
    if (text.find('\n') == std::string::npos) {
        err << "  " << text << "\n  " << std::string(std::min(e.offset(), text.size()), ' ') << "^\n";
    }
}

enum class Format { Human, Json, Csv };

Format format_of(const std::string &s)
{
    if (s == "human") return Format::Human;
    if (s == "json") return Format::Json;
    return Format::Csv;
}

void print_series(std::ostream &out, const QSeries &f, Exponent n, Format fmt)
{
    if (fmt == Format::Json) {
        out << to_json(f).dump() << '\n';
        return;
    }
    if (fmt == Format::Csv) {
        out << "exponent,coefficient\n";
        for (Exponent e = f.valuation(); e < n; ++e) {
            out << e << ',' << f.stored(e).get_str() << '\n';
        }
        return;
    }
    std::size_t exp_w = 1, coef_w = 1;
    for (Exponent e = f.valuation(); e < n; ++e) {
        exp_w = std::max(exp_w, std::to_string(e).size());
        coef_w = std::max(coef_w, f.stored(e).get_str().size());
    }
    for (Exponent e = f.valuation(); e < n; ++e) {
        out << std::setw(static_cast<int>(exp_w)) << e << ": " << std::setw(static_cast<int>(coef_w))
            << f.stored(e).get_str() << '\n';
    }
    out << "O(q^" << n << ")\n";
}

std::string join_classes(const std::vector<ResidueClass> &cs)
{
    std::string s;
    for (const auto &c : cs) {
        s += "(" + std::to_string(c.modulus) + "," + std::to_string(c.residue) + ") ";
    }
    if (!s.empty()) {
        s.pop_back();
    }
    return s;
}

struct Common {
    Exponent order = 0;
    std::string format = "human";
    std::string registry;
    Exponent guard_cap = EvalOptions{}.guard_cap;
};

void add_common(CLI::App &cmd, Common &c, Exponent default_order, bool with_registry)
{
    c.order = default_order;
    cmd.add_option("-N,--order", c.order, "Truncation order (coefficients below q^N)")
        ->capture_default_str()
        ->check(CLI::Range(Exponent{2}, Exponent{1} << 40));
    cmd.add_option("--format", c.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd.add_option("--guard-cap", c.guard_cap, "Largest excess of working order over target")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    if (with_registry) {
        cmd.add_option("--registry", c.registry, "Extra identity file (id TAB lhs TAB rhs TAB source TAB order)");
    }
}

Harness make_harness(const Common &c)
{
    EvalOptions opt;
    opt.guard_cap = c.guard_cap;
    if (c.registry.empty()) {
        return Harness(builtin_registry(), opt);
    }
    try {
        return Harness(merged_registry(load_registry_file(c.registry)), opt);
    } catch (const std::exception &e) {
        throw Usage(std::string("registry: ") + e.what());
    }
}

int cmd_expand(const ExprSource &src, const Common &c, std::ostream &out, std::ostream &err, std::istream &in)
{
    const auto text = resolve_text(src, in);
    ExprPtr e;
    try {
        e = parse(text);
    } catch (const ParseError &pe) {
        report_parse_error(err, text, pe);
        return UsageError;
    }
    EvalOptions opt;
    opt.guard_cap = c.guard_cap;
    const auto f = evaluate(*e, c.order, opt).truncated(c.order);
    print_series(out, f, c.order, format_of(c.format));
    return Success;
}

int cmd_list(const Common &c, std::ostream &out)
{
    const auto h = make_harness(c);
    auto recs = h.records();
    std::sort(recs.begin(), recs.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    const auto fmt = format_of(c.format);
    if (fmt == Format::Json) {
        auto arr = nlohmann::json::array();
        for (const auto &r : recs) {
            arr.push_back({{"id", r.id}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"source", r.source}, {"order", r.default_order}});
        }
        out << arr.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        out << "id,lhs,rhs,source,order\n";
        for (const auto &r : recs) {
            out << csv_quote(r.id) << ',' << csv_quote(r.lhs) << ',' << csv_quote(r.rhs) << ',' << csv_quote(r.source)
                << ',' << r.default_order << '\n';
        }
    } else {
        for (const auto &r : recs) {
            out << r.id << "\n  " << r.lhs << "\n  = " << r.rhs << "\n  " << r.source << '\n';
        }
    }
    return Success;
}

int exit_for(const std::vector<Report> &reports)
{
    int code = Success;
    for (const auto &r : reports) {
        if (r.status == Status::Error || r.status == Status::InsufficientPrecision) {
            return EvaluationError;
        }
        if (r.status == Status::Fail) {
            code = VerificationFailed;
        }
    }
    return code;
}

int cmd_verify(const std::string &id, bool all, bool parallel, const Common &c, std::ostream &out, std::ostream &err)
{
    if (all == !id.empty()) {
        throw Usage("give either an identity id or --all");
    }
    const auto h = make_harness(c);
    const auto fmt = format_of(c.format);
    std::vector<Report> reports;
    if (all) {
        std::function<void(const Report &)> stream;
        if (fmt == Format::Human) {
            stream = [&](const Report &r) { out << summary_line(r) << '\n' << std::flush; };
        }
        reports = h.verify_all(c.order, parallel, stream);
    } else {
        if (!h.find(id)) {
            err << "unknown identity id '" << id << "'; valid ids:\n";
            for (const auto &v : h.ids()) {
                err << "  " << v << '\n';
            }
            return UsageError;
        }
        reports.push_back(h.verify(id, c.order));
        if (fmt == Format::Human) {
            out << summary_line(reports.back()) << '\n';
        }
    }

    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto &r) { return r.status == Status::Pass; });
    if (fmt == Format::Json) {
        auto arr = nlohmann::json::array();
        for (const auto &r : reports) {
            arr.push_back(to_json(r));
        }
        nlohmann::json doc = {{"reports", arr}, {"passed", passed}, {"total", reports.size()}};
        out << doc.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        write_csv(out, reports);
    } else if (all) {
        out << "summary: " << passed << "/" << reports.size() << " pass at N=" << c.order << '\n';
        for (const auto &r : reports) {
            if (r.status != Status::Pass) {
                out << "  " << r.subject << ": " << to_string(r.status) << '\n';
            }
        }
    }
    return exit_for(reports);
}

struct ScanArgs {
    Exponent modulus = 0;
    std::vector<Exponent> residues;
    Exponent discover = 0;
    bool signs = false;
    std::vector<Exponent> except;
};

int cmd_scan(const ExprSource &src, const ScanArgs &s, const Common &c, std::ostream &out, std::ostream &err,
             std::istream &in)
{
    const int modes = (!s.residues.empty() ? 1 : 0) + (s.discover > 0 ? 1 : 0) + (s.signs ? 1 : 0);
    if (modes != 1) {
        throw Usage("give exactly one of --residues, --discover or --signs");
    }
    if (s.discover == 0 && s.modulus < 1) {
        throw Usage("--modulus is required for --residues and --signs");
    }
    if (s.discover > 0 && c.order < 50 * s.discover) {
        throw Usage("--discover " + std::to_string(s.discover) + " needs -N of at least " + std::to_string(50 * s.discover));
    }
    for (const auto r : s.residues) {
        if (r < 0 || r >= s.modulus) {
            throw Usage("residue " + std::to_string(r) + " is not in [0, " + std::to_string(s.modulus) + ")");
        }
    }
    const auto text = resolve_text(src, in);
    ExprPtr e;
    try {
        e = parse(text);
    } catch (const ParseError &pe) {
        report_parse_error(err, text, pe);
        return UsageError;
    }
    EvalOptions opt;
    opt.guard_cap = c.guard_cap;
    const auto fmt = format_of(c.format);

    if (s.discover > 0) {
        const auto classes = discover_vanishing(*e, s.discover, c.order, opt);
        if (fmt == Format::Json) {
            auto arr = nlohmann::json::array();
            for (const auto &k : classes) {
                arr.push_back({k.modulus, k.residue});
            }
            out << nlohmann::json{{"kind", "discover"}, {"expr", to_text(*e)}, {"order", c.order},
                                  {"m_max", s.discover}, {"classes", arr}}
                       .dump(2)
                << '\n';
        } else if (fmt == Format::Csv) {
            out << "modulus,residue\n";
            for (const auto &k : classes) {
                out << k.modulus << ',' << k.residue << '\n';
            }
        } else {
            out << "vanishing classes below q^" << c.order << " (m <= " << s.discover
                << "): " << (classes.empty() ? "none" : join_classes(classes)) << '\n';
        }
        return Success;
    }

    Report rep;
    if (s.signs) {
        rep = scan_signs(*e, s.modulus, c.order, std::set<Exponent>(s.except.begin(), s.except.end()), opt);
    } else {
        rep = scan_vanishing(*e, s.modulus, std::set<Exponent>(s.residues.begin(), s.residues.end()), c.order, opt);
    }
    if (fmt == Format::Json) {
        out << to_json(rep).dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        write_csv(out, std::span<const Report>(&rep, 1));
    } else if (s.signs) {
        out << "sign classes mod " << s.modulus << " below q^" << c.order << " (empirical):\n";
        for (const auto &[r, cls] : rep.sign_classes) {
            out << "  " << std::setw(3) << r << ": " << to_string(cls) << '\n';
        }
    } else {
        out << "vanish mod " << s.modulus << ": " << summary_line(rep) << '\n';
    }
    if (s.signs) {
        return Success;
    }
    return rep.status == Status::Pass ? Success : VerificationFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in)
{
    CLI::App app{"Exact q-series expansion and identity verification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    ExprSource expand_src, scan_src;
    Common expand_c, verify_c, scan_c, list_c;
    std::string verify_id;
    bool verify_all_flag = false, parallel = false;
    ScanArgs scan_args;

    auto *expand = app.add_subcommand("expand", "Print the coefficients of an expression");
    add_expr_options(*expand, expand_src);
    add_common(*expand, expand_c, 20, false);

    auto *verify = app.add_subcommand("verify", "Verify registry identities coefficient by coefficient");
    verify->add_option("id", verify_id, "Identity id");
    verify->add_flag("--all", verify_all_flag, "Verify every identity");
    verify->add_flag("--parallel", parallel, "Verify concurrently");
    add_common(*verify, verify_c, 200, true);

    auto *scan = app.add_subcommand("scan", "Scan an expression for vanishing classes or sign patterns");
    add_expr_options(*scan, scan_src);
    scan->add_option("--modulus", scan_args.modulus, "Modulus m")->check(CLI::PositiveNumber);
    scan->add_option("--residues", scan_args.residues, "Residues mod m that must vanish")->delimiter(',');
    scan->add_option("--discover", scan_args.discover, "Find minimal vanishing classes with m up to this")
        ->check(CLI::PositiveNumber);
    scan->add_flag("--signs", scan_args.signs, "Classify the sign of each residue class (empirical)");
    scan->add_option("--except", scan_args.except, "Exponents left out of the sign scan")->delimiter(',');
    add_common(*scan, scan_c, 2000, false);

    auto *list = app.add_subcommand("list", "List registry identities");
    add_common(*list, list_c, 200, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return UsageError;
    }

    try {
        if (*expand) {
            return cmd_expand(expand_src, expand_c, out, err, in);
        }
        if (*verify) {
            return cmd_verify(verify_id, verify_all_flag, parallel, verify_c, out, err);
        }
        if (*scan) {
            return cmd_scan(scan_src, scan_args, scan_c, out, err, in);
        }
        return cmd_list(list_c, out);
    } catch (const Usage &e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::exception &e) {
        err << "evaluation error: " << e.what() << '\n';
        return EvaluationError;
    }
}

} // namespace qseries::cli
