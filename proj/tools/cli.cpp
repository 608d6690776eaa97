#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "eocong/partitions.hpp"
#include "eocong/quadforms.hpp"
#include "eocong/verify.hpp"

namespace eocong::cli {

namespace {

using nlohmann::ordered_json;

// command echo, parameters, rows, status. Cells are JSON scalars so CSV and
// JSON print numbers identically.
struct OutputRecord {
    std::string command;
    ordered_json parameters = ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<ordered_json>> rows;
    std::string status = "pass";
};

std::string csv_cell(const ordered_json& v) {
    if (v.is_null()) return "";
    if (!v.is_string()) return v.dump();
    const auto& s = v.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

void write_csv(const OutputRecord& rec, std::ostream& os) {
    for (std::size_t i = 0; i < rec.columns.size(); ++i) os << (i ? "," : "") << rec.columns[i];
    os << '\n';
    for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
}

void write_json(const OutputRecord& rec, std::ostream& os) {
    ordered_json j;
    j["command"] = rec.command;
    j["parameters"] = rec.parameters;
    ordered_json rows = ordered_json::array();
    for (const auto& row : rec.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[rec.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    j["rows"] = std::move(rows);
    j["status"] = rec.status;
    os << j.dump(2) << '\n';
}

struct Output {
    std::string format = "csv";
    std::string path;
};

void add_output_options(CLI::App* sub, Output& o) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.path, "write to PATH instead of stdout");
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Opened before any computation so a bad path fails fast.
class Sink {
public:
    Sink(const Output& o, std::ostream& out) : format_(o.format), os_(&out) {
        if (!o.path.empty()) {
            file_.open(o.path);
            if (!file_) throw UsageError("cannot open " + o.path + " for writing");
            os_ = &file_;
        }
    }
    void emit(const OutputRecord& rec) {
        if (format_ == "json")
            write_json(rec, *os_);
        else
            write_csv(rec, *os_);
        os_->flush();
        if (!*os_) throw UsageError("write failed");
    }

private:
    std::string format_;
    std::ofstream file_;
    std::ostream* os_;
};

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    SuiteOptions options;
    Output output;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string describe(const Counterexample& c) {
    std::vector<std::string> parts;
    for (const auto& [k, v] : c.values) parts.push_back(k + "=" + std::to_string(v));
    return c.detail + (parts.empty() ? "" : " (" + join(parts, ", ") + ")");
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    Sink sink(a.output, out);
    std::vector<VerificationReport> reports;
    if (a.suite == "all")
        reports = run_all_suites(a.options);
    else
        reports.push_back(run_suite(a.suite, a.options));

    OutputRecord rec;
    rec.command = "verify";
    rec.parameters = {{"suite", a.suite}, {"limit", a.options.limit}, {"order", a.options.order}};
    rec.columns = {"suite", "status", "cases", "range_lo", "range_hi", "counterexample_n", "detail", "notes"};
    for (const auto& r : reports) {
        rec.rows.push_back({r.suite, r.passed ? "pass" : "fail", r.cases, r.range_lo, r.range_hi,
                            r.counterexample ? ordered_json(r.counterexample->n) : ordered_json(nullptr),
                            r.counterexample ? describe(*r.counterexample) : "", join(r.notes, "; ")});
        if (!r.passed) rec.status = "fail";
    }
    sink.emit(rec);
    return rec.status == "pass" ? kExitPass : kExitFail;
}

// --- table -------------------------------------------------------------------

struct TableArgs {
    std::string series;
    std::uint64_t order = 0;
    std::optional<std::uint64_t> mod;
    Output output;
};

std::int64_t reduce(std::int64_t v, std::optional<std::uint64_t> m) {
    if (!m) return v;
    const auto mm = static_cast<std::int64_t>(*m);
    return ((v % mm) + mm) % mm;
}

std::vector<std::int64_t> table_values(const TableArgs& a) {
    const std::size_t N = a.order;
    std::vector<std::int64_t> v(N + 1);
    if (a.series == "eobar") {
        if (a.mod) {
            const ModSeries s = eobar_residues_theta(N, *a.mod);
            for (std::size_t n = 0; n <= N; ++n) v[n] = static_cast<std::int64_t>(s[n]);
            return v;
        }
        const Series s = [&] {
            try {
                return eobar_series(N);
            } catch (const std::overflow_error&) {
                throw UsageError("exact EO-bar overflows 64 bits past n = 1381; pass --mod");
            }
        }();
        for (std::size_t n = 0; n <= N; ++n) v[n] = s[n];
    } else if (a.series == "A") {
        const ATable t(N);
        for (std::size_t n = 0; n <= N; ++n) v[n] = static_cast<std::int64_t>(t(n));
    } else if (a.series == "a" || a.series == "b") {
        const Series s = a.series == "a" ? a_series(N) : b_series(N);
        for (std::size_t n = 0; n <= N; ++n) v[n] = s[n];
    } else {
        // r113 = theta(q)^2 theta(q^3), r133 = theta(q) theta(q^3)^2
        const Series t1 = theta(ThetaKind::square, N);
        const Series t3 = substitute(theta(ThetaKind::square, N), 3).truncated(N);
        const Series s = a.series == "r113" ? mul(mul(t1, t1), t3) : mul(mul(t1, t3), t3);
        for (std::size_t n = 0; n <= N; ++n) v[n] = s[n];
    }
    for (auto& x : v) x = reduce(x, a.mod);
    return v;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
    if (a.mod && (*a.mod < 2 || *a.mod >= (std::uint64_t{1} << 31)))
        throw UsageError("--mod must satisfy 2 <= m < 2^31");
    Sink sink(a.output, out);
    OutputRecord rec;
    rec.command = "table";
    rec.parameters = {{"series", a.series}, {"order", a.order}};
    rec.parameters["mod"] = a.mod ? ordered_json(*a.mod) : ordered_json(nullptr);
    rec.columns = {"n", "value"};
    const auto values = table_values(a);
    for (std::size_t n = 0; n < values.size(); ++n) rec.rows.push_back({n, values[n]});
    sink.emit(rec);
    return kExitPass;
}

// --- scan --------------------------------------------------------------------

struct ScanArgs {
    std::uint64_t a_max = 25;
    std::uint64_t n_max = 400;
    Output output;
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
    if (a.a_max == 0) throw UsageError("--a-max must be positive");
    Sink sink(a.output, out);
    OutputRecord rec;
    rec.command = "scan";
    rec.parameters = {{"a_max", a.a_max}, {"n_max", a.n_max}};
    rec.columns = {"modulus", "residue", "trivial"};
    for (const auto& f : scan_congruences(a.a_max, a.n_max)) rec.rows.push_back({f.modulus, f.residue, f.trivial});
    sink.emit(rec);
    return kExitPass;
}

// --- density -----------------------------------------------------------------

struct DensityArgs {
    std::vector<std::uint64_t> checkpoints;
    std::optional<std::uint64_t> order;
    Output output;
};

int cmd_density(const DensityArgs& a, std::ostream& out) {
    const std::uint64_t top = *std::max_element(a.checkpoints.begin(), a.checkpoints.end());
    const std::uint64_t order = a.order.value_or(top);
    if (order < top) throw UsageError("--order is below the largest checkpoint");
    Sink sink(a.output, out);
    const auto rows = density_report(a.checkpoints, eobar_residues_theta(order, 4));

    OutputRecord rec;
    rec.command = "density";
    rec.parameters = {{"checkpoints", a.checkpoints}, {"order", order}};
    rec.columns = {"N",     "odd",       "two_mod_four",    "zero_mod_four",
                   "ratio", "odd_bound", "odd_bound_holds", "two_mod_four_scale"};
    for (const auto& r : rows) {
        rec.rows.push_back({r.N, r.odd, r.two_mod_four, r.zero_mod_four, r.ratio, r.odd_bound, r.odd_bound_holds,
                            r.two_mod_four_scale});
        if (!r.odd_bound_holds) rec.status = "fail";
    }
    sink.emit(rec);
    return rec.status == "pass" ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"EO-bar partition congruence toolkit", "eocong"};
    app.require_subcommand(1);

    std::vector<std::string> suites = {"all"};
    for (auto name : suite_names()) suites.emplace_back(name);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", va.suite, "suite name or all")->required()->check(CLI::IsMember(suites));
    verify->add_option("--limit", va.options.limit, "upper end of each sweep")->capture_default_str();
    verify->add_option("--order", va.options.order, "series truncation")->capture_default_str();
    add_output_options(verify, va.output);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "coefficient table n,value");
    table->add_option("--series", ta.series)->required()->check(
        CLI::IsMember({"eobar", "A", "a", "b", "r113", "r133"}));
    table->add_option("--order", ta.order, "last n")->required();
    table->add_option("--mod", ta.mod, "reduce values mod m");
    add_output_options(table, ta.output);

    ScanArgs sa;
    auto* scan = app.add_subcommand("scan", "search EO-bar(An+B) = 0 (mod 4)");
    scan->add_option("--a-max", sa.a_max)->capture_default_str();
    scan->add_option("--n-max", sa.n_max)->capture_default_str();
    add_output_options(scan, sa.output);

    DensityArgs da;
    auto* density = app.add_subcommand("density", "EO-bar mod 4 class counts");
    density->add_option("--checkpoints", da.checkpoints)->required()->delimiter(',')->check(CLI::PositiveNumber);
    density->add_option("--order", da.order, "series truncation (default: largest checkpoint)");
    add_output_options(density, da.output);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(va, out);
        if (*table) return cmd_table(ta, out);
        if (*scan) return cmd_scan(sa, out);
        return cmd_density(da, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {  // invalid_argument, out_of_range, domain_error
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace eocong::cli
