#include "cli.hpp"
#include "selftest.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include <umbra/errors.hpp>
#include <umbra/families.hpp>
#include <umbra/identities.hpp>
#include <umbra/report.hpp>

namespace umbra::cli
{

namespace
{

using identities::IdentityId;
using identities::IntRange;
using json = report::json;

const std::vector<std::string> family_names{
    "cauchy", "higher-cauchy", "poly-cauchy", "mixed",          "stirling1",
    "stirling2", "bernoulli",  "frobenius-euler", "narumi", "bernoulli2",
};

int parse_int(const std::string &text, const char *flag)
{
    int value = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument(std::string("--") + flag + ": expected an integer, got '" + text + "'");
    }
    return value;
}

// "a..b" or a single value, inclusive.
IntRange parse_range(const std::string &text, const char *flag)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(text, flag);
        return {v, v};
    }
    IntRange r{parse_int(text.substr(0, dots), flag), parse_int(text.substr(dots + 2), flag)};
    if (r.lo > r.hi) {
        throw std::invalid_argument(std::string("--") + flag + ": empty range '" + text + "'");
    }
    return r;
}

std::vector<Rational> parse_rational_list(const std::string &text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(Rational::parse(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty value list");
    }
    return out;
}

void require_truncation(int needed, int trunc)
{
    if (needed > trunc) {
        throw truncation_error("n = " + std::to_string(needed) + " exceeds the truncation order "
                                   + std::to_string(trunc) + "; raise --trunc",
                               needed);
    }
}

// ---- tables ---------------------------------------------------------------

using Cell = std::variant<std::monostate, int, Rational, Polynomial>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

std::string plain(const Cell &c)
{
    struct {
        std::string operator()(std::monostate) const
        {
            return "";
        }
        std::string operator()(int v) const
        {
            return std::to_string(v);
        }
        std::string operator()(const Rational &q) const
        {
            return q.str();
        }
        std::string operator()(const Polynomial &p) const
        {
            return p.str();
        }
    } visitor;
    return std::visit(visitor, c);
}

std::string latex(const Cell &c)
{
    if (const auto *q = std::get_if<Rational>(&c)) {
        return "$" + q->latex() + "$";
    }
    if (const auto *p = std::get_if<Polynomial>(&c)) {
        return "$" + p->latex() + "$";
    }
    return plain(c);
}

json to_json(const Cell &c)
{
    if (std::holds_alternative<std::monostate>(c)) {
        return nullptr;
    }
    if (const auto *v = std::get_if<int>(&c)) {
        return *v;
    }
    if (const auto *p = std::get_if<Polynomial>(&c)) {
        return report::encode(*p);
    }
    return std::get<Rational>(c).str();
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

void write_csv(const Table &t, std::ostream &os)
{
    auto line = [&os](const auto &cells, auto &&to_string) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << csv_field(to_string(cells[i]));
        }
        os << "\n";
    };
    line(t.header, [](const std::string &s) { return s; });
    for (const auto &row : t.rows) {
        line(row, plain);
    }
}

void write_latex(const Table &t, std::ostream &os)
{
    os << "\\begin{tabular}{r" << std::string(t.header.size() - 1, 'l') << "}\n";
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        os << (i ? " & " : "") << t.header[i];
    }
    os << " \\\\\n\\hline\n";
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? " & " : "") << latex(row[i]);
        }
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
}

void write_json(const Table &t, const std::string &family, const json &params, std::ostream &os)
{
    json doc;
    doc["family"] = family;
    doc["params"] = params;
    doc["columns"] = t.header;
    json rows = json::array();
    for (const auto &row : t.rows) {
        json r;
        for (std::size_t i = 0; i < row.size(); ++i) {
            r[t.header[i]] = to_json(row[i]);
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    os << report::dump(doc);
}

struct FamilyParams {
    std::optional<int> r, k, s, alpha, m;
    std::optional<std::string> lambda;
    std::string x = "0";
};

bool is_number_family(const std::string &f)
{
    return f == "cauchy" || f == "higher-cauchy";
}

bool is_triangle_family(const std::string &f)
{
    return f == "stirling1" || f == "stirling2";
}

Rational lambda_of(const FamilyParams &p)
{
    return Rational::parse(p.lambda.value_or("-1"));
}

// The parameters that matter for a family, with their defaults filled in.
json resolved_params(const std::string &family, const FamilyParams &p)
{
    json out = json::object();
    if (family == "higher-cauchy" || family == "narumi") {
        out["r"] = p.r.value_or(1);
    } else if (family == "mixed") {
        out["r"] = p.r.value_or(0);
        out["k"] = p.k.value_or(1);
    } else if (family == "poly-cauchy") {
        out["k"] = p.k.value_or(1);
    } else if (family == "bernoulli") {
        out["alpha"] = p.alpha.value_or(1);
    } else if (family == "frobenius-euler") {
        out["s"] = p.s.value_or(1);
        out["lambda"] = lambda_of(p).str();
    }
    if (!is_number_family(family) && !is_triangle_family(family)) {
        out["x"] = Rational::parse(p.x).str();
    }
    return out;
}

std::vector<Polynomial> polynomial_rows(const std::string &family, int n_max, const FamilyParams &p)
{
    if (family == "poly-cauchy") {
        return families::poly_cauchy_sequence(n_max, p.k.value_or(1));
    }
    if (family == "mixed") {
        return families::mixed_A_sequence(n_max, p.r.value_or(0), p.k.value_or(1));
    }
    if (family == "bernoulli") {
        return families::bernoulli_sequence(n_max, p.alpha.value_or(1));
    }
    if (family == "frobenius-euler") {
        return families::frobenius_euler_sequence(n_max, p.s.value_or(1), lambda_of(p));
    }
    if (family == "narumi") {
        return families::narumi_sequence(n_max, p.r.value_or(1));
    }
    return families::bernoulli2_sequence(n_max);
}

Rational number_value(const std::string &family, int n, const FamilyParams &p)
{
    if (family == "cauchy") {
        return families::cauchy_number(n);
    }
    return families::higher_cauchy(n, p.r.value_or(1));
}

Table build_table(const std::string &family, int n_max, const FamilyParams &p)
{
    Table t;
    if (is_number_family(family)) {
        t.header = {"n", "value"};
        for (int n = 0; n <= n_max; ++n) {
            t.rows.push_back({n, number_value(family, n, p)});
        }
    } else if (is_triangle_family(family)) {
        t.header = {"n"};
        for (int m = 0; m <= n_max; ++m) {
            t.header.push_back("m" + std::to_string(m));
        }
        for (int n = 0; n <= n_max; ++n) {
            std::vector<Cell> row{n};
            for (int m = 0; m <= n_max; ++m) {
                if (m > n) {
                    row.emplace_back(std::monostate{});
                } else {
                    row.emplace_back(family == "stirling1" ? families::stirling1(n, m) : families::stirling2(n, m));
                }
            }
            t.rows.push_back(std::move(row));
        }
    } else {
        const Rational x = Rational::parse(p.x);
        t.header = {"n", "value", "polynomial"};
        const auto polys = polynomial_rows(family, n_max, p);
        for (int n = 0; n <= n_max; ++n) {
            const Polynomial &poly = polys[static_cast<std::size_t>(n)];
            t.rows.push_back({n, poly(x), poly});
        }
    }
    return t;
}

// ---- verification ---------------------------------------------------------

struct GridFlags {
    std::optional<std::string> n_max, n, r, k, s, m, lambda, y;
};

identities::GridSpec apply_flags(IdentityId id, const GridFlags &f)
{
    auto grid = identities::default_grid(id);
    if (f.n_max) {
        const int n_max = parse_int(*f.n_max, "n-max");
        grid.n = {0, n_max};
        grid.m = {0, n_max};
    }
    if (f.n) {
        grid.n = parse_range(*f.n, "n");
    }
    if (f.r) {
        grid.r = parse_range(*f.r, "r");
    }
    if (f.k) {
        grid.k = parse_range(*f.k, "k");
    }
    if (f.s) {
        grid.s = parse_range(*f.s, "s");
    }
    if (f.m) {
        grid.m = parse_range(*f.m, "m");
    }
    if (f.lambda) {
        grid.lambdas = parse_rational_list(*f.lambda);
    }
    if (f.y) {
        const IntRange ys = parse_range(*f.y, "y");
        grid.ys.clear();
        for (int v = ys.lo; v <= ys.hi; ++v) {
            grid.ys.emplace_back(v);
        }
    }
    identities::validate(grid);
    return grid;
}

std::vector<IdentityId> selected_groups(const std::string &selector)
{
    std::string lower = selector;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "all") {
        std::vector<IdentityId> out;
        for (IdentityId id : identities::all_identities) {
            if (!identities::is_variant(id)) {
                out.push_back(id);
            }
        }
        return out;
    }
    const auto id = identities::parse_identity(selector);
    if (!id) {
        throw std::invalid_argument("unknown identity '" + selector + "'");
    }
    return {*id};
}

int cmd_verify(const std::string &selector, const GridFlags &flags, int jobs, int trunc,
               const std::optional<std::string> &report_path, std::ostream &out, std::ostream &err)
{
    const auto groups = selected_groups(selector);
    std::vector<identities::GridSpec> grids;
    for (IdentityId id : groups) {
        grids.push_back(apply_flags(id, flags));
    }
    if (jobs < 1) {
        throw std::invalid_argument("--jobs must be at least 1");
    }

    std::ofstream file;
    if (report_path) {
        file.open(*report_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot write report to '" << *report_path << "'\n";
            return exit_unwritable;
        }
    }

    identities::Engine engine(trunc);
    std::vector<identities::VerificationReport> reports;
    bool all_groups_pass = true;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        // A single explicitly chosen reading is verified alone.
        const bool single = identities::is_variant(groups[i]);
        auto group = single ? std::vector{engine.verify(groups[i], grids[i], jobs)}
                            : engine.verify_variants(groups[i], grids[i], jobs);
        bool any_pass = false;
        for (auto &r : group) {
            any_pass = any_pass || r.passed();
            err << identities::name(r.id) << ": " << (r.passed() ? "PASS" : "FAIL") << " (pass " << r.totals.pass
                << ", fail " << r.totals.fail << ", skipped " << r.totals.skipped << ", " << r.elapsed_ms
                << " ms)\n";
            reports.push_back(std::move(r));
        }
        all_groups_pass = all_groups_pass && any_pass;
    }

    const json doc = reports.size() == 1 ? report::encode(reports.front()) : report::encode_suite(reports, trunc);
    const std::string text = report::dump(doc);
    if (report_path) {
        file << text;
        file.close();
        if (!file) {
            err << "error: failed writing report to '" << *report_path << "'\n";
            return exit_unwritable;
        }
    } else {
        out << text;
    }
    return all_groups_pass ? exit_ok : exit_verify_failed;
}

// Sends output to the --output file when one is given.
int with_output(const std::optional<std::string> &path, std::ostream &out, std::ostream &err,
                const std::function<void(std::ostream &)> &emit)
{
    if (!path) {
        emit(out);
        return exit_ok;
    }
    std::ostringstream buffer;
    emit(buffer);
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << buffer.str())) {
        err << "error: cannot write '" << *path << "'\n";
        return exit_unwritable;
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact power-series and umbral-calculus engine for Cauchy-type polynomials"};
    app.name("umbra");
    app.require_subcommand(1);

    int trunc = identities::default_truncation;
    app.add_option("--trunc", trunc, "Truncation order of every series expansion")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000));

    std::string family;
    FamilyParams fp;
    std::optional<std::string> r_flag, k_flag, s_flag, alpha_flag, m_flag;
    auto add_family_flags = [&](CLI::App *sub) {
        sub->add_option("--family", family, "Family to tabulate")->required()->check(CLI::IsMember(family_names));
        sub->add_option("--r", r_flag, "Order r (higher-cauchy, mixed, narumi)");
        sub->add_option("--k", k_flag, "Poly index k (poly-cauchy, mixed)");
        sub->add_option("--s", s_flag, "Order s (frobenius-euler)");
        sub->add_option("--alpha", alpha_flag, "Order alpha (bernoulli)");
        sub->add_option("--lambda", fp.lambda, "Parameter lambda != 1 (frobenius-euler), default -1");
        sub->add_option("--x", fp.x, "Evaluation point for the value column")->capture_default_str();
    };

    std::string format = "csv";
    std::optional<std::string> output;
    std::string n_max_text = "8";
    auto *table = app.add_subcommand("table", "Tabulate a family for n = 0..n-max");
    add_family_flags(table);
    table->add_option("--n-max", n_max_text, "Largest n")->capture_default_str();
    table->add_option("--format", format, "csv | json | latex")->check(CLI::IsMember({"csv", "json", "latex"}));
    table->add_option("--output", output, "Write to this file instead of stdout");
    table->footer("CSV columns: number families 'n,value'; polynomial families 'n,value,polynomial' with value "
                  "taken at --x; Stirling triangles 'n,m0..mN' with empty cells above the diagonal.");

    std::string n_text;
    std::string poly_format = "text";
    auto *poly = app.add_subcommand("poly", "Print one member of a family");
    add_family_flags(poly);
    poly->add_option("--n", n_text, "Index n")->required();
    poly->add_option("--m", m_flag, "Column m (stirling1, stirling2)");
    poly->add_option("--format", poly_format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    std::string selector;
    GridFlags gf;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::optional<std::string> report_path;
    auto *verify = app.add_subcommand("verify", "Verify an identity (or all) on a parameter grid");
    verify->add_option("identity", selector, "Identity id such as thm1, eq35, thm4_variant, or 'all'")->required();
    verify->add_option("--n-max", gf.n_max, "Use n = 0..N (and m = 0..N)");
    verify->add_option("--n", gf.n, "Range a..b for n");
    verify->add_option("--r", gf.r, "Range a..b for r");
    verify->add_option("--k", gf.k, "Range a..b for k");
    verify->add_option("--s", gf.s, "Range a..b for s");
    verify->add_option("--m", gf.m, "Range a..b for m");
    verify->add_option("--lambda", gf.lambda, "Comma-separated lambda values");
    verify->add_option("--y", gf.y, "Range a..b of evaluation points for two-variable identities");
    verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    verify->add_option("--report", report_path, "Write the JSON report here instead of stdout");

    auto *self = app.add_subcommand("selftest", "Run the invariant suite of every module");

    // CLI11 reads argv-style input in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        auto opt_int = [](const std::optional<std::string> &v, const char *flag) -> std::optional<int> {
            if (!v) {
                return std::nullopt;
            }
            return parse_int(*v, flag);
        };
        fp.r = opt_int(r_flag, "r");
        fp.k = opt_int(k_flag, "k");
        fp.s = opt_int(s_flag, "s");
        fp.alpha = opt_int(alpha_flag, "alpha");
        fp.m = opt_int(m_flag, "m");
        Rational::parse(fp.x);

        if (table->parsed()) {
            const int n_max = parse_int(n_max_text, "n-max");
            if (n_max < 0) {
                throw std::invalid_argument("--n-max must be nonnegative");
            }
            require_truncation(n_max, trunc);
            const Table t = build_table(family, n_max, fp);
            return with_output(output, out, err, [&](std::ostream &os) {
                if (format == "json") {
                    write_json(t, family, resolved_params(family, fp), os);
                } else if (format == "latex") {
                    write_latex(t, os);
                } else {
                    write_csv(t, os);
                }
            });
        }

        if (poly->parsed()) {
            const int n = parse_int(n_text, "n");
            if (n < 0) {
                throw std::invalid_argument("--n must be nonnegative");
            }
            require_truncation(n, trunc);
            Cell value;
            if (is_triangle_family(family)) {
                if (!fp.m) {
                    throw std::invalid_argument("--m is required for " + family);
                }
                value = family == "stirling1" ? families::stirling1(n, *fp.m) : families::stirling2(n, *fp.m);
            } else if (is_number_family(family)) {
                value = number_value(family, n, fp);
            } else {
                value = polynomial_rows(family, n, fp).back();
            }
            if (poly_format == "json") {
                out << report::dump(to_json(value));
            } else if (poly_format == "latex") {
                out << latex(value) << "\n";
            } else {
                out << plain(value) << "\n";
            }
            return exit_ok;
        }

        if (verify->parsed()) {
            return cmd_verify(selector, gf, jobs, trunc, report_path, out, err);
        }

        if (self->parsed()) {
            return selftest::run(out) ? exit_ok : exit_verify_failed;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace umbra::cli
