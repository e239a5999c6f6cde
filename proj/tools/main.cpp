// jacbound: certified Jacobian bounds for barycenter maps on quaternionic
// and Cayley hyperbolic spaces, plus the downstream homology-vanishing and
// critical-exponent decisions, with machine-verifiable interval output.
//
// Exit codes: 0 ok, 1 input error, 2 certification inconclusive,
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jacbound/bound_kernels.hpp"
#include "jacbound/decimal.hpp"
#include "jacbound/gap_engine.hpp"
#include "jacbound/matrix_checks.hpp"
#include "jacbound/optimizers.hpp"

using json = nlohmann::ordered_json;
using namespace jacbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitVerifyFailure = 3;
constexpr int kSigDigits = 12;

struct Output {
    std::string out_file;

    void emit(const std::string& text) const {
        if (out_file.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw Error(ErrorCode::ParamError, "cannot open output file " + out_file);
        f << text;
    }
};

Rat parse_rat_flag(const std::string& s, const char* flag) {
    try {
        return Rat::parse(s);
    } catch (const Error&) {
        throw Error(ErrorCode::ParseError, std::string(flag) + " expects a rational like 8, 16/3 or 0.25");
    }
}

// Renders a surd as a correctly rounded decimal: refine the enclosure until
// both endpoints agree on the displayed digits.
struct Rendered {
    std::string decimal;
    Interval enclosure;
};

Rendered render_surd(const Surd& s, int sig, unsigned start_prec) {
    for (unsigned prec = start_prec;; prec *= 2) {
        Interval iv = s.enclosure(prec);
        if (auto dec = decimal_from_interval(iv, sig)) return {*dec, iv};
        if (prec >= kMaxPrec)
            throw Error(ErrorCode::PrecisionExhausted, "decimal rendering undecided at max precision");
    }
}

json interval_json(const Interval& iv) {
    return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}};
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------- bounds --

int cmd_bounds(const Output& out, int d, int n, int j, const std::string& delta_str,
               bool certify, unsigned prec) {
    SpaceParams params(d, n, j);
    Rat delta = parse_rat_flag(delta_str, "--delta");
    EvalMode mode = certify ? EvalMode::certified(prec) : EvalMode::float64();
    BoundReport report = jacobian_bound(params, delta, mode);

    json doc;
    doc["command"] = "bounds";
    doc["params"] = {{"d", d}, {"n", n}, {"j", j}, {"delta", delta.str()},
                     {"certify", certify}, {"prec", certify ? prec : 0}};
    json results;
    results["degree"] = params.p;
    if (certify) {
        Rendered r = render_surd(report.exact, kSigDigits, prec);
        results["value"] = r.decimal;
        results["decimal_digits"] = kSigDigits;
        results["interval"] = interval_json(r.enclosure);
    } else {
        results["value"] = fmt_double(report.exact.to_double());
        results["decimal_digits"] = kSigDigits;
    }
    results["exact_form"] = report.exact.str();
    results["formula"] = formula_name(report.formula);
    results["certified_lt_one"] = cert_name(report.certified_lt_one);
    doc["results"] = std::move(results);
    out.emit(doc.dump(2) + "\n");
    return certify && report.certified_lt_one == Cert::Inconclusive ? kExitInconclusive : kExitOk;
}

// ------------------------------------------------------------- vanishing --

int cmd_vanishing(const Output& out, int d, int n, const std::string& format, unsigned prec) {
    VanishingReport report = vanishing_degrees(d, n, EvalMode::certified(prec));

    if (format == "csv") {
        std::ostringstream csv;
        csv << "degree,j,delta,bound_lo,bound_hi,certified\n";
        for (const DegreeRow& row : report.per_degree) {
            const Interval& iv = row.report.value.interval();
            csv << row.degree << "," << row.j << "," << report.delta_used.str() << ","
                << rat_to_sig(iv.lo, 15) << "," << rat_to_sig(iv.hi, 15) << ","
                << cert_name(row.report.certified_lt_one) << "\n";
        }
        out.emit(csv.str());
        return kExitOk;
    }

    json doc;
    doc["command"] = "vanishing";
    doc["params"] = {{"d", d}, {"n", n}, {"prec", prec}};
    json rows = json::array();
    for (const DegreeRow& row : report.per_degree) {
        Rendered r = render_surd(row.report.exact, kSigDigits, prec);
        rows.push_back({{"degree", row.degree},
                        {"j", row.j},
                        {"bound", r.decimal},
                        {"exact_form", row.report.exact.str()},
                        {"certified_lt_one", cert_name(row.report.certified_lt_one)},
                        {"interval", interval_json(r.enclosure)}});
    }
    json results;
    results["delta"] = report.delta_used.str();
    results["rows"] = std::move(rows);
    results["vanishing_degrees"] = json::array();
    for (int deg : report.vanishing_degrees) results["vanishing_degrees"].push_back(deg);
    doc["results"] = std::move(results);
    out.emit(doc.dump(2) + "\n");
    return kExitOk;
}

// -------------------------------------------------------------------- cn --

std::string limit_reference_decimal() {
    // both endpoints of the hardcoded enclosure agree on 11 digits
    return decimal_from_interval(seq_C_limit(), 11).value();
}

std::string seq_c_fixed(long n, int places) {
    Surd c = seq_C_exact(n);
    for (unsigned prec = kDefaultPrec;; prec *= 2) {
        if (auto dec = fixed_from_interval(c.enclosure(prec), places)) return *dec;
        if (prec >= kMaxPrec)
            throw Error(ErrorCode::PrecisionExhausted, "decimal rendering undecided");
    }
}

int cmd_cn_csv(const Output& out, long from, long to) {
    std::ostringstream csv;
    csv << "n,c_n,lt_one,comment\n";
    for (long n = from; n <= to; ++n) {
        // exact: C_n < 1 iff coeff^2 * 2 < 1
        bool lt_one = seq_C_exact(n).signed_square() < Rat(1);
        std::string comment;
        if (n == 1) comment = "above 1";
        if (n == 2) comment = "above 1; the n=2 bound comes from the explicit small-rank table instead";
        csv << n << "," << seq_c_fixed(n, 12) << "," << (lt_one ? "true" : "false")
            << "," << comment << "\n";
    }
    csv << "# limit sqrt(2)/e = " << limit_reference_decimal() << "\n";
    out.emit(csv.str());
    return kExitOk;
}

int cmd_cn_svg(const Output& out, long from, long to) {
    const double width = 800, height = 480, ml = 60, mr = 20, mt = 20, mb = 40;
    const double plot_w = width - ml - mr, plot_h = height - mt - mb;

    std::vector<double> values;
    for (long n = from; n <= to; ++n) values.push_back(seq_C_exact(n).to_double());
    double ymax = 0.0;
    for (double v : values) ymax = std::max(ymax, v);
    ymax = std::max(ymax * 1.05, 1.1);
    const double limit = seq_C_limit().midpoint().to_double();

    auto xpos = [&](double n) {
        if (to == from) return ml + plot_w / 2;
        return ml + (n - from) / double(to - from) * plot_w;
    };
    auto ypos = [&](double v) { return mt + (1.0 - v / ymax) * plot_h; };
    auto f2 = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    // axes
    svg << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + plot_h
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w
        << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // y tick labels at integers
    for (int tick = 0; tick <= static_cast<int>(ymax); ++tick) {
        svg << "  <text x=\"" << ml - 8 << "\" y=\"" << f2(ypos(tick) + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << tick
            << "</text>\n";
    }
    // reference lines at 1 and at the limit sqrt(2)/e
    svg << "  <line x1=\"" << ml << "\" y1=\"" << f2(ypos(1.0)) << "\" x2=\"" << ml + plot_w
        << "\" y2=\"" << f2(ypos(1.0))
        << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    svg << "  <line x1=\"" << ml << "\" y1=\"" << f2(ypos(limit)) << "\" x2=\"" << ml + plot_w
        << "\" y2=\"" << f2(ypos(limit))
        << "\" stroke=\"#4477aa\" stroke-width=\"1\" stroke-dasharray=\"2,3\"/>\n";
    svg << "  <text x=\"" << ml + plot_w - 4 << "\" y=\"" << f2(ypos(limit) - 5)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#4477aa\" text-anchor=\"end\">"
        << "limit sqrt(2)/e = " << limit_reference_decimal() << "</text>\n";
    // the C_n polyline and point markers
    svg << "  <polyline fill=\"none\" stroke=\"#cc3311\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) svg << " ";
        svg << f2(xpos(double(from + static_cast<long>(i)))) << "," << f2(ypos(values[i]));
    }
    svg << "\"/>\n";
    for (size_t i = 0; i < values.size(); ++i) {
        svg << "  <circle cx=\"" << f2(xpos(double(from + static_cast<long>(i)))) << "\" cy=\""
            << f2(ypos(values[i])) << "\" r=\"2.5\" fill=\"#cc3311\"/>\n";
    }
    // x labels at the ends
    svg << "  <text x=\"" << ml << "\" y=\"" << height - 12
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << from
        << "</text>\n";
    svg << "  <text x=\"" << ml + plot_w << "\" y=\"" << height - 12
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << to
        << "</text>\n";
    svg << "  <text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">n</text>\n";
    svg << "</svg>\n";
    out.emit(svg.str());
    return kExitOk;
}

// --------------------------------------------------------------- critexp --

int cmd_critexp(const Output& out, int d, int n, int hd, const std::string& epsilon_str,
                unsigned prec, long cap) {
    json doc;
    doc["command"] = "critexp";
    if (!epsilon_str.empty()) {
        Rat epsilon = parse_rat_flag(epsilon_str, "--epsilon");
        long n_eps = epsilon_threshold(d, epsilon, cap);
        doc["params"] = {{"d", d}, {"epsilon", epsilon.str()}, {"cap", cap}};
        doc["results"] = {{"n_epsilon", n_eps}};
        out.emit(doc.dump(2) + "\n");
        return kExitOk;
    }

    HomDimQuery q{d, n, hd};
    Rat kap = kapovich_bound(hd);
    doc["params"] = {{"d", d}, {"n", n}, {"hd", hd}, {"prec", prec}};

    std::string larger = "inconclusive";
    Interval enc;
    for (unsigned pr = prec;; pr *= 2) {
        enc = critical_exponent_enclosure(q, pr);
        if (enc.lo > kap) { larger = "cfm"; break; }
        if (enc.hi < kap) { larger = "kapovich"; break; }
        if (enc.is_point()) { if (enc.lo == kap) larger = "equal"; break; }
        if (pr >= kMaxPrec) break;
    }

    json results;
    std::string decimal =
        decimal_from_interval(enc, kSigDigits).value_or(rat_to_sig(enc.midpoint(), kSigDigits));
    results["cfm_bound"] = decimal;
    results["cfm_interval"] = interval_json(enc);
    results["kapovich_bound"] = kap.str();
    results["larger"] = larger;
    doc["results"] = std::move(results);
    out.emit(doc.dump(2) + "\n");
    return larger == "inconclusive" ? kExitInconclusive : kExitOk;
}

// ---------------------------------------------------------------- verify --

struct SuiteCase {
    std::string name;
    bool pass = false;
    double margin = 0.0;
    std::string detail;
};

json case_json(const SuiteCase& c) {
    json j{{"name", c.name}, {"pass", c.pass}, {"margin", c.margin}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

std::vector<SuiteCase> run_suite_factor(int grid) {
    std::vector<SuiteCase> cases;
    struct Shape {
        SpaceParams params;
        int grid;
    };
    std::vector<Shape> shapes{{SpaceParams(2, 2, 1), grid}, {SpaceParams(1, 3, 0), std::min(grid, 30)}};
    for (const Shape& s : shapes) {
        SimplexMax m = brute_force_simplex_max(s.params, s.grid);
        const int p = s.params.p, j = s.params.j;
        Rat cell(1, s.grid);
        Rat sum(0);
        bool shape_ok = true;
        auto group_spread_ok = [&](int lo, int hi) { // 1-based inclusive
            Rat mn = m.argmax[lo - 1], mx = m.argmax[lo - 1];
            for (int i = lo; i <= hi; ++i) {
                mn = std::min(mn, m.argmax[i - 1]);
                mx = std::max(mx, m.argmax[i - 1]);
            }
            return mx - mn <= cell;
        };
        if (j >= 1 && !group_spread_ok(1, j)) shape_ok = false;
        if (!group_spread_ok(j + 1, p)) shape_ok = false;
        for (int i = 0; i < p; ++i) sum += m.argmax[i];
        if (Rat(1) - sum > Rat(p, s.grid)) shape_ok = false;
        SuiteCase c;
        c.name = "factor argmax shape " + s.params.str() + " grid=" + std::to_string(s.grid);
        c.pass = shape_ok;
        c.margin = m.value.to_double();
        cases.push_back(c);
    }
    EachOptReport eo = each_opt_structure(2, 4, Rat(1, 2), EvalMode::float64(), std::min(grid, 40));
    SuiteCase c;
    c.name = "each-opt grid max at equal coordinates (d=2,k=4,sigma=1/2)";
    c.pass = eo.grid_checked && eo.grid_max_at_equal_point;
    cases.push_back(c);
    return cases;
}

std::vector<SuiteCase> run_suite_pest(unsigned prec) {
    std::vector<SuiteCase> cases;
    const std::vector<std::pair<int, int>> pairs{{2, 1}, {4, 1}, {8, 1}, {8, 2}, {8, 3}};
    for (auto [d, j] : pairs) {
        SpaceParams params(d, 2, j);
        MaxCertificate mc = max_P_certified(params, EvalMode::certified(prec));
        SuiteCase c;
        c.name = "P over-estimate matches table " + params.str();
        c.pass = mc.value_over_estimate == exceptional_P_bound(params);
        c.detail = mc.value_over_estimate.str();
        cases.push_back(c);
    }
    struct Bracket {
        int d, j;
        Rat lo, hi;
    };
    const std::vector<Bracket> brackets{{4, 1, Rat(4, 37), Rat(1, 9)},
                                        {8, 1, Rat(1, 17), Rat(12, 203)},
                                        {8, 2, Rat(1, 20), Rat(3, 50)},
                                        {8, 3, Rat(1, 20), Rat(7, 125)}};
    for (const Bracket& b : brackets) {
        SpaceParams params(b.d, 2, b.j);
        Rat width = (b.hi - b.lo) / Rat(64);
        RootBracket rb = isolate_Q_root(params, width);
        SuiteCase c;
        c.name = "root bracket inside published interval " + params.str();
        c.pass = b.lo < rb.interval.lo && rb.interval.hi < b.hi;
        c.detail = rb.interval.str();
        cases.push_back(c);
    }
    return cases;
}

std::vector<SuiteCase> run_suite_fiedler(int trials, std::uint64_t seed) {
    std::vector<SuiteCase> cases;
    double min_margin = std::numeric_limits<double>::infinity();
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed ^ static_cast<std::uint64_t>(t));
        int size = 2 + static_cast<int>(rng.next() % 7);      // 2..8
        int summands = 2 + static_cast<int>(rng.next() % 3);  // 2..4
        std::vector<Eigen::MatrixXd> mats;
        for (int s = 0; s < summands; ++s)
            mats.push_back(random_psd(rng, size, 0.25 + rng.uniform() * 4.0));
        FiedlerReport r = fiedler_check(mats);
        min_margin = std::min(min_margin, r.margin);
        if (!r.pass) ++failures;
    }
    SuiteCase c;
    c.name = "fiedler determinant inequality, " + std::to_string(trials) + " trials";
    c.pass = failures == 0;
    c.margin = min_margin;
    if (failures) c.detail = std::to_string(failures) + " failures";
    cases.push_back(c);
    return cases;
}

std::vector<SuiteCase> run_suite_matching(int trials, std::uint64_t seed) {
    std::vector<SuiteCase> cases;
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed ^ static_cast<std::uint64_t>(t));
        int len = 2 + static_cast<int>(rng.next() % 7); // 2..8
        std::vector<Rat> a, b;
        for (int i = 0; i < len; ++i) {
            a.push_back(Rat(static_cast<long>(rng.next() % 1000), 1000));
            b.push_back(Rat(static_cast<long>(rng.next() % 2000), 1000));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (!verify_sorted_matching(a, b).identity_minimal) ++failures;
    }
    SuiteCase c;
    c.name = "sorted matching minimality, " + std::to_string(trials) + " trials";
    c.pass = failures == 0;
    if (failures) c.detail = std::to_string(failures) + " failures";
    cases.push_back(c);
    return cases;
}

std::vector<SuiteCase> run_suite_kxw(int trials, std::uint64_t seed) {
    std::vector<SuiteCase> cases;
    struct Config {
        int d, nd, p_max;
    };
    for (const Config& cfg : {Config{2, 8, 8}, Config{4, 12, 6}}) {
        int per_p = std::max(1, trials / cfg.p_max);
        for (int p = 1; p <= cfg.p_max; ++p) {
            KxwReport r = kxw_inequality_check(cfg.d, cfg.nd, p, per_p,
                                               seed ^ (static_cast<std::uint64_t>(p) << 32));
            SuiteCase c;
            c.name = "kxw determinant bound d=" + std::to_string(cfg.d) + " nd=" +
                     std::to_string(cfg.nd) + " p=" + std::to_string(p) + " trials=" +
                     std::to_string(per_p);
            c.pass = r.pass;
            c.margin = r.min_margin;
            c.detail = r.first_failure;
            cases.push_back(c);
        }
    }
    return cases;
}

int cmd_verify(const Output& out, const std::string& suite, std::uint64_t seed, int grid,
               int trials, unsigned prec) {
    json doc;
    doc["command"] = "verify";
    doc["params"] = {{"suite", suite}, {"seed", seed}, {"grid", grid}, {"trials", trials}};

    std::vector<std::pair<std::string, std::vector<SuiteCase>>> suites;
    bool all = suite == "all";
    if (all || suite == "factor") suites.emplace_back("factor", run_suite_factor(grid));
    if (all || suite == "pest") suites.emplace_back("pest", run_suite_pest(prec));
    if (all || suite == "fiedler") suites.emplace_back("fiedler", run_suite_fiedler(trials, seed));
    if (all || suite == "matching") suites.emplace_back("matching", run_suite_matching(trials, seed));
    if (all || suite == "kxw") suites.emplace_back("kxw", run_suite_kxw(trials, seed));
    if (suites.empty())
        throw Error(ErrorCode::ParamError,
                    "unknown suite '" + suite + "'; expected factor|pest|fiedler|matching|kxw|all");

    int passed = 0, failed = 0;
    json suites_json = json::array();
    for (const auto& [name, cases] : suites) {
        json cases_json = json::array();
        int sp = 0, sf = 0;
        for (const SuiteCase& c : cases) {
            cases_json.push_back(case_json(c));
            (c.pass ? sp : sf)++;
        }
        suites_json.push_back({{"suite", name}, {"cases", cases_json}, {"passed", sp}, {"failed", sf}});
        passed += sp;
        failed += sf;
    }
    json results;
    results["suites"] = std::move(suites_json);
    results["passed"] = passed;
    results["failed"] = failed;
    doc["results"] = std::move(results);
    out.emit(doc.dump(2) + "\n");
    return failed == 0 ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Jacobian bounds, homology-vanishing degrees and "
                 "critical-exponent estimates for rank-one hyperbolic spaces"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--out", out.out_file, "write output to a file instead of stdout");

    int d = 4, n = 2, j = 1, hd = 0;
    std::string delta_str = "8", vanishing_format = "json", cn_format = "csv";
    std::string epsilon_str, suite = "all";
    bool certify = false;
    unsigned prec = kDefaultPrec;
    long from = 1, to = 34, cap = 1000000;
    std::uint64_t seed = 1;
    int grid = 40, trials = 200;

    auto* bounds = app.add_subcommand("bounds", "Jacobian bound for one (d, n, j, delta)");
    bounds->add_option("--d", d, "dim_R K: 1, 2, 4 or 8")->required();
    bounds->add_option("--n", n, "rank")->required();
    bounds->add_option("--j", j, "codimension")->required();
    bounds->add_option("--delta", delta_str, "critical exponent (rational)")->required();
    bounds->add_flag("--certify", certify, "certify the bound against 1 with intervals");
    bounds->add_option("--prec", prec, "interval precision in bits (default 128)");

    auto* vanishing = app.add_subcommand("vanishing", "certified homology-vanishing degrees");
    vanishing->add_option("--d", d, "4 (quaternionic) or 8 (Cayley plane)")->required();
    vanishing->add_option("--n", n, "rank")->required();
    vanishing->add_option("--format", vanishing_format, "json or csv");
    vanishing->add_option("--prec", prec, "interval precision in bits");

    auto* cn = app.add_subcommand("cn", "the upper-bound sequence C_n");
    cn->add_option("--from", from, "first n")->required();
    cn->add_option("--to", to, "last n")->required();
    cn->add_option("--format", cn_format, "csv or svg");

    auto* critexp = app.add_subcommand("critexp", "critical exponent vs homological dimension");
    critexp->add_option("--d", d, "dim_R K")->required();
    critexp->add_option("--n", n, "rank");
    critexp->add_option("--hd", hd, "homological dimension");
    critexp->add_option("--epsilon", epsilon_str, "find smallest n with bound >= hd-2+d-epsilon");
    critexp->add_option("--prec", prec, "interval precision in bits");
    critexp->add_option("--cap", cap, "search cap for --epsilon");

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite, "factor|pest|fiedler|matching|kxw|all");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--grid", grid, "grid resolution for the factor suite");
    verify->add_option("--trials", trials, "trial count for randomized suites");
    verify->add_option("--prec", prec, "interval precision in bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (prec < 16 || prec > 65536)
            throw Error(ErrorCode::ParamError, "--prec must lie in [16, 65536]");
        if (bounds->parsed()) return cmd_bounds(out, d, n, j, delta_str, certify, prec);
        if (vanishing->parsed()) {
            if (vanishing_format != "json" && vanishing_format != "csv")
                throw Error(ErrorCode::ParamError, "--format must be json or csv");
            return cmd_vanishing(out, d, n, vanishing_format, prec);
        }
        if (cn->parsed()) {
            if (from < 1 || to < from || to > 10000)
                throw Error(ErrorCode::ParamError, "need 1 <= from <= to <= 10000");
            if (cn_format == "csv") return cmd_cn_csv(out, from, to);
            if (cn_format == "svg") return cmd_cn_svg(out, from, to);
            throw Error(ErrorCode::ParamError, "--format must be csv or svg");
        }
        if (critexp->parsed()) return cmd_critexp(out, d, n, hd, epsilon_str, prec, cap);
        if (verify->parsed()) return cmd_verify(out, suite, seed, grid, trials, prec);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
