#include "apcore/cli.hpp"

#include <chrono>
#include <ctime>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "apcore/abacus.hpp"
#include "apcore/congruence.hpp"
#include "apcore/enumeration.hpp"
#include "apcore/genfun.hpp"
#include "apcore/partition.hpp"

namespace apcore::cli {

using nlohmann::json;

namespace {

constexpr std::size_t default_trunc = 500;

json big_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Options {
    bool timestamp = true;
};

json make_meta(const Options& opts, const std::string& command, json inputs)
{
    json meta{{"command", command}, {"inputs", std::move(inputs)}};
    if (opts.timestamp)
        meta["timestamp"] = utc_timestamp();
    return meta;
}

class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- count ---------------------------------------------------------------

struct CountArgs {
    std::uint64_t s = 0, t = 0;
    std::optional<std::uint64_t> p, max_n;
    std::string format = "text";
};

int cmd_count(const CountArgs& a, const Options& opts, std::ostream& out)
{
    const HookProgression hooks(a.s, a.t, a.p);
    std::string route;
    TruncatedSeries counts(0);
    std::optional<BigInt> total;

    if (a.max_n) {
        if (a.p) {
            route = to_string(GenFunRoute::BruteForce);
            const auto c = enumerate_cores(hooks, *a.max_n);
            counts = TruncatedSeries(c, *a.max_n);
        } else {
            GenFunRoute r;
            counts = gf_composite(a.s, a.t, *a.max_n, &r);
            route = to_string(r);
        }
    } else {
        if (!hooks.finite())
            throw std::invalid_argument("infinitely many partitions avoid " + hooks.to_string() +
                                        "; pass --max-n for a truncated count");
        if (a.p || a.s == 1) {
            route = to_string(GenFunRoute::BruteForce);
            total = total_core_count(hooks);
        } else {
            route = to_string(GenFunRoute::ClosedForm);
            total = fayers_count(a.s, a.t);
        }
    }

    json inputs{{"s", a.s}, {"t", a.t}};
    if (a.p)
        inputs["p"] = *a.p;
    if (a.max_n)
        inputs["max_n"] = *a.max_n;

    if (a.format == "json") {
        json doc = total ? json{{"schema", 1}, {"meta", make_meta(opts, "count", inputs)}, {"count", big_json(*total)}}
                         : series_json(counts, make_meta(opts, "count", inputs));
        doc["meta"]["route"] = route;
        doc["meta"]["hooks"] = hooks.to_string();
        out << doc.dump(2) << '\n';
    } else if (a.format == "csv") {
        if (total)
            out << "count\n" << total->get_str() << '\n';
        else
            write_csv(out, counts);
    } else {
        out << "hooks: " << hooks.to_string() << '\n' << "route: " << route << '\n';
        if (total) {
            out << "count: " << total->get_str() << '\n';
        } else {
            for (std::size_t n = 0; n <= counts.trunc(); ++n)
                out << "c(" << n << ") = " << counts[n].get_str() << '\n';
        }
    }
    return Success;
}

// ---- genfun --------------------------------------------------------------

struct GenfunArgs {
    std::uint64_t s = 0, t = 0;
    std::size_t trunc = default_trunc;
    std::string format = "csv";
};

int cmd_genfun(const GenfunArgs& a, const Options& opts, std::ostream& out)
{
    GenFunRoute route;
    const auto series = gf_composite(a.s, a.t, a.trunc, &route);
    if (a.format == "json") {
        auto meta = make_meta(opts, "genfun", {{"s", a.s}, {"t", a.t}, {"trunc", a.trunc}});
        meta["route"] = to_string(route);
        out << series_json(series, meta).dump(2) << '\n';
    } else {
        write_csv(out, series);
    }
    return Success;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    bool catalogue = false;
    std::size_t trunc = default_trunc;
    std::uint64_t p = 2, k = 1, l = 1;
    std::uint64_t tmax = 12, smax = 12;
};

void line(std::ostream& out, bool ok, const std::string& what)
{
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
}

bool report_check(std::ostream& out, const CheckReport& r)
{
    line(out, r.passed(), r.name + " (" + std::to_string(r.checked) + " cases)");
    for (const auto& f : r.failures)
        out << "  " << f << '\n';
    return r.passed();
}

int cmd_verify(VerifyArgs a, std::ostream& out)
{
    if (a.catalogue)
        a.suite = a.suite.empty() ? "catalogue" : a.suite;
    if (a.suite.empty())
        throw std::invalid_argument("verify needs a suite name or --catalogue");
    const std::string order = " [verified to order " + std::to_string(a.trunc) + "]";
    bool ok = true;
    const std::string& s = a.suite;
    const bool all = s == "all";
    bool known = all;

    if (all || s == "catalogue") {
        known = true;
        const auto report = verify_paper_congruences(a.trunc);
        for (const auto& e : report.entries) {
            std::string what = e.label + ": " + e.congruence.to_string() + order;
            if (!e.status.verified)
                what += " refuted at n=" + std::to_string(*e.status.witness) + " (c = " +
                        e.status.witness_value.get_str() + ")";
            line(out, e.status.verified, what);
        }
        ok = ok && report.passed();
    }
    if (s == "dream") {
        known = true;
        const bool r = verify_dream_cong(a.p, a.k, a.l, a.trunc);
        line(out, r, "dream congruence p=" + std::to_string(a.p) + " k=" + std::to_string(a.k) +
                         " l=" + std::to_string(a.l) + order);
        ok = ok && r;
    }
    if (all) {
        for (auto [p, k, l] : {std::tuple{2u, 1u, 1u}, {3u, 1u, 1u}, {3u, 1u, 3u}, {3u, 2u, 1u}, {2u, 2u, 1u}}) {
            const bool r = verify_dream_cong(p, k, l, a.trunc);
            line(out, r, "dream congruence p=" + std::to_string(p) + " k=" + std::to_string(k) +
                             " l=" + std::to_string(l) + order);
            ok = ok && r;
        }
    }
    if (all || s == "pentagonal") {
        known = true;
        const bool r = pentagonal_series(a.trunc) == pochhammer(1, 1, a.trunc);
        line(out, r, "pentagonal number theorem" + order);
        ok = ok && r;
    }
    if (all || s == "jacobi") {
        known = true;
        const bool r = jacobi_cube(a.trunc) == pochhammer(1, 3, a.trunc);
        line(out, r, "Jacobi cube identity" + order);
        ok = ok && r;
    }
    if (all || s == "xia-yao") {
        known = true;
        const bool r1 = verify_xia_yao(a.trunc);
        const bool r2 = verify_xia_yao_corollary(a.trunc);
        line(out, r1, "2-dissection of (q^9;q^9)/(q;q)" + order);
        line(out, r2, "2-dissection corollary mod 3" + order);
        ok = ok && r1 && r2;
    }
    if (all || s == "robbins") {
        known = true;
        const bool r = robbins_2core3_check(a.trunc);
        line(out, r, "3-cores mod 2 against n(3n-2) exponents" + order);
        ok = ok && r;
    }
    if (all || s == "g-recurrence") {
        known = true;
        ok = report_check(out, check_g_recurrence(a.tmax, a.smax)) && ok;
    }
    if (all || s == "f-recurrence") {
        known = true;
        ok = report_check(out, check_f_recurrence(a.tmax)) && ok;
    }
    if (all || s == "constant-term") {
        known = true;
        ok = report_check(out, check_constant_term(a.tmax)) && ok;
    }
    if (all || s == "shape") {
        known = true;
        ok = report_check(out, check_fayers_shape(a.tmax)) && ok;
    }
    if (all || s == "conjecture2") {
        known = true;
        // open conjecture: reported, never a failure
        for (const auto& row : check_conjecture2(a.tmax))
            out << "INFO f_" << row.t << "(" << row.root.get_str() << ") = " << row.value.get_str()
                << (row.vanishes() ? " (root)" : " (not a root)") << '\n';
    }
    if (!known)
        throw std::invalid_argument("unknown verify suite '" + s + "'");
    return ok ? Success : Refuted;
}

// ---- scan ----------------------------------------------------------------

struct ScanArgs {
    std::uint64_t s = 0, t = 0, mod = 2, amax = 20;
    std::size_t trunc = default_trunc;
    std::string format = "text";
};

int cmd_scan(const ScanArgs& a, const Options& opts, std::ostream& out)
{
    const auto series = gf_composite(a.s, a.t, a.trunc);
    const auto hits = scan_ap_zero(series, a.mod, a.amax, a.trunc);
    if (a.format == "json") {
        json rows = json::array();
        for (const auto& h : hits)
            rows.push_back({{"period", h.period},
                            {"residues", h.residues},
                            {"modulus", h.modulus},
                            {"status", "verified-to-" + std::to_string(a.trunc)}});
        json doc{{"schema", 1},
                 {"meta", make_meta(opts, "scan",
                                    {{"s", a.s}, {"t", a.t}, {"mod", a.mod}, {"amax", a.amax}, {"trunc", a.trunc}})},
                 {"rows", rows}};
        doc["meta"]["heuristic"] = true;
        out << doc.dump(2) << '\n';
    } else {
        out << "# heuristic: each progression holds through order " << a.trunc << ", not proved\n";
        for (const auto& h : hits)
            out << h.to_string() << '\n';
    }
    return Success;
}

// ---- fayers --------------------------------------------------------------

int cmd_fayers(std::uint64_t t, std::optional<std::uint64_t> s, std::ostream& out)
{
    const auto f = fayers_poly(t);
    out << "f_" << t << "(s) = " << f.to_string() << '\n';
    out << "coefficients (constant first):";
    for (const auto& c : f.coeffs())
        out << ' ' << c.get_str();
    out << '\n';
    if (s) {
        out << "f_" << t << "(" << *s << ") = " << f(BigInt(*s)).get_str() << '\n';
        if (std::gcd(*s, t) == 1) {
            out << "count 2^(s-t) f_t(s)/t! = " << fayers_count(*s, t).get_str() << '\n';
            out << "binomial-sum count = " << chs_large_p(*s, t).get_str() << '\n';
        } else {
            out << "gcd(s, t) > 1: infinitely many cores\n";
        }
    }
    return Success;
}

// ---- abacus --------------------------------------------------------------

int cmd_abacus(const std::string& spec, std::uint64_t d, std::ostream& out)
{
    const Partition lambda = Partition::parse(spec);
    const auto beads = from_partition(lambda);
    out << "partition: " << lambda.to_string() << '\n';
    out << "beads:";
    for (auto x : beads.beads())
        out << ' ' << x;
    out << '\n';
    out << render(runner_view(beads, d));
    return Success;
}

} // namespace

void write_csv(std::ostream& os, const TruncatedSeries& series)
{
    os << "n,coefficient\n";
    for (std::size_t n = 0; n <= series.trunc(); ++n)
        os << n << ',' << series[n].get_str() << '\n';
}

json series_json(const TruncatedSeries& series, json meta)
{
    json rows = json::array();
    for (std::size_t n = 0; n <= series.trunc(); ++n)
        rows.push_back(json::array({n, big_json(series[n])}));
    meta["trunc"] = series.trunc();
    return json{{"schema", 1}, {"meta", std::move(meta)}, {"rows", std::move(rows)}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cores avoiding arithmetic progressions of hook lengths", "apcore"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp from JSON metadata");

    CountArgs count;
    auto* c = app.add_subcommand("count", "Count cores avoiding {s, s+t, ...}");
    c->add_option("--s", count.s, "First avoided hook")->required()->check(CLI::PositiveNumber);
    c->add_option("--t", count.t, "Common difference")->required()->check(CLI::PositiveNumber);
    c->add_option("--p", count.p, "Finite cutoff: avoid s, s+t, ..., s+pt (brute force)");
    c->add_option("--max-n", count.max_n, "Report c(0..max_n) instead of the total");
    c->add_option("--format", count.format)->check(CLI::IsMember({"text", "csv", "json"}));

    GenfunArgs gen;
    auto* g = app.add_subcommand("genfun", "Generating function coefficients");
    g->add_option("--s", gen.s)->required()->check(CLI::PositiveNumber);
    g->add_option("--t", gen.t)->required()->check(CLI::PositiveNumber);
    g->add_option("--trunc", gen.trunc, "Truncation order")->capture_default_str();
    g->add_option("--format", gen.format)->check(CLI::IsMember({"csv", "json"}));

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Check identities and congruences to a finite order");
    v->add_option("suite", ver.suite,
                  "catalogue, dream, pentagonal, jacobi, xia-yao, robbins, g-recurrence, f-recurrence, "
                  "constant-term, shape, conjecture2 or all");
    v->add_flag("--catalogue", ver.catalogue, "Run the congruence catalogue");
    v->add_option("--trunc", ver.trunc)->capture_default_str();
    v->add_option("--p", ver.p);
    v->add_option("--k", ver.k);
    v->add_option("--l", ver.l);
    v->add_option("--tmax", ver.tmax)->capture_default_str();
    v->add_option("--smax", ver.smax)->capture_default_str();

    ScanArgs sc;
    auto* s = app.add_subcommand("scan", "Search for vanishing arithmetic progressions");
    s->add_option("--s", sc.s)->required()->check(CLI::PositiveNumber);
    s->add_option("--t", sc.t)->required()->check(CLI::PositiveNumber);
    s->add_option("--mod", sc.mod, "Modulus; 0 means exact vanishing")->capture_default_str();
    s->add_option("--amax", sc.amax)->capture_default_str()->check(CLI::PositiveNumber);
    s->add_option("--trunc", sc.trunc)->capture_default_str();
    s->add_option("--format", sc.format)->check(CLI::IsMember({"text", "json"}));

    std::uint64_t fay_t = 1;
    std::optional<std::uint64_t> fay_s;
    auto* f = app.add_subcommand("fayers", "Polynomial f_t(s) and the derived counts");
    f->add_option("--t", fay_t)->required()->check(CLI::PositiveNumber);
    f->add_option("--s", fay_s)->check(CLI::PositiveNumber);

    std::string abacus_spec;
    std::uint64_t abacus_d = 3;
    auto* ab = app.add_subcommand("abacus", "Print the d-runner abacus of a partition");
    ab->add_option("partition", abacus_spec, "Comma-separated parts, e.g. 5,3,3 (empty or 0 for the empty partition)")
        ->required();
    ab->add_option("--d", abacus_d, "Number of runners")->capture_default_str()->check(CLI::PositiveNumber);

    std::vector<std::string> argv_storage{"apcore"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return Success;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return UsageError;
    }
    opts.timestamp = !no_timestamp;

    try {
        if (c->parsed())
            return cmd_count(count, opts, out);
        if (g->parsed())
            return cmd_genfun(gen, opts, out);
        if (v->parsed())
            return cmd_verify(ver, out);
        if (s->parsed())
            return cmd_scan(sc, opts, out);
        if (f->parsed())
            return cmd_fayers(fay_t, fay_s, out);
        if (ab->parsed())
            return cmd_abacus(abacus_spec, abacus_d, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::logic_error& e) {
        err << "assertion failed: " << e.what() << '\n';
        return Refuted;
    }
    return UsageError;
}

} // namespace apcore::cli
