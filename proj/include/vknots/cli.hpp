#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vknots/vknots.hpp"

namespace vknots::cli {

struct RunConfig {
    NumericConfig numeric;
    EngineLimits limits;
    std::string format = "csv";  // csv | json
    std::string corpus_path;     // empty = bundled corpus
    std::string out_path;        // empty = stdout
    std::optional<double> tolerance_override;

    /// Convergence target for approximate-mode checks.
    double approx_tolerance() const { return tolerance_override.value_or(1e-6); }
};

namespace detail {

struct LinkData {
    std::string name;
    std::optional<PDCode> pd;
    std::optional<BraidWord> braid;
    std::optional<TwoVarLaurent> kauffman_F;
    int components = 1;
};

inline LinkData resolve_link(const std::string& ref, const std::vector<CorpusEntry>& corpus) {
    LinkData out;
    if (ref.rfind("pd:", 0) == 0) {
        out.name = "inline";
        out.pd = parse_pd(ref.substr(3));
        out.components = components(*out.pd);
        return out;
    }
    if (ref.rfind("braid:", 0) == 0) {
        out.name = "inline";
        out.braid = parse_braid(ref.substr(6));
        out.components = components(*out.braid);
        return out;
    }
    const CorpusEntry& e = find_entry(corpus, ref);
    out.name = e.name;
    out.pd = e.pd;
    out.braid = e.braid;
    out.kauffman_F = e.kauffman_F;
    out.components = e.components;
    return out;
}

inline JonesPolynomial jones_of(const LinkData& link, const EngineLimits& limits) {
    if (link.pd) return jones(*link.pd, limits);
    return jones(*link.braid, limits);
}

inline PDCode pd_of(const LinkData& link) {
    if (link.pd) return *link.pd;
    return braid_to_pd(*link.braid).pd;
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path: " + cfg.out_path);
    f << text;
}

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace detail

inline int cmd_compute(const RunConfig& cfg, const std::string& link_ref, const std::string& which,
                       std::ostream& out, std::ostream& err) {
    auto corpus = cfg.corpus_path.empty() ? bundled_corpus() : load_corpus(cfg.corpus_path);
    detail::LinkData link = detail::resolve_link(link_ref, corpus);
    std::string text;
    if (which == "jones") {
        text = detail::jones_of(link, cfg.limits).poly.to_json().dump() + "\n";
    } else if (which == "homfly" || which == "alexander") {
        if (!link.braid)
            throw std::invalid_argument(which + " needs a braid presentation; '" + link.name +
                                        "' has none");
        HomflyPolynomial h = homfly(*link.braid, cfg.limits);
        text = (which == "homfly") ? h.poly.to_json().dump() + "\n"
                                   : alexander(h).to_json().dump() + "\n";
    } else if (which == "qpoly") {
        if (!link.kauffman_F)
            throw std::invalid_argument("entry '" + link.name +
                                        "' has no ingested kauffman_F data");
        text = q_polynomial(*link.kauffman_F, link.components).to_json().dump() + "\n";
    } else {
        err << "unknown polynomial '" << which << "'\n";
        return 2;
    }
    detail::emit(cfg, text, out);
    return 0;
}

inline int cmd_approximate(const RunConfig& cfg, const std::string& link_ref, int n,
                           const std::string& mode, int d, int order, std::ostream& out,
                           std::ostream& err) {
    auto corpus = cfg.corpus_path.empty() ? bundled_corpus() : load_corpus(cfg.corpus_path);
    detail::LinkData link = detail::resolve_link(link_ref, corpus);
    JonesPolynomial j = detail::jones_of(link, cfg.limits);

    if (mode == "finite") {
        VassilievSequence v =
            vassiliev_from_laurent(j.poly, 2 * d, std::nullopt, link.name);
        Rational value = reconstruct_finite(v, d, n);
        std::optional<Rational> ref = v.source_coefficient(n);
        std::ostringstream csv;
        csv << "order,partial_sum_re,partial_sum_im,abs_error\n";
        Rational error = ref ? value - *ref : Rational(0);
        if (error < 0) error = -error;
        csv << d << "," << value.get_str() << ",0," << error.get_str() << "\n";
        detail::emit(cfg, csv.str(), out);
        return (ref && value != *ref) ? 1 : 0;
    }
    if (mode == "infinite") {
        VassilievSequence v =
            vassiliev_from_laurent(j.poly, order, std::nullopt, link.name);
        ReconstructionReport report = reconstruct_infinite(v, n, order, cfg.numeric.precision);
        detail::emit(cfg, report.to_csv(), out);
        if (report.reference) {
            RealHP tol(cfg.numeric.precision);
            mpfr_set_d(tol.raw(), cfg.approx_tolerance(), MPFR_RNDN);
            if (!report.first_order_within(tol)) return 1;
        }
        return 0;
    }
    err << "unknown mode '" << mode << "'\n";
    return 2;
}

inline int cmd_tables(const RunConfig& cfg, const std::string& link_ref, bool all,
                      std::ostream& out, std::ostream& err) {
    auto corpus = cfg.corpus_path.empty() ? bundled_corpus() : load_corpus(cfg.corpus_path);
    std::vector<detail::LinkData> links;
    if (all) {
        for (const auto& e : corpus) links.push_back(detail::resolve_link(e.name, corpus));
    } else {
        links.push_back(detail::resolve_link(link_ref, corpus));
    }
    std::ostringstream text;
    bool ok = true;
    nlohmann::json json_out = nlohmann::json::array();
    for (const auto& link : links) {
        JonesPolynomial j = detail::jones_of(link, cfg.limits);
        PDCode pd = detail::pd_of(link);
        EvaluationReport t1 = table1_report(link.name, j, pd, cfg.numeric);
        ok = ok && t1.all_match();
        std::optional<EvaluationReport> t2;
        if (link.kauffman_F) {
            HalfGridLaurent q = q_polynomial(*link.kauffman_F, link.components);
            t2 = table2_report(link.name, q, link.components, pd, cfg.numeric);
            ok = ok && t2->all_match();
        }
        // identity checks beyond the tables
        std::string identity_note;
        try {
            tricolorings(j, pd, cfg.numeric);
            if (link.braid) {
                HomflyPolynomial h = homfly(*link.braid, cfg.limits);
                h1_sigma3_z2(h, cfg.numeric);
                if (link.components == 1) {
                    Integer det2 = h1_sigma_n(alexander(h), 2, cfg.numeric);
                    if (det2 != coloring_minor_determinant(pd)) {
                        ok = false;
                        identity_note = "h1_sigma_2 determinant mismatch";
                    }
                }
            }
        } catch (const std::exception& ex) {
            ok = false;
            identity_note = ex.what();
        }
        if (cfg.format == "json") {
            nlohmann::json entry;
            entry["table1"] = t1.to_json();
            if (t2) entry["table2"] = t2->to_json();
            if (!identity_note.empty()) entry["identity_error"] = identity_note;
            json_out.push_back(entry);
        } else {
            text << t1.to_csv();
            if (t2) text << t2->to_csv();
            if (!link.kauffman_F) text << link.name << ",,,,,,q_table_skipped,no kauffman_F,,\n";
            if (!identity_note.empty())
                text << link.name << ",,,,,,identity_error," << identity_note << ",,\n";
        }
    }
    detail::emit(cfg, cfg.format == "json" ? json_out.dump(2) + "\n" : text.str(), out);
    if (!ok) err << "tables: oracle mismatch\n";
    return ok ? 0 : 1;
}

inline int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out,
                      std::ostream& err) {
    auto corpus = cfg.corpus_path.empty() ? bundled_corpus() : load_corpus(cfg.corpus_path);
    bool ok = true;
    std::ostringstream text;

    auto corpus_knot_jones = [&](auto&& fn) {
        for (const auto& e : corpus) {
            if (e.components != 1) continue;
            detail::LinkData link = detail::resolve_link(e.name, corpus);
            fn(e.name, detail::jones_of(link, cfg.limits).poly);
        }
    };

    if (suite == "kronecker") {
        for (int d = 0; d <= 6 && ok; ++d)
            for (int n = -d; n <= d && ok; ++n) {
                GeneratingPolynomial fi = finite_gen_fn(d, n, Grid::integer);
                GeneratingPolynomial fh = finite_gen_fn(d, n, Grid::half);
                for (int m = -d; m <= d; ++m) {
                    Rational want(m == n ? 1 : 0);
                    Rational half_node(m, 2);
                    half_node.canonicalize();
                    if (fi.eval(Rational(m)) != want || fh.eval(half_node) != want) ok = false;
                }
            }
        for (int n = -12; n <= 12; ++n)
            for (int m = -12; m <= 12; ++m)
                if (sinc_closed_form_at_grid(n, m) != Rational(m == n ? 1 : 0)) ok = false;
        text << "kronecker: " << (ok ? "OK" : "FAIL")
             << " (finite d<=6 both grids, closed form |m|<=12)\n";
    } else if (suite == "stability") {
        corpus_knot_jones([&](const std::string& name, const HalfGridLaurent& poly) {
            int deg = VassilievSequence::degree_on_grid(poly, Grid::integer);
            VassilievSequence v = vassiliev_from_laurent(poly, 2 * (deg + 3));
            VandermondeSolution base = vandermonde_solve(v, deg);
            for (int d = deg + 1; d <= deg + 3; ++d) {
                VandermondeSolution s = vandermonde_solve(v, d);
                for (int k = -d; k <= d; ++k) {
                    Rational want = (k >= -deg && k <= deg) ? base.at_index(k) : Rational(0);
                    if (s.at_index(k) != want) ok = false;
                }
            }
            for (int k = -deg; k <= deg; ++k)
                if (base.at_index(k) != poly.coeff_at_exponent(k)) ok = false;
            text << "stability " << name << ": " << (ok ? "OK" : "FAIL") << "\n";
        });
    } else if (suite == "skein") {
        detail::SplitMix rng{20240817};
        for (int c = 0; c < 100; ++c) {
            BraidWord b;
            b.strands = 4;
            long len = rng.range(1, 10);
            for (long i = 0; i < len; ++i) {
                int g = static_cast<int>(rng.range(1, 3));
                b.word.push_back(rng.range(0, 1) ? g : -g);
            }
            std::size_t pos = static_cast<std::size_t>(rng.range(0, len - 1));
            if (!skein_check(b, pos, cfg.limits)) {
                ok = false;
                text << "skein FAIL at " << serialize_braid(b) << " pos " << pos << "\n";
            }
        }
        text << "skein: " << (ok ? "OK" : "FAIL") << " (100 random positions)\n";
    } else if (suite == "twist") {
        try {
            TwistSequenceReport r = twist_sequence_report(6, cfg.limits);
            text << r.to_csv();
            text << "twist: OK (m <= 6)\n";
        } catch (const std::exception& ex) {
            ok = false;
            text << "twist: FAIL (" << ex.what() << ")\n";
        }
    } else if (suite == "consistency") {
        corpus_knot_jones([&](const std::string& name, const HalfGridLaurent& poly) {
            int deg = VassilievSequence::degree_on_grid(poly, Grid::integer);
            VassilievSequence v = vassiliev_from_laurent(poly, std::max(12, 2 * deg));
            for (int i = 0; i <= 12; ++i)
                if (vassiliev_consistency(v, deg, i) != v.values[static_cast<std::size_t>(i)])
                    ok = false;
            text << "consistency " << name << ": " << (ok ? "OK" : "FAIL") << "\n";
        });
    } else if (suite == "degree") {
        detail::LinkData tref = detail::resolve_link("trefoil", corpus);
        VassilievSequence v =
            vassiliev_from_laurent(detail::jones_of(tref, cfg.limits).poly, 20);
        DegreeEstimate est = degree_estimate(v, 20, cfg.numeric.precision);
        double rel = est.value.to_double() / 4.0 - 1.0;
        if (est.vanished || rel > 0.01 || rel < -0.01) ok = false;
        text << "degree trefoil n=20: " << est.value.str(10) << (ok ? " OK" : " FAIL") << "\n";
        for (int dd : {1, 2, 5}) {
            VassilievSequence m = vassiliev_from_laurent(HalfGridLaurent::monomial(2 * dd), 12);
            for (int n = 1; n <= 12; ++n) {
                DegreeEstimate e2 = degree_estimate(m, n, cfg.numeric.precision);
                RealHP diff = (e2.value - RealHP(dd, cfg.numeric.precision)).abs();
                if (!(diff < RealHP::pow2(-60, cfg.numeric.precision))) ok = false;
            }
        }
        text << "degree t^d exactness: " << (ok ? "OK" : "FAIL") << "\n";
    } else {
        err << "unknown verify suite '" << suite << "'\n";
        return 2;
    }
    detail::emit(cfg, text.str(), out);
    return ok ? 0 : 1;
}

/// Entry point shared by the binary and the tests.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"link polynomial invariants and their Vassiliev approximations"};
    app.require_subcommand(1);

    RunConfig cfg;
    long precision = 128;
    app.add_option("--precision", precision, "working precision in bits (>= 64)")
        ->envname("VKNOTS_PRECISION");
    double tolerance = 0.0;
    auto* tol_opt = app.add_option("--tolerance", tolerance,
                                   "override convergence tolerance for approximate checks")
                        ->envname("VKNOTS_TOLERANCE");
    app.add_option("--format", cfg.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("VKNOTS_FORMAT");
    app.add_option("--corpus", cfg.corpus_path, "path to a corpus JSON file")
        ->envname("VKNOTS_CORPUS");
    app.add_option("--max-crossings", cfg.limits.max_crossings, "bracket crossing limit")
        ->envname("VKNOTS_MAX_CROSSINGS");
    app.add_option("--max-strands", cfg.limits.max_strands, "braid strand limit")
        ->envname("VKNOTS_MAX_STRANDS");
    app.add_option("--max-word", cfg.limits.max_word, "braid word length limit")
        ->envname("VKNOTS_MAX_WORD");
    app.add_option("--out", cfg.out_path, "write output to this path instead of stdout")
        ->envname("VKNOTS_OUT");

    std::string link_ref, which, mode = "finite", suite;
    int n = 0, d = 0, order = 0;
    bool all = false;

    auto* compute = app.add_subcommand("compute", "print a link polynomial");
    compute->fallthrough();
    compute->add_option("link", link_ref, "corpus name, 'pd:...' or 'braid:...'")->required();
    compute->add_option("which", which, "jones | homfly | alexander | qpoly")->required();

    auto* approximate =
        app.add_subcommand("approximate", "reconstruct a coefficient from Vassiliev data");
    approximate->fallthrough();
    approximate->add_option("link", link_ref)->required();
    approximate->add_option("--n", n, "target coefficient index")->required();
    approximate->add_option("--mode", mode, "finite | infinite")->required();
    approximate->add_option("--d", d, "degree bound for finite mode");
    approximate->add_option("--order", order, "partial-sum order for infinite mode");

    auto* tables = app.add_subcommand("tables", "special-value tables and identity checks");
    tables->fallthrough();
    tables->add_option("link", link_ref);
    tables->add_flag("--all", all, "run the whole corpus");

    auto* verify = app.add_subcommand("verify", "property suites");
    verify->fallthrough();
    verify->add_option("suite", suite,
                       "kronecker | stability | skein | twist | consistency | degree")
        ->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code;
    }

    if (precision < 64) {
        err << "precision must be >= 64 bits\n";
        return 2;
    }
    const EngineLimits floors{};
    if (cfg.limits.max_crossings < floors.max_crossings ||
        cfg.limits.max_strands < floors.max_strands || cfg.limits.max_word < floors.max_word) {
        err << "engine limits may only be raised above the defaults (" << floors.max_crossings
            << " crossings, " << floors.max_strands << " strands, " << floors.max_word
            << " letters)\n";
        return 2;
    }
    cfg.numeric.precision = static_cast<mpfr_prec_t>(precision);
    if (*tol_opt) cfg.tolerance_override = tolerance;

    try {
        if (app.got_subcommand(compute)) return cmd_compute(cfg, link_ref, which, out, err);
        if (app.got_subcommand(approximate))
            return cmd_approximate(cfg, link_ref, n, mode, d, order, out, err);
        if (app.got_subcommand(tables)) {
            if (!all && link_ref.empty()) {
                err << "tables: give a link or --all\n";
                return 2;
            }
            return cmd_tables(cfg, link_ref, all, out, err);
        }
        if (app.got_subcommand(verify)) return cmd_verify(cfg, suite, out, err);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace vknots::cli
