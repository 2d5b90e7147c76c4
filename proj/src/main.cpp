// trefoil: cone-manifold structures on surgeries of the left-handed trefoil.
//
// Subcommands:
//   classify   geometry class, cone data and invariants of (p/q, r)
//   holonomy   generator pairs and 4x4 matrices at given cone data
//   verify     run the numerical invariant batteries
//   plot       region plots over the two surgery planes (csv or svg)
//   seifert    Seifert invariants of a filling, or a filling from invariants
//
// Exit codes: 0 success, 1 usage/domain error, 2 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "trefoil/holonomy.hpp"
#include "trefoil/metric.hpp"
#include "trefoil/numformat.hpp"
#include "trefoil/surface.hpp"
#include "trefoil/surgery.hpp"
#include "trefoil/verify.hpp"

namespace {

using namespace trefoil;

// Parse "a/b", "a", a decimal, or "inf" into a surgery cone parameter.
SurgerySpec parse_spec(long long p, long long q, const std::string &rtext) {
    if (rtext == "inf" || rtext == "infinity" || rtext == "oo")
        return make_spec(p, q, Rational::infinity());
    const auto slash = rtext.find('/');
    try {
        if (slash != std::string::npos) {
            const long long num = std::stoll(rtext.substr(0, slash));
            const long long den = std::stoll(rtext.substr(slash + 1));
            return make_spec(p, q, make_rational(num, den));
        }
        if (rtext.find('.') == std::string::npos && rtext.find('e') == std::string::npos) {
            return make_spec(p, q, make_rational(std::stoll(rtext), 1));
        }
        return make_spec(p, q, std::stod(rtext));
    } catch (const std::invalid_argument &) {
        throw GeomError(errc::usage, "could not parse cone parameter '" + rtext + "'");
    } catch (const std::out_of_range &) {
        throw GeomError(errc::usage, "cone parameter '" + rtext + "' is out of range");
    }
}

std::string r_display(const SurgerySpec &s) {
    if (s.r_infinite) return "inf";
    if (s.r_is_exact) {
        if (s.r_exact.den == 1) return std::to_string(s.r_exact.num);
        return std::to_string(s.r_exact.num) + "/" + std::to_string(s.r_exact.den);
    }
    return fmt17(s.r);
}

std::string seifert_symbol(const SeifertData &d) {
    std::string s = "(Oo0 | " + std::to_string(d.b) + ";";
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        s += " (" + std::to_string(d.pairs[i].first) + "," + std::to_string(d.pairs[i].second) +
             ")";
        if (i + 1 < d.pairs.size()) s += ",";
    }
    return s + ")";
}

int cmd_classify(long long p, long long q, const std::string &rtext, bool json) {
    const SurgerySpec s = parse_spec(p, q, rtext);
    const GeometryClass cls = classify(s);

    if (json) {
        JsonWriter w;
        w.begin_object();
        w.field("p", s.p).field("q", s.q).field("r", r_display(s));
        w.field("class", std::string(to_string(cls)));
        if (s.p != 0) {
            const ConeData c = surgery_params(s);
            w.field("alpha", c.alpha).field("theta", c.theta).field("epsilon", c.epsilon);
            const auto [li, ls] = sphericity_limits(s.p, s.q);
            w.key("sphericity_limits").begin_array().value(li).value(ls).end_array();
        }
        w.field("cone_angle", cone_angle(s));
        if (s.p != 0 && cls != GeometryClass::NoneKnown) {
            const SingularLength len = singular_length(s);
            w.field("singular_length", len.signed_length);
            w.field("singular_length_abs", len.abs_length);
        }
        if (s.p != 0 && cls != GeometryClass::NoneKnown) {
            w.field("volume", volume(s));
            if (cls == GeometryClass::Spherical || cls == GeometryClass::SL2Rtilde)
                w.field("volume_by_quadrature", volume_by_quadrature(s));
        }
        try {
            const SeifertData d = seifert_of(s);
            w.key("seifert").begin_object();
            w.field("m", d.m).field("n", d.n).field("cone_order", d.g);
            w.field("symbol", seifert_symbol(d));
            w.end_object();
        } catch (const GeomError &) {
        }
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    std::cout << "surgery: (" << s.p << "/" << s.q << ", r = " << r_display(s) << ")\n";
    std::cout << "class: " << to_string(cls) << "\n";
    if (s.p != 0) {
        const ConeData c = surgery_params(s);
        std::cout << "alpha: " << fmt_angle(c.alpha) << "\n";
        std::cout << "theta: " << fmt_angle(c.theta) << "\n";
        std::cout << "S(alpha): " << fmt17(s_of_alpha(c.alpha)) << "\n";
        const auto [li, ls] = sphericity_limits(s.p, s.q);
        std::cout << "spherical for r in: (" << fmt17(li) << ", " << fmt17(ls) << ")\n";
    }
    std::cout << "cone angle: " << fmt_angle(cone_angle(s)) << "\n";
    if (s.p != 0 && cls != GeometryClass::NoneKnown) {
        const SingularLength len = singular_length(s);
        std::cout << "singular length: " << fmt_angle(len.signed_length)
                  << "  (abs " << fmt_angle(len.abs_length) << ")\n";
        std::cout << "volume: " << fmt17(volume(s)) << "\n";
    }
    try {
        const SeifertData d = seifert_of(s);
        std::cout << "seifert: S(" << d.m << ", " << d.n << ") = " << seifert_symbol(d);
        if (d.g > 1) std::cout << ", cone angle 2pi/" << d.g << " along the exceptional fiber";
        std::cout << "\n";
    } catch (const GeomError &) {
    }
    return 0;
}

void write_lr(JsonWriter &w, const char *name, const LRIsometry &g) {
    const auto put = [&](const char *part, const Mat2 &m) {
        w.key(part).begin_array();
        for (const cplx v : {m.a, m.b, m.c, m.d})
            w.begin_array().value(v.real()).value(v.imag()).end_array();
        w.end_array();
    };
    w.key(name).begin_object();
    put("left", g.left);
    put("right", g.right);
    w.end_object();
}

void write_mat4(JsonWriter &w, const char *name, const Mat4 &m) {
    w.key(name).begin_array();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) w.value(m.m[i][j]);
    w.end_array();
}

int cmd_holonomy(double alpha, double theta, bool have_alpha, long long p, long long q,
                 const std::string &rtext, bool have_pq, double nil_t, bool have_nil) {
    JsonWriter w;
    w.begin_object();
    if (have_nil) {
        const NilHolonomyPair g = nil_generators(nil_t);
        const NilWordsCD words = nil_words_cd(g);
        w.field("model", std::string("nil"));
        w.field("t", g.t);
        write_mat4(w, "a", g.a);
        write_mat4(w, "b", g.b);
        write_mat4(w, "c", words.c);
        write_mat4(w, "d", words.d);
        write_mat4(w, "d2", words.d2);
        w.field("relator_residual", nil_relator_residual(g));
        w.field("fiber_translation", -4.0 * std::sqrt(3.0) * (6.0 * g.t + 1.0));
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    if (have_pq) {
        const SurgerySpec s = parse_spec(p, q, rtext);
        const GeometryClass cls = classify(s);
        if (cls == GeometryClass::Nil) {
            std::cerr << "error: this filling is on the Nil wall; rerun with --nil-t "
                      << fmt17(static_cast<double>(s.q) / static_cast<double>(s.p)) << "\n";
            return 1;
        }
        const ConeData c = surgery_params(s);
        alpha = c.alpha;
        theta = c.theta;
    } else if (!have_alpha) {
        std::cerr << "error: provide --alpha/--theta, or -p/-q/-r, or --nil-t\n";
        return 1;
    }

    HolonomyPair g;
    try {
        g = generators_ab(alpha, theta);
    } catch (const GeomError &e) {
        if (e.code() == errc::degenerate) {
            std::cerr << "error: alpha is on the Nil wall pi/6, where the quadric model "
                         "collapses; rerun with --nil-t\n";
            return 1;
        }
        throw;
    }
    const WordsCD words = words_cd(g);
    const RelatorReport rep = relator_check(g);
    w.field("model", std::string("quadric"));
    w.field("alpha", g.alpha).field("theta", g.theta).field("S", g.S);
    write_lr(w, "a", g.a);
    write_lr(w, "b", g.b);
    write_mat4(w, "a_linear", lr_to_linear(g.a));
    write_mat4(w, "b_linear", lr_to_linear(g.b));
    write_lr(w, "c", words.c);
    write_lr(w, "d", words.d);
    w.field("relator_residual", rep.max_residual);
    w.field("fiber_translation", 6.0 * g.theta - PI);
    if (std::abs(6.0 * g.theta - PI) > 1e-12 && g.S < 1.0 - 1e-12) {
        const DomainLevels lv = domain_levels(g);
        w.key("domain_levels").begin_object();
        w.field("dA", lv.level_dA).field("cdA", lv.level_cdA);
        w.field("height", lv.height).field("slope", lv.slope);
        w.end_object();
    }
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int cmd_verify(const std::string &suite, std::uint64_t seed, int samples, bool json) {
    const std::vector<SummaryCheck> checks = run_verify_suite(suite, seed, samples);
    const bool ok = all_pass(checks);
    if (json) {
        JsonWriter w;
        w.begin_object();
        w.field("suite", suite).field("seed", static_cast<long long>(seed));
        w.field("samples", samples);
        w.begin_array("checks");
        for (const SummaryCheck &c : checks) {
            w.begin_object();
            w.field("name", c.name).field("max_residual", c.max_residual);
            w.field("tolerance", c.tolerance).field("pass", c.pass);
            if (!c.detail.empty()) w.field("detail", c.detail);
            w.end_object();
        }
        w.end_array();
        w.field("pass", ok);
        w.end_object();
        std::cout << w.str() << "\n";
    } else {
        for (const SummaryCheck &c : checks) {
            std::printf("[%s] %-64s residual %.3e  tol %.1e%s\n", c.pass ? "PASS" : "FAIL",
                        c.name.c_str(), c.max_residual, c.tolerance,
                        c.detail.empty() ? "" : ("  (" + c.detail + ")").c_str());
        }
        std::printf("%s: %zu checks\n", ok ? "PASS" : "FAIL", checks.size());
    }
    return ok ? 0 : 2;
}

int cmd_plot(int plane, const std::string &format, const std::string &out_path,
             const PlotWindow &window) {
    const std::string content =
        format == "svg" ? plot_svg(plane, window) : plot_csv(plane, window);
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return 1;
    }
    out << content;
    return 0;
}

int cmd_seifert(long long p, long long q, const std::string &rtext, bool have_pqr, long long m,
                long long n, bool have_mn) {
    if (have_pqr == have_mn) {
        std::cerr << "error: provide either -p/-q/-r or --m/--n\n";
        return 1;
    }
    JsonWriter w;
    w.begin_object();
    if (have_pqr) {
        const SurgerySpec s = parse_spec(p, q, rtext);
        const SeifertData d = seifert_of(s);
        w.field("p", s.p).field("q", s.q).field("r", r_display(s));
        w.field("m", d.m).field("n", d.n);
        w.field("symbol", seifert_symbol(d));
        w.field("cone_order", d.g);
        w.key("roundtrip").begin_object();
        w.field("p", d.p_back).field("q", d.q_back).field("r", d.r_back);
        w.end_object();
        try {
            w.field("volume", seifert_volume(d.m, d.n));
        } catch (const GeomError &) {
        }
    } else {
        const SeifertData d = seifert_from_mn(m, n);
        w.field("m", d.m).field("n", d.n);
        w.field("symbol", seifert_symbol(d));
        w.field("cone_order", d.g);
        w.field("p", d.p_back).field("q", d.q_back).field("r", d.r_back);
        const SurgerySpec s = make_spec(d.p_back, d.q_back, make_rational(d.r_back, 1));
        w.field("class", std::string(to_string(classify(s))));
        try {
            w.field("volume", seifert_volume(d.m, d.n));
        } catch (const GeomError &) {
        }
    }
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"cone-manifold structures on surgeries of the left-handed trefoil"};
    app.require_subcommand(1);

    // classify
    long long p = 1, q = 0;
    std::string rtext = "1";
    bool as_json = false;
    CLI::App *classify_cmd = app.add_subcommand("classify", "classify a filling (p/q, r)");
    classify_cmd->add_option("-p", p, "surgery numerator")->required();
    classify_cmd->add_option("-q", q, "surgery denominator")->required();
    classify_cmd->add_option("-r", rtext, "cone parameter (integer, a/b, decimal, or inf)")
        ->required();
    classify_cmd->add_flag("--json", as_json, "emit JSON");

    // holonomy
    double alpha = 0.0, theta = 0.0, nil_t = 0.0;
    CLI::App *holonomy_cmd = app.add_subcommand("holonomy", "holonomy generators at cone data");
    CLI::Option *alpha_opt = holonomy_cmd->add_option("--alpha", alpha, "cone angle parameter");
    holonomy_cmd->add_option("--theta", theta, "fiber phase parameter")->needs(alpha_opt);
    CLI::Option *hp_opt = holonomy_cmd->add_option("-p", p, "surgery numerator");
    holonomy_cmd->add_option("-q", q, "surgery denominator")->needs(hp_opt);
    holonomy_cmd->add_option("-r", rtext, "cone parameter")->needs(hp_opt);
    CLI::Option *nil_opt =
        holonomy_cmd->add_option("--nil-t", nil_t, "Nil parameter t (wall alpha = pi/6)");

    // verify
    std::string suite = "all";
    std::uint64_t seed = 20260819u;
    int samples = 200;
    CLI::App *verify_cmd = app.add_subcommand("verify", "run the numerical invariant batteries");
    verify_cmd->add_option("suite", suite, "algebra|surface|metric|holonomy|surgery|all");
    verify_cmd->add_option("--seed", seed, "sampler seed");
    verify_cmd->add_option("--samples", samples, "sample count scale")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", as_json, "emit JSON");

    // plot
    int plane = 1;
    std::string format = "csv", out_path;
    PlotWindow window{};
    CLI::App *plot_cmd = app.add_subcommand("plot", "region plots over the surgery planes");
    plot_cmd->add_option("--plane", plane, "1: (rp, rq) plane; 2: (m, n) plane")
        ->required()
        ->check(CLI::Range(1, 2));
    plot_cmd->add_option("--format", format, "csv|svg")
        ->check(CLI::IsMember({"csv", "svg"}));
    plot_cmd->add_option("--out", out_path, "output path (default stdout)");
    CLI::Option *x0_opt = plot_cmd->add_option("--x0", window.x0, "window min x");
    plot_cmd->add_option("--x1", window.x1, "window max x")->needs(x0_opt);
    plot_cmd->add_option("--y0", window.y0, "window min y")->needs(x0_opt);
    plot_cmd->add_option("--y1", window.y1, "window max y")->needs(x0_opt);
    plot_cmd->add_option("--step", window.step, "grid step")->needs(x0_opt);

    // seifert
    long long m = 0, n = 0;
    CLI::App *seifert_cmd =
        app.add_subcommand("seifert", "Seifert invariants of a filling and back");
    CLI::Option *sp_opt = seifert_cmd->add_option("-p", p, "surgery numerator");
    seifert_cmd->add_option("-q", q, "surgery denominator")->needs(sp_opt);
    seifert_cmd->add_option("-r", rtext, "cone parameter (rational)")->needs(sp_opt);
    CLI::Option *m_opt = seifert_cmd->add_option("--m", m, "Seifert invariant m");
    seifert_cmd->add_option("--n", n, "Seifert invariant n")->needs(m_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version exit 0, every usage error exits 1
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(p, q, rtext, as_json);
        if (holonomy_cmd->parsed())
            return cmd_holonomy(alpha, theta, alpha_opt->count() > 0, p, q, rtext,
                                hp_opt->count() > 0, nil_t, nil_opt->count() > 0);
        if (verify_cmd->parsed()) return cmd_verify(suite, seed, samples, as_json);
        if (plot_cmd->parsed()) {
            if (x0_opt->count() == 0) window = default_window(plane);
            return cmd_plot(plane, format, out_path, window);
        }
        if (seifert_cmd->parsed())
            return cmd_seifert(p, q, rtext, sp_opt->count() > 0, m, n, m_opt->count() > 0);
    } catch (const trefoil::GeomError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == trefoil::errc::verification_failure ? 2 : 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
