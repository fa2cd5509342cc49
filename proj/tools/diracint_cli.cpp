#include "CLI11.hpp"

#include "diracint/potentials.hpp"
#include "diracint/root_analysis.hpp"
#include "diracint/sequence.hpp"
#include "diracint/serialize.hpp"
#include "diracint/solutions.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace diracint;

namespace {

struct RangeSpec {
    Rational lo, hi, step;
};

// lo:hi:step with exact rational entries; lo > hi gives an empty grid.
RangeSpec parse_range(const std::string& text) {
    auto first = text.find(':');
    auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("range must be lo:hi:step, got '" + text + "'");
    RangeSpec r{Rational::parse(text.substr(0, first)),
                Rational::parse(text.substr(first + 1, second - first - 1)),
                Rational::parse(text.substr(second + 1))};
    if (r.step <= Rational(0)) throw std::invalid_argument("range step must be positive");
    return r;
}

std::pair<long long, long long> parse_int_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("level range must be lo:hi, got '" + text + "'");
    try {
        size_t usedA = 0, usedB = 0;
        std::string a = text.substr(0, colon), b = text.substr(colon + 1);
        long long lo = std::stoll(a, &usedA), hi = std::stoll(b, &usedB);
        if (usedA != a.size() || usedB != b.size() || lo > hi)
            throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("level range must be integers lo:hi, got '" + text + "'");
    }
}

Subcase parse_subcase(const std::string& s) {
    for (Subcase sc : {Subcase::S1, Subcase::S2, Subcase::S3, Subcase::S4})
        if (s == subcase_name(sc)) return sc;
    if (s.size() == 1 && s[0] >= '1' && s[0] <= '4') return subcase_from_index(s[0] - '0');
    throw std::invalid_argument("subcase must be one of S1, S2, S3, S4");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw std::invalid_argument("expected a comma-separated list, got '" + text + "'");
    return out;
}

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::domain_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::domain_error("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw std::domain_error("write failed for '" + path + "'");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text(out_path, content);
}

std::string join_rationals(const std::vector<Rational>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s.empty() ? "(none)" : s;
}

const char* region_text(Subcase sc) {
    switch (sc) {
        case Subcase::S1: return "lambda = -1, alpha > -1";
        case Subcase::S2: return "lambda = +1, alpha > -1/2  or  lambda = -1, alpha < -d/2";
        case Subcase::S3: return "lambda = +1, alpha < 1 (alpha > 1 kept as the recorded variant)";
        case Subcase::S4: return "lambda = +1, alpha > d/2  or  lambda = -1, alpha < 1/2";
    }
    return "";
}

// ---- classify ----

struct ClassifyOpts {
    std::string subcase;
    int d = 1;
    int lambda = 0;
    std::string alpha;
    std::string eps = "1/1024";
    std::string solutions_out;
    std::string out;
};

int run_classify(const ClassifyOpts& o) {
    Subcase sc = parse_subcase(o.subcase);
    check_lambda(o.lambda);
    if (o.d < 1) throw std::invalid_argument("--degree must be >= 1");
    if (!o.solutions_out.empty() && o.alpha.empty())
        throw std::invalid_argument("--solutions-out needs --alpha");

    std::optional<Rational> alpha;
    if (!o.alpha.empty()) alpha = Rational::parse(o.alpha);

    PolySequence seq = generate_sequence(sc, o.d, o.lambda);
    std::ostringstream out;
    out << "subcase " << subcase_name(sc) << "  d = " << o.d << "  lambda = "
        << (o.lambda > 0 ? "+1" : "-1") << "\n";

    if (!traits(sc).energy_needs_alpha()) {
        EnergyResult er = energy_from_degree(sc, o.d, o.lambda);
        out << "energy: E^2 = " << er.e2.str() << (er.physical ? " (physical)" : " (unphysical)")
            << "\n";
    } else if (alpha) {
        EnergyResult er = energy_from_degree(sc, o.d, o.lambda, alpha);
        out << "energy: E^2 = " << er.e2.str() << (er.physical ? " (physical)" : " (unphysical)")
            << "\n";
    } else {
        out << "energy: E^2 depends on alpha for this subcase\n";
    }

    int predicted = predicted_positive_roots(sc, o.d);
    out << "predicted positive m-roots inside the counting region: " << predicted << "\n";
    out << "counting region: " << region_text(sc) << "\n";
    out << "degenerate alpha values: " << join_rationals(degenerate_alphas(sc, o.d)) << "\n";

    int rc = 0;
    if (alpha) {
        RegionFit fit = counting_region(sc, o.d, o.lambda, *alpha);
        out << "alpha = " << alpha->str() << ": "
            << (fit == RegionFit::Inside
                    ? "inside the counting region"
                    : fit == RegionFit::VariantOnly
                          ? "inside the recorded variant range only (count not guaranteed)"
                          : "outside the counting region")
            << "\n";

        PositiveRootCount cnt = count_positive_roots_in_m(seq, *alpha);
        if (cnt.whole_line) {
            out << "the condition vanishes identically at this alpha; every m solves it\n";
        } else {
            out << "computed: positive = " << cnt.positive << "  negative = " << cnt.negative
                << "  m = 0 multiplicity = " << cnt.zero_multiplicity
                << "  distinct real = " << cnt.total_real
                << "  all simple = " << (cnt.all_real_simple ? "yes" : "no") << "\n";
            for (const auto& b : cnt.positive_boxes) {
                if (b.exact)
                    out << "  root m = " << b.lo.str() << " (exact)\n";
                else
                    out << "  root m in (" << b.lo.str() << ", " << b.hi.str() << "]\n";
            }
            if (fit == RegionFit::Inside) {
                if (cnt.positive == predicted) {
                    out << "agreement: computed count matches the prediction\n";
                } else {
                    out << "DISAGREEMENT: computed " << cnt.positive << ", predicted "
                        << predicted << "\n";
                    rc = 2;
                }
            }

            if (!o.solutions_out.empty()) {
                Rational eps = Rational::parse(o.eps);
                if (eps <= Rational(0)) throw std::invalid_argument("--eps must be positive");
                std::vector<SolutionDescriptor> sols;
                for (const auto& b : cnt.positive_boxes) {
                    RootBox rb = refine(b, eps);
                    if (rb.exact)
                        sols.push_back(build_case1_solution(seq, rb.lo, *alpha));
                    else
                        sols.push_back(build_case1_solution_m_box(seq, rb, *alpha));
                }
                write_text(o.solutions_out, descriptors_to_json(sols) + "\n");
                out << "wrote " << sols.size() << " solution descriptor"
                    << (sols.size() == 1 ? "" : "s") << " to " << o.solutions_out << "\n";
            }
        }
    }

    emit(o.out, out.str());
    return rc;
}

// ---- curve ----

struct CurveOpts {
    std::string preset;
    std::string subcase;
    int d = 0;
    int lambda = 0;
    std::string m_range = "-4:4:1/25";
    std::string eps = "1/1024";
    std::string condition = "full";
    std::string format = "csv";
    int threads = 1;
    std::string out;
};

int run_curve(const CurveOpts& o) {
    Subcase sc = Subcase::S1;
    int d = 0, lambda = 0;
    if (!o.preset.empty()) {
        if (!o.subcase.empty() || o.d != 0 || o.lambda != 0)
            throw std::invalid_argument("--preset conflicts with --subcase/--degree/--lambda");
        if (o.preset == "fig1-left") {
            sc = Subcase::S1; d = 7; lambda = -1;
        } else if (o.preset == "fig1-right") {
            sc = Subcase::S3; d = 7; lambda = +1;
        } else if (o.preset == "fig2-left") {
            sc = Subcase::S2; d = 5; lambda = +1;
        } else if (o.preset == "fig2-right") {
            sc = Subcase::S4; d = 5; lambda = +1;
        } else {
            throw std::invalid_argument("unknown preset '" + o.preset + "'");
        }
    } else {
        if (o.subcase.empty() || o.d == 0 || o.lambda == 0)
            throw std::invalid_argument("curve needs --preset or all of --subcase/--degree/--lambda");
        sc = parse_subcase(o.subcase);
        d = o.d;
        lambda = o.lambda;
        check_lambda(lambda);
        if (d < 1) throw std::invalid_argument("--degree must be >= 1");
    }
    if (o.threads < 1) throw std::invalid_argument("--threads must be >= 1");
    if (o.format != "csv" && o.format != "json")
        throw std::invalid_argument("--format must be csv or json");

    RangeSpec r = parse_range(o.m_range);
    Rational eps = Rational::parse(o.eps);
    if (eps <= Rational(0)) throw std::invalid_argument("--eps must be positive");
    ConditionKind kind = condition_kind_from_name(o.condition);

    PolySequence seq = generate_sequence(sc, d, lambda);
    CurveScan scan = scan_curve(seq, r.lo, r.hi, r.step, eps, kind, o.threads);
    emit(o.out, o.format == "csv" ? curve_to_csv(scan) : curve_to_json(scan) + "\n");
    return 0;
}

// ---- whittaker ----

struct WhittakerOpts {
    std::string m;
    std::string alpha;
    int d = 0;
    std::string levels;
    std::string e2;
    std::string out;
    std::string descriptor_out;
};

int run_whittaker(const WhittakerOpts& o) {
    Rational m = Rational::parse(o.m);
    Rational alpha = Rational::parse(o.alpha);
    if (o.d < 0) throw std::invalid_argument("--degree must be >= 0");
    if (m.is_zero())
        throw std::domain_error("m = 0 is the pure-oscillator family; this command needs m != 0");

    WhittakerCase wc = build_whittaker_case(m, alpha, o.d);
    std::ostringstream out;
    out << "m = " << m.str() << "  alpha = " << alpha.str() << "  d = " << o.d << "\n";
    out << "P(z) = " << wc.p.str() << "\n";
    out << "collapse: r = m^2 - E^2 + alpha(alpha-1)/z^2 + 2m(alpha+d)/z (verified exactly)\n";
    out << "mu = " << wc.mu.str() << "  kappa = (" << wc.kappa_times.str()
        << ") m / sqrt(m^2 - E^2)\n";

    bool alpha_is_minus_d = alpha + Rational(o.d) == Rational(0);
    if (alpha_is_minus_d)
        out << "alpha = -d: the 1/z term of r drops; Liouvillian at every energy\n";

    std::string payload;
    if (!o.levels.empty()) {
        if (alpha_is_minus_d) {
            out << "level list skipped: every energy qualifies\n";
        } else {
            auto [lo, hi] = parse_int_range(o.levels);
            payload = spectrum_to_json(wc, whittaker_levels(wc, lo, hi)) + "\n";
        }
    }

    if (!o.e2.empty()) {
        Rational e2 = Rational::parse(o.e2);
        WhittakerClass cls = whittaker_liouvillian(wc, e2);
        out << "E^2 = " << e2.str() << ": "
            << (cls.liouvillian ? "Liouvillian" : "not Liouvillian") << " (" << cls.detail
            << ")\n";
        if (cls.x) out << "  m/sqrt(m^2 - E^2) = " << cls.x->str() << "\n";
        if (cls.p_value) out << "  x(alpha + d) + alpha = " << cls.p_value->str() << "\n";
        if (cls.q_value) out << "  x(alpha + d) - alpha = " << cls.q_value->str() << "\n";
        TableCell cell = table_dispatch(m, alpha, o.d, e2);
        out << "table cell (" << cell.row << ", " << cell.col << "): " << cell.basis[0] << "; "
            << cell.basis[1];
        if (!cell.argument.empty()) out << "  [" << cell.argument << "]";
        out << (cell.liouvillian ? "  [Liouvillian]" : "") << "\n";

        if (!o.descriptor_out.empty()) {
            if (e2 != m * m)
                throw std::invalid_argument(
                    "--descriptor-out covers the degenerate E^2 = m^2 case only");
            write_text(o.descriptor_out, descriptor_to_json(bessel_degenerate(wc)) + "\n");
            out << "wrote descriptor to " << o.descriptor_out << "\n";
        }
    } else if (!o.descriptor_out.empty()) {
        throw std::invalid_argument("--descriptor-out needs --e2");
    }

    if (!payload.empty()) {
        emit(o.out, payload);
        std::cerr << out.str();
    } else {
        emit(o.out, out.str());
    }
    return 0;
}

// ---- reconstruct ----

struct ReconstructOpts {
    std::string poles;
    std::string r2 = "0";
    std::string e2;
    std::string out;
    std::string descriptor_out;
};

int run_reconstruct(const ReconstructOpts& o) {
    std::vector<Rational> poles = parse_rational_list(o.poles);
    std::vector<Rational> r2c = parse_rational_list(o.r2);
    UniPoly r2 = UniPoly::from_coeffs(Var::z, r2c);
    PoleConfig cfg = make_pole_config(poles, r2);

    std::ostringstream out;
    out << "poles: " << join_rationals(cfg.poles) << "\n";
    out << "R1(z) = " << cfg.r1.str() << "\n";
    out << "R2(z) = " << cfg.r2.str() << "\n";
    RationalFunction v = pole_potential(cfg);
    out << "V(z) = (" << v.num().str() << ") / (" << v.den().str() << ")\n";

    bool one_pole = cfg.poles.size() == 1 && cfg.poles[0].is_zero() &&
                    cfg.r2.degree_or(0) <= 1 && !cfg.r2.coeff(1).is_zero();

    Rational e2(0);
    if (!o.e2.empty()) e2 = Rational::parse(o.e2);

    if (one_pole) {
        Rational r0 = cfg.r2.coeff(0), r1 = cfg.r2.coeff(1);
        OnePoleResult opr = one_pole_integrable(r0, r1);
        if (!o.e2.empty() && e2 != opr.e2)
            out << "note: the closed form fixes E^2 = 2 r0; ignoring --e2 = " << e2.str()
                << "\n";
        out << "E^2 = " << opr.e2.str() << (opr.physical ? " (physical)" : " (unphysical)")
            << "\n";
        out << "r(z) = (" << opr.r.num().str() << ") / (" << opr.r.den().str()
            << ")  polynomial: " << (opr.r.is_polynomial() ? "yes" : "no") << "\n";
        out << "psi1 = (" << opr.psi1.prefactor.str() << ") exp(z^2 (3 r0 + 2 r1 z)/6)\n";
        out << "psi2 = psi1 * Int dz / psi1^2 (reduction of order, Wronskian 1)\n";
        if (!o.descriptor_out.empty()) {
            write_text(o.descriptor_out,
                       descriptors_to_json({opr.psi1, opr.psi2}) + "\n");
            out << "wrote 2 solution descriptors to " << o.descriptor_out << "\n";
        }
    } else {
        RationalFunction r = pole_r(cfg, e2);
        out << "E^2 = " << e2.str() << "\n";
        out << "r(z) = (" << r.num().str() << ") / (" << r.den().str()
            << ")  polynomial: " << (r.is_polynomial() ? "yes" : "no") << "\n";
        if (!o.descriptor_out.empty())
            throw std::invalid_argument(
                "closed-form descriptors exist only for the single pole at 0 with "
                "R2 = r0 + r1 z, r1 != 0");
    }

    emit(o.out, out.str());
    return 0;
}

// ---- verify ----

struct VerifyOpts {
    std::string descriptor;
    std::string eps;
};

struct CheckOutcome {
    bool pass = false;
    std::string line;
};

CheckOutcome check_descriptor(const SolutionDescriptor& sol, const std::optional<Rational>& eps) {
    auto it = sol.params.find("check");
    if (it != sol.params.end() && it->second == "collapse") {
        RationalFunction lhs = sol.omega * sol.omega + sol.omega.derivative() -
                               RationalFunction(UniPoly(Var::z, sol.cert.energy_e2));
        bool ok = lhs == sol.r;
        return {ok, ok ? "collapse identity holds exactly" : "collapse identity FAILED"};
    }

    RationalFunction res = residual_identity(sol.prefactor, sol.omega, sol.r);
    if (res.is_zero()) return {true, "residual identically zero"};

    RationalFunction zres = res * RationalFunction(UniPoly::monomial(Var::z, 1, Rational(1)));
    if (zres.is_polynomial()) {
        UniPoly p = zres.as_polynomial();
        if (p.degree_or(0) == 0) {
            Rational mag = p.coeff(0).abs();
            Rational thr = eps ? *eps
                               : (sol.cert.kind == Certificate::Kind::Bounded ? sol.cert.bound
                                                                              : Rational(0));
            bool ok = thr > Rational(0) && mag <= thr;
            std::string against = eps ? "eps " + eps->str()
                                      : (sol.cert.kind == Certificate::Kind::Bounded
                                             ? "certificate bound " + sol.cert.bound.str()
                                             : "the exact-zero certificate");
            return {ok, "|z * residual| = " + mag.str() + (ok ? " within " : " EXCEEDS ") + against};
        }
    }
    return {false, "residual nonzero and not a constant multiple of 1/z"};
}

int run_verify(const VerifyOpts& o) {
    std::optional<Rational> eps;
    if (!o.eps.empty()) {
        eps = Rational::parse(o.eps);
        if (*eps <= Rational(0)) throw std::invalid_argument("--eps must be positive");
    }
    std::vector<SolutionDescriptor> sols = descriptors_from_json(read_text(o.descriptor));
    int rc = 0;
    for (size_t i = 0; i < sols.size(); ++i) {
        CheckOutcome oc = check_descriptor(sols[i], eps);
        std::cout << "[" << (i + 1) << "/" << sols.size() << "] " << family_name(sols[i].family)
                  << ": " << oc.line << (oc.pass ? "  PASS" : "  FAIL") << "\n";
        if (!oc.pass) rc = 2;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of rational Dirac potentials"};
    app.set_config("--config", "", "read options from an INI file (flags on the command line win)");
    app.require_subcommand(1);

    ClassifyOpts co;
    auto* cls = app.add_subcommand("classify",
                                   "count the condition's m-roots at fixed alpha, exactly");
    cls->add_option("--subcase,-s", co.subcase, "S1..S4")->required();
    cls->add_option("--degree,-d", co.d, "prefactor degree, >= 1")->required();
    cls->add_option("--lambda,-l", co.lambda, "+1 or -1")->required();
    cls->add_option("--alpha,-a", co.alpha, "rational alpha for an exact slice count");
    cls->add_option("--eps", co.eps,
                    "root box width for emitted descriptors (default 1/1024)");
    cls->add_option("--solutions-out", co.solutions_out,
                    "write descriptors for every positive root (JSON array); needs --alpha");
    cls->add_option("--out,-o", co.out, "write the report to a file instead of stdout");

    CurveOpts cu;
    auto* cur = app.add_subcommand("curve", "scan the condition's alpha-roots over an m grid");
    cur->add_option("--preset", cu.preset, "fig1-left | fig1-right | fig2-left | fig2-right");
    cur->add_option("--subcase,-s", cu.subcase, "S1..S4");
    cur->add_option("--degree,-d", cu.d, "prefactor degree, >= 1");
    cur->add_option("--lambda,-l", cu.lambda, "+1 or -1");
    cur->add_option("--m,-m", cu.m_range, "m grid lo:hi:step (default -4:4:1/25)");
    cur->add_option("--eps", cu.eps, "isolation width target (default 1/1024)");
    cur->add_option("--condition", cu.condition, "full | effective (default full)");
    cur->add_option("--format", cu.format, "csv | json (default csv)");
    cur->add_option("--threads", cu.threads, "worker threads (default 1)");
    cur->add_option("--out,-o", cu.out, "output file (default stdout)");

    WhittakerOpts wo;
    auto* wh = app.add_subcommand("whittaker", "the harmonic-free family m + alpha/z + P'/P");
    wh->add_option("--m,-m", wo.m, "rational m, nonzero")->required();
    wh->add_option("--alpha,-a", wo.alpha, "rational alpha, != 1")->required();
    wh->add_option("--degree,-d", wo.d, "Laguerre degree d >= 0")->required();
    wh->add_option("--levels", wo.levels, "enumerate candidate levels for integer l in lo:hi");
    wh->add_option("--e2", wo.e2, "classify a specific rational E^2");
    wh->add_option("--out,-o", wo.out, "output file for the level list (default stdout)");
    wh->add_option("--descriptor-out", wo.descriptor_out,
                   "write the E^2 = m^2 basis descriptor; needs --e2 = m^2");

    ReconstructOpts ro;
    auto* rec = app.add_subcommand("reconstruct",
                                   "build V = sum 1/(z-c_k) + R1 + R2 prod(z-c_k) with "
                                   "pole-free r");
    rec->add_option("--poles", ro.poles, "comma-separated rational poles")->required();
    rec->add_option("--r2", ro.r2, "R2 coefficients, ascending, comma-separated (default 0)");
    rec->add_option("--e2", ro.e2, "rational E^2 (default 0; the one-pole form fixes its own)");
    rec->add_option("--out,-o", ro.out, "output file (default stdout)");
    rec->add_option("--descriptor-out", ro.descriptor_out,
                    "write psi1, psi2 descriptors (single pole at 0, linear R2 only)");

    VerifyOpts vo;
    auto* ver = app.add_subcommand("verify", "recompute a descriptor's residual identity");
    ver->add_option("--descriptor", vo.descriptor, "descriptor JSON file (object or array)")
        ->required();
    ver->add_option("--eps", vo.eps, "accept |z * residual| <= eps instead of the certificate");

    int rc = 0;
    cls->callback([&] { rc = run_classify(co); });
    cur->callback([&] { rc = run_curve(cu); });
    wh->callback([&] { rc = run_whittaker(wo); });
    rec->callback([&] { rc = run_reconstruct(ro); });
    ver->callback([&] { rc = run_verify(vo); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::domain_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return rc;
}
