#include "diracint/serialize.hpp"

#include "json.hpp"

#include <stdexcept>

namespace diracint {

using ojson = nlohmann::ordered_json;

const char* condition_kind_name(ConditionKind kind) {
    return kind == ConditionKind::Full ? "full" : "effective";
}

ConditionKind condition_kind_from_name(const std::string& name) {
    if (name == "full") return ConditionKind::Full;
    if (name == "effective") return ConditionKind::Effective;
    throw std::domain_error("unknown condition kind '" + name + "'");
}

static Var var_from_name(const std::string& name) {
    for (Var v : {Var::z, Var::m, Var::alpha, Var::u, Var::w})
        if (name == var_name(v)) return v;
    throw std::domain_error("unknown variable '" + name + "'");
}

static ojson unipoly_json(const UniPoly& p) {
    ojson coeffs = ojson::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return ojson{{"var", var_name(p.var())}, {"coeffs", std::move(coeffs)}};
}

static UniPoly unipoly_parse(const ojson& j) {
    Var v = var_from_name(j.at("var").get<std::string>());
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return UniPoly::from_coeffs(v, std::move(coeffs));
}

static ojson bipoly_json(const BiPoly& p) {
    ojson terms = ojson::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back(ojson{{"m", key.first}, {"alpha", key.second}, {"c", c.str()}});
    return ojson{{"vars", ojson::array({"m", "alpha"})}, {"terms", std::move(terms)}};
}

static ojson ratfunc_json(const RationalFunction& f) {
    return ojson{{"num", unipoly_json(f.num())}, {"den", unipoly_json(f.den())}};
}

static RationalFunction ratfunc_parse(const ojson& j) {
    return RationalFunction(unipoly_parse(j.at("num")), unipoly_parse(j.at("den")));
}

static ojson certificate_json(const Certificate& c) {
    ojson j;
    j["kind"] = c.kind == Certificate::Kind::ExactZero ? "exact-zero" : "bounded";
    if (c.kind == Certificate::Kind::Bounded) j["bound"] = c.bound.str();
    j["energy_e2"] = c.energy_e2.str();
    if (c.has_box)
        j["box"] = ojson{{"param", c.box_param}, {"lo", c.box_lo.str()}, {"hi", c.box_hi.str()}};
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

static Certificate certificate_parse(const ojson& j) {
    Certificate c;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "exact-zero")
        c.kind = Certificate::Kind::ExactZero;
    else if (kind == "bounded")
        c.kind = Certificate::Kind::Bounded;
    else
        throw std::domain_error("unknown certificate kind '" + kind + "'");
    if (c.kind == Certificate::Kind::Bounded)
        c.bound = Rational::parse(j.at("bound").get<std::string>());
    c.energy_e2 = Rational::parse(j.at("energy_e2").get<std::string>());
    if (j.contains("box")) {
        const auto& b = j.at("box");
        c.has_box = true;
        c.box_param = b.at("param").get<std::string>();
        c.box_lo = Rational::parse(b.at("lo").get<std::string>());
        c.box_hi = Rational::parse(b.at("hi").get<std::string>());
    }
    if (j.contains("note")) c.note = j.at("note").get<std::string>();
    return c;
}

static ojson descriptor_ojson(const SolutionDescriptor& sol) {
    ojson j;
    j["family"] = family_name(sol.family);
    j["liouvillian"] = sol.liouvillian;
    j["prefactor"] = unipoly_json(sol.prefactor);
    j["omega"] = ratfunc_json(sol.omega);
    j["r"] = ratfunc_json(sol.r);
    ojson params = ojson::object();
    for (const auto& [k, v] : sol.params) params[k] = v;
    j["params"] = std::move(params);
    j["certificate"] = certificate_json(sol.cert);
    return j;
}

static SolutionDescriptor descriptor_parse(const ojson& j) {
    SolutionDescriptor sol;
    sol.family = family_from_name(j.at("family").get<std::string>());
    sol.liouvillian = j.at("liouvillian").get<bool>();
    sol.prefactor = unipoly_parse(j.at("prefactor"));
    sol.omega = ratfunc_parse(j.at("omega"));
    sol.r = ratfunc_parse(j.at("r"));
    for (const auto& [k, v] : j.at("params").items()) sol.params[k] = v.get<std::string>();
    sol.cert = certificate_parse(j.at("certificate"));
    return sol;
}

std::string descriptor_to_json(const SolutionDescriptor& sol, int indent) {
    return descriptor_ojson(sol).dump(indent);
}

SolutionDescriptor descriptor_from_json(const std::string& text) {
    try {
        return descriptor_parse(ojson::parse(text));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::domain_error(std::string("descriptor parse failed: ") + e.what());
    }
}

std::string descriptors_to_json(const std::vector<SolutionDescriptor>& sols, int indent) {
    ojson arr = ojson::array();
    for (const auto& s : sols) arr.push_back(descriptor_ojson(s));
    return arr.dump(indent);
}

std::vector<SolutionDescriptor> descriptors_from_json(const std::string& text) {
    try {
        ojson j = ojson::parse(text);
        std::vector<SolutionDescriptor> out;
        if (j.is_array())
            for (const auto& e : j) out.push_back(descriptor_parse(e));
        else
            out.push_back(descriptor_parse(j));
        if (out.empty()) throw std::domain_error("descriptor file holds an empty array");
        return out;
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::domain_error(std::string("descriptor parse failed: ") + e.what());
    }
}

std::string sequence_to_json(const PolySequence& seq, int indent) {
    ojson j;
    j["subcase"] = subcase_name(seq.subcase());
    j["d"] = seq.degree();
    j["lambda"] = seq.lambda();
    ojson list = ojson::array();
    for (int l = seq.degree() + 1; l >= -1; --l)
        list.push_back(ojson{{"l", l}, {"poly", bipoly_json(seq.p(l))}});
    j["p"] = std::move(list);
    j["condition_constant"] = seq.condition_constant().str();
    return j.dump(indent);
}

std::string curve_to_csv(const CurveScan& scan) {
    std::string out = "m,alpha_lo,alpha_hi,exact\n";
    for (const auto& pt : scan.points) {
        if (pt.whole_line) {
            out += pt.m.str() + ",line,line,line\n";
            continue;
        }
        for (const auto& b : pt.roots)
            out += pt.m.str() + "," + b.lo.str() + "," + b.hi.str() + "," +
                   (b.exact ? "1" : "0") + "\n";
    }
    return out;
}

std::string curve_to_json(const CurveScan& scan, int indent) {
    ojson j;
    j["subcase"] = subcase_name(scan.sc);
    j["d"] = scan.d;
    j["lambda"] = scan.lambda;
    j["condition"] = condition_kind_name(scan.kind);
    j["eps"] = scan.eps.str();
    ojson pts = ojson::array();
    for (const auto& pt : scan.points) {
        ojson p;
        p["m"] = pt.m.str();
        p["whole_line"] = pt.whole_line;
        ojson roots = ojson::array();
        for (const auto& b : pt.roots)
            roots.push_back(ojson{{"lo", b.lo.str()}, {"hi", b.hi.str()}, {"exact", b.exact}});
        p["roots"] = std::move(roots);
        pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
    return j.dump(indent);
}

std::string spectrum_to_json(const WhittakerCase& wc,
                             const std::vector<SpectrumLevel>& levels, int indent) {
    ojson j;
    j["m"] = wc.m.str();
    j["alpha"] = wc.alpha.str();
    j["d"] = wc.d;
    j["mu"] = wc.mu.str();
    j["kappa_times"] = wc.kappa_times.str();
    Rational m2 = wc.m * wc.m;
    ojson list = ojson::array();
    for (const auto& lv : levels) {
        ojson e;
        e["l"] = lv.l;
        e["branch"] = lv.branch;
        e["e2_over_m2"] = lv.e2_over_m2.str();
        e["e2"] = (lv.e2_over_m2 * m2).str();
        e["valid"] = lv.valid;
        e["liouvillian"] = lv.liouvillian;
        if (!lv.reason.empty()) e["reason"] = lv.reason;
        list.push_back(std::move(e));
    }
    j["levels"] = std::move(list);
    return j.dump(indent);
}

std::string kovacic_to_json(const KovacicReport& rep, int indent) {
    ojson j;
    j["alpha"] = rep.alpha.str();
    j["e_infinity"] = rep.e_infinity.str();
    ojson cands = ojson::array();
    for (const auto& c : rep.candidates)
        cands.push_back(ojson{{"e0", c.e0.str()},
                              {"d_value", c.d_value.str()},
                              {"admissible", c.admissible}});
    j["candidates"] = std::move(cands);
    j["any_admissible"] = rep.any_admissible;
    j["all_even"] = rep.all_even;
    j["case2_excluded"] = rep.case2_excluded;
    j["case2_reason"] = rep.case2_reason;
    j["order_at_infinity"] = rep.order_at_infinity;
    j["case3_excluded"] = rep.case3_excluded;
    return j.dump(indent);
}

}  // namespace diracint
