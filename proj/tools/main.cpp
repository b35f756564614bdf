#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "kxy/errors.hpp"
#include "kxy/groebner.hpp"
#include "kxy/jacobian.hpp"
#include "kxy/newton.hpp"
#include "kxy/parse.hpp"
#include "kxy/retract.hpp"
#include "kxy/stable.hpp"

using json = nlohmann::ordered_json;
using namespace kxy;

namespace {

struct Options {
    bool as_json = false;
    std::uint64_t seed = 0;
    long budget_steps = 0;  // 0 = default
    int degree_cap = 0;     // 0 = default

    Budget budget() const {
        Budget b;
        if (budget_steps > 0) b.reduction_steps = budget_steps;
        if (degree_cap > 0) b.degree_cap = degree_cap;
        return b;
    }
};

// "-" reads the whole of stdin, so polynomials can be piped in.
std::string resolve(const std::string& arg) {
    if (arg != "-") return arg;
    std::string all, line;
    while (std::getline(std::cin, line)) {
        if (!all.empty()) all += '\n';
        all += line;
    }
    return all;
}

Poly arg_poly(const std::string& arg, const Ring& ring = Ring::xy()) {
    return parse_poly(resolve(arg), ring);
}

Endo arg_endo(const std::string& arg) { return parse_endo(resolve(arg)); }

std::string print_uni(const UniPoly& h, const char* var = "t") {
    if (h.is_zero()) return "0";
    std::string out;
    for (int i = h.degree(); i >= 0; --i) {
        Rat c = h.coeff(i);
        if (c == 0) continue;
        bool lead = out.empty();
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (lead)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string coeff = rat_to_string(a);
        if (i == 0) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

json step_to_json(const TameStep& s) {
    json j;
    switch (s.kind) {
        case TameStep::Kind::elementary_x:
        case TameStep::Kind::elementary_y: {
            j["kind"] = s.kind == TameStep::Kind::elementary_x ? "elementary_x" : "elementary_y";
            json coeffs = json::array();
            for (const Rat& c : s.payload.coeffs()) coeffs.push_back(rat_to_string(c));
            j["payload"] = coeffs;
            break;
        }
        case TameStep::Kind::linear: {
            j["kind"] = "linear";
            json m = json::array(), t = json::array();
            for (const Rat& v : s.m) m.push_back(rat_to_string(v));
            for (const Rat& v : s.t) t.push_back(rat_to_string(v));
            j["matrix"] = m;
            j["translation"] = t;
            break;
        }
    }
    return j;
}

json word_to_json(const TameWord& w) {
    json steps = json::array();
    for (const TameStep& s : w.steps) steps.push_back(step_to_json(s));
    return steps;
}

json cert_to_json(const RetractionCert& cert) {
    json j;
    j["retraction"] = print_endo(cert.retraction);
    j["generator"] = print_poly(cert.generator);
    j["witness_x"] = print_uni(cert.witness_x);
    j["witness_y"] = print_uni(cert.witness_y);
    return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json base() { return json{{"schema", 1}}; }

// ---- verb handlers; each returns the process exit code -------------------

int run_parse(const Options& opt, const std::string& src) {
    Poly f = arg_poly(src);
    if (opt.as_json) {
        json j = base();
        j["poly"] = print_poly(f);
        emit(j);
    } else {
        std::cout << print_poly(f) << "\n";
    }
    return 0;
}

int run_jacdet(const Options& opt, const std::string& src) {
    Poly d = jac_det(arg_endo(src));
    if (opt.as_json) {
        json j = base();
        j["determinant"] = print_poly(d);
        emit(j);
    } else {
        std::cout << print_poly(d) << "\n";
    }
    return 0;
}

int run_keller(const Options& opt, const std::string& src) {
    Endo phi = arg_endo(src);
    Poly d = jac_det(phi);
    bool ok = is_keller(phi);
    if (opt.as_json) {
        json j = base();
        j["keller"] = ok;
        j["determinant"] = print_poly(d);
        emit(j);
    } else {
        std::cout << "determinant " << print_poly(d)
                  << (ok ? " is a nonzero constant" : " is not a nonzero constant") << "\n";
    }
    return ok ? 0 : 1;
}

int run_dependent(const Options& opt, const std::string& ps, const std::string& qs) {
    bool dep = alg_dependent(arg_poly(ps), arg_poly(qs));
    if (opt.as_json) {
        json j = base();
        j["dependent"] = dep;
        emit(j);
    } else {
        std::cout << (dep ? "algebraically dependent" : "algebraically independent") << "\n";
    }
    return dep ? 0 : 1;
}

MonomialOrder order_from(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    if (name == "grlex") return MonomialOrder::grlex();
    throw PrecondError("unknown monomial order: " + name);
}

int run_gb(const Options& opt, const std::vector<std::string>& gens_src,
           const std::string& order_name) {
    std::vector<Poly> gens;
    for (const std::string& s : gens_src) gens.push_back(arg_poly(s));
    GroebnerBasis gb = buchberger(gens, order_from(order_name), opt.budget());
    if (opt.as_json) {
        json j = base();
        j["order"] = order_name;
        json basis = json::array();
        for (const Poly& g : gb.basis) basis.push_back(print_poly(g));
        j["basis"] = basis;
        emit(j);
    } else {
        for (const Poly& g : gb.basis) std::cout << print_poly(g) << "\n";
    }
    return 0;
}

int run_member(const Options& opt, const std::string& fs,
               const std::vector<std::string>& gens_src) {
    Poly f = arg_poly(fs);
    std::vector<Poly> gens;
    for (const std::string& s : gens_src) gens.push_back(arg_poly(s));
    auto cof = ideal_member(f, gens, opt.budget());
    if (opt.as_json) {
        json j = base();
        j["member"] = cof.has_value();
        if (cof) {
            json cs = json::array();
            for (const Poly& c : *cof) cs.push_back(print_poly(c));
            j["cofactors"] = cs;
        }
        emit(j);
        return cof ? 0 : 1;
    }
    if (!cof) {
        std::cout << "not a member\n";
        return 1;
    }
    for (std::size_t i = 0; i < cof->size(); ++i)
        std::cout << "c" << i + 1 << " = " << print_poly((*cof)[i]) << "\n";
    return 0;
}

int run_unimodular(const Options& opt, const std::string& ps) {
    auto cert = unimodular_cert(arg_poly(ps), opt.budget());
    if (opt.as_json) {
        json j = base();
        j["unimodular"] = cert.has_value();
        if (cert) {
            j["u"] = print_poly(cert->u);
            j["v"] = print_poly(cert->v);
        }
        emit(j);
        return cert ? 0 : 1;
    }
    if (!cert) {
        std::cout << "not unimodular over Q\n";
        return 1;
    }
    std::cout << "u = " << print_poly(cert->u) << "\n"
              << "v = " << print_poly(cert->v) << "\n";
    return 0;
}

int run_subalg(const Options& opt, const std::string& fs, const std::string& ps,
               const std::string& qs) {
    auto cert = subalg_member(arg_poly(fs), arg_poly(ps), arg_poly(qs), opt.budget());
    if (opt.as_json) {
        json j = base();
        j["member"] = cert.has_value();
        if (cert) j["expression"] = print_poly(cert->expression);
        emit(j);
        return cert ? 0 : 1;
    }
    if (!cert) {
        std::cout << "not a member of K[p,q]\n";
        return 1;
    }
    std::cout << "f = " << print_poly(cert->expression) << "\n";
    return 0;
}

int run_isauto(const Options& opt, const std::string& src) {
    AutoCheck check = is_automorphism(arg_endo(src), opt.budget());
    if (opt.as_json) {
        json j = base();
        j["automorphism"] = check.is_auto;
        if (check.inverse) j["inverse"] = print_endo(*check.inverse);
        emit(j);
        return check.is_auto ? 0 : 1;
    }
    if (!check.is_auto) {
        std::cout << "not an automorphism\n";
        return 1;
    }
    std::cout << "automorphism\ninverse: " << print_endo(*check.inverse) << "\n";
    return 0;
}

json vertices_to_json(const NewtonPolygon& poly) {
    json vs = json::array();
    for (const LatticePoint& v : poly.vertices) vs.push_back(json::array({v.i, v.j}));
    return vs;
}

std::string vertices_to_text(const NewtonPolygon& poly) {
    std::string out;
    for (const LatticePoint& v : poly.vertices) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
    }
    return out;
}

int run_polygon(const Options& opt, const std::string& ps) {
    NewtonPolygon poly = newton_polygon(arg_poly(ps));
    if (opt.as_json) {
        json j = base();
        j["vertices"] = vertices_to_json(poly);
        emit(j);
    } else {
        std::cout << vertices_to_text(poly) << "\n";
    }
    return 0;
}

int run_similar(const Options& opt, const std::string& ps, const std::string& qs) {
    auto ratio = radial_similarity(newton_polygon(arg_poly(ps)), newton_polygon(arg_poly(qs)));
    if (opt.as_json) {
        json j = base();
        j["similar"] = ratio.has_value();
        if (ratio) j["ratio"] = rat_to_string(*ratio);
        emit(j);
        return ratio ? 0 : 1;
    }
    if (!ratio) {
        std::cout << "not radially similar\n";
        return 1;
    }
    std::cout << "ratio = " << rat_to_string(*ratio) << "\n";
    return 0;
}

int run_thm13(const Options& opt, const std::string& ps, const std::string& qs) {
    Thm13Result r = thm13_reduce(arg_poly(ps), arg_poly(qs), opt.budget());
    if (opt.as_json) {
        json j = base();
        json steps = json::array();
        for (const Thm13Step& s : r.steps)
            steps.push_back(json{{"c", rat_to_string(s.c)}, {"k", s.k}});
        j["steps"] = steps;
        j["q_final"] = print_poly(r.q_final);
        j["radially_similar"] = r.radially_similar;
        if (r.ratio) j["ratio"] = rat_to_string(*r.ratio);
        emit(j);
        return 0;
    }
    for (const Thm13Step& s : r.steps)
        std::cout << "q -= " << rat_to_string(s.c) << " * p^" << s.k << "\n";
    std::cout << "q_final = " << print_poly(r.q_final) << "\n";
    if (r.radially_similar)
        std::cout << "radially similar, ratio = " << rat_to_string(*r.ratio) << "\n";
    else
        std::cout << "not radially similar\n";
    return 0;
}

int run_subduce(const Options& opt, const std::string& fs, const std::string& ps) {
    auto h = subduce(arg_poly(fs), arg_poly(ps));
    if (opt.as_json) {
        json j = base();
        j["member"] = h.has_value();
        if (h) j["h"] = print_uni(*h);
        emit(j);
        return h ? 0 : 1;
    }
    if (!h) {
        std::cout << "not in K[p]\n";
        return 1;
    }
    std::cout << "h(t) = " << print_uni(*h) << "\n";
    return 0;
}

int run_amreduce(const Options& opt, const std::string& fs, const std::string& gs) {
    AmResult r = am_reduce(arg_poly(fs), arg_poly(gs), opt.budget());
    if (opt.as_json) {
        json j = base();
        j["ok"] = r.ok;
        if (r.ok) {
            json steps = json::array();
            for (const AmStep& s : r.steps)
                steps.push_back(json{{"slot", s.reduce_first ? "first" : "second"},
                                     {"c", rat_to_string(s.c)},
                                     {"k", s.k}});
            j["steps"] = steps;
            j["h"] = print_poly(r.h);
            j["h_is_first"] = r.h_is_first;
        } else {
            j["error"] = r.error;
        }
        emit(j);
        return r.ok ? 0 : 1;
    }
    if (!r.ok) {
        std::cout << r.error << "\n";
        return 1;
    }
    for (const AmStep& s : r.steps)
        std::cout << (s.reduce_first ? "first" : "second") << " -= " << rat_to_string(s.c)
                  << " * " << (s.reduce_first ? "second" : "first") << "^" << s.k << "\n";
    std::cout << "h = " << print_poly(r.h) << "\n";
    return 0;
}

const char* status_name(RetractionCheck::Status s) {
    switch (s) {
        case RetractionCheck::Status::proper: return "proper";
        case RetractionCheck::Status::identity_image: return "identity image";
        case RetractionCheck::Status::constants_image: return "constants image";
        case RetractionCheck::Status::not_idempotent: return "not idempotent";
        case RetractionCheck::Status::generator_not_found: return "generator not found";
    }
    return "?";
}

int run_verify_retraction(const Options& opt, const std::string& src) {
    RetractionCheck chk = verify_retraction(arg_endo(src), opt.budget());
    if (opt.as_json) {
        json j = base();
        j["status"] = status_name(chk.status);
        if (chk.proper())
            j.update(cert_to_json(*chk.cert));
        else
            j["detail"] = chk.detail;
        emit(j);
        return chk.proper() ? 0 : 1;
    }
    if (!chk.proper()) {
        std::cout << status_name(chk.status) << ": " << chk.detail << "\n";
        return 1;
    }
    std::cout << "proper retraction\n"
              << "generator = " << print_poly(chk.cert->generator) << "\n"
              << "x image = witness " << print_uni(chk.cert->witness_x) << "\n"
              << "y image = witness " << print_uni(chk.cert->witness_y) << "\n";
    return 0;
}

int run_normalize(const Options& opt, const std::string& src) {
    NormalizeResult r = normalize_retract(arg_endo(src), opt.budget());
    if (opt.as_json) {
        json j = base();
        j["ok"] = r.ok;
        if (r.ok) {
            j["psi"] = print_endo(to_endo(r.psi, opt.budget()));
            j["psi_steps"] = word_to_json(r.psi);
            j["generator"] = print_poly(r.generator);
            j["p_normal"] = print_poly(r.p_normal);
            j["q"] = print_poly(r.q);
        } else {
            j["error"] = r.error;
        }
        emit(j);
        return r.ok ? 0 : 1;
    }
    if (!r.ok) {
        std::cout << r.error << "\n";
        return 1;
    }
    std::cout << "psi: " << print_endo(to_endo(r.psi, opt.budget())) << "\n"
              << "generator = " << print_poly(r.generator) << "\n"
              << "p_normal = " << print_poly(r.p_normal) << "\n"
              << "q = " << print_poly(r.q) << "\n";
    return 0;
}

int run_cor12(const Options& opt, const std::string& ps, const std::string& es) {
    Cor12Result r = cor12_retraction(arg_poly(ps), arg_endo(es), opt.budget());
    if (!r.ok && r.error == "phi(p) != x") throw PrecondError(r.error);
    if (opt.as_json) {
        json j = base();
        j["ok"] = r.ok;
        if (r.ok)
            j.update(cert_to_json(*r.cert));
        else
            j["error"] = r.error;
        emit(j);
        return r.ok ? 0 : 1;
    }
    if (!r.ok) {
        std::cout << r.error << "\n";
        return 1;
    }
    std::cout << "rho: " << print_endo(r.cert->retraction) << "\n"
              << "generator = " << print_poly(r.cert->generator) << "\n";
    return 0;
}

const char* cor31_status_name(Cor31Result::Status s) {
    switch (s) {
        case Cor31Result::Status::retract: return "retract";
        case Cor31Result::Status::no_homogeneous_divisor: return "no homogeneous divisor";
        case Cor31Result::Status::extension_required: return "extension required";
    }
    return "?";
}

int run_cor31(const Options& opt, const std::string& ps) {
    Cor31Result r = cor31_retraction(arg_poly(ps), opt.budget());
    bool ok = r.status == Cor31Result::Status::retract;
    if (opt.as_json) {
        json j = base();
        j["status"] = cor31_status_name(r.status);
        j["divisor"] = print_poly(r.divisor);
        if (ok) {
            j["c"] = rat_to_string(*r.c);
            j.update(cert_to_json(*r.cert));
        } else {
            j["detail"] = r.detail;
        }
        emit(j);
        return ok ? 0 : 1;
    }
    if (!ok) {
        std::cout << cor31_status_name(r.status) << ": " << r.detail << "\n";
        return 1;
    }
    std::cout << "retraction: " << print_endo(r.cert->retraction) << "\n"
              << "divisor = " << print_poly(r.divisor) << "\n"
              << "c = " << rat_to_string(*r.c) << "\n";
    return 0;
}

int run_cor14(const Options& opt, const std::string& ps) {
    Cor14Report rep = cor14_lemmas(arg_poly(ps));
    if (opt.as_json) {
        json j = base();
        j["divisible_by_x"] = rep.divisible_by_x;
        j["y_axis_edge"] = rep.y_axis_edge;
        j["consistent_with_jacobian_mate"] = rep.consistent_with_jacobian_mate;
        emit(j);
    } else {
        std::cout << "divisible by x: " << (rep.divisible_by_x ? "yes" : "no") << "\n"
                  << "y-axis edge: " << (rep.y_axis_edge ? "yes" : "no") << "\n"
                  << "consistent with a Jacobian mate: "
                  << (rep.consistent_with_jacobian_mate ? "yes" : "no") << "\n";
    }
    return 0;
}

std::string degree_text(int d) {
    return d == kNegInfDegree ? std::string("-inf") : std::to_string(d);
}

int run_trace(const Options& opt, const std::string& src, int kmax) {
    DegreeTrace t = degree_trace(arg_endo(src), kmax, opt.budget());
    if (opt.as_json) {
        json j = base();
        json ds = json::array();
        for (auto [dx, dy] : t.degrees) {
            json pair = json::array();
            if (dx == kNegInfDegree)
                pair.push_back(nullptr);
            else
                pair.push_back(dx);
            if (dy == kNegInfDegree)
                pair.push_back(nullptr);
            else
                pair.push_back(dy);
            ds.push_back(pair);
        }
        j["degrees"] = ds;
        j["truncated"] = t.truncated;
        emit(j);
        return 0;
    }
    for (std::size_t k = 0; k < t.degrees.size(); ++k)
        std::cout << k + 1 << ": (" << degree_text(t.degrees[k].first) << ", "
                  << degree_text(t.degrees[k].second) << ")\n";
    if (t.truncated) std::cout << "truncated at the degree cap\n";
    return 0;
}

int run_fixed(const Options& opt, const std::string& src, int d) {
    FixedSpace space = fixed_polys(arg_endo(src), d, opt.budget());
    if (opt.as_json) {
        json j = base();
        j["degree_bound"] = space.degree_bound;
        json basis = json::array();
        for (const Poly& f : space.basis) basis.push_back(print_poly(f));
        j["basis"] = basis;
        emit(j);
        return 0;
    }
    for (const Poly& f : space.basis) std::cout << print_poly(f) << "\n";
    return 0;
}

const char* cor17_status_name(Cor17Report::Status s) {
    switch (s) {
        case Cor17Report::Status::consistent: return "consistent";
        case Cor17Report::Status::premise_not_met: return "premise not met";
        case Cor17Report::Status::theorem_violation: return "theorem violation";
    }
    return "?";
}

int run_cor17(const Options& opt, const std::string& src, int d) {
    Cor17Report rep = cor17_consistency(arg_endo(src), d, opt.budget());
    bool ok = rep.status == Cor17Report::Status::consistent;
    if (opt.as_json) {
        json j = base();
        j["status"] = cor17_status_name(rep.status);
        j["keller"] = rep.keller;
        j["has_fixed"] = rep.has_fixed;
        j["detail"] = rep.detail;
        emit(j);
        return ok ? 0 : 1;
    }
    std::cout << cor17_status_name(rep.status) << ": " << rep.detail << "\n";
    return ok ? 0 : 1;
}

int run_random_tame(const Options& opt, int word_len, int coeff_bound, int deg_bound) {
    TameWord w = random_tame(opt.seed, word_len, coeff_bound, deg_bound);
    Endo phi = to_endo(w, opt.budget());
    if (opt.as_json) {
        json j = base();
        j["seed"] = opt.seed;
        j["word_len"] = word_len;
        j["steps"] = word_to_json(w);
        j["endo"] = print_endo(phi);
        emit(j);
        return 0;
    }
    std::cout << print_endo(phi) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic toolkit for polynomial retracts of K[x,y]"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable JSON output");
    app.add_option("--seed", opt.seed, "seed for randomized verbs");
    app.add_option("--budget", opt.budget_steps, "reduction step budget");
    app.add_option("--degree-cap", opt.degree_cap, "intermediate degree cap");

    // One string slot per positional across all verbs.
    std::string a1, a2, a3;
    std::vector<std::string> rest;
    std::string order_name = "grlex";
    int kmax = 1, dbound = 2, word_len = 0, coeff_bound = 3, deg_bound = 2;

    auto* c_parse = app.add_subcommand("parse", "canonicalize a polynomial");
    c_parse->add_option("poly", a1)->required();
    auto* c_jacdet = app.add_subcommand("jacdet", "Jacobian determinant of a mapping");
    c_jacdet->add_option("endo", a1)->required();
    auto* c_keller = app.add_subcommand("keller", "Keller condition check");
    c_keller->add_option("endo", a1)->required();
    auto* c_dep = app.add_subcommand("dependent", "algebraic dependence of a pair");
    c_dep->add_option("p", a1)->required();
    c_dep->add_option("q", a2)->required();
    auto* c_gb = app.add_subcommand("gb", "reduced Groebner basis");
    c_gb->add_option("--order", order_name, "lex or grlex");
    c_gb->add_option("gens", rest)->required();
    auto* c_member = app.add_subcommand("member", "ideal membership with cofactors");
    c_member->add_option("f", a1)->required();
    c_member->add_option("gens", rest)->required();
    auto* c_unimod = app.add_subcommand("unimodular", "unimodular gradient certificate");
    c_unimod->add_option("p", a1)->required();
    auto* c_subalg = app.add_subcommand("subalg", "membership in K[p,q]");
    c_subalg->add_option("f", a1)->required();
    c_subalg->add_option("p", a2)->required();
    c_subalg->add_option("q", a3)->required();
    auto* c_isauto = app.add_subcommand("isauto", "automorphism check with inverse");
    c_isauto->add_option("endo", a1)->required();
    auto* c_polygon = app.add_subcommand("polygon", "Newton polygon vertices");
    c_polygon->add_option("p", a1)->required();
    auto* c_similar = app.add_subcommand("similar", "radial similarity of two polygons");
    c_similar->add_option("p", a1)->required();
    c_similar->add_option("q", a2)->required();
    auto* c_thm13 = app.add_subcommand("thm13", "pure-x cancellation loop");
    c_thm13->add_option("p", a1)->required();
    c_thm13->add_option("q", a2)->required();
    auto* c_subduce = app.add_subcommand("subduce", "membership in K[p]");
    c_subduce->add_option("f", a1)->required();
    c_subduce->add_option("p", a2)->required();
    auto* c_amreduce = app.add_subcommand("amreduce", "Euclidean pair reduction");
    c_amreduce->add_option("f", a1)->required();
    c_amreduce->add_option("g", a2)->required();
    auto* c_verify = app.add_subcommand("verify-retraction", "certify a retraction");
    c_verify->add_option("endo", a1)->required();
    auto* c_normalize = app.add_subcommand("normalize", "normal form x + y*q of a retract");
    c_normalize->add_option("endo", a1)->required();
    auto* c_cor12 = app.add_subcommand("cor12", "retraction from a mapping with phi(p) = x");
    c_cor12->add_option("p", a1)->required();
    c_cor12->add_option("endo", a2)->required();
    auto* c_cor31 = app.add_subcommand("cor31", "retraction from a homogeneous divisor");
    c_cor31->add_option("p", a1)->required();
    auto* c_cor14 = app.add_subcommand("cor14", "x-divisibility and y-axis edge report");
    c_cor14->add_option("p", a1)->required();
    auto* c_trace = app.add_subcommand("trace", "iterated image degree trace");
    c_trace->add_option("endo", a1)->required();
    c_trace->add_option("kmax", kmax)->required();
    auto* c_fixed = app.add_subcommand("fixed", "basis of the fixed subspace up to degree d");
    c_fixed->add_option("endo", a1)->required();
    c_fixed->add_option("d", dbound)->required();
    auto* c_cor17 = app.add_subcommand("cor17", "Keller + fixed polynomial consistency");
    c_cor17->add_option("endo", a1)->required();
    c_cor17->add_option("d", dbound)->required();
    auto* c_random = app.add_subcommand("random-tame", "seeded random tame automorphism");
    c_random->add_option("word_len", word_len)->required();
    c_random->add_option("--coeff-bound", coeff_bound);
    c_random->add_option("--deg-bound", deg_bound);

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*c_parse) return run_parse(opt, a1);
        if (*c_jacdet) return run_jacdet(opt, a1);
        if (*c_keller) return run_keller(opt, a1);
        if (*c_dep) return run_dependent(opt, a1, a2);
        if (*c_gb) return run_gb(opt, rest, order_name);
        if (*c_member) return run_member(opt, a1, rest);
        if (*c_unimod) return run_unimodular(opt, a1);
        if (*c_subalg) return run_subalg(opt, a1, a2, a3);
        if (*c_isauto) return run_isauto(opt, a1);
        if (*c_polygon) return run_polygon(opt, a1);
        if (*c_similar) return run_similar(opt, a1, a2);
        if (*c_thm13) return run_thm13(opt, a1, a2);
        if (*c_subduce) return run_subduce(opt, a1, a2);
        if (*c_amreduce) return run_amreduce(opt, a1, a2);
        if (*c_verify) return run_verify_retraction(opt, a1);
        if (*c_normalize) return run_normalize(opt, a1);
        if (*c_cor12) return run_cor12(opt, a1, a2);
        if (*c_cor31) return run_cor31(opt, a1);
        if (*c_cor14) return run_cor14(opt, a1);
        if (*c_trace) return run_trace(opt, a1, kmax);
        if (*c_fixed) return run_fixed(opt, a1, dbound);
        if (*c_cor17) return run_cor17(opt, a1, dbound);
        if (*c_random) return run_random_tame(opt, word_len, coeff_bound, deg_bound);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PrecondError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
