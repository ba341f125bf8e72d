// ellmirror: command-line front end.
//
//   ellmirror [global options] <subcommand> [options]
//
// Exit status: 0 success, 2 usage error, 3 verification failure,
// 4 internal invariant violation.

#include "criteria.hpp"
#include "ellmirror/affine_base.hpp"
#include "ellmirror/elliptic.hpp"
#include "ellmirror/gw_counts.hpp"
#include "ellmirror/json_io.hpp"
#include "ellmirror/mirror_engine.hpp"
#include "ellmirror/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace em = ellmirror;
using em::Json;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kVerifyFailed = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* const kAnchored = "source-anchored";
const char* const kDerived = "derived";
const char* const kConvention = "measured-convention";

struct RunConfig {
    int mirror_grade = 8;
    int i_grade = 6;
    std::string theta_tol = "1e-12";
    int bridge_order = 49;
    std::string out;
    std::vector<std::string> emit{"json"};
    int ray_label_offset = 0;
    std::string pairing = "divisor";
    std::string nome = "pi";
    unsigned threads = 1;

    Json to_json() const {
        return Json{{"mirror_grade", mirror_grade},   {"i_grade", i_grade},
                    {"theta_tol", theta_tol},         {"bridge_order", bridge_order},
                    {"ray_label_offset", ray_label_offset}, {"pairing", pairing},
                    {"nome", nome}};
    }
    bool emits(const std::string& f) const { return std::find(emit.begin(), emit.end(), f) != emit.end(); }
};

// Writes <out>/<name>.<ext>; nothing happens without --out.
class Artifacts {
public:
    Artifacts(const RunConfig& c, std::string sub) : cfg_(c), sub_(std::move(sub)) {}

    void json(const std::string& name, Json data, Json provenance) const {
        if (!cfg_.emits("json")) return;
        Json doc{{"metadata",
                  {{"tool", "ellmirror"}, {"subcommand", sub_}, {"config", cfg_.to_json()}, {"provenance", provenance}}},
                 {"data", std::move(data)}};
        write(name + ".json", doc.dump(2) + "\n");
    }
    void csv(const std::string& name, const std::string& body) const {
        if (cfg_.emits("csv")) write(name + ".csv", body);
    }
    void svg(const std::string& name, const std::string& body) const {
        if (cfg_.emits("svg")) write(name + ".svg", body);
    }

private:
    void write(const std::string& file, const std::string& body) const {
        if (cfg_.out.empty()) return;
        std::filesystem::create_directories(cfg_.out);
        std::ofstream f(std::filesystem::path(cfg_.out) / file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + file);
        f << body;
    }
    const RunConfig& cfg_;
    std::string sub_;
};

em::Complex rho_from(const std::string& s, const RunConfig& cfg) {
    em::Complex r;
    try {
        r = em::parse_complex(s);
    } catch (const std::exception& e) {
        throw UsageError("bad --rho: " + std::string(e.what()));
    }
    if (!(r.imag() > 0)) throw UsageError("--rho must have positive imaginary part");
    // q = exp(2 pi i rho) is the same nome as exp(i pi (2 rho))
    return cfg.nome == "2pi" ? em::Complex(2) * r : r;
}

em::Real tol_from(const std::string& s) {
    em::Real t;
    try {
        t = em::Real(s);
    } catch (const std::exception&) {
        throw UsageError("bad tolerance: " + s);
    }
    if (!(t > 0)) throw UsageError("tolerance must be positive");
    return t;
}

std::map<em::ThreefoldClass, em::Rational> counts_at(int grade) {
    return em::threefold_counts(em::mirror_map(em::i_function(grade)), grade);
}

std::string class_label(const em::SectionClass& c) {
    std::ostringstream s;
    s << c.d << "H";
    for (int i = 0; i < 9; ++i) {
        if (c.a[i] == 0) continue;
        s << (c.a[i] > 0 ? " - " : " + ");
        auto m = c.a[i] > 0 ? c.a[i] : -c.a[i];
        if (m != 1) s << m;
        s << "E" << i + 1;
    }
    return s.str();
}

// ---- subcommands -------------------------------------------------------------

int cmd_phi(const RunConfig& cfg, int kmax, const std::vector<std::int64_t>& point) {
    Artifacts art(cfg, "phi");
    if (!point.empty()) {
        if (point[1] <= 0) throw UsageError("--point needs y > 0");
        std::cout << "phi(" << point[0] << "," << point[1] << ") = " << em::phi(point[0], point[1]).str() << "\n";
        art.json("phi_point", Json{{"x", point[0]}, {"y", point[1]}, {"phi", em::phi(point[0], point[1]).str()}},
                 Json{{"phi", kDerived}});
        return kOk;
    }
    Json rays = Json::array();
    std::ostringstream csv;
    csv << "k,kink,phi_D1,phi_D2,phi_D3,phi_D4\n";
    for (int k = -kmax; k <= kmax; ++k) {
        auto v = em::phi(k, 1);
        auto kk = em::kink(k);
        std::cout << std::setw(4) << k << "  kink " << kk.str() << "  phi(k,1) = " << v.str() << "\n";
        rays.push_back(Json{{"k", k}, {"kink", kk.str()}, {"phi", v.str()}});
        csv << k << "," << kk.str();
        for (const auto& c : v.d) csv << "," << em::to_string(c);
        csv << "\n";
    }
    art.json("phi", Json{{"kmax", kmax}, {"rays", rays}},
             Json{{"kink", kConvention}, {"phi", kDerived}, {"note", "ray (k,1) carries D_{((k-1) mod 4)+1}"}});
    art.csv("phi", csv.str());
    art.svg("phi", em::base_svg(kmax, true));
    return kOk;
}

int cmd_walls(const RunConfig& cfg) {
    Artifacts art(cfg, "walls");
    auto counts = counts_at(cfg.i_grade);
    auto rep = em::to_wall_counts(counts);
    auto walls = em::default_walls(cfg.mirror_grade, counts);
    for (const auto& l : rep.lines)
        std::cout << (l.match ? "ok   " : "FAIL ") << l.name << ": " << em::to_string(l.threefold_count) << " = "
                  << l.formula << "\n";
    for (const auto& e : walls.entries)
        std::cout << e.ray.str() << " w=" << e.tangency << " " << e.class_tag << "+" << e.fibre_steps << "F  "
                  << em::to_string(e.count) << "\n";
    Json lines = Json::array();
    for (const auto& l : rep.lines)
        lines.push_back(Json{{"name", l.name},
                             {"threefold_count", em::to_string(l.threefold_count)},
                             {"reconstructed", em::to_string(l.reconstructed)},
                             {"formula", l.formula},
                             {"match", l.match}});
    art.json("walls", Json{{"bookkeeping", lines}, {"table", em::to_json(walls)}},
             Json{{"bookkeeping", kAnchored},
                  {"tangency1_counts", kDerived},
                  {"tangency2_counts", kDerived},
                  {"placement", kConvention}});
    art.csv("walls", em::to_csv(walls));
    return rep.all_match ? kOk : kVerifyFailed;
}

int cmd_mirror_eqs(const RunConfig& cfg, int truncation, bool spot_check) {
    Artifacts art(cfg, "mirror-eqs");
    auto walls = em::default_walls(truncation, counts_at(cfg.i_grade));
    auto eq = em::assemble_equations(walls, truncation, spot_check);
    Json fam = Json::object();
    std::ostringstream csv;
    csv << "family";
    for (const auto& l : eq.lattice->labels()) csv << "," << l;
    csv << ",numerator,denominator\n";
    for (const auto& name : eq.order) {
        const auto& s = eq.families.at(name);
        std::cout << name << " = " << em::to_text(s) << "\n";
        fam[name] = em::to_json(s);
        for (const auto& [e, c] : s.terms()) {
            csv << name;
            for (auto x : e) csv << "," << x;
            csv << "," << c.get_num().get_str() << "," << c.get_den().get_str() << "\n";
        }
    }
    Json ep = Json::object();
    for (const auto& [k, ok] : eq.endpoint_consistent) {
        ep[k] = ok;
        if (!ok) std::cout << "note: coefficient " << k << " depends on the endpoint perturbation\n";
    }
    art.json("mirror_eqs", Json{{"truncation", truncation}, {"families", fam}, {"endpoint_consistent", ep}},
             Json{{"families", kDerived}, {"wall_placement", kConvention}, {"endpoint", kConvention}});
    art.csv("mirror_eqs", csv.str());
    if (cfg.emits("svg")) {
        em::BrokenLineEngine eng(walls, truncation);
        art.svg("mirror_eqs_D1D3", em::broken_lines_svg(eng.enumerate_pairs(em::canonical_lift(1),
                                                                            em::canonical_lift(3), {4, 2})));
    }
    return kOk;
}

int cmd_i_function(const RunConfig& cfg, int grade) {
    Artifacts art(cfg, "i-function");
    auto I = em::i_function(grade);
    auto table = em::i_function_coefficients(I);
    auto b = em::stirling_bound();
    auto rep = em::exp_bound_certify(table, b);
    Json coeffs = Json::array();
    std::ostringstream csv;
    csv << "a,b,c,d,numerator,denominator\n";
    for (const auto& e : table) {
        std::cout << "(" << e.v[0] << "," << e.v[1] << "," << e.v[2] << "," << e.v[3] << ")  "
                  << em::to_string(e.value) << "\n";
        coeffs.push_back(Json{{"class", e.v}, {"value", em::to_string(e.value)}});
        csv << e.v[0] << "," << e.v[1] << "," << e.v[2] << "," << e.v[3] << "," << e.value.get_num().get_str()
            << "," << e.value.get_den().get_str() << "\n";
    }
    std::cout << "certificate |a_v| <= " << em::to_string(b.c) << " * " << em::to_string(b.r)
              << "^diag(v): " << (rep.all_pass ? "pass" : "FAIL") << " (" << rep.failures << " failures)\n"
              << "empirical minimal r: " << rep.empirical_r << "\n";
    art.json("i_function",
             Json{{"max_grade", grade},
                  {"coefficients", coeffs},
                  {"certificate",
                   {{"c", em::to_string(b.c)}, {"r", em::to_string(b.r)}, {"all_pass", rep.all_pass},
                    {"failures", rep.failures}, {"empirical_r", rep.empirical_r}}}},
             Json{{"coefficients", kDerived}, {"certificate", kDerived}, {"empirical_r", kConvention}});
    art.csv("i_function", csv.str());
    return rep.all_pass ? kOk : kVerifyFailed;
}

int cmd_j_coeffs(const RunConfig& cfg, const std::vector<int>& cls) {
    Artifacts art(cfg, "j-coeffs");
    std::vector<em::ThreefoldClass> classes;
    if (cls.empty()) {
        classes = em::bisection_classes(cfg.i_grade);
    } else {
        if (cls.size() != 4) throw UsageError("--class needs four entries a,b,c,d");
        em::ThreefoldClass b{cls[0], cls[1], cls[2], cls[3]};
        for (int x : b)
            if (x < 0) throw UsageError("--class entries must be nonnegative");
        if (b == em::ThreefoldClass{0, 0, 0, 0} || em::class_degree(b) != 0)
            throw UsageError("--class must be a nonzero class of degree zero (c_1 . beta = 0)");
        classes.push_back(b);
    }
    int grade = cfg.i_grade;
    for (const auto& b : classes) grade = std::max(grade, b[0] + b[1] + b[2] + b[3]);
    auto mm = em::mirror_map(em::i_function(grade));
    const std::set<em::ThreefoldClass> anchored{{0, 2, 0, 1}, {1, 2, 0, 1}, {2, 2, 0, 1}};
    Json rows = Json::array(), prov = Json::object();
    std::string convention;
    for (const auto& b : classes) {
        auto ex = em::extract_curve_count(mm.J, b);
        em::Rational value = cfg.pairing == "literal" ? ex.raw.at(2) : ex.count;
        convention = cfg.pairing == "literal" ? "<H_2, Eul(L1+L2) * J_beta|_{hbar^-2}> without division"
                                              : ex.convention;
        if (classes.size() == 1)
            std::cout << em::to_string(value) << "\n";
        else
            std::cout << em::class_str(b) << "  " << em::to_string(value) << "\n";
        rows.push_back(Json{{"class", b},
                            {"count", em::to_string(value)},
                            {"divisor_consistent", ex.divisor_consistent},
                            {"descendant_top", em::to_string(ex.descendant_top)}});
        prov[em::class_str(b)] = anchored.count(b) && cfg.pairing == "divisor" ? kAnchored : kDerived;
    }
    prov["pairing"] = kConvention;
    art.json("j_coeffs", Json{{"i_grade", grade}, {"pairing", convention}, {"counts", rows}}, prov);
    return kOk;
}

int cmd_sections(const RunConfig& cfg, int degree, bool bisections) {
    Artifacts art(cfg, "sections");
    auto z = em::goldilocks_zone(degree);
    std::cout << "|GZ(S," << degree << ")| = " << z.size() << "\n";
    Json list = Json::array();
    std::ostringstream csv;
    csv << "d,a1,a2,a3,a4,a5,a6,a7,a8,a9\n";
    for (const auto& c : z) {
        std::cout << "  " << class_label(c) << "\n";
        list.push_back(Json{{"d", c.d}, {"a", c.a}});
        csv << c.d;
        for (auto x : c.a) csv << "," << x;
        csv << "\n";
    }
    Json data{{"degree", degree}, {"goldilocks_zone", list}};
    Json prov{{"goldilocks_zone", degree <= 1 ? kAnchored : kDerived}};
    if (bisections) {
        auto bs = em::rational_bisections(degree);
        std::cout << "rational bisections of degree " << degree << ": " << bs.size() << "\n";
        data["rational_bisections"] = bs.size();
        prov["rational_bisections"] = degree <= 2 ? kAnchored : kDerived;
    }
    art.json("sections", data, prov);
    art.csv("sections", csv.str());
    return kOk;
}

int cmd_bryan_leung(const RunConfig& cfg, int order) {
    Artifacts art(cfg, "bryan-leung");
    auto s = em::bryan_leung_series(order);
    Json coeffs = Json::array();
    for (std::int64_t m = 0; m <= order; ++m) {
        std::string c = em::to_string(s.coefficient({m}));
        std::cout << (m ? " " : "") << c;
        coeffs.push_back(c);
    }
    std::cout << "\n";
    art.json("bryan_leung", Json{{"order", order}, {"coefficients", coeffs}}, Json{{"coefficients", kDerived}});
    art.csv("bryan_leung", em::to_csv(s));
    return kOk;
}

int cmd_j_check(const RunConfig& cfg) {
    Artifacts art(cfg, "elliptic j-check");
    auto p = em::pencil_j_paths();
    auto js = em::j_in_s(p.weierstrass_path);
    bool s_ok = js == em::reference_j_in_s();
    bool ref_ok = p.weierstrass_path == em::reference_pencil_j();
    std::cout << "weierstrass path: " << p.weierstrass_path.str() << "\n"
              << "quartic path:     " << p.quartic_path.str() << "\n"
              << "paths agree: " << (p.paths_agree ? "yes" : "NO") << "\n"
              << "matches displayed j(t): " << (ref_ok ? "yes" : "NO") << "\n"
              << "s-form: " << js.str() << "\n"
              << "matches displayed s-form: " << (s_ok ? "yes" : "NO") << "\n";
    art.json("elliptic_j_check",
             Json{{"weierstrass_path", p.weierstrass_path.str()},
                  {"quartic_path", p.quartic_path.str()},
                  {"paths_agree", p.paths_agree},
                  {"s_form", js.str()},
                  {"s_form_matches", s_ok},
                  {"convention", p.convention}},
             Json{{"j", kAnchored}, {"quartic_path", kDerived}, {"normalization", kConvention}});
    return p.paths_agree && s_ok && ref_ok ? kOk : kVerifyFailed;
}

int cmd_theta(const RunConfig& cfg, const std::string& rho_s, const std::string& tol_s) {
    Artifacts art(cfg, "elliptic theta");
    auto rho = rho_from(rho_s, cfg);
    auto tol = tol_from(tol_s.empty() ? cfg.theta_tol : tol_s);
    auto v = em::theta_values(rho, em::default_theta_tol());
    Json th = Json::object();
    for (int i = 1; i <= 4; ++i) {
        std::cout << "Theta" << i << " = " << em::fmt(v[i], 30) << "   (tail <= " << em::fmt(v.error[i - 1], 3)
                  << ")\n";
        th["Theta" + std::to_string(i)] = em::fmt(v[i], 30);
    }
    bool ok = true;
    Json ids = Json::array();
    for (const auto& c : em::theta_identities(rho, tol)) {
        ok = ok && c.pass;
        std::cout << (c.pass ? "ok   " : "FAIL ") << c.identity << "  residual " << em::fmt(c.residual, 3) << "\n";
        ids.push_back(Json{{"identity", c.identity}, {"residual", em::fmt(c.residual, 3)}, {"pass", c.pass}});
    }
    art.json("elliptic_theta",
             Json{{"rho", em::fmt(rho, 30)}, {"q", em::fmt(v.q, 30)}, {"theta", th}, {"identities", ids}},
             Json{{"theta", kDerived}, {"identities", kAnchored}, {"nome", kConvention}});
    return ok ? kOk : kVerifyFailed;
}

int cmd_bridge(const RunConfig& cfg, int order, const std::string& rho_s) {
    Artifacts art(cfg, "elliptic bridge");
    if (order < 49) throw UsageError("--order must be at least 49");
    auto rho = rho_from(rho_s, cfg);
    auto sym = em::symmetric_series(em::default_walls(order, counts_at(cfg.i_grade)), order);
    auto rep = em::symmetric_locus_bridge(sym.f, sym.one_plus_r, sym.r_cross, rho);
    std::cout << "f    = " << em::to_text(sym.f) << "\n"
              << "1+r  = " << em::to_text(sym.one_plus_r) << "\n"
              << "r'   = " << em::to_text(sym.r_cross) << "\n"
              << "t = Theta2/(2 Theta3) = " << em::fmt(rep.t, 25) << "\n";
    Json ids = Json::array();
    for (const auto& b : rep.identities) {
        std::cout << (b.check.pass ? "ok   " : "FAIL ") << b.check.identity << "  c=" << em::to_string(b.declared_constant)
                  << "  fitted " << em::fmt(b.fitted_constant, 15) << "  residual " << em::fmt(b.check.residual, 3)
                  << "\n";
        ids.push_back(Json{{"identity", b.check.identity},
                           {"declared_constant", em::to_string(b.declared_constant)},
                           {"fitted_constant", em::fmt(b.fitted_constant, 20)},
                           {"residual", em::fmt(b.check.residual, 3)},
                           {"truncation_bound", em::fmt(b.truncation_bound, 3)},
                           {"pass", b.check.pass}});
    }
    art.json("elliptic_bridge",
             Json{{"order", order},
                  {"rho", em::fmt(rho, 25)},
                  {"f", em::to_json(sym.f)},
                  {"one_plus_r", em::to_json(sym.one_plus_r)},
                  {"r_cross", em::to_json(sym.r_cross)},
                  {"identities", ids},
                  {"convention", rep.convention}},
             Json{{"f", kAnchored}, {"one_plus_r", kDerived}, {"r_cross", kDerived}, {"constants", kConvention}});
    return rep.all_pass ? kOk : kVerifyFailed;
}

int cmd_modular(const RunConfig& cfg, const std::string& rho_s) {
    Artifacts art(cfg, "elliptic modular");
    auto rep = em::modular_consistency(rho_from(rho_s, cfg), tol_from(cfg.theta_tol));
    Json ids = Json::array();
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "ok   " : "FAIL ") << c.identity << "  residual " << em::fmt(c.residual, 3) << "\n";
        ids.push_back(Json{{"identity", c.identity}, {"residual", em::fmt(c.residual, 3)}, {"pass", c.pass}});
    }
    std::cout << "j(pencil) = " << em::fmt(rep.j_pencil, 25) << "\n";
    art.json("elliptic_modular",
             Json{{"rho", em::fmt(rep.rho, 25)}, {"tau", em::fmt(rep.tau, 25)}, {"j", em::fmt(rep.j_pencil, 25)},
                  {"checks", ids}},
             Json{{"checks", kDerived}, {"tau_map", kAnchored}});
    return rep.all_pass ? kOk : kVerifyFailed;
}

int cmd_family(const RunConfig& cfg, bool generic) {
    Artifacts art(cfg, "elliptic family");
    auto d = generic ? em::family_discriminant(em::generic_family()) : em::family_discriminant();
    std::cout << "family:        " << d.family.str() << "\n"
              << "discriminant:  " << d.branch.str() << "\n"
              << "secondary:     " << d.secondary.str() << "\n"
              << d.summary << "\n";
    art.json("elliptic_family",
             Json{{"family", d.family.str()}, {"discriminant", d.branch.str()}, {"secondary", d.secondary.str()},
                  {"summary", d.summary}},
             Json{{"discriminant", generic ? kDerived : kAnchored}});
    return kOk;
}

int cmd_verify(const RunConfig& cfg, bool quick) {
    Artifacts art(cfg, "verify");
    bool ok = true;
    Json rows = Json::array();
    for (const auto& c : em::acceptance::criteria()) {
        auto r = em::acceptance::run_criterion(c);
        std::cout << em::acceptance::format(r, !quick) << std::flush;
        ok = ok && r.pass();
        rows.push_back(Json{{"criterion", r.id},
                            {"name", r.name},
                            {"pass", r.pass()},
                            {"details", r.outcome.details},
                            {"info", r.outcome.info}});
    }
    art.json("verify", Json{{"criteria", rows}}, Json{{"criteria", kDerived}});
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mirror-family computations for the rational elliptic surface with an I4 fibre"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.set_config("--config", "", "flat key=value file; command-line flags override it");
    app.add_option("--mirror-grade", cfg.mirror_grade, "truncation of the mirror equations")
        ->check(CLI::PositiveNumber);
    app.add_option("--i-grade", cfg.i_grade, "I-function grade for the curve counts")->check(CLI::PositiveNumber);
    app.add_option("--theta-tol", cfg.theta_tol, "tolerance for theta identities");
    app.add_option("--bridge-order", cfg.bridge_order, "truncation of the symmetric-locus series")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "directory for artifacts");
    app.add_option("--emit", cfg.emit, "artifact formats")->check(CLI::IsMember({"json", "csv", "svg"}))->delimiter(',');
    app.add_option("--ray-label-offset", cfg.ray_label_offset, "ray-label offset (only 0 is supported)")
        ->check(CLI::IsMember({0}));
    app.add_option("--pairing", cfg.pairing, "curve-count pairing normalization")
        ->check(CLI::IsMember({"divisor", "literal"}));
    app.add_option("--nome", cfg.nome, "nome convention: pi for q = exp(i pi rho), 2pi for exp(2 pi i rho)")
        ->check(CLI::IsMember({"pi", "2pi"}));
    app.add_option("--threads", cfg.threads, "series multiplication threads")->check(CLI::PositiveNumber);

    std::function<int()> action;

    int kmax = 8;
    std::vector<std::int64_t> point;
    auto* phi = app.add_subcommand("phi", "kinks and values of phi on the universal cover");
    phi->add_option("--kmax", kmax, "ray range |k| <= kmax")->check(CLI::Range(1, 512));
    phi->add_option("--point", point, "evaluate phi at x,y")->expected(2)->delimiter(',');
    phi->callback([&] { action = [&] { return cmd_phi(cfg, kmax, point); }; });

    auto* walls = app.add_subcommand("walls", "default wall table and multiplicity bookkeeping");
    walls->callback([&] { action = [&] { return cmd_walls(cfg); }; });

    int truncation = 0;
    bool no_spot = false;
    auto* meqs = app.add_subcommand("mirror-eqs", "theta-function products and the mirror equations");
    meqs->add_option("--truncation", truncation, "grade truncation (default: --mirror-grade)")
        ->check(CLI::PositiveNumber);
    meqs->add_flag("--no-spot-check", no_spot, "skip the second-endpoint comparison");
    meqs->callback([&] {
        action = [&] { return cmd_mirror_eqs(cfg, truncation ? truncation : cfg.mirror_grade, !no_spot); };
    });

    int max_grade = 0;
    auto* ifn = app.add_subcommand("i-function", "I-function coefficients and the growth certificate");
    ifn->add_option("--max-grade", max_grade, "total grade (default: --i-grade)")->check(CLI::Range(1, 12));
    ifn->callback([&] { action = [&] { return cmd_i_function(cfg, max_grade ? max_grade : cfg.i_grade); }; });

    std::vector<int> cls;
    auto* jc = app.add_subcommand("j-coeffs", "curve counts read off from J");
    jc->add_option("--class", cls, "class a,b,c,d")->delimiter(',');
    jc->callback([&] { action = [&] { return cmd_j_coeffs(cfg, cls); }; });

    int degree = 1;
    bool bis = false;
    auto* sec = app.add_subcommand("sections", "Goldilocks-zone section classes");
    sec->add_option("--degree", degree, "degree d")->check(CLI::Range(0, 6));
    sec->add_flag("--bisections", bis, "also count rational bisections of degree d");
    sec->callback([&] { action = [&] { return cmd_sections(cfg, degree, bis); }; });

    int order = 30;
    auto* bl = app.add_subcommand("bryan-leung", "coefficients of prod (1 - z^m)^-12");
    bl->add_option("--order", order, "last coefficient")->check(CLI::Range(0, 100000));
    bl->callback([&] { action = [&] { return cmd_bryan_leung(cfg, order); }; });

    auto* ell = app.add_subcommand("elliptic", "j-invariant, theta functions and the bridge");
    ell->require_subcommand(1);
    auto* jchk = ell->add_subcommand("j-check", "compare the two j-invariant computations");
    jchk->callback([&] { action = [&] { return cmd_j_check(cfg); }; });
    std::string rho = "i", tol;
    auto* th = ell->add_subcommand("theta", "Jacobi thetas and identities at rho");
    th->add_option("--rho", rho, "point of the upper half plane, e.g. 1/2+2i");
    th->add_option("--tol", tol, "identity tolerance (default: --theta-tol)");
    th->callback([&] { action = [&] { return cmd_theta(cfg, rho, tol); }; });
    int border = 0;
    std::string brho = "3i";
    auto* br = ell->add_subcommand("bridge", "symmetric-locus series against theta functions");
    br->add_option("--order", border, "series truncation (default: --bridge-order)");
    br->add_option("--rho", brho, "evaluation point");
    br->callback([&] { action = [&] { return cmd_bridge(cfg, border ? border : cfg.bridge_order, brho); }; });
    std::string mrho = "3i";
    auto* mod = ell->add_subcommand("modular", "modular transformation checks and j-agreement");
    mod->add_option("--rho", mrho, "evaluation point");
    mod->callback([&] { action = [&] { return cmd_modular(cfg, mrho); }; });
    bool generic = false;
    auto* fam = ell->add_subcommand("family", "discriminant of the (2,2,2) family");
    fam->add_flag("--generic", generic, "use a generic member instead of the example family");
    fam->callback([&] { action = [&] { return cmd_family(cfg, generic); }; });

    bool quick = false;
    auto* ver = app.add_subcommand("verify", "run the acceptance criteria");
    ver->add_flag("--quick", quick, "print only summary lines and failures");
    ver->callback([&] { action = [&] { return cmd_verify(cfg, quick); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        em::set_series_threads(cfg.threads);
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kInternal;
    }
}
