// dqorbit: command-line front end.
//
// Exit codes: 0 when every check passes, 1 on a verification failure,
// 2 on bad input (parse, load or construction errors).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <dqorbit/expr.hpp>
#include <dqorbit/io.hpp>
#include <dqorbit/orbit.hpp>
#include <dqorbit/poisson.hpp>
#include <dqorbit/presets.hpp>
#include <dqorbit/relations.hpp>
#include <dqorbit/tdo.hpp>

using namespace dqorbit;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

struct Options {
    std::string preset = "sl2";
    std::string algebra_path;
    std::string orbit_path;
    std::string order;
    std::string map;
    std::vector<std::string> constants;
    bool json_out = false;

    std::string expr, lhs, rhs;
    std::string relations_preset;
    unsigned max_degree = 3;
    unsigned assoc_degree = 2;
    unsigned max_m = 8;
    std::string hbar = "1";
    std::string point;
};

std::vector<std::string> split_commas(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(' ');
        auto e = item.find_last_not_of(' ');
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
}

struct Session {
    LieAlgebra algebra;
    std::optional<OrbitFile> orbit_file;
    MonomialOrder order;
    QuantizationMap map = QuantizationMap::Standard;

    explicit Session(const Options &o)
    {
        if (!o.orbit_path.empty()) {
            orbit_file = load_orbit(o.orbit_path);
            algebra = orbit_file->spec.algebra;
            order = orbit_file->order;
            map = orbit_file->map;
        } else if (!o.algebra_path.empty()) {
            algebra = load_algebra(o.algebra_path);
            order = MonomialOrder::declaration(algebra.dim());
        } else {
            algebra = presets::by_name(o.preset);
            order = MonomialOrder::declaration(algebra.dim());
        }
        if (!o.order.empty()) {
            order = order_from_labels(algebra, split_commas(o.order));
        }
        if (!o.map.empty()) {
            map = quantization_map_from_string(o.map);
        }
        if (!o.constants.empty() && orbit_file) {
            throw LoadError("--constant cannot be combined with --orbit");
        }
        if (!orbit_file) {
            const std::size_t m = algebra.invariants().size();
            std::vector<HPoly> cs;
            if (!o.constants.empty()) {
                if (o.constants.size() != m) {
                    throw LoadError("expected " + std::to_string(m) + " --constant values");
                }
                for (const auto &c : o.constants) {
                    cs.push_back(parse_hpoly(c));
                }
            } else {
                for (std::size_t i = 0; i < m; ++i) {
                    cs.push_back(HPoly(Scalar::param(m == 1 ? "c0" : "c0_" + std::to_string(i + 1))));
                }
            }
            orbit_file = OrbitFile{OrbitSpec{algebra, {}, cs, std::nullopt, std::nullopt}, order, map};
        }
    }

    OrbitAlgebra orbit() const
    {
        return OrbitAlgebra::build(orbit_file->spec, order);
    }
};

std::string gauss_list(const std::vector<GaussRat> &v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? ", " : "") + v[k].str();
    }
    return s + ")";
}

// First regular point among unit vectors, their sum, and (1, 2, ..., n).
std::optional<std::vector<GaussRat>> find_regular_point(const LieAlgebra &L)
{
    const std::size_t n = L.dim();
    std::vector<std::vector<GaussRat>> candidates;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<GaussRat> e(n);
        e[k] = GaussRat(1);
        candidates.push_back(e);
    }
    candidates.emplace_back(n, GaussRat(1));
    std::vector<GaussRat> ramp;
    for (std::size_t k = 0; k < n; ++k) {
        ramp.push_back(GaussRat(static_cast<long>(k + 1)));
    }
    candidates.push_back(ramp);
    for (const auto &p : candidates) {
        if (is_regular(L, p)) {
            return p;
        }
    }
    return std::nullopt;
}

// Mathematical checks that failed, as opposed to unreadable input.
bool verification_error(const Error &e)
{
    return dynamic_cast<const NotDivisible *>(&e) || dynamic_cast<const NonTermination *>(&e)
        || dynamic_cast<const InconsistentConstants *>(&e) || dynamic_cast<const NotCentral *>(&e)
        || dynamic_cast<const NotInvariant *>(&e) || dynamic_cast<const NotRegular *>(&e)
        || dynamic_cast<const InconsistentRegularity *>(&e);
}

int cmd_check(const Options &o, const Session &s)
{
    const LieAlgebra &L = s.algebra;
    json report;
    bool ok = true;
    std::ostringstream out;

    auto jac = jacobi_check(L);
    report["jacobi"] = jac.empty();
    out << "jacobi: " << (jac.empty() ? "ok" : "FAILED") << "\n";
    for (const auto &v : jac) {
        out << "  [" << L.labels()[v.i] << ", " << L.labels()[v.j] << ", " << L.labels()[v.k]
            << "] residual " << gauss_list(v.residual) << "\n";
    }
    ok = ok && jac.empty();

    json inv = json::array();
    for (std::size_t i = 0; i < L.invariants().size(); ++i) {
        bool good = is_invariant(L.invariants()[i], L);
        ok = ok && good;
        inv.push_back(good);
        out << "invariant " << (i + 1) << ": " << L.invariants()[i].str(L.coordinate_names()) << " "
            << (good ? "ok" : "FAILED") << "\n";
    }
    report["invariants"] = inv;
    if (L.invariants().size() != L.rank()) {
        ok = false;
        out << "rank: " << L.rank() << " but " << L.invariants().size() << " invariants FAILED\n";
    }

    bool nondegenerate = true;
    try {
        killing_form(L);
    } catch (const SingularForm &) {
        nondegenerate = false;
    }
    report["killing_nondegenerate"] = nondegenerate;
    out << "killing form: " << (nondegenerate ? "nondegenerate" : "degenerate FAILED") << "\n";
    ok = ok && nondegenerate;

    std::optional<std::vector<GaussRat>> point;
    if (!o.point.empty()) {
        point.emplace();
        for (const auto &t : split_commas(o.point)) {
            point->push_back(parse_gauss(t));
        }
        if (point->size() != L.dim()) {
            throw LoadError("--point needs " + std::to_string(L.dim()) + " coordinates");
        }
    } else if (s.orbit_file->spec.witness) {
        point = s.orbit_file->spec.witness;
    } else if (nondegenerate && jac.empty()) {
        point = find_regular_point(L);
    }
    if (point) {
        RegularityReport r = regularity(L, *point);
        report["regularity"] = {{"point", gauss_list(*point)}, {"regular", r.regular}, {"q_m", r.q_m.str()},
                                {"jacobian_rank", r.jacobian_rank}};
        out << "regularity: " << gauss_list(*point) << " " << (r.regular ? "regular" : "singular") << ", q_"
            << L.rank() << " = " << r.q_m.str() << ", jacobian rank " << r.jacobian_rank << "\n";
        ok = ok && r.regular;
    } else {
        report["regularity"] = nullptr;
        out << "regularity: no regular point found FAILED\n";
        ok = false;
    }
    report["ok"] = ok;
    if (o.json_out) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << out.str() << (ok ? "ok" : "FAILED") << "\n";
    }
    return ok ? exit_ok : exit_failed;
}

int cmd_nf(const Options &o, const Session &s)
{
    Enveloping U(s.algebra);
    UElement a = parse_noncommutative(o.expr, U);
    if (o.json_out) {
        std::cout << json{{"input", o.expr}, {"normal_form", a.str(U.labels())}, {"terms", uelement_to_json(a, U.labels())}}.dump(2)
                  << "\n";
    } else {
        std::cout << a.str(U.labels()) << "\n";
    }
    return exit_ok;
}

int cmd_casimir(const Options &o, const Session &s)
{
    Enveloping U(s.algebra);
    const LieAlgebra &L = s.algebra;
    bool ok = true;
    json rows = json::array();
    for (std::size_t i = 0; i < L.invariants().size(); ++i) {
        UElement P = U.symmetrize(L.invariants()[i]);
        bool central = U.is_central(P);
        ok = ok && central;
        if (o.json_out) {
            rows.push_back({{"index", i + 1},
                            {"invariant", L.invariants()[i].str(L.coordinate_names())},
                            {"symmetrized", P.str(U.labels())},
                            {"central", central}});
        } else {
            std::cout << "P_" << (i + 1) << " = " << P.str(U.labels()) << "\n";
            std::cout << "central: " << (central ? "yes" : "no") << "\n";
        }
    }
    if (o.json_out) {
        std::cout << json{{"casimirs", rows}, {"ok", ok}}.dump(2) << "\n";
    }
    return ok ? exit_ok : exit_failed;
}

int cmd_star(const Options &o, const Session &s)
{
    OrbitAlgebra A = s.orbit();
    ParseOptions po{true};
    CommPoly f = parse_commutative(o.lhs, s.algebra, po);
    CommPoly g = parse_commutative(o.rhs, s.algebra, po);
    OrbitElement r = A.star(f, g, s.map);
    if (o.json_out) {
        std::cout << json{{"f", o.lhs},
                          {"g", o.rhs},
                          {"map", to_string(s.map)},
                          {"star", A.str(r)},
                          {"terms", poly_to_json(r.poly(), A.coordinate_names(), A.order())}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << A.str(r) << "\n";
    }
    return exit_ok;
}

int cmd_reduce(const Options &o, const Session &s)
{
    OrbitAlgebra A = s.orbit();
    UElement a = parse_noncommutative(o.expr, A.enveloping(), ParseOptions{true});
    OrbitElement r = A.reduce(a);
    if (o.json_out) {
        std::cout << json{{"input", o.expr},
                          {"reduced", A.str(r)},
                          {"terms", poly_to_json(r.poly(), A.coordinate_names(), A.order())}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << A.str(r) << "\n";
    }
    return exit_ok;
}

int cmd_relations(Options o)
{
    // so21 defaults to the symbolic orbit a^2 - c1 h - c2 h^2 with Ft > G > Et
    const bool so21 = o.relations_preset == "so21" && o.orbit_path.empty() && o.algebra_path.empty();
    if (!o.relations_preset.empty() && o.orbit_path.empty() && o.algebra_path.empty()) {
        o.preset = o.relations_preset;
    }
    if (so21) {
        if (o.constants.empty()) {
            o.constants = {"a^2 - c1*h - c2*h^2"};
        }
        if (o.order.empty()) {
            o.order = "Ft,G,Et";
        }
    }
    Session s(o);
    OrbitAlgebra A = s.orbit();
    std::vector<Relation> table;
    std::optional<InvariantSubalgebraReport> demo;
    if (s.algebra == presets::so21()) {
        demo = invariant_subalgebra_demo(A, presets::so21_involution());
        table = demo->table;
    } else {
        table = relations_table(involution_generators(A.enveloping()), A);
    }
    bool ok = !demo || demo->ok();
    if (o.json_out) {
        json rows = json::array();
        for (const auto &r : table) {
            rows.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}, {"value", A.str(r.value)}});
        }
        json j{{"generators", {{"V1", "X0^2"}, {"V2", "X1^2"}, {"V3", "X0*X1"}, {"V4", "X2"}}}, {"relations", rows}};
        if (demo) {
            j["non_invariant_generators"] = demo->non_invariant_generators;
            j["failed_classical_relations"] = demo->failed_classical_relations;
        }
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        const auto &lab = s.algebra.labels();
        std::cout << "V1 = " << lab[0] << "^2, V2 = " << lab[1] << "^2, V3 = " << lab[0] << "*" << lab[1]
                  << ", V4 = " << lab[2] << "\n";
        std::cout << "c(h) = " << s.orbit_file->spec.constants.at(0).str() << "\n";
        for (const auto &r : table) {
            std::cout << r.lhs << " = " << r.rhs << "\n";
        }
        if (demo) {
            for (const auto &g : demo->non_invariant_generators) {
                std::cout << "not invariant: " << g << "\n";
            }
            for (const auto &c : demo->failed_classical_relations) {
                std::cout << "classical relation fails: " << c << "\n";
            }
            std::cout << (ok ? "ok" : "FAILED") << "\n";
        }
    }
    return ok ? exit_ok : exit_failed;
}

std::string monomial_list(const std::vector<Monomial> &ms, const std::vector<std::string> &names)
{
    std::string s;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        CommPoly p = CommPoly::monomial(ms[k]);
        s += (k ? ", " : "") + p.str(names);
    }
    return s;
}

int cmd_verify(const Options &o, const Session &s)
{
    OrbitAlgebra A = s.orbit();
    DeformationReport r = verify_deformation(A, o.max_degree, std::min(o.assoc_degree, o.max_degree), s.map);
    if (o.json_out) {
        json v = json::array();
        for (const auto &x : r.violations) {
            v.push_back({{"axiom", x.axiom}, {"inputs", monomial_list(x.inputs, A.coordinate_names())},
                         {"detail", x.detail}});
        }
        std::cout << json{{"map", to_string(s.map)},
                          {"max_degree", o.max_degree},
                          {"pairs_checked", r.pairs_checked},
                          {"triples_checked", r.triples_checked},
                          {"violations", v},
                          {"ok", r.ok()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "map: " << to_string(s.map) << "\n";
        std::cout << "pairs checked: " << r.pairs_checked << "\n";
        std::cout << "triples checked: " << r.triples_checked << "\n";
        for (const auto &x : r.violations) {
            std::cout << x.axiom << " [" << monomial_list(x.inputs, A.coordinate_names()) << "]: " << x.detail << "\n";
        }
        std::cout << (r.ok() ? "ok" : "FAILED") << "\n";
    }
    return r.ok() ? exit_ok : exit_failed;
}

int cmd_repcheck(const Options &o)
{
    GaussRat hbar = parse_gauss(o.hbar);
    auto rows = tdo::repcheck(o.max_m, hbar);
    bool ok = true;
    json j = json::array();
    if (!o.json_out) {
        std::cout << "m\tdim\tcasimir\trescaled(hbar=" << hbar.str() << ")\tstatus\n";
    }
    for (const auto &r : rows) {
        ok = ok && r.ok;
        if (o.json_out) {
            j.push_back({{"m", r.m}, {"dim", r.dim}, {"casimir", r.casimir.str()}, {"rescaled", r.rescaled.str()},
                         {"ok", r.ok}});
        } else {
            std::cout << r.m << "\t" << r.dim << "\t" << r.casimir.str() << "\t" << r.rescaled.str() << "\t"
                      << (r.ok ? "pass" : "FAIL") << "\n";
        }
    }
    if (o.json_out) {
        std::cout << json{{"hbar", hbar.str()}, {"rows", j}, {"ok", ok}}.dump(2) << "\n";
    }
    return ok ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Deformation quantization of regular coadjoint orbits"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--preset", o.preset, "Built-in algebra: sl2, su2, so21")->check(CLI::IsMember(presets::names()));
    app.add_option("--algebra", o.algebra_path, "Algebra JSON file");
    app.add_option("--orbit", o.orbit_path, "Orbit JSON file");
    app.add_option("--order", o.order, "Variable precedence, greatest first, e.g. H,X,Y");
    app.add_option("--map", o.map, "Quantization map: standard or symmetric");
    app.add_option("--constant", o.constants, "c_i(h) for the i-th invariant, e.g. \"c0\" (repeatable)");
    app.add_flag("--json", o.json_out, "Machine-readable output");

    auto *check = app.add_subcommand("check", "Jacobi identity, invariance and regularity");
    check->add_option("--point", o.point, "Point on the dual, comma separated");
    auto *nf = app.add_subcommand("nf", "PBW normal form in U_h");
    nf->add_option("expr", o.expr)->required();
    app.add_subcommand("casimir", "Symmetrized invariants and their centrality");
    auto *star = app.add_subcommand("star", "Star product on the orbit");
    star->add_option("f", o.lhs)->required();
    star->add_option("g", o.rhs)->required();
    auto *reduce = app.add_subcommand("reduce", "Reduction of a U_h element modulo I_h");
    reduce->add_option("expr", o.expr)->required();
    auto *relations = app.add_subcommand("relations", "Relation table of the involution-fixed generators");
    relations->add_option("preset", o.relations_preset)->check(CLI::IsMember(presets::names()));
    auto *verify = app.add_subcommand("verify", "Deformation axioms on A-basis monomials");
    verify->add_option("--max-degree", o.max_degree, "Degree cap for pairs")->capture_default_str();
    verify->add_option("--assoc-degree", o.assoc_degree, "Degree cap for associativity triples")
        ->capture_default_str();
    auto *repcheck = app.add_subcommand("repcheck", "Twisted differential operator checks for sl2");
    repcheck->add_option("--max-m", o.max_m, "Largest m")->capture_default_str();
    repcheck->add_option("--hbar", o.hbar, "Rescaling parameter")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*repcheck) {
            return cmd_repcheck(o);
        }
        if (*relations) {
            return cmd_relations(o);
        }
        Session s(o);
        if (*check) {
            return cmd_check(o, s);
        }
        if (*nf) {
            return cmd_nf(o, s);
        }
        if (app.got_subcommand("casimir")) {
            return cmd_casimir(o, s);
        }
        if (*star) {
            return cmd_star(o, s);
        }
        if (*reduce) {
            return cmd_reduce(o, s);
        }
        if (*verify) {
            return cmd_verify(o, s);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return verification_error(e) ? exit_failed : exit_input;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
