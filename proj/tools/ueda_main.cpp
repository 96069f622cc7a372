#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ueda/json_io.hpp"
#include "ueda/linearize.hpp"
#include "ueda/resolve.hpp"
#include "ueda/ueda.hpp"

namespace {

using ueda::Json;

// Rational literals on the command line: "3", "-2/5".
ueda::Rational parse_rational(const std::string& text) {
    auto bad = [&] { return ueda::input_error("bad rational literal: " + text); };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            ueda::Rational q(mpz_class(text, 10));
            return q;
        }
        mpz_class num(text.substr(0, slash), 10);
        mpz_class den(text.substr(slash + 1), 10);
        if (den == 0) throw bad();
        ueda::Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

Json report_shell(const std::string& command, Json inputs, Json result) {
    return Json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)}};
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json verdict_json(const ueda::Classification& cls) {
    if (cls.finite()) {
        const auto& ft = cls.finite_type();
        return Json{{"verdict", "FiniteType"},
                    {"order", ft.order},
                    {"value", ueda::to_json(ft.report.value)},
                    {"representative", ueda::to_json(ft.report.representative.beta)}};
    }
    return Json{{"verdict", "InfiniteUpTo"},
                {"order", cls.infinite_up_to().max_order},
                {"value", nullptr},
                {"representative", nullptr}};
}

Json obstruction_json(const ueda::ObstructionReport& rep) {
    return Json{{"order", rep.order},
                {"value", ueda::to_json(rep.value)},
                {"representative", ueda::to_json(rep.representative.beta)}};
}

Json ledger_json(const ueda::MajorantLedger& ledger) {
    Json a = Json::array();
    for (int nu = 2; nu <= ledger.max_order(); ++nu)
        a.push_back(ueda::to_json(ledger.A_at(nu)));
    return Json{{"K", ueda::to_json(ledger.K)},
                {"R", ueda::to_json(ledger.R)},
                {"M", ueda::to_json(ledger.M)},
                {"A", std::move(a)}};
}

Json lattice_json(const ueda::DivisorLattice& lat) {
    Json rows = Json::array();
    for (const auto& row : lat.inter) rows.push_back(row);
    return Json{{"classes", lat.names}, {"intersection", std::move(rows)}};
}

Json divisor_json(const ueda::DivisorLattice& lat, const std::vector<long>& d) {
    Json out = Json::object();
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) out[lat.names[i]] = d[i];
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for neighborhoods of a cuspidal rational curve"};
    app.require_subcommand(1);

    // atlas gen|validate
    auto* atlas_cmd = app.add_subcommand("atlas", "Generate or validate atlas files");
    atlas_cmd->require_subcommand(1);
    auto* gen = atlas_cmd->add_subcommand("gen", "Generate a model atlas");
    gen->require_subcommand(1);

    int nw = 8, nzeta = 8;
    std::string out_path;
    auto* gen_trivial = gen->add_subcommand("trivial", "Trivial fibration model");
    gen_trivial->add_option("--nw", nw, "Fiber truncation order")->capture_default_str();
    gen_trivial->add_option("--zeta-window", nzeta, "Laurent window bound")
        ->capture_default_str();
    gen_trivial->add_option("-o,--output", out_path, "Output file (default: stdout)");

    int pert_order = 1, pert_exponent = 1;
    std::string pert_class = "1";
    auto* gen_pert =
        gen->add_subcommand("perturbed", "Trivial model with f_{n+1} = c·ζ^e inserted");
    gen_pert->add_option("--order", pert_order, "Perturbation order n")->required();
    gen_pert->add_option("--class", pert_class, "Coefficient c (rational)")
        ->capture_default_str();
    gen_pert->add_option("--exponent", pert_exponent, "ζ-exponent e")
        ->capture_default_str();
    gen_pert->add_option("--nw", nw, "Fiber truncation order")->capture_default_str();
    gen_pert->add_option("--zeta-window", nzeta, "Laurent window bound")
        ->capture_default_str();
    gen_pert->add_option("-o,--output", out_path, "Output file (default: stdout)");

    std::string validate_path;
    auto* validate_cmd = atlas_cmd->add_subcommand("validate", "Check atlas invariants");
    validate_cmd->add_option("file", validate_path, "Atlas JSON file")->required();

    std::string nb_path;
    auto* nb_cmd =
        app.add_subcommand("normal-bundle", "Winding and Pic⁰-class of the atlas");
    nb_cmd->add_option("file", nb_path, "Atlas JSON file")->required();

    std::string classify_path;
    int max_order = 6;
    auto* classify_cmd =
        app.add_subcommand("classify", "Finite/infinite type classification");
    classify_cmd->add_option("file", classify_path, "Atlas JSON file")->required();
    classify_cmd->add_option("--max-order", max_order, "Deepest order to certify")
        ->capture_default_str();

    std::string obst_path;
    int obst_order = 1;
    auto* obst_cmd = app.add_subcommand("obstruction", "Obstruction class at one order");
    obst_cmd->add_option("file", obst_path, "Atlas JSON file")->required();
    obst_cmd->add_option("--order", obst_order, "Order n")->required();

    std::string lin_path, ledger_path, probe_text;
    int lin_order = 4;
    auto* lin_cmd = app.add_subcommand("linearize", "Order-by-order linearization");
    lin_cmd->add_option("file", lin_path, "Atlas JSON file")->required();
    lin_cmd->add_option("--order", lin_order, "Agreement order N")->capture_default_str();
    lin_cmd->add_option("--ledger", ledger_path, "Write the certificate to a file");
    lin_cmd->add_option("--probe-radii", probe_text, "Probe radius for K/R/M (rational)");

    std::string cover_text = "default";
    long nbar = 0;
    auto* resolve_cmd =
        app.add_subcommand("resolve", "Cusp resolution and covering combinatorics");
    resolve_cmd->add_option("--cover", cover_text, "default or a config JSON file")
        ->capture_default_str();
    resolve_cmd->add_option("--nbar", nbar, "Type of the elliptic-side pair");

    CLI11_PARSE(app, argc, argv);

    if (gen_trivial->parsed() || gen_pert->parsed()) {
        ueda::Atlas atlas =
            gen_trivial->parsed()
                ? ueda::make_trivial_atlas(nw, nzeta)
                : ueda::make_perturbed_atlas_simple(
                      nw, nzeta, pert_order, ueda::Scalar(parse_rational(pert_class)),
                      pert_exponent);
        if (out_path.empty())
            emit(ueda::to_json(atlas));
        else
            ueda::save_atlas(atlas, out_path);
        return 0;
    }

    if (validate_cmd->parsed()) {
        ueda::Atlas atlas = ueda::load_atlas(validate_path);
        auto violations = ueda::validate(atlas);
        emit(report_shell("atlas validate", Json{{"file", validate_path}},
                          Json{{"violations", violations}}));
        return violations.empty() ? 0 : 1;
    }

    if (nb_cmd->parsed()) {
        ueda::Atlas atlas = ueda::load_atlas(nb_path);
        ueda::NormalBundleReport rep = ueda::normal_bundle_class(atlas);
        emit(report_shell("normal-bundle", Json{{"file", nb_path}},
                          Json{{"winding", rep.winding},
                               {"pic0_class", ueda::to_json(rep.pic0_class)},
                               {"trivial", rep.trivial()}}));
        return 0;
    }

    if (classify_cmd->parsed()) {
        ueda::Atlas atlas = ueda::load_atlas(classify_path);
        ueda::Classification cls = ueda::classify(atlas, max_order);
        emit(report_shell("classify",
                          Json{{"file", classify_path}, {"max_order", max_order}},
                          verdict_json(cls)));
        return 0;
    }

    if (obst_cmd->parsed()) {
        ueda::Atlas atlas = ueda::load_atlas(obst_path);
        ueda::SystemN system = ueda::SystemN::from_atlas(ueda::normalize(atlas));
        for (int n = 1; n < obst_order; ++n) system = ueda::upgrade(system);
        ueda::ObstructionReport rep = ueda::obstruction(system);
        emit(report_shell("obstruction",
                          Json{{"file", obst_path}, {"order", obst_order}},
                          obstruction_json(rep)));
        return 0;
    }

    if (lin_cmd->parsed()) {
        ueda::Atlas atlas = ueda::load_atlas(lin_path);
        std::optional<ueda::Rational> probe;
        if (!probe_text.empty()) probe = parse_rational(probe_text);
        ueda::LinearizationResult res = ueda::linearize(atlas, lin_order, probe);
        Json bounds = Json::array();
        for (const auto& b : res.bounds)
            bounds.push_back(Json{{"order", b.order},
                                  {"norm_chart0", ueda::to_json(b.norm_chart0)},
                                  {"norm_chart1", ueda::to_json(b.norm_chart1)},
                                  {"allowed", ueda::to_json(b.allowed)},
                                  {"ok", b.ok}});
        Json certificate{{"ledger", ledger_json(res.ledger)},
                         {"radius_estimate", ueda::to_json(res.radius_bound)},
                         {"bounds", std::move(bounds)},
                         {"bounds_ok", res.bounds_ok}};
        if (!ledger_path.empty()) {
            std::ofstream out(ledger_path);
            if (!out) throw ueda::input_error("cannot open ledger file: " + ledger_path);
            out << certificate.dump(2) << "\n";
        }
        emit(report_shell("linearize",
                          Json{{"file", lin_path}, {"order", lin_order}},
                          Json{{"agreement_order", res.agreement_order},
                               {"u0", ueda::to_json(res.u0)},
                               {"u1", ueda::to_json(res.u1)},
                               {"certificate", std::move(certificate)}}));
        return 0;
    }

    if (resolve_cmd->parsed()) {
        ueda::CoverConfig cfg;
        if (cover_text == "default") {
            cfg = ueda::CoverConfig::standard_sixfold();
        } else {
            std::ifstream in(cover_text);
            if (!in) throw ueda::input_error("cannot open cover config: " + cover_text);
            Json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw ueda::parse_error(cover_text + ": " + e.what());
            }
            cfg = ueda::cover_config_from_json(j);
        }
        ueda::ResolutionResult down = ueda::resolve_cusp(0);
        ueda::CoverResult up = ueda::cover_pullback(down, cfg);
        ueda::ContractionReport contraction = ueda::contract_chain(up);

        Json self_down = Json::object();
        for (const auto& [name, v] : ueda::self_intersections(down.lattice))
            self_down[name] = v;
        Json self_up = Json::object();
        for (const auto& [name, v] : ueda::self_intersections(up.lattice))
            self_up[name] = v;

        Json result{
            {"resolution",
             Json{{"lattice", lattice_json(down.lattice)},
                  {"pullback", divisor_json(down.lattice, down.pullback_divisor)},
                  {"self_intersections", std::move(self_down)},
                  {"pullback_self_intersection",
                   down.lattice.pairing(down.pullback_divisor, down.pullback_divisor)}}},
            {"cover",
             Json{{"lattice", lattice_json(up.lattice)},
                  {"d_tilde", divisor_json(up.lattice, up.d_tilde)},
                  {"pullback", divisor_json(up.lattice, up.pullback_divisor)},
                  {"self_intersections", std::move(self_up)}}},
            {"contraction", Json{{"order", contraction.contracted},
                                 {"count", contraction.contracted.size()},
                                 {"final_self_intersection",
                                  contraction.final_self_intersection}}}};
        Json inputs{{"cover", cover_text}};
        if (nbar > 0) {
            result["ell"] = ueda::to_json(ueda::ell_from_type(nbar));
            inputs["nbar"] = nbar;
        }
        emit(report_shell("resolve", std::move(inputs), std::move(result)));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ueda::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ueda::finite_type_error& e) {
        emit(Json{{"error", "finite-type-detected"},
                  {"detail", e.what()},
                  {"report", obstruction_json(e.report)}});
        return 1;
    } catch (const ueda::not_normalizable_error& e) {
        emit(Json{{"error", "nontrivial-normal-bundle"},
                  {"detail", e.what()},
                  {"report", Json{{"winding", e.report.winding},
                                  {"pic0_class", ueda::to_json(e.report.pic0_class)}}}});
        return 1;
    } catch (const ueda::obstruction_error& e) {
        emit(Json{{"error", "obstruction"},
                  {"detail", e.what()},
                  {"value", ueda::to_json(e.value)}});
        return 1;
    } catch (const ueda::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const ueda::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
}
