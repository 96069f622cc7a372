#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(UEDA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

std::string tmp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("atlas gen + classify round trip through files") {
    std::string trivial = tmp_path("trivial.json");
    CHECK(run_cli("atlas gen trivial --nw 8 --zeta-window 8 -o " + trivial).exit_code == 0);

    auto validate = run_cli("atlas validate " + trivial);
    CHECK(validate.exit_code == 0);
    CHECK(parse(validate.output)["result"]["violations"].empty());

    auto nb = run_cli("normal-bundle " + trivial);
    CHECK(nb.exit_code == 0);
    CHECK(parse(nb.output)["result"]["trivial"] == true);

    auto cls = run_cli("classify " + trivial + " --max-order 6");
    CHECK(cls.exit_code == 0);
    auto verdict = parse(cls.output)["result"];
    CHECK(verdict["verdict"] == "InfiniteUpTo");
    CHECK(verdict["order"] == 6);

    // Deterministic reports: byte-identical outputs on repeated runs.
    auto cls2 = run_cli("classify " + trivial + " --max-order 6");
    CHECK(cls.output == cls2.output);
    std::remove(trivial.c_str());
}

TEST_CASE("perturbed atlas: classify and linearize exit codes") {
    std::string pert = tmp_path("pert.json");
    CHECK(run_cli("atlas gen perturbed --order 1 --class 1 --nw 8 --zeta-window 8 -o " +
                  pert)
              .exit_code == 0);

    auto cls = run_cli("classify " + pert + " --max-order 6");
    CHECK(cls.exit_code == 0);
    auto verdict = parse(cls.output)["result"];
    CHECK(verdict["verdict"] == "FiniteType");
    CHECK(verdict["order"] == 1);
    CHECK(verdict["value"][0] == "-1");

    auto obst = run_cli("obstruction " + pert + " --order 1");
    CHECK(obst.exit_code == 0);
    CHECK(parse(obst.output)["result"]["value"][0] == "-1");

    // Finite type: linearize reports the obstruction and exits 1.
    auto lin = run_cli("linearize " + pert + " --order 4");
    CHECK(lin.exit_code == 1);
    auto err = parse(lin.output);
    CHECK(err["error"] == "finite-type-detected");
    CHECK(err["report"]["order"] == 1);
    std::remove(pert.c_str());
}

TEST_CASE("linearize success path writes a certificate") {
    std::string pert2 = tmp_path("pert2.json");
    std::string ledger = tmp_path("ledger.json");
    CHECK(run_cli("atlas gen perturbed --order 1 --class 1 --exponent 2 --nw 8 "
                  "--zeta-window 8 -o " +
                  pert2)
              .exit_code == 0);
    auto lin = run_cli("linearize " + pert2 + " --order 5 --ledger " + ledger);
    CHECK(lin.exit_code == 0);
    auto rep = parse(lin.output)["result"];
    CHECK(rep["agreement_order"] == 5);
    CHECK(rep["certificate"]["bounds_ok"] == true);

    std::ifstream in(ledger);
    REQUIRE(in.good());
    nlohmann::json cert;
    in >> cert;
    CHECK(cert.contains("ledger"));
    CHECK(cert["ledger"].contains("K"));
    std::remove(pert2.c_str());
    std::remove(ledger.c_str());
}

TEST_CASE("resolve command") {
    auto res = run_cli("resolve --nbar 1");
    CHECK(res.exit_code == 0);
    auto j = parse(res.output);
    CHECK(j["result"]["ell"][0] == "1");
    CHECK(j["result"]["ell"][1] == "6");
    CHECK(j["result"]["contraction"]["count"] == 6);
    CHECK(j["result"]["resolution"]["pullback"]["C1"] == 6);
    CHECK(j["result"]["resolution"]["pullback_self_intersection"] == 0);
}

TEST_CASE("input errors exit 2 with a diagnostic") {
    CHECK(run_cli("classify no_such_file.json").exit_code == 2);

    std::string broken = tmp_path("broken.json");
    {
        std::ofstream out(broken);
        out << "{ not json";
    }
    CHECK(run_cli("classify " + broken).exit_code == 2);
    {
        // Coefficient outside its declared window: window-mismatch, exit 2.
        std::ofstream out(broken);
        out << R"({"radii":{"eps0":["1","2"]},
                   "annulus":{"r_in":["1","4"],"r_out":["1","2"]},
                   "N_w":2,"N_zeta":4,
                   "X_trans":{"nw":2,"w_coeffs":[
                     {"window":[2,2],"coeffs":[[3,["1","1","0","1"]]]},
                     {"window":[0,0],"coeffs":[]},
                     {"window":[0,0],"coeffs":[]}]},
                   "Y_trans":{"nw":2,"w_coeffs":[
                     {"window":[3,3],"coeffs":[[3,["1","1","0","1"]]]},
                     {"window":[0,0],"coeffs":[]},
                     {"window":[0,0],"coeffs":[]}]},
                   "w0_unit":{"degree":"exact","coeffs":[[0,0,["1","1","0","1"]]]}})";
    }
    CHECK(run_cli("classify " + broken).exit_code == 2);
    std::remove(broken.c_str());
}
