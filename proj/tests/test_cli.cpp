// Golden tests for the command line tool: documented exit codes and the
// byte-exact document round trip. Invoked with the tool path as argv[1].

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "mixedop/io.hpp"
#include "mixedop/random_ops.hpp"

using namespace mixedop;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_cli;
fs::path g_dir;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        ++g_failures;
        std::cout << "FAIL: " << what << "\n";
    }
}

int run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string path(const std::string& name) { return (g_dir / name).string(); }

MixedOperator two_term() {
    MixedOperator a(1, 1, 1);
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{}, 2.0));
    a.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 3.0));
    return a;
}

void test_success_paths() {
    write_text_file(path("a.json"), operator_to_string(two_term()));
    write_text_file(path("u.json"),
                    function_to_string(StaircaseFunction::constant(1, 1, 1, 1.0)));

    check(run("info " + path("a.json")) == 0, "info exits 0");

    check(run("apply --op " + path("a.json") + " --fn " + path("u.json") +
              " -o " + path("v.json")) == 0,
          "apply exits 0");
    const StaircaseFunction v = function_from_string(read_text_file(path("v.json")));
    check(std::abs(v.at(0, 0) - Complex(5.0, 0.0)) < 1e-14, "apply value is 5");

    check(run("det " + path("a.json") + " -o " + path("pi.json")) == 0,
          "det exits 0");
    const CElement pi = celement_from_string(read_text_file(path("pi.json")));
    check(std::abs(pi.at(SubsetIndex{}, 0) - Complex(2.0, 0.0)) < 1e-12 &&
              std::abs(pi.at(SubsetIndex{1}, 0) - Complex(2.5, 0.0)) < 1e-12,
          "det components are 2 and 2.5");

    check(run("invert " + path("a.json") + " -o " + path("ainv.json")) == 0,
          "invert exits 0");
    const MixedOperator ainv =
        operator_from_string(read_text_file(path("ainv.json")));
    check(operator_equal(compose(ainv, two_term()), identity_operator(1, 1, 1),
                         1e-12),
          "invert output composes to the identity");

    check(run("factorize " + path("a.json") + " -o " + path("f.json")) == 0,
          "factorize exits 0");
    const Factorization f =
        factorization_from_string(read_text_file(path("f.json")));
    check(f.factors.size() == 2, "factorize writes two factors");

    check(run("trace " + path("a.json") + " -o " + path("tau.json")) == 0,
          "trace exits 0");
}

void test_round_trip_bytes() {
    Rng rng(71);
    MixedOperator a = random_sparse_operator(rng, 2, 2, 2, 0.8);
    a.ensure_term(SubsetIndex{1}).coeffs[0] = Complex(1.0 / 3.0, 1e-200);
    const std::string text = operator_to_string(a);
    write_text_file(path("r.json"), text);
    check(run("refine " + path("r.json") + " --factor 1 -o " + path("r2.json")) == 0,
          "identity refine exits 0");
    check(read_text_file(path("r2.json")) == text,
          "document written back equals input byte for byte");
}

void test_compose_mesh_alignment() {
    Rng rng(73);
    const MixedOperator a = random_operator(rng, 1, 1, 2);
    const MixedOperator b = random_operator(rng, 1, 1, 3);
    write_text_file(path("p2.json"), operator_to_string(a));
    write_text_file(path("p3.json"), operator_to_string(b));
    check(run("compose " + path("p2.json") + " " + path("p3.json") + " -o " +
              path("p6.json")) == 0,
          "compose across meshes exits 0");
    const MixedOperator c = operator_from_string(read_text_file(path("p6.json")));
    check(c.p == 6, "composed mesh is the lcm");
}

void test_spectrum_scan() {
    check(run("spectrum " + path("a.json") +
              " --re 0:6:7 --threshold 1e-8 -o " + path("spec.json")) == 0,
          "spectrum exits 0");
    const nlohmann::json doc =
        nlohmann::json::parse(read_text_file(path("spec.json")));
    check(doc.at("kind") == "spectrum", "spectrum kind tag");
    check(doc.at("flagged").size() == 2, "spectrum flags the two known hits");
    check(doc.at("points").size() == 7, "spectrum records every grid point");
}

void test_oracle_report() {
    check(run("oracle " + path("a.json") + " -o " + path("oracle.json")) == 0,
          "oracle exits 0");
    const nlohmann::json doc =
        nlohmann::json::parse(read_text_file(path("oracle.json")));
    check(doc.at("rows") == 1 && doc.at("cols") == 1, "oracle matrix is 1x1");
    const double re = doc.at("det")[0].get<double>();
    check(std::abs(re - 5.0) < 1e-12, "oracle det is 5");
    check(doc.at("residuals").at("apply_max_err").get<double>() < 1e-12,
          "oracle apply residual is tiny");
    check(doc.at("eigenvalues").size() == 1, "oracle eigenvalue count");
}

void test_exit_codes() {
    // 3: unparsable document
    write_text_file(path("bad.json"), "{ this is not json");
    check(run("info " + path("bad.json")) == 3, "malformed JSON exits 3");

    // 3: bad command line
    check(run("det " + path("a.json") + " --method nope") == 3,
          "unknown method exits 3");
    check(run("frobnicate") == 3, "unknown subcommand exits 3");

    // 3: series determinant needs an elementary operator
    check(run("det " + path("a.json") + " --method fredholm") == 3,
          "fredholm on a non-elementary operator exits 3");

    // 2: singular operator
    MixedOperator sing(1, 1, 1);
    sing.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 3.0));
    write_text_file(path("sing.json"), operator_to_string(sing));
    check(run("invert " + path("sing.json")) == 2,
          "singular multiplication part exits 2");

    MixedOperator atmin(1, 1, 1);
    atmin.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{}, 1.0));
    atmin.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, -1.0));
    write_text_file(path("singE.json"), operator_to_string(atmin));
    check(run("invert " + path("singE.json")) == 2, "singular E exits 2");

    // 2: series out of its convergence region
    MixedOperator big(1, 1, 1);
    big.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{}, 1.0));
    big.set_term(StaircaseKernel::constant_scalar(1, 1, 1, SubsetIndex{1}, 1.5));
    write_text_file(path("big.json"), operator_to_string(big));
    check(run("det " + path("big.json") + " --method log") == 2,
          "log series above norm one exits 2");

    // 4: dimension mismatch
    write_text_file(path("u2.json"),
                    function_to_string(StaircaseFunction::constant(1, 2, 1, 1.0)));
    check(run("apply --op " + path("a.json") + " --fn " + path("u2.json")) == 4,
          "mismatched function exits 4");

    // 5: series work budget
    MixedOperator fred = identity_operator(1, 1, 10);
    StaircaseKernel k = StaircaseKernel::zeros(1, 1, 10, SubsetIndex{1});
    for (std::int64_t t = 0; t < 10; ++t)
        for (std::int64_t s = 0; s < 10; ++s) k.at(t, s, 0, 0) = 0.01;
    fred.set_term(k);
    write_text_file(path("fred.json"), operator_to_string(fred));
    check(run("det " + path("fred.json") + " --method fredholm --nmax 10") == 5,
          "series budget exits 5");

    // 5: brute-force dimension cap
    write_text_file(path("m2.json"),
                    operator_to_string(identity_operator(1, 2, 1)));
    const std::string env_cmd = "MIXEDOP_MAX_ORACLE_DIM=1 " + g_cli + " oracle " +
                                path("m2.json") + " >/dev/null 2>&1";
    const int rc = std::system(env_cmd.c_str());
    check(WIFEXITED(rc) && WEXITSTATUS(rc) == 5, "oracle above the cap exits 5");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_golden <path-to-mixedop>\n";
        return 2;
    }
    g_cli = argv[1];
    g_dir = fs::temp_directory_path() / "mixedop_cli_golden";
    fs::create_directories(g_dir);

    test_success_paths();
    test_round_trip_bytes();
    test_compose_mesh_alignment();
    test_spectrum_scan();
    test_oracle_report();
    test_exit_codes();

    if (g_failures) {
        std::cout << g_failures << " failure(s)\n";
        return 1;
    }
    std::cout << "all cli golden checks passed\n";
    return 0;
}
