// mixedop: command line front end for the staircase operator library.
//
// Exit codes:
//   0  success
//   1  internal error (should not happen)
//   2  singular operator / series did not converge
//   3  malformed input (bad JSON document or bad command line)
//   4  dimension mismatch between documents
//   5  work or size budget exceeded

#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixedop/determinant.hpp"
#include "mixedop/errors.hpp"
#include "mixedop/io.hpp"
#include "mixedop/oracle.hpp"
#include "mixedop/refine.hpp"
#include "mixedop/selftest.hpp"
#include "mixedop/spectral.hpp"

namespace {

using namespace mixedop;
using Json = nlohmann::ordered_json;

void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

MixedOperator load_operator(const std::string& path) {
    return operator_from_string(read_text_file(path));
}

double parse_double(const std::string& text) {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("bad number: " + text);
    return v;
}

long parse_long(const std::string& text) {
    std::size_t pos = 0;
    const long v = std::stol(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("bad integer: " + text);
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, at - start));
        start = at + 1;
    }
}

// "RE" or "RE,IM"
Complex parse_complex_flag(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() == 1) return Complex(parse_double(parts[0]), 0.0);
    if (parts.size() == 2)
        return Complex(parse_double(parts[0]), parse_double(parts[1]));
    throw std::invalid_argument("expected RE or RE,IM: " + text);
}

struct Range {
    double lo = 0.0, hi = 0.0;
    int count = 1;
};

// "a:b:n" with n grid points from a to b inclusive
Range parse_range(const std::string& text) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3)
        throw std::invalid_argument("expected a:b:n: " + text);
    Range r;
    r.lo = parse_double(parts[0]);
    r.hi = parse_double(parts[1]);
    const long n = parse_long(parts[2]);
    if (n < 1 || n > 100000)
        throw std::invalid_argument("grid count out of range: " + parts[2]);
    r.count = static_cast<int>(n);
    return r;
}

std::vector<double> grid_points(const Range& r) {
    std::vector<double> xs;
    xs.reserve(r.count);
    if (r.count == 1) {
        xs.push_back(r.lo);
        return xs;
    }
    const double step = (r.hi - r.lo) / (r.count - 1);
    for (int k = 0; k < r.count; ++k) xs.push_back(r.lo + step * k);
    return xs;
}

// Bring two operators to a common mesh before combining them.
void align_resolution(MixedOperator& a, MixedOperator& b) {
    if (a.p == b.p) return;
    const int target = a.p / std::gcd(a.p, b.p) * b.p;
    a = refine_operator(a, target / a.p);
    b = refine_operator(b, target / b.p);
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

int run_info(const std::string& path, bool as_json) {
    const MixedOperator a = load_operator(path);
    if (as_json) {
        Json j = Json::object();
        j["schema_version"] = "1";
        j["kind"] = "info";
        j["N"] = a.N;
        j["M"] = a.M;
        j["p"] = a.p;
        Json terms = Json::array();
        for (const auto& [alpha, k] : a.terms) {
            Json t = Json::object();
            Json dims = Json::array();
            for (int d : alpha.dims()) dims.push_back(d);
            t["alpha"] = std::move(dims);
            t["block_norm"] = k.sup_row_norm();
            terms.push_back(std::move(t));
        }
        j["terms"] = std::move(terms);
        j["norm_L"] = norm_L(a);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "N=" << a.N << " M=" << a.M << " p=" << a.p << "\n";
    std::cout << "terms: " << a.terms.size() << "\n";
    for (const auto& [alpha, k] : a.terms)
        std::cout << "  " << alpha.to_string() << "  block-norm "
                  << k.sup_row_norm() << "\n";
    std::cout << "norm_L = " << norm_L(a) << "\n";
    return 0;
}

int run_selftest(int suite, bool as_json) {
    std::vector<SuiteResult> results;
    if (suite > 0) {
        results.push_back(run_invariant_suite(suite));
        if (!as_json) {
            const SuiteResult& r = results.back();
            std::cout << r.number << "  " << r.name << "  " << r.instances
                      << " instances  " << (r.passed() ? "PASS" : "FAIL") << "\n";
            if (!r.passed()) std::cout << "   " << r.detail << "\n";
        }
    } else {
        for (int n = 1; n <= 10; ++n) {
            results.push_back(run_invariant_suite(n));
            if (as_json) continue;
            const SuiteResult& r = results.back();
            std::cout << r.number << "  " << r.name << "  " << r.instances
                      << " instances  " << (r.passed() ? "PASS" : "FAIL")
                      << std::endl;
            if (!r.passed()) std::cout << "   " << r.detail << std::endl;
        }
    }
    bool all = true;
    for (const SuiteResult& r : results) all = all && r.passed();
    if (as_json) {
        Json j = Json::array();
        for (const SuiteResult& r : results) {
            Json e = Json::object();
            e["number"] = r.number;
            e["name"] = r.name;
            e["instances"] = r.instances;
            e["failures"] = r.failures;
            if (!r.detail.empty()) e["detail"] = r.detail;
            j.push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (all ? "all suites passed" : "FAILURES above") << "\n";
    }
    return all ? 0 : 1;
}

int run_oracle(const std::string& path, const std::string& out) {
    const MixedOperator a = load_operator(path);
    const ComplexMatrix f = full_matrix(a);

    Json j = Json::object();
    j["schema_version"] = "1";
    j["kind"] = "oracle";
    j["N"] = a.N;
    j["M"] = a.M;
    j["p"] = a.p;
    j["rows"] = f.rows();
    j["cols"] = f.cols();
    Json data = Json::array();
    for (int i = 0; i < f.rows(); ++i)
        for (int k = 0; k < f.cols(); ++k) data.push_back(complex_json(f(i, k)));
    j["data"] = std::move(data);

    const Complex det = determinant(f);
    j["det"] = complex_json(det);

    const std::vector<Complex> eigs = eigenvalues(f);
    Json ej = Json::array();
    for (Complex mu : eigs) ej.push_back(complex_json(mu));
    j["eigenvalues"] = std::move(ej);

    // Cross checks against the structured code paths.
    Json res = Json::object();
    {
        const StaircaseFunction u = StaircaseFunction::constant(a.N, a.M, a.p, 1.0);
        const ComplexMatrix lhs = f * function_as_column(u);
        const ComplexMatrix rhs = function_as_column(apply(a, u));
        res["apply_max_err"] = (lhs - rhs).max_abs();
    }
    {
        Complex prod{1.0, 0.0};
        for (Complex mu : eigs) prod *= mu;
        res["eigenvalue_product_rel_err"] =
            std::abs(prod - det) / std::max({1.0, std::abs(prod), std::abs(det)});
    }
    try {
        Complex prod{1.0, 0.0};
        for (const auto& [alpha, vals] : determinant(a).comps)
            for (Complex v : vals) prod *= v;
        res["det_product_rel_err"] =
            std::abs(prod - det) / std::max({1.0, std::abs(prod), std::abs(det)});
    } catch (const Error&) {
        res["det_product_rel_err"] = nullptr; // not factorizable
    }
    try {
        const ComplexMatrix finv = full_matrix(inverse(a));
        res["inverse_max_err"] = (finv - inverse(f)).max_abs();
    } catch (const Error&) {
        res["inverse_max_err"] = nullptr; // not invertible
    }
    j["residuals"] = std::move(res);

    emit(out, j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"staircase mixed-operator toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine readable stdout where applicable");

    std::string in_a, in_b, in_fn, out;

    CLI::App* c_info = app.add_subcommand("info", "summarize an operator document");
    c_info->fallthrough(); // lets --json trail the subcommand
    c_info->add_option("operator", in_a, "operator document")->required();

    CLI::App* c_apply = app.add_subcommand("apply", "apply an operator to a function");
    c_apply->add_option("--op", in_a, "operator document")->required();
    c_apply->add_option("--fn", in_fn, "function document")->required();
    c_apply->add_option("-o,--output", out, "output path (default stdout)");

    CLI::App* c_compose = app.add_subcommand("compose", "algebra product A B");
    c_compose->add_option("a", in_a, "left operator")->required();
    c_compose->add_option("b", in_b, "right operator")->required();
    c_compose->add_option("-o,--output", out, "output path (default stdout)");

    std::string la_text = "1", mu_text = "1";
    CLI::App* c_combine =
        app.add_subcommand("combine", "linear combination la*A + mu*B");
    c_combine->add_option("--la", la_text, "coefficient RE or RE,IM for A");
    c_combine->add_option("--mu", mu_text, "coefficient RE or RE,IM for B");
    c_combine->add_option("a", in_a, "first operator")->required();
    c_combine->add_option("b", in_b, "second operator")->required();
    c_combine->add_option("-o,--output", out, "output path (default stdout)");

    int refine_factor = 1;
    CLI::App* c_refine = app.add_subcommand("refine", "re-express on a finer mesh");
    c_refine->add_option("operator", in_a, "operator document")->required();
    c_refine->add_option("--factor", refine_factor, "mesh subdivision factor")
        ->required()
        ->check(CLI::PositiveNumber);
    c_refine->add_option("-o,--output", out, "output path (default stdout)");

    CLI::App* c_trace = app.add_subcommand("trace", "componentwise trace");
    c_trace->add_option("operator", in_a, "operator document")->required();
    c_trace->add_option("-o,--output", out, "output path (default stdout)");

    std::string method = "factor";
    int nmax = -1;
    double tol = 1e-12;
    CLI::App* c_det = app.add_subcommand("det", "componentwise determinant");
    c_det->add_option("operator", in_a, "operator document")->required();
    c_det->add_option("--method", method, "factor|ps|log|fredholm")
        ->check(CLI::IsMember({"factor", "ps", "log", "fredholm"}));
    c_det->add_option("--nmax", nmax, "series order cap (ps, fredholm)");
    c_det->add_option("--tol", tol, "series truncation tolerance (ps, log)");
    c_det->add_option("-o,--output", out, "output path (default stdout)");

    CLI::App* c_invert = app.add_subcommand("invert", "inverse operator");
    c_invert->add_option("operator", in_a, "operator document")->required();
    c_invert->add_option("-o,--output", out, "output path (default stdout)");

    CLI::App* c_factorize =
        app.add_subcommand("factorize", "peel-off factorization");
    c_factorize->add_option("operator", in_a, "operator document")->required();
    c_factorize->add_option("-o,--output", out, "output path (default stdout)");

    std::string re_range, im_range;
    double threshold = -1.0;
    CLI::App* c_spectrum =
        app.add_subcommand("spectrum", "scan lambda I - A for singular factors");
    c_spectrum->add_option("operator", in_a, "operator document")->required();
    c_spectrum->add_option("--re", re_range, "real grid a:b:n")->required();
    c_spectrum->add_option("--im", im_range, "imaginary grid a:b:m");
    c_spectrum->add_option("--threshold", threshold,
                           "flag when min |pi| is at or below this "
                           "(default adapts to lambda and the operator norm)");
    c_spectrum->add_option("-o,--output", out, "output path (default stdout)");

    CLI::App* c_oracle = app.add_subcommand(
        "oracle", "brute-force matrix, determinant, eigenvalues, residuals");
    c_oracle->add_option("operator", in_a, "operator document")->required();
    c_oracle->add_option("-o,--output", out, "output path (default stdout)");

    int suite = 0;
    CLI::App* c_selftest =
        app.add_subcommand("selftest", "run the invariant suites");
    c_selftest->fallthrough(); // lets --json trail the subcommand
    c_selftest->add_option("--suite", suite, "run a single suite 1..10")
        ->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    const auto guarded = [](const std::function<int()>& body) -> int {
        try {
            return body();
        } catch (const MalformedDocument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        } catch (const DimensionMismatch& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 4;
        } catch (const BudgetExceeded& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 5;
        } catch (const SizeCapExceeded& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 5;
        } catch (const SingularBlock& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const SingularE& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const ResidueNotIdentity& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const NormTooLarge& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const NotConverged& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const SingularMatrix& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    };

    if (c_info->parsed())
        return guarded([&] { return run_info(in_a, as_json); });

    if (c_apply->parsed())
        return guarded([&] {
            const MixedOperator a = load_operator(in_a);
            const StaircaseFunction u = function_from_string(read_text_file(in_fn));
            emit(out, function_to_string(apply(a, u)));
            return 0;
        });

    if (c_compose->parsed())
        return guarded([&] {
            MixedOperator a = load_operator(in_a);
            MixedOperator b = load_operator(in_b);
            align_resolution(a, b);
            emit(out, operator_to_string(compose(a, b)));
            return 0;
        });

    if (c_combine->parsed())
        return guarded([&] {
            MixedOperator a = load_operator(in_a);
            MixedOperator b = load_operator(in_b);
            align_resolution(a, b);
            const Complex la = parse_complex_flag(la_text);
            const Complex mu = parse_complex_flag(mu_text);
            emit(out, operator_to_string(linear_combine(la, a, mu, b)));
            return 0;
        });

    if (c_refine->parsed())
        return guarded([&] {
            emit(out, operator_to_string(
                          refine_operator(load_operator(in_a), refine_factor)));
            return 0;
        });

    if (c_trace->parsed())
        return guarded([&] {
            emit(out, celement_to_string(trace(load_operator(in_a))));
            return 0;
        });

    if (c_det->parsed())
        return guarded([&] {
            const MixedOperator a = load_operator(in_a);
            CElement pi;
            if (method == "factor") {
                pi = determinant(a);
            } else if (method == "fredholm") {
                pi = det_fredholm(a, nmax);
            } else {
                // ps and log expand det(I + B) around B = A - I.
                const MixedOperator b = linear_combine(
                    1.0, a, -1.0, identity_operator(a.N, a.M, a.p));
                pi = (method == "ps") ? det_plemelj_smithies(b, tol, nmax)
                                      : det_log_series(b, tol);
            }
            emit(out, celement_to_string(pi));
            return 0;
        });

    if (c_invert->parsed())
        return guarded([&] {
            emit(out, operator_to_string(inverse(load_operator(in_a))));
            return 0;
        });

    if (c_factorize->parsed())
        return guarded([&] {
            emit(out, factorization_to_string(factorize(load_operator(in_a))));
            return 0;
        });

    if (c_spectrum->parsed())
        return guarded([&] {
            const MixedOperator a = load_operator(in_a);
            const std::vector<double> res = grid_points(parse_range(re_range));
            std::vector<double> ims = {0.0};
            if (!im_range.empty()) ims = grid_points(parse_range(im_range));
            std::vector<Complex> grid;
            grid.reserve(res.size() * ims.size());
            for (double x : res)
                for (double y : ims) grid.emplace_back(x, y);
            std::optional<double> th;
            if (threshold >= 0.0) th = threshold;
            emit(out, spectrum_to_string(spectrum_scan(a, grid, th)));
            return 0;
        });

    if (c_oracle->parsed())
        return guarded([&] { return run_oracle(in_a, out); });

    if (c_selftest->parsed())
        return guarded([&] { return run_selftest(suite, as_json); });

    std::cerr << "no subcommand\n";
    return 3;
}
