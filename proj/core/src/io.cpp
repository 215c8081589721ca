#include "mixedop/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mixedop/errors.hpp"

namespace mixedop {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
    throw MalformedDocument("document error: " + what);
}

const Json& field(const Json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) bad(std::string("missing field '") + name + "'");
    return *it;
}

long long int_field(const Json& j, const char* name, long long lo, long long hi) {
    const Json& f = field(j, name);
    if (!f.is_number_integer())
        bad(std::string("field '") + name + "' must be an integer");
    const long long v = f.get<long long>();
    if (v < lo || v > hi) {
        std::ostringstream msg;
        msg << "field '" << name << "' = " << v << " outside [" << lo << ", " << hi << "]";
        bad(msg.str());
    }
    return v;
}

void check_header(const Json& j, const char* kind) {
    if (!j.is_object()) bad("root is not an object");
    const Json& sv = field(j, "schema_version");
    if (!sv.is_string() || sv.get<std::string>() != "1")
        bad("unsupported schema_version (expected \"1\")");
    const Json& k = field(j, "kind");
    if (!k.is_string() || k.get<std::string>() != kind)
        bad(std::string("expected kind '") + kind + "'");
}

Json complex_to(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        bad("complex value must be a [re, im] number pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json subset_to(const SubsetIndex& s) {
    Json arr = Json::array();
    for (int d : s.dims()) arr.push_back(d);
    return arr;
}

SubsetIndex subset_from(const Json& j, int n) {
    if (!j.is_array()) bad("subset must be an array of dimension indices");
    std::vector<int> dims;
    for (const Json& e : j) {
        if (!e.is_number_integer()) bad("subset entries must be integers");
        const long long v = e.get<long long>();
        if (v < 1 || v > n) bad("subset entry outside 1..N");
        dims.push_back(static_cast<int>(v));
    }
    try {
        return SubsetIndex::from_dims(std::move(dims));
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
}

std::vector<Complex> complex_list_from(const Json& j, std::size_t want,
                                       const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    if (j.size() != want) {
        std::ostringstream msg;
        msg << what << " holds " << j.size() << " entries, expected " << want;
        bad(msg.str());
    }
    std::vector<Complex> out;
    out.reserve(want);
    for (const Json& e : j) out.push_back(complex_from(e));
    return out;
}

Json complex_list_to(const std::vector<Complex>& v) {
    Json arr = Json::array();
    for (const Complex& c : v) arr.push_back(complex_to(c));
    return arr;
}

void check_grid_sizes(int n, int m, int p, int card) {
    const double cells = std::pow(static_cast<double>(p), n + card);
    if (cells * m * m > 2e8) bad("declared sizes are too large for a document");
}

Json header(const char* kind) {
    Json j = Json::object();
    j["schema_version"] = "1";
    j["kind"] = kind;
    return j;
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("not valid JSON: ") + e.what());
    }
}

Json operator_to_json(const MixedOperator& a) {
    Json j = header("operator");
    j["N"] = a.N;
    j["M"] = a.M;
    j["p"] = a.p;
    Json terms = Json::array();
    for (const auto& [alpha, k] : a.terms) {
        Json t = Json::object();
        t["alpha"] = subset_to(alpha);
        t["data"] = complex_list_to(k.coeffs);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MixedOperator operator_from_json(const Json& j) {
    check_header(j, "operator");
    const int n = static_cast<int>(int_field(j, "N", 1, 16));
    const int m = static_cast<int>(int_field(j, "M", 1, 64));
    const int p = static_cast<int>(int_field(j, "p", 1, 4096));
    MixedOperator a(n, m, p);
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("'terms' must be an array");
    for (const Json& t : terms) {
        if (!t.is_object()) bad("term must be an object");
        const SubsetIndex alpha = subset_from(field(t, "alpha"), n);
        if (a.terms.count(alpha)) bad("duplicate term for subset " + alpha.to_string());
        check_grid_sizes(n, m, p, alpha.size());
        StaircaseKernel k = StaircaseKernel::zeros(n, m, p, alpha);
        k.coeffs = complex_list_from(field(t, "data"), k.expected_size(), "term data");
        a.set_term(std::move(k));
    }
    return a;
}

} // namespace

std::string operator_to_string(const MixedOperator& a) {
    return finish(operator_to_json(a));
}

MixedOperator operator_from_string(const std::string& text) {
    return operator_from_json(parse(text));
}

std::string function_to_string(const StaircaseFunction& u) {
    Json j = header("function");
    j["N"] = u.N;
    j["M"] = u.M;
    j["p"] = u.p;
    j["values"] = complex_list_to(u.values);
    return finish(j);
}

StaircaseFunction function_from_string(const std::string& text) {
    const Json j = parse(text);
    check_header(j, "function");
    const int n = static_cast<int>(int_field(j, "N", 1, 16));
    const int m = static_cast<int>(int_field(j, "M", 1, 64));
    const int p = static_cast<int>(int_field(j, "p", 1, 4096));
    check_grid_sizes(n, m, p, 0);
    StaircaseFunction u = StaircaseFunction::zeros(n, m, p);
    u.values = complex_list_from(field(j, "values"), u.values.size(), "'values'");
    return u;
}

std::string celement_to_string(const CElement& f) {
    Json j = header("celement");
    j["N"] = f.N;
    j["p"] = f.p;
    Json comps = Json::array();
    for (const auto& [alpha, values] : f.comps) {
        Json c = Json::object();
        c["alpha"] = subset_to(alpha);
        c["values"] = complex_list_to(values);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return finish(j);
}

CElement celement_from_string(const std::string& text) {
    const Json j = parse(text);
    check_header(j, "celement");
    const int n = static_cast<int>(int_field(j, "N", 1, 16));
    const int p = static_cast<int>(int_field(j, "p", 1, 4096));
    check_grid_sizes(n, 1, p, 0);
    CElement f = CElement::zeros(n, p);
    const Json& comps = field(j, "components");
    if (!comps.is_array()) bad("'components' must be an array");
    std::vector<SubsetIndex> seen;
    for (const Json& c : comps) {
        if (!c.is_object()) bad("component must be an object");
        const SubsetIndex alpha = subset_from(field(c, "alpha"), n);
        for (const SubsetIndex& s : seen)
            if (s == alpha) bad("duplicate component for subset " + alpha.to_string());
        seen.push_back(alpha);
        auto& values = f.comps.at(alpha);
        values = complex_list_from(field(c, "values"), values.size(), "component values");
    }
    return f;
}

std::string factorization_to_string(const Factorization& f) {
    Json j = header("factorization");
    j["N"] = f.N;
    j["M"] = f.M;
    j["p"] = f.p;
    Json factors = Json::array();
    for (const auto& [alpha, g] : f.factors) {
        Json e = Json::object();
        e["alpha"] = subset_to(alpha);
        e["operator"] = operator_to_json(g);
        factors.push_back(std::move(e));
    }
    j["factors"] = std::move(factors);
    return finish(j);
}

Factorization factorization_from_string(const std::string& text) {
    const Json j = parse(text);
    check_header(j, "factorization");
    Factorization f;
    f.N = static_cast<int>(int_field(j, "N", 1, 16));
    f.M = static_cast<int>(int_field(j, "M", 1, 64));
    f.p = static_cast<int>(int_field(j, "p", 1, 4096));
    const Json& factors = field(j, "factors");
    if (!factors.is_array()) bad("'factors' must be an array");
    for (const Json& e : factors) {
        if (!e.is_object()) bad("factor must be an object");
        const SubsetIndex alpha = subset_from(field(e, "alpha"), f.N);
        MixedOperator g = operator_from_json(field(e, "operator"));
        if (g.N != f.N || g.M != f.M || g.p != f.p)
            bad("factor operator grid differs from the document grid");
        f.factors.emplace_back(alpha, std::move(g));
    }
    return f;
}

std::string matrix_to_string(const ComplexMatrix& m) {
    Json j = header("matrix");
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json data = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) data.push_back(complex_to(m(r, c)));
    j["data"] = std::move(data);
    return finish(j);
}

ComplexMatrix matrix_from_string(const std::string& text) {
    const Json j = parse(text);
    check_header(j, "matrix");
    const int rows = static_cast<int>(int_field(j, "rows", 0, 100000));
    const int cols = static_cast<int>(int_field(j, "cols", 0, 100000));
    if (static_cast<double>(rows) * cols > 2e8) bad("matrix too large for a document");
    const auto data = complex_list_from(field(j, "data"),
                                        static_cast<std::size_t>(rows) * cols, "'data'");
    ComplexMatrix m(rows, cols);
    std::size_t idx = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = data[idx++];
    return m;
}

std::string spectrum_to_string(const SpectrumReport& r) {
    Json j = header("spectrum");
    j["N"] = r.N;
    j["M"] = r.M;
    j["p"] = r.p;
    Json points = Json::array();
    for (const SpectrumPoint& pt : r.points) {
        Json pj = Json::object();
        pj["lambda"] = complex_to(pt.lambda);
        pj["threshold"] = pt.threshold;
        Json comps = Json::array();
        for (const ComponentRecord& rec : pt.components) {
            Json cj = Json::object();
            cj["alpha"] = subset_to(rec.alpha);
            switch (rec.status) {
            case ComponentStatus::Computed: cj["status"] = "computed"; break;
            case ComponentStatus::SingularFactor: cj["status"] = "singular_factor"; break;
            case ComponentStatus::Undefined: cj["status"] = "undefined"; break;
            }
            if (rec.status != ComponentStatus::Undefined) {
                cj["min_abs_pi"] = rec.min_abs_pi;
                Json cell = Json::array();
                for (int c : rec.argmin_cell.coords) cell.push_back(c);
                cj["argmin_cell"] = std::move(cell);
            }
            cj["flagged"] = rec.flagged;
            comps.push_back(std::move(cj));
        }
        pj["components"] = std::move(comps);
        points.push_back(std::move(pj));
    }
    j["points"] = std::move(points);
    Json flagged = Json::array();
    for (const FlaggedHit& hit : r.flagged) {
        Json fj = Json::object();
        fj["lambda"] = complex_to(hit.lambda);
        fj["alpha"] = subset_to(hit.alpha);
        Json cell = Json::array();
        for (int c : hit.cell.coords) cell.push_back(c);
        fj["cell"] = std::move(cell);
        flagged.push_back(std::move(fj));
    }
    j["flagged"] = std::move(flagged);
    return finish(j);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << text;
    if (!out) throw Error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedDocument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace mixedop
