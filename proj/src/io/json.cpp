#include "supertube/io/json.hpp"

#include "supertube/error.hpp"
#include "supertube/zeta/field.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace supertube::io {

using exact::Rational;
using superalg::GrassmannElement;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field \"" + key + "\"");
    return *it;
}

long long integer_field(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(j.get<std::string>(), &used);
            if (used == j.get<std::string>().size()) return v;
        } catch (const std::exception&) {
        }
    }
    fail(path, "expected an integer");
}

double real_field(const Json& j, const std::string& path) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return rational_from_json(j, path).get_d();
    fail(path, "expected a number");
}

const Json& array_field(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

}  // namespace

Json parse_document(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

Json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), path);
}

Json to_json(const Rational& r) { return exact::to_string(r); }

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return exact::make_rational(j.get<long>(), 1);
    if (j.is_string()) {
        try {
            return exact::parse_rational(j.get<std::string>());
        } catch (const Error&) {
            fail(path, "malformed rational \"" + j.get<std::string>() + "\"");
        }
    }
    fail(path, "expected a rational string \"a/b\" or an integer");
}

Json to_json(const exact::UniPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Json to_json(const exact::PowerSeries& s) {
    Json out = Json::array();
    for (const auto& c : s.coeffs()) out.push_back(to_json(c));
    return out;
}

Json to_json(const exact::RationalFunction& r) {
    Json out;
    out["num"] = to_json(r.num());
    out["den"] = to_json(r.den());
    out["text"] = exact::to_string(r);
    return out;
}

exact::UniPoly poly_from_json(const Json& j, const std::string& path) {
    std::vector<Rational> c;
    const Json& arr = array_field(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) c.push_back(rational_from_json(arr[i], path + "[" + std::to_string(i) + "]"));
    return exact::UniPoly(c);
}

exact::RationalFunction rational_function_from_json(const Json& j, const std::string& path) {
    const exact::UniPoly num = poly_from_json(field(j, "num", path), path + ".num");
    const exact::UniPoly den = poly_from_json(field(j, "den", path), path + ".den");
    if (den.is_zero()) fail(path + ".den", "zero denominator");
    return exact::RationalFunction{num, den};
}

Json to_json(const GrassmannElement& g) {
    Json out = Json::array();
    for (const auto& [mask, c] : g.terms()) {
        Json gens = Json::array();
        for (int i = 0; i < superalg::kMaxGenerators; ++i)
            if (mask >> i & 1U) gens.push_back(i + 1);
        out.push_back(Json{{"gens", gens}, {"coeff", to_json(c)}});
    }
    return out;
}

GrassmannElement grassmann_from_json(const Json& j, int generators, const std::string& path) {
    GrassmannElement out(generators);
    const Json& arr = array_field(j, path);
    for (std::size_t t = 0; t < arr.size(); ++t) {
        const std::string tp = path + "[" + std::to_string(t) + "]";
        const Rational c = rational_from_json(field(arr[t], "coeff", tp), tp + ".coeff");
        GrassmannElement term = GrassmannElement::scalar(generators, c);
        const Json& gens = array_field(field(arr[t], "gens", tp), tp + ".gens");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const long long g = integer_field(gens[i], tp + ".gens");
            if (g < 1 || g > generators)
                fail(tp + ".gens", "generator " + std::to_string(g) + " outside 1.." + std::to_string(generators));
            term = term * GrassmannElement::generator(generators, static_cast<int>(g));
        }
        out += term;
    }
    return out;
}

Json to_json(const superalg::SuperMatrix& m) {
    Json out;
    out["p"] = m.dim().p;
    out["q"] = m.dim().q;
    out["generators"] = m.generators();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.entries().rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.entries().cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    out["entries"] = rows;
    return out;
}

superalg::SuperMatrix supermatrix_from_json(const Json& j) {
    const long long p = integer_field(field(j, "p", "matrix"), "matrix.p");
    const long long qd = integer_field(field(j, "q", "matrix"), "matrix.q");
    if (p < 0 || qd < 0 || p + qd > 64) fail("matrix", "dimensions out of range");
    const Json& rows = array_field(field(j, "entries", "matrix"), "matrix.entries");
    const auto n = static_cast<std::size_t>(p + qd);
    if (rows.size() != n) fail("matrix.entries", "expected " + std::to_string(n) + " rows");
    long long gens = 0;
    if (j.contains("generators")) {
        gens = integer_field(j["generators"], "matrix.generators");
    } else {
        for (const auto& row : rows)
            if (row.is_array())
                for (const auto& e : row)
                    if (e.is_array())
                        for (const auto& t : e)
                            if (t.is_object() && t.contains("gens") && t["gens"].is_array())
                                for (const auto& g : t["gens"])
                                    if (g.is_number_integer()) gens = std::max(gens, g.get<long long>());
    }
    if (gens < 0 || gens > superalg::kMaxGenerators) fail("matrix.generators", "must lie in 0..16");
    superalg::GMatrix m(n, n, superalg::g_zero(static_cast<int>(gens)));
    for (std::size_t i = 0; i < n; ++i) {
        const std::string rp = "matrix.entries[" + std::to_string(i) + "]";
        const Json& row = array_field(rows[i], rp);
        if (row.size() != n) fail(rp, "expected " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = grassmann_from_json(row[k], static_cast<int>(gens), rp + "[" + std::to_string(k) + "]");
    }
    return superalg::SuperMatrix({static_cast<int>(p), static_cast<int>(qd)}, std::move(m));
}

Json to_json(const superalg::CharFunction& c) {
    Json out = to_json(c.value);
    out["dim"] = {c.dim.p, c.dim.q};
    out["series"] = to_json(c.series);
    out["raw_degrees"] = {c.raw_num_degree, c.raw_den_degree};
    return out;
}

zeta::PrimePolyVariety variety_from_json(const Json& j) {
    const long long p = integer_field(field(j, "p", "variety"), "variety.p");
    if (p < 2 || p > std::numeric_limits<std::uint32_t>::max() || !zeta::is_prime(static_cast<std::uint64_t>(p)))
        fail("variety.p", std::to_string(p) + " is not a prime");
    const Json& vars = array_field(field(j, "vars", "variety"), "variety.vars");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!vars[i].is_string()) fail("variety.vars[" + std::to_string(i) + "]", "expected a name");
        names.push_back(vars[i].get<std::string>());
    }
    if (names.empty()) fail("variety.vars", "at least one variable is required");
    std::map<std::vector<int>, long long> terms;
    const Json& arr = array_field(field(j, "terms", "variety"), "variety.terms");
    for (std::size_t t = 0; t < arr.size(); ++t) {
        const std::string tp = "variety.terms[" + std::to_string(t) + "]";
        const Json& exps = array_field(field(arr[t], "exps", tp), tp + ".exps");
        if (exps.size() != names.size()) fail(tp + ".exps", "expected " + std::to_string(names.size()) + " exponents");
        std::vector<int> e;
        for (const auto& x : exps) {
            const long long v = integer_field(x, tp + ".exps");
            if (v < 0 || v > 1000) fail(tp + ".exps", "exponent out of range");
            e.push_back(static_cast<int>(v));
        }
        const long long c = integer_field(field(arr[t], "coeff", tp), tp + ".coeff");
        terms[e] = (terms[e] + c % p) % p;
    }
    return zeta::PrimePolyVariety(static_cast<std::uint32_t>(p), static_cast<int>(names.size()), terms, names);
}

Json to_json(const zeta::PrimePolyVariety& v) {
    Json out;
    out["p"] = v.p();
    out["vars"] = v.names();
    Json terms = Json::array();
    for (const auto& [e, c] : v.terms()) terms.push_back(Json{{"exps", e}, {"coeff", c}});
    out["terms"] = terms;
    return out;
}

SurfaceSpec surface_from_json(const Json& j) {
    const Json& kind_j = field(j, "kind", "surface");
    if (!kind_j.is_string()) fail("surface.kind", "expected a string");
    SurfaceSpec spec;
    spec.kind = kind_j.get<std::string>();
    if (spec.kind == "sphere") {
        const double r = real_field(field(j, "R", "surface"), "surface.R");
        const long long n = j.contains("n") ? integer_field(j["n"], "surface.n") : 2;
        if (!(r > 0)) fail("surface.R", "radius must be positive");
        if (n < 1 || n > 6) fail("surface.n", "dimension must lie in 1..6");
        spec.parametric = tubegeom::ParametricSurface::sphere(r, static_cast<int>(n));
    } else if (spec.kind == "torus") {
        const double big = real_field(field(j, "R", "surface"), "surface.R");
        const double small = real_field(field(j, "r", "surface"), "surface.r");
        if (!(small > 0) || !(big > small)) fail("surface", "torus needs R > r > 0");
        spec.parametric = tubegeom::ParametricSurface::torus(big, small);
    } else if (spec.kind == "levelset") {
        const Json& phi = field(j, "phi", "surface");
        const Json& vars = array_field(field(phi, "vars", "surface.phi"), "surface.phi.vars");
        const int m = static_cast<int>(vars.size());
        if (m < 2) fail("surface.phi.vars", "at least two variables are required");
        tubegeom::MultiPoly poly(m);
        const Json& arr = array_field(field(phi, "terms", "surface.phi"), "surface.phi.terms");
        for (std::size_t t = 0; t < arr.size(); ++t) {
            const std::string tp = "surface.phi.terms[" + std::to_string(t) + "]";
            const Json& exps = array_field(field(arr[t], "exps", tp), tp + ".exps");
            if (static_cast<int>(exps.size()) != m) fail(tp + ".exps", "expected " + std::to_string(m) + " exponents");
            std::vector<int> e;
            for (const auto& x : exps) {
                const long long v = integer_field(x, tp + ".exps");
                if (v < 0 || v > 100) fail(tp + ".exps", "exponent out of range");
                e.push_back(static_cast<int>(v));
            }
            poly.add_term(e, rational_from_json(field(arr[t], "coeff", tp), tp + ".coeff"));
        }
        spec.level_set = tubegeom::LevelSetSurface(poly);
    } else {
        fail("surface.kind", "unknown kind \"" + spec.kind + "\" (sphere, torus, levelset)");
    }
    return spec;
}

}  // namespace supertube::io
