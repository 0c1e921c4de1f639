#pragma once

#include "supertube/exact/rational_function.hpp"
#include "supertube/superalg/charfn.hpp"
#include "supertube/superalg/supermatrix.hpp"
#include "supertube/tubegeom/levelset.hpp"
#include "supertube/tubegeom/parametric.hpp"
#include "supertube/zeta/variety.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace supertube::io {

// Insertion-ordered so reports keep a readable, stable layout.
using Json = nlohmann::ordered_json;

// Parses a document; syntax errors become ParseError with line and column.
Json parse_document(const std::string& text, const std::string& source);
Json read_document(const std::string& path);

// Rationals are strings "a/b" or "a"; integers are accepted on input.
Json to_json(const exact::Rational& r);
exact::Rational rational_from_json(const Json& j, const std::string& path);

Json to_json(const exact::UniPoly& p);  // coefficient array, constant first
Json to_json(const exact::PowerSeries& s);
Json to_json(const exact::RationalFunction& r);  // {"num", "den", "text"}
exact::UniPoly poly_from_json(const Json& j, const std::string& path);
exact::RationalFunction rational_function_from_json(const Json& j, const std::string& path);

// [{"gens":[1,2],"coeff":"a/b"}, ...]; gens are 1-based and multiplied in
// the listed order, so [2,1] carries a sign.
Json to_json(const superalg::GrassmannElement& g);
superalg::GrassmannElement grassmann_from_json(const Json& j, int generators, const std::string& path);

// {"p":int,"q":int,"generators":int (optional),"entries":[[element...]...]}
Json to_json(const superalg::SuperMatrix& m);
superalg::SuperMatrix supermatrix_from_json(const Json& j);

Json to_json(const superalg::CharFunction& c);

// {"p":3,"vars":["x","y"],"terms":[{"exps":[2,0],"coeff":1},...]}
zeta::PrimePolyVariety variety_from_json(const Json& j);
Json to_json(const zeta::PrimePolyVariety& v);

struct SurfaceSpec {
    std::string kind;  // sphere, torus or levelset
    std::optional<tubegeom::ParametricSurface> parametric;
    std::optional<tubegeom::LevelSetSurface> level_set;
};

// {"kind":"sphere","R":1,"n":2}, {"kind":"torus","R":2,"r":1},
// {"kind":"levelset","phi":{"vars":[...],"terms":[{"exps":[...],"coeff":"a/b"}]}}
SurfaceSpec surface_from_json(const Json& j);

}  // namespace supertube::io
