#include "supertube/superalg/grassmann.hpp"

#include <algorithm>

namespace supertube::superalg {

GrassmannFloat to_float(const GrassmannElement& g) {
    GrassmannFloat out(g.generators());
    for (const auto& [m, c] : g.terms()) out += GrassmannFloat::monomial(g.generators(), m, c.get_d());
    return out;
}

double distance(const GrassmannFloat& a, const GrassmannFloat& b) {
    const GrassmannFloat d = a - b;
    double worst = 0.0;
    for (const auto& [m, c] : d.terms()) worst = std::max(worst, std::abs(c));
    return worst;
}

}  // namespace supertube::superalg
