#include "qpov/special.hpp"

#include "qpov/error.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <sstream>

namespace qpov {

double incomplete_beta(double a, double b, double u) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        std::ostringstream msg;
        msg << "incomplete_beta requires a > 0 and b > 0 (got a=" << a << ", b=" << b << ")";
        throw DomainError(msg.str());
    }
    if (!(u >= 0.0 && u <= 1.0)) {
        std::ostringstream msg;
        msg << "incomplete_beta requires u in [0, 1] (got " << u << ")";
        throw DomainError(msg.str());
    }
    if (a == 1.0 && b == 1.0) return u;
    if (u == 0.0) return 0.0;
    return boost::math::beta(a, b, u);
}

} // namespace qpov
