#pragma once

namespace qpov {

// Unregularized incomplete beta function B_u(a, b) = int_0^u p^(a-1) (1-p)^(b-1) dp.
// Requires a, b > 0 and u in [0, 1]; throws DomainError otherwise.
double incomplete_beta(double a, double b, double u);

} // namespace qpov
