#pragma once

namespace krigbound {

/// Modified Bessel function of the second kind, K_nu(z), for real order.
///
/// Uses Temme's series for z <= 2 and a Steed-type continued fraction for
/// z > 2, followed by upward recurrence in the order (Temme, J. Comput.
/// Phys. 19, 1975; same scheme as SLATEC/GSL). Relative accuracy is a few
/// ulps, comfortably better than 1e-10 over nu in (0, 20], z in (1e-8, 50].
/// K is even in the order, so negative nu is folded to |nu|.
///
/// Throws std::domain_error for z <= 0 or non-finite arguments, and
/// std::overflow_error when the result exceeds double range (very small z
/// combined with a large order).
double bessel_k(double nu, double z);

}  // namespace krigbound
