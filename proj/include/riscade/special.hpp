#ifndef RISCADE_SPECIAL_HPP
#define RISCADE_SPECIAL_HPP

namespace riscade {

/// Modified Bessel function of the second kind, order zero.
/// Minimax rational approximations on (0,1] and (1,inf) (Russon and Blair,
/// Chalk River Report AECL-3461, 1969), good to a few ulp in double.
/// Returns +inf at x == 0; throws std::domain_error for x < 0.
double bessel_k0(double x);

/// Modified Bessel function of the second kind, order one.
/// Same construction and domain behavior as bessel_k0.
double bessel_k1(double x);

} // namespace riscade

#endif
