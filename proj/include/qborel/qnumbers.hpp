#pragma once

#include "qborel/generic_scalar.hpp"

namespace qb {

// Balanced quantum integer [n] at v^d: (v^{dn} - v^{-dn})/(v^d - v^{-d}),
// expanded as a Laurent polynomial.
Laurent q_int(int n, int d = 1);

// [n]! at v^d.
Laurent q_factorial(int n, int d = 1);

// Gaussian binomial [n choose m] at v^d.  Requires 0 <= m <= n.
Laurent q_binomial_generic(int n, int m, int d = 1);

// The same, evaluated exactly at zeta_l (pole-free: the generic value is a
// Laurent polynomial).
CycScalar q_binomial_at_root(int n, int m, int d, const CycField& f);
CycScalar q_int_at_root(int n, int d, const CycField& f);
CycScalar q_factorial_at_root(int n, int d, const CycField& f);

}  // namespace qb
