#include "qborel/qnumbers.hpp"

namespace qb {

Laurent q_int(int n, int d) {
    // [n]_{v^d} = sum_{j=0}^{n-1} v^{d(2j-n+1)}
    if (n < 0) throw DomainError("q_int expects n >= 0");
    Laurent r;
    for (int j = 0; j < n; ++j) r += Laurent::v_power(d * (2 * j - n + 1));
    return r;
}

Laurent q_factorial(int n, int d) {
    Laurent r{Rational(1)};
    for (int k = 2; k <= n; ++k) r *= q_int(k, d);
    return r;
}

Laurent q_binomial_generic(int n, int m, int d) {
    if (m < 0 || m > n) throw DomainError("q_binomial expects 0 <= m <= n");
    GenericScalar r{Rational(1)};
    for (int j = 1; j <= m; ++j)
        r *= GenericScalar(q_int(n - m + j, d)) / GenericScalar(q_int(j, d));
    if (!r.is_polynomial()) throw EngineError("gaussian binomial failed to reduce to a Laurent polynomial");
    return r.num();
}

CycScalar q_binomial_at_root(int n, int m, int d, const CycField& f) {
    return q_binomial_generic(n, m, d).at_root(f);
}

CycScalar q_int_at_root(int n, int d, const CycField& f) { return q_int(n, d).at_root(f); }

CycScalar q_factorial_at_root(int n, int d, const CycField& f) { return q_factorial(n, d).at_root(f); }

}  // namespace qb
