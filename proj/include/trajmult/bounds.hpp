#pragma once

#include "trajmult/rational.hpp"

namespace trajmult {

/// Two readings of the d > 2 degree-of-nonholonomy bound for polynomial systems.
enum class NonholonomyBoundVariant {
    /// 2^{d-2} (1 + 2^{2n(d-2)-2} q^{2n} sum_{k=4}^{n+3} k^{2n}); parallel to the Noetherian bound.
    Grouped,
    /// 2^{d-2} (1 + 2^{2n(d-2)-2}) q^{2n} sum_{k=4}^{n+3} k^{2n}; the parenthesization as typeset.
    Literal,
};

// All bounds are exact. Violated hypotheses throw PreconditionError naming the condition.

/// Multiplicity bound for a polynomial of degree <= p restricted to a trajectory of a polynomial
/// field of degree <= q in n variables: 2^{2n-1} sum_{k=1}^{n} [p + (k-1)(q-1)]^{2n}.
/// Requires n >= 1, p >= n - 1, q >= 1.
Integer bound_multiplicity(unsigned n, unsigned p, unsigned q);

/// Degree-of-nonholonomy bound for polynomial systems with span dimension d.
/// d = 2: 1 + 2^{2n-1} q^{2n} sum_{k=2}^{n+1} k^{2n}; d > 2 per `variant`.
/// Requires n >= 1, q >= 1, d >= 2.
Integer bound_nonholonomy(unsigned n, unsigned q, unsigned d,
                          NonholonomyBoundVariant variant = NonholonomyBoundVariant::Grouped);

/// Multiplicity bound for Noetherian functions with a chain of order m and degree alpha:
/// 2^{2(n+m)-1} sum_{k=1}^{n+m} [p + (k-1)(q + alpha - 1)]^{2(n+m)}.
/// Requires n >= 1, q >= 1, alpha >= 1.
Integer bound_noetherian_multiplicity(unsigned n, unsigned m, unsigned p, unsigned q, unsigned alpha);

/// Degree-of-nonholonomy bound for systems with Noetherian coefficients.
/// d = 2: 1 + 2^{2(n+m)-1} (q+alpha)^{2(n+m)} sum_{k=2}^{n+m+1} k^{2(n+m)};
/// d > 2: 2^{d-2} (1 + 2^{2(n+m)(d-2)-2} (q+alpha)^{2(n+m)} sum_{k=4}^{n+m+3} k^{2(n+m)}).
/// Requires n >= 1, q >= 1, alpha >= 1, d >= 2.
Integer bound_noetherian_nonholonomy(unsigned n, unsigned m, unsigned q, unsigned alpha, unsigned d);

// Short names matching the CLI's `bound thm3|thm5|thm6|thm7`.
inline Integer bound_thm3(unsigned n, unsigned p, unsigned q) { return bound_multiplicity(n, p, q); }
inline Integer bound_thm5(unsigned n, unsigned q, unsigned d,
                          NonholonomyBoundVariant variant = NonholonomyBoundVariant::Grouped) {
    return bound_nonholonomy(n, q, d, variant);
}
inline Integer bound_thm6(unsigned n, unsigned m, unsigned p, unsigned q, unsigned alpha) {
    return bound_noetherian_multiplicity(n, m, p, q, alpha);
}
inline Integer bound_thm7(unsigned n, unsigned m, unsigned q, unsigned alpha, unsigned d) {
    return bound_noetherian_nonholonomy(n, m, q, alpha, d);
}

}  // namespace trajmult
