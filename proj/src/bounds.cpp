#include "trajmult/bounds.hpp"

#include <string>

#include "trajmult/error.hpp"

namespace trajmult {

namespace {

Integer pow_ui(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Integer pow2(unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

// sum_{k=lo}^{hi} k^e
Integer power_sum(unsigned long lo, unsigned long hi, unsigned long e) {
    Integer s = 0;
    for (unsigned long k = lo; k <= hi; ++k) s += pow_ui(Integer(k), e);
    return s;
}

void require(bool ok, const std::string& condition, unsigned value) {
    if (!ok) throw PreconditionError("requires " + condition + " (got " + std::to_string(value) + ")");
}

// 2^{2N-1} sum_{k=1}^{N} [p + (k-1) step]^{2N}
Integer multiplicity_sum(unsigned dim, unsigned p, unsigned step) {
    Integer s = 0;
    for (unsigned k = 1; k <= dim; ++k) {
        s += pow_ui(Integer(p) + Integer(k - 1) * step, 2ul * dim);
    }
    return pow2(2ul * dim - 1) * s;
}

// Shared shape of both nonholonomy bounds, with `scale` = q or q + alpha in dimension `dim`.
Integer nonholonomy_grouped(unsigned dim, const Integer& scale, unsigned d) {
    const unsigned long e = 2ul * dim;
    if (d == 2) return 1 + pow2(e - 1) * pow_ui(scale, e) * power_sum(2, dim + 1ul, e);
    return pow2(d - 2ul) * (1 + pow2(e * (d - 2ul) - 2) * pow_ui(scale, e) * power_sum(4, dim + 3ul, e));
}

}  // namespace

Integer bound_multiplicity(unsigned n, unsigned p, unsigned q) {
    require(n >= 1, "n >= 1", n);
    require(p + 1 >= n, "p >= n - 1", p);
    require(q >= 1, "q >= 1", q);
    return multiplicity_sum(n, p, q - 1);
}

Integer bound_nonholonomy(unsigned n, unsigned q, unsigned d, NonholonomyBoundVariant variant) {
    require(n >= 1, "n >= 1", n);
    require(q >= 1, "q >= 1", q);
    require(d >= 2, "d >= 2", d);
    if (d == 2 || variant == NonholonomyBoundVariant::Grouped) return nonholonomy_grouped(n, Integer(q), d);
    const unsigned long e = 2ul * n;
    return pow2(d - 2ul) * (1 + pow2(e * (d - 2ul) - 2)) * pow_ui(Integer(q), e) * power_sum(4, n + 3ul, e);
}

Integer bound_noetherian_multiplicity(unsigned n, unsigned m, unsigned p, unsigned q, unsigned alpha) {
    require(n >= 1, "n >= 1", n);
    require(q >= 1, "q >= 1", q);
    require(alpha >= 1, "alpha >= 1", alpha);
    return multiplicity_sum(n + m, p, q + alpha - 1);
}

Integer bound_noetherian_nonholonomy(unsigned n, unsigned m, unsigned q, unsigned alpha, unsigned d) {
    require(n >= 1, "n >= 1", n);
    require(q >= 1, "q >= 1", q);
    require(alpha >= 1, "alpha >= 1", alpha);
    require(d >= 2, "d >= 2", d);
    return nonholonomy_grouped(n + m, Integer(q) + alpha, d);
}

}  // namespace trajmult
