#pragma once

#include "wtorsor/weighted.hpp"

namespace wtorsor {

/// An Alexander polynomial, stored as the fixed representative of its
/// +- t^k equivalence class: integer coefficients, nonzero constant term,
/// positive leading coefficient.
class AlexanderPolynomial {
public:
    explicit AlexanderPolynomial(const RatPoly& poly);
    static AlexanderPolynomial from_ints(const std::vector<long long>& coeffs);

    const RatPoly& poly() const { return poly_; }
    bool operator==(const AlexanderPolynomial& o) const { return poly_ == o.poly_; }

private:
    RatPoly poly_;
};

/// Delta_{p,q} = (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)) for coprime p, q >= 1.
AlexanderPolynomial torus_delta(long p, long q);

/// True iff Delta_{p,q} divides the candidate exactly over Q (p, q > 1).
bool divides_delta(const AlexanderPolynomial& candidate, long p, long q);

/// Surgery weights on the dual of Z/n: Delta(zeta^k) / ((1-zeta^{-k})(1-zeta^k))
/// at the k-th character, 0 at the trivial one. The +- zeta^k ambiguity of
/// the underlying formula is fixed to sign + and exponent 0.
DualWeights surgery_torsion_dual(const AlexanderPolynomial& delta, long n);

/// True iff Delta vanishes at every pq-th root of unity zeta^k with p and q
/// both not dividing k; computed both as divisibility by Delta_{p,q} and by
/// direct evaluation, with agreement asserted.
bool reducible_surgery_obstruction(const AlexanderPolynomial& delta, long p, long q);

}  // namespace wtorsor
