#pragma once

#include <vector>

#include "wtorsor/msinv.hpp"

namespace wtorsor {

/// The lens space L(p,q); q is stored reduced with 1 <= q < p, gcd(p,q) = 1.
struct LensSpace {
    long p;
    long q;
    LensSpace(long p_, long q_);
    bool operator==(const LensSpace&) const = default;
};

/// Convention constant relating the reduced d-invariants to the torsion:
/// d^r = kReducedDScale * T. Every lens computation uses this one constant,
/// and all classification/count results are insensitive to its (nonzero)
/// value.
inline const Rational kReducedDScale{2};

/// Torsion weights on the dual of Z/p: value 1/(p (1-zeta^{-k})(1-zeta^{-kq}))
/// at the k-th character, 0 at the trivial one.
DualWeights lens_torsion_dual(const LensSpace& l);

/// Reduced d-invariant weighting on Z/p: the inverse transform of
/// kReducedDScale * lens_torsion_dual. Rational-valued and summing to zero.
WeightedGroup lens_reduced_d(const LensSpace& l);

/// The integer weighting f_{p,q}: +1 at 0 and q+1, -1 at 1 and q
/// (accumulating when indices coincide).
WeightedGroup lens_f(const LensSpace& l);

/// p = r and s = q^{+-1} mod p.
bool oriented_diffeomorphic(const LensSpace& l, const LensSpace& l2);

/// Equivalence classes of all L(p,q) with p <= p_max, computed independently
/// from the closed-form criterion and from brute-force affine equivalence of
/// the f_{p,q} weightings; the two partitions are compared and a mismatch is
/// an internal error.
std::vector<std::vector<LensSpace>> classify_lens_family(long p_max,
                                                         long long bound = kDefaultEnumBound);

}  // namespace wtorsor
