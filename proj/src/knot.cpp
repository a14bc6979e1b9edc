#include "wtorsor/knot.hpp"

#include <numeric>
#include <string>

#include "wtorsor/errors.hpp"

namespace wtorsor {

AlexanderPolynomial::AlexanderPolynomial(const RatPoly& poly) {
    if (poly.is_zero())
        throw InvalidInputError("the zero polynomial is not an Alexander polynomial");
    std::size_t valuation = 0;
    const auto& c = poly.coeffs();
    while (c[valuation] == 0) ++valuation;
    std::vector<Rational> shifted(c.begin() + static_cast<long>(valuation), c.end());
    if (shifted.back() < 0)
        for (auto& x : shifted) x = -x;
    for (const auto& x : shifted)
        if (!is_integer(x))
            throw InvalidInputError("Alexander polynomial coefficients must be integers");
    poly_ = RatPoly(std::move(shifted));
}

AlexanderPolynomial AlexanderPolynomial::from_ints(const std::vector<long long>& coeffs) {
    return AlexanderPolynomial(RatPoly::from_ints(coeffs));
}

AlexanderPolynomial torus_delta(long p, long q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw InvalidInputError("torus knot parameters must be coprime and >= 1");
    const RatPoly num = RatPoly::x_pow_minus_one(p * q) * RatPoly::x_pow_minus_one(1);
    const RatPoly den = RatPoly::x_pow_minus_one(p) * RatPoly::x_pow_minus_one(q);
    auto [quot, rem] = poly_divrem(num, den);
    if (!rem.is_zero())
        throw InternalError("torus knot polynomial division left a remainder");
    return AlexanderPolynomial(quot);
}

bool divides_delta(const AlexanderPolynomial& candidate, long p, long q) {
    if (p <= 1 || q <= 1 || std::gcd(p, q) != 1)
        throw InvalidInputError("divisibility test requires coprime p, q > 1");
    const AlexanderPolynomial delta = torus_delta(p, q);
    auto [quot, rem] = poly_divrem(candidate.poly(), delta.poly());
    return rem.is_zero();
}

DualWeights surgery_torsion_dual(const AlexanderPolynomial& delta, long n) {
    if (n < 2) throw InvalidInputError("surgery coefficient must be >= 2");
    const FiniteAbelianGroup g = make_group({n});
    std::vector<Cyclotomic> values;
    values.reserve(static_cast<std::size_t>(n));
    values.push_back(Cyclotomic::zero(n));
    for (long k = 1; k < n; ++k) {
        const Cyclotomic num = poly_eval_at_root(delta.poly(), n, k);
        values.push_back(num * inv_one_minus_root(n, n - k) * inv_one_minus_root(n, k));
    }
    return DualWeights(g, std::move(values));
}

bool reducible_surgery_obstruction(const AlexanderPolynomial& delta, long p, long q) {
    if (p <= 1 || q <= 1 || std::gcd(p, q) != 1)
        throw InvalidInputError("reducible surgery obstruction requires coprime p, q > 1");
    const long n = p * q;

    const bool by_division = divides_delta(delta, p, q);

    bool by_evaluation = true;
    for (long k = 1; k < n && by_evaluation; ++k) {
        if (k % p == 0 || k % q == 0) continue;
        by_evaluation = poly_eval_at_root(delta.poly(), n, k).is_zero();
    }

    if (by_division != by_evaluation)
        throw InternalError(
            "reducible surgery obstruction: divisibility and root evaluation disagree");
    return by_division;
}

}  // namespace wtorsor
