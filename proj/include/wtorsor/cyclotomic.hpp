#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wtorsor/rational.hpp"

namespace wtorsor {

long euler_phi(long n);

/// Dense univariate polynomial over Q, constant term first. The coefficient
/// vector never has a trailing zero; the zero polynomial is the empty vector.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);

    static RatPoly from_ints(const std::vector<long long>& coeffs);
    static RatPoly monomial(std::size_t degree, const Rational& c = Rational(1));
    /// x^n - 1
    static RatPoly x_pow_minus_one(long n);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& x) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& s) const;
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Exact quotient and remainder over Q with deg(rem) < deg(g).
std::pair<RatPoly, RatPoly> poly_divrem(const RatPoly& f, const RatPoly& g);

/// N-th cyclotomic polynomial, computed as (x^N - 1) / prod of proper-divisor
/// cyclotomics and cached per conductor.
RatPoly cyclotomic_polynomial(long n);

/// An exact element of Q(zeta_N): coordinates in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} of Q[x] modulo the N-th cyclotomic
/// polynomial. Representation is the unique reduced form, so value equality
/// is coefficient equality after embedding into a common conductor. The
/// conductor is never shrunk automatically.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

    static Cyclotomic zero(long conductor);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True iff the value lies in Q (only the basis-element 1 contributes).
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_part() const;

    /// Same value in Q(zeta_m); m must be a multiple of the conductor.
    Cyclotomic embedded(long m) const;
    /// this * zeta_N^e where N is the conductor (e may be negative).
    Cyclotomic times_root(long long e) const;
    /// Complex conjugate, zeta -> zeta^{-1}.
    Cyclotomic conj() const;
    Cyclotomic inverse() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Rational& s) const;
    Cyclotomic operator/(const Rational& s) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Reduce a vector of coefficients on zeta^0..zeta^{n-1} (exponents mod n)
    /// to the power-basis form.
    static Cyclotomic from_exponent_buckets(long n, const std::vector<Rational>& buckets);

private:
    Cyclotomic(long conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    long conductor_;
    std::vector<Rational> coeffs_;
};

/// zeta_n^k (k reduced mod n, negatives allowed).
Cyclotomic root_of_unity(long n, long long k);

/// f(zeta_n^k), exact.
Cyclotomic poly_eval_at_root(const RatPoly& f, long n, long long k);

/// 1 / (1 - zeta_n^k); errors when zeta_n^k = 1.
Cyclotomic inv_one_minus_root(long n, long long k);

}  // namespace wtorsor
