#include "wtorsor/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "wtorsor/errors.hpp"

namespace wtorsor {

long euler_phi(long n) {
    if (n <= 0) throw InvalidInputError("euler_phi requires n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::from_ints(const std::vector<long long>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    return RatPoly(std::move(c));
}

RatPoly RatPoly::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::x_pow_minus_one(long n) {
    if (n < 1) throw InvalidInputError("x^n - 1 requires n >= 1");
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
    v[0] = -1;
    v[static_cast<std::size_t>(n)] = 1;
    return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x *= s;
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> poly_divrem(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw ArithmeticError("polynomial division by zero");
    std::vector<Rational> rem(f.coeffs());
    const auto& gc = g.coeffs();
    const int dg = g.degree();
    if (f.degree() < dg) return {RatPoly(), f};
    std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - dg) + 1, Rational(0));
    const Rational lead = g.leading();
    for (int k = f.degree() - dg; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + dg)] / lead;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * gc[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Cyclotomic field data, cached per conductor.

namespace {

struct FieldData {
    long n = 1;
    long phi = 1;
    RatPoly modulus;  // Phi_n, monic with integer coefficients
    // xpow[e] = coefficients of x^e mod Phi_n, for 0 <= e < n.
    std::vector<std::vector<Rational>> xpow;
};

RatPoly cyclotomic_polynomial_uncached(long n, const std::map<long, FieldData>& cache);

std::map<long, FieldData>& field_cache() {
    static std::map<long, FieldData> cache;
    return cache;
}

std::mutex& field_mutex() {
    static std::mutex m;
    return m;
}

const FieldData& field(long n) {
    if (n < 1) throw InvalidInputError("cyclotomic conductor must be >= 1");
    std::lock_guard<std::mutex> lock(field_mutex());
    auto& cache = field_cache();
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    FieldData fd;
    fd.n = n;
    fd.modulus = cyclotomic_polynomial_uncached(n, cache);
    fd.phi = fd.modulus.degree();
    const std::size_t phi = static_cast<std::size_t>(fd.phi);

    fd.xpow.resize(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < static_cast<std::size_t>(n); ++e) {
        if (e < phi) {
            std::vector<Rational> v(phi, Rational(0));
            v[e] = 1;
            fd.xpow[e] = std::move(v);
        } else {
            // x^e = x * x^{e-1}, then fold the degree-phi term back using
            // x^phi = -(lower part of Phi_n).
            std::vector<Rational> v(phi + 1, Rational(0));
            const auto& prev = fd.xpow[e - 1];
            for (std::size_t i = 0; i < phi; ++i) v[i + 1] = prev[i];
            Rational top = v[phi];
            v.pop_back();
            if (top != 0) {
                for (std::size_t i = 0; i < phi; ++i)
                    v[i] -= top * fd.modulus.coeff(i);
            }
            fd.xpow[e] = std::move(v);
        }
    }
    auto [it, inserted] = cache.emplace(n, std::move(fd));
    return it->second;
}

RatPoly cyclotomic_polynomial_uncached(long n, const std::map<long, FieldData>& cache) {
    if (n == 1) return RatPoly::from_ints({-1, 1});
    RatPoly num = RatPoly::x_pow_minus_one(n);
    RatPoly den = RatPoly::from_ints({1});
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        if (auto it = cache.find(d); it != cache.end()) {
            den = den * it->second.modulus;
        } else {
            den = den * cyclotomic_polynomial_uncached(d, cache);
        }
    }
    auto [q, r] = poly_divrem(num, den);
    if (!r.is_zero())
        throw InternalError("cyclotomic polynomial division left a remainder");
    return q;
}

long long lcm_long(long a, long b) {
    return std::lcm(static_cast<long long>(a), static_cast<long long>(b));
}

}  // namespace

RatPoly cyclotomic_polynomial(long n) {
    if (n <= 0) throw InvalidInputError("cyclotomic polynomial index must be >= 1");
    return field(n).modulus;
}

Cyclotomic Cyclotomic::zero(long conductor) {
    const FieldData& fd = field(conductor);
    return Cyclotomic(conductor, std::vector<Rational>(static_cast<std::size_t>(fd.phi), Rational(0)));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw StructuralError("cyclotomic value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::from_exponent_buckets(long n, const std::vector<Rational>& buckets) {
    const FieldData& fd = field(n);
    const std::size_t phi = static_cast<std::size_t>(fd.phi);
    std::vector<Rational> out(phi, Rational(0));
    for (std::size_t e = 0; e < buckets.size(); ++e) {
        const Rational& b = buckets[e];
        if (b == 0) continue;
        if (e < phi) {
            out[e] += b;
        } else {
            const auto& pw = fd.xpow[e];
            for (std::size_t i = 0; i < phi; ++i)
                if (pw[i] != 0) out[i] += b * pw[i];
        }
    }
    return Cyclotomic(n, std::move(out));
}

Cyclotomic Cyclotomic::embedded(long m) const {
    if (m == conductor_) return *this;
    if (m < 1 || m % conductor_ != 0)
        throw InvalidInputError("embedding target conductor must be a positive multiple");
    const long stride = m / conductor_;
    std::vector<Rational> buckets(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        buckets[(i * static_cast<std::size_t>(stride)) % static_cast<std::size_t>(m)] += coeffs_[i];
    }
    return from_exponent_buckets(m, buckets);
}

Cyclotomic Cyclotomic::times_root(long long e) const {
    const long n = conductor_;
    long long r = e % n;
    if (r < 0) r += n;
    if (r == 0) return *this;
    std::vector<Rational> buckets(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        buckets[(i + static_cast<std::size_t>(r)) % static_cast<std::size_t>(n)] += coeffs_[i];
    }
    return from_exponent_buckets(n, buckets);
}

Cyclotomic Cyclotomic::conj() const {
    const long n = conductor_;
    std::vector<Rational> buckets(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        buckets[(i * static_cast<std::size_t>(n - 1)) % static_cast<std::size_t>(n)] += coeffs_[i];
    }
    return from_exponent_buckets(n, buckets);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    const long m = static_cast<long>(lcm_long(conductor_, o.conductor_));
    Cyclotomic a = embedded(m);
    Cyclotomic b = o.embedded(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    const long m = static_cast<long>(lcm_long(conductor_, o.conductor_));
    Cyclotomic a = embedded(m);
    Cyclotomic b = o.embedded(m);
    std::vector<Rational> buckets(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            buckets[(i + j) % static_cast<std::size_t>(m)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return from_exponent_buckets(m, buckets);
}

Cyclotomic Cyclotomic::operator*(const Rational& s) const {
    Cyclotomic r(*this);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Cyclotomic Cyclotomic::operator/(const Rational& s) const {
    if (s == 0) throw ArithmeticError("division by zero");
    return *this * (Rational(1) / s);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    const FieldData& fd = field(conductor_);
    // Extended Euclid in Q[x]: s*a + t*Phi = gcd; Phi irreducible and a != 0
    // reduced, so the gcd is a nonzero constant.
    RatPoly a(coeffs_);
    RatPoly old_r = a, r = fd.modulus;
    RatPoly old_s = RatPoly::from_ints({1}), s;
    while (!r.is_zero()) {
        auto [q, rem] = poly_divrem(old_r, r);
        old_r = std::exchange(r, rem);
        RatPoly next_s = old_s - q * s;
        old_s = std::exchange(s, next_s);
    }
    if (old_r.degree() != 0)
        throw InternalError("cyclotomic inverse: gcd with the modulus is not constant");
    RatPoly inv = old_s * (Rational(1) / old_r.coeff(0));
    auto [q, rem] = poly_divrem(inv, fd.modulus);
    std::vector<Rational> out(static_cast<std::size_t>(fd.phi), Rational(0));
    for (std::size_t i = 0; i < rem.coeffs().size(); ++i) out[i] = rem.coeffs()[i];
    return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
    const long m = static_cast<long>(lcm_long(conductor_, o.conductor_));
    return embedded(m) * o.embedded(m).inverse();
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
    const long m = static_cast<long>(lcm_long(conductor_, o.conductor_));
    return embedded(m).coeffs_ == o.embedded(m).coeffs_;
}

Cyclotomic root_of_unity(long n, long long k) {
    if (n < 1) throw InvalidInputError("root of unity order must be >= 1");
    long long r = k % n;
    if (r < 0) r += n;
    std::vector<Rational> buckets(static_cast<std::size_t>(n), Rational(0));
    buckets[static_cast<std::size_t>(r)] = 1;
    return Cyclotomic::from_exponent_buckets(n, buckets);
}

Cyclotomic poly_eval_at_root(const RatPoly& f, long n, long long k) {
    if (n < 1) throw InvalidInputError("root of unity order must be >= 1");
    long long r = k % n;
    if (r < 0) r += n;
    std::vector<Rational> buckets(static_cast<std::size_t>(n), Rational(0));
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        buckets[static_cast<std::size_t>((static_cast<long long>(i % static_cast<std::size_t>(n)) * r) % n)] += c[i];
    }
    return Cyclotomic::from_exponent_buckets(n, buckets);
}

Cyclotomic inv_one_minus_root(long n, long long k) {
    if (n < 1) throw InvalidInputError("root of unity order must be >= 1");
    long long r = k % n;
    if (r < 0) r += n;
    if (r == 0) throw ArithmeticError("1 - zeta^k with zeta^k = 1 is not invertible");
    // 1/(1 - zeta^r) = -(1/n) * sum_{t=0}^{n-1} t * zeta^{rt}
    std::vector<Rational> buckets(static_cast<std::size_t>(n), Rational(0));
    for (long long t = 1; t < n; ++t)
        buckets[static_cast<std::size_t>((r * t) % n)] += t;
    return Cyclotomic::from_exponent_buckets(n, buckets) * Rational(-1, n);
}

}  // namespace wtorsor
