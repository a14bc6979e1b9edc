#include "wtorsor/lens.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "wtorsor/errors.hpp"

namespace wtorsor {

LensSpace::LensSpace(long p_, long q_) : p(p_) {
    if (p < 2) throw InvalidInputError("lens space requires p >= 2");
    q = q_ % p;
    if (q < 0) q += p;
    if (std::gcd(p, q) != 1)
        throw InvalidInputError("lens space requires gcd(p, q) = 1, got p = " +
                                std::to_string(p) + ", q = " + std::to_string(q_));
}

namespace {

// p/(1 - zeta_p^j) = -(sum_t t zeta^{jt}) as integer exponent buckets, for
// j = 1..p-1; shared across all q for the same p. Keeping the arithmetic in
// plain integers until the final division by p^3 makes the family-sized
// sweeps (p <= 50, all q, all k) cheap.
const std::vector<std::vector<long long>>& scaled_inv_buckets(long p) {
    static std::map<long, std::vector<std::vector<long long>>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(p);
    if (it == cache.end()) {
        std::vector<std::vector<long long>> table(static_cast<std::size_t>(p));
        for (long j = 1; j < p; ++j) {
            std::vector<long long> buckets(static_cast<std::size_t>(p), 0);
            for (long t = 1; t < p; ++t) buckets[static_cast<std::size_t>(j * t % p)] -= t;
            table[static_cast<std::size_t>(j)] = std::move(buckets);
        }
        it = cache.emplace(p, std::move(table)).first;
    }
    return it->second;
}

}  // namespace

DualWeights lens_torsion_dual(const LensSpace& l) {
    const long p = l.p;
    const FiniteAbelianGroup g = make_group({p});
    const auto& inv = scaled_inv_buckets(p);
    const long long p_cubed = static_cast<long long>(p) * p * p;
    std::vector<Cyclotomic> values;
    values.reserve(static_cast<std::size_t>(p));
    values.push_back(Cyclotomic::zero(p));
    for (long k = 1; k < p; ++k) {
        const auto& a = inv[static_cast<std::size_t>(p - k)];            // p/(1 - zeta^{-k})
        const auto& b = inv[static_cast<std::size_t>((p - k * l.q % p) % p)];  // p/(1 - zeta^{-kq})
        // Cyclic convolution in Z[x]/(x^p - 1), then one exact division.
        std::vector<long long> conv(static_cast<std::size_t>(p), 0);
        for (long i = 0; i < p; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (long j = 0; j < p; ++j)
                conv[static_cast<std::size_t>((i + j) % p)] +=
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
        std::vector<Rational> buckets(static_cast<std::size_t>(p));
        for (long e = 0; e < p; ++e)
            buckets[static_cast<std::size_t>(e)] =
                Rational(conv[static_cast<std::size_t>(e)], p_cubed);
        values.push_back(Cyclotomic::from_exponent_buckets(p, buckets));
    }
    return DualWeights(g, std::move(values));
}

WeightedGroup lens_reduced_d(const LensSpace& l) {
    DualWeights torsion = lens_torsion_dual(l);
    std::vector<Cyclotomic> scaled;
    scaled.reserve(torsion.values.size());
    for (const auto& v : torsion.values) scaled.push_back(v * kReducedDScale);
    try {
        return inverse_fourier(DualWeights(torsion.group, std::move(scaled)));
    } catch (const NonRationalWeightsError& e) {
        throw InternalError(std::string("lens reduced d-invariants came out non-rational: ") +
                            e.what());
    }
}

WeightedGroup lens_f(const LensSpace& l) {
    const long p = l.p;
    std::vector<Rational> weights(static_cast<std::size_t>(p), Rational(0));
    weights[0] += 1;
    weights[static_cast<std::size_t>(1 % p)] -= 1;
    weights[static_cast<std::size_t>(l.q)] -= 1;
    weights[static_cast<std::size_t>((l.q + 1) % p)] += 1;
    return WeightedGroup(make_group({p}), std::move(weights));
}

bool oriented_diffeomorphic(const LensSpace& l, const LensSpace& l2) {
    if (l.p != l2.p) return false;
    return l2.q == l.q || (static_cast<long long>(l.q) * l2.q) % l.p == 1;
}

std::vector<std::vector<LensSpace>> classify_lens_family(long p_max, long long bound) {
    if (p_max > bound)
        throw ResourceError("classification range exceeds the enumeration bound");
    std::vector<std::vector<LensSpace>> classes;
    for (long p = 2; p <= p_max; ++p) {
        std::vector<LensSpace> family;
        for (long q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) family.emplace_back(p, q);

        std::vector<WeightedGroup> fs;
        fs.reserve(family.size());
        for (const auto& l : family) fs.push_back(lens_f(l));

        // Partition the family twice and insist the results agree.
        std::vector<int> rep(family.size());
        for (std::size_t i = 0; i < family.size(); ++i) rep[i] = static_cast<int>(i);
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                const bool criterion = oriented_diffeomorphic(family[i], family[j]);
                const bool brute = affine_isomorphic(fs[i], fs[j], bound).has_value();
                if (criterion != brute)
                    throw InternalError(
                        "lens classification mismatch between the closed-form criterion "
                        "and brute-force affine equivalence at p = " + std::to_string(p));
                if (criterion && rep[j] == static_cast<int>(j)) rep[j] = rep[i];
            }

        for (std::size_t i = 0; i < family.size(); ++i) {
            if (rep[i] != static_cast<int>(i)) continue;
            std::vector<LensSpace> cls;
            for (std::size_t j = i; j < family.size(); ++j)
                if (rep[j] == static_cast<int>(i)) cls.push_back(family[j]);
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

}  // namespace wtorsor
