#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "wtorsor/weighted.hpp"

namespace testutil {

using namespace wtorsor;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long rand_in(std::mt19937_64& r, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(r);
}

/// Random group of order <= max_order (possibly trivial when allow_trivial).
inline FiniteAbelianGroup random_group(std::mt19937_64& r, long max_order,
                                       bool allow_trivial = false) {
    for (;;) {
        std::vector<long> orders;
        const long parts = rand_in(r, allow_trivial ? 0 : 1, 3);
        long long total = 1;
        for (long i = 0; i < parts; ++i) {
            const long n = rand_in(r, 2, std::max<long>(2, max_order));
            if (total * n > max_order) continue;
            total *= n;
            orders.push_back(n);
        }
        if (!allow_trivial && orders.empty()) continue;
        FiniteAbelianGroup g = make_group(orders);
        if (g.order() <= max_order) return g;
    }
}

inline std::vector<Rational> random_weights(std::mt19937_64& r, const FiniteAbelianGroup& g) {
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(g.order()));
    for (long long i = 0; i < g.order(); ++i)
        w.emplace_back(rand_in(r, -9, 9), rand_in(r, 1, 9));
    return w;
}

inline WeightedGroup random_weighted(std::mt19937_64& r, long max_order) {
    FiniteAbelianGroup g = random_group(r, max_order);
    return WeightedGroup(g, random_weights(r, g));
}

/// W'(f(a) + t) = W(a) for a randomly chosen automorphism f and shift t, so
/// affine_isomorphic(W, W') is guaranteed a witness.
inline WeightedGroup random_affine_image(std::mt19937_64& r, const WeightedGroup& w) {
    const auto autos = all_isomorphisms(w.group, w.group);
    const GroupIso& f = autos[static_cast<std::size_t>(
        rand_in(r, 0, static_cast<long>(autos.size()) - 1))];
    const std::size_t t =
        static_cast<std::size_t>(rand_in(r, 0, static_cast<long>(w.group.order()) - 1));
    std::vector<Rational> weights(w.weights.size());
    for (std::size_t a = 0; a < weights.size(); ++a)
        weights[w.group.add(f.apply(a), t)] = w.weights[a];
    return WeightedGroup(w.group, std::move(weights));
}

/// All abelian groups of order exactly n, as invariant-factor groups.
inline std::vector<FiniteAbelianGroup> abelian_groups_of_order(long n) {
    // Partitions of each prime exponent, combined multiplicatively.
    std::vector<std::vector<long>> divisor_lists{{}};
    long m = n;
    for (long p = 2; m > 1; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        std::vector<std::vector<int>> partitions;
        std::vector<int> current;
        auto rec = [&](auto&& self, int remaining, int max_part) -> void {
            if (remaining == 0) {
                partitions.push_back(current);
                return;
            }
            for (int part = std::min(remaining, max_part); part >= 1; --part) {
                current.push_back(part);
                self(self, remaining - part, part);
                current.pop_back();
            }
        };
        rec(rec, e, e);
        std::vector<std::vector<long>> next;
        for (const auto& base : divisor_lists)
            for (const auto& partition : partitions) {
                std::vector<long> lst = base;
                for (int part : partition) {
                    long pp = 1;
                    for (int i = 0; i < part; ++i) pp *= p;
                    lst.push_back(pp);
                }
                next.push_back(std::move(lst));
            }
        divisor_lists = std::move(next);
    }
    std::vector<FiniteAbelianGroup> out;
    out.reserve(divisor_lists.size());
    for (const auto& lst : divisor_lists) out.push_back(make_group(lst));
    return out;
}

/// The character of `summand` obtained by restricting character chi of the
/// product along the recorded embedding.
inline std::size_t pullback_character(const FiniteAbelianGroup& product, std::size_t chi,
                                      const std::vector<std::size_t>& embedding,
                                      const FiniteAbelianGroup& summand) {
    const long big_n = product.exponent();
    std::vector<long> exps(summand.num_factors());
    for (std::size_t i = 0; i < summand.num_factors(); ++i) {
        const long n_i = summand.invariant_factors()[i];
        const long long e = product.pairing_exponent(chi, embedding[summand.generator_index(i)]);
        if (e * n_i % big_n != 0) throw InternalError("pullback is not a character");
        exps[i] = static_cast<long>(e * n_i / big_n % n_i);
    }
    return summand.index_of(Character{exps});
}

inline int moebius(long n) {
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

/// Independent route to Phi_n: prod over d | n of (x^d - 1)^{mu(n/d)}.
inline RatPoly cyclotomic_via_moebius(long n) {
    RatPoly num = RatPoly::from_ints({1});
    RatPoly den = RatPoly::from_ints({1});
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = moebius(n / d);
        if (mu == 1) num = num * RatPoly::x_pow_minus_one(d);
        if (mu == -1) den = den * RatPoly::x_pow_minus_one(d);
    }
    auto [q, r] = poly_divrem(num, den);
    if (!r.is_zero()) throw InternalError("moebius product was not divisible");
    return q;
}

}  // namespace testutil
