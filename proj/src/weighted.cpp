#include "wtorsor/weighted.hpp"

#include <numeric>
#include <string>

#include "wtorsor/errors.hpp"

namespace wtorsor {

WeightedGroup::WeightedGroup(FiniteAbelianGroup g, std::vector<Rational> w)
    : group(std::move(g)), weights(std::move(w)) {
    if (weights.size() != static_cast<std::size_t>(group.order()))
        throw StructuralError("weight vector length " + std::to_string(weights.size()) +
                              " does not match the group order " +
                              std::to_string(group.order()));
}

DualWeights::DualWeights(FiniteAbelianGroup g, std::vector<Cyclotomic> v)
    : group(std::move(g)), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(group.order()))
        throw StructuralError("dual value vector length does not match the group order");
    conductor_ = group.exponent();
    for (const auto& val : values)
        conductor_ = static_cast<long>(std::lcm<long long>(conductor_, val.conductor()));
    for (auto& val : values) val = val.embedded(conductor_);
}

DualWeights fourier_transform(const WeightedGroup& w) {
    const FiniteAbelianGroup& g = w.group;
    const std::size_t n = static_cast<std::size_t>(g.order());
    const long N = g.exponent();
    std::vector<Cyclotomic> values;
    values.reserve(n);
    for (std::size_t chi = 0; chi < n; ++chi) {
        std::vector<Rational> buckets(static_cast<std::size_t>(N), Rational(0));
        for (std::size_t a = 0; a < n; ++a) {
            if (w.weights[a] == 0) continue;
            const long long e = g.pairing_exponent(chi, a);
            buckets[static_cast<std::size_t>((N - e) % N)] += w.weights[a];
        }
        values.push_back(Cyclotomic::from_exponent_buckets(N, buckets) * Rational(1, n));
    }
    return DualWeights(g, std::move(values));
}

WeightedGroup inverse_fourier(const DualWeights& d) {
    const FiniteAbelianGroup& g = d.group;
    const std::size_t n = static_cast<std::size_t>(g.order());
    const long N = g.exponent();
    const long M = d.conductor();
    const long stride = M / N;
    std::vector<Rational> weights(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<Rational> buckets(static_cast<std::size_t>(M), Rational(0));
        for (std::size_t chi = 0; chi < n; ++chi) {
            const long long shift = g.pairing_exponent(chi, a) * stride;
            const auto& c = d.values[chi].coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] == 0) continue;
                buckets[(i + static_cast<std::size_t>(shift)) % static_cast<std::size_t>(M)] += c[i];
            }
        }
        Cyclotomic v = Cyclotomic::from_exponent_buckets(M, buckets);
        if (!v.is_rational())
            throw NonRationalWeightsError(
                "inverse transform produced a non-rational weight at element " +
                std::to_string(a));
        weights[a] = v.rational_part();
    }
    return WeightedGroup(g, std::move(weights));
}

Rational average_weight(const WeightedGroup& w) {
    Rational sum(0);
    for (const auto& x : w.weights) sum += x;
    return sum / Rational(w.group.order());
}

bool is_reduced(const WeightedGroup& w) {
    Rational sum(0);
    for (const auto& x : w.weights) sum += x;
    return sum == 0;
}

WeightedGroup reduce(const WeightedGroup& w) {
    const Rational avg = average_weight(w);
    std::vector<Rational> weights(w.weights);
    for (auto& x : weights) x -= avg;
    return WeightedGroup(w.group, std::move(weights));
}

WeightedGroup translated(const WeightedGroup& w, const GroupElement& a0) {
    const std::size_t shift = w.group.index_of(a0);
    std::vector<Rational> weights(w.weights.size());
    for (std::size_t a = 0; a < weights.size(); ++a)
        weights[a] = w.weights[w.group.add(a, shift)];
    return WeightedGroup(w.group, std::move(weights));
}

DirectSumResult direct_sum(const WeightedGroup& w, const WeightedGroup& w2) {
    ProductEmbedding pe = direct_product(w.group, w2.group);
    const std::size_t n = static_cast<std::size_t>(pe.group.order());
    std::vector<Rational> weights(n);
    std::vector<char> filled(n, 0);
    for (std::size_t a = 0; a < w.weights.size(); ++a)
        for (std::size_t b = 0; b < w2.weights.size(); ++b) {
            const std::size_t idx = pe.group.add(pe.left[a], pe.right[b]);
            if (filled[idx])
                throw InternalError("product embedding is not bijective");
            filled[idx] = 1;
            weights[idx] = w.weights[a] + w2.weights[b];
        }
    return DirectSumResult{WeightedGroup(pe.group, std::move(weights)),
                           std::move(pe.left), std::move(pe.right)};
}

std::optional<TIsoWitness> t_isomorphic(const DualWeights& d, const DualWeights& d2,
                                        long long bound) {
    if (d.group.order() > bound || d2.group.order() > bound)
        throw ResourceError("t-isomorphism search exceeds the enumeration bound " +
                            std::to_string(bound));
    if (d.group.invariant_factors() != d2.group.invariant_factors()) return std::nullopt;

    const std::size_t n = static_cast<std::size_t>(d.group.order());
    const long M = static_cast<long>(std::lcm<long long>(d.conductor(), d2.conductor()));
    std::vector<Cyclotomic> lhs, rhs;
    lhs.reserve(n);
    rhs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        lhs.push_back(d.values[i].embedded(M));
        rhs.push_back(d2.values[i].embedded(M));
    }
    // psi(0) = 1 and f(0) = 0, so the values at the identity must agree.
    if (lhs[0] != rhs[0]) return std::nullopt;

    const long N = d.group.exponent();
    const long stride = M / N;
    for (const GroupIso& iso : all_isomorphisms(d.group, d2.group, bound)) {
        const std::vector<std::size_t> tbl = iso.table();
        for (std::size_t psi = 0; psi < n; ++psi) {
            bool ok = true;
            for (std::size_t b = 1; b < n && ok; ++b) {
                const long long e = d.group.pairing_exponent(psi, b) * stride;
                ok = rhs[tbl[b]] == lhs[b].times_root(e);
            }
            if (ok) return TIsoWitness{iso, d.group.character_at(psi)};
        }
    }
    return std::nullopt;
}

std::optional<AffineWitness> affine_isomorphic(const WeightedGroup& w, const WeightedGroup& w2,
                                               long long bound) {
    if (w.group.order() > bound || w2.group.order() > bound)
        throw ResourceError("affine isomorphism search exceeds the enumeration bound " +
                            std::to_string(bound));
    if (w.group.invariant_factors() != w2.group.invariant_factors()) return std::nullopt;

    const std::size_t n = static_cast<std::size_t>(w.group.order());
    for (const GroupIso& iso : all_isomorphisms(w.group, w2.group, bound)) {
        const std::vector<std::size_t> tbl = iso.table();
        for (std::size_t t = 0; t < n; ++t) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a)
                ok = w2.weights[w2.group.add(tbl[a], t)] == w.weights[a];
            if (ok) return AffineWitness{iso, w2.group.element_at(t)};
        }
    }
    return std::nullopt;
}

}  // namespace wtorsor
