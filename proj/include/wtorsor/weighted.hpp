#pragma once

#include <optional>
#include <vector>

#include "wtorsor/abelian.hpp"

namespace wtorsor {

/// A weighted group: a basepointed weighted torsor. Weights are rational and
/// indexed by element index.
struct WeightedGroup {
    FiniteAbelianGroup group;
    std::vector<Rational> weights;

    WeightedGroup() : weights(1, Rational(0)) {}
    WeightedGroup(FiniteAbelianGroup g, std::vector<Rational> w);
};

/// Fourier transform of a weighted group: one exact cyclotomic value per
/// character of the (abstractly identified) dual group, all values living in
/// one common conductor field.
struct DualWeights {
    FiniteAbelianGroup group;  // the dual; same invariant factors as the source
    std::vector<Cyclotomic> values;

    DualWeights(FiniteAbelianGroup g, std::vector<Cyclotomic> v);
    long conductor() const { return conductor_; }

private:
    long conductor_ = 1;
};

/// \hat d(phi) = (1/|A|) sum_a d(a) conj(phi(a)).
DualWeights fourier_transform(const WeightedGroup& w);

/// d(a) = sum_phi \hat d(phi) phi(a); errors when a reconstructed value is
/// not rational.
WeightedGroup inverse_fourier(const DualWeights& d);

Rational average_weight(const WeightedGroup& w);
bool is_reduced(const WeightedGroup& w);

/// Subtract the average value from every weight.
WeightedGroup reduce(const WeightedGroup& w);

/// d'(a) = d(a + a0).
WeightedGroup translated(const WeightedGroup& w, const GroupElement& a0);

struct DirectSumResult {
    WeightedGroup sum;
    // Element index of each summand -> element index of the sum group.
    std::vector<std::size_t> embed_left;
    std::vector<std::size_t> embed_right;
};

/// (d + d')(x) on the invariant-factor form of the product group; the
/// embeddings record the coordinate correspondence.
DirectSumResult direct_sum(const WeightedGroup& w, const WeightedGroup& w2);

struct TIsoWitness {
    GroupIso iso;     // f: B -> B'
    Character twist;  // psi in B^vee with d'(f(b)) = d(b) psi(b)
};

/// Exhaustive search over all isomorphisms x characters, first witness in
/// the fixed enumeration order, or nullopt.
std::optional<TIsoWitness> t_isomorphic(const DualWeights& d, const DualWeights& d2,
                                        long long bound = kDefaultEnumBound);

struct AffineWitness {
    GroupIso iso;             // f: A -> A'
    GroupElement translation; // a' in A' with d'(f(a) + a') = d(a)
};

std::optional<AffineWitness> affine_isomorphic(const WeightedGroup& w, const WeightedGroup& w2,
                                               long long bound = kDefaultEnumBound);

}  // namespace wtorsor
