#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "wtorsor/cyclotomic.hpp"

namespace wtorsor {

/// Default cap on |G| for the exhaustive enumerations (subgroups,
/// isomorphism searches). Overridable per call and via the CLI environment
/// variable WTORSOR_ENUM_BOUND.
inline constexpr long long kDefaultEnumBound = 1024;

struct GroupElement {
    std::vector<long> coords;
    auto operator<=>(const GroupElement&) const = default;
};

/// phi(a) = zeta_N^{sum_i exps[i] * a_i * N/n_i}, N the group exponent.
struct Character {
    std::vector<long> exps;
    auto operator<=>(const Character&) const = default;
};

/// Finite abelian group in invariant-factor form n_1 | n_2 | ... | n_k.
/// Elements and characters are addressed by their index in lexicographic
/// coordinate order (first coordinate most significant); index 0 is the
/// identity / trivial character.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;  // trivial group

    const std::vector<long>& invariant_factors() const { return factors_; }
    std::size_t num_factors() const { return factors_.size(); }
    long long order() const { return order_; }
    long exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    bool is_trivial() const { return factors_.empty(); }

    GroupElement element_at(std::size_t index) const;
    std::size_t index_of(const GroupElement& e) const;
    std::vector<GroupElement> elements() const;

    Character character_at(std::size_t index) const;
    std::size_t index_of(const Character& chi) const;
    std::vector<Character> characters() const;

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t negate(std::size_t a) const;
    std::size_t scalar_mul(long long s, std::size_t a) const;
    long long element_order(std::size_t a) const;
    /// Index of the standard generator of the i-th invariant factor.
    std::size_t generator_index(std::size_t i) const;

    /// Exponent e with chi(a) = zeta_N^e, 0 <= e < N (N = exponent).
    long long pairing_exponent(std::size_t chi_index, std::size_t elem_index) const;
    Cyclotomic evaluate(const Character& chi, const GroupElement& a) const;

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    friend FiniteAbelianGroup make_group(const std::vector<long>&);
    explicit FiniteAbelianGroup(std::vector<long> normalized_factors);

    std::vector<long> decode(std::size_t index) const;
    std::size_t encode(const std::vector<long>& coords) const;

    std::vector<long> factors_;
    long long order_ = 1;
};

/// Normalizes any list of cyclic orders (each >= 2) to invariant-factor form
/// by elementary-divisor merging; the empty list gives the trivial group.
FiniteAbelianGroup make_group(const std::vector<long>& cyclic_orders);

struct Subgroup {
    FiniteAbelianGroup parent;
    std::vector<std::size_t> elements;  // sorted element indices, closed under the group law
    std::size_t order() const { return elements.size(); }
};

/// Every subgroup exactly once, sorted by (order, element set); built by
/// closing the cyclic subgroups under pairwise join.
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g,
                                    long long bound = kDefaultEnumBound);

/// Isomorphism determined by the images of the standard generators.
struct GroupIso {
    FiniteAbelianGroup domain;
    FiniteAbelianGroup codomain;
    std::vector<std::size_t> generator_images;

    std::size_t apply(std::size_t domain_index) const;
    std::vector<std::size_t> table() const;
    GroupIso inverse() const;
    static GroupIso identity(const FiniteAbelianGroup& g);
};

/// All bijective homomorphisms g -> h in a fixed deterministic order
/// (generator images enumerated by ascending element index); empty when the
/// invariant factors differ.
std::vector<GroupIso> all_isomorphisms(const FiniteAbelianGroup& g,
                                       const FiniteAbelianGroup& h,
                                       long long bound = kDefaultEnumBound);

/// g x h renormalized to invariant-factor form together with the two
/// embeddings (element index of the factor -> element index of the product).
struct ProductEmbedding {
    FiniteAbelianGroup group;
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};
ProductEmbedding direct_product(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h);

/// Abstract invariant-factor form of a subgroup plus an explicit isomorphism
/// onto it: element_map[abstract index] = parent element index.
struct SubgroupStructure {
    FiniteAbelianGroup group;
    std::vector<std::size_t> element_map;
};
SubgroupStructure subgroup_structure(const Subgroup& s);

}  // namespace wtorsor
