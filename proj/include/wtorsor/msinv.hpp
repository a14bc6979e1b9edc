#pragma once

#include <vector>

#include "wtorsor/weighted.hpp"

namespace wtorsor {

/// True iff the value at every nontrivial character is nonzero (exact test);
/// vacuously true on the trivial group.
bool has_nonvanishing(const DualWeights& d);

/// All nontrivial subgroups on which the values never vanish (away from the
/// identity) and which are inclusion-maximal with that property. Sorted by
/// (order, element set).
std::vector<Subgroup> maximal_special_subgroups(const DualWeights& d,
                                                long long bound = kDefaultEnumBound);

/// One t-isomorphism class of maximal special subgroups: the restricted dual
/// weighting on the abstract form of the carrier, values kept in the ambient
/// conductor field.
struct MSClass {
    DualWeights rep;
    std::vector<std::size_t> carrier;  // parent dual element indices of the representative
};

struct MSMultiset {
    struct Entry {
        MSClass cls;
        int multiplicity;
    };
    std::vector<Entry> entries;
};

/// Reduce, transform, enumerate maximal special subgroups, and group them
/// into t-isomorphism classes with multiplicity. Deterministic class order
/// (subgroup order, then lexicographically least element set).
MSMultiset ms_multiset(const WeightedGroup& w, long long bound = kDefaultEnumBound);

/// Multiplicity of the class t-isomorphic to `reference_dual`, or 0.
int count_in_multiset(const MSMultiset& ms, const DualWeights& reference_dual,
                      long long bound = kDefaultEnumBound);

/// Weight-preserving matching of classes between two multisets.
bool multisets_equal(const MSMultiset& a, const MSMultiset& b,
                     long long bound = kDefaultEnumBound);

/// Multiplicity of [A^vee, \hat d] of the reference in ms_multiset(target).
/// The reference must be reduced with a nonvanishing transform.
int c_count(const WeightedGroup& reference, const WeightedGroup& target,
            long long bound = kDefaultEnumBound);

/// c_count of every candidate against the target, computed on one shared
/// multiset of the target.
std::vector<int> recover_decomposition(const WeightedGroup& target,
                                       const std::vector<WeightedGroup>& candidates,
                                       long long bound = kDefaultEnumBound);

}  // namespace wtorsor
