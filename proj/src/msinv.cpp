#include "wtorsor/msinv.hpp"

#include <algorithm>

#include "wtorsor/errors.hpp"

namespace wtorsor {

bool has_nonvanishing(const DualWeights& d) {
    for (std::size_t b = 1; b < d.values.size(); ++b)
        if (d.values[b].is_zero()) return false;
    return true;
}

std::vector<Subgroup> maximal_special_subgroups(const DualWeights& d, long long bound) {
    std::vector<Subgroup> special;
    for (Subgroup& s : all_subgroups(d.group, bound)) {
        if (s.order() <= 1) continue;
        bool ok = true;
        for (std::size_t idx : s.elements)
            if (idx != 0 && d.values[idx].is_zero()) {
                ok = false;
                break;
            }
        if (ok) special.push_back(std::move(s));
    }
    std::vector<Subgroup> maximal;
    for (std::size_t i = 0; i < special.size(); ++i) {
        bool is_max = true;
        for (std::size_t j = 0; j < special.size() && is_max; ++j) {
            if (i == j || special[j].elements.size() <= special[i].elements.size()) continue;
            is_max = !std::includes(special[j].elements.begin(), special[j].elements.end(),
                                    special[i].elements.begin(), special[i].elements.end());
        }
        if (is_max) maximal.push_back(special[i]);
    }
    return maximal;  // all_subgroups order is already (order, element set)
}

namespace {

MSClass restrict_to_subgroup(const DualWeights& d, const Subgroup& s) {
    SubgroupStructure st = subgroup_structure(s);
    std::vector<Cyclotomic> values;
    values.reserve(st.element_map.size());
    for (std::size_t parent_idx : st.element_map) values.push_back(d.values[parent_idx]);
    return MSClass{DualWeights(std::move(st.group), std::move(values)), s.elements};
}

}  // namespace

MSMultiset ms_multiset(const WeightedGroup& w, long long bound) {
    const DualWeights dual = fourier_transform(reduce(w));
    MSMultiset ms;
    for (const Subgroup& s : maximal_special_subgroups(dual, bound)) {
        MSClass cls = restrict_to_subgroup(dual, s);
        bool matched = false;
        for (auto& entry : ms.entries) {
            if (t_isomorphic(entry.cls.rep, cls.rep, bound)) {
                ++entry.multiplicity;
                matched = true;
                break;
            }
        }
        if (!matched) ms.entries.push_back(MSMultiset::Entry{std::move(cls), 1});
    }
    return ms;
}

int count_in_multiset(const MSMultiset& ms, const DualWeights& reference_dual,
                      long long bound) {
    for (const auto& entry : ms.entries)
        if (t_isomorphic(entry.cls.rep, reference_dual, bound)) return entry.multiplicity;
    return 0;
}

bool multisets_equal(const MSMultiset& a, const MSMultiset& b, long long bound) {
    if (a.entries.size() != b.entries.size()) return false;
    for (const auto& entry : a.entries)
        if (count_in_multiset(b, entry.cls.rep, bound) != entry.multiplicity) return false;
    return true;
}

namespace {

DualWeights validated_reference_dual(const WeightedGroup& reference) {
    if (!is_reduced(reference))
        throw InvalidReferenceError("reference weighting is not reduced");
    DualWeights d = fourier_transform(reference);
    if (!has_nonvanishing(d))
        throw InvalidReferenceError(
            "reference transform vanishes at a nontrivial character");
    return d;
}

}  // namespace

int c_count(const WeightedGroup& reference, const WeightedGroup& target, long long bound) {
    DualWeights ref = validated_reference_dual(reference);
    return count_in_multiset(ms_multiset(target, bound), ref, bound);
}

std::vector<int> recover_decomposition(const WeightedGroup& target,
                                       const std::vector<WeightedGroup>& candidates,
                                       long long bound) {
    std::vector<DualWeights> refs;
    refs.reserve(candidates.size());
    for (const auto& cand : candidates) refs.push_back(validated_reference_dual(cand));
    const MSMultiset ms = ms_multiset(target, bound);
    std::vector<int> counts;
    counts.reserve(refs.size());
    for (const auto& ref : refs) counts.push_back(count_in_multiset(ms, ref, bound));
    return counts;
}

}  // namespace wtorsor
