#include "wtorsor/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "wtorsor/errors.hpp"

namespace wtorsor {

namespace {

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long long ipow(long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long long mod_inverse(long long a, long long m) {
    long long t = 0, new_t = 1, r = m, new_r = a % m;
    if (new_r < 0) new_r += m;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw InternalError("mod_inverse of a non-unit");
    return t < 0 ? t + m : t;
}

/// Exponent lists per prime -> invariant factors (ascending chain).
/// Slot j (ascending exponents, stably sorted) of a prime with s slots lands
/// in factor index T - s + j, T the chain length.
std::vector<long> merge_elementary_divisors(const std::vector<long>& orders) {
    std::map<long, std::vector<int>> exps;
    for (long n : orders)
        for (auto [p, e] : factorize(n)) exps[p].push_back(e);
    std::size_t chain_len = 0;
    for (auto& [p, es] : exps) {
        std::stable_sort(es.begin(), es.end());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<long> factors(chain_len, 1);
    for (auto& [p, es] : exps) {
        const std::size_t offset = chain_len - es.size();
        for (std::size_t j = 0; j < es.size(); ++j) {
            long long f = static_cast<long long>(factors[offset + j]) * ipow(p, es[j]);
            if (f > (1LL << 31))
                throw InvalidInputError("invariant factor exceeds the supported range");
            factors[offset + j] = static_cast<long>(f);
        }
    }
    return factors;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> normalized_factors)
    : factors_(std::move(normalized_factors)) {
    for (long f : factors_) {
        order_ *= f;
        if (order_ > (1LL << 40))
            throw InvalidInputError("group order exceeds the supported range");
    }
}

FiniteAbelianGroup make_group(const std::vector<long>& cyclic_orders) {
    for (long n : cyclic_orders)
        if (n <= 1)
            throw InvalidInputError("cyclic order must be >= 2, got " + std::to_string(n));
    return FiniteAbelianGroup(merge_elementary_divisors(cyclic_orders));
}

std::vector<long> FiniteAbelianGroup::decode(std::size_t index) const {
    std::vector<long> coords(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        coords[i] = static_cast<long>(index % static_cast<std::size_t>(factors_[i]));
        index /= static_cast<std::size_t>(factors_[i]);
    }
    return coords;
}

std::size_t FiniteAbelianGroup::encode(const std::vector<long>& coords) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        index = index * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(coords[i]);
    return index;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
    if (index >= static_cast<std::size_t>(order_))
        throw StructuralError("element index out of range");
    return GroupElement{decode(index)};
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& e) const {
    if (e.coords.size() != factors_.size())
        throw StructuralError("element does not belong to this group");
    std::vector<long> c(e.coords);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] %= factors_[i];
        if (c[i] < 0) c[i] += factors_[i];
    }
    return encode(c);
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i)
        out.push_back(GroupElement{decode(i)});
    return out;
}

Character FiniteAbelianGroup::character_at(std::size_t index) const {
    if (index >= static_cast<std::size_t>(order_))
        throw StructuralError("character index out of range");
    return Character{decode(index)};
}

std::size_t FiniteAbelianGroup::index_of(const Character& chi) const {
    if (chi.exps.size() != factors_.size())
        throw StructuralError("character does not belong to this group");
    std::vector<long> c(chi.exps);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] %= factors_[i];
        if (c[i] < 0) c[i] += factors_[i];
    }
    return encode(c);
}

std::vector<Character> FiniteAbelianGroup::characters() const {
    std::vector<Character> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i)
        out.push_back(Character{decode(i)});
    return out;
}

std::size_t FiniteAbelianGroup::add(std::size_t a, std::size_t b) const {
    std::vector<long> ca = decode(a), cb = decode(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % factors_[i];
    return encode(ca);
}

std::size_t FiniteAbelianGroup::negate(std::size_t a) const {
    std::vector<long> c = decode(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (factors_[i] - c[i]) % factors_[i];
    return encode(c);
}

std::size_t FiniteAbelianGroup::scalar_mul(long long s, std::size_t a) const {
    std::vector<long> c = decode(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
        long long v = (s % factors_[i]) * c[i] % factors_[i];
        if (v < 0) v += factors_[i];
        c[i] = static_cast<long>(v);
    }
    return encode(c);
}

long long FiniteAbelianGroup::element_order(std::size_t a) const {
    std::vector<long> c = decode(a);
    long long ord = 1;
    for (std::size_t i = 0; i < c.size(); ++i)
        ord = std::lcm(ord, static_cast<long long>(factors_[i] / std::gcd(factors_[i], c[i])));
    return ord;
}

std::size_t FiniteAbelianGroup::generator_index(std::size_t i) const {
    std::vector<long> c(factors_.size(), 0);
    c[i] = 1;
    return encode(c);
}

long long FiniteAbelianGroup::pairing_exponent(std::size_t chi_index, std::size_t elem_index) const {
    const long n = exponent();
    std::vector<long> chi = decode(chi_index), a = decode(elem_index);
    long long e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        e = (e + static_cast<long long>(chi[i]) * a[i] % n * (n / factors_[i])) % n;
    return e;
}

Cyclotomic FiniteAbelianGroup::evaluate(const Character& chi, const GroupElement& a) const {
    if (chi.exps.size() != factors_.size() || a.coords.size() != factors_.size())
        throw StructuralError("character/element parent group mismatch");
    return root_of_unity(exponent(), pairing_exponent(index_of(chi), index_of(a)));
}

// ---------------------------------------------------------------------------

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g, long long bound) {
    if (g.order() > bound)
        throw ResourceError("group order " + std::to_string(g.order()) +
                            " exceeds the enumeration bound " + std::to_string(bound));
    const std::size_t n = static_cast<std::size_t>(g.order());

    std::set<std::vector<std::size_t>> found;
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::size_t> cyc;
        std::size_t x = 0;
        do {
            cyc.push_back(x);
            x = g.add(x, a);
        } while (x != 0);
        std::sort(cyc.begin(), cyc.end());
        found.insert(std::move(cyc));
    }

    // Join of two subgroups of an abelian group is the set of pairwise sums.
    auto join = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        std::set<std::size_t> s;
        for (std::size_t x : a)
            for (std::size_t y : b) s.insert(g.add(x, y));
        return std::vector<std::size_t>(s.begin(), s.end());
    };

    std::vector<std::vector<std::size_t>> fresh(found.begin(), found.end());
    while (!fresh.empty()) {
        std::vector<std::vector<std::size_t>> next;
        std::vector<std::vector<std::size_t>> snapshot(found.begin(), found.end());
        for (const auto& a : fresh)
            for (const auto& b : snapshot) {
                auto j = join(a, b);
                if (found.insert(j).second) next.push_back(std::move(j));
            }
        fresh = std::move(next);
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& els : found) out.push_back(Subgroup{g, els});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

std::size_t GroupIso::apply(std::size_t domain_index) const {
    GroupElement e = domain.element_at(domain_index);
    std::size_t out = 0;
    for (std::size_t i = 0; i < generator_images.size(); ++i)
        out = codomain.add(out, codomain.scalar_mul(e.coords[i], generator_images[i]));
    return out;
}

std::vector<std::size_t> GroupIso::table() const {
    std::vector<std::size_t> t(static_cast<std::size_t>(domain.order()));
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = apply(i);
    return t;
}

GroupIso GroupIso::inverse() const {
    std::vector<std::size_t> t = table();
    std::vector<std::size_t> inv(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) inv[t[i]] = i;
    std::vector<std::size_t> images(codomain.num_factors());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = inv[codomain.generator_index(i)];
    return GroupIso{codomain, domain, std::move(images)};
}

GroupIso GroupIso::identity(const FiniteAbelianGroup& g) {
    std::vector<std::size_t> images(g.num_factors());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = g.generator_index(i);
    return GroupIso{g, g, std::move(images)};
}

std::vector<GroupIso> all_isomorphisms(const FiniteAbelianGroup& g,
                                       const FiniteAbelianGroup& h, long long bound) {
    if (g.order() > bound || h.order() > bound)
        throw ResourceError("isomorphism search exceeds the enumeration bound " +
                            std::to_string(bound));
    if (g.invariant_factors() != h.invariant_factors()) return {};

    const std::size_t n = static_cast<std::size_t>(g.order());
    const std::size_t k = g.num_factors();
    const auto& factors = g.invariant_factors();

    // Candidate images: elements of exact order n_i, in index order.
    std::vector<std::vector<std::size_t>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t x = 0; x < n; ++x)
            if (h.element_order(x) == factors[i]) candidates[i].push_back(x);

    std::vector<GroupIso> out;
    std::vector<std::size_t> images(k);
    std::vector<char> seen(n);
    auto emit_if_bijective = [&] {
        GroupIso iso{g, h, images};
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t a = 0; a < n; ++a) {
            std::size_t y = iso.apply(a);
            if (seen[y]) return;
            seen[y] = 1;
        }
        out.push_back(std::move(iso));
    };
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == k) {
            emit_if_bijective();
            return;
        }
        for (std::size_t cand : candidates[pos]) {
            images[pos] = cand;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Slot {
    long prime;
    int exp;
    int side;          // 0 = left, 1 = right
    std::size_t coord; // coordinate in the source group
    long long q;       // prime power
    std::size_t target = 0;  // invariant-factor index in the product
};

}  // namespace

ProductEmbedding direct_product(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h) {
    std::vector<Slot> slots;
    auto gather = [&](const FiniteAbelianGroup& grp, int side) {
        const auto& fs = grp.invariant_factors();
        for (std::size_t j = 0; j < fs.size(); ++j)
            for (auto [p, e] : factorize(fs[j]))
                slots.push_back(Slot{p, e, side, j, ipow(p, e)});
    };
    gather(g, 0);
    gather(h, 1);

    // Invariant factors of the product and the slot-to-factor assignment.
    std::map<long, std::vector<std::size_t>> by_prime;  // slot indices
    for (std::size_t i = 0; i < slots.size(); ++i) by_prime[slots[i].prime].push_back(i);
    std::size_t chain_len = 0;
    for (auto& [p, idxs] : by_prime) {
        std::stable_sort(idxs.begin(), idxs.end(), [&](std::size_t a, std::size_t b) {
            return slots[a].exp < slots[b].exp;
        });
        chain_len = std::max(chain_len, idxs.size());
    }
    std::vector<long> factors(chain_len, 1);
    for (auto& [p, idxs] : by_prime) {
        const std::size_t offset = chain_len - idxs.size();
        for (std::size_t j = 0; j < idxs.size(); ++j) {
            slots[idxs[j]].target = offset + j;
            factors[offset + j] = static_cast<long>(factors[offset + j] * slots[idxs[j]].q);
        }
    }
    FiniteAbelianGroup prod = make_group(factors);

    // CRT generator of each slot's component inside its target factor:
    // the residue that is 1 mod q and 0 mod f/q.
    std::vector<long long> slot_gen(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const long long f = prod.invariant_factors()[slots[i].target];
        const long long m = f / slots[i].q;
        slot_gen[i] = m % f * mod_inverse(m % slots[i].q, slots[i].q) % f;
    }

    auto embed = [&](const FiniteAbelianGroup& grp, int side) {
        std::vector<std::size_t> map(static_cast<std::size_t>(grp.order()));
        for (std::size_t idx = 0; idx < map.size(); ++idx) {
            GroupElement e = grp.element_at(idx);
            std::vector<long> coords(prod.num_factors(), 0);
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (slots[s].side != side) continue;
                const long long f = prod.invariant_factors()[slots[s].target];
                long long r = e.coords[slots[s].coord] % slots[s].q;
                coords[slots[s].target] = static_cast<long>(
                    (coords[slots[s].target] + r * slot_gen[s]) % f);
            }
            map[idx] = prod.index_of(GroupElement{coords});
        }
        return map;
    };

    return ProductEmbedding{prod, embed(g, 0), embed(h, 1)};
}

SubgroupStructure subgroup_structure(const Subgroup& s) {
    const FiniteAbelianGroup& parent = s.parent;
    const std::size_t m = s.elements.size();
    if (m == 1) return SubgroupStructure{FiniteAbelianGroup{}, {s.elements[0]}};

    // Invariant factors from the order statistics: over each prime p, the
    // count of x with p^k x = 0 is p^{a_k}, and a_k - a_{k-1} is the number
    // of parts >= k of the p-type partition.
    std::vector<long> prime_powers;
    for (auto [p, e_total] : factorize(static_cast<long>(m))) {
        std::vector<int> a;  // a[k], k = 0..
        for (int k = 0;; ++k) {
            long long pk = ipow(p, k);
            int cnt = 0;
            for (std::size_t x : s.elements)
                if (parent.scalar_mul(pk, x) == 0) ++cnt;
            int log = 0;
            for (long long t = cnt; t > 1; t /= p) ++log;
            if (ipow(p, log) != cnt)
                throw InternalError("subgroup p-torsion count is not a power of p");
            a.push_back(log);
            if (log == e_total) break;
        }
        const int num_parts = a[1] - a[0];
        for (int i = 1; i <= num_parts; ++i) {
            int part = 0;
            for (std::size_t k = 1; k < a.size(); ++k)
                if (a[k] - a[k - 1] >= i) part = static_cast<int>(k);
            prime_powers.push_back(static_cast<long>(ipow(p, part)));
        }
    }
    FiniteAbelianGroup abstract = make_group(prime_powers);

    // Explicit embedding: backtrack over generator images within the
    // subgroup; a tuple works iff the generated elements are pairwise
    // distinct (the image is then a subgroup of s of full order).
    const auto& factors = abstract.invariant_factors();
    const std::size_t k = factors.size();
    std::vector<std::vector<std::size_t>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t x : s.elements)
            if (parent.element_order(x) == factors[i]) candidates[i].push_back(x);

    std::vector<std::size_t> images(k);
    std::vector<std::size_t> element_map(m);
    auto try_images = [&]() -> bool {
        std::set<std::size_t> seen;
        for (std::size_t idx = 0; idx < m; ++idx) {
            GroupElement e = abstract.element_at(idx);
            std::size_t y = 0;
            for (std::size_t i = 0; i < k; ++i)
                y = parent.add(y, parent.scalar_mul(e.coords[i], images[i]));
            if (!seen.insert(y).second) return false;
            element_map[idx] = y;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == k) return try_images();
        for (std::size_t cand : candidates[pos]) {
            images[pos] = cand;
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0))
        throw InternalError("no generator system found for a subgroup");
    return SubgroupStructure{std::move(abstract), std::move(element_map)};
}

}  // namespace wtorsor
