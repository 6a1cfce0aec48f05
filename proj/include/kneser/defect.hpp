// Exact s-disjoint r-colorability defect: branch-and-bound maximization of
// the coverage sum over r-tuples of system-free subsets, with a verifiable
// certificate of the optimum.
#ifndef KNESER_DEFECT_HPP
#define KNESER_DEFECT_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/instance.hpp"

namespace kneser {

// r witness subsets R_1..R_r realizing the defect maximum. Repetitions and
// empty covers are allowed; no cover may contain a system member.
struct DefectCertificate {
    std::vector<Mask> covers;
    long long value = 0;
};

struct DefectResult {
    long long value = 0;
    DefectCertificate certificate;
};

namespace detail {

inline void check_same_ground(const GroundContext& ground,
                              const SetSystem& system) {
    if (system.ground().n() != ground.n())
        throw input_error("system and ground context sizes disagree");
}

inline std::vector<bool> free_set_table(const GroundContext& ground,
                                        const SetSystem& system) {
    if (ground.n() > 24)
        throw capacity_error("free-set enumeration limited to n <= 24");
    const Mask full = full_mask(ground.n());
    std::vector<bool> free_set(static_cast<size_t>(full) + 1, true);
    for (Mask f = 0; f <= full; ++f) {
        for (Mask s : system.members()) {
            if ((f & s) == s) {
                free_set[static_cast<size_t>(f)] = false;
                break;
            }
        }
    }
    return free_set;
}

} // namespace detail

// Every subset of [n] containing no system member, in canonical order
// (includes the empty set).
inline std::vector<Mask> all_free_sets(const GroundContext& ground,
                                       const SetSystem& system) {
    detail::check_same_ground(ground, system);
    std::vector<bool> table = detail::free_set_table(ground, system);
    std::vector<Mask> out;
    for (Mask f = 0; f < table.size(); ++f) {
        if (table[static_cast<size_t>(f)]) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), subset_lex_less);
    return out;
}

// Inclusion-maximal subsets of [n] containing no system member; every free
// subset lies inside one of these.
inline std::vector<Mask> s_free_sets(const GroundContext& ground,
                                     const SetSystem& system) {
    detail::check_same_ground(ground, system);
    std::vector<bool> table = detail::free_set_table(ground, system);
    std::vector<Mask> out;
    const Mask full = full_mask(ground.n());
    for (Mask f = 0; f <= full; ++f) {
        if (!table[static_cast<size_t>(f)]) continue;
        bool maximal = true;
        for (int e = 1; e <= ground.n(); ++e) {
            if (mask_contains(f, e)) continue;
            if (table[static_cast<size_t>(f | (Mask{1} << (e - 1)))]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), subset_lex_less);
    return out;
}

inline bool defect_certificate_valid(const DefectCertificate& cert,
                                     const GroundContext& ground, int r,
                                     const SetSystem& system) {
    if (static_cast<int>(cert.covers.size()) != r) return false;
    if (cert.value < 0) return false;
    const Mask full = full_mask(ground.n());
    long long covered = 0;
    for (Mask cover : cert.covers) {
        if ((cover & ~full) != 0) return false;
        for (Mask s : system.members()) {
            if ((cover & s) == s) return false; // cover contains a member
        }
        covered += mask_size(cover);
    }
    if (!is_s_disjoint(cert.covers, ground)) return false;
    return cert.value == ground.n_bar() - covered;
}

// cd^r_s(S): n_bar minus the maximum total size of r s-disjoint covers, each
// free of system members. Exact branch and bound; covers are drawn from all
// free sets (capacities can make a non-maximal choice optimal) and permuted
// tuples collapse through memoization on (remaining capacities, covers left).
inline DefectResult colorability_defect(const GroundContext& ground, int r,
                                        const SetSystem& system) {
    detail::check_same_ground(ground, system);
    if (r < 1) throw input_error("defect needs r >= 1");
    const int n = ground.n();

    // per-element capacities; an element is never used more than once per cover
    std::vector<int> cap(static_cast<size_t>(n));
    long long cap_total = 0;
    for (int i = 0; i < n; ++i) {
        long long c = std::min<long long>(ground.s()[static_cast<size_t>(i)], r);
        if (c > 255) throw capacity_error("effective capacity exceeds 255");
        cap[static_cast<size_t>(i)] = static_cast<int>(c);
        cap_total += c;
    }

    // candidate covers: non-empty free sets, largest first
    std::vector<Mask> candidates;
    for (Mask f : all_free_sets(ground, system)) {
        if (f != 0) candidates.push_back(f);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](Mask a, Mask b) { return mask_size(a) > mask_size(b); });

    Mask coverable = 0;
    for (Mask f : candidates) coverable |= f;

    const int depth = static_cast<int>(
        std::min<long long>(r, cap_total)); // extra covers can only be empty

    struct Entry {
        long long value;
        int choice; // candidate index, -1 = all remaining covers empty
    };
    std::unordered_map<std::string, Entry> memo;

    auto key_of = [&](const std::vector<int>& caps, int left) {
        std::string key(static_cast<size_t>(n) + 2, '\0');
        for (int i = 0; i < n; ++i)
            key[static_cast<size_t>(i)] =
                static_cast<char>(caps[static_cast<size_t>(i)]);
        key[static_cast<size_t>(n)] = static_cast<char>(left & 0xff);
        key[static_cast<size_t>(n) + 1] = static_cast<char>((left >> 8) & 0xff);
        return key;
    };

    std::vector<int> caps = cap;
    std::function<long long(int)> solve = [&](int left) -> long long {
        if (left == 0) return 0;
        const std::string key = key_of(caps, left);
        if (auto it = memo.find(key); it != memo.end()) return it->second.value;

        Mask avail = 0;
        long long bound = 0;
        for (int i = 0; i < n; ++i) {
            if (caps[static_cast<size_t>(i)] > 0) avail |= Mask{1} << i;
            if (mask_contains(coverable, i + 1))
                bound += std::min<long long>(caps[static_cast<size_t>(i)], left);
        }

        long long best = 0;
        int choice = -1;
        for (size_t idx = 0; idx < candidates.size(); ++idx) {
            const Mask f = candidates[idx];
            const int fsize = mask_size(f);
            if (best >= static_cast<long long>(left) * fsize) break;
            if (best >= bound) break;
            if ((f & avail) != f) continue;
            for (int e : elements_of(f)) --caps[static_cast<size_t>(e - 1)];
            const long long v = fsize + solve(left - 1);
            for (int e : elements_of(f)) ++caps[static_cast<size_t>(e - 1)];
            if (v > best) {
                best = v;
                choice = static_cast<int>(idx);
            }
        }
        memo.emplace(key, Entry{best, choice});
        return best;
    };

    const long long coverage = solve(depth);

    // reconstruct one optimal tuple from the memo choices
    std::vector<Mask> covers;
    {
        std::vector<int> rcaps = cap;
        int left = depth;
        while (left > 0) {
            const std::string key = key_of(rcaps, left);
            auto it = memo.find(key);
            if (it == memo.end() || it->second.choice < 0) break;
            const Mask f = candidates[static_cast<size_t>(it->second.choice)];
            covers.push_back(f);
            for (int e : elements_of(f)) --rcaps[static_cast<size_t>(e - 1)];
            --left;
        }
        while (static_cast<int>(covers.size()) < r) covers.push_back(0);
    }

    DefectResult result;
    result.value = ground.n_bar() - coverage;
    result.certificate = DefectCertificate{std::move(covers), result.value};
    return result;
}

// Closed form for cd^r_{r-1}(binom([n],2)).
inline long long defect_pairs_formula(int n, int r) {
    if (n < 2 || r < 2) throw input_error("defect pair formula needs n,r >= 2");
    return std::max<long long>(static_cast<long long>(n) * (r - 1) - r, 0);
}

} // namespace kneser

#endif // KNESER_DEFECT_HPP
