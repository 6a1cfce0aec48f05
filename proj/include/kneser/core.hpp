// Core data model: ground sets with intersection multiplicities, subsets of
// [n] as bit masks, and canonically ordered set systems.
#ifndef KNESER_CORE_HPP
#define KNESER_CORE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kneser {

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subsets of [n] are bit masks: element e (1-based) is bit e-1.
using Mask = std::uint64_t;

inline constexpr int max_ground_size = 62;

inline Mask full_mask(int n) { return (n == 0) ? 0 : (~Mask{0} >> (64 - n)); }

inline bool mask_contains(Mask m, int element) {
    return (m >> (element - 1)) & 1u;
}

inline Mask mask_of(const std::vector<int>& elements, int n) {
    Mask m = 0;
    for (int e : elements) {
        if (e < 1 || e > n) {
            throw input_error("element " + std::to_string(e) +
                              " out of range [1," + std::to_string(n) + "]");
        }
        m |= Mask{1} << (e - 1);
    }
    return m;
}

inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    while (m != 0) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

inline int mask_size(Mask m) { return std::popcount(m); }

// Canonical subset order: lexicographic on the sorted element sequences,
// e.g. {1} < {1,2} < {1,3} < {2} < {2,3} < {3}.
inline bool subset_lex_less(Mask a, Mask b) {
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

inline std::string subset_to_string(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

// Binomial coefficient, saturating at cap+1 to stay overflow-safe.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                                     std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i; // prefix binomials divide exactly
        if (result > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(result);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t v = binomial_capped(n, k, std::uint64_t{1} << 62);
    return v;
}

// Ground set [n] together with the intersection multiplicities s_1..s_n.
class GroundContext {
public:
    GroundContext(int n, std::vector<int> s) : n_(n), s_(std::move(s)) {
        if (n_ < 1) throw input_error("ground set size must be >= 1");
        if (n_ > max_ground_size)
            throw capacity_error("ground set size exceeds bit-mask capacity");
        if (static_cast<int>(s_.size()) != n_)
            throw input_error("multiplicity vector length must equal n");
        for (int si : s_) {
            if (si < 1) throw input_error("multiplicities must be >= 1");
        }
    }

    static GroundContext uniform(int n, int s) {
        return GroundContext(n, std::vector<int>(static_cast<size_t>(std::max(n, 1)), s));
    }

    int n() const { return n_; }
    const std::vector<int>& s() const { return s_; }
    int s_at(int element) const { return s_[static_cast<size_t>(element - 1)]; }

    // |[n]^s| counting multiplicities
    long long n_bar() const {
        return std::accumulate(s_.begin(), s_.end(), 0LL);
    }

    bool operator==(const GroundContext&) const = default;

private:
    int n_;
    std::vector<int> s_;
};

// Ordered family of distinct non-empty subsets of [n]; members are kept in
// the canonical subset order so serialization is deterministic.
class SetSystem {
public:
    SetSystem(GroundContext ground, std::vector<Mask> members)
        : ground_(std::move(ground)), members_(std::move(members)) {
        Mask full = full_mask(ground_.n());
        for (Mask m : members_) {
            if (m == 0) throw input_error("set system members must be non-empty");
            if ((m & ~full) != 0)
                throw input_error("set system member has element outside [n]");
        }
        std::sort(members_.begin(), members_.end(), subset_lex_less);
        auto dup = std::adjacent_find(members_.begin(), members_.end());
        if (dup != members_.end())
            throw input_error("set system members must be pairwise distinct");
    }

    // All k-subsets of [n], the system binom([n], k).
    static SetSystem binomial(GroundContext ground, int k) {
        if (k < 1 || k > ground.n())
            throw input_error("binomial system needs 1 <= k <= n");
        std::vector<Mask> members;
        Mask full = full_mask(ground.n());
        for (Mask m = 0; m <= full; ++m) {
            if (std::popcount(m) == k) members.push_back(m);
        }
        return SetSystem(std::move(ground), std::move(members));
    }

    const GroundContext& ground() const { return ground_; }
    const std::vector<Mask>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    Mask member(int index) const { return members_[static_cast<size_t>(index)]; }

    bool operator==(const SetSystem&) const = default;

private:
    GroundContext ground_;
    std::vector<Mask> members_;
};

} // namespace kneser

#endif // KNESER_CORE_HPP
