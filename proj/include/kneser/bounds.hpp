// Closed-form chromatic values and bounds for the pair systems binom([n],k),
// the defect lower bound with its largest-prime-factor precondition, and an
// instance-level comparison report. Everything is exact integer arithmetic.
#ifndef KNESER_BOUNDS_HPP
#define KNESER_BOUNDS_HPP

#include <cmath>
#include <optional>
#include <string>

#include "kneser/coloring.hpp"
#include "kneser/core.hpp"
#include "kneser/defect.hpp"
#include "kneser/instance.hpp"

namespace kneser {

inline long long ceil_div(long long a, long long b) {
    return (a + b - 1) / b; // a >= 0, b > 0
}

inline int largest_prime_factor(int r) {
    if (r < 2) throw input_error("largest prime factor needs r >= 2");
    int largest = 1;
    for (int p = 2; static_cast<long long>(p) * p <= r; ++p) {
        while (r % p == 0) {
            largest = p;
            r /= p;
        }
    }
    if (r > 1) largest = r;
    return largest;
}

// ceil(cd^r_s(S) / (r-1)), valid as a chromatic lower bound for the
// with-multiplicities hypergraph only when every s_i is smaller than the
// largest prime factor of r; otherwise no value is returned.
inline std::optional<long long> lower_bound_theorem(const GroundContext& ground,
                                                    int r,
                                                    const SetSystem& system) {
    if (r < 2) throw input_error("lower bound needs r >= 2");
    const int lpf = largest_prime_factor(r);
    for (int si : ground.s()) {
        if (si >= lpf) return std::nullopt;
    }
    const long long cd = colorability_defect(ground, r, system).value;
    return ceil_div(cd, r - 1);
}

// 1 + ceil((ns - rk + 1) / (s * floor((r-1)/s))), the chromatic upper bound
// for KG^r_s(binom([n],k)) in the range n >= k >= 2, r > s >= 2, rk <= sn.
inline long long upper_bound_star(int n, int k, int r, int s) {
    if (!(n >= k && k >= 2)) throw input_error("star bound needs n >= k >= 2");
    if (!(r > s && s >= 2)) throw input_error("star bound needs r > s >= 2");
    if (static_cast<long long>(r) * k > static_cast<long long>(s) * n)
        throw input_error("star bound needs rk <= sn");
    const long long q = (r - 1) / s;
    const long long numerator =
        static_cast<long long>(n) * s - static_cast<long long>(r) * k + 1;
    return 1 + ceil_div(numerator, q * s);
}

// chi(KG^r_s(binom([n],2))) = 1 + n - floor((2r-1)/s) in the regime where
// floor((r-1)/s) = 1. The two stated range forms r/2 <= s < r-1 and
// floor((r-1)/s) = 1 disagree at boundary values; only their conjunction is
// accepted.
inline long long formula_chi_KG_pairs(int n, int r, int s) {
    if (n < 2) throw input_error("KG pair formula needs n >= 2");
    if (!(r > s && s >= 2)) throw input_error("KG pair formula needs r > s >= 2");
    if (static_cast<long long>(r) * 2 > static_cast<long long>(s) * n)
        throw input_error("KG pair formula needs 2r <= sn");
    if (!(2 * s >= r && s < r - 1))
        throw input_error("KG pair formula needs r/2 <= s < r-1");
    return 1 + n - (2LL * r - 1) / s;
}

// chi(kg^r_{r-1}(binom([n],2))), piecewise in n versus r.
inline long long formula_chi_kg_pairs(int n, int r) {
    if (n < 2 || r < 2) throw input_error("kg pair formula needs n,r >= 2");
    if (n < r) {
        const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
        return ceil_div(pairs, r - 1);
    }
    return n - r / 2;
}

// chi(kg^4_2(binom([n],2))) = n - t where t is the largest integer with
// t(t+1)/2 <= n (the exact-integer form of floor(sqrt(2n+1/4) - 1/2)).
inline long long formula_chi_kg42(long long n) {
    if (n < 4) throw input_error("kg42 formula needs n >= 4");
    long long t = static_cast<long long>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
    while ((t + 1) * (t + 2) / 2 <= n) ++t;
    while (t * (t + 1) / 2 > n) --t;
    return n - t;
}

// Side-by-side bounds for one instance. Solver-backed fields stay absent
// when the budget runs out; nothing is guessed.
struct BoundReport {
    std::string instance;
    int n = 0;
    int r = 0;
    std::vector<int> s;
    long long defect = 0;
    bool condition_met = false; // all s_i below the largest prime factor of r
    std::optional<long long> defect_lower_bound;
    std::optional<int> chi_KG;
    std::optional<int> chi_kg;
    std::optional<long long> upper_star;
};

inline BoundReport bound_report(const GroundContext& ground, int r,
                                const SetSystem& system,
                                ChiBudget per_solve = {}) {
    if (r < 2) throw input_error("bound report needs r >= 2");
    BoundReport report;
    report.n = ground.n();
    report.r = r;
    report.s = ground.s();
    report.instance = "|S|=" + std::to_string(system.size()) +
                      ", n=" + std::to_string(ground.n()) +
                      ", r=" + std::to_string(r);

    report.defect = colorability_defect(ground, r, system).value;
    const int lpf = largest_prime_factor(r);
    report.condition_met = true;
    for (int si : ground.s()) {
        if (si >= lpf) report.condition_met = false;
    }
    if (report.condition_met)
        report.defect_lower_bound = ceil_div(report.defect, r - 1);

    SetSystem local(ground, system.members()); // instance uses this ground's s

    KneserInstance kg(local, r, Variant::without_multiplicities);
    ChiResult chi_kg = chromatic_number(kg, per_solve);
    if (chi_kg.exact) report.chi_kg = chi_kg.chi;

    bool kg_with_valid = true;
    for (int si : ground.s()) {
        if (si >= r) kg_with_valid = false;
    }
    if (kg_with_valid) {
        KneserInstance KG(local, r, Variant::with_multiplicities);
        ChiResult chi_KG = chromatic_number(KG, per_solve);
        if (chi_KG.exact) report.chi_KG = chi_KG.chi;
    }

    // the star upper bound applies when the system is a full binom([n],k)
    // with constant s and the (*) preconditions hold
    bool constant_s = true;
    for (int si : ground.s()) {
        if (si != ground.s()[0]) constant_s = false;
    }
    if (constant_s && system.size() > 0) {
        const int k = mask_size(system.member(0));
        bool uniform_k = true;
        for (Mask m : system.members()) {
            if (mask_size(m) != k) uniform_k = false;
        }
        const std::uint64_t expected = binomial_capped(
            static_cast<std::uint64_t>(ground.n()),
            static_cast<std::uint64_t>(k), std::uint64_t{1} << 40);
        if (uniform_k && expected == static_cast<std::uint64_t>(system.size())) {
            try {
                report.upper_star =
                    upper_bound_star(ground.n(), k, r, ground.s()[0]);
            } catch (const input_error&) {
                // outside the (*) precondition range
            }
        }
    }
    return report;
}

} // namespace kneser

#endif // KNESER_BOUNDS_HPP
