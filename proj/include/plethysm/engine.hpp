#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "plethysm/border_matrix.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/strips.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

// Outcome of straightening a composition-indexed Schur symbol: either zero or
// a signed partition-indexed Schur function.
struct StraightenResult {
    int sign = 0;          // -1, 0 (zero outcome), +1
    Partition partition;   // meaningful when sign != 0

    bool is_zero() const { return sign == 0; }
    friend bool operator==(const StraightenResult&, const StraightenResult&) = default;
};

// Sort alpha + delta (delta = (l-1, ..., 1, 0)) into a strictly decreasing
// sequence. A repeat or a negative entry kills the term; otherwise the sign
// is the parity of the sorting permutation and the partition is the sorted
// sequence minus delta. Entries of alpha may be negative.
inline StraightenResult straighten(const std::vector<int>& alpha) {
    int l = static_cast<int>(alpha.size());
    std::vector<int> shifted(l);
    for (int i = 0; i < l; ++i) {
        shifted[i] = alpha[i] + (l - 1 - i);
        if (shifted[i] < 0) return {};
    }
    int inversions = 0;
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            if (shifted[i] == shifted[j]) return {};
            if (shifted[i] < shifted[j]) ++inversions;
        }
    }
    std::sort(shifted.rbegin(), shifted.rend());
    for (int i = 0; i < l; ++i) shifted[i] -= l - 1 - i;
    return {inversions % 2 == 0 ? 1 : -1, Partition{std::move(shifted)}};
}

// Coefficient of s_mu in V^{(n)*}_k s_lambda via the vertex-operator sum over
// compositions nu |= k of length l(lambda): straighten lambda - n*nu and
// collect the signed hits on mu.
inline BigInt mn_coefficient_straightening(const Partition& lam, const Partition& mu, int n,
                                           int k) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("mn_coefficient_straightening: need n >= 1, k >= 0");
    if (lam.weight() != mu.weight() + static_cast<long long>(n) * k)
        throw std::invalid_argument("WeightMismatch: |" + lam.to_string() + "| != |" +
                                    mu.to_string() + "| + n*k");
    int l = lam.length();
    BigInt total;
    for (const Composition& nu : compositions_of(k, l)) {
        std::vector<int> alpha(l);
        for (int i = 0; i < l; ++i) alpha[i] = lam.parts()[i] - n * nu.parts[i];
        StraightenResult r = straighten(alpha);
        if (!r.is_zero() && r.partition == mu) total += BigInt{r.sign};
    }
    return total;
}

// Determinant-type plethystic Murnaghan-Nakayama rule: the s_lambda
// coefficient of (p_n o h_k) s_mu is det M(lambda/mu), summed over the
// partitions lambda of |mu| + nk containing mu.
inline SchurExpansion pnhk_times_schur(int n, int k, const Partition& mu) {
    if (n < 1 || k < 0) throw std::invalid_argument("pnhk_times_schur: need n >= 1, k >= 0");
    SchurExpansion out;
    long long target = mu.weight() + static_cast<long long>(n) * k;
    int max_first = mu.part(1) + n * k;
    int max_len = mu.length() + n * k;
    for (const Partition& lam : partitions_containing(mu, target, max_first, max_len))
        out.add(lam, det(build_M(lam, mu, n)));
    return out;
}

// p_r s_mu, the k = 1 specialization.
inline SchurExpansion classical_mn(int r, const Partition& mu) {
    if (r < 1) throw std::invalid_argument("classical_mn: need r >= 1");
    return pnhk_times_schur(r, 1, mu);
}

// Schur expansion of p_mu o h_m, built one part at a time: multiply by
// p_{mu_i} o h_m for mu_1, mu_2, ... starting from 1. The parts commute;
// largest-first is fixed for traceability.
inline SchurExpansion b_coefficients(const Partition& mu, int m) {
    if (m < 1) throw std::invalid_argument("b_coefficients: need m >= 1");
    SchurExpansion cur;
    cur.add(Partition{}, BigInt{1});
    for (int part : mu.parts()) {
        SchurExpansion next;
        for (const auto& [nu, c] : cur.terms()) {
            SchurExpansion product = pnhk_times_schur(part, m, nu);
            for (const auto& [lam, d] : product.terms()) next.add(lam, c * d);
        }
        cur = std::move(next);
    }
    return cur;
}

// Schur expansion of h_n o h_m = sum_{mu |- n} (p_mu o h_m) / z_mu. The
// rational accumulation must collapse to non-negative integers; anything else
// signals a bug upstream and throws.
inline SchurExpansion a_coefficients(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("a_coefficients: need n, m >= 1");
    Expansion<Rational> acc;
    for (const Partition& mu : partitions_of(n)) {
        Rational inv_z{BigInt{1}, z_of(mu)};
        SchurExpansion b = b_coefficients(mu, m);
        for (const auto& [lam, c] : b.terms()) acc.add(lam, Rational{c} * inv_z);
    }
    SchurExpansion out;
    for (const auto& [lam, c] : acc.terms()) {
        if (!c.is_integer() || c.numerator().signum() < 0)
            throw std::logic_error("a_coefficients: coefficient of s" + lam.to_string() +
                                   " is " + c.to_string());
        out.add(lam, c.as_integer());
    }
    return out;
}

// Generalized Waring formula: p_n o e_k = (-1)^{k(n-1)} * sum over horizontal
// n-border strips lambda of weight k with l(lambda) <= n of
// det M(lambda) * det(e_{lambda_i + j - i}).
inline EExpansion waring(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("waring: need n, k >= 1");
    bool flip = (static_cast<long long>(k) * (n - 1)) % 2 != 0;
    EExpansion out;
    for (const Partition& lam : partitions_of(static_cast<long long>(n) * k, n)) {
        StripClassification cls = classify(SkewShape{lam, Partition{}}, n, k);
        if (cls.kind != StripKind::Horizontal) continue;
        Rational d{det(build_M(lam, Partition{}, n))};
        if (flip) d = -d;
        out = out + schur_to_e(lam).scaled(d);
    }
    return out;
}

}  // namespace plethysm
