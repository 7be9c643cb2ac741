#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "plethysm/engine.hpp"

namespace plethysm {

// One cross-validation sweep: case count plus the first counterexample.
struct CheckReport {
    bool ok = true;
    long long cases = 0;
    std::string failure;

    void fail(const std::string& msg) {
        if (ok) {
            ok = false;
            failure = msg;
        }
    }
};

namespace verify_detail {

inline std::string case_tag(int n, int k, const Partition& mu) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " mu=" + mu.to_string();
}

inline std::string skew_tag(const Partition& lam, const Partition& mu, int n) {
    return lam.to_string() + "/" + mu.to_string() + " n=" + std::to_string(n);
}

// All (lambda, mu, n) with 1 <= |lambda| <= max_outer, mu inside lambda,
// |lambda/mu| > 0 divisible by n.
inline void for_each_skew(int max_outer, int max_n,
                          const std::function<void(const Partition&, const Partition&, int)>& fn) {
    for (int w = 1; w <= max_outer; ++w) {
        for (const Partition& lam : partitions_of(w)) {
            for (long long wi = 0; wi < w; ++wi) {
                for (const Partition& mu : partitions_of(wi, lam.length())) {
                    if (!lam.contains(mu)) continue;
                    for (int n = 1; n <= max_n; ++n)
                        if ((w - wi) % n == 0) fn(lam, mu, n);
                }
            }
        }
    }
}

// Direct border-strip enumeration of p_r s_mu; oracle for the k = 1 case.
inline SchurExpansion classical_mn_by_strips(int r, const Partition& mu) {
    SchurExpansion out;
    for (const Partition& lam :
         partitions_containing(mu, mu.weight() + r, mu.part(1) + r, mu.length() + r)) {
        SkewShape skew{lam, mu};
        if (!is_border_strip(skew)) continue;
        out.add(lam, spin(skew) % 2 == 0 ? BigInt{1} : BigInt{-1});
    }
    return out;
}

// Direct horizontal-strip enumeration of h_k s_mu; oracle for the n = 1 case.
inline SchurExpansion pieri_multiply(int k, const Partition& mu) {
    SchurExpansion out;
    for (const Partition& lam :
         partitions_containing(mu, mu.weight() + k, mu.part(1) + k, mu.length() + 1)) {
        bool horizontal = true;
        for (int i = 1; horizontal && i <= lam.length(); ++i)
            if (lam.part(i + 1) > mu.part(i)) horizontal = false;
        if (horizontal) out.add(lam, BigInt{1});
    }
    return out;
}

// Power-sum oracle for (p_n o h_k) s_mu.
inline SchurExpansion oracle_pnhk_times_schur(int n, int k, const Partition& mu) {
    return p_to_schur(p_multiply(plethysm_pn_hk(n, k), schur_to_p(mu)));
}

// Power-sum oracle for p_mu o h_m.
inline PExpansion oracle_p_mu_h_m(const Partition& mu, int m) {
    PExpansion acc;
    acc.add(Partition{}, Rational{1});
    for (int part : mu.parts()) acc = p_multiply(acc, plethysm_pn_hk(part, m));
    return acc;
}

}  // namespace verify_detail

// Determinant rule vs straightening sum vs power-sum oracle, coefficientwise.
// The straightening side is also checked to vanish on every lambda that does
// not contain mu.
inline CheckReport check_three_way(int max_n, int max_k, int max_mu, int max_total) {
    CheckReport report;
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 0; k <= max_k; ++k) {
            for (long long wmu = 0; wmu <= max_mu; ++wmu) {
                if (static_cast<long long>(n) * k + wmu > max_total) continue;
                for (const Partition& mu : partitions_of(wmu)) {
                    ++report.cases;
                    SchurExpansion det_path = pnhk_times_schur(n, k, mu);
                    SchurExpansion oracle = verify_detail::oracle_pnhk_times_schur(n, k, mu);
                    if (det_path != oracle) {
                        report.fail("three-way: determinant path differs from oracle at " +
                                    verify_detail::case_tag(n, k, mu));
                        return report;
                    }
                    for (const Partition& lam :
                         partitions_of(wmu + static_cast<long long>(n) * k)) {
                        BigInt s = mn_coefficient_straightening(lam, mu, n, k);
                        if (s != det_path.coeff(lam)) {
                            report.fail("three-way: straightening differs at " +
                                        verify_detail::case_tag(n, k, mu) + " lambda=" +
                                        lam.to_string());
                            return report;
                        }
                    }
                }
            }
        }
    }
    return report;
}

// det M(lambda/mu) against the classification: sgn when horizontal, 0 when
// non-horizontal, and 0 when no chain exists at all.
inline CheckReport check_det_classification(int max_outer, int max_n) {
    CheckReport report;
    verify_detail::for_each_skew(max_outer, max_n, [&](const Partition& lam, const Partition& mu,
                                                       int n) {
        if (!report.ok) return;
        ++report.cases;
        int k = static_cast<int>((lam.weight() - mu.weight()) / n);
        StripClassification cls = classify(SkewShape{lam, mu}, n, k);
        BigInt d = det(build_M(lam, mu, n));
        BigInt expected = cls.kind == StripKind::Horizontal ? BigInt{cls.sign} : BigInt{0};
        if (d != expected)
            report.fail("det classification: det=" + d.to_string() + " classification sign=" +
                        expected.to_string() + " at " + verify_detail::skew_tag(lam, mu, n));
    });
    return report;
}

// Whenever any chain exists, the enumeration must contain a horizontal one.
inline CheckReport check_horizontal_existence(int max_outer, int max_n) {
    CheckReport report;
    verify_detail::for_each_skew(max_outer, max_n, [&](const Partition& lam, const Partition& mu,
                                                       int n) {
        if (!report.ok) return;
        SkewShape skew{lam, mu};
        bool any_chain = !walk_chains(skew, n, false, [](const StripChain&) { return false; });
        if (!any_chain) return;
        ++report.cases;
        bool found_horizontal =
            !walk_chains(skew, n, false,
                         [&](const StripChain& c) { return !is_horizontal_chain(c, n); });
        if (!found_horizontal)
            report.fail("horizontal existence: no horizontal chain among enumerated chains at " +
                        verify_detail::skew_tag(lam, mu, n));
    });
    return report;
}

// A(lambda/mu) must equal the transform composite seeded from any stage of
// any chain: row transforms for the strips above the seed, column transforms
// for the strips below.
inline CheckReport check_transforms(int max_outer, int max_n) {
    CheckReport report;
    verify_detail::for_each_skew(max_outer, max_n, [&](const Partition& lam, const Partition& mu,
                                                       int n) {
        if (!report.ok) return;
        int dim = lam.length();
        IntMatrix expected = build_A(lam, mu, dim);
        walk_chains(SkewShape{lam, mu}, n, false, [&](const StripChain& chain) {
            int len = chain.length();
            std::vector<int> first(len), last(len);
            for (int j = 1; j <= len; ++j) {
                const Partition& lo = chain.stages[j - 1];
                const Partition& hi = chain.stages[j];
                first[j - 1] = 0;
                for (int i = 1; i <= hi.length(); ++i) {
                    if (hi.part(i) > lo.part(i)) {
                        if (first[j - 1] == 0) first[j - 1] = i;
                        last[j - 1] = i;
                    }
                }
            }
            for (int pivot = 1; pivot <= len; ++pivot) {
                ++report.cases;
                IntMatrix m = build_A(chain.stages[pivot], chain.stages[pivot - 1], dim);
                for (int a = pivot + 1; a <= len; ++a)
                    m = row_transform(m, last[a - 1], first[a - 1], chain.weights[a - 1], n);
                for (int b = pivot - 1; b >= 1; --b)
                    m = col_transform(m, first[b - 1], last[b - 1], chain.weights[b - 1], n);
                if (!(m == expected)) {
                    report.fail("transforms: composite mismatch at " +
                                verify_detail::skew_tag(lam, mu, n) + " chain length " +
                                std::to_string(len) + " pivot " + std::to_string(pivot));
                    return false;
                }
            }
            return true;
        });
    });
    return report;
}

// k = 1 against direct border-strip enumeration; n = 1 against the Pieri rule.
inline CheckReport check_specializations(int max_r, int max_mu) {
    CheckReport report;
    for (int r = 1; r <= max_r; ++r) {
        for (long long wmu = 0; wmu <= max_mu; ++wmu) {
            for (const Partition& mu : partitions_of(wmu)) {
                ++report.cases;
                if (pnhk_times_schur(r, 1, mu) != verify_detail::classical_mn_by_strips(r, mu)) {
                    report.fail("specialization: k=1 differs from strip enumeration at r=" +
                                std::to_string(r) + " mu=" + mu.to_string());
                    return report;
                }
                if (pnhk_times_schur(1, r, mu) != verify_detail::pieri_multiply(r, mu)) {
                    report.fail("specialization: n=1 differs from Pieri rule at k=" +
                                std::to_string(r) + " mu=" + mu.to_string());
                    return report;
                }
            }
        }
    }
    return report;
}

// waring(n,k) against the omega-involution path and the Merca assembly.
inline CheckReport check_waring(int max_n, int max_k, int degree_cap) {
    CheckReport report;
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= max_k; ++k) {
            if (static_cast<long long>(n) * k > degree_cap) continue;
            ++report.cases;
            EExpansion w = waring(n, k);
            PExpansion via_e = e_terms_to_p(w);
            PExpansion direct = substitute_power(e_to_p(k), n);  // p_n o e_k
            // omega(p_n o h_k) = (-1)^{k(n-1)} p_n o e_k
            PExpansion via_omega = omega(plethysm_pn_hk(n, k));
            if ((static_cast<long long>(k) * (n - 1)) % 2 != 0)
                via_omega = via_omega.scaled(Rational{-1});
            if (via_e != direct) {
                report.fail("waring: e-expansion disagrees with p_n o e_k at n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
                return report;
            }
            if (via_e != via_omega) {
                report.fail("waring: disagrees with omega path at n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
                return report;
            }
            if (w != merca_waring(k, n)) {
                report.fail("waring: disagrees with Merca assembly at n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
                return report;
            }
        }
    }
    return report;
}

// Structure of h_n o h_m: the single-row coefficient is 1 and every stored
// key has at most n rows.
inline CheckReport check_hh_structure(int max_n, int max_m, int degree_cap) {
    CheckReport report;
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m <= max_m; ++m) {
            if (static_cast<long long>(n) * m > degree_cap) continue;
            ++report.cases;
            SchurExpansion a = a_coefficients(n, m);
            if (a.coeff(Partition{{n * m}}) != BigInt{1}) {
                report.fail("h o h: single-row coefficient != 1 at n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
                return report;
            }
            for (const auto& [lam, c] : a.terms()) {
                if (lam.length() > n) {
                    report.fail("h o h: nonzero coefficient with l(lambda) > n at n=" +
                                std::to_string(n) + " m=" + std::to_string(m) + " lambda=" +
                                lam.to_string());
                    return report;
                }
            }
        }
    }
    return report;
}

// Coefficientwise a^lambda_{n,m} <= a^lambda_{m,n} for n <= m.
inline CheckReport check_foulkes(const std::vector<std::pair<int, int>>& pairs, int degree_cap) {
    CheckReport report;
    for (auto [n, m] : pairs) {
        if (static_cast<long long>(n) * m > degree_cap) continue;
        ++report.cases;
        SchurExpansion small = a_coefficients(n, m);
        SchurExpansion large = a_coefficients(m, n);
        for (const auto& [lam, c] : small.terms()) {
            if (c > large.coeff(lam)) {
                report.fail("foulkes: a^" + lam.to_string() + "_{" + std::to_string(n) + "," +
                            std::to_string(m) + "} exceeds the swapped coefficient");
                return report;
            }
        }
    }
    return report;
}

// b_coefficients against the product-of-plethysms oracle.
inline CheckReport check_b_consistency(int degree_cap) {
    CheckReport report;
    for (int m = 1; m <= degree_cap; ++m) {
        for (long long wmu = 1; wmu * m <= degree_cap; ++wmu) {
            for (const Partition& mu : partitions_of(wmu)) {
                ++report.cases;
                if (b_coefficients(mu, m) !=
                    p_to_schur(verify_detail::oracle_p_mu_h_m(mu, m))) {
                    report.fail("b-coefficients: oracle mismatch at mu=" + mu.to_string() +
                                " m=" + std::to_string(m));
                    return report;
                }
            }
        }
    }
    return report;
}

// a_coefficients against the z-weighted oracle sum.
inline CheckReport check_a_consistency(int degree_cap) {
    CheckReport report;
    for (int n = 1; n <= degree_cap; ++n) {
        for (int m = 1; static_cast<long long>(n) * m <= degree_cap; ++m) {
            ++report.cases;
            PExpansion acc;
            for (const Partition& mu : partitions_of(n)) {
                Rational inv_z{BigInt{1}, z_of(mu)};
                acc = acc + verify_detail::oracle_p_mu_h_m(mu, m).scaled(inv_z);
            }
            if (a_coefficients(n, m) != p_to_schur(acc)) {
                report.fail("a-coefficients: oracle mismatch at n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
                return report;
            }
        }
    }
    return report;
}

struct VerifySummary {
    bool ok = true;
    long long cases = 0;
    std::string failure;
};

// Full cross-validation sweep scaled to a degree budget; max_degree 12 covers
// the whole desk-scale battery. Structural bounds (n <= 4, k <= 3, ...) stay
// fixed, only the degree-bearing limits scale.
inline VerifySummary run_all_checks(int max_degree) {
    VerifySummary summary;
    auto merge = [&](const CheckReport& r) {
        summary.cases += r.cases;
        if (summary.ok && !r.ok) {
            summary.ok = false;
            summary.failure = r.failure;
        }
    };
    int cap = std::max(0, max_degree);
    merge(check_three_way(std::min(4, std::max(1, cap)), 3, std::min<int>(6, cap), cap));
    merge(check_det_classification(std::min(12, cap), 3));
    merge(check_horizontal_existence(std::min(12, cap), 3));
    merge(check_transforms(std::min(10, cap), 3));
    merge(check_specializations(std::min(5, cap), std::min(6, cap)));
    merge(check_waring(4, 4, cap));
    merge(check_hh_structure(4, 4, cap));
    merge(check_foulkes({{2, 3}, {2, 4}, {3, 4}}, cap));
    merge(check_b_consistency(std::min(12, cap)));
    merge(check_a_consistency(std::min(12, cap)));
    return summary;
}

}  // namespace plethysm
