// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Everything is exact arithmetic; there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <string>

#include "plethysm/plethysm.hpp"

using namespace plethysm;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, const CheckReport& r, double seconds) {
    if (r.ok) {
        std::printf("PASS criterion %d: %s (%lld cases, %.1fs)\n", criterion, name.c_str(),
                    r.cases, seconds);
    } else {
        ++failures;
        std::printf("FAIL criterion %d: %s -- %s\n", criterion, name.c_str(),
                    r.failure.c_str());
    }
    std::fflush(stdout);
}

template <typename Fn>
void run(int criterion, const std::string& name, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    CheckReport r;
    try {
        r = fn();
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(criterion, name, r, seconds);
}

}  // namespace

int main() {
    run(1, "three-way agreement (determinant / straightening / oracle, n<=4 k<=3 |mu|<=6 deg<=12)",
        [] { return check_three_way(4, 3, 6, 12); });

    run(2, "det M matches classification sign and vanishing (|lambda|<=12, n<=3)",
        [] { return check_det_classification(12, 3); });

    run(3, "every chain-admitting shape has a horizontal chain (|lambda|<=12, n<=3)",
        [] { return check_horizontal_existence(12, 3); });

    run(4, "A equals the row/column transform composite over every chain (|lambda|<=10, n<=3)",
        [] { return check_transforms(10, 3); });

    run(5, "h_n o h_m structure: single-row coefficient 1, no rows beyond n (n,m<=4)",
        [] { return check_hh_structure(4, 4, 16); });

    run(6, "generalized Waring agrees with the omega path and Merca assembly (n,k<=4)", [] {
        CheckReport r = check_waring(4, 4, 16);
        if (r.ok) {
            ++r.cases;
            EExpansion classical{{Partition{{1, 1}}, Rational{1}}, {Partition{{2}}, Rational{-2}}};
            if (waring(2, 1) != classical)
                r.fail("waring(2,1) does not reproduce e_1^2 - 2 e_2");
        }
        return r;
    });

    run(7, "k=1 reproduces classical Murnaghan-Nakayama, n=1 the Pieri rule (r<=5, |mu|<=6)",
        [] { return check_specializations(5, 6); });

    run(8, "Foulkes spot check a_{n,m} <= a_{m,n} for (2,3), (2,4), (3,4)",
        [] { return check_foulkes({{2, 3}, {2, 4}, {3, 4}}, 12); });

    if (failures == 0)
        std::printf("acceptance: all 8 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
