#include <doctest.h>

#include <vector>

#include "plethysm/partition.hpp"

using namespace plethysm;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

BigInt factorial(int n) {
    BigInt f{1};
    for (int i = 2; i <= n; ++i) f *= BigInt{i};
    return f;
}

}  // namespace

TEST_CASE("Partition construction and accessors") {
    CHECK(Partition{}.empty());
    CHECK(Partition{}.weight() == 0);
    CHECK(P({3, 1, 1}).weight() == 5);
    CHECK(P({3, 1, 1}).length() == 3);
    CHECK(P({3, 1, 1}).part(1) == 3);
    CHECK(P({3, 1, 1}).part(4) == 0);  // zero-padded beyond length
    CHECK(P({3, 1, 0, 0}) == P({3, 1}));
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    CHECK(P({4}).conjugate() == P({1, 1, 1, 1}));
}

TEST_CASE("conjugate is an involution with transposed weight and length") {
    for (int n = 0; n <= 12; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            Partition c = lam.conjugate();
            CHECK(c.conjugate() == lam);
            CHECK(c.weight() == lam.weight());
            CHECK(c.length() == lam.part(1));
        }
    }
}

TEST_CASE("contains") {
    CHECK(P({2, 2}).contains(P({2, 1})));
    CHECK_FALSE(P({2, 2}).contains(P({3})));
    CHECK(P({2, 1, 1}).contains(P({2, 1})));
    CHECK(P({2, 1}).contains(Partition{}));
}

TEST_CASE("z_of") {
    CHECK(z_of(Partition{}) == BigInt{1});
    CHECK(z_of(P({2, 1})) == BigInt{2});
    CHECK(z_of(P({1, 1, 1})) == BigInt{6});
    CHECK(z_of(P({3, 3, 2})) == BigInt{3 * 3 * 2 * 2});
}

TEST_CASE("sum over cycle types of n!/z counts all permutations") {
    for (int n = 0; n <= 8; ++n) {
        BigInt total;
        for (const Partition& lam : partitions_of(n)) {
            auto [q, r] = BigInt::divmod(factorial(n), z_of(lam));
            CHECK(r == BigInt{0});  // n!/z is a class size, always integral
            total += q;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("partitions_of enumerates in reverse-lexicographic order") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(3) == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
    CHECK(partitions_of(4, 2) == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
}

TEST_CASE("partitions_of counts match the partition numbers") {
    const size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n <= 9; ++n) CHECK(partitions_of(n).size() == expected[n]);
}

TEST_CASE("partitions_containing") {
    CHECK(partitions_containing(Partition{}, 2, 100, 100) ==
          std::vector<Partition>{P({2}), P({1, 1})});
    CHECK(partitions_containing(P({2}), 4, 100, 100) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1})});
    CHECK(partitions_containing(P({1, 1}), 2, 100, 100) == std::vector<Partition>{P({1, 1})});
    CHECK(partitions_containing(P({3, 1}), 2, 100, 100).empty());  // weight below |inner|
    CHECK(partitions_containing(P({2}), 4, 2, 100) ==
          std::vector<Partition>{P({2, 2}), P({2, 1, 1})});
    CHECK(partitions_containing(P({2}), 4, 100, 2) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
}

TEST_CASE("partitions_containing agrees with filtering") {
    for (int wi = 0; wi <= 4; ++wi) {
        for (const Partition& inner : partitions_of(wi)) {
            for (int w = wi; w <= 8; ++w) {
                std::vector<Partition> expected;
                for (const Partition& lam : partitions_of(w))
                    if (lam.contains(inner)) expected.push_back(lam);
                CHECK(partitions_containing(inner, w, 100, 100) == expected);
            }
        }
    }
}

TEST_CASE("compositions_of") {
    CHECK(compositions_of(0, 2) == std::vector<Composition>{Composition{{0, 0}}});
    CHECK(compositions_of(2, 2) ==
          std::vector<Composition>{Composition{{2, 0}}, Composition{{1, 1}},
                                   Composition{{0, 2}}});
    CHECK(compositions_of(3, 3).size() == 10);  // C(5,2)
    CHECK(compositions_of(0, 0).size() == 1);
    CHECK(compositions_of(2, 0).empty());
}

TEST_CASE("compositions_of cardinality is binomial(k+l-1, l-1)") {
    auto binomial = [](int n, int k) {
        long long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (int k = 0; k <= 5; ++k)
        for (int l = 1; l <= 4; ++l)
            CHECK(compositions_of(k, l).size() == static_cast<size_t>(binomial(k + l - 1, l - 1)));
}

TEST_CASE("Partition text round trip") {
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("3,1,1") == P({3, 1, 1}));
    CHECK(Partition::parse(" 3 , 1 ") == P({3, 1}));
    CHECK(Partition{}.to_string() == "[]");
    CHECK(P({3, 1, 1}).to_string() == "[3,1,1]");
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,0,1"), std::invalid_argument);
}

TEST_CASE("SkewShape validates containment") {
    SkewShape s{P({3, 1}), P({1})};
    CHECK(s.size() == 3);
    CHECK_THROWS_WITH_AS(SkewShape(P({2}), P({3})), doctest::Contains("NotContained"),
                         std::invalid_argument);
}
