#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pspos/seifert.hpp"

#include <random>

using namespace pspos;

namespace {

ExtRational rat(long long p, long long q) { return ExtRational(Int(p), Int(q)); }

SfsDescriptor disk(std::vector<ExtRational> invariants) {
    return SfsDescriptor(SfsBase::DiskD2, std::move(invariants));
}

SfsDescriptor sphere(std::vector<ExtRational> invariants) {
    return SfsDescriptor(SfsBase::SphereS2, std::move(invariants));
}

}  // namespace

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(disk({rat(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(disk({rat(1, 2), rat(1, 3), rat(1, 5)}), std::invalid_argument);
    CHECK_THROWS_AS(disk({ExtRational::infinity(), rat(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(sphere({rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7)}),
                    std::invalid_argument);
    CHECK_NOTHROW(sphere({rat(1, 2)}));
}

TEST_CASE("index_of_invariant") {
    CHECK(index_of_invariant(rat(-1, 3)) == 3);
    CHECK(index_of_invariant(rat(4, 3)) == 3);
    CHECK(index_of_invariant(ExtRational(5)) == 1);
    CHECK(index_of_invariant(rat(16 * 1 - 7, 9 * 1 - 4)) == 5);
    CHECK_THROWS_AS(index_of_invariant(ExtRational::infinity()), std::domain_error);
}

TEST_CASE("normalization of disk descriptors") {
    auto n = sfs_normalize(disk({rat(4, 3), rat(9, 5)}));
    CHECK(n.invariants == std::vector<ExtRational>{rat(1, 3), rat(4, 5)});
    CHECK_FALSE(n.invariant_sum.has_value());

    auto n2 = sfs_normalize(disk({rat(-1, 3), rat(9, 5)}));
    CHECK(n2.invariants == std::vector<ExtRational>{rat(2, 3), rat(4, 5)});

    auto n3 = sfs_normalize(disk({ExtRational(0), ExtRational(0)}));
    CHECK(n3.invariants == std::vector<ExtRational>{ExtRational(0), ExtRational(0)});
}

TEST_CASE("normalization of sphere descriptors keeps the sum") {
    auto d = sphere({rat(4, 3), rat(9, 5)});
    auto n = sfs_normalize(d);
    CHECK(n.invariants == std::vector<ExtRational>{rat(1, 3), rat(4, 5)});
    REQUIRE(n.invariant_sum.has_value());
    CHECK(*n.invariant_sum == rat(47, 15));
    // renormalizing does not re-derive the sum from the mod-1 parts
    auto nn = sfs_normalize(n);
    CHECK(nn == n);
}

TEST_CASE("homeomorphism criterion on disk descriptors") {
    CHECK(sfs_homeomorphic(disk({rat(4, 3), rat(9, 5)}),
                           disk({rat(9, 5), rat(4, 3)})));
    CHECK_FALSE(sfs_homeomorphic(disk({rat(4, 3), rat(9, 5)}),
                                 disk({rat(-1, 3), rat(9, 5)})));
    CHECK(sfs_homeomorphic(disk({rat(4, 3), rat(9, 5)}),
                           disk({rat(1, 3), rat(4, 5)})));
    CHECK_THROWS_AS(sfs_homeomorphic(disk({rat(4, 3), rat(9, 5)}),
                                     sphere({rat(4, 3), rat(9, 5)})),
                    std::invalid_argument);
}

TEST_CASE("sphere comparison needs equal sums, not just equal mod-1 parts") {
    auto d1 = sphere({rat(4, 3), rat(9, 5)});   // sum 47/15
    auto d2 = sphere({rat(1, 3), rat(4, 5)});   // same mod-1 parts, sum 17/15
    CHECK_FALSE(sfs_homeomorphic(d1, d2));
    CHECK(sfs_homeomorphic(d1, d1));
    CHECK(sfs_homeomorphic(d1, sfs_normalize(d1)));
}

TEST_CASE("index sets of Seifert halves") {
    CHECK(index_set_of(disk({rat(4, 3), rat(9, 5)})) == IndexSet({3, 5}));
    CHECK(index_set_of(disk({rat(-1, 3), rat(9, 5)})) == IndexSet({3, 5}));
    CHECK(index_set_of(disk({rat(1, 2), rat(1, 2)})) == IndexSet({2}));
    CHECK(to_string(index_set_of(disk({rat(1, 2), rat(1, 2)}))) == "{2}");
    // integer invariant means index 1: not a D2(p,q) half
    CHECK_THROWS_AS(index_set_of(disk({ExtRational(0), ExtRational(0)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(index_set_of(sphere({rat(1, 2), rat(1, 3)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(IndexSet({1, 3}), std::invalid_argument);
}

TEST_CASE("orientation reversal negates everything") {
    auto d = disk({rat(4, 3), rat(9, 5)});
    auto r = orientation_reversed(d);
    CHECK(r.invariants == std::vector<ExtRational>{rat(-9, 5), rat(-4, 3)});
    // flipping both sides of a comparison preserves the verdict
    auto e = disk({rat(-1, 3), rat(9, 5)});
    CHECK(sfs_homeomorphic(d, e) ==
          sfs_homeomorphic(orientation_reversed(d), orientation_reversed(e)));
}

TEST_CASE("properties on random exact descriptors") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(2, 24);

    auto random_half = [&] {
        // keep both indices >= 2 so index_set_of is defined
        for (;;) {
            ExtRational a = rat(num(rng), den(rng));
            ExtRational b = rat(num(rng), den(rng));
            if (a.denominator() > 1 && b.denominator() > 1) return disk({a, b});
        }
    };

    for (int trial = 0; trial < 400; ++trial) {
        auto d1 = random_half();
        auto d2 = random_half();
        auto d3 = random_half();

        // idempotence
        CHECK(sfs_normalize(sfs_normalize(d1)) == sfs_normalize(d1));
        // index is mod-1 computable
        for (const auto& inv : d1.invariants)
            CHECK(index_of_invariant(inv) == index_of_invariant(mod_one(inv)));
        // equivalence relation
        CHECK(sfs_homeomorphic(d1, d1));
        CHECK(sfs_homeomorphic(d1, d2) == sfs_homeomorphic(d2, d1));
        if (sfs_homeomorphic(d1, d2) && sfs_homeomorphic(d2, d3))
            CHECK(sfs_homeomorphic(d1, d3));
        // homeomorphic implies equal index sets
        auto shifted = disk({d1.invariants[0] + ExtRational(3),
                             d1.invariants[1] - ExtRational(2)});
        CHECK(sfs_homeomorphic(d1, shifted));
        CHECK(index_set_of(d1) == index_set_of(shifted));
    }
}
