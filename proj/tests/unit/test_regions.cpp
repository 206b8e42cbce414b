#include <doctest.h>

#include "bireg/errors.hpp"
#include "bireg/regions.hpp"

using namespace bireg;

TEST_CASE("staircase examples") {
    CHECK(Region(RegionKind::St, 2, 0, 0).points() == std::vector<Bidegree>{{-2, -1}, {-1, -2}});
    CHECK(Region(RegionKind::St, 0, 3, 4).points() == std::vector<Bidegree>{{3, 4}});
    CHECK(Region(RegionKind::St, -2, 0, 0).points() == std::vector<Bidegree>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(Region(RegionKind::St, 1, 1, 1).points() == std::vector<Bidegree>{{0, 0}});
    CHECK(Region(RegionKind::St, 4, 0, 0).points().size() == 4);
}

TEST_CASE("regularity up-sets") {
    const Region r(RegionKind::Reg, 1, 0, 0);
    CHECK(r.contains(-1, -1));
    CHECK(!r.contains(-2, 5));
    const Region r2(RegionKind::Reg, 2, 0, 0);
    CHECK(r2.contains(-2, -1));
    CHECK(!r2.contains(-2, -2));
    CHECK(Region(RegionKind::Reg, -1, 0, 0).contains(1, 1));
    CHECK(!Region(RegionKind::Reg, -1, 0, 0).contains(0, 5));
    CHECK(Region(RegionKind::RegPrime, -1, 0, 0).contains(1, 0));
    CHECK(!Region(RegionKind::RegPrime, -1, 0, 0).contains(0, 1));
    CHECK(Region(RegionKind::RegDoublePrime, -1, 0, 0).contains(0, 1));
    CHECK(Region(RegionKind::DReg, 1, 0, 0).contains(1, 0));
    CHECK(!Region(RegionKind::DReg, 1, 0, 0).contains(1, 1));
    CHECK(Region(RegionKind::DReg, 0, 2, 3).contains(2, 3));
    CHECK(!Region(RegionKind::DReg, 0, 2, 3).contains(3, 3));
}

TEST_CASE("region identities on a window") {
    const Window w{-8, 8, -8, 8};
    for (int i = -1; i <= 4; ++i)
        for (int p = -2; p <= 2; ++p)
            for (int pp = -2; pp <= 2; ++pp)
                for (int k = w.k0; k <= w.k1; ++k)
                    for (int kp = w.l0; kp <= w.l1; ++kp) {
                        CHECK(Region(RegionKind::Reg, i, p, pp).contains(k, kp) ==
                              reg_contains_by_staircase(i, p, pp, k, kp));
                        if (i >= 0)
                            CHECK(Region(RegionKind::DReg, i, p, pp).contains(k, kp) ==
                                  dreg_contains_by_negation(i, p, pp, k, kp));
                    }
}

TEST_CASE("shift implications hold from i = 1 and item 1 fails at i = 0") {
    const Window w{-10, 10, -10, 10};
    for (int i = 1; i <= 5; ++i) CHECK(region_shift_properties_check(i, 1, -2, w).ok);
    CHECK(region_shift_properties_check(-1, 0, 0, w).ok);
    const auto rep = region_shift_properties_check(0, 0, 0, w);
    CHECK(!rep.ok);
    CHECK(rep.failure.find("item 1") != std::string::npos);
}

TEST_CASE("invalid regions and infinite enumeration") {
    CHECK_THROWS_AS(Region(RegionKind::Reg, -2, 0, 0), InvalidRegion);
    CHECK_THROWS_AS(Region(RegionKind::RegPrime, 0, 0, 0), InvalidRegion);
    CHECK_THROWS_AS(Region(RegionKind::DReg, -1, 0, 0), InvalidRegion);
    CHECK_THROWS_AS(Region(RegionKind::Reg, 0, 0, 0).points(), NeedsWindow);
    CHECK_THROWS_AS(region_kind_from_string("Foo"), InvalidRegion);
    CHECK(region_kind_from_string("Reg''") == RegionKind::RegDoublePrime);
}

TEST_CASE("rendering") {
    const std::string pic = render_region(Region(RegionKind::St, 1, 0, 0), {-2, 0, -2, 0});
    CHECK(pic == "...\n.#.\n...\n");
    CHECK(Region(RegionKind::Reg, 0, 0, 0).points(Window{0, 1, 0, 1}).size() == 4);
}
