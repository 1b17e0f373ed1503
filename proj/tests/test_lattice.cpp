#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "weylhom/lattice.hpp"

using namespace weylhom;

TEST_CASE("weight order and root lattice") {
    CHECK(dominates({3, 0}, {1, 1}));       // (3,0)-(1,1) = alpha1
    CHECK(dominates({1, 1}, {0, 0}));       // alpha1+alpha2
    CHECK_FALSE(dominates({10, 0}, {6, 1}));  // (4,-1) not in root lattice
    CHECK_FALSE(dominates({1, 0}, {0, 1}));
    CHECK(inRootLattice({3, 0}));
    CHECK(inRootLattice({1, 1}));
    CHECK_FALSE(inRootLattice({4, -1}));

    DegLexLess less;
    CHECK(less({1, 1}, {3, 0}));  // dominance respected
    CHECK(less({0, 0}, {1, 1}));
}

TEST_CASE("dominantRep agrees with orbit enumeration") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<i64> d(-15, 15);
    for (int i = 0; i < 500; ++i) {
        Weight w{d(rng), d(rng)};
        Weight rep = dominantRep(w);
        CHECK(rep.dominant());
        bool found = false;
        for (const WeylElement& g : weylGroup) {
            Weight img = g.apply(w);
            if (img == rep) found = true;
            CHECK(dominantRep(img) == rep);
        }
        CHECK(found);
    }
}

TEST_CASE("decompose into restricted plus p times quotient") {
    auto d1 = decompose(3, {10, 1});
    CHECK(d1.restricted == Weight{1, 1});
    CHECK(d1.quotient == Weight{3, 0});
    auto d2 = decompose(3, {33, 6});
    CHECK(d2.restricted == Weight{0, 0});
    CHECK(d2.quotient == Weight{11, 2});
    auto d3 = decompose(3, {2, 2});
    CHECK(d3.restricted == Weight{2, 2});
    CHECK(d3.quotient == Weight{0, 0});
}

TEST_CASE("classifyFacet kinds and flags") {
    Facet f0 = classifyFacet(3, 1, {0, 0});
    CHECK(f0.kind == FacetKind::FundamentalAlcoveInterior);

    Facet fv = classifyFacet(3, 1, {2, 2});
    CHECK(fv.kind == FacetKind::Vertex);
    CHECK(fv.n1 == 1);
    CHECK(fv.n2 == 1);

    Facet fd = classifyFacet(3, 1, {33, 6});
    CHECK(fd.kind == FacetKind::DownAlcove);
    CHECK(fd.just == JustDominant::No);
    CHECK(fd.n1 == 11);
    CHECK(fd.n2 == 2);

    Facet fu = classifyFacet(3, 1, {10, 1});
    CHECK(fu.kind == FacetKind::UpAlcove);
    CHECK(fu.just == JustDominant::RightHand);
    CHECK(fu.n1 == 3);
    CHECK(fu.n2 == 0);

    // h = (11,1): 2 + 1 = 3 on the wall above D(3,0)
    Facet fh = classifyFacet(3, 1, {10, 0});
    CHECK(fh.kind == FacetKind::HorizontalWall);
    CHECK(fh.just == JustDominant::RightHand);

    Facet fl = classifyFacet(3, 1, {2, 0});
    CHECK(fl.kind == FacetKind::LeftDiagonalWall);

    Facet fr = classifyFacet(3, 1, {0, 2});
    CHECK(fr.kind == FacetKind::RightDiagonalWall);
    CHECK(fr.just == JustDominant::LeftHand);

    // scale p^2
    Facet f9 = classifyFacet(3, 2, {35, 2});
    CHECK(f9.kind == FacetKind::LeftDiagonalWall);  // h1 = 36 = 4*9
}

TEST_CASE("vertex weights have restricted part (p-1)rho") {
    for (i64 a = 0; a <= 40; ++a)
        for (i64 b = 0; b <= 40; ++b) {
            Facet f = classifyFacet(3, 1, {a, b});
            bool isVertex = f.kind == FacetKind::Vertex;
            bool steinbergPart = decompose(3, {a, b}).restricted == Weight{2, 2};
            CHECK(isVertex == steinbergPart);
        }
}

TEST_CASE("dotReflect examples and involution") {
    CHECK(dotReflect(3, 1, Root::Alpha1, 3, {3, 0}) == Weight{1, 1});
    CHECK(dotReflect(3, 1, Root::Theta, 3, {1, 1}) == Weight{0, 0});
    CHECK(dotReflect(3, 1, Root::Alpha2, 6, {33, 6}) == Weight{34, 4});

    std::mt19937 rng(11);
    std::uniform_int_distribution<i64> d(-20, 20);
    for (int i = 0; i < 200; ++i) {
        Weight w{d(rng), d(rng)};
        for (Root r : {Root::Alpha1, Root::Alpha2, Root::Theta}) {
            i64 m = 3 * (d(rng) % 5);
            CHECK(dotReflect(r, m, dotReflect(r, m, w)) == w);
        }
    }
}

TEST_CASE("fold reaches the closed fundamental alcove with a valid map") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<i64> d(0, 80);
    for (int i = 0; i < 400; ++i) {
        HPoint h{d(rng) + 1, d(rng) + 1};
        for (i64 q : {3, 5, 9, 25}) {
            Fold f = foldToFundamental(q, h);
            CHECK(f.canonical.h1 >= 0);
            CHECK(f.canonical.h2 >= 0);
            CHECK(f.canonical.htheta() <= q);
            CHECK(f.map.apply(h) == f.canonical);
            for (auto [root, m] : f.word) CHECK(floormod(m, q) == 0);
        }
    }
}

TEST_CASE("linked examples") {
    CHECK(linked(3, {3, 0}, {1, 1}));
    CHECK(linked(3, {1, 0}, {1, 0}));
    CHECK_FALSE(linked(3, {1, 0}, {0, 0}));
    CHECK(linked(3, {33, 6}, {34, 4}));
    CHECK_FALSE(linked(3, {33, 6}, {24, 4}));  // wall weight vs regular orbit
}

TEST_CASE("linked is reflection invariant") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<i64> d(0, 40);
    int hits = 0;
    for (int i = 0; i < 300; ++i) {
        Weight l{d(rng), d(rng)};
        Weight m{d(rng), d(rng)};
        bool base = linked(3, l, m);
        for (Root r : {Root::Alpha1, Root::Theta}) {
            Weight l2 = dotReflect(r, 6, l), m2 = dotReflect(r, 6, m);
            if (l2.dominant() && m2.dominant()) {
                CHECK(linked(3, l2, m2) == base);
                ++hits;
            }
        }
    }
    CHECK(hits > 50);
}

TEST_CASE("transferMap sends source to target inside one orbit") {
    // (33,6) and (28,1) are W_3-linked
    REQUIRE(linked(3, {33, 6}, {28, 1}));
    AffineMap w = transferMap(3, hpoint({33, 6}), hpoint({28, 1}));
    CHECK(w.apply(hpoint({33, 6})) == hpoint({28, 1}));
    AffineMap winv = w.inverse();
    CHECK(winv.apply(hpoint({28, 1})) == hpoint({33, 6}));
}

TEST_CASE("neighbourhood enumeration") {
    Neighbourhood hex = neighbourhood(3, {2, 2}, false);
    CHECK(hex.members.size() == 6);

    Neighbourhood star = neighbourhood(3, {2, 2}, true);
    CHECK(star.members.size() == 10);  // two of the twelve are clipped

    // interior vertex keeps all twelve
    Neighbourhood star2 = neighbourhood(3, {8, 8}, true);
    CHECK(star2.members.size() == 12);

    // hexagon of (32,5) holds the first translate cluster of (33,6)
    Neighbourhood hx = neighbourhood(3, {32, 5}, false);
    HPoint v = hpoint({32, 5});
    for (Weight w : {Weight{33, 6}, Weight{31, 4}, Weight{31, 7}, Weight{30, 6},
                     Weight{34, 4}}) {
        CHECK(hexagonContains(3, v, hpoint(w)));
        bool inSome = false;
        for (AlcoveId alc : hx.members)
            inSome = inSome || alcoveClosureContains(alc, 3, hpoint(w));
        CHECK(inSome);
    }
}

TEST_CASE("hexagon and star membership agree with alcove unions") {
    const i64 q = 3;
    HPoint v{9, 6};
    Neighbourhood hex = neighbourhood(3, weightOf(v), false);
    Neighbourhood star = neighbourhood(3, weightOf(v), true);
    for (i64 x = 0; x <= 18; ++x)
        for (i64 y = 0; y <= 15; ++y) {
            HPoint h{x, y};
            bool inHexDirect = hexagonContains(q, v, h);
            bool inHexUnion = false;
            for (AlcoveId alc : hex.members)
                inHexUnion = inHexUnion || alcoveClosureContains(alc, q, h);
            CHECK(inHexDirect == inHexUnion);
            bool inStarDirect = starContains(q, v, h);
            bool inStarUnion = false;
            for (AlcoveId alc : star.members)
                inStarUnion = inStarUnion || alcoveClosureContains(alc, q, h);
            CHECK(inStarDirect == inStarUnion);
        }
}

TEST_CASE("wallPoints enumerates the open wall segment") {
    Facet f = classifyFacet(3, 1, {10, 0});
    auto pts = wallPoints(f);
    CHECK(pts.size() == 2);
    CHECK(std::find(pts.begin(), pts.end(), Weight{10, 0}) != pts.end());
    for (Weight w : pts) {
        Facet g = classifyFacet(3, 1, w);
        CHECK(g.kind == f.kind);
        CHECK(g.n1 == f.n1);
        CHECK(g.n2 == f.n2);
    }
}

TEST_CASE("facet classification is p^e-translation invariant") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<i64> d(0, 60);
    for (int i = 0; i < 300; ++i) {
        Weight w{d(rng), d(rng)};
        Facet f = classifyFacet(3, 1, w);
        Weight t = w + Weight{3, 3};  // 3*(alpha1+alpha2) pairing shift (3,3)
        Facet g = classifyFacet(3, 1, t);
        CHECK(f.kind == g.kind);
        CHECK(g.n1 == f.n1 + 1);
        CHECK(g.n2 == f.n2 + 1);
    }
}
