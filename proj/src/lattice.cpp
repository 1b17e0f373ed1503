#include "weylhom/lattice.hpp"

#include <algorithm>

namespace weylhom {

PDecomposition decompose(i64 p, Weight lambda) {
    WH_REQUIRE(p >= 3, "decompose: p >= 3 required");
    Weight r{floormod(lambda.a, p), floormod(lambda.b, p)};
    Weight q{(lambda.a - r.a) / p, (lambda.b - r.b) / p};
    return {r, q};
}

const char* facetKindName(FacetKind k) {
    switch (k) {
        case FacetKind::FundamentalAlcoveInterior: return "FundamentalAlcoveInterior";
        case FacetKind::DownAlcove: return "DownAlcove";
        case FacetKind::UpAlcove: return "UpAlcove";
        case FacetKind::HorizontalWall: return "HorizontalWall";
        case FacetKind::LeftDiagonalWall: return "LeftDiagonalWall";
        case FacetKind::RightDiagonalWall: return "RightDiagonalWall";
        case FacetKind::Vertex: return "Vertex";
    }
    return "?";
}

const char* justDominantName(JustDominant j) {
    switch (j) {
        case JustDominant::No: return "No";
        case JustDominant::LeftHand: return "LeftHand";
        case JustDominant::RightHand: return "RightHand";
        case JustDominant::Both: return "Both";
    }
    return "?";
}

Facet classifyFacet(i64 p, i64 e, Weight lambda) {
    WH_REQUIRE(p >= 3 && e >= 1, "classifyFacet: p >= 3, e >= 1");
    WH_REQUIRE(lambda.dominant(), "classifyFacet: dominant weight required");
    const i64 q = ipow(p, e);
    const HPoint h = hpoint(lambda);
    const i64 n1 = floordiv(h.h1, q), r1 = floormod(h.h1, q);
    const i64 n2 = floordiv(h.h2, q), r2 = floormod(h.h2, q);

    Facet f{};
    f.e = e;
    f.q = q;
    f.n1 = n1;
    f.n2 = n2;
    f.onLeftWall = (r1 == 0);
    f.onRightWall = (r2 == 0);
    f.onHorizontalWall = (r1 + r2 == q);

    if (r1 == 0 && r2 == 0) {
        f.kind = FacetKind::Vertex;
    } else if (r1 == 0) {
        f.kind = FacetKind::LeftDiagonalWall;
    } else if (r2 == 0) {
        f.kind = FacetKind::RightDiagonalWall;
    } else if (r1 + r2 == q) {
        f.kind = FacetKind::HorizontalWall;
    } else if (r1 + r2 < q) {
        f.kind = (n1 == 0 && n2 == 0) ? FacetKind::FundamentalAlcoveInterior
                                      : FacetKind::DownAlcove;
    } else {
        f.kind = FacetKind::UpAlcove;
    }

    // A facet is just dominant when its supporting vertex (n1 q, n2 q)
    // fails to be a dominant weight.  Vertex weights support themselves.
    if (f.kind == FacetKind::Vertex) {
        f.just = JustDominant::No;
    } else if (n1 == 0 && n2 == 0) {
        f.just = JustDominant::Both;
    } else if (n1 == 0) {
        f.just = JustDominant::LeftHand;
    } else if (n2 == 0) {
        f.just = JustDominant::RightHand;
    } else {
        f.just = JustDominant::No;
    }
    return f;
}

bool alcoveClosureContains(AlcoveId alc, i64 q, HPoint h) {
    const i64 x0 = alc.n1 * q, y0 = alc.n2 * q;
    if (alc.up) {
        return h.h1 <= x0 + q && h.h2 <= y0 + q && h.htheta() >= x0 + y0 + q;
    }
    return h.h1 >= x0 && h.h2 >= y0 && h.htheta() <= x0 + y0 + q;
}

Fold foldToFundamental(i64 q, HPoint h) {
    WH_CHECK(q >= 2, "foldToFundamental: q >= 2");
    Fold out;
    out.canonical = h;
    i64 guard = 64 + 8 * (std::abs(h.h1) + std::abs(h.h2)) / q;
    while (true) {
        const i64 x = out.canonical.h1, y = out.canonical.h2;
        Root root;
        i64 m = 0;
        if (x < 0) {
            root = Root::Alpha1;
        } else if (y < 0) {
            root = Root::Alpha2;
        } else if (x + y > q) {
            // reflect in the highest theta-level at or below x+y, taking the
            // next one down when x+y sits exactly on a level
            const i64 s = x + y;
            m = (floormod(s, q) == 0) ? s - q : q * floordiv(s, q);
            root = Root::Theta;
        } else {
            break;
        }
        const AffineMap r = reflection(root, m);
        out.canonical = r.apply(out.canonical);
        out.map = r.after(out.map);
        out.word.emplace_back(root, m);
        WH_CHECK(--guard > 0, "foldToFundamental failed to terminate");
    }
    WH_CHECK(out.map.apply(h) == out.canonical, "fold map mismatch");
    return out;
}

bool linked(i64 p, Weight lambda, Weight mu) {
    WH_REQUIRE(p >= 3, "linked: p >= 3 required");
    return foldToFundamental(p, hpoint(lambda)).canonical ==
           foldToFundamental(p, hpoint(mu)).canonical;
}

AffineMap transferMap(i64 q, HPoint from, HPoint to) {
    const Fold gf = foldToFundamental(q, from);
    const Fold gt = foldToFundamental(q, to);
    WH_CHECK(gf.canonical == gt.canonical,
             "transferMap requires linkage at the given scale");
    const AffineMap w = gt.map.inverse().after(gf.map);
    WH_CHECK(w.apply(from) == to, "transferMap composition mismatch");
    return w;
}

HPoint vertexBelow(const Facet& f) {
    return {f.n1 * f.q, f.n2 * f.q};
}

Neighbourhood neighbourhood(i64 p, Weight vertexWeight, bool extended) {
    const Facet f = classifyFacet(p, 1, vertexWeight);
    WH_REQUIRE(f.kind == FacetKind::Vertex,
               "neighbourhood: centre must be a vertex weight");
    const i64 m1 = f.n1, m2 = f.n2;
    Neighbourhood nb{vertexWeight, extended, {}};
    std::vector<AlcoveId> cand{
        {false, m1, m2},        {false, m1 - 1, m2},    {false, m1, m2 - 1},
        {true, m1 - 1, m2},     {true, m1, m2 - 1},     {true, m1 - 1, m2 - 1},
    };
    if (extended) {
        cand.insert(cand.end(), {
            {true, m1, m2},         {true, m1 - 2, m2},     {true, m1, m2 - 2},
            {false, m1 - 1, m2 + 1},{false, m1 + 1, m2 - 1},{false, m1 - 1, m2 - 1},
        });
    }
    for (const AlcoveId& c : cand)
        if (c.n1 >= 0 && c.n2 >= 0) nb.members.push_back(c);
    return nb;
}

bool hexagonContains(i64 q, HPoint v, HPoint h) {
    return std::abs(h.h1 - v.h1) <= q && std::abs(h.h2 - v.h2) <= q &&
           std::abs(h.htheta() - v.htheta()) <= q;
}

bool starContains(i64 q, HPoint v, HPoint h) {
    if (hexagonContains(q, v, h)) return true;
    WH_CHECK(floormod(v.h1, q) == 0 && floormod(v.h2, q) == 0,
             "starContains: centre must be a vertex point");
    const i64 m1 = v.h1 / q, m2 = v.h2 / q;
    const AlcoveId outer[6] = {
        {true, m1, m2},          {true, m1 - 2, m2},      {true, m1, m2 - 2},
        {false, m1 - 1, m2 + 1}, {false, m1 + 1, m2 - 1}, {false, m1 - 1, m2 - 1},
    };
    for (const AlcoveId& alc : outer)
        if (alcoveClosureContains(alc, q, h)) return true;
    return false;
}

std::vector<Weight> wallPoints(const Facet& f) {
    WH_REQUIRE(f.isWall(), "wallPoints: wall facet required");
    std::vector<Weight> pts;
    pts.reserve(static_cast<size_t>(f.q - 1));
    for (i64 r = 1; r < f.q; ++r) {
        HPoint h{};
        switch (f.kind) {
            case FacetKind::LeftDiagonalWall:
                h = {f.n1 * f.q, f.n2 * f.q + r};
                break;
            case FacetKind::RightDiagonalWall:
                h = {f.n1 * f.q + r, f.n2 * f.q};
                break;
            default:  // horizontal
                h = {f.n1 * f.q + r, f.n2 * f.q + (f.q - r)};
                break;
        }
        Weight w = weightOf(h);
        if (w.dominant()) pts.push_back(w);
    }
    return pts;
}

}  // namespace weylhom
