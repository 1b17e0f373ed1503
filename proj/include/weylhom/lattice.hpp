#pragma once

// Alcove geometry at scale q = p^e: facet classification, folding into the
// closed fundamental alcove, linkage, vertex neighbourhoods, and the
// restricted/quotient decomposition.

#include <optional>
#include <string>
#include <vector>

#include "weylhom/affine.hpp"
#include "weylhom/weights.hpp"

namespace weylhom {

struct PDecomposition {
    Weight restricted;  // lambda' in X_1(T)
    Weight quotient;    // lambda''
};

PDecomposition decompose(i64 p, Weight lambda);

enum class FacetKind : std::uint8_t {
    FundamentalAlcoveInterior,
    DownAlcove,
    UpAlcove,
    HorizontalWall,
    LeftDiagonalWall,
    RightDiagonalWall,
    Vertex,
};

enum class JustDominant : std::uint8_t { No, LeftHand, RightHand, Both };

const char* facetKindName(FacetKind k);
const char* justDominantName(JustDominant j);

// (n1, n2) are the floor bands of (h1, h2) at scale q.  For every kind
// except UpAlcove they name the unique down alcove D(n1,n2) whose closure
// contains the facet; for UpAlcove they are the bands of U(n1,n2) itself.
struct Facet {
    FacetKind kind;
    i64 e;   // scale exponent
    i64 q;   // p^e
    i64 n1;
    i64 n2;
    JustDominant just;
    bool onLeftWall;        // h1 = n1 q
    bool onRightWall;       // h2 = n2 q
    bool onHorizontalWall;  // h1 + h2 = (n1+n2+1) q

    bool isAlcove() const {
        return kind == FacetKind::FundamentalAlcoveInterior ||
               kind == FacetKind::DownAlcove || kind == FacetKind::UpAlcove;
    }
    bool isWall() const {
        return kind == FacetKind::HorizontalWall ||
               kind == FacetKind::LeftDiagonalWall ||
               kind == FacetKind::RightDiagonalWall;
    }
    bool justDominantAny() const { return just != JustDominant::No; }
};

Facet classifyFacet(i64 p, i64 e, Weight lambda);

// Alcove identifier used by neighbourhood enumeration and region tests.
struct AlcoveId {
    bool up;
    i64 n1;
    i64 n2;
    friend constexpr auto operator<=>(const AlcoveId&, const AlcoveId&) = default;
};

// Closed-triangle membership at scale q.
bool alcoveClosureContains(AlcoveId alc, i64 q, HPoint h);

// One fold step of the canonicalization plus the whole word.
struct Fold {
    HPoint canonical;                       // in the closed alcove {x,y>=0, x+y<=q}
    AffineMap map;                          // map(input) = canonical, word product
    std::vector<std::pair<Root, i64>> word; // reflections, first applied first
};

Fold foldToFundamental(i64 q, HPoint h);

bool linked(i64 p, Weight lambda, Weight mu);

// Element w of W_q with w(from) = to, built from the two fold words.
// Requires linkage at scale q.
AffineMap transferMap(i64 q, HPoint from, HPoint to);

// Vertex at the bottom corner of the band box of lambda's facet, as the
// h-point (n1 q, n2 q); its weight is dominant iff n1,n2 >= 1.
HPoint vertexBelow(const Facet& f);

struct Neighbourhood {
    Weight centre;
    bool extended;
    std::vector<AlcoveId> members;  // clipped to alcoves meeting the dominant cone
};

// Closed hexagon of 6 alcoves around a vertex weight, or the 12-alcove
// extended star.
Neighbourhood neighbourhood(i64 p, Weight vertexWeight, bool extended);

// Region membership used by the translate machinery: the closed hexagon is
// the intersection of three bands of width 2q around the vertex; the
// extended star is the union of the 12 closed alcoves.
bool hexagonContains(i64 q, HPoint vertex, HPoint h);
bool starContains(i64 q, HPoint vertex, HPoint h);

// All weights lying on a wall facet (the q-1 lattice points of the open
// wall segment); only sensible for wall kinds.
std::vector<Weight> wallPoints(const Facet& f);

}  // namespace weylhom
