#pragma once

// SL3 weight arithmetic: weights (a,b) in the basis of fundamental weights,
// rho-shifted pairings, the finite Weyl group, dominance order, and the
// degree-lexicographic total order that extends dominance.

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "weylhom/check.hpp"

namespace weylhom {

using i64 = std::int64_t;

constexpr i64 floordiv(i64 x, i64 q) {
    i64 d = x / q, r = x % q;
    return (r != 0 && ((r < 0) != (q < 0))) ? d - 1 : d;
}

constexpr i64 floormod(i64 x, i64 q) { return x - q * floordiv(x, q); }

constexpr i64 ipow(i64 base, i64 exp) {
    i64 r = 1;
    for (i64 i = 0; i < exp; ++i) r *= base;
    return r;
}

struct Weight {
    i64 a = 0;
    i64 b = 0;

    friend constexpr auto operator<=>(const Weight&, const Weight&) = default;
    constexpr Weight operator+(Weight o) const { return {a + o.a, b + o.b}; }
    constexpr Weight operator-(Weight o) const { return {a - o.a, b - o.b}; }
    constexpr Weight operator*(i64 k) const { return {k * a, k * b}; }
    constexpr bool dominant() const { return a >= 0 && b >= 0; }
    // Dynkin diagram automorphism; also the effect of -w0.
    constexpr Weight swapped() const { return {b, a}; }
};

inline constexpr Weight rho{1, 1};

inline std::string str(Weight w) {
    return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

// rho-shifted pairings h_alpha = <lambda+rho, alpha^vee>.  All alcove
// geometry happens in these coordinates.
struct HPoint {
    i64 h1 = 0;
    i64 h2 = 0;

    friend constexpr auto operator<=>(const HPoint&, const HPoint&) = default;
    constexpr i64 htheta() const { return h1 + h2; }
};

constexpr HPoint hpoint(Weight w) { return {w.a + 1, w.b + 1}; }
constexpr Weight weightOf(HPoint h) { return {h.h1 - 1, h.h2 - 1}; }

// lambda = x alpha1 + y alpha2 scaled by 3 to stay integral:
// 3x = 2a+b, 3y = a+2b.
struct RootCoords3 {
    i64 x3 = 0;
    i64 y3 = 0;
};

constexpr RootCoords3 rootCoords3(Weight w) {
    return {2 * w.a + w.b, w.a + 2 * w.b};
}

constexpr bool inRootLattice(Weight w) {
    return floormod(2 * w.a + w.b, 3) == 0;
}

// mu <= lambda iff lambda - mu is a nonnegative integer combination of
// simple roots.
constexpr bool dominates(Weight lambda, Weight mu) {
    RootCoords3 d = rootCoords3(lambda - mu);
    return d.x3 >= 0 && d.y3 >= 0 && floormod(d.x3, 3) == 0 &&
           floormod(d.y3, 3) == 0;
}

constexpr bool strictlyDominates(Weight lambda, Weight mu) {
    return lambda != mu && dominates(lambda, mu);
}

// The six elements of W acting linearly on weights, with det sign
// (-1)^length: e, s1, s2, s1s2, s2s1, w0.
struct WeylElement {
    // row-major 2x2 matrix on (a,b)
    std::array<i64, 4> m;
    int sign;

    constexpr Weight apply(Weight w) const {
        return {m[0] * w.a + m[1] * w.b, m[2] * w.a + m[3] * w.b};
    }
};

inline constexpr std::array<WeylElement, 6> weylGroup{{
    {{1, 0, 0, 1}, +1},     // e
    {{-1, 0, 1, 1}, -1},    // s1: (a,b) -> (-a, a+b)
    {{1, 1, 0, -1}, -1},    // s2: (a,b) -> (a+b, -b)
    {{-1, -1, 1, 0}, +1},   // s1 s2: (a,b) -> (-a-b, a)
    {{0, 1, -1, -1}, +1},   // s2 s1: (a,b) -> (b, -a-b)
    {{0, -1, -1, 0}, -1},   // w0: (a,b) -> (-b, -a)
}};

// Dominant representative of the linear W-orbit: sort the partition-style
// coordinates (a+b, b, 0) descending.
constexpr Weight dominantRep(Weight w) {
    i64 v[3] = {w.a + w.b, w.b, 0};
    if (v[0] < v[1]) { i64 t = v[0]; v[0] = v[1]; v[1] = t; }
    if (v[1] < v[2]) { i64 t = v[1]; v[1] = v[2]; v[2] = t; }
    if (v[0] < v[1]) { i64 t = v[0]; v[0] = v[1]; v[1] = t; }
    return {v[0] - v[1], v[1] - v[2]};
}

// |W . w| under the linear action.
constexpr i64 orbitSize(Weight dom) {
    WH_CHECK(dom.dominant(), "orbitSize wants a dominant weight");
    if (dom.a == 0 && dom.b == 0) return 1;
    if (dom.a == 0 || dom.b == 0) return 3;
    return 6;
}

// Total order refining dominance: compare (a+2b, a, b) lexicographically.
// Subtracting alpha1 keeps a+2b and lowers a; subtracting alpha2 lowers
// a+2b; hence mu < lambda in dominance implies mu before lambda here.
struct DegLexLess {
    constexpr bool operator()(Weight l, Weight r) const {
        i64 dl = l.a + 2 * l.b, dr = r.a + 2 * r.b;
        if (dl != dr) return dl < dr;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    }
};

constexpr i64 weylDimension(Weight w) {
    return (w.a + 1) * (w.b + 1) * (w.a + w.b + 2) / 2;
}

}  // namespace weylhom
