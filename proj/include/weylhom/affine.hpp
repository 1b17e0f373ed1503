#pragma once

// Affine reflections on rho-shifted coordinates and composable integer
// affine maps, the carriers of all transfer/translation bookkeeping.

#include <array>
#include <string>
#include <vector>

#include "weylhom/check.hpp"
#include "weylhom/weights.hpp"

namespace weylhom {

enum class Root : std::uint8_t { Alpha1, Alpha2, Theta };

inline const char* rootName(Root r) {
    switch (r) {
        case Root::Alpha1: return "L";
        case Root::Alpha2: return "R";
        case Root::Theta: return "B";
    }
    return "?";
}

constexpr i64 pairing(HPoint h, Root r) {
    switch (r) {
        case Root::Alpha1: return h.h1;
        case Root::Alpha2: return h.h2;
        case Root::Theta: return h.htheta();
    }
    return 0;
}

// v -> M v + t on h-points; M is unimodular for all words in reflections.
struct AffineMap {
    std::array<i64, 4> m{1, 0, 0, 1};
    i64 t1 = 0;
    i64 t2 = 0;

    friend constexpr auto operator<=>(const AffineMap&, const AffineMap&) = default;

    constexpr HPoint apply(HPoint h) const {
        return {m[0] * h.h1 + m[1] * h.h2 + t1,
                m[2] * h.h1 + m[3] * h.h2 + t2};
    }

    // this after other: (this * other)(v) = this(other(v))
    constexpr AffineMap after(const AffineMap& o) const {
        AffineMap r;
        r.m = {m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
               m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]};
        r.t1 = m[0] * o.t1 + m[1] * o.t2 + t1;
        r.t2 = m[2] * o.t1 + m[3] * o.t2 + t2;
        return r;
    }

    constexpr AffineMap inverse() const {
        i64 det = m[0] * m[3] - m[1] * m[2];
        WH_CHECK(det == 1 || det == -1, "AffineMap must be unimodular");
        AffineMap r;
        r.m = {det * m[3], det * -m[1], det * -m[2], det * m[0]};
        r.t1 = -(r.m[0] * t1 + r.m[1] * t2);
        r.t2 = -(r.m[2] * t1 + r.m[3] * t2);
        return r;
    }
};

// Reflection s_{root,m} in <x, alpha^vee> = m, acting on h-points:
//   s_{a1,m}(x,y) = (2m-x, y+x-m)
//   s_{a2,m}(x,y) = (x+y-m, 2m-y)
//   s_{th,m}(x,y) = (m-y, m-x)
constexpr AffineMap reflection(Root r, i64 m) {
    switch (r) {
        case Root::Alpha1: return {{-1, 0, 1, 1}, 2 * m, -m};
        case Root::Alpha2: return {{1, 1, 0, -1}, -m, 2 * m};
        case Root::Theta: return {{0, -1, -1, 0}, m, m};
    }
    return {};
}

// Dot-action reflection on weights; the result may leave the dominant
// region and is returned unclamped.
constexpr Weight dotReflect(Root root, i64 m, Weight lambda) {
    return weightOf(reflection(root, m).apply(hpoint(lambda)));
}

// Per spec: wall level m must sit on the p^e grid.
inline Weight dotReflect(i64 p, i64 e, Root root, i64 m, Weight lambda) {
    WH_REQUIRE(floormod(m, ipow(p, e)) == 0,
               "dotReflect: wall level must be a multiple of p^e");
    return dotReflect(root, m, lambda);
}

}  // namespace weylhom
