#include "weylhom/character.hpp"

#include <mutex>
#include <vector>

#include "weylhom/lattice.hpp"

namespace weylhom {

namespace {

// 3 * (v, w) for the W-invariant form with (alpha, alpha) = 2.
constexpr i64 form3(Weight v, Weight w) {
    return 2 * v.a * w.a + v.a * w.b + v.b * w.a + 2 * v.b * w.b;
}

constexpr Weight kAlpha1{2, -1};
constexpr Weight kAlpha2{-1, 2};
constexpr Weight kTheta{1, 1};
constexpr Weight kPositiveRoots[3] = {kAlpha1, kAlpha2, kTheta};

// Dominant weights mu <= lambda, i.e. lambda - x alpha1 - y alpha2.
std::vector<Weight> dominantConeBelow(Weight lambda) {
    std::vector<Weight> out;
    for (i64 x = 0;; ++x) {
        // mu = (a - 2x + y, b + x - 2y); at y chosen best, a-coordinate
        // shrinks as x grows, so stop when even the most generous y fails
        bool any = false;
        for (i64 y = 0;; ++y) {
            Weight mu{lambda.a - 2 * x + y, lambda.b + x - 2 * y};
            if (mu.b < 0) break;
            if (mu.a >= 0) {
                out.push_back(mu);
                any = true;
            }
        }
        if (!any && 2 * x > lambda.a + lambda.b + 2) break;
    }
    return out;
}

Character freudenthal(Weight lambda) {
    WH_CHECK(lambda.dominant(), "weylCharacter wants a dominant weight");
    std::vector<Weight> cone = dominantConeBelow(lambda);
    // process by increasing depth so every referenced multiplicity exists
    std::sort(cone.begin(), cone.end(), [&](Weight l, Weight r) {
        RootCoords3 dl = rootCoords3(lambda - l), dr = rootCoords3(lambda - r);
        return dl.x3 + dl.y3 < dr.x3 + dr.y3;
    });
    Character ch;
    const i64 top = form3(lambda + rho, lambda + rho);
    for (Weight mu : cone) {
        if (mu == lambda) {
            ch[mu] = 1;
            continue;
        }
        i64 s = 0;
        for (Weight alpha : kPositiveRoots) {
            for (i64 k = 1;; ++k) {
                const Weight nu = mu + alpha * k;
                const i64 m = evaluate(ch, nu);
                if (m == 0 && !dominates(lambda, dominantRep(nu))) break;
                s += m * form3(nu, alpha);
            }
        }
        const i64 den = top - form3(mu + rho, mu + rho);
        WH_CHECK(den > 0, "Freudenthal denominator must be positive");
        WH_CHECK((2 * s) % den == 0, "Freudenthal division must be exact");
        const i64 m = 2 * s / den;
        WH_CHECK(m >= 0, "negative Freudenthal multiplicity");
        if (m > 0) ch[mu] = m;
    }
    WH_CHECK(dimension(ch) == weylDimension(lambda),
             "Weyl character dimension mismatch");
    return ch;
}

}  // namespace

i64 evaluate(const Character& ch, Weight w) {
    auto it = ch.find(dominantRep(w));
    return it == ch.end() ? 0 : it->second;
}

i64 dimension(const Character& ch) {
    i64 d = 0;
    for (const auto& [w, m] : ch) d += m * orbitSize(w);
    return d;
}

Character add(const Character& x, const Character& y) {
    Character r = x;
    for (const auto& [w, m] : y) {
        i64& v = r[w];
        v += m;
        if (v == 0) r.erase(w);
    }
    return r;
}

Character subtract(const Character& x, const Character& y) {
    Character r = x;
    for (const auto& [w, m] : y) {
        i64& v = r[w];
        v -= m;
        if (v < 0)
            throw NegativeMultiplicityError("character subtraction at " + str(w));
        if (v == 0) r.erase(w);
    }
    return r;
}

Character dilate(const Character& ch, i64 k) {
    WH_CHECK(k >= 1, "dilate factor must be >= 1");
    Character r;
    for (const auto& [w, m] : ch) r[w * k] = m;
    return r;
}

Character multiply(const Character& x, const Character& y) {
    if (x.empty() || y.empty()) return {};
    // expand the smaller factor over its full W-orbits
    const Character& small = (x.size() <= y.size()) ? x : y;
    const Character& big = (x.size() <= y.size()) ? y : x;
    std::vector<std::pair<Weight, i64>> full;
    for (const auto& [w, m] : small) {
        Weight seen[6];
        int n = 0;
        for (const WeylElement& g : weylGroup) {
            Weight img = g.apply(w);
            bool dup = false;
            for (int i = 0; i < n; ++i) dup = dup || seen[i] == img;
            if (dup) continue;
            seen[n++] = img;
            full.emplace_back(img, m);
        }
    }
    const Weight topS = small.rbegin()->first, topB = big.rbegin()->first;
    for (const auto& [w, m] : small)
        WH_CHECK(dominates(topS, w), "multiply: factor needs a unique top");
    for (const auto& [w, m] : big)
        WH_CHECK(dominates(topB, w), "multiply: factor needs a unique top");
    Character r;
    for (Weight mu : dominantConeBelow(topS + topB)) {
        if (!inRootLattice(mu - topS - topB)) continue;
        i64 v = 0;
        for (const auto& [xw, xm] : full) v += xm * evaluate(big, mu - xw);
        if (v != 0) {
            WH_CHECK(v > 0, "negative product multiplicity");
            r[mu] = v;
        }
    }
    WH_CHECK(dimension(r) == dimension(x) * dimension(y),
             "product dimension mismatch");
    return r;
}

const Character& weylCharacter(Weight lambda) {
    static std::mutex mx;
    static std::map<Weight, Character> cache;
    std::scoped_lock lock(mx);
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, freudenthal(lambda)).first;
    return it->second;
}

Character restrictedSimpleCharacter(i64 p, Weight lp) {
    WH_REQUIRE(p >= 3, "restrictedSimpleCharacter: p >= 3");
    WH_REQUIRE(lp.dominant() && lp.a < p && lp.b < p,
               "restrictedSimpleCharacter: weight must be restricted");
    const Character& nabla = weylCharacter(lp);
    if (lp.a + lp.b + 2 <= p) return nabla;
    const Weight mirror{p - 2 - lp.b, p - 2 - lp.a};
    if (!mirror.dominant()) return nabla;
    // mirror lies in the lowest alcove closure, so L(mirror) = nabla(mirror)
    WH_CHECK(mirror.a + mirror.b + 2 <= p, "mirror must be in lowest alcove");
    return subtract(nabla, weylCharacter(mirror));
}

Character simpleCharacter(i64 p, Weight lambda) {
    WH_REQUIRE(lambda.dominant(), "simpleCharacter: dominant weight required");
    Character r;
    r[{0, 0}] = 1;
    i64 scale = 1;
    Weight rest = lambda;
    while (true) {
        auto [digit, quot] = decompose(p, rest);
        r = multiply(r, dilate(restrictedSimpleCharacter(p, digit), scale));
        if (quot == Weight{0, 0}) break;
        scale *= p;
        rest = quot;
    }
    return r;
}

Character nablaPCharacter(i64 p, Weight mu) {
    auto [mup, mupp] = decompose(p, mu);
    return multiply(restrictedSimpleCharacter(p, mup),
                    dilate(weylCharacter(mupp), p));
}

}  // namespace weylhom
