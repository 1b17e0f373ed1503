#pragma once

// Exact SL3 character arithmetic on dominant representatives: Weyl
// characters by Freudenthal's recursion, restricted simple characters,
// Steinberg digit products, Frobenius dilation, and the convolution and
// peel-subtraction plumbing.

#include <map>

#include "weylhom/check.hpp"
#include "weylhom/weights.hpp"

namespace weylhom {

struct NegativeMultiplicityError : InternalError {
    using InternalError::InternalError;
};

// Multiplicities on dominant weights; the full character is the
// W-orbit expansion.  Keys ordered by the dominance-refining DegLex.
using Character = std::map<Weight, i64, DegLexLess>;

// Multiplicity of an arbitrary (possibly non-dominant) weight.
i64 evaluate(const Character& ch, Weight w);

i64 dimension(const Character& ch);

Character add(const Character& x, const Character& y);

// Checked module-semantics subtraction; throws NegativeMultiplicityError.
Character subtract(const Character& x, const Character& y);

// Frobenius dilation: every weight scaled by k.
Character dilate(const Character& ch, i64 k);

// Exact convolution.  Both factors must have a unique highest weight
// (true for every character this engine multiplies).
Character multiply(const Character& x, const Character& y);

// ch nabla(a,b) via Freudenthal; memoized.
const Character& weylCharacter(Weight lambda);

// ch L(lambda') for restricted lambda'.
Character restrictedSimpleCharacter(i64 p, Weight lambdaPrime);

// ch L(lambda) via the Steinberg tensor product over base-p digits.
Character simpleCharacter(i64 p, Weight lambda);

// ch nabla_p(mu) = ch L(mu') * dilate_p ch nabla(mu'').
Character nablaPCharacter(i64 p, Weight mu);

}  // namespace weylhom
