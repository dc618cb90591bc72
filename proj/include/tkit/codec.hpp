#pragma once

#include <string>
#include <utility>

#include "tkit/nat.hpp"
#include "tkit/normalize.hpp"
#include "tkit/term.hpp"

namespace tkit {

// Exact Cantor pairing on big integers:
//   pair(x, y) = floor((x(x+3) + y(y+1) + 2xy) / 2),
// a bijection N x N -> N.  Algebraically this is T(x+y) + x with T the
// triangular numbers, which is how it is computed here.
Nat cantor_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> cantor_unpair(const Nat& n);

// The Godel code of a pure closed beta-eta-normal form, computed by
// structural recursion over the term with the subtype list of its type
// supplying the application and lambda tags:
//   variable           -> pair(0, depth of its binder)
//   application C D    -> pair(j, pair(code C, code D)), D of the j-th subtype
//   lambda V. C        -> pair(n+1, code C), n the number of subtypes
Nat encode_oslash(const TermPtr& term);

// Renders a code in nested-pair notation, e.g. <5, <3, <<0, 0>, ...>>>.
std::string oslash_notation(const TermPtr& term);

// Bridges between meta-level codes and object-level numerals.  Materializing
// a unary numeral is linear in its value, so a guard bounds it.
constexpr uint64_t kDefaultNumeralGuard = 1'000'000;
NormalForm numeral_of_code(const Nat& code,
                           uint64_t guard = kDefaultNumeralGuard);
Nat code_of_numeral(const NormalForm& nf);

}  // namespace tkit
