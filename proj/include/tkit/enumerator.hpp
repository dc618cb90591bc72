#pragma once

#include <vector>

#include "tkit/nat.hpp"
#include "tkit/normalize.hpp"
#include "tkit/stdlib.hpp"
#include "tkit/term.hpp"
#include "tkit/type.hpp"

namespace tkit {

// The in-theory enumerator construction for a type tau with subtypes
// tau_1..tau_n (tau_1 = tau):
//
//   u_i = (N->tau_1) -> ... -> (N->tau_n) -> N -> tau_i
//   u   = u_1 x ... x u_n
//   A   : N -> N -> u        the staged decoding table
//   B_i : (N->u) -> N -> u_i dispatch on the head tag of a code
//   J_{j,i} : (N->u) -> N -> u_i   one decoder per (tag, slot); slots with
//             no matching subtype arrow collapse to the constant zero
//   E   : N -> tau           E applied to the code of a pure closed normal
//                            form of type tau yields that normal form
struct EnumeratorBundle {
  TypePtr tau;
  std::vector<TypePtr> subs;      // tau_1..tau_n
  std::vector<TypePtr> upsilon;   // u_1..u_n
  TypePtr upsilon_tuple;          // u (u_1 when n = 1)

  Combinator a_term;
  std::vector<Combinator> b_terms;               // b_terms[i-1] = B_i
  std::vector<std::vector<Combinator>> j_terms;  // j_terms[j][i-1], 0<=j<=n+1
  std::vector<std::vector<bool>> j_degenerate;   // same indexing
  Combinator e_term;
};

EnumeratorBundle build_bundle(const TypePtr& tau);

// T |- A (i+j) j = A i 0, decided by normalization.
bool check_lemma_a(const EnumeratorBundle& bundle, uint64_t i, uint64_t j,
                   const Budget& budget = Budget::for_enumerator());

// normalize(E code); with code the oslash-code of a census term of type tau
// this reproduces that term.
NormalForm apply_enumerator(const EnumeratorBundle& bundle, const Nat& code,
                            const Budget& budget = Budget::for_enumerator(),
                            EvalStats* stats = nullptr,
                            uint64_t numeral_guard = 1'000'000);

}  // namespace tkit
