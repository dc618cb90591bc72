#pragma once

#include <string>
#include <vector>

#include "tkit/term.hpp"
#include "tkit/type.hpp"

namespace tkit {

// A named closed term together with its checked type.
struct Combinator {
  std::string name;
  TermPtr term;
  TypePtr type;
};

// Arithmetic combinators: Add, Mult, Pred, Monus, Cond, Sum, MaxLe, Div.
const Combinator& arith(const std::string& name);

// Cantor pairing inside the theory: P0 (N->N->N), P1 and P2 (N->N).
const Combinator& cantor(const std::string& name);

// The product type s1->..->sm->t1->..->tn->(N->N->N)->N for
// s = s1->..->sm->N and t = t1->..->tn->N.
TypePtr product_type(const TypePtr& sigma, const TypePtr& tau);

// Curry pairing D0 : s->t->sxt with projections D1, D2.
struct CurryPair {
  Combinator pair;    // D0
  Combinator first;   // D1
  Combinator second;  // D2
};
CurryPair curry_pair(const TypePtr& sigma, const TypePtr& tau);

// Right-nested n-ary tuples {A1,...,Ak} with 1-based projections; the i-th
// projection is a composition of pair projections.  Requires k >= 2.
TypePtr tuple_type(const std::vector<TypePtr>& types);
TermPtr tuple_literal(const std::vector<TypePtr>& types,
                      const std::vector<TermPtr>& elems);
Combinator tuple_projection(const std::vector<TypePtr>& types, size_t i);

// 0_s = \x1...xm. 0 at type s = s1->...->sm->N.
Combinator zero_of_type(const TypePtr& sigma);

// Cons_t : t -> (N->t) -> N -> t and the list sugar
// [A0,...,An] = Cons A0 (Cons A1 (... (Cons An 0_{N->t}))).
Combinator cons(const TypePtr& tau);
TermPtr list_literal(const TypePtr& tau, const std::vector<TermPtr>& elems);

// Higher-type iteration and the recursor recovered from it.
struct IterationPair {
  Combinator iter;           // t -> (t->t) -> N -> t, from R
  Combinator rec_from_iter;  // t -> (t->N->t) -> N -> t, from Iter_{txN}
};
IterationPair iteration(const TypePtr& tau);

// Name lookup used by the CLI; nullptr when unknown.
const Combinator* find_combinator(const std::string& name);
std::vector<std::string> combinator_names();

}  // namespace tkit
