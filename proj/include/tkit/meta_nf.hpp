#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tkit/term.hpp"
#include "tkit/type.hpp"

namespace tkit {

// Shape of a pure beta-eta-normal form; exactly one case applies.
struct NfShape {
  enum class Case : uint8_t { Variable, Lambda, Spine } kind;
  // Lambda
  TypePtr binder_type;
  TermPtr body;
  // Spine: head variable applied to args, first-applied first
  uint32_t head_index = 0;
  std::vector<TermPtr> args;
};

// Classifies a pure beta-eta-normal term (possibly open); throws on
// impure or non-normal input.
NfShape classify(const TermPtr& t);

// True iff t has no constants, no free variables and no beta/eta redex.
bool is_pure_closed_nf(const TermPtr& t);

// Free variables of t, reported as de Bruijn indices relative to the root
// together with their types from ctx.
struct FreeVar {
  uint32_t index;
  std::string name;
  TypePtr type;
};
std::vector<FreeVar> free_vars(const TermPtr& t, const TypingContext& ctx = {});

// Subterm occurrences organized by depth: the root sits at depth 0 and each
// lambda or application edge adds one.  Occurrences are positional; equal
// subterms at different positions are listed separately.
struct Occurrence {
  TermPtr term;
  std::vector<uint8_t> path;  // 0 = lambda body / app function, 1 = app arg
  uint32_t depth;
};
struct DepthIndex {
  std::vector<std::vector<Occurrence>> by_depth;
};
DepthIndex subterm_depths(const TermPtr& t);

// Exhaustive census of the pure closed beta-eta-normal forms of `type` with
// node count at most `max_size`, in deterministic (size, printed form) order.
// Generated terms are eta-short, one representative per beta-eta class.
std::vector<TermPtr> enumerate_pure_closed_nf(const TypePtr& type,
                                              uint32_t max_size);

}  // namespace tkit
