#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tkit/nat.hpp"
#include "tkit/term.hpp"
#include "tkit/type.hpp"

namespace tkit {

// Resource guards for a single normalization.  The theory is strongly
// normalizing, so these only bound desk-scale runs, they do not affect
// results.  `accel` enables the verified fast path for recognized closed
// arithmetic combinators applied to closed numerals; disable it to force
// pure axiom-by-axiom evaluation.
struct Budget {
  uint64_t max_steps = 100'000'000;
  uint64_t max_nodes = 10'000'000;
  bool accel = true;

  static Budget for_enumerator() {
    Budget b;
    b.max_steps = 1'000'000'000;
    return b;
  }
};

struct EvalStats {
  uint64_t steps = 0;       // beta, eta and recursor firings (one per event)
  uint64_t nodes = 0;       // allocated values and read-back term nodes
  uint64_t delta_hits = 0;  // accelerated combinator applications
};

// A term certified beta-eta-recursor normal, together with its type.
struct NormalForm {
  TermPtr term;
  TypePtr type;
};

NormalForm normalize(const TermPtr& t, const Budget& budget = {},
                     const TypingContext& ctx = {},
                     EvalStats* stats = nullptr);

// Decides provable equality by comparing normal forms up to alpha.
bool equal_terms(const TermPtr& a, const TermPtr& b, const Budget& budget = {},
                 const TypingContext& ctx = {});

// The n with nf = S^n 0; the normal form must be closed and of type N.
Nat eval_numeral(const NormalForm& nf);

// The numeral S^n 0 as a normal form.
NormalForm numeral(const Nat& n);

// Single-pass bottom-up eta contraction; input must be beta/recursor normal.
TermPtr eta_contract(const TermPtr& t);

// Reference implementation: a naive leftmost-outermost term rewriter with
// capture-avoiding substitution.  Slow but independent of the evaluator;
// kept as the differential-testing oracle.
TermPtr normalize_naive(const TermPtr& t, uint64_t max_steps = 1'000'000,
                        uint64_t* steps_out = nullptr);

// --- accelerated combinators -----------------------------------------------

// Identities of combinators whose closed-numeral applications the evaluator
// may compute directly.  Each entry is backed by an equation of the object
// theory; the test suite re-derives every entry against pure axiom stepping.
enum class DeltaFn {
  Pred,
  Add,
  Mult,
  Monus,
  Cond,
  Div,
  CantorPair,    // P0
  CantorFirst,   // P1
  CantorSecond,  // P2
};

struct DeltaRule {
  DeltaFn fn;
  int arity;
  TermPtr source;  // the closed combinator term this rule recognizes
  std::string name;
};

class DeltaRegistry {
 public:
  void add(DeltaFn fn, int arity, TermPtr source, std::string name);
  const DeltaRule* lookup(const TermPtr& t) const;
  const std::vector<DeltaRule>& rules() const { return rules_; }
  uint64_t min_size() const { return min_size_; }
  uint64_t max_size() const { return max_size_; }

 private:
  std::vector<DeltaRule> rules_;
  std::unordered_map<uint64_t, std::vector<size_t>> by_hash_;
  uint64_t min_size_ = UINT64_MAX;
  uint64_t max_size_ = 0;
};

// Registry of recognized combinators; populated from the combinator library
// on first use (see stdlib.cpp).
const DeltaRegistry& delta_registry();

}  // namespace tkit
