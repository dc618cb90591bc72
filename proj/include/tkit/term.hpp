#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tkit/nat.hpp"
#include "tkit/type.hpp"

namespace tkit {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind : uint8_t { Var, Lam, App, Zero, Succ, Rec };

// Lambda terms in de Bruijn form, extended with the constants 0, S and the
// recursor R at every type.  Nodes are immutable and shared; structural
// facts used on hot paths (hash, size, closedness, purity) are cached at
// construction so they cost O(1) afterwards.
//
// Binder name hints are kept for printing only; they take no part in
// equality or hashing, so two alpha-equivalent terms are structurally equal.
struct Term {
  TermKind kind;
  uint32_t var = 0;   // Var: de Bruijn index
  TypePtr type;       // Lam: binder type; Rec: element type
  TermPtr sub1;       // Lam: body; App: function
  TermPtr sub2;       // App: argument
  std::string hint;   // Lam: surface binder name
  uint64_t hash = 0;
  uint64_t size = 1;       // node count
  uint32_t free_above = 0; // 1 + largest free index (0 means closed)
  bool pure = true;        // no 0 / S / R constants anywhere
  bool lam_free = true;    // no lambda anywhere
  bool rec_free = true;    // no recursor anywhere

  // Numeral spines chain through sub2 and can be millions of nodes long;
  // unwinding them iteratively keeps destruction off the call stack.
  ~Term() {
    TermPtr cur = std::move(sub2);
    while (cur && cur.use_count() == 1)
      cur = std::move(const_cast<Term&>(*cur).sub2);
  }
};

TermPtr mk_var(uint32_t index);
TermPtr mk_lam(TypePtr binder, TermPtr body, std::string hint = "");
TermPtr mk_app(TermPtr fun, TermPtr arg);
TermPtr term_zero();
TermPtr term_succ();
TermPtr mk_rec(TypePtr elem);

inline bool is_closed(const TermPtr& t) { return t->free_above == 0; }

bool alpha_eq(const TermPtr& a, const TermPtr& b);

// The numeral term S^n 0.
TermPtr numeral_term(const Nat& n);
// If t = S^n(core), returns (n, core); n may be zero.
std::pair<Nat, TermPtr> split_succ_chain(TermPtr t);
// If t is a closed numeral S^n 0, returns n.
std::optional<Nat> as_numeral(const TermPtr& t);

// Ordered typing context; the last slot is the innermost free variable
// (de Bruijn index 0 at the term root).
struct TypingContext {
  std::vector<std::pair<std::string, TypePtr>> slots;

  TypingContext() = default;
  TypingContext(std::initializer_list<std::pair<std::string, TypePtr>> init);
  void push(std::string name, TypePtr type);
  size_t size() const { return slots.size(); }
};

TypePtr infer_type(const TypingContext& ctx, const TermPtr& t);
inline TypePtr infer_type(const TermPtr& t) { return infer_type({}, t); }

// Maps otherwise-unbound identifiers to closed terms (used by the CLI to
// resolve library combinator names inside expressions).
using NameResolver = std::function<TermPtr(const std::string&)>;

TermPtr parse_term(const std::string& text, const TypingContext& ctx = {},
                   const NameResolver& resolver = nullptr);

// Printing.  Canonical mode ignores name hints and assigns deterministic
// binder names, used for golden files; the default mode prefers hints.
std::string print_term(const TermPtr& t, const TypingContext& ctx = {},
                       bool canonical = false);

// Substitution machinery (used by the reference rewriter and eta pass).
TermPtr shift_term(const TermPtr& t, int64_t delta, uint32_t cutoff = 0);
TermPtr substitute_top(const TermPtr& body, const TermPtr& value);
bool var_occurs(const TermPtr& t, uint32_t index);

// Redex scanners.
bool has_beta_redex(const TermPtr& t);
bool has_eta_redex(const TermPtr& t);
bool has_rec_redex(const TermPtr& t);
inline bool is_beta_eta_rec_normal(const TermPtr& t) {
  return !has_beta_redex(t) && !has_eta_redex(t) && !has_rec_redex(t);
}

// Named-term layer: a convenience representation for building terms
// programmatically and for parsing, converted to de Bruijn afterwards.
struct NTerm;
using NTermPtr = std::shared_ptr<const NTerm>;
struct NTerm {
  enum class K : uint8_t { Var, Lam, App, Zero, Succ, Rec, Splice } k;
  std::string name;   // Var
  TypePtr type;       // Lam, Rec
  NTermPtr a, b;
  TermPtr spliced;    // Splice: an already-built closed term
};

NTermPtr nv(std::string name);
NTermPtr nlam(std::string name, TypePtr type, NTermPtr body);
NTermPtr nlams(const std::vector<std::pair<std::string, TypePtr>>& binders,
               NTermPtr body);
NTermPtr napp(NTermPtr fun, NTermPtr arg);
NTermPtr napps(NTermPtr fun, const std::vector<NTermPtr>& args);
NTermPtr nzero();
NTermPtr nsucc();
NTermPtr nrec(TypePtr elem);
NTermPtr nsplice(TermPtr closed);
NTermPtr nnum(uint64_t n);

TermPtr to_debruijn(const NTermPtr& t, const TypingContext& ctx = {},
                    const NameResolver& resolver = nullptr);

}  // namespace tkit
