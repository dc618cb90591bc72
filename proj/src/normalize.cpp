#include "tkit/normalize.hpp"

#include <cassert>
#include <pthread.h>
#include <functional>
#include <memory>
#include <utility>

#include "tkit/codec.hpp"
#include "tkit/error.hpp"

namespace tkit {

void DeltaRegistry::add(DeltaFn fn, int arity, TermPtr source,
                        std::string name) {
  if (!is_closed(source))
    throw InvariantError("delta rule source must be closed: " + name);
  min_size_ = std::min(min_size_, source->size);
  max_size_ = std::max(max_size_, source->size);
  by_hash_[source->hash].push_back(rules_.size());
  rules_.push_back(DeltaRule{fn, arity, std::move(source), std::move(name)});
}

const DeltaRule* DeltaRegistry::lookup(const TermPtr& t) const {
  if (t->size < min_size_ || t->size > max_size_ || t->pure) return nullptr;
  auto it = by_hash_.find(t->hash);
  if (it == by_hash_.end()) return nullptr;
  for (size_t idx : it->second) {
    if (alpha_eq(rules_[idx].source, t)) return &rules_[idx];
  }
  return nullptr;
}

namespace {

// ---------------------------------------------------------------------------
// Values

struct Value;
using ValPtr = std::shared_ptr<const Value>;

struct Thunk {
  std::function<ValPtr()> compute;
  ValPtr value;
};
using ThunkPtr = std::shared_ptr<Thunk>;

struct EnvNode;
using EnvPtr = std::shared_ptr<const EnvNode>;
struct EnvNode {
  ThunkPtr head;
  EnvPtr tail;
};

EnvPtr env_push(EnvPtr env, ThunkPtr t) {
  auto node = std::make_shared<EnvNode>();
  node->head = std::move(t);
  node->tail = std::move(env);
  return node;
}

const ThunkPtr& env_lookup(const EnvPtr& env, uint32_t index) {
  const EnvNode* cur = env.get();
  for (uint32_t i = 0; i < index; ++i) {
    if (!cur) throw InvariantError("environment lookup out of range");
    cur = cur->tail.get();
  }
  if (!cur) throw InvariantError("environment lookup out of range");
  return cur->head;
}

enum class VK : uint8_t { Num, Lam, Succ, RecPartial, NeutralVar, StuckRec, Prim };

struct Value {
  VK k;

  // Num: S^num(tail); a null tail bottoms out at zero.
  Nat num;
  ValPtr tail;

  // Lam
  TypePtr bty;
  TermPtr body;
  EnvPtr env;
  std::string hint;

  // RecPartial / StuckRec
  TypePtr rty;
  std::vector<ThunkPtr> rec_args;  // 0..2 collected arguments
  ValPtr stuck;                    // StuckRec: the non-numeral third argument

  // NeutralVar
  int level = -1;

  // NeutralVar / StuckRec: further applied arguments
  std::vector<ThunkPtr> spine;

  // Prim
  const DeltaRule* rule = nullptr;
  std::vector<ThunkPtr> prim_args;
};

// Evaluation recursion can reach a few frames per recursor layer, so long
// chains (huge numerals with acceleration disabled) need room: normalize
// runs on a worker thread with a 1 GiB stack reservation, and this counter
// bounds nesting well inside it so exhaustion stays a clean error.
constexpr uint64_t kMaxEvalDepth = 2'000'000;

struct Evaluator {
  Budget budget;
  EvalStats stats;
  uint64_t depth = 0;
  const Term* suppress = nullptr;
  std::unordered_map<const DeltaRule*, ValPtr> devolved;
  const DeltaRegistry* registry = nullptr;

  explicit Evaluator(const Budget& b) : budget(b) {
    if (budget.accel) registry = &delta_registry();
  }

  struct DepthGuard {
    Evaluator& ev;
    explicit DepthGuard(Evaluator& e) : ev(e) {
      if (++ev.depth > kMaxEvalDepth)
        throw BudgetError(ev.stats.steps, ev.stats.nodes,
                          "evaluation nesting exceeded " +
                              std::to_string(kMaxEvalDepth) +
                              " (steps so far: " +
                              std::to_string(ev.stats.steps) + ")");
    }
    ~DepthGuard() { --ev.depth; }
  };

  void count_step() {
    if (++stats.steps > budget.max_steps)
      throw BudgetError(stats.steps, stats.nodes,
                        "step budget exhausted after " +
                            std::to_string(stats.steps) + " steps, " +
                            std::to_string(stats.nodes) + " nodes");
  }

  // Counts materialized term nodes during readback; transient evaluator
  // values are bounded by the step budget instead.
  void count_nodes(uint64_t n = 1) {
    stats.nodes += n;
    if (stats.nodes > budget.max_nodes)
      throw BudgetError(stats.steps, stats.nodes,
                        "node budget exhausted after " +
                            std::to_string(stats.steps) + " steps, " +
                            std::to_string(stats.nodes) + " nodes");
  }

  std::shared_ptr<Value> make(VK k) {
    auto v = std::make_shared<Value>();
    v->k = k;
    return v;
  }

  ValPtr make_num(Nat n, ValPtr tail) {
    // collapse S^a(S^b(x)) layers
    if (tail && tail->k == VK::Num) {
      n += tail->num;
      tail = tail->tail;
    }
    if (n.is_zero() && tail) return tail;
    if (n.is_zero()) {
      thread_local const ValPtr zero = [] {
        auto v = std::make_shared<Value>();
        v->k = VK::Num;
        return ValPtr(v);
      }();
      return zero;
    }
    auto v = make(VK::Num);
    v->num = std::move(n);
    v->tail = std::move(tail);
    return v;
  }

  ThunkPtr ready(ValPtr v) {
    auto t = std::make_shared<Thunk>();
    t->value = std::move(v);
    return t;
  }

  ThunkPtr delay(TermPtr term, EnvPtr env) {
    auto t = std::make_shared<Thunk>();
    t->compute = [this, term = std::move(term), env = std::move(env)] {
      return eval(term, env);
    };
    return t;
  }

  ValPtr force(const ThunkPtr& t) {
    if (t->value) return t->value;
    DepthGuard guard(*this);
    t->value = t->compute();
    t->compute = nullptr;
    return t->value;
  }

  // --- evaluation ----------------------------------------------------------

  ValPtr eval(const TermPtr& t, const EnvPtr& env) {
    DepthGuard guard(*this);
    switch (t->kind) {
      case TermKind::Var:
        return force(env_lookup(env, t->var));
      case TermKind::Zero:
        return make_num(Nat(), nullptr);
      case TermKind::Succ: {
        auto v = make(VK::Succ);
        return v;
      }
      case TermKind::Rec: {
        auto v = make(VK::RecPartial);
        v->rty = t->type;
        return v;
      }
      case TermKind::Lam: {
        if (const DeltaRule* rule = recognize(t)) return make_prim(rule);
        auto v = make(VK::Lam);
        v->bty = t->type;
        v->body = t->sub1;
        v->env = env;
        v->hint = t->hint;
        return v;
      }
      case TermKind::App: {
        if (const DeltaRule* rule = recognize(t)) return make_prim(rule);
        if (t->sub1->kind == TermKind::Succ) {
          // absorb successor chains iteratively
          auto [n, core] = split_succ_chain(t);
          return make_num(std::move(n), eval(core, env));
        }
        ValPtr fun = eval(t->sub1, env);
        return apply(fun, delay(t->sub2, env));
      }
    }
    throw InvariantError("unreachable term kind in eval");
  }

  const DeltaRule* recognize(const TermPtr& t) const {
    if (!registry || t->free_above != 0 || t.get() == suppress) return nullptr;
    return registry->lookup(t);
  }

  ValPtr make_prim(const DeltaRule* rule) {
    auto v = make(VK::Prim);
    v->rule = rule;
    return v;
  }

  ValPtr apply(const ValPtr& fun, ThunkPtr arg) {
    DepthGuard guard(*this);
    switch (fun->k) {
      case VK::Lam:
        count_step();  // beta
        return eval(fun->body, env_push(fun->env, std::move(arg)));
      case VK::Succ:
        return make_num(Nat(1), force(arg));
      case VK::RecPartial: {
        if (fun->rec_args.size() < 2) {
          auto v = make(VK::RecPartial);
          v->rty = fun->rty;
          v->rec_args = fun->rec_args;
          v->rec_args.push_back(std::move(arg));
          return v;
        }
        return fire_rec(fun->rty, fun->rec_args[0], fun->rec_args[1],
                        force(arg));
      }
      case VK::NeutralVar:
      case VK::StuckRec: {
        auto v = make(fun->k);
        *v = *fun;
        v->spine.push_back(std::move(arg));
        return v;
      }
      case VK::Prim: {
        auto args = fun->prim_args;
        args.push_back(std::move(arg));
        if (args.size() < static_cast<size_t>(fun->rule->arity)) {
          auto v = make(VK::Prim);
          v->rule = fun->rule;
          v->prim_args = std::move(args);
          return v;
        }
        return fire_prim(fun->rule, args);
      }
      case VK::Num:
        throw InvariantError("application of a numeral value (ill-typed)");
    }
    throw InvariantError("unreachable value kind in apply");
  }

  ValPtr fire_rec(const TypePtr& rty, const ThunkPtr& base,
                  const ThunkPtr& step, const ValPtr& third) {
    // make_num collapses S^0(x) to x, so a zero Num never carries a tail
    if (third->k == VK::Num) {
      if (third->num.is_zero()) {
        count_step();  // R A B 0 = A
        return force(base);
      }
      count_step();  // R A B (S C) = B (R A B C) C
      Nat pred_n = third->num;
      --pred_n;
      ValPtr pred = make_num(std::move(pred_n), third->tail);
      auto rec_thunk = std::make_shared<Thunk>();
      rec_thunk->compute = [this, rty, base, step, pred] {
        return fire_rec(rty, base, step, pred);
      };
      return apply(apply(force(step), std::move(rec_thunk)), ready(pred));
    }
    return make_stuck(rty, base, step, third);
  }

  ValPtr make_stuck(const TypePtr& rty, ThunkPtr base, ThunkPtr step,
                    ValPtr third) {
    auto v = make(VK::StuckRec);
    v->rty = rty;
    v->rec_args = {std::move(base), std::move(step)};
    v->stuck = std::move(third);
    return v;
  }

  // --- accelerated combinators ---------------------------------------------

  static const Nat* closed_numeral(const ValPtr& v) {
    if (v->k == VK::Num && !v->tail) return &v->num;
    return nullptr;
  }

  ValPtr fire_prim(const DeltaRule* rule, const std::vector<ThunkPtr>& args) {
    if (std::optional<ValPtr> fast = try_delta(rule, args)) {
      ++stats.delta_hits;
      count_step();
      return *fast;
    }
    // Fall back to the combinator's own term, with recognition of this
    // exact source node suppressed so the fallback actually unfolds.
    ValPtr fn = devolve(rule);
    for (const auto& a : args) fn = apply(fn, a);
    return fn;
  }

  ValPtr devolve(const DeltaRule* rule) {
    auto it = devolved.find(rule);
    if (it != devolved.end()) return it->second;
    const Term* saved = suppress;
    suppress = rule->source.get();
    ValPtr v = eval(rule->source, nullptr);
    suppress = saved;
    devolved.emplace(rule, v);
    return v;
  }

  std::optional<ValPtr> try_delta(const DeltaRule* rule,
                                  const std::vector<ThunkPtr>& args) {
    auto num = [&](size_t i) { return closed_numeral(force(args[i])); };
    switch (rule->fn) {
      case DeltaFn::Pred: {
        ValPtr v = force(args[0]);
        if (v->k != VK::Num || v->num.is_zero()) return std::nullopt;
        Nat n = v->num;
        --n;
        return make_num(std::move(n), v->tail);
      }
      case DeltaFn::Add: {
        // Add u v = S^v(u) for any value u, closed numeral v
        const Nat* v = num(1);
        if (!v) return std::nullopt;
        return make_num(*v, force(args[0]));
      }
      case DeltaFn::Mult: {
        const Nat* v = num(1);
        if (!v) return std::nullopt;
        if (v->is_zero()) return make_num(Nat(), nullptr);
        const Nat* u = num(0);
        if (!u) return std::nullopt;
        return make_num(*u * *v, nullptr);
      }
      case DeltaFn::Monus: {
        const Nat* v = num(1);
        if (!v) return std::nullopt;
        ValPtr u = force(args[0]);
        if (u->k != VK::Num) return v->is_zero() ? std::optional<ValPtr>(u)
                                                 : std::nullopt;
        if (!u->tail) return make_num(u->num.monus(*v), nullptr);
        if (*v <= u->num) return make_num(u->num.monus(*v), u->tail);
        return std::nullopt;
      }
      case DeltaFn::Cond: {
        const Nat* n = num(2);
        if (!n) return std::nullopt;
        return force(args[n->is_zero() ? 0 : 1]);
      }
      case DeltaFn::Div: {
        const Nat* u = num(0);
        const Nat* v = u ? num(1) : nullptr;
        if (!u || !v) return std::nullopt;
        // Div x 0 = x: every candidate passes the bounded search.
        if (v->is_zero()) return make_num(*u, nullptr);
        return make_num(Nat::divmod(*u, *v).first, nullptr);
      }
      case DeltaFn::CantorPair: {
        const Nat* x = num(0);
        const Nat* y = x ? num(1) : nullptr;
        if (!x || !y) return std::nullopt;
        return make_num(cantor_pair(*x, *y), nullptr);
      }
      case DeltaFn::CantorFirst: {
        const Nat* z = num(0);
        if (!z) return std::nullopt;
        return make_num(cantor_unpair(*z).first, nullptr);
      }
      case DeltaFn::CantorSecond: {
        const Nat* z = num(0);
        if (!z) return std::nullopt;
        return make_num(cantor_unpair(*z).second, nullptr);
      }
    }
    return std::nullopt;
  }

  // --- readback -------------------------------------------------------------

  ValPtr fresh_neutral(uint32_t level) {
    auto v = make(VK::NeutralVar);
    v->level = static_cast<int>(level);
    return v;
  }

  TermPtr readback(const ValPtr& v, uint32_t depth) {
    DepthGuard guard(*this);
    switch (v->k) {
      case VK::Num: {
        if (!v->num.fits_u64())
          throw BudgetError(stats.steps, stats.nodes,
                            "normal form too large to materialize: numeral " +
                                v->num.to_string());
        count_nodes(v->num.to_u64());
        TermPtr core = v->tail ? readback(v->tail, depth) : term_zero();
        for (Nat i; i < v->num; ++i) core = mk_app(term_succ(), core);
        return core;
      }
      case VK::Lam: {
        ThunkPtr fresh = ready(fresh_neutral(depth));
        ValPtr body = eval(v->body, env_push(v->env, std::move(fresh)));
        count_nodes();
        return mk_lam(v->bty, readback(body, depth + 1), v->hint);
      }
      case VK::Succ:
        count_nodes();
        return term_succ();
      case VK::RecPartial: {
        count_nodes();
        TermPtr out = mk_rec(v->rty);
        for (const auto& a : v->rec_args)
          out = mk_app(out, readback(force(a), depth));
        return out;
      }
      case VK::NeutralVar: {
        if (v->level < 0 || static_cast<uint32_t>(v->level) >= depth)
          throw InvariantError("neutral variable escaped its scope");
        count_nodes();
        TermPtr out = mk_var(depth - 1 - static_cast<uint32_t>(v->level));
        for (const auto& a : v->spine)
          out = mk_app(out, readback(force(a), depth));
        return out;
      }
      case VK::StuckRec: {
        count_nodes();
        TermPtr out = mk_rec(v->rty);
        out = mk_app(out, readback(force(v->rec_args[0]), depth));
        out = mk_app(out, readback(force(v->rec_args[1]), depth));
        out = mk_app(out, readback(v->stuck, depth));
        for (const auto& a : v->spine)
          out = mk_app(out, readback(force(a), depth));
        return out;
      }
      case VK::Prim: {
        ValPtr fn = devolve(v->rule);
        for (const auto& a : v->prim_args) fn = apply(fn, a);
        return readback(fn, depth);
      }
    }
    throw InvariantError("unreachable value kind in readback");
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Eta contraction

TermPtr eta_contract(const TermPtr& t) {
  if (t->lam_free) return t;
  switch (t->kind) {
    case TermKind::Lam: {
      TermPtr body = eta_contract(t->sub1);
      if (body->kind == TermKind::App && body->sub2->kind == TermKind::Var &&
          body->sub2->var == 0 && !var_occurs(body->sub1, 0)) {
        return shift_term(body->sub1, -1);
      }
      if (body.get() == t->sub1.get()) return t;
      return mk_lam(t->type, std::move(body), t->hint);
    }
    case TermKind::App: {
      TermPtr fun = eta_contract(t->sub1);
      TermPtr arg = eta_contract(t->sub2);
      if (fun.get() == t->sub1.get() && arg.get() == t->sub2.get()) return t;
      return mk_app(std::move(fun), std::move(arg));
    }
    default:
      return t;
  }
}

// Runs fn on a thread with a large explicit stack reservation; evaluation
// recursion on long recursor chains overflows the default 8 MiB otherwise.
// The reservation is virtual, pages commit only as the walk deepens.
void run_with_large_stack(const std::function<void()>& fn) {
  struct Call {
    const std::function<void()>* fn;
    std::exception_ptr error;
  } call{&fn, nullptr};

  auto trampoline = [](void* raw) -> void* {
    Call* c = static_cast<Call*>(raw);
    try {
      (*c->fn)();
    } catch (...) {
      c->error = std::current_exception();
    }
    return nullptr;
  };

  pthread_t worker;
  bool started = false;
  for (size_t stack_bytes = size_t{4} << 30; stack_bytes >= (size_t{64} << 20);
       stack_bytes >>= 2) {
    pthread_attr_t attr;
    if (pthread_attr_init(&attr) != 0) break;
    bool ok = pthread_attr_setstacksize(&attr, stack_bytes) == 0 &&
              pthread_create(&worker, &attr, trampoline, &call) == 0;
    pthread_attr_destroy(&attr);
    if (ok) {
      started = true;
      break;
    }
  }
  if (!started) throw InvariantError("cannot start the evaluation thread");
  pthread_join(worker, nullptr);
  if (call.error) std::rethrow_exception(call.error);
}

// ---------------------------------------------------------------------------
// Public entry points

NormalForm normalize(const TermPtr& t, const Budget& budget,
                     const TypingContext& ctx, EvalStats* stats) {
  TypePtr type = infer_type(ctx, t);  // also validates the precondition
  Evaluator ev(budget);
  TermPtr out;

  run_with_large_stack([&] {
    EnvPtr env;
    for (size_t level = 0; level < ctx.slots.size(); ++level)
      env = env_push(env,
                     ev.ready(ev.fresh_neutral(static_cast<uint32_t>(level))));
    ValPtr value = ev.eval(t, env);
    out = ev.readback(value, static_cast<uint32_t>(ctx.slots.size()));
  });

  // Eta-contract to a fixed point, then re-check that no redex was exposed.
  while (has_eta_redex(out)) {
    ev.count_step();
    out = eta_contract(out);
  }
  if (has_beta_redex(out) || has_rec_redex(out))
    throw InvariantError("normalization produced a non-normal result");

  if (stats) *stats = ev.stats;
  return NormalForm{std::move(out), std::move(type)};
}

bool equal_terms(const TermPtr& a, const TermPtr& b, const Budget& budget,
                 const TypingContext& ctx) {
  TypePtr ta = infer_type(ctx, a);
  TypePtr tb = infer_type(ctx, b);
  if (!type_equal(ta, tb))
    throw TypeError("equality between distinct types " + print_type(ta) +
                    " and " + print_type(tb));
  NormalForm na = normalize(a, budget, ctx);
  NormalForm nb = normalize(b, budget, ctx);
  return alpha_eq(na.term, nb.term);
}

Nat eval_numeral(const NormalForm& nf) {
  if (!is_closed(nf.term))
    throw InputError("eval_numeral requires a closed normal form");
  if (nf.type->is_arrow)
    throw TypeError("eval_numeral requires type N, got " +
                    print_type(nf.type));
  std::optional<Nat> n = as_numeral(nf.term);
  if (!n)
    throw InvariantError("closed normal form of type N is not a numeral: " +
                         print_term(nf.term));
  return *n;
}

NormalForm numeral(const Nat& n) {
  return NormalForm{numeral_term(n), ground()};
}

// ---------------------------------------------------------------------------
// Naive leftmost-outermost rewriter (reference implementation)

namespace {

// One leftmost-outermost beta or recursor step, or null when none applies.
TermPtr naive_step(const TermPtr& t) {
  if (t->lam_free && t->rec_free) return nullptr;
  switch (t->kind) {
    case TermKind::Lam: {
      TermPtr body = naive_step(t->sub1);
      if (!body) return nullptr;
      return mk_lam(t->type, std::move(body), t->hint);
    }
    case TermKind::App: {
      if (t->sub1->kind == TermKind::Lam)
        return substitute_top(t->sub1->sub1, t->sub2);
      // R[_] A B C with C = 0 or C = S C'
      const TermPtr& f1 = t->sub1;
      if (f1->kind == TermKind::App && f1->sub1->kind == TermKind::App &&
          f1->sub1->sub1->kind == TermKind::Rec) {
        const TermPtr& a = f1->sub1->sub2;
        const TermPtr& b = f1->sub2;
        const TermPtr& c = t->sub2;
        if (c->kind == TermKind::Zero) return a;
        if (c->kind == TermKind::App && c->sub1->kind == TermKind::Succ)
          return mk_app(mk_app(b, mk_app(f1, c->sub2)), c->sub2);
      }
      if (TermPtr fun = naive_step(t->sub1))
        return mk_app(std::move(fun), t->sub2);
      if (TermPtr arg = naive_step(t->sub2)) return mk_app(t->sub1, std::move(arg));
      return nullptr;
    }
    default:
      return nullptr;
  }
}

}  // namespace

TermPtr normalize_naive(const TermPtr& t, uint64_t max_steps,
                        uint64_t* steps_out) {
  TermPtr cur = t;
  uint64_t steps = 0;
  while (TermPtr next = naive_step(cur)) {
    if (++steps > max_steps)
      throw BudgetError(steps, cur->size,
                        "naive rewriter exceeded " +
                            std::to_string(max_steps) + " steps (term size " +
                            std::to_string(cur->size) + ")");
    cur = std::move(next);
  }
  while (has_eta_redex(cur)) {
    ++steps;
    cur = eta_contract(cur);
  }
  if (steps_out) *steps_out = steps;
  return cur;
}

}  // namespace tkit
