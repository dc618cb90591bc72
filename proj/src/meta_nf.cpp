#include "tkit/meta_nf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tkit/error.hpp"

namespace tkit {

NfShape classify(const TermPtr& t) {
  if (!t->pure)
    throw InputError("classify requires a pure term, got " + print_term(t));
  if (has_beta_redex(t) || has_eta_redex(t))
    throw InputError("classify requires a beta-eta-normal term, got " +
                     print_term(t));
  NfShape shape;
  if (t->kind == TermKind::Var) {
    shape.kind = NfShape::Case::Variable;
    shape.head_index = t->var;
    return shape;
  }
  if (t->kind == TermKind::Lam) {
    shape.kind = NfShape::Case::Lambda;
    shape.binder_type = t->type;
    shape.body = t->sub1;
    return shape;
  }
  // application spine; the head of a pure normal form is a variable
  shape.kind = NfShape::Case::Spine;
  TermPtr cur = t;
  while (cur->kind == TermKind::App) {
    shape.args.push_back(cur->sub2);
    cur = cur->sub1;
  }
  if (cur->kind != TermKind::Var)
    throw InvariantError("pure normal form with non-variable spine head: " +
                         print_term(t));
  std::reverse(shape.args.begin(), shape.args.end());
  shape.head_index = cur->var;
  return shape;
}

bool is_pure_closed_nf(const TermPtr& t) {
  return t->pure && is_closed(t) && !has_beta_redex(t) && !has_eta_redex(t);
}

namespace {

void collect_free(const TermPtr& t, uint32_t depth,
                  std::set<uint32_t>& out) {
  if (t->free_above <= depth) return;
  switch (t->kind) {
    case TermKind::Var:
      if (t->var >= depth) out.insert(t->var - depth);
      break;
    case TermKind::Lam:
      collect_free(t->sub1, depth + 1, out);
      break;
    case TermKind::App:
      collect_free(t->sub1, depth, out);
      collect_free(t->sub2, depth, out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<FreeVar> free_vars(const TermPtr& t, const TypingContext& ctx) {
  std::set<uint32_t> indices;
  collect_free(t, 0, indices);
  std::vector<FreeVar> out;
  for (uint32_t index : indices) {
    FreeVar fv;
    fv.index = index;
    if (index < ctx.slots.size()) {
      const auto& slot = ctx.slots[ctx.slots.size() - 1 - index];
      fv.name = slot.first;
      fv.type = slot.second;
    }
    out.push_back(std::move(fv));
  }
  return out;
}

namespace {

void walk_depths(const TermPtr& t, std::vector<uint8_t>& path, uint32_t depth,
                 DepthIndex& index) {
  if (index.by_depth.size() <= depth) index.by_depth.resize(depth + 1);
  index.by_depth[depth].push_back(Occurrence{t, path, depth});
  switch (t->kind) {
    case TermKind::Lam:
      path.push_back(0);
      walk_depths(t->sub1, path, depth + 1, index);
      path.pop_back();
      break;
    case TermKind::App:
      path.push_back(0);
      walk_depths(t->sub1, path, depth + 1, index);
      path.pop_back();
      path.push_back(1);
      walk_depths(t->sub2, path, depth + 1, index);
      path.pop_back();
      break;
    default:
      break;
  }
}

}  // namespace

DepthIndex subterm_depths(const TermPtr& t) {
  DepthIndex index;
  std::vector<uint8_t> path;
  walk_depths(t, path, 0, index);
  return index;
}

// ---------------------------------------------------------------------------
// Census generation
//
// The normal-form grammar is read as a production system: a normal form of
// type tau in a context is a variable, a lambda (when tau is an arrow), or a
// free variable applied to normal arguments.  Eta-short representatives only:
// a lambda whose body applies a 0-free function to the bound variable is
// dropped, its contractum is generated at a smaller size.

namespace {

struct CensusGen {
  // context: binder types, innermost last
  std::vector<TypePtr> binders;

  std::vector<TermPtr> generate(const TypePtr& type, uint32_t size_cap) {
    std::vector<TermPtr> out;
    if (size_cap == 0) return out;

    // variables of the requested type
    if (size_cap >= 1) {
      for (size_t i = 0; i < binders.size(); ++i) {
        uint32_t index = static_cast<uint32_t>(binders.size() - 1 - i);
        if (type_equal(binders[i], type)) out.push_back(mk_var(index));
      }
    }

    // lambda production
    if (type->is_arrow && size_cap >= 2) {
      binders.push_back(type->dom);
      for (const TermPtr& body : generate(type->cod, size_cap - 1)) {
        // eta-short: skip \x. M x with x not free in M
        if (body->kind == TermKind::App && body->sub2->kind == TermKind::Var &&
            body->sub2->var == 0 && !var_occurs(body->sub1, 0))
          continue;
        out.push_back(mk_lam(type->dom, body));
      }
      binders.pop_back();
    }

    // spine production: a variable applied to one or more normal arguments,
    // emitted at every arrow suffix of the head type that matches
    for (size_t i = 0; i < binders.size(); ++i) {
      uint32_t index = static_cast<uint32_t>(binders.size() - 1 - i);
      std::vector<TypePtr> arg_types;
      TypePtr cur = binders[i];
      while (cur->is_arrow) {
        arg_types.push_back(cur->dom);
        cur = cur->cod;
        if (!type_equal(cur, type)) continue;
        uint32_t spine_nodes = 1 + static_cast<uint32_t>(arg_types.size());
        if (size_cap > spine_nodes)
          emit_spines(mk_var(index), arg_types, 0, size_cap - spine_nodes,
                      out);
      }
    }
    return out;
  }

  // extend a partial spine with arguments from position `at` on; budget is
  // the node allowance left for the remaining arguments
  void emit_spines(const TermPtr& head, const std::vector<TypePtr>& arg_types,
                   size_t at, uint32_t budget, std::vector<TermPtr>& out) {
    if (at == arg_types.size()) {
      out.push_back(head);
      return;
    }
    uint32_t remaining = static_cast<uint32_t>(arg_types.size() - at - 1);
    if (budget < 1 + remaining) return;
    uint32_t arg_cap = budget - remaining;
    for (const TermPtr& arg : generate(arg_types[at], arg_cap)) {
      emit_spines(mk_app(head, arg), arg_types, at + 1,
                  budget - static_cast<uint32_t>(arg->size), out);
    }
  }
};

}  // namespace

std::vector<TermPtr> enumerate_pure_closed_nf(const TypePtr& type,
                                              uint32_t max_size) {
  CensusGen gen;
  std::vector<TermPtr> all = gen.generate(type, max_size);

  // dedupe up to alpha and order deterministically
  std::map<std::pair<uint64_t, std::string>, TermPtr> ordered;
  for (const TermPtr& t : all) {
    if (!is_closed(t)) continue;
    ordered.emplace(std::make_pair(t->size, print_term(t, {}, true)), t);
  }
  std::vector<TermPtr> out;
  out.reserve(ordered.size());
  for (auto& [key, term] : ordered) out.push_back(std::move(term));
  return out;
}

}  // namespace tkit
