#include "tkit/codec.hpp"

#include "tkit/error.hpp"
#include "tkit/meta_nf.hpp"

namespace tkit {

Nat cantor_pair(const Nat& x, const Nat& y) {
  // (x(x+3) + y(y+1) + 2xy) / 2  ==  s(s+1)/2 + x  with  s = x + y
  Nat s = x + y;
  Nat t = Nat::divmod(s * (s + Nat(1)), Nat(2)).first;
  return t + x;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& n) {
  // find the largest s with s(s+1)/2 <= n, then x = n - s(s+1)/2, y = s - x
  if (n.is_zero()) return {Nat(), Nat()};
  Nat s = (n * Nat(8) + Nat(1)).isqrt();
  --s;
  s = Nat::divmod(s, Nat(2)).first;
  auto tri = [](const Nat& v) {
    return Nat::divmod(v * (v + Nat(1)), Nat(2)).first;
  };
  while (tri(s + Nat(1)) <= n) ++s;
  while (tri(s) > n) --s;
  Nat x = n.monus(tri(s));
  Nat y = s.monus(x);
  return {std::move(x), std::move(y)};
}

namespace {

struct OslashEncoder {
  std::vector<TypePtr> subs;  // subtypes of the root type, 1-based via +1
  Nat lambda_tag;             // n + 1

  // per-binder: (binder type, depth of the lambda occurrence)
  std::vector<std::pair<TypePtr, Nat>> binders;

  Nat encode(const TermPtr& t, const Nat& depth) {
    switch (t->kind) {
      case TermKind::Var: {
        if (t->var >= binders.size())
          throw InvariantError("oslash encoding hit a free variable");
        return cantor_pair(Nat(),
                           binders[binders.size() - 1 - t->var].second);
      }
      case TermKind::Lam: {
        binders.emplace_back(t->type, depth);
        Nat body = encode(t->sub1, depth + Nat(1));
        binders.pop_back();
        return cantor_pair(lambda_tag, body);
      }
      case TermKind::App: {
        TypePtr arg_type = argument_type(t->sub2);
        size_t j = subtype_index(subs, arg_type);
        if (j == 0)
          throw InvariantError(
              "argument type is not a subtype of the root type: " +
              print_type(arg_type));
        Nat c = encode(t->sub1, depth + Nat(1));
        Nat d = encode(t->sub2, depth + Nat(1));
        return cantor_pair(Nat(j), cantor_pair(c, d));
      }
      default:
        throw InvariantError("oslash encoding hit a constant");
    }
  }

  TypePtr argument_type(const TermPtr& t) {
    TypingContext ctx;
    for (const auto& [ty, d] : binders) ctx.push("", ty);
    return infer_type(ctx, t);
  }
};

OslashEncoder make_encoder(const TermPtr& term) {
  if (!is_pure_closed_nf(term))
    throw InputError(
        "oslash encoding requires a pure closed beta-eta-normal form, got " +
        print_term(term));
  TypePtr type = infer_type(term);
  OslashEncoder enc;
  enc.subs = subtypes(type);
  enc.lambda_tag = Nat(enc.subs.size() + 1);
  return enc;
}

}  // namespace

Nat encode_oslash(const TermPtr& term) {
  OslashEncoder enc = make_encoder(term);
  return enc.encode(term, Nat());
}

namespace {

// re-walk the structure to pretty-print the nested pairs
std::string notate(const TermPtr& t, OslashEncoder& enc, const Nat& depth) {
  switch (t->kind) {
    case TermKind::Var: {
      const Nat& d = enc.binders[enc.binders.size() - 1 - t->var].second;
      return "<0, " + d.to_string() + ">";
    }
    case TermKind::Lam: {
      enc.binders.emplace_back(t->type, depth);
      std::string body = notate(t->sub1, enc, depth + Nat(1));
      enc.binders.pop_back();
      return "<" + enc.lambda_tag.to_string() + ", " + body + ">";
    }
    case TermKind::App: {
      size_t j = subtype_index(enc.subs, enc.argument_type(t->sub2));
      std::string c = notate(t->sub1, enc, depth + Nat(1));
      std::string d = notate(t->sub2, enc, depth + Nat(1));
      return "<" + std::to_string(j) + ", <" + c + ", " + d + ">>";
    }
    default:
      throw InvariantError("oslash notation hit a constant");
  }
}

}  // namespace

std::string oslash_notation(const TermPtr& term) {
  OslashEncoder enc = make_encoder(term);
  return notate(term, enc, Nat());
}

NormalForm numeral_of_code(const Nat& code, uint64_t guard) {
  if (code > Nat(guard))
    throw GuardError("numeral guard exceeded: materializing " +
                     code.to_string() + " successor nodes (guard " +
                     std::to_string(guard) + ")");
  return numeral(code);
}

Nat code_of_numeral(const NormalForm& nf) { return eval_numeral(nf); }

}  // namespace tkit
