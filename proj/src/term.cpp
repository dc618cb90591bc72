#include "tkit/term.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "tkit/error.hpp"

namespace tkit {

namespace {

uint64_t mix3(uint64_t a, uint64_t b, uint64_t c) {
  uint64_t h = a * 0x9e3779b97f4a7c15ULL;
  h ^= b + 0x9e3779b97f4a7c15ULL + (h << 13) + (h >> 7);
  h ^= c + 0xc2b2ae3d27d4eb4fULL + (h << 9) + (h >> 3);
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 32;
  return h;
}

constexpr uint64_t kTagVar = 0xa1, kTagLam = 0xa2, kTagApp = 0xa3,
                   kTagZero = 0xa4, kTagSucc = 0xa5, kTagRec = 0xa6;

}  // namespace

TermPtr mk_var(uint32_t index) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->var = index;
  t->hash = mix3(kTagVar, index, 0);
  t->free_above = index + 1;
  return t;
}

TermPtr mk_lam(TypePtr binder, TermPtr body, std::string hint) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Lam;
  t->hash = mix3(kTagLam, binder->hash, body->hash);
  t->size = 1 + body->size;
  t->free_above = body->free_above > 0 ? body->free_above - 1 : 0;
  t->pure = body->pure;
  t->lam_free = false;
  t->rec_free = body->rec_free;
  t->type = std::move(binder);
  t->sub1 = std::move(body);
  t->hint = std::move(hint);
  return t;
}

TermPtr mk_app(TermPtr fun, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::App;
  t->hash = mix3(kTagApp, fun->hash, arg->hash);
  t->size = 1 + fun->size + arg->size;
  t->free_above = std::max(fun->free_above, arg->free_above);
  t->pure = fun->pure && arg->pure;
  t->lam_free = fun->lam_free && arg->lam_free;
  t->rec_free = fun->rec_free && arg->rec_free;
  t->sub1 = std::move(fun);
  t->sub2 = std::move(arg);
  return t;
}

// Thread-local singletons: the nodes are immutable and equality is
// structural, but sharing one control block across worker threads would
// bounce its reference count between cores on every numeral operation.
TermPtr term_zero() {
  thread_local const TermPtr z = [] {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Zero;
    t->hash = mix3(kTagZero, 0, 0);
    t->pure = false;
    return t;
  }();
  return z;
}

TermPtr term_succ() {
  thread_local const TermPtr s = [] {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Succ;
    t->hash = mix3(kTagSucc, 0, 0);
    t->pure = false;
    return t;
  }();
  return s;
}

TermPtr mk_rec(TypePtr elem) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Rec;
  t->hash = mix3(kTagRec, elem->hash, 0);
  t->pure = false;
  t->rec_free = false;
  t->type = std::move(elem);
  return t;
}

std::pair<Nat, TermPtr> split_succ_chain(TermPtr t) {
  Nat n;
  while (t->kind == TermKind::App && t->sub1->kind == TermKind::Succ) {
    ++n;
    t = t->sub2;
  }
  return {std::move(n), std::move(t)};
}

TermPtr numeral_term(const Nat& n) {
  TermPtr t = term_zero();
  for (Nat i; i < n; ++i) t = mk_app(term_succ(), t);
  return t;
}

std::optional<Nat> as_numeral(const TermPtr& t) {
  auto [n, core] = split_succ_chain(t);
  if (core->kind == TermKind::Zero) return n;
  return std::nullopt;
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size ||
      a->free_above != b->free_above)
    return false;
  switch (a->kind) {
    case TermKind::Var:
      return a->var == b->var;
    case TermKind::Zero:
    case TermKind::Succ:
      return true;
    case TermKind::Rec:
      return type_equal(a->type, b->type);
    case TermKind::Lam:
      return type_equal(a->type, b->type) && alpha_eq(a->sub1, b->sub1);
    case TermKind::App: {
      // Walk successor chains iteratively so large numerals do not recurse.
      if (a->sub1->kind == TermKind::Succ && b->sub1->kind == TermKind::Succ) {
        auto [na, ca] = split_succ_chain(a);
        auto [nb, cb] = split_succ_chain(b);
        return na == nb && alpha_eq(ca, cb);
      }
      return alpha_eq(a->sub1, b->sub1) && alpha_eq(a->sub2, b->sub2);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Typing

TypingContext::TypingContext(
    std::initializer_list<std::pair<std::string, TypePtr>> init)
    : slots(init) {}

void TypingContext::push(std::string name, TypePtr type) {
  slots.emplace_back(std::move(name), std::move(type));
}

namespace {

struct Inferer {
  const TypingContext& ctx;
  std::vector<std::pair<std::string, TypePtr>> binders;

  TypePtr var_type(uint32_t index, const TermPtr& at) {
    if (index < binders.size())
      return binders[binders.size() - 1 - index].second;
    uint32_t beyond = index - static_cast<uint32_t>(binders.size());
    if (beyond < ctx.slots.size())
      return ctx.slots[ctx.slots.size() - 1 - beyond].second;
    throw UnboundVariableError("unbound variable (index " +
                               std::to_string(index) + ") in " + describe(at));
  }

  std::string describe(const TermPtr& t) {
    TypingContext names;
    for (const auto& s : ctx.slots) names.slots.push_back(s);
    for (const auto& b : binders) names.slots.push_back(b);
    return print_term(t, names);
  }

  TypePtr infer(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Var:
        return var_type(t->var, t);
      case TermKind::Zero:
        return ground();
      case TermKind::Succ:
        return arrow(ground(), ground());
      case TermKind::Rec: {
        // R_t : t -> (t -> N -> t) -> N -> t
        TypePtr tau = t->type;
        return arrow(tau, arrow(arrow(tau, arrow(ground(), tau)),
                                arrow(ground(), tau)));
      }
      case TermKind::Lam: {
        binders.emplace_back(t->hint, t->type);
        TypePtr body = infer(t->sub1);
        binders.pop_back();
        return arrow(t->type, body);
      }
      case TermKind::App: {
        if (t->sub1->kind == TermKind::Succ) {
          // successor chains can be very deep; handle them iteratively
          auto [n, core] = split_succ_chain(t);
          TypePtr inner = infer(core);
          if (!type_equal(inner, ground()))
            throw TypeError("successor applied to non-numeral " +
                            describe(core) + " of type " + print_type(inner));
          return ground();
        }
        TypePtr fun = infer(t->sub1);
        TypePtr arg = infer(t->sub2);
        if (!fun->is_arrow)
          throw TypeError("cannot apply " + describe(t->sub1) + " of type " +
                          print_type(fun) + " to an argument");
        if (!type_equal(fun->dom, arg))
          throw TypeError("type mismatch in application: " +
                          describe(t->sub1) + " expects " +
                          print_type(fun->dom) + " but " + describe(t->sub2) +
                          " has type " + print_type(arg));
        return fun->cod;
      }
    }
    throw InvariantError("unreachable term kind");
  }
};

}  // namespace

TypePtr infer_type(const TypingContext& ctx, const TermPtr& t) {
  Inferer inf{ctx, {}};
  return inf.infer(t);
}

// ---------------------------------------------------------------------------
// Substitution and redex scanning

TermPtr shift_term(const TermPtr& t, int64_t delta, uint32_t cutoff) {
  if (t->free_above <= cutoff || delta == 0) return t;
  switch (t->kind) {
    case TermKind::Var: {
      if (t->var < cutoff) return t;
      int64_t idx = static_cast<int64_t>(t->var) + delta;
      assert(idx >= 0);
      return mk_var(static_cast<uint32_t>(idx));
    }
    case TermKind::Lam:
      return mk_lam(t->type, shift_term(t->sub1, delta, cutoff + 1), t->hint);
    case TermKind::App:
      return mk_app(shift_term(t->sub1, delta, cutoff),
                    shift_term(t->sub2, delta, cutoff));
    default:
      return t;
  }
}

namespace {

TermPtr subst(const TermPtr& t, uint32_t j, const TermPtr& value) {
  if (t->free_above <= j) return t;  // j and above are untouched
  switch (t->kind) {
    case TermKind::Var:
      if (t->var == j) return shift_term(value, static_cast<int64_t>(j));
      if (t->var > j) return mk_var(t->var - 1);
      return t;
    case TermKind::Lam:
      return mk_lam(t->type, subst(t->sub1, j + 1, value), t->hint);
    case TermKind::App:
      return mk_app(subst(t->sub1, j, value), subst(t->sub2, j, value));
    default:
      return t;
  }
}

}  // namespace

TermPtr substitute_top(const TermPtr& body, const TermPtr& value) {
  return subst(body, 0, value);
}

bool var_occurs(const TermPtr& t, uint32_t index) {
  if (t->free_above <= index) return false;
  switch (t->kind) {
    case TermKind::Var:
      return t->var == index;
    case TermKind::Lam:
      return var_occurs(t->sub1, index + 1);
    case TermKind::App:
      return var_occurs(t->sub1, index) || var_occurs(t->sub2, index);
    default:
      return false;
  }
}

bool has_beta_redex(const TermPtr& t) {
  if (t->lam_free) return false;
  switch (t->kind) {
    case TermKind::Lam:
      return has_beta_redex(t->sub1);
    case TermKind::App:
      if (t->sub1->kind == TermKind::Lam) return true;
      return has_beta_redex(t->sub1) || has_beta_redex(t->sub2);
    default:
      return false;
  }
}

bool has_eta_redex(const TermPtr& t) {
  if (t->lam_free) return false;
  switch (t->kind) {
    case TermKind::Lam:
      if (t->sub1->kind == TermKind::App &&
          t->sub1->sub2->kind == TermKind::Var && t->sub1->sub2->var == 0 &&
          !var_occurs(t->sub1->sub1, 0))
        return true;
      return has_eta_redex(t->sub1);
    case TermKind::App:
      return has_eta_redex(t->sub1) || has_eta_redex(t->sub2);
    default:
      return false;
  }
}

bool has_rec_redex(const TermPtr& t) {
  if (t->rec_free) return false;
  switch (t->kind) {
    case TermKind::Lam:
      return has_rec_redex(t->sub1);
    case TermKind::App: {
      // match R[_] A B C with C = 0 or C = S _
      const Term* f1 = t->sub1.get();
      if (f1->kind == TermKind::App && f1->sub1->kind == TermKind::App &&
          f1->sub1->sub1->kind == TermKind::Rec) {
        const TermPtr& third = t->sub2;
        if (third->kind == TermKind::Zero ||
            (third->kind == TermKind::App &&
             third->sub1->kind == TermKind::Succ))
          return true;
      }
      return has_rec_redex(t->sub1) || has_rec_redex(t->sub2);
    }
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Named-term construction

NTermPtr nv(std::string name) {
  auto t = std::make_shared<NTerm>();
  t->k = NTerm::K::Var;
  t->name = std::move(name);
  return t;
}

NTermPtr nlam(std::string name, TypePtr type, NTermPtr body) {
  auto t = std::make_shared<NTerm>();
  t->k = NTerm::K::Lam;
  t->name = std::move(name);
  t->type = std::move(type);
  t->a = std::move(body);
  return t;
}

NTermPtr nlams(const std::vector<std::pair<std::string, TypePtr>>& binders,
               NTermPtr body) {
  NTermPtr out = std::move(body);
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    out = nlam(it->first, it->second, std::move(out));
  return out;
}

NTermPtr napp(NTermPtr fun, NTermPtr arg) {
  auto t = std::make_shared<NTerm>();
  t->k = NTerm::K::App;
  t->a = std::move(fun);
  t->b = std::move(arg);
  return t;
}

NTermPtr napps(NTermPtr fun, const std::vector<NTermPtr>& args) {
  NTermPtr out = std::move(fun);
  for (const auto& a : args) out = napp(std::move(out), a);
  return out;
}

NTermPtr nzero() {
  auto t = std::make_shared<NTerm>();
  t->k = NTerm::K::Zero;
  return t;
}

NTermPtr nsucc() {
  auto t = std::make_shared<NTerm>();
  t->k = NTerm::K::Succ;
  return t;
}

NTermPtr nrec(TypePtr elem) {
  auto t = std::make_shared<NTerm>();
  t->k = NTerm::K::Rec;
  t->type = std::move(elem);
  return t;
}

NTermPtr nsplice(TermPtr closed) {
  if (!is_closed(closed))
    throw InvariantError("cannot splice an open term into a named build");
  auto t = std::make_shared<NTerm>();
  t->k = NTerm::K::Splice;
  t->spliced = std::move(closed);
  return t;
}

NTermPtr nnum(uint64_t n) { return nsplice(numeral_term(Nat(n))); }

namespace {

struct DbConverter {
  const TypingContext& ctx;
  const NameResolver& resolver;
  std::vector<std::string> binders;

  TermPtr convert(const NTermPtr& t) {
    switch (t->k) {
      case NTerm::K::Var: {
        for (size_t i = binders.size(); i > 0; --i) {
          if (binders[i - 1] == t->name)
            return mk_var(static_cast<uint32_t>(binders.size() - i));
        }
        for (size_t i = ctx.slots.size(); i > 0; --i) {
          if (ctx.slots[i - 1].first == t->name)
            return mk_var(static_cast<uint32_t>(binders.size() +
                                                (ctx.slots.size() - i)));
        }
        if (resolver) {
          if (TermPtr resolved = resolver(t->name)) return resolved;
        }
        throw UnboundVariableError("unbound identifier: " + t->name);
      }
      case NTerm::K::Lam: {
        binders.push_back(t->name);
        TermPtr body = convert(t->a);
        binders.pop_back();
        return mk_lam(t->type, std::move(body), t->name);
      }
      case NTerm::K::App:
        return mk_app(convert(t->a), convert(t->b));
      case NTerm::K::Zero:
        return term_zero();
      case NTerm::K::Succ:
        return term_succ();
      case NTerm::K::Rec:
        return mk_rec(t->type);
      case NTerm::K::Splice:
        return t->spliced;
    }
    throw InvariantError("unreachable named-term kind");
  }
};

}  // namespace

TermPtr to_debruijn(const NTermPtr& t, const TypingContext& ctx,
                    const NameResolver& resolver) {
  DbConverter conv{ctx, resolver, {}};
  return conv.convert(t);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum class K {
    Lambda,
    Ident,
    Zero,
    Succ,
    Rec,
    Hash,    // #digits, value in nat
    Colon,
    Dot,
    LParen,
    RParen,
    LBrack,
    RBrack,
    End
  } k;
  std::string text;
  Nat number;
  size_t line = 1;
  size_t col = 1;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  size_t line = 1;
  size_t col = 1;

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  Token next() {
    while (pos < src.size()) {
      char c = src[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
        while (pos < src.size() && src[pos] != '\n') advance();
        continue;
      }
      break;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (pos >= src.size()) {
      tok.k = Token::K::End;
      return tok;
    }
    char c = src[pos];
    auto single = [&](Token::K k) {
      tok.k = k;
      advance();
      return tok;
    };
    switch (c) {
      case '\\': return single(Token::K::Lambda);
      case ':': return single(Token::K::Colon);
      case '.': return single(Token::K::Dot);
      case '(': return single(Token::K::LParen);
      case ')': return single(Token::K::RParen);
      case '[': return single(Token::K::LBrack);
      case ']': return single(Token::K::RBrack);
      case '0': return single(Token::K::Zero);
      case '#': {
        advance();
        std::string digits;
        while (pos < src.size() &&
               std::isdigit(static_cast<unsigned char>(src[pos]))) {
          digits.push_back(src[pos]);
          advance();
        }
        if (digits.empty())
          throw ParseError(tok.line, tok.col, "expected digits after '#'");
        tok.k = Token::K::Hash;
        tok.number = Nat::from_string(digits);
        return tok;
      }
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) ||
              src[pos] == '_' || src[pos] == '\'')) {
        name.push_back(src[pos]);
        advance();
      }
      if (name == "S") {
        tok.k = Token::K::Succ;
      } else if (name == "R") {
        tok.k = Token::K::Rec;
      } else {
        tok.k = Token::K::Ident;
        tok.text = std::move(name);
      }
      return tok;
    }
    throw ParseError(tok.line, tok.col,
                     std::string("unexpected character '") + c + "'");
  }
};

struct TermParser {
  std::vector<Token> toks;
  size_t at = 0;

  explicit TermParser(const std::string& src) {
    Lexer lex{src};
    while (true) {
      Token t = lex.next();
      bool end = t.k == Token::K::End;
      toks.push_back(std::move(t));
      if (end) break;
    }
  }

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  }

  void expect(Token::K k, const char* what) {
    if (peek().k != k) fail(peek(), std::string("expected ") + what);
    ++at;
  }

  NTermPtr parse_term_top() {
    NTermPtr t = parse_appseq();
    if (peek().k != Token::K::End) fail(peek(), "trailing input after term");
    return t;
  }

  NTermPtr parse_appseq() {
    NTermPtr head = parse_atom_or_lambda();
    while (true) {
      switch (peek().k) {
        case Token::K::Ident:
        case Token::K::Zero:
        case Token::K::Succ:
        case Token::K::Rec:
        case Token::K::Hash:
        case Token::K::LParen:
        case Token::K::Lambda:
          head = napp(std::move(head), parse_atom_or_lambda());
          break;
        default:
          return head;
      }
    }
  }

  NTermPtr parse_atom_or_lambda() {
    const Token& t = peek();
    switch (t.k) {
      case Token::K::Lambda: {
        take();
        if (peek().k != Token::K::Ident)
          fail(peek(), "expected binder name after '\\'");
        std::string name = take().text;
        expect(Token::K::Colon, "':' after binder name");
        TypePtr ty = parse_embedded_type();
        expect(Token::K::Dot, "'.' after binder type");
        return nlam(std::move(name), std::move(ty), parse_appseq());
      }
      case Token::K::Ident:
        return nv(take().text);
      case Token::K::Zero:
        take();
        return nzero();
      case Token::K::Succ:
        take();
        return nsucc();
      case Token::K::Rec: {
        take();
        expect(Token::K::LBrack, "'[' after R");
        TypePtr ty = parse_embedded_type();
        expect(Token::K::RBrack, "']' after recursor type");
        return nrec(std::move(ty));
      }
      case Token::K::Hash: {
        Token tok = take();
        return nsplice(numeral_term(tok.number));
      }
      case Token::K::LParen: {
        take();
        NTermPtr inner = parse_appseq();
        expect(Token::K::RParen, "')'");
        return inner;
      }
      default:
        fail(t, "expected a term");
    }
  }

  // Types appear inside terms after ':' and inside R[...].  The '->' arrow
  // is rewritten to a sentinel identifier before lexing so one token stream
  // serves both grammars; type ::= N | type -> type | (type).
  TypePtr parse_embedded_type() { return parse_type_arrow(); }

  TypePtr parse_type_arrow() {
    TypePtr lhs = parse_type_atom();
    if (peek().k == Token::K::Ident && peek().text == "__arrow__") {
      take();
      return arrow(std::move(lhs), parse_type_arrow());
    }
    return lhs;
  }

  TypePtr parse_type_atom() {
    const Token& t = peek();
    if (t.k == Token::K::Ident && t.text == "N") {
      take();
      return ground();
    }
    if (t.k == Token::K::LParen) {
      take();
      TypePtr inner = parse_type_arrow();
      expect(Token::K::RParen, "')' in type");
      return inner;
    }
    fail(t, "expected a type");
  }
};

// Replace "->" outside comments by a sentinel identifier so the single
// token stream can carry both term and type syntax.
std::string preprocess_arrows(const std::string& src) {
  std::string out;
  out.reserve(src.size());
  for (size_t i = 0; i < src.size(); ++i) {
    if (src[i] == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      // comment to end of line
      while (i < src.size() && src[i] != '\n') out.push_back(src[i++]);
      if (i < src.size()) out.push_back('\n');
      continue;
    }
    if (src[i] == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out += " __arrow__ ";
      ++i;
      continue;
    }
    out.push_back(src[i]);
  }
  return out;
}

}  // namespace

TermPtr parse_term(const std::string& text, const TypingContext& ctx,
                   const NameResolver& resolver) {
  TermParser parser(preprocess_arrows(text));
  NTermPtr named = parser.parse_term_top();
  return to_debruijn(named, ctx, resolver);
}

// ---------------------------------------------------------------------------
// Printer

namespace {

const char* kCanonicalNames[] = {"x", "y", "z", "u", "v", "w",
                                 "f", "g", "h", "p", "q", "r"};

struct Printer {
  std::vector<std::string> names;  // in-scope binder display names
  const TypingContext& ctx;
  bool canonical;
  size_t fresh_counter = 0;

  bool in_scope(const std::string& name) const {
    for (const auto& n : names)
      if (n == name) return true;
    for (const auto& s : ctx.slots)
      if (s.first == name) return true;
    return false;
  }

  std::string fresh_name(const std::string& hint) {
    if (!canonical && !hint.empty() && hint != "S" && hint != "R" &&
        hint != "N" && !in_scope(hint))
      return hint;
    while (true) {
      size_t i = fresh_counter++;
      std::string candidate = i < std::size(kCanonicalNames)
                                  ? kCanonicalNames[i]
                                  : "x" + std::to_string(i);
      if (!in_scope(candidate)) return candidate;
    }
  }

  std::string var_name(uint32_t index) {
    if (index < names.size()) return names[names.size() - 1 - index];
    size_t beyond = index - names.size();
    if (beyond < ctx.slots.size())
      return ctx.slots[ctx.slots.size() - 1 - beyond].first;
    return "_free" + std::to_string(index);
  }

  // prec 0: top (lambda allowed bare); 1: function position; 2: argument.
  std::string print(const TermPtr& t, int prec) {
    switch (t->kind) {
      case TermKind::Var:
        return var_name(t->var);
      case TermKind::Zero:
        return "0";
      case TermKind::Succ:
        return "S";
      case TermKind::Rec:
        return "R[" + print_type(t->type) + "]";
      case TermKind::Lam: {
        std::string name = fresh_name(t->hint);
        names.push_back(name);
        std::string body = print(t->sub1, 0);
        names.pop_back();
        std::string out =
            "\\" + name + ":" + print_type(t->type) + ". " + body;
        return prec > 0 ? "(" + out + ")" : out;
      }
      case TermKind::App: {
        if (t->sub1->kind == TermKind::Succ) {
          auto [n, core] = split_succ_chain(t);
          if (core->kind == TermKind::Zero) return "#" + n.to_string();
          // successor chain over a non-numeral core; print iteratively
          std::string out = "S " + print(core, 2);
          Nat rest = n;
          --rest;
          for (Nat i; i < rest; ++i) out = "S (" + out + ")";
          return prec >= 2 ? "(" + out + ")" : out;
        }
        std::string fun = print(t->sub1, 1);
        std::string arg = print(t->sub2, 2);
        std::string out = fun + " " + arg;
        return prec >= 2 ? "(" + out + ")" : out;
      }
    }
    return "?";
  }

};

}  // namespace

std::string print_term(const TermPtr& t, const TypingContext& ctx,
                       bool canonical) {
  Printer p{{}, ctx, canonical};
  return p.print(t, 0);
}

}  // namespace tkit
