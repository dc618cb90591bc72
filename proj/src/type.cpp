#include "tkit/type.hpp"

#include <algorithm>

#include "tkit/error.hpp"

namespace tkit {

namespace {

uint64_t mix(uint64_t a, uint64_t b) {
  uint64_t h = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 12) + (a >> 4));
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

}  // namespace

// Thread-local: see the note on term_zero in term.cpp.
TypePtr ground() {
  thread_local const TypePtr n = [] {
    auto t = std::make_shared<Type>();
    t->is_arrow = false;
    t->hash = 0x2545f4914f6cdd1dULL;
    t->size = 1;
    return t;
  }();
  return n;
}

TypePtr arrow(TypePtr dom, TypePtr cod) {
  auto t = std::make_shared<Type>();
  t->is_arrow = true;
  t->hash = mix(dom->hash, cod->hash);
  t->size = 1 + dom->size + cod->size;
  t->dom = std::move(dom);
  t->cod = std::move(cod);
  return t;
}

TypePtr arrow_chain(const std::vector<TypePtr>& args, TypePtr result) {
  TypePtr out = std::move(result);
  for (auto it = args.rbegin(); it != args.rend(); ++it) out = arrow(*it, out);
  return out;
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->is_arrow != b->is_arrow ||
      a->size != b->size)
    return false;
  if (!a->is_arrow) return true;
  return type_equal(a->dom, b->dom) && type_equal(a->cod, b->cod);
}

std::vector<TypePtr> argument_types(const TypePtr& type) {
  std::vector<TypePtr> args;
  const Type* cur = type.get();
  TypePtr hold = type;
  while (cur->is_arrow) {
    args.push_back(cur->dom);
    hold = cur->cod;
    cur = hold.get();
  }
  return args;
}

std::string print_type(const TypePtr& type) {
  if (!type->is_arrow) return "N";
  std::string dom = print_type(type->dom);
  if (type->dom->is_arrow) dom = "(" + dom + ")";
  return dom + " -> " + print_type(type->cod);
}

namespace {

struct TypeParser {
  const std::string& text;
  size_t pos = 0;
  size_t line = 1;
  size_t col = 1;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        advance();
      } else if (text[pos] == '-' && pos + 1 < text.size() &&
                 text[pos + 1] == '-') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line, col, msg);
  }

  TypePtr parse() {
    TypePtr t = parse_arrow();
    skip_ws();
    if (pos != text.size()) fail("trailing input after type");
    return t;
  }

  TypePtr parse_arrow() {
    TypePtr lhs = parse_atom();
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      advance();
      advance();
      return arrow(std::move(lhs), parse_arrow());  // right associative
    }
    return lhs;
  }

  TypePtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("expected type");
    if (text[pos] == 'N') {
      advance();
      return ground();
    }
    if (text[pos] == '(') {
      advance();
      TypePtr inner = parse_arrow();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      advance();
      return inner;
    }
    fail(std::string("unexpected character '") + text[pos] + "' in type");
  }
};

void collect_subtypes(const TypePtr& type, std::vector<TypePtr>& out) {
  for (const auto& seen : out) {
    if (type_equal(seen, type)) return;
  }
  out.push_back(type);
  if (type->is_arrow) {
    collect_subtypes(type->dom, out);
    collect_subtypes(type->cod, out);
  }
}

}  // namespace

TypePtr parse_type(const std::string& text) {
  TypeParser p{text};
  return p.parse();
}

std::vector<TypePtr> subtypes(const TypePtr& type) {
  std::vector<TypePtr> all;
  collect_subtypes(type, all);
  // Keep the type itself first; sort the remainder by decreasing size,
  // then lexicographically on the printed form.
  std::sort(all.begin() + 1, all.end(),
            [](const TypePtr& a, const TypePtr& b) {
              if (a->size != b->size) return a->size > b->size;
              return print_type(a) < print_type(b);
            });
  return all;
}

size_t subtype_index(const std::vector<TypePtr>& subs, const TypePtr& needle) {
  for (size_t i = 0; i < subs.size(); ++i) {
    if (type_equal(subs[i], needle)) return i + 1;
  }
  return 0;
}

}  // namespace tkit
