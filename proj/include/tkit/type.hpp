#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tkit {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

// Simple types over the single ground type N.  Immutable; shared freely.
// Every type decomposes uniquely as t1 -> t2 -> ... -> tn -> N.
struct Type {
  bool is_arrow = false;
  TypePtr dom;
  TypePtr cod;
  uint64_t hash = 0;
  uint32_t size = 1;  // node count: N = 1, arrow = 1 + |dom| + |cod|
};

TypePtr ground();                              // the type N
TypePtr arrow(TypePtr dom, TypePtr cod);
TypePtr arrow_chain(const std::vector<TypePtr>& args, TypePtr result);

bool type_equal(const TypePtr& a, const TypePtr& b);

// Argument types in order, i.e. [t1..tn] for t1 -> ... -> tn -> N.
std::vector<TypePtr> argument_types(const TypePtr& type);

std::string print_type(const TypePtr& type);
TypePtr parse_type(const std::string& text);

// All subtypes of `type`, duplicate-free.  Index 0 is `type` itself; the
// rest are ordered by decreasing size, ties broken by printed form.  Reported
// indices elsewhere in the library are 1-based on top of this vector.
std::vector<TypePtr> subtypes(const TypePtr& type);

// 1-based index of `needle` in subtypes(`hay`), or 0 when absent.
size_t subtype_index(const std::vector<TypePtr>& subs, const TypePtr& needle);

}  // namespace tkit
