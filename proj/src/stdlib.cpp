#include "tkit/stdlib.hpp"

#include <map>
#include <mutex>

#include "tkit/error.hpp"
#include "tkit/normalize.hpp"

namespace tkit {

namespace {

TypePtr nat2() { return arrow(ground(), ground()); }
TypePtr nat3() { return arrow(ground(), nat2()); }

Combinator make_checked(std::string name, const NTermPtr& named) {
  TermPtr term = to_debruijn(named);
  TypePtr type = infer_type(term);
  return Combinator{std::move(name), std::move(term), std::move(type)};
}

struct ArithTable {
  Combinator add, mult, pred, monus, cond, sum, max_le, div, p0, p1, p2;

  ArithTable() {
    const TypePtr N = ground();

    // Add = \x. R x (\a b. S a)
    add = make_checked(
        "Add", nlam("x", N,
                    napps(nrec(N), {nv("x"),
                                    nlams({{"a", N}, {"b", N}},
                                          napp(nsucc(), nv("a")))})));

    // Mult = \x. R 0 (\a b. Add a x)
    mult = make_checked(
        "Mult",
        nlam("x", N,
             napps(nrec(N),
                   {nzero(), nlams({{"a", N}, {"b", N}},
                                   napps(nsplice(add.term),
                                         {nv("a"), nv("x")}))})));

    // Pred = R 0 (\a b. b)
    pred = make_checked(
        "Pred", napps(nrec(N), {nzero(),
                                nlams({{"a", N}, {"b", N}}, nv("b"))}));

    // Monus = \x. R x (\a b. Pred a)
    monus = make_checked(
        "Monus",
        nlam("x", N,
             napps(nrec(N), {nv("x"), nlams({{"a", N}, {"b", N}},
                                            napp(nsplice(pred.term),
                                                 nv("a")))})));

    // Cond = \x y. R x (\a b. y)
    cond = make_checked(
        "Cond",
        nlams({{"x", N}, {"y", N}},
              napps(nrec(N), {nv("x"),
                              nlams({{"a", N}, {"b", N}}, nv("y"))})));

    // Sum = \x f. R 0 (\a b. a + f b) (S x)
    sum = make_checked(
        "Sum",
        nlams({{"x", N}, {"f", nat2()}},
              napps(nrec(N),
                    {nzero(),
                     nlams({{"a", N}, {"b", N}},
                           napps(nsplice(add.term),
                                 {nv("a"), napp(nv("f"), nv("b"))})),
                     napp(nsucc(), nv("x"))})));

    // MaxLe = \x f. R 0 (\a b. Cond b a (f b)) (S x)
    max_le = make_checked(
        "MaxLe",
        nlams({{"x", N}, {"f", nat2()}},
              napps(nrec(N),
                    {nzero(),
                     nlams({{"a", N}, {"b", N}},
                           napps(nsplice(cond.term),
                                 {nv("b"), nv("a"), napp(nv("f"), nv("b"))})),
                     napp(nsucc(), nv("x"))})));

    // Div = \x y. MaxLe x (\a. (a * y) monus x)
    div = make_checked(
        "Div",
        nlams({{"x", N}, {"y", N}},
              napps(nsplice(max_le.term),
                    {nv("x"),
                     nlam("a", N,
                          napps(nsplice(monus.term),
                                {napps(nsplice(mult.term),
                                       {nv("a"), nv("y")}),
                                 nv("x")}))})));

    // P0 = \x y. Div (x*(x+3) + y*(y+1) + 2*x*y) 2
    auto times = [&](NTermPtr a, NTermPtr b) {
      return napps(nsplice(mult.term), {std::move(a), std::move(b)});
    };
    auto plus = [&](NTermPtr a, NTermPtr b) {
      return napps(nsplice(add.term), {std::move(a), std::move(b)});
    };
    p0 = make_checked(
        "P0",
        nlams({{"x", N}, {"y", N}},
              napps(nsplice(div.term),
                    {plus(plus(times(nv("x"), plus(nv("x"), nnum(3))),
                               times(nv("y"), plus(nv("y"), nnum(1)))),
                          times(times(nnum(2), nv("x")), nv("y"))),
                     nnum(2)})));

    // |z - <v,w>| = (z monus p) + (p monus z) with p = P0 v w
    auto abs_diff_pair = [&](const char* a, const char* b) {
      NTermPtr pr = napps(nsplice(p0.term), {nv(a), nv(b)});
      NTermPtr left = napps(nsplice(monus.term), {nv("z"), pr});
      NTermPtr right = napps(nsplice(monus.term), {pr, nv("z")});
      return plus(left, right);
    };

    // P1 = \z. Sum z (\y. MaxLe z (\x. |z - <x,y>|))
    p1 = make_checked(
        "P1",
        nlam("z", N,
             napps(nsplice(sum.term),
                   {nv("z"),
                    nlam("y", N,
                         napps(nsplice(max_le.term),
                               {nv("z"),
                                nlam("x", N, abs_diff_pair("x", "y"))}))})));

    // P2 = \z. Sum z (\x. MaxLe z (\y. |z - <x,y>|))
    p2 = make_checked(
        "P2",
        nlam("z", N,
             napps(nsplice(sum.term),
                   {nv("z"),
                    nlam("x", N,
                         napps(nsplice(max_le.term),
                               {nv("z"),
                                nlam("y", N, abs_diff_pair("x", "y"))}))})));
  }
};

const ArithTable& table() {
  static const ArithTable t;
  return t;
}

}  // namespace

const Combinator& arith(const std::string& name) {
  const ArithTable& t = table();
  if (name == "Add") return t.add;
  if (name == "Mult") return t.mult;
  if (name == "Pred") return t.pred;
  if (name == "Monus") return t.monus;
  if (name == "Cond") return t.cond;
  if (name == "Sum") return t.sum;
  if (name == "MaxLe") return t.max_le;
  if (name == "Div") return t.div;
  throw InputError("unknown arithmetic combinator: " + name);
}

const Combinator& cantor(const std::string& name) {
  const ArithTable& t = table();
  if (name == "P0") return t.p0;
  if (name == "P1") return t.p1;
  if (name == "P2") return t.p2;
  throw InputError("unknown pairing combinator: " + name);
}

TypePtr product_type(const TypePtr& sigma, const TypePtr& tau) {
  std::vector<TypePtr> args = argument_types(sigma);
  for (const TypePtr& t : argument_types(tau)) args.push_back(t);
  args.push_back(nat3());
  return arrow_chain(args, ground());
}

Combinator zero_of_type(const TypePtr& sigma) {
  std::vector<std::pair<std::string, TypePtr>> binders;
  std::vector<TypePtr> args = argument_types(sigma);
  for (size_t i = 0; i < args.size(); ++i)
    binders.emplace_back("x" + std::to_string(i + 1), args[i]);
  NTermPtr body = nzero();
  return make_checked("Zero(" + print_type(sigma) + ")",
                      nlams(binders, std::move(body)));
}

CurryPair curry_pair(const TypePtr& sigma, const TypePtr& tau) {
  std::vector<TypePtr> s_args = argument_types(sigma);
  std::vector<TypePtr> t_args = argument_types(tau);
  TypePtr prod = product_type(sigma, tau);

  auto name_list = [](const char* stem, const std::vector<TypePtr>& types) {
    std::vector<std::pair<std::string, TypePtr>> out;
    for (size_t i = 0; i < types.size(); ++i)
      out.emplace_back(stem + std::to_string(i + 1), types[i]);
    return out;
  };
  auto vars_of = [](const std::vector<std::pair<std::string, TypePtr>>& bs) {
    std::vector<NTermPtr> out;
    for (const auto& b : bs) out.push_back(nv(b.first));
    return out;
  };
  auto zeros_of = [](const std::vector<TypePtr>& types) {
    std::vector<NTermPtr> out;
    for (const TypePtr& t : types) out.push_back(nsplice(zero_of_type(t).term));
    return out;
  };

  auto s_binders = name_list("s", s_args);
  auto t_binders = name_list("t", t_args);

  // D0 = \x y s.. t.. p. p (x s..) (y t..)
  CurryPair out;
  {
    std::vector<std::pair<std::string, TypePtr>> binders{{"x", sigma},
                                                         {"y", tau}};
    for (const auto& b : s_binders) binders.push_back(b);
    for (const auto& b : t_binders) binders.push_back(b);
    binders.emplace_back("p", nat3());
    NTermPtr body = napps(
        nv("p"), {napps(nv("x"), vars_of(s_binders)),
                  napps(nv("y"), vars_of(t_binders))});
    out.pair = make_checked("D0", nlams(binders, std::move(body)));
  }
  // D1 = \q s.. . q s.. 0_t1 .. 0_tn (\a b. a)
  {
    std::vector<std::pair<std::string, TypePtr>> binders{{"q", prod}};
    for (const auto& b : s_binders) binders.push_back(b);
    std::vector<NTermPtr> args = vars_of(s_binders);
    for (auto& z : zeros_of(t_args)) args.push_back(std::move(z));
    args.push_back(nlams({{"a", ground()}, {"b", ground()}}, nv("a")));
    out.first =
        make_checked("D1", nlams(binders, napps(nv("q"), std::move(args))));
  }
  // D2 = \q t.. . q 0_s1 .. 0_sm t.. (\a b. b)
  {
    std::vector<std::pair<std::string, TypePtr>> binders{{"q", prod}};
    for (const auto& b : t_binders) binders.push_back(b);
    std::vector<NTermPtr> args = zeros_of(s_args);
    for (auto& v : vars_of(t_binders)) args.push_back(std::move(v));
    args.push_back(nlams({{"a", ground()}, {"b", ground()}}, nv("b")));
    out.second =
        make_checked("D2", nlams(binders, napps(nv("q"), std::move(args))));
  }
  return out;
}

TypePtr tuple_type(const std::vector<TypePtr>& types) {
  if (types.empty()) throw InputError("tuple of zero components");
  TypePtr out = types.back();
  for (size_t i = types.size() - 1; i > 0; --i)
    out = product_type(types[i - 1], out);
  return out;
}

TermPtr tuple_literal(const std::vector<TypePtr>& types,
                      const std::vector<TermPtr>& elems) {
  if (types.size() != elems.size())
    throw InputError("tuple literal arity mismatch");
  if (types.size() < 2) throw InputError("tuple literal needs k >= 2");
  TermPtr out = elems.back();
  TypePtr out_type = types.back();
  for (size_t i = types.size() - 1; i > 0; --i) {
    CurryPair cp = curry_pair(types[i - 1], out_type);
    out = mk_app(mk_app(cp.pair.term, elems[i - 1]), out);
    out_type = product_type(types[i - 1], out_type);
  }
  return out;
}

Combinator tuple_projection(const std::vector<TypePtr>& types, size_t i) {
  size_t k = types.size();
  if (k < 2) throw InputError("tuple projection needs k >= 2");
  if (i < 1 || i > k)
    throw InputError("tuple projection index out of range: " +
                     std::to_string(i) + " of " + std::to_string(k));
  // suffix tuple types: suffix[j] = types[j] x ... x types[k-1]
  std::vector<TypePtr> suffix(k);
  suffix[k - 1] = types[k - 1];
  for (size_t j = k - 1; j > 0; --j)
    suffix[j - 1] = product_type(types[j - 1], suffix[j]);

  NTermPtr body = nv("q");
  for (size_t step = 0; step + 1 < i; ++step) {
    CurryPair cp = curry_pair(types[step], suffix[step + 1]);
    body = napp(nsplice(cp.second.term), std::move(body));
  }
  if (i < k) {
    CurryPair cp = curry_pair(types[i - 1], suffix[i]);
    body = napp(nsplice(cp.first.term), std::move(body));
  }
  return make_checked("D" + std::to_string(i),
                      nlam("q", suffix[0], std::move(body)));
}

Combinator cons(const TypePtr& tau) {
  // Cons = \x y. R x (\a. y)
  NTermPtr named =
      nlams({{"x", tau}, {"y", arrow(ground(), tau)}},
            napps(nrec(tau), {nv("x"), nlam("a", tau, nv("y"))}));
  return make_checked("Cons(" + print_type(tau) + ")", named);
}

TermPtr list_literal(const TypePtr& tau, const std::vector<TermPtr>& elems) {
  for (const TermPtr& e : elems) {
    TypePtr et = infer_type(e);
    if (!type_equal(et, tau))
      throw TypeError("list element has type " + print_type(et) +
                      ", expected " + print_type(tau));
  }
  TermPtr cons_term = cons(tau).term;
  TermPtr out = zero_of_type(arrow(ground(), tau)).term;
  for (auto it = elems.rbegin(); it != elems.rend(); ++it)
    out = mk_app(mk_app(cons_term, *it), out);
  return out;
}

IterationPair iteration(const TypePtr& tau) {
  const TypePtr N = ground();
  IterationPair out;

  // Iter = \a b. R a (\x y. b x)
  out.iter = make_checked(
      "Iter(" + print_type(tau) + ")",
      nlams({{"a", tau}, {"b", arrow(tau, tau)}},
            napps(nrec(tau),
                  {nv("a"), nlams({{"x", tau}, {"y", N}},
                                  napp(nv("b"), nv("x")))})));

  // R recovered from Iter at the product type tau x N:
  //   H = \x y. D0 (x (D1 y) (D2 y)) (S (D2 y))
  //   RecFromIter = \a b c. D1 (Iter_{tau x N} (D0 a 0) (H b) c)
  TypePtr prod = product_type(tau, N);
  CurryPair cp = curry_pair(tau, N);
  TypePtr step_type = arrow(tau, arrow(N, tau));

  NTermPtr h = nlams(
      {{"x", step_type}, {"y", prod}},
      napps(nsplice(cp.pair.term),
            {napps(nv("x"), {napp(nsplice(cp.first.term), nv("y")),
                             napp(nsplice(cp.second.term), nv("y"))}),
             napp(nsucc(), napp(nsplice(cp.second.term), nv("y")))}));

  Combinator iter_prod = make_checked(
      "Iter(" + print_type(prod) + ")",
      nlams({{"a", prod}, {"b", arrow(prod, prod)}},
            napps(nrec(prod),
                  {nv("a"), nlams({{"x", prod}, {"y", N}},
                                  napp(nv("b"), nv("x")))})));

  out.rec_from_iter = make_checked(
      "RecFromIter(" + print_type(tau) + ")",
      nlams({{"a", tau}, {"b", step_type}, {"c", N}},
            napp(nsplice(cp.first.term),
                 napps(nsplice(iter_prod.term),
                       {napps(nsplice(cp.pair.term), {nv("a"), nzero()}),
                        napp(h, nv("b")), nv("c")}))));
  return out;
}

const Combinator* find_combinator(const std::string& name) {
  static const std::map<std::string, const Combinator*> index = [] {
    std::map<std::string, const Combinator*> m;
    const ArithTable& t = table();
    for (const Combinator* c : {&t.add, &t.mult, &t.pred, &t.monus, &t.cond,
                                &t.sum, &t.max_le, &t.div, &t.p0, &t.p1,
                                &t.p2})
      m.emplace(c->name, c);
    return m;
  }();
  auto it = index.find(name);
  return it == index.end() ? nullptr : it->second;
}

std::vector<std::string> combinator_names() {
  std::vector<std::string> out;
  const ArithTable& t = table();
  for (const Combinator* c : {&t.add, &t.mult, &t.pred, &t.monus, &t.cond,
                              &t.sum, &t.max_le, &t.div, &t.p0, &t.p1, &t.p2})
    out.push_back(c->name);
  return out;
}

// Every rule here mirrors an equation of the theory that the test suite
// re-verifies against pure axiom stepping before trusting it at scale.
const DeltaRegistry& delta_registry() {
  static const DeltaRegistry registry = [] {
    DeltaRegistry r;
    const ArithTable& t = table();
    r.add(DeltaFn::Pred, 1, t.pred.term, "Pred");
    r.add(DeltaFn::Add, 2, t.add.term, "Add");
    r.add(DeltaFn::Mult, 2, t.mult.term, "Mult");
    r.add(DeltaFn::Monus, 2, t.monus.term, "Monus");
    r.add(DeltaFn::Cond, 3, t.cond.term, "Cond");
    r.add(DeltaFn::Div, 2, t.div.term, "Div");
    r.add(DeltaFn::CantorPair, 2, t.p0.term, "P0");
    r.add(DeltaFn::CantorFirst, 1, t.p1.term, "P1");
    r.add(DeltaFn::CantorSecond, 1, t.p2.term, "P2");
    return r;
  }();
  return registry;
}

}  // namespace tkit
