#include "tkit/enumerator.hpp"

#include "tkit/codec.hpp"
#include "tkit/error.hpp"

namespace tkit {

namespace {

// Right-nested tuple and list builders over open named terms; the closed
// pairing/cons combinators are spliced in, the elements stay symbolic.
NTermPtr ntuple(const std::vector<TypePtr>& types,
                const std::vector<NTermPtr>& elems) {
  if (elems.size() == 1) return elems[0];
  std::vector<TypePtr> suffix(types.size());
  suffix.back() = types.back();
  for (size_t j = types.size() - 1; j > 0; --j)
    suffix[j - 1] = product_type(types[j - 1], suffix[j]);
  NTermPtr out = elems.back();
  for (size_t j = types.size() - 1; j > 0; --j) {
    CurryPair cp = curry_pair(types[j - 1], suffix[j]);
    out = napps(nsplice(cp.pair.term), {elems[j - 1], out});
  }
  return out;
}

NTermPtr nlist(const TypePtr& tau, const std::vector<NTermPtr>& elems) {
  TermPtr cons_term = cons(tau).term;
  NTermPtr out = nsplice(zero_of_type(arrow(ground(), tau)).term);
  for (auto it = elems.rbegin(); it != elems.rend(); ++it)
    out = napps(nsplice(cons_term), {*it, out});
  return out;
}

struct BundleBuilder {
  TypePtr tau;
  std::vector<TypePtr> subs;
  size_t n;
  std::vector<TypePtr> upsilon;
  TypePtr upsilon_tuple;
  TypePtr n_to_upsilon;

  const TermPtr monus_t = arith("Monus").term;
  const TermPtr p1_t = cantor("P1").term;
  const TermPtr p2_t = cantor("P2").term;

  explicit BundleBuilder(const TypePtr& t) : tau(t), subs(subtypes(t)) {
    n = subs.size();
    std::vector<TypePtr> tails;
    for (const TypePtr& s : subs) tails.push_back(arrow(ground(), s));
    for (size_t i = 0; i < n; ++i)
      upsilon.push_back(arrow_chain(tails, arrow(ground(), subs[i])));
    upsilon_tuple = tuple_type(upsilon);
    n_to_upsilon = arrow(ground(), upsilon_tuple);
  }

  // 1-based projection from the upsilon tuple, as an open named term
  NTermPtr project(size_t k, NTermPtr q) {
    if (n == 1) return q;
    return napp(nsplice(tuple_projection(upsilon, k).term), std::move(q));
  }

  NTermPtr monus(NTermPtr a, NTermPtr b) {
    return napps(nsplice(monus_t), {std::move(a), std::move(b)});
  }

  // b - 1 - e for the index arithmetic inside the J terms
  NTermPtr back_index(NTermPtr e) {
    return monus(monus(nv("b"), nnum(1)), std::move(e));
  }

  std::vector<std::pair<std::string, TypePtr>> xy_binders() {
    std::vector<std::pair<std::string, TypePtr>> out;
    for (size_t l = 1; l <= n; ++l)
      out.emplace_back("x" + std::to_string(l), arrow(ground(), subs[l - 1]));
    out.emplace_back("y", ground());
    return out;
  }

  // J_{0,i} = \a b x1..xn y. x_i (y - 1 - P2 b)
  Combinator build_j0(size_t i) {
    std::vector<std::pair<std::string, TypePtr>> binders{
        {"a", n_to_upsilon}, {"b", ground()}};
    for (auto& bind : xy_binders()) binders.push_back(std::move(bind));
    NTermPtr index = monus(monus(nv("y"), nnum(1)),
                           napp(nsplice(p2_t), nv("b")));
    NTermPtr body = napp(nv("x" + std::to_string(i)), std::move(index));
    return checked("J0_" + std::to_string(i), nlams(binders, body));
  }

  // the degenerate slot: \a b. 0_{u_i}
  Combinator build_j_degenerate(size_t j, size_t i) {
    NTermPtr body = nsplice(zero_of_type(upsilon[i - 1]).term);
    return checked("J" + std::to_string(j) + "_" + std::to_string(i),
                   nlams({{"a", n_to_upsilon}, {"b", ground()}}, body));
  }

  // the n "Cons 0 x_l" rebindings shared by the application-tag decoders
  std::vector<NTermPtr> shifted_contexts() {
    std::vector<NTermPtr> out;
    for (size_t l = 1; l <= n; ++l) {
      TermPtr c = cons(subs[l - 1]).term;
      out.push_back(napps(nsplice(c),
                          {nsplice(zero_of_type(subs[l - 1]).term),
                           nv("x" + std::to_string(l))}));
    }
    return out;
  }

  // J_{j,i} for 1 <= j <= n, defined when some tau_k = tau_j -> tau_i:
  //   \a b x1..xn y. (D_k (a (b-1-P1(P2 b))) ctx (S y))
  //                  (D_j (a (b-1-P2(P2 b))) ctx (S y))
  Combinator build_j_app(size_t j, size_t i, size_t k) {
    std::vector<std::pair<std::string, TypePtr>> binders{
        {"a", n_to_upsilon}, {"b", ground()}};
    for (auto& bind : xy_binders()) binders.push_back(std::move(bind));

    NTermPtr p2b = napp(nsplice(p2_t), nv("b"));
    NTermPtr fun_index = back_index(napp(nsplice(p1_t), p2b));
    NTermPtr arg_index = back_index(napp(nsplice(p2_t), p2b));

    auto half = [&](size_t slot, NTermPtr index) {
      NTermPtr out = project(slot, napp(nv("a"), std::move(index)));
      for (auto& ctx : shifted_contexts()) out = napp(std::move(out), ctx);
      return napp(std::move(out), napp(nsucc(), nv("y")));
    };
    NTermPtr body =
        napp(half(k, std::move(fun_index)), half(j, std::move(arg_index)));
    return checked("J" + std::to_string(j) + "_" + std::to_string(i),
                   nlams(binders, body));
  }

  // J_{n+1,i} when tau_i = tau_j -> tau_k:
  //   \a b x1..xn y z. D_k (a (b-1-P2 b)) (Cons (L_{j,1} z) x1) ...
  //                        (Cons (L_{j,n} z) xn) (S y)
  Combinator build_j_lambda(size_t i, size_t j, size_t k) {
    std::vector<std::pair<std::string, TypePtr>> binders{
        {"a", n_to_upsilon}, {"b", ground()}};
    for (auto& bind : xy_binders()) binders.push_back(std::move(bind));
    binders.emplace_back("z", subs[j - 1]);

    NTermPtr out = project(k, napp(nv("a"), back_index(napp(nsplice(p2_t),
                                                            nv("b")))));
    for (size_t l = 1; l <= n; ++l) {
      // L_{j,l} = \z. z when l = j, otherwise 0_{tau_j -> tau_l}
      TermPtr ljl =
          l == j ? to_debruijn(nlam("z", subs[j - 1], nv("z")))
                 : zero_of_type(arrow(subs[j - 1], subs[l - 1])).term;
      NTermPtr head = napp(nsplice(ljl), nv("z"));
      TermPtr c = cons(subs[l - 1]).term;
      NTermPtr ctx =
          napps(nsplice(c), {head, nv("x" + std::to_string(l))});
      out = napp(std::move(out), ctx);
    }
    out = napp(std::move(out), napp(nsucc(), nv("y")));
    return checked("J" + std::to_string(n + 1) + "_" + std::to_string(i),
                   nlams(binders, out));
  }

  Combinator checked(std::string name, const NTermPtr& named) {
    TermPtr term = to_debruijn(named);
    TypePtr type = infer_type(term);
    return Combinator{std::move(name), std::move(term), std::move(type)};
  }

  EnumeratorBundle build() {
    EnumeratorBundle out;
    out.tau = tau;
    out.subs = subs;
    out.upsilon = upsilon;
    out.upsilon_tuple = upsilon_tuple;

    out.j_terms.resize(n + 2);
    out.j_degenerate.resize(n + 2);
    for (size_t j = 0; j <= n + 1; ++j) {
      out.j_terms[j].reserve(n);
      out.j_degenerate[j].resize(n, false);
    }
    for (size_t i = 1; i <= n; ++i) out.j_terms[0].push_back(build_j0(i));
    for (size_t j = 1; j <= n; ++j) {
      for (size_t i = 1; i <= n; ++i) {
        size_t k = subtype_index(subs, arrow(subs[j - 1], subs[i - 1]));
        if (k == 0) {
          out.j_degenerate[j][i - 1] = true;
          out.j_terms[j].push_back(build_j_degenerate(j, i));
        } else {
          out.j_terms[j].push_back(build_j_app(j, i, k));
        }
      }
    }
    for (size_t i = 1; i <= n; ++i) {
      const TypePtr& ti = subs[i - 1];
      if (ti->is_arrow) {
        size_t j = subtype_index(subs, ti->dom);
        size_t k = subtype_index(subs, ti->cod);
        if (j == 0 || k == 0)
          throw InvariantError(
              "subtype closure broken: missing component of " +
              print_type(ti));
        out.j_terms[n + 1].push_back(build_j_lambda(i, j, k));
      } else {
        out.j_degenerate[n + 1][i - 1] = true;
        out.j_terms[n + 1].push_back(build_j_degenerate(n + 1, i));
      }
    }

    // B_i = \a b. [J_0 a b, ..., J_{n+1} a b] (P1 b)
    for (size_t i = 1; i <= n; ++i) {
      std::vector<NTermPtr> entries;
      for (size_t j = 0; j <= n + 1; ++j)
        entries.push_back(napps(nsplice(out.j_terms[j][i - 1].term),
                                {nv("a"), nv("b")}));
      NTermPtr body = napp(nlist(upsilon[i - 1], entries),
                           napp(nsplice(p1_t), nv("b")));
      out.b_terms.push_back(
          checked("B" + std::to_string(i),
                  nlams({{"a", n_to_upsilon}, {"b", ground()}}, body)));
    }

    // A = \x. R[N->u] 0_{N->u} (\a b. Cons_u {B_1 a b, ..., B_n a b} a) (S x)
    {
      std::vector<NTermPtr> entries;
      for (size_t i = 1; i <= n; ++i)
        entries.push_back(
            napps(nsplice(out.b_terms[i - 1].term), {nv("a"), nv("b")}));
      NTermPtr step =
          nlams({{"a", n_to_upsilon}, {"b", ground()}},
                napps(nsplice(cons(upsilon_tuple).term),
                      {ntuple(upsilon, entries), nv("a")}));
      NTermPtr body = napps(nrec(n_to_upsilon),
                            {nsplice(zero_of_type(n_to_upsilon).term), step,
                             napp(nsucc(), nv("x"))});
      out.a_term = checked("A", nlam("x", ground(), body));
    }

    // E = \x. D_1 (A x 0) 0_{N->tau_1} ... 0_{N->tau_n} 0
    {
      NTermPtr body = project(
          1, napps(nsplice(out.a_term.term), {nv("x"), nnum(0)}));
      for (size_t l = 1; l <= n; ++l)
        body = napp(std::move(body),
                    nsplice(zero_of_type(arrow(ground(), subs[l - 1])).term));
      body = napp(std::move(body), nnum(0));
      out.e_term = checked("E", nlam("x", ground(), body));
    }

    validate(out);
    return out;
  }

  void validate(const EnumeratorBundle& out) {
    TypePtr expect_a =
        arrow(ground(), arrow(ground(), upsilon_tuple));
    if (!type_equal(out.a_term.type, expect_a))
      throw InvariantError("A has type " + print_type(out.a_term.type) +
                           ", expected " + print_type(expect_a));
    for (size_t i = 1; i <= n; ++i) {
      TypePtr expect_bi =
          arrow(n_to_upsilon, arrow(ground(), upsilon[i - 1]));
      if (!type_equal(out.b_terms[i - 1].type, expect_bi))
        throw InvariantError("B" + std::to_string(i) + " has type " +
                             print_type(out.b_terms[i - 1].type));
      for (size_t j = 0; j <= n + 1; ++j) {
        if (!type_equal(out.j_terms[j][i - 1].type, expect_bi))
          throw InvariantError("J" + std::to_string(j) + "," +
                               std::to_string(i) + " has type " +
                               print_type(out.j_terms[j][i - 1].type));
      }
    }
    TypePtr expect_e = arrow(ground(), tau);
    if (!type_equal(out.e_term.type, expect_e))
      throw InvariantError("E has type " + print_type(out.e_term.type) +
                           ", expected " + print_type(expect_e));
  }
};

}  // namespace

EnumeratorBundle build_bundle(const TypePtr& tau) {
  BundleBuilder builder(tau);
  return builder.build();
}

bool check_lemma_a(const EnumeratorBundle& bundle, uint64_t i, uint64_t j,
                   const Budget& budget) {
  TermPtr lhs = mk_app(mk_app(bundle.a_term.term, numeral_term(Nat(i + j))),
                       numeral_term(Nat(j)));
  TermPtr rhs = mk_app(mk_app(bundle.a_term.term, numeral_term(Nat(i))),
                       numeral_term(Nat(0)));
  return equal_terms(lhs, rhs, budget);
}

NormalForm apply_enumerator(const EnumeratorBundle& bundle, const Nat& code,
                            const Budget& budget, EvalStats* stats,
                            uint64_t numeral_guard) {
  NormalForm arg = numeral_of_code(code, numeral_guard);
  return normalize(mk_app(bundle.e_term.term, arg.term), budget, {}, stats);
}

}  // namespace tkit
