#include "tkit/reducibility.hpp"

#include "tkit/codec.hpp"
#include "tkit/error.hpp"
#include "tkit/meta_nf.hpp"

namespace tkit {

TreePtr tree_leaf() {
  static const TreePtr leaf = std::make_shared<BinaryTree>();
  return leaf;
}

TreePtr tree_node(TreePtr left, TreePtr right) {
  auto node = std::make_shared<BinaryTree>();
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

size_t tree_nodes(const TreePtr& t) {
  if (is_leaf(t)) return 0;
  return 1 + tree_nodes(t->left) + tree_nodes(t->right);
}

std::string print_tree(const TreePtr& t) {
  if (is_leaf(t)) return "Leaf";
  return "Node(" + print_tree(t->left) + ", " + print_tree(t->right) + ")";
}

TypePtr tree_type() {
  static const TypePtr type =
      arrow(arrow(ground(), arrow(ground(), ground())),
            arrow(ground(), ground()));
  return type;
}

namespace {

// body over binders x (index 1, the branch) and y (index 0, the leaf)
TreePtr tree_of_body(const TermPtr& body) {
  if (body->kind == TermKind::Var && body->var == 0) return tree_leaf();
  if (body->kind == TermKind::App && body->sub1->kind == TermKind::App &&
      body->sub1->sub1->kind == TermKind::Var &&
      body->sub1->sub1->var == 1) {
    return tree_node(tree_of_body(body->sub1->sub2),
                     tree_of_body(body->sub2));
  }
  throw InputError("not a tree body: " + print_term(body));
}

}  // namespace

TreePtr tree_of_nf(const TermPtr& t) {
  if (!is_pure_closed_nf(t))
    throw InputError(
        "tree readout requires a pure closed beta-eta-normal form");
  TypePtr type = infer_type(t);
  if (!type_equal(type, tree_type()))
    throw TypeError("tree readout requires type " + print_type(tree_type()) +
                    ", got " + print_type(type));
  if (t->kind != TermKind::Lam || t->sub1->kind != TermKind::Lam)
    throw InputError("tree normal form must bind both variables: " +
                     print_term(t));
  return tree_of_body(t->sub1->sub1);
}

Nat tree_numeral(const TreePtr& t) {
  if (is_leaf(t)) return Nat();
  Nat code = cantor_pair(tree_numeral(t->left), tree_numeral(t->right));
  ++code;
  return code;
}

ReducibilityWitness make_witness(TypePtr tau, TermPtr M) {
  if (!is_closed(M)) throw InputError("witness term must be closed");
  if (!M->pure) throw InputError("witness term must be pure");
  TypePtr expected =
      arrow(tau, arrow(arrow(ground(), arrow(ground(), ground())),
                       arrow(ground(), ground())));
  TypePtr actual = infer_type(M);
  if (!type_equal(actual, expected))
    throw TypeError("witness has type " + print_type(actual) +
                    ", expected " + print_type(expected));
  return ReducibilityWitness{std::move(tau), std::move(M)};
}

ReducibilityWitness identity_witness() {
  TypePtr star = tree_type();
  return make_witness(star, to_debruijn(nlam("x", star, nv("x"))));
}

TermPtr build_N(const ReducibilityWitness& witness) {
  // N = \x. M x (\c d. S <c, d>) 0
  NTermPtr pair_step =
      nlams({{"c", ground()}, {"d", ground()}},
            napp(nsucc(), napps(nsplice(cantor("P0").term),
                                {nv("c"), nv("d")})));
  NTermPtr body = napps(nsplice(witness.M),
                        {nv("x"), std::move(pair_step), nnum(0)});
  TermPtr out = to_debruijn(nlam("x", witness.tau, std::move(body)));
  TypePtr type = infer_type(out);
  if (!type_equal(type, arrow(witness.tau, ground())))
    throw InvariantError("N construction produced type " + print_type(type));
  return out;
}

TermPtr encode_U(const TermPtr& F, const TypePtr& sigma, const TypePtr& tau,
                 const ReducibilityWitness& wit_tau,
                 const EnumeratorBundle& bundle_sigma) {
  if (!is_closed(F)) throw InputError("U-encoding requires a closed term");
  TypePtr f_type = infer_type(F);
  if (!type_equal(f_type, arrow(sigma, tau)))
    throw TypeError("U-encoding of a term of type " + print_type(f_type) +
                    ", expected " + print_type(arrow(sigma, tau)));
  if (!type_equal(wit_tau.tau, tau))
    throw TypeError("witness is for type " + print_type(wit_tau.tau) +
                    ", expected " + print_type(tau));
  if (!type_equal(bundle_sigma.tau, sigma))
    throw TypeError("enumerator bundle is for type " +
                    print_type(bundle_sigma.tau) + ", expected " +
                    print_type(sigma));
  // \x:N. N_tau (F (E_sigma x))
  NTermPtr body = napp(
      nsplice(build_N(wit_tau)),
      napp(nsplice(F), napp(nsplice(bundle_sigma.e_term.term), nv("x"))));
  return to_debruijn(nlam("x", ground(), std::move(body)));
}

TermPtr decode_V(const TermPtr& G, const TypePtr& sigma, const TypePtr& tau,
                 const ReducibilityWitness& wit_sigma,
                 const EnumeratorBundle& bundle_tau) {
  if (!is_closed(G)) throw InputError("V-decoding requires a closed term");
  TypePtr g_type = infer_type(G);
  if (!type_equal(g_type, arrow(ground(), ground())))
    throw TypeError("V-decoding of a term of type " + print_type(g_type) +
                    ", expected N -> N");
  if (!type_equal(wit_sigma.tau, sigma))
    throw TypeError("witness is for type " + print_type(wit_sigma.tau) +
                    ", expected " + print_type(sigma));
  if (!type_equal(bundle_tau.tau, tau))
    throw TypeError("enumerator bundle is for type " +
                    print_type(bundle_tau.tau) + ", expected " +
                    print_type(tau));
  // \x:sigma. E_tau (G (N_sigma x))
  NTermPtr body =
      napp(nsplice(bundle_tau.e_term.term),
           napp(nsplice(G), napp(nsplice(build_N(wit_sigma)), nv("x"))));
  return to_debruijn(nlam("x", sigma, std::move(body)));
}

}  // namespace tkit
