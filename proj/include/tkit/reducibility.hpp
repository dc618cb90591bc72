#pragma once

#include <memory>
#include <string>

#include "tkit/enumerator.hpp"
#include "tkit/nat.hpp"
#include "tkit/term.hpp"
#include "tkit/type.hpp"

namespace tkit {

struct BinaryTree;
using TreePtr = std::shared_ptr<const BinaryTree>;
struct BinaryTree {
  TreePtr left;   // null for a leaf
  TreePtr right;
};

TreePtr tree_leaf();
TreePtr tree_node(TreePtr left, TreePtr right);
inline bool is_leaf(const TreePtr& t) { return t->left == nullptr; }
size_t tree_nodes(const TreePtr& t);
std::string print_tree(const TreePtr& t);

// The type of binary trees, (N -> N -> N) -> N -> N.
TypePtr tree_type();

// Reads the tree out of a pure closed normal form \x y. A of the tree type:
// leaves at y, branches at x C D.
TreePtr tree_of_nf(const TermPtr& t);

// The injective numeral assignment: |leaf| = 0, |node C D| = 1 + pair(|C|,|D|).
Nat tree_numeral(const TreePtr& t);

// A closed pure term M of type tau -> (N->N->N) -> N -> N claimed to be
// injective on beta-eta classes.
struct ReducibilityWitness {
  TypePtr tau;
  TermPtr M;
};

// Validates purity, closedness and the witness type.
ReducibilityWitness make_witness(TypePtr tau, TermPtr M);

// The identity map at the tree type itself.
ReducibilityWitness identity_witness();

// N = \x. M x (\c d. S (P0 c d)) 0, of type tau -> N.
TermPtr build_N(const ReducibilityWitness& witness);

// U-encoding of a functional F : sigma -> tau, as the closed term
// \x:N. N_tau (F (E_sigma x)) of type N -> N.
TermPtr encode_U(const TermPtr& F, const TypePtr& sigma, const TypePtr& tau,
                 const ReducibilityWitness& wit_tau,
                 const EnumeratorBundle& bundle_sigma);

// V-decoding of G : N -> N, as the closed term \x:sigma. E_tau (G (N_sigma x))
// of type sigma -> tau.
TermPtr decode_V(const TermPtr& G, const TypePtr& sigma, const TypePtr& tau,
                 const ReducibilityWitness& wit_sigma,
                 const EnumeratorBundle& bundle_tau);

}  // namespace tkit
