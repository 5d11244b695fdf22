// The globularily generated piece via the vertical filtration: levelled
// H_n/V_n sets, vertical lengths, decomposition witnesses, the transversal
// category, and the per-instance structure checks.
#pragma once

#include <optional>

#include "dblcat/double_category.hpp"

namespace dblcat {

// Derivation witness for a square's membership in the filtration.
// Children are stored in composition order [c_k, ..., c_0]: evaluation
// folds right to left, composing each child on the left of the
// accumulated square. vnode children witness membership in the level's
// H set; hnode children witness membership in the previous V set.
struct WitnessTree {
  enum class Kind { leaf, vnode, hnode };
  Kind kind = Kind::leaf;
  Token square;
  std::vector<WitnessTree> children;
};

struct GammaLevel {
  std::set<Token> h;  // H_n
  std::set<Token> v;  // V_n
};

struct GammaAnalysis {
  // levels[i] holds (H_{i+1}, V_{i+1}); the list runs to the
  // stabilization index N with V_N = V_{N+1}.
  std::vector<GammaLevel> levels;
  int stable_at = 0;
  std::map<Token, int> vlength;        // members of gamma only
  std::map<Token, WitnessTree> witness;
  FinDoubleCategory gamma;             // the complete sub-double category
};

// Runs the filtration to stabilization. Throws InvalidInput unless the
// input validates.
GammaAnalysis vertical_filtration(const FinDoubleCategory& c);

FinDoubleCategory gamma(const FinDoubleCategory& c);

bool is_globularily_generated(const FinDoubleCategory& c);

// Least filtration level containing q, or nullopt when q lies outside
// the globularily generated piece. Throws UnknownIdentifier for
// undeclared squares.
std::optional<int> vertical_length(const FinDoubleCategory& c, const Token& q);
std::optional<int> vertical_length(const GammaAnalysis& a, const Token& q);

// Lemma-style decomposition of a V_1 square as an alternating vertical
// composite [Psi_k, Phi_k, ..., Psi_1, Phi_1, Psi_0] with every Phi_i a
// horizontal identity and every Psi_i globular; folding right to left
// replays the square. Throws NotLengthOne when the vertical length is
// not 1.
std::vector<Token> length_one_decomposition(const FinDoubleCategory& c, const Token& q);
std::vector<Token> length_one_decomposition(const FinDoubleCategory& c,
                                            const GammaAnalysis& a, const Token& q);

// Vertical morphisms as objects, squares as morphisms, horizontal
// composition as composition.
FinCategory transversal_category(const FinDoubleCategory& c);

// Every gamma square is globular or a horizontal endomorphism.
ValidationReport check_prop_4_4(const FinDoubleCategory& c);

// Inside gamma, a horizontal composite is globular exactly when both
// factors are.
ValidationReport check_cor_4_5(const FinDoubleCategory& c);

// Replays the alternating decomposition of every V_1 square.
ValidationReport check_lemma_4_6(const FinDoubleCategory& c);

// Re-evaluates a witness tree against the composition tables.
Token evaluate_witness(const FinDoubleCategory& c, const WitnessTree& w);

// Alternation depth: leaves count 1, hnodes add one, vnodes take the max.
// Equals the witnessed square's vertical length for minimal witnesses.
int witness_depth(const WitnessTree& w);

std::string witness_to_prefix(const WitnessTree& w);

}  // namespace dblcat
