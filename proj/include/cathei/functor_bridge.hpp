#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cathei/bimodule.hpp"
#include "cathei/calculus_a.hpp"
#include "cathei/heisenberg.hpp"

namespace cathei {

// ---- F_H ---------------------------------------------------------------------

LinearMap slice_map(const std::vector<int>& signs, int base, const HSlice& s);
LinearMap eval_FH(const HDiagram& d);
LinearMap eval_FH(const HMorphism& m);
bool equal_under_FH(const HMorphism& a, const HMorphism& b);

/// F_H of a central element placed in gap `gap` of Q_signs 1_base, given its
/// image z in the center of A_label.
LinearMap region_multiply(const std::vector<int>& signs, int base, std::size_t gap, const GroupAlgebraElement& z);
/// ε_μ placed in a gap; zero when |μ| differs from the gap label.
LinearMap region_epsilon(const std::vector<int>& signs, int base, std::size_t gap, const Partition& mu);

// ---- T -----------------------------------------------------------------------

/// ξ_{i,j} = (i-j)/(i-j-1); throws UndefinedCoeff for i-j ∈ {0, 1}.
Rational xi(int i, int j);

/// Nonzero colored words over a sign word: T(Q_signs 1_base) as a direct
/// sum, ordered by source partition then generators.
std::vector<GenWord> colored_summands(const std::vector<int>& signs, int base);

struct TReport {
  int dropped = 0;  // terms skipped because their coefficient was undefined
};
MorphismMatrix functor_T(const HDiagram& d, TReport* report = nullptr);
MorphismMatrix functor_T(const HMorphism& m, TReport* report = nullptr);

// ---- F_𝒜 ---------------------------------------------------------------------

std::vector<int> word_signs(const GenWord& w);
/// Projection of F_H(Q_signs 1_n) onto F_𝒜(w); zero for invalid words.
LinearMap word_projector(const GenWord& w);
/// Basis (columns) of the image of word_projector, of
/// dimension d_target d_source; throws CrosscheckFailed otherwise.
QSparse summand_basis(const GenWord& w);
LinearMap eval_FA(const LayeredDiagram& d);
/// F_𝒜 on summand_basis(bottom) only: enough to compare 2-morphisms with a
/// common source.
QSparse eval_FA_restricted(const LayeredDiagram& d);
QSparse eval_FA_restricted(const Morphism2& m);
LinearMap eval_FA(const Morphism2& m);
LinearMap eval_FA(const MorphismMatrix& m);
/// Same, between the given sign words, so empty direct sums evaluate to zero.
LinearMap eval_FA(const MorphismMatrix& m, const std::vector<int>& bottom, const std::vector<int>& top, int base);

/// dim Hom(p V_λ, q V_λ) from explicit modules: Specht modules, i-eigenspaces
/// of Jucys–Murphy elements on induced and restricted modules, and character
/// inner products. p and q share their source λ.
int oracle_hom_dim(const GenWord& p, const GenWord& q);

// ---- lemma suite -------------------------------------------------------------

struct LemmaInstance {
  std::string params;
  bool pass = false;
  std::string lhs_hash, rhs_hash;
};

struct LemmaReport {
  std::string lemma;
  int bound = 0;
  std::vector<LemmaInstance> instances;

  bool pass() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& lemma_names();
LemmaReport verify_lemma(const std::string& name, int n_bound);

}  // namespace cathei
