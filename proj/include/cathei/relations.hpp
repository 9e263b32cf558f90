#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cathei/calculus_a.hpp"
#include "cathei/heisenberg.hpp"

namespace cathei {

struct RelationReport {
  std::string suite;
  int bound = 0;
  int checked = 0;
  std::vector<std::string> failures;  // "relation: params"

  bool pass() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

struct HRelation {
  std::string name;
  HMorphism lhs, rhs;
};
/// The local relations of the Heisenberg calculus with rightmost region n,
/// plus the four zigzags.
std::vector<HRelation> heisenberg_relations(int n);

struct ARelation {
  std::string name;
  LayeredDiagram lhs, rhs;
};
/// The local relations of 𝒜 with rightmost region λ, for every color choice
/// giving a nonzero boundary.
std::vector<ARelation> a_relations(const Partition& lambda);

/// T(lhs) == T(rhs) entrywise, base regions 0..max_n.
RelationReport check_T_functoriality(int max_n);
/// F_𝒜(lhs) == F_𝒜(rhs) on the summand of the bottom word, |λ| ≤ max_size.
RelationReport check_FA_relations(int max_size);
/// F_H(x) = F_𝒜(T(x)) column by column for single slices on at most two
/// strands, base regions 0..max_n; the summands must exhaust F_H of the
/// bottom word.
RelationReport check_compatibility(int max_n);

}  // namespace cathei
