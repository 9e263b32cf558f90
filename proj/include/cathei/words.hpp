#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cathei/partition.hpp"

namespace cathei {

enum class GenKind { F, E };

/// F_i (upward strand, adds an i-box) or E_i (downward, removes one).
struct Generator {
  GenKind kind = GenKind::F;
  int color = 0;

  int sign() const { return kind == GenKind::F ? +1 : -1; }
  std::string str() const;
  static Generator parse(const std::string& token);
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator F(int i) { return {GenKind::F, i}; }
inline Generator E(int i) { return {GenKind::E, i}; }

/// gens[0] is leftmost; the rightmost generator acts first on source.
struct GenWord {
  Partition source;
  std::vector<Generator> gens;

  std::size_t size() const { return gens.size(); }
  /// "F3 E0 @ 3,2"; an empty word prints as "@ 3,2".
  std::string str() const;
  static GenWord parse(const std::string& text);
  friend auto operator<=>(const GenWord&, const GenWord&) = default;
  friend bool operator==(const GenWord&, const GenWord&) = default;
};

/// Target partition, or nullopt when some step is undefined.
std::optional<Partition> word_apply(const GenWord& w);
/// Labels of the gaps: labels[k] sits left of gens[k], labels[size] is the
/// source. nullopt entries mark zero regions.
std::vector<std::optional<Partition>> word_region_labels(const GenWord& w);

/// F…F E…E 1_λ with disjoint color sets and the same source and target;
/// removals happen smallest content first, then additions likewise.
std::optional<GenWord> word_normal_form(const GenWord& w);

/// Every word of length ≤ max_len that is defined on its source, over all
/// sources with |λ| ≤ max_size; sources in canonical order, shorter first.
std::vector<GenWord> valid_words(int max_size, int max_len);

}  // namespace cathei
