#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cathei/rational.hpp"
#include "cathei/words.hpp"

namespace cathei {

/// One elementary event of a layered diagram; positions are 1-indexed from
/// the left. A cup inserts (F_c, E_c) when left_sign = +1, else (E_c, F_c).
struct ASlice {
  enum class Kind { Cross, Cap, Cup };
  Kind kind = Kind::Cross;
  int pos = 1;
  int color = 0;
  int left_sign = +1;

  static ASlice cross(int p) { return {Kind::Cross, p, 0, +1}; }
  static ASlice cap(int p) { return {Kind::Cap, p, 0, +1}; }
  static ASlice cup(int p, int color, int left_sign) { return {Kind::Cup, p, color, left_sign}; }
  friend bool operator==(const ASlice&, const ASlice&) = default;
};

/// Bottom-to-top sequence of slices over a bottom word.
struct LayeredDiagram {
  GenWord bottom;
  std::vector<ASlice> slices;

  /// The word at every level, bottom first; throws MalformedDiagram.
  std::vector<GenWord> levels() const;
  GenWord top() const { return levels().back(); }
  friend bool operator==(const LayeredDiagram&, const LayeredDiagram&) = default;
};

struct RegionLabels {
  /// labels[level][gap] as in word_region_labels.
  std::vector<std::vector<std::optional<Partition>>> labels;
  bool zero = false;
};
RegionLabels infer_regions(const LayeredDiagram& d);

struct Endpoint {
  bool top = false;
  int pos = 1;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct MatchedPair {
  int color = 0;
  Endpoint a, b;  // a < b
  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

/// Per-color oriented crossingless pairing of the boundary endpoints.
struct ColoredMatching {
  std::vector<MatchedPair> pairs;  // sorted

  bool is_identity(std::size_t strands) const;
  std::string str() const;
  friend bool operator==(const ColoredMatching&, const ColoredMatching&) = default;
};

/// Innermost-first pairing around the boundary circle (bottom left to right,
/// then top right to left), per color. Requires matching endpoint counts.
std::optional<ColoredMatching> canonical_matching(const GenWord& src, const GenWord& dst);
/// Connectivity of the strands of d; closed components are counted.
ColoredMatching traced_matching(const LayeredDiagram& d, int* closed_loops = nullptr);
/// Caps innermost first, crossings in bubble-sort order, then cups.
LayeredDiagram canonical_diagram(const GenWord& src, const GenWord& dst, const ColoredMatching& m);

/// Normal form of a 2-morphism of 𝒜: ZERO or scalar times the canonical matching.
struct Morphism2 {
  bool zero = true;
  std::string zero_reason;
  Rational scalar = 0;
  GenWord src, dst;
  ColoredMatching matching;

  static Morphism2 make_zero(const GenWord& src, const GenWord& dst, std::string reason);
  /// The canonical morphism src → dst with scalar c (ZERO if none exists).
  static Morphism2 canonical(const GenWord& src, const GenWord& dst, const Rational& c = Rational(1));
  static Morphism2 identity(const GenWord& w) { return canonical(w, w); }

  /// "1 * identity-matching", "ZERO (adjacent colors)", ...
  std::string str() const;
  friend bool operator==(const Morphism2& a, const Morphism2& b);
};

Morphism2 normalize(const LayeredDiagram& d);
/// a ∘ b: b below a.
Morphism2 compose_vertical(const Morphism2& a, const Morphism2& b);
/// a ⋆ b: a on the left.
Morphism2 compose_horizontal(const Morphism2& a, const Morphism2& b);
int hom_dim(const GenWord& p, const GenWord& q);

/// Direct-sum matrix of 2-morphisms. Entry (r, c) is coeffs(r, c) times the
/// canonical morphism cols[c] → rows[r].
struct MorphismMatrix {
  std::vector<GenWord> rows, cols;
  QSparse coeffs;

  Morphism2 entry(std::size_t r, std::size_t c) const;
  static MorphismMatrix identity(const std::vector<GenWord>& words);
  friend MorphismMatrix operator*(const MorphismMatrix& a, const MorphismMatrix& b);
  friend MorphismMatrix operator+(const MorphismMatrix& a, const MorphismMatrix& b);
  friend MorphismMatrix operator*(const Rational& c, const MorphismMatrix& a);
  friend bool operator==(const MorphismMatrix& a, const MorphismMatrix& b);
  bool is_zero() const;
};

}  // namespace cathei
