#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cathei/partition.hpp"
#include "cathei/permutation.hpp"
#include "cathei/rational.hpp"

namespace cathei {

/// Elementary event over a sign word; positions are 1-indexed. A cup puts a
/// strand of sign left_sign at pos and its partner at pos+1.
struct HSlice {
  enum class Kind { Cross, Cap, Cup };
  Kind kind = Kind::Cross;
  int pos = 1;
  int left_sign = +1;

  static HSlice cross(int p) { return {Kind::Cross, p, +1}; }
  static HSlice cap(int p) { return {Kind::Cap, p, +1}; }
  static HSlice cup(int p, int left_sign) { return {Kind::Cup, p, left_sign}; }
  friend bool operator==(const HSlice&, const HSlice&) = default;
};

/// Layered diagram over Q_signs 1_base; base is the rightmost region.
struct HDiagram {
  std::vector<int> signs;
  int base = 0;
  std::vector<HSlice> slices;

  /// Sign word at every level, bottom first; throws MalformedDiagram.
  std::vector<std::vector<int>> levels() const;
  std::vector<int> top_signs() const { return levels().back(); }
  friend bool operator==(const HDiagram&, const HDiagram&) = default;
};

struct HRegions {
  std::vector<std::vector<int>> labels;  // labels[level][gap], gap 0 leftmost
  bool is_zero = false;
};
HRegions infer_h_regions(const HDiagram& d);

/// Formal rational combination of diagrams with common boundary. Summands
/// with a negative region are dropped on insertion.
struct HMorphism {
  std::vector<int> bottom, top;
  int base = 0;
  std::vector<std::pair<Rational, HDiagram>> terms;

  static HMorphism single(const HDiagram& d, const Rational& c = Rational(1));
  static HMorphism zero(const std::vector<int>& bottom, const std::vector<int>& top, int base);
  static HMorphism identity(const std::vector<int>& signs, int base);
  static HMorphism cross(const std::vector<int>& signs, int base, int p);
  static HMorphism cap(const std::vector<int>& signs, int base, int p);
  static HMorphism cup(const std::vector<int>& signs, int base, int p, int left_sign);

  void add(const Rational& c, const HDiagram& d);
  bool is_formally_zero() const { return terms.empty(); }

  friend HMorphism operator+(const HMorphism& a, const HMorphism& b);
  friend HMorphism operator-(const HMorphism& a, const HMorphism& b);
  friend HMorphism operator*(const Rational& c, const HMorphism& a);
};

/// Left region of a sign word over base.
int left_region(const std::vector<int>& signs, int base);

/// Upward braid with F_H(D(w)) = right multiplication by w⁻¹; s_i crosses
/// the strands at positions n-i, n-i+1.
HDiagram braid_of_permutation(const Permutation& w, int n_strands, int base);
/// Downward braid, the rotation of D(w): s_i crosses positions i, i+1.
HDiagram braid_down(const Permutation& w, int n_strands, int base);
/// D(w) closed off to the right: n cups, the braid, n caps, on 1_{n+base}.
HDiagram braid_closure(const Permutation& w, int base);

HMorphism epsilon_lambda(const Partition& lambda, int base = 0);
HMorphism delta_n(int n);
HMorphism region_shift(const HMorphism& m);

enum class Compose { Vertical, Horizontal };
/// Vertical: a ∘ b with b below. Horizontal: a ⋆ b with a on the left.
HMorphism compose_h(const HMorphism& a, const HMorphism& b, Compose mode);

HMorphism clockwise_circle(int n);
HMorphism counterclockwise_circle(int n);
/// Curls on a single upward strand over base n.
HMorphism right_curl(int n);
HMorphism left_curl(int n);

}  // namespace cathei
