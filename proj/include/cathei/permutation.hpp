#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cathei/partition.hpp"

namespace cathei {

/// Permutation of {1..n} in one-line notation, n ≤ 16.
/// Products compose right to left: (p*q)(k) = p(q(k)).
class Permutation {
 public:
  static constexpr int kMaxDegree = 16;

  Permutation() = default;
  explicit Permutation(int n);
  static Permutation from_one_line(const std::vector<int>& images);
  static Permutation transposition(int n, int a, int b);
  /// s_i = (i, i+1).
  static Permutation simple(int n, int i);

  int degree() const { return n_; }
  int operator()(int k) const { return img_[k - 1] + 1; }
  std::vector<int> one_line() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  /// Same permutation viewed in S_m, m ≥ n, fixing n+1..m.
  Permutation extended(int m) const;
  /// Restriction to S_m; requires every k > m to be fixed.
  Permutation restricted(int m) const;
  bool is_identity() const;
  /// Largest k with p(k) ≠ k, or 0 for the identity.
  int support_max() const;

  Partition cycle_type() const;
  std::string cycle_notation() const;
  int sign() const;

  /// Rank in lexicographic order of one-line notation, in [0, n!).
  std::uint64_t rank() const;
  static Permutation unrank(int n, std::uint64_t r);
  std::uint64_t code() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.img_ <=> b.img_;
  }

  /// Reduced word as simple-reflection indices i with p = s_{i_1} s_{i_2} ... .
  std::vector<int> reduced_word() const;

 private:
  std::array<std::uint8_t, kMaxDegree> img_{};
  int n_ = 0;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return std::hash<std::uint64_t>()(p.code()); }
};

std::vector<Permutation> all_permutations(int n);

/// Canonical left coset representatives of S_m / S_b, sorted by one-line
/// notation: entries in positions 1..b increase.
const std::vector<Permutation>& coset_representatives(int m, int b);

/// Frozen lookup table for S_m / S_b; safe to share once built.
struct CosetTable {
  int m = 0;
  int b = 0;
  std::vector<Permutation> reps;
  std::unordered_map<std::uint64_t, std::size_t> index;
  /// Index of the representative of g S_b; h receives the S_b factor.
  std::size_t locate(const Permutation& g, Permutation* h) const;
};
const CosetTable& coset_table(int m, int b);
/// Index of the canonical representative of g S_b, and h ∈ S_b with g = rep*h.
std::size_t coset_index(const Permutation& g, int b, Permutation* h);

/// |class| for a given cycle type inside S_n.
Integer class_size(const Partition& cycle_type);

}  // namespace cathei
