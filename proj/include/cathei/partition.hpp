#pragma once

#include <compare>
#include <functional>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cathei/rational.hpp"

namespace cathei {

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int row) const { return row < length() ? parts_[row] : 0; }

  /// Transposed diagram.
  Partition conjugate() const;

  /// "3,2"; the empty partition prints as "0".
  std::string str() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Canonical order: reverse lexicographic, so (2) precedes (1,1).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using Content = int;

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);

/// Contents i with an addable i-box, ascending.
std::vector<Content> addable(const Partition& lambda);
/// Contents i with a removable i-box, ascending.
std::vector<Content> removable(const Partition& lambda);
bool is_addable(const Partition& lambda, Content i);
bool is_removable(const Partition& lambda, Content i);

std::optional<Partition> add_box(const Partition& lambda, Content i);
std::optional<Partition> remove_box(const Partition& lambda, Content i);

std::vector<Content> contents_multiset(const Partition& lambda);
bool contains(const Partition& lambda, const Partition& mu);

int hook_length(const Partition& lambda, int row, int col);
/// d_λ by the hook-length formula.
Integer dim_hook(const Partition& lambda);
/// d_λ by counting standard Young tableaux; independent of the hook formula.
Integer dim_syt_oracle(const Partition& lambda);

/// Visits every standard Young tableau of shape λ (rows of entries).
void for_each_standard_tableau(
    const Partition& lambda,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit);

/// d_λ as an exact rational, the form consumed by coefficient formulas.
Rational dimq(const Partition& lambda);

Integer factorial(int n);

}  // namespace cathei
