#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cathei/partition.hpp"
#include "cathei/permutation.hpp"
#include "cathei/rational.hpp"

namespace cathei {

/// Element of the rational group algebra A_n = ℚS_n.
class GroupAlgebraElement {
 public:
  using Term = std::pair<Permutation, Rational>;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(int degree) : degree_(degree) {}
  static GroupAlgebraElement identity(int degree);
  static GroupAlgebraElement basis(const Permutation& p, const Rational& c = Rational(1));

  int degree() const { return degree_; }
  /// Terms sorted by one-line notation, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Permutation& p) const;

  /// The same element in A_m, m ≥ degree.
  GroupAlgebraElement embedded(int m) const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs);
  GroupAlgebraElement& operator*=(const Rational& c);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& c) { return a *= c; }
  friend GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a) { return a *= c; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

  /// One term per line: "coeff * cycle-notation".
  std::string dump() const;

  static GroupAlgebraElement from_terms(int degree, std::vector<Term> terms);

 private:
  void normalize();

  int degree_ = 0;
  std::vector<Term> terms_;
};

/// χ_λ on the class of the given cycle type (Murnaghan–Nakayama).
Integer character_mn(const Partition& lambda, const Partition& cycle_type);

/// Character table of S_n: rows indexed by partitions_of(n) (characters),
/// columns by partitions_of(n) (cycle types). Built once per degree.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> labels;
  std::vector<std::vector<Integer>> chi;  // chi[λ][class]
  std::vector<Integer> class_sizes;
};
const CharacterTable& character_table(int n);

/// e_λ = (d_λ/n!) Σ_w χ_λ(w⁻¹) w.
GroupAlgebraElement central_idempotent(const Partition& lambda);
/// J_i = Σ_{k<i} (k, i) in A_n.
GroupAlgebraElement jucys_murphy(int n, int i);

/// The coefficient of the identity, times n!: the trace of left (or right)
/// multiplication on A_n.
Rational regular_trace(const GroupAlgebraElement& x);

/// Σ over the conjugacy class of cycle type c of the coefficients of x.
std::map<Partition, Rational> class_sums(const GroupAlgebraElement& x);

/// Trace of v ↦ x v y on A_n (x, y ∈ A_n).
Rational sandwich_trace(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// Young symmetrizer c_λ = (Σ row group)(Σ sign·column group) for the
/// row-reading tableau; c_λ² = (n!/d_λ) c_λ.
GroupAlgebraElement young_symmetrizer(const Partition& lambda);

}  // namespace cathei
