#pragma once

#include <string>
#include <vector>

#include "cathei/group_algebra.hpp"
#include "cathei/linalg.hpp"

namespace cathei {

/// One tensor factor: A_ambient viewed as an (A_left, A_right)-bimodule.
struct ChainFactor {
  int ambient = 0;
  int left = 0;
  int right = 0;
  friend bool operator==(const ChainFactor&, const ChainFactor&) = default;
};

/// F_1 ⊗_{A_{b_1}} F_2 ⊗ ... ⊗ F_ℓ with the coset normal form basis: every
/// factor but the last is a canonical representative of S_M / S_b, the last
/// is a free permutation. Basis index is mixed radix, first factor most
/// significant. A chain with `zero` set is the zero space.
class ChainSpace {
 public:
  ChainSpace() = default;
  explicit ChainSpace(std::vector<ChainFactor> factors);
  static ChainSpace zero_space();

  const std::vector<ChainFactor>& factors() const { return factors_; }
  bool is_zero() const { return zero_; }
  Eigen::Index dim() const { return dim_; }

  /// Index of the pure tensor g_1 ⊗ ... ⊗ g_ℓ; the vector is consumed.
  Eigen::Index index_of(std::vector<Permutation>& g) const;
  /// The normal form tuple of a basis element.
  std::vector<Permutation> element(Eigen::Index idx) const;

  std::string describe() const;
  friend bool operator==(const ChainSpace& a, const ChainSpace& b) {
    return a.zero_ == b.zero_ && a.factors_ == b.factors_;
  }

 private:
  std::vector<ChainFactor> factors_;
  std::vector<const CosetTable*> tables_;
  std::vector<Eigen::Index> strides_;
  Eigen::Index dim_ = 0;
  bool zero_ = true;
};

/// Exact linear map between chain spaces; matrix rows index the codomain.
struct LinearMap {
  ChainSpace domain;
  ChainSpace codomain;
  QSparse matrix;

  static LinearMap identity(const ChainSpace& s);
  static LinearMap zero(const ChainSpace& dom, const ChainSpace& cod);

  bool is_zero() const { return sparse_is_zero(matrix); }
  std::string digest() const { return matrix_digest(matrix); }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(const Rational& c, const LinearMap& a);
  friend bool operator==(const LinearMap& a, const LinearMap& b);
};

using Tensor = std::vector<Permutation>;
using TensorTerms = std::vector<std::pair<Rational, Tensor>>;

/// Matrix of the linear extension of f from basis elements of dom.
template <typename F>
LinearMap build_map(const ChainSpace& dom, const ChainSpace& cod, F&& f) {
  LinearMap m{dom, cod, QSparse(cod.dim(), dom.dim())};
  if (dom.dim() == 0 || cod.dim() == 0) return m;
  std::vector<Eigen::Triplet<Rational, std::int64_t>> trip;
  for (Eigen::Index c = 0; c < dom.dim(); ++c) {
    TensorTerms out = f(dom.element(c));
    for (auto& [coef, t] : out) trip.emplace_back(cod.index_of(t), c, coef);
  }
  m.matrix.setFromTriplets(trip.begin(), trip.end());
  prune_zeros(m.matrix);
  return m;
}

enum class Side { Left, Right };

/// v ↦ x·v or v·x on factor k, for x commuting with the tensor relations.
LinearMap factor_multiply(const ChainSpace& s, std::size_t k, Side side, const GroupAlgebraElement& x);
/// Multiplication by x in region j of the chain (0 = leftmost region,
/// j = ℓ is the region right of the last factor, acting on its right).
LinearMap junction_multiply(const ChainSpace& s, std::size_t j, const GroupAlgebraElement& x);

// ---- Heisenberg words and their slice maps -------------------------------

/// Region labels of a sign word at the given base: regions[p] is the label
/// left of strand p+1 for p < ℓ, regions[ℓ] = base.
std::vector<int> word_regions(const std::vector<int>& signs, int base);
/// F_H(Q_c 1_n): one factor per strand plus the terminal (n).
ChainSpace chain_for_word(const std::vector<int>& signs, int base);

/// Crossing of strands p, p+1 (1-indexed). Codomain word has them swapped.
LinearMap cross_map(const std::vector<int>& signs, int base, int p);
/// Cap joining strands p, p+1 (must have opposite signs).
LinearMap cap_map(const std::vector<int>& signs, int base, int p);
/// Cup inserted so that the new strands occupy positions p, p+1; the left
/// new strand has sign `left_sign`.
LinearMap cup_map(const std::vector<int>& signs, int base, int p, int left_sign);

struct AdjunctionMaps {
  LinearMap eps_R, eta_R, eps_L, eta_L;
};
AdjunctionMaps adjunction_maps(int n);
struct RhoTau {
  LinearMap rho, tau;
};
RhoTau rho_tau(int n);
struct CrossingMaps {
  LinearMap R, L;
};
CrossingMaps crossing_maps(int n);

// ---- bimodules with component filters --------------------------------------

struct ComponentFilter {
  int eigenvalue = 0;
  Side side = Side::Right;
  int jm_index = 0;
};

/// The subspace L·A_m·R of A_m, closed under A_left on the left and A_right
/// on the right.
struct Bimodule {
  int ambient = 0;
  int left = 0;
  int right = 0;
  GroupAlgebraElement left_proj;
  GroupAlgebraElement right_proj;
  std::vector<ComponentFilter> filters;

  static Bimodule regular(int m, int left, int right);
  /// V_λ as a left A_n-module: A_n times a primitive idempotent.
  static Bimodule irreducible(const Partition& lambda);
  Rational dimension() const;
};

/// Spectral projector of J_m onto eigenvalue i (Lagrange interpolation over
/// the contents range, certified by the annihilating polynomial).
GroupAlgebraElement jm_spectral_projector(int m, int i);
/// Σ_μ e_{μ⊞i} e_μ over μ ⊢ m-1.
GroupAlgebraElement sandwich_projector(int m, int i);
/// Exact kernel of v ↦ v(J_m - i) (or (J_m - i)v) on A_m, as RREF rows.
QMatrix eigenspace_kernel_rref(int m, int i, Side side);
/// ker(J_m - i) = image of sandwich_projector(m, i) without a rational
/// kernel: the image lies in the kernel exactly, and its dimension reaches
/// the bound given by the rank mod p.
bool eigenspace_matches_sandwich(int m, int i, Side side);

Bimodule eigenspace_component(int m, int k, int i, Side side);

struct TensorResult {
  ChainSpace space;
  LinearMap projector;
  QMatrix basis;  // rows span the image, RREF
  Eigen::Index dimension = 0;
};
TensorResult tensor_over(const Bimodule& left, const Bimodule& right, int middle_degree);

/// Irreducible constituents of B ⊗_{A_|λ|} V_λ as an A_left-module.
std::vector<Partition> decompose_module(const Bimodule& b, const Partition& lambda);

}  // namespace cathei
