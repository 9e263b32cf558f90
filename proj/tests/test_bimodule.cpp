#include <doctest.h>

#include "cathei/bimodule.hpp"
#include "cathei/error.hpp"

using namespace cathei;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

Eigen::Index idx(const ChainSpace& s, Tensor t) { return s.index_of(t); }

LinearMap id_on(const std::vector<int>& signs, int base) { return LinearMap::identity(chain_for_word(signs, base)); }

// product of the factors of a tensor in the top ambient group
Permutation flatten(const Tensor& t, int m) {
  Permutation out(m);
  for (const auto& g : t) out = out * g.extended(m);
  return out;
}
}  // namespace

TEST_CASE("chain spaces and coset normal form") {
  ChainSpace s({{3, 3, 2}, {3, 2, 3}});
  CHECK(s.dim() == 18);
  for (Eigen::Index k = 0; k < s.dim(); ++k) CHECK(idx(s, s.element(k)) == k);
  // g s ⊗ h = g ⊗ s h for s ∈ S_2
  Permutation s1 = Permutation::simple(3, 1);
  for (const auto& g : all_permutations(3))
    for (const auto& h : all_permutations(3)) CHECK(idx(s, {g * s1, h}) == idx(s, {g, s1 * h}));
  CHECK(chain_for_word({-1}, 0).is_zero());
  CHECK(chain_for_word({+1, +1}, 1).dim() == 6);
  CHECK(chain_for_word({-1, +1}, 2).dim() == 6);
}

TEST_CASE("oracle: coset basis matches row reduction of the middle relations") {
  struct Case {
    int m1, mid, m2;
  };
  for (Case c : {Case{2, 1, 2}, Case{3, 2, 3}, Case{3, 1, 2}, Case{3, 2, 2}, Case{4, 3, 3}}) {
    auto g1 = all_permutations(c.m1), g2 = all_permutations(c.m2);
    Eigen::Index n2 = static_cast<Eigen::Index>(g2.size());
    Eigen::Index d = static_cast<Eigen::Index>(g1.size()) * n2;
    std::vector<std::vector<std::pair<Eigen::Index, int>>> rels;
    for (const auto& a : g1)
      for (const auto& b : g2)
        for (int i = 1; i < c.mid; ++i) {
          Permutation si = Permutation::simple(c.mid, i);
          Eigen::Index lhs = static_cast<Eigen::Index>((a * si.extended(c.m1)).rank()) * n2 + static_cast<Eigen::Index>(b.rank());
          Eigen::Index rhs = static_cast<Eigen::Index>(a.rank()) * n2 + static_cast<Eigen::Index>((si.extended(c.m2) * b).rank());
          rels.push_back({{lhs, 1}, {rhs, -1}});
        }
    QMatrix r = QMatrix::Zero(static_cast<Eigen::Index>(rels.size()), d);
    for (std::size_t k = 0; k < rels.size(); ++k)
      for (auto [col, v] : rels[k]) r(static_cast<Eigen::Index>(k), col) += v;
    ChainSpace s({{c.m1, c.m1, c.mid}, {c.m2, c.mid, c.m2}});
    CHECK(d - rank(r) == s.dim());
  }
}

TEST_CASE("adjunction map examples") {
  auto a0 = adjunction_maps(0);
  CHECK(a0.eps_R.matrix.rows() == 1);
  CHECK(a0.eps_R.matrix.cols() == 1);
  CHECK(a0.eps_R.matrix.coeff(0, 0) == 1);
  auto a1 = adjunction_maps(1);
  const ChainSpace& dom = a1.eps_L.domain;
  REQUIRE(dom.dim() == 2);
  Eigen::Index e_id = idx(dom, {Permutation(2), Permutation(2), Permutation(1)});
  Eigen::Index e_s = idx(dom, {Permutation(2), Permutation::simple(2, 1), Permutation(1)});
  CHECK(a1.eps_L.matrix.coeff(0, e_id) == 1);
  CHECK(a1.eps_L.matrix.coeff(0, e_s) == 0);
}

TEST_CASE("property: four zigzag identities, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(cap_map({+1, -1, +1}, n, 1) * cup_map({+1}, n, 2, -1) == id_on({+1}, n));
    CHECK(cap_map({+1, -1, +1}, n, 2) * cup_map({+1}, n, 1, +1) == id_on({+1}, n));
    CHECK(cap_map({-1, +1, -1}, n + 1, 2) * cup_map({-1}, n + 1, 1, -1) == id_on({-1}, n + 1));
    CHECK(cap_map({-1, +1, -1}, n + 1, 1) * cup_map({-1}, n + 1, 2, +1) == id_on({-1}, n + 1));
  }
}

TEST_CASE("rho and tau") {
  auto rt = rho_tau(1);
  REQUIRE(rt.rho.domain.dim() == 1);
  Eigen::Index s1 = idx(rt.rho.codomain, {Permutation::simple(2, 1), Permutation(2), Permutation(1)});
  CHECK(rt.rho.matrix.coeff(s1, 0) == 1);
  Eigen::Index one = idx(rt.rho.codomain, {Permutation(2), Permutation(2), Permutation(1)});
  CHECK(rt.tau.matrix.coeff(0, s1) == 1);
  CHECK(rt.tau.matrix.coeff(0, one) == 0);
  for (int n = 1; n <= 4; ++n) {
    auto d = rho_tau(n);
    auto adj = adjunction_maps(n);
    CHECK(d.tau * d.rho == id_on({+1, -1}, n));
    CHECK((adj.eps_L * d.rho).is_zero());
    CHECK((d.tau * adj.eta_R).is_zero());
    CHECK(adj.eps_L * adj.eta_R == id_on({}, n));
    LinearMap sum = d.rho * d.tau + adj.eta_R * adj.eps_L;
    CHECK(sum == id_on({-1, +1}, n));
    if (n == 2) CHECK(sum.matrix.rows() == 6);
  }
}

TEST_CASE("crossing maps R_n and L_n") {
  auto c1 = crossing_maps(1);
  const ChainSpace& s = c1.R.domain;
  REQUIRE(s.dim() == 2);
  for (Eigen::Index k = 0; k < 2; ++k) {
    Permutation g = flatten(s.element(k), 2);
    Eigen::Index img = idx(s, {g * Permutation::simple(2, 1), Permutation(1), Permutation(0)});
    CHECK(c1.R.matrix.coeff(img, k) == 1);
  }
  // L_1 is R_1 transported along g ↦ g⁻¹
  const ChainSpace& t = c1.L.domain;
  REQUIRE(t.dim() == 2);
  for (Eigen::Index k = 0; k < 2; ++k) {
    Permutation g = flatten(s.element(k), 2);
    Permutation gr = g * Permutation::simple(2, 1);
    Eigen::Index from = idx(t, {Permutation(1), Permutation(2), g.inverse()});
    Eigen::Index to = idx(t, {Permutation(1), Permutation(2), gr.inverse()});
    CHECK(c1.L.matrix.coeff(to, from) == 1);
  }
  auto c2 = crossing_maps(2);
  CHECK(c2.R * c2.R == LinearMap::identity(c2.R.domain));
  CHECK(c2.L * c2.L == LinearMap::identity(c2.L.domain));
}

TEST_CASE("eigenspace components") {
  CHECK(eigenspace_component(2, 1, 1, Side::Right).dimension() == 1);
  CHECK(eigenspace_component(2, 1, -1, Side::Right).dimension() == 1);
  CHECK(eigenspace_component(2, 1, 0, Side::Right).dimension() == 0);
  CHECK_THROWS_AS(eigenspace_component(3, 1, 0, Side::Right), Error);
  for (int n = 0; n <= 4; ++n)
    for (int i = -n - 1; i <= n + 1; ++i) {
      Rational predicted = 0;
      for (const auto& lam : partitions_of(n))
        if (auto up = add_box(lam, i)) predicted += Rational(dim_hook(lam) * dim_hook(*up));
      CHECK(eigenspace_component(n + 1, n, i, Side::Right).dimension() == predicted);
      CHECK(eigenspace_component(n + 1, n, i, Side::Left).dimension() == predicted);
    }
}

TEST_CASE("tensor products over A_n") {
  CHECK(tensor_over(Bimodule::regular(2, 2, 1), Bimodule::regular(1, 1, 1), 1).dimension == 2);
  CHECK(tensor_over(Bimodule::regular(2, 2, 1), Bimodule::regular(2, 1, 2), 1).dimension == 4);
  auto t = tensor_over(Bimodule::regular(3, 2, 3), Bimodule::irreducible(P({2, 1})), 3);
  CHECK(t.dimension == 2);
  CHECK(t.basis.rows() == 2);
  CHECK(decompose_module(Bimodule::regular(3, 2, 3), P({2, 1})) == std::vector<Partition>{P({2}), P({1, 1})});
}

TEST_CASE("module decompositions") {
  CHECK(decompose_module(eigenspace_component(2, 1, 1, Side::Right), P({1})) == std::vector<Partition>{P({2})});
  CHECK(decompose_module(eigenspace_component(2, 1, -1, Side::Right), P({1})) == std::vector<Partition>{P({1, 1})});
  CHECK(decompose_module(Bimodule::regular(3, 3, 2), P({2})) == std::vector<Partition>{P({3}), P({2, 1})});
  // i-induction of an irreducible is irreducible
  for (const auto& lam : partitions_up_to(3))
    for (int i : addable(lam)) {
      auto parts = decompose_module(eigenspace_component(lam.size() + 1, lam.size(), i, Side::Right), lam);
      CHECK(parts == std::vector<Partition>{*add_box(lam, i)});
    }
}
