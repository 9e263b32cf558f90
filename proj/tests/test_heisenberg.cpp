#include <doctest.h>

#include "cathei/error.hpp"
#include "cathei/functor_bridge.hpp"

using namespace cathei;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

LinearMap zero_on(const std::vector<int>& signs, int base) {
  ChainSpace s = chain_for_word(signs, base);
  return LinearMap::zero(s, s);
}
}  // namespace

TEST_CASE("region labels and the negative-region convention") {
  HRegions up = infer_h_regions({{+1}, 0, {}});
  CHECK(up.labels[0] == std::vector<int>{1, 0});
  CHECK_FALSE(up.is_zero);
  HRegions down = infer_h_regions({{-1}, 0, {}});
  CHECK(down.labels[0] == std::vector<int>{-1, 0});
  CHECK(down.is_zero);
  for (int n = 0; n <= 3; ++n) {
    HRegions cw = infer_h_regions({{}, n, {HSlice::cup(1, +1), HSlice::cap(1)}});
    CHECK(cw.labels[1][1] == n - 1);
    CHECK(cw.is_zero == (n == 0));
  }
  CHECK(clockwise_circle(0).is_formally_zero());
  CHECK_THROWS_AS(HDiagram({+1}, 0, {HSlice::cap(1)}).levels(), Error);
  CHECK_THROWS_AS(HDiagram({+1, +1}, 0, {HSlice::cap(1)}).levels(), Error);
}

TEST_CASE("braids of permutations") {
  CHECK(braid_of_permutation(Permutation(3), 3, 0).slices.empty());
  CHECK(braid_of_permutation(Permutation::simple(2, 1), 2, 0).slices == std::vector<HSlice>{HSlice::cross(1)});
  for (int base = 0; base <= 2; ++base) {
    HDiagram a{{+1, +1, +1}, base, {HSlice::cross(1), HSlice::cross(2), HSlice::cross(1)}};
    HDiagram b{{+1, +1, +1}, base, {HSlice::cross(2), HSlice::cross(1), HSlice::cross(2)}};
    CHECK(eval_FH(a) == eval_FH(b));
    for (const auto& w : all_permutations(3))
      for (const auto& v : all_permutations(3)) {
        HMorphism dw = HMorphism::single(braid_of_permutation(w, 3, base));
        HMorphism dv = HMorphism::single(braid_of_permutation(v, 3, base));
        CHECK(eval_FH(compose_h(dw, dv, Compose::Vertical)) == eval_FH(braid_of_permutation(w * v, 3, base)));
      }
  }
}

TEST_CASE("epsilon_lambda examples") {
  HMorphism e0 = epsilon_lambda(Partition());
  REQUIRE(e0.terms.size() == 1);
  CHECK(e0.terms[0].first == 1);
  CHECK(e0.terms[0].second.slices.empty());
  HMorphism e1 = epsilon_lambda(P({1}));
  REQUIRE(e1.terms.size() == 1);
  CHECK(e1.terms[0].first == 1);
  CHECK(e1.terms[0].second.slices.size() == 2);
  HMorphism e2 = epsilon_lambda(P({2}));
  REQUIRE(e2.terms.size() == 2);
  for (const auto& [c, d] : e2.terms) CHECK(c == frac(1, 4));  // (1/2!) e_(2)
  ChainSpace a2 = chain_for_word({}, 2);
  CHECK(eval_FH(e2) == factor_multiply(a2, 0, Side::Right, central_idempotent(P({2}))));
  oracle_bounds().group_algebra = 6;
  CHECK_THROWS_AS(epsilon_lambda(P({7})), Error);
}

TEST_CASE("delta_n") {
  CHECK(delta_n(0).is_formally_zero());
  HMorphism d1 = delta_n(1);
  CHECK(d1.terms.size() == 2);
  CHECK(eval_FH(d1 + epsilon_lambda(P({1}))) == LinearMap::identity(chain_for_word({}, 1)));
  for (int n = 0; n <= 4; ++n) CHECK(eval_FH(delta_n(n)).is_zero());
}

TEST_CASE("region shift") {
  HMorphism id1 = HMorphism::identity({}, 1);
  HMorphism s = region_shift(id1);
  CHECK(s.base == 0);
  CHECK(s.terms.size() == 1);
  CHECK(region_shift(epsilon_lambda(P({1}))).is_formally_zero());
  HMorphism theta = epsilon_lambda(P({2, 1})) + HMorphism::identity({}, 3);
  HMorphism t = theta;
  for (int m = 0; m < 4; ++m) t = region_shift(t);
  CHECK(t.is_formally_zero());
  CHECK(region_shift(HMorphism::identity({+1}, 0)).is_formally_zero());
}

TEST_CASE("composition") {
  // formal composites up to 3; at 4 the product of the evaluations
  for (int n = 0; n <= 4; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& m : partitions_of(n)) {
        LinearMap el = eval_FH(epsilon_lambda(l));
        LinearMap c = n <= 3 ? eval_FH(compose_h(epsilon_lambda(l), epsilon_lambda(m), Compose::Vertical))
                             : el * eval_FH(epsilon_lambda(m));
        if (l == m)
          CHECK(c == el);
        else
          CHECK(c.is_zero());
      }
  HMorphism x = HMorphism::cross({+1, +1}, 1, 1);
  CHECK(compose_h(x, HMorphism::identity({+1, +1}, 1), Compose::Vertical).terms == x.terms);
  CHECK(compose_h(HMorphism::identity({+1, +1}, 1), x, Compose::Vertical).terms == x.terms);
  CHECK_THROWS_AS(compose_h(x, HMorphism::identity({+1}, 1), Compose::Vertical), Error);
  // ε_{n+1} Q_+ = Q_+ ε_n
  for (int n = 0; n <= 3; ++n) {
    HMorphism up = HMorphism::identity({+1}, n);
    HMorphism en = HMorphism::zero({}, {}, n), en1 = HMorphism::zero({}, {}, n + 1);
    for (const auto& l : partitions_of(n)) en = en + epsilon_lambda(l);
    for (const auto& l : partitions_of(n + 1)) en1 = en1 + epsilon_lambda(l);
    CHECK(eval_FH(compose_h(en1, up, Compose::Horizontal)) == eval_FH(compose_h(up, en, Compose::Horizontal)));
  }
}

TEST_CASE("property: negative regions absorb") {
  HMorphism bad = HMorphism::identity({-1}, 0);
  CHECK(bad.is_formally_zero());
  CHECK(compose_h(bad, bad, Compose::Vertical).is_formally_zero());
  CHECK(compose_h(HMorphism::identity({+1}, 0), clockwise_circle(0), Compose::Horizontal).is_formally_zero());
}

TEST_CASE("property: curls and circles, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(eval_FH(left_curl(n)).is_zero());
    CHECK(eval_FH(counterclockwise_circle(n)) == LinearMap::identity(chain_for_word({}, n)));
    CHECK(eval_FH(clockwise_circle(n)) == Rational(n) * LinearMap::identity(chain_for_word({}, n)));
    for (const auto& l : partitions_of(n)) {
      LinearMap e = eval_FH(epsilon_lambda(l));
      CHECK(e * e == e);
      Integer d = dim_hook(l);
      CHECK(sparse_rank(e.matrix) == static_cast<Eigen::Index>(d * d));
    }
  }
  CHECK(eval_FH(left_curl(1)) == zero_on({+1}, 1));
}

TEST_CASE("property: up-down double crossings") {
  for (int n = 0; n <= 3; ++n) {
    HDiagram ud{{+1, -1}, n, {HSlice::cross(1), HSlice::cross(1)}};
    CHECK(eval_FH(ud) == LinearMap::identity(chain_for_word({+1, -1}, n)));
    HDiagram du{{-1, +1}, n, {HSlice::cross(1), HSlice::cross(1)}};
    HDiagram cc{{-1, +1}, n, {HSlice::cap(1), HSlice::cup(1, -1)}};
    CHECK(eval_FH(du) + eval_FH(cc) == LinearMap::identity(chain_for_word({-1, +1}, n)));
  }
}
