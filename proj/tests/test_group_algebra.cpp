#include <doctest.h>

#include "cathei/error.hpp"
#include "cathei/group_algebra.hpp"

using namespace cathei;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// The standard two-dimensional representation of S_3 on {x ∈ ℚ³ : Σx = 0},
// basis e1-e2, e2-e3.
QMatrix standard_rep(const Permutation& w) {
  QMatrix perm = QMatrix::Zero(3, 3);
  for (int k = 1; k <= 3; ++k) perm(w(k) - 1, k - 1) = 1;
  QMatrix basis(3, 2);
  basis << 1, 0, -1, 1, 0, -1;
  QMatrix image = perm * basis;
  // solve basis * c = image column-wise (first two rows determine c)
  QMatrix out(2, 2);
  for (int c = 0; c < 2; ++c) {
    out(0, c) = image(0, c);
    out(1, c) = image(0, c) + image(1, c);
  }
  return out;
}
}  // namespace

TEST_CASE("permutation basics") {
  Permutation s1 = Permutation::simple(3, 1);
  Permutation s2 = Permutation::simple(3, 2);
  CHECK((s1 * s1).is_identity());
  CHECK((s1 * s2 * s1) == (s2 * s1 * s2));
  CHECK((s1 * s2)(1) == 2);  // s1(s2(1)) = s1(1) = 2
  for (const auto& p : all_permutations(4)) {
    CHECK(Permutation::unrank(4, p.rank()) == p);
    Permutation q(4);
    for (int i : p.reduced_word()) q = q * Permutation::simple(4, i);
    CHECK(q == p);
  }
  CHECK(Permutation::transposition(3, 1, 3).cycle_notation() == "(1 3)");
  CHECK(class_size(P({2, 1})) == 3);
  CHECK(class_size(P({2, 2})) == 3);
}

TEST_CASE("coset representatives") {
  CHECK(coset_representatives(3, 2).size() == 3);
  CHECK(coset_representatives(4, 2).size() == 12);
  for (const auto& g : all_permutations(4)) {
    Permutation h;
    std::size_t idx = coset_index(g, 2, &h);
    CHECK(coset_representatives(4, 2)[idx] * h.extended(4) == g);
  }
}

TEST_CASE("Murnaghan-Nakayama characters") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& cls : partitions_of(n)) CHECK(character_mn(P({n}), cls) == 1);
  CHECK(character_mn(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(character_mn(P({2, 1}), P({3})) == -1);
  CHECK_THROWS_AS(character_mn(P({2}), P({1})), Error);
  // brute-force matrices of the standard representation
  for (const auto& w : all_permutations(3)) {
    QMatrix m = standard_rep(w);
    CHECK(Rational(character_mn(P({2, 1}), w.cycle_type())) == m.trace());
  }
  for (const auto& lam : partitions_up_to(8))
    CHECK(character_mn(lam, P(std::vector<int>(lam.size(), 1))) == dim_hook(lam));
}

TEST_CASE("property: first orthogonality up to 7") {
  for (int n = 0; n <= 7; ++n) {
    const auto& t = character_table(n);
    for (std::size_t a = 0; a < t.labels.size(); ++a)
      for (std::size_t b = 0; b < t.labels.size(); ++b) {
        Integer s = 0;
        for (std::size_t c = 0; c < t.labels.size(); ++c) s += t.class_sizes[c] * t.chi[a][c] * t.chi[b][c];
        CHECK(s == (a == b ? factorial(n) : Integer(0)));
      }
  }
}

TEST_CASE("central idempotents and Jucys-Murphy elements") {
  CHECK(central_idempotent(P({1})) == GroupAlgebraElement::identity(1));
  GroupAlgebraElement id2 = GroupAlgebraElement::identity(2);
  GroupAlgebraElement s1 = GroupAlgebraElement::basis(Permutation::simple(2, 1));
  CHECK(central_idempotent(P({2})) == (id2 + s1) * frac(1, 2));
  CHECK(central_idempotent(P({1, 1})) == (id2 - s1) * frac(1, 2));
  CHECK(jucys_murphy(4, 1).is_zero());
  CHECK(jucys_murphy(3, 3) == GroupAlgebraElement::basis(Permutation::transposition(3, 1, 3)) +
                                  GroupAlgebraElement::basis(Permutation::transposition(3, 2, 3)));
  CHECK(jucys_murphy(2, 2) == s1);
  CHECK_THROWS_AS(jucys_murphy(2, 3), Error);
  CHECK(central_idempotent(P({2})).dump() == "1/2 * ()\n1/2 * (1 2)\n");
}

TEST_CASE("property: e_λ orthogonal central idempotents summing to 1, n ≤ 5") {
  for (int n = 0; n <= 5; ++n) {
    GroupAlgebraElement sum(n);
    auto parts = partitions_of(n);
    for (const auto& a : parts) {
      GroupAlgebraElement ea = central_idempotent(a);
      sum += ea;
      for (int i = 1; i < n; ++i) {
        auto s = GroupAlgebraElement::basis(Permutation::simple(n, i));
        CHECK(s * ea == ea * s);
      }
      for (const auto& b : parts) {
        GroupAlgebraElement prod = ea * central_idempotent(b);
        if (a == b) CHECK(prod == ea);
        else CHECK(prod.is_zero());
      }
      CHECK(regular_trace(ea) == Rational(dim_hook(a) * dim_hook(a)));
    }
    CHECK(sum == GroupAlgebraElement::identity(n));
  }
}

TEST_CASE("Young symmetrizer is a quasi-idempotent") {
  for (const auto& lam : partitions_up_to(4)) {
    auto c = young_symmetrizer(lam);
    Rational k = Rational(factorial(lam.size())) / Rational(dim_hook(lam));
    CHECK(c * c == c * k);
    CHECK(central_idempotent(lam) * c == c);
  }
}

TEST_CASE("sandwich trace matches direct computation") {
  auto e = central_idempotent(P({2, 1}));
  auto j = jucys_murphy(3, 3);
  // trace of v ↦ e v j, by applying to every basis element
  Rational direct = 0;
  for (const auto& g : all_permutations(3)) direct += (e * GroupAlgebraElement::basis(g) * j).coeff(g);
  CHECK(sandwich_trace(e, j) == direct);
}
