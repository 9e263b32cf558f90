#include <doctest.h>

#include <random>

#include "cathei/calculus_a.hpp"
#include "cathei/error.hpp"

using namespace cathei;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
GenWord W(const std::string& s) { return GenWord::parse(s); }

LayeredDiagram diag(const std::string& bottom, std::vector<ASlice> slices) { return {W(bottom), std::move(slices)}; }

// every valid word of at most len generators with colors in [-2, 2] over sources up to size 3
std::vector<GenWord> small_words(int len) {
  std::vector<GenWord> out;
  for (const auto& lam : partitions_up_to(3)) {
    std::vector<GenWord> layer{GenWord{lam, {}}};
    out.push_back(layer.front());
    for (int k = 0; k < len; ++k) {
      std::vector<GenWord> next;
      for (const auto& w : layer)
        for (int c = -2; c <= 2; ++c)
          for (Generator g : {F(c), E(c)}) {
            GenWord v = w;
            v.gens.insert(v.gens.begin(), g);
            if (word_apply(v)) next.push_back(v);
          }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }
  return out;
}
}  // namespace

TEST_CASE("word parsing and application") {
  CHECK(W("F3 E0 @ 3,2").str() == "F3 E0 @ 3,2");
  CHECK(W("@ 0").str() == "@ 0");
  CHECK(W("E-1 @ 1").gens.front() == E(-1));
  CHECK_THROWS_AS(W("F3 E0"), Error);
  CHECK_THROWS_AS(W("G3 @ 0"), Error);
  CHECK_THROWS_AS(W("F3x @ 0"), Error);
  CHECK(word_apply(W("F0 @ 0")) == P({1}));
  CHECK_FALSE(word_apply(W("F1 F1 @ 1")));
  CHECK(word_apply(W("F3 E0 @ 3,2")) == P({4, 1}));
}

TEST_CASE("word normal forms") {
  CHECK(word_normal_form(W("F0 E0 @ 1")) == W("@ 1"));
  CHECK_FALSE(word_normal_form(W("E0 F0 @ 1")));
  CHECK_FALSE(word_normal_form(W("F1 E1 @ 1")));
  CHECK(word_normal_form(W("F1 F0 @ 0")) == W("F1 F0 @ 0"));
  CHECK(word_normal_form(W("E0 F3 @ 3,2")) == W("F3 E0 @ 3,2"));
  for (const auto& w : small_words(3)) {
    auto nf = word_normal_form(w);
    REQUIRE(nf);
    CHECK(word_apply(*nf) == word_apply(w));
    CHECK(word_normal_form(*nf) == nf);
    bool seen_e = false;
    for (const auto& g : nf->gens) {
      if (g.kind == GenKind::E) seen_e = true;
      CHECK_FALSE((seen_e && g.kind == GenKind::F));
    }
  }
}

TEST_CASE("region inference") {
  auto id = infer_regions(diag("F0 @ 0", {}));
  CHECK_FALSE(id.zero);
  CHECK(id.labels.front() == std::vector<std::optional<Partition>>{P({1}), P({})});
  auto cw0 = infer_regions(diag("@ 1", {ASlice::cup(1, 0, +1), ASlice::cap(1)}));
  CHECK_FALSE(cw0.zero);
  CHECK(cw0.labels[1][1] == P({}));
  CHECK(infer_regions(diag("@ 1", {ASlice::cup(1, 1, +1), ASlice::cap(1)})).zero);
  CHECK_THROWS_AS(infer_regions(diag("F0 @ 0", {ASlice::cap(1)})), Error);
  CHECK_THROWS_AS(infer_regions(diag("F0 F3 @ 3,1", {ASlice::cap(1)})), Error);
  CHECK_THROWS_AS(infer_regions(diag("F0 @ 0", {ASlice::cup(3, 0, 1)})), Error);
}

TEST_CASE("normalize examples") {
  CHECK(normalize(diag("F0 F3 @ 3,1", {ASlice::cross(1), ASlice::cross(1)})).str() == "1 * identity-matching");
  auto adj = normalize(diag("F1 F0 @ 0", {ASlice::cross(1)}));
  CHECK(adj.zero);
  CHECK(adj.str() == "ZERO (adjacent colors)");
  CHECK(normalize(diag("@ 1", {ASlice::cup(1, 0, +1), ASlice::cap(1)})) == Morphism2::identity(W("@ 1")));
  CHECK(normalize(diag("@ 1", {ASlice::cup(1, 1, +1), ASlice::cap(1)})).zero_reason == "invalid region");
  CHECK(normalize(diag("F0 @ 0", {ASlice::cup(2, 0, -1), ASlice::cap(1)})) == Morphism2::identity(W("F0 @ 0")));
  CHECK(normalize(diag("F0 @ 0", {ASlice::cup(1, 0, +1), ASlice::cap(2)})) == Morphism2::identity(W("F0 @ 0")));
}

TEST_CASE("vertical composition") {
  Morphism2 f = Morphism2::canonical(W("E1 F-2 @ 2,1"), W("F-2 E1 @ 2,1"));
  Morphism2 g = Morphism2::canonical(W("F-2 E1 @ 2,1"), W("E1 F-2 @ 2,1"));
  REQUIRE_FALSE(f.zero);
  CHECK(compose_vertical(Morphism2::identity(f.dst), f) == f);
  CHECK(compose_vertical(f, Morphism2::identity(f.src)) == f);
  CHECK(compose_vertical(g, f) == Morphism2::identity(f.src));
  CHECK(compose_vertical(f, g) == Morphism2::identity(g.src));
  // counterclockwise circle: cup then cap with i addable
  Morphism2 cup = Morphism2::canonical(W("@ 1"), W("E1 F1 @ 1"));
  Morphism2 cap = Morphism2::canonical(W("E1 F1 @ 1"), W("@ 1"));
  CHECK(compose_vertical(cap, cup) == Morphism2::identity(W("@ 1")));
  CHECK_THROWS_AS(compose_vertical(cap, f), Error);
  CHECK(compose_vertical(cup, cap) == Morphism2::identity(W("E1 F1 @ 1")));
  Morphism2 two = f;
  two.scalar = 2;
  CHECK(compose_vertical(g, two).scalar == 2);
}

TEST_CASE("horizontal composition") {
  Morphism2 id = Morphism2::identity(W("F3 @ 3,2"));
  Morphism2 circle = normalize(diag("@ 3,2", {ASlice::cup(1, 0, +1), ASlice::cap(1)}));
  CHECK(compose_horizontal(id, circle) == id);
  CHECK(compose_horizontal(Morphism2::identity(W("@ 0")), Morphism2::identity(W("@ 0"))) == Morphism2::identity(W("@ 0")));
  CHECK(compose_horizontal(Morphism2::identity(W("F3 @ 1")), Morphism2::identity(W("@ 1"))).zero);
  Morphism2 up = Morphism2::identity(W("F1 @ 1"));
  Morphism2 base = Morphism2::identity(W("F0 @ 0"));
  CHECK(compose_horizontal(up, base) == Morphism2::identity(W("F1 F0 @ 0")));
  CHECK_THROWS_AS(compose_horizontal(base, up), Error);
  CHECK(compose_horizontal(Morphism2::make_zero(W("F1 @ 1"), W("F1 @ 1"), "x"), base).zero);
}

TEST_CASE("hom dimensions") {
  CHECK(hom_dim(W("F0 @ 0"), W("F0 @ 0")) == 1);
  CHECK(hom_dim(W("F3 E0 @ 3,2"), W("E0 F3 @ 3,2")) == 1);
  CHECK(hom_dim(W("F0 @ 0"), W("F1 @ 0")) == 0);
  CHECK(hom_dim(W("F0 @ 0"), W("@ 0")) == 0);
  CHECK(hom_dim(W("F0 E0 @ 1"), W("@ 1")) == 1);
}

TEST_CASE("property: canonical diagrams realize their matchings") {
  auto words = small_words(2);
  int checked = 0;
  for (const auto& p : words)
    for (const auto& q : words) {
      if (hom_dim(p, q) == 0) continue;
      auto m = canonical_matching(p, q);
      REQUIRE(m);
      LayeredDiagram d = canonical_diagram(p, q, *m);
      CHECK(d.top() == q);
      int loops = -1;
      CHECK(traced_matching(d, &loops) == *m);
      CHECK(loops == 0);
      CHECK(normalize(d) == Morphism2::canonical(p, q));
      // both ways round is the identity
      Morphism2 pq = Morphism2::canonical(p, q), qp = Morphism2::canonical(q, p);
      CHECK(compose_vertical(qp, pq) == Morphism2::identity(p));
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("property: triple point moves are invisible") {
  std::mt19937 rng(7);
  std::vector<int> colors{-3, 0, 3};
  int nonzero = 0;
  for (const auto& lam : partitions_up_to(6))
    for (int mask = 0; mask < 8; ++mask)
      for (int perm = 0; perm < 6; ++perm) {
        std::vector<int> c = colors;
        for (int k = 0; k < perm; ++k) std::next_permutation(c.begin(), c.end());
        GenWord w{lam, {}};
        for (int k = 0; k < 3; ++k) w.gens.push_back((mask >> k) & 1 ? E(c[k]) : F(c[k]));
        if (!word_apply(w)) continue;
        Morphism2 a = normalize({w, {ASlice::cross(1), ASlice::cross(2), ASlice::cross(1)}});
        Morphism2 b = normalize({w, {ASlice::cross(2), ASlice::cross(1), ASlice::cross(2)}});
        CHECK(a == b);
        if (!a.zero) ++nonzero;
      }
  CHECK(nonzero > 0);
}

TEST_CASE("property: key isomorphisms of 1-morphisms") {
  for (const auto& lam : partitions_up_to(4)) {
    GenWord empty{lam, {}};
    auto iso = [&](const GenWord& a, const GenWord& b) {
      REQUIRE(hom_dim(a, b) == 1);
      REQUIRE(hom_dim(b, a) == 1);
      Morphism2 ab = Morphism2::canonical(a, b), ba = Morphism2::canonical(b, a);
      CHECK(compose_vertical(ba, ab) == Morphism2::identity(a));
      CHECK(compose_vertical(ab, ba) == Morphism2::identity(b));
    };
    for (int i : addable(lam)) iso({lam, {E(i), F(i)}}, empty);
    for (int i : removable(lam)) iso({lam, {F(i), E(i)}}, empty);
    for (int i = -5; i <= 5; ++i)
      for (int j = -5; j <= 5; ++j) {
        if (i == j) continue;
        GenWord ef{lam, {E(i), F(j)}}, fe{lam, {F(j), E(i)}};
        if (word_apply(ef) && word_apply(fe)) iso(ef, fe);
        if (std::abs(i - j) > 1) {
          GenWord ff{lam, {F(i), F(j)}}, ff2{lam, {F(j), F(i)}};
          if (word_apply(ff) && word_apply(ff2)) iso(ff, ff2);
          GenWord ee{lam, {E(i), E(j)}}, ee2{lam, {E(j), E(i)}};
          if (word_apply(ee) && word_apply(ee2)) iso(ee, ee2);
        }
      }
  }
}

TEST_CASE("morphism matrices") {
  std::vector<GenWord> ws{W("F0 E0 @ 1"), W("@ 1")};
  MorphismMatrix id = MorphismMatrix::identity(ws);
  CHECK(id * id == id);
  CHECK((id + id) == Rational(2) * id);
  CHECK(id.entry(0, 0) == Morphism2::identity(ws[0]));
  CHECK(id.entry(0, 1).zero);
  CHECK_FALSE((Rational(0) * id == id));
  CHECK((Rational(0) * id).is_zero());
}
