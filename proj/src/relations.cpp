#include "cathei/relations.hpp"

#include "cathei/error.hpp"
#include "cathei/functor_bridge.hpp"

namespace cathei {

nlohmann::json RelationReport::to_json() const {
  return {{"suite", suite}, {"bound", bound}, {"checked", checked}, {"pass", pass()}, {"failures", failures}};
}

namespace {

HMorphism h_of(const std::vector<int>& signs, int n, std::vector<HSlice> slices) {
  return HMorphism::single({signs, n, std::move(slices)});
}

std::string sign_str(const std::vector<int>& signs) {
  std::string s;
  for (int x : signs) s += x > 0 ? '+' : '-';
  return s;
}

}  // namespace

std::vector<HRelation> heisenberg_relations(int n) {
  std::vector<HRelation> out;
  out.push_back({"braid", h_of({+1, +1, +1}, n, {HSlice::cross(1), HSlice::cross(2), HSlice::cross(1)}),
                 h_of({+1, +1, +1}, n, {HSlice::cross(2), HSlice::cross(1), HSlice::cross(2)})});
  out.push_back({"transposition-squared", h_of({+1, +1}, n, {HSlice::cross(1), HSlice::cross(1)}),
                 HMorphism::identity({+1, +1}, n)});
  out.push_back({"down-up-double-cross", h_of({-1, +1}, n, {HSlice::cross(1), HSlice::cross(1)}),
                 HMorphism::identity({-1, +1}, n) - h_of({-1, +1}, n, {HSlice::cap(1), HSlice::cup(1, -1)})});
  out.push_back({"up-down-double-cross", h_of({+1, -1}, n, {HSlice::cross(1), HSlice::cross(1)}),
                 HMorphism::identity({+1, -1}, n)});
  out.push_back({"ccc", counterclockwise_circle(n), HMorphism::identity({}, n)});
  out.push_back({"left-curl", left_curl(n), HMorphism::zero({+1}, {+1}, n)});
  for (int s : {+1, -1}) {
    out.push_back({"zigzag-right", h_of({s}, n, {HSlice::cup(2, -s), HSlice::cap(1)}), HMorphism::identity({s}, n)});
    out.push_back({"zigzag-left", h_of({s}, n, {HSlice::cup(1, s), HSlice::cap(2)}), HMorphism::identity({s}, n)});
  }
  return out;
}

std::vector<ARelation> a_relations(const Partition& lambda) {
  std::vector<ARelation> out;
  int r = lambda.size() + 3;
  auto valid = [&](std::vector<Generator> g) { return word_apply(GenWord{lambda, std::move(g)}).has_value(); };
  auto far = [](int a, int b) { return a - b > 1 || b - a > 1; };
  for (int i = -r; i <= r; ++i)
    for (int j = -r; j <= r; ++j) {
      if (!far(i, j)) continue;
      for (int k = -r; k <= r; ++k) {
        if (!far(i, k) || !far(j, k) || !valid({F(i), F(j), F(k)})) continue;
        GenWord w{lambda, {F(i), F(j), F(k)}};
        out.push_back({"up-up-up-braid", {w, {ASlice::cross(1), ASlice::cross(2), ASlice::cross(1)}},
                       {w, {ASlice::cross(2), ASlice::cross(1), ASlice::cross(2)}}});
      }
      const std::pair<const char*, std::vector<Generator>> doubles[] = {
          {"up-up-double-cross", {F(i), F(j)}}, {"down-up-double-cross", {E(i), F(j)}}, {"up-down-double-cross", {F(i), E(j)}}};
      for (const auto& [name, g] : doubles) {
        if (!valid(g)) continue;
        GenWord w{lambda, g};
        out.push_back({name, {w, {ASlice::cross(1), ASlice::cross(1)}}, {w, {}}});
      }
    }
  for (int i = -r; i <= r; ++i) {
    if (valid({E(i), F(i)})) {
      GenWord w{lambda, {E(i), F(i)}};
      out.push_back({"down-up-ii", {w, {}}, {w, {ASlice::cap(1), ASlice::cup(1, i, -1)}}});
    }
    if (valid({F(i), E(i)})) {
      GenWord w{lambda, {F(i), E(i)}};
      out.push_back({"up-down-ii", {w, {}}, {w, {ASlice::cap(1), ASlice::cup(1, i, +1)}}});
    }
  }
  GenWord empty{lambda, {}};
  for (int i : removable(lambda))
    out.push_back({"clockwise-i-circle", {empty, {ASlice::cup(1, i, +1), ASlice::cap(1)}}, {empty, {}}});
  for (int i : addable(lambda))
    out.push_back({"ccc", {empty, {ASlice::cup(1, i, -1), ASlice::cap(1)}}, {empty, {}}});
  return out;
}

RelationReport check_T_functoriality(int max_n) {
  RelationReport rep{"functor-t", max_n, 0, {}};
  for (int n = 0; n <= max_n; ++n)
    for (const auto& rel : heisenberg_relations(n)) {
      ++rep.checked;
      if (!(functor_T(rel.lhs) == functor_T(rel.rhs))) rep.failures.push_back(rel.name + ": n=" + std::to_string(n));
    }
  return rep;
}

RelationReport check_FA_relations(int max_size) {
  RelationReport rep{"functor-a-relations", max_size, 0, {}};
  for (const auto& lam : partitions_up_to(max_size))
    for (const auto& rel : a_relations(lam)) {
      ++rep.checked;
      bool ok = false;
      try {
        ok = sparse_equal(eval_FA_restricted(rel.lhs), eval_FA_restricted(rel.rhs));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CrosscheckFailed) throw;
      }
      if (!ok) rep.failures.push_back(rel.name + ": " + rel.lhs.bottom.str());
    }
  return rep;
}

namespace {

bool compatible(const HDiagram& x, int* checked) {
  LinearMap h = eval_FH(x);
  MorphismMatrix t = functor_T(x);
  Eigen::Index covered = 0;
  for (std::size_t c = 0; c < t.cols.size(); ++c) {
    ++*checked;
    QSparse basis = summand_basis(t.cols[c]);
    covered += basis.cols();
    QSparse lhs = h.matrix * basis;
    QSparse rhs(h.codomain.dim(), basis.cols());
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      if (t.coeffs.coeff(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) != 0)
        rhs = QSparse(rhs + eval_FA_restricted(t.entry(r, c)));
    if (!sparse_equal(lhs, rhs)) return false;
  }
  return covered == h.domain.dim();
}

}  // namespace

RelationReport check_compatibility(int max_n) {
  RelationReport rep{"compatibility", max_n, 0, {}};
  std::vector<HDiagram> slices;
  for (int n = 0; n <= max_n; ++n) {
    for (int a : {+1, -1})
      for (int b : {+1, -1}) {
        slices.push_back({{a, b}, n, {HSlice::cross(1)}});
        if (a != b) slices.push_back({{a, b}, n, {HSlice::cap(1)}});
      }
    for (int s : {+1, -1}) {
      slices.push_back({{}, n, {HSlice::cup(1, s)}});
      for (int a : {+1, -1})
        for (int p : {1, 2}) slices.push_back({{a}, n, {HSlice::cup(p, s)}});
    }
  }
  for (const auto& x : slices) {
    bool ok = false;
    try {
      ok = compatible(x, &rep.checked);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CrosscheckFailed) throw;
    }
    std::string name = x.slices[0].kind == HSlice::Kind::Cross ? "cross" : x.slices[0].kind == HSlice::Kind::Cap ? "cap" : "cup";
    if (!ok)
      rep.failures.push_back(name + ": signs=" + sign_str(x.signs) + " n=" + std::to_string(x.base) + " pos=" +
                             std::to_string(x.slices[0].pos));
  }
  return rep;
}

}  // namespace cathei
