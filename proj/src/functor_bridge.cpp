#include "cathei/functor_bridge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "cathei/error.hpp"
#include "cathei/perturbation.hpp"

namespace cathei {

// ---- F_H ---------------------------------------------------------------------

LinearMap slice_map(const std::vector<int>& signs, int base, const HSlice& s) {
  switch (s.kind) {
    case HSlice::Kind::Cross: return cross_map(signs, base, s.pos);
    case HSlice::Kind::Cap: return cap_map(signs, base, s.pos);
    case HSlice::Kind::Cup: return cup_map(signs, base, s.pos, s.left_sign);
  }
  throw Error(ErrorCode::MalformedDiagram, "unknown slice");
}

LinearMap eval_FH(const HDiagram& d) {
  auto lv = d.levels();
  LinearMap m = LinearMap::identity(chain_for_word(d.signs, d.base));
  for (std::size_t k = 0; k < d.slices.size(); ++k) m = slice_map(lv[k], d.base, d.slices[k]) * m;
  return m;
}

LinearMap eval_FH(const HMorphism& m) {
  LinearMap out = LinearMap::zero(chain_for_word(m.bottom, m.base), chain_for_word(m.top, m.base));
  for (const auto& [c, d] : m.terms) out = out + c * eval_FH(d);
  return out;
}

bool equal_under_FH(const HMorphism& a, const HMorphism& b) { return eval_FH(a) == eval_FH(b); }

LinearMap region_multiply(const std::vector<int>& signs, int base, std::size_t gap, const GroupAlgebraElement& z) {
  return junction_multiply(chain_for_word(signs, base), gap, z);
}

LinearMap region_epsilon(const std::vector<int>& signs, int base, std::size_t gap, const Partition& mu) {
  ChainSpace s = chain_for_word(signs, base);
  if (word_regions(signs, base)[gap] != mu.size()) return LinearMap::zero(s, s);
  return junction_multiply(s, gap, central_idempotent(mu));
}

// ---- T -----------------------------------------------------------------------

Rational xi(int i, int j) {
  int d = i - j;
  if (d == 0 || d == 1) throw Error(ErrorCode::UndefinedCoeff, "xi(" + std::to_string(i) + "," + std::to_string(j) + ")");
  Rational num = perturbed(Site::XiNumerator) ? Rational(d + 1) : Rational(d);
  return num / Rational(d - 1);
}

std::vector<GenWord> colored_summands(const std::vector<int>& signs, int base) {
  std::vector<GenWord> out;
  if (base < 0) return out;
  for (const auto& lam : partitions_of(base)) {
    std::vector<GenWord> words;
    std::vector<Generator> gens(signs.size());
    std::function<void(int, const Partition&)> rec = [&](int k, const Partition& cur) {
      if (k < 0) {
        words.push_back({lam, gens});
        return;
      }
      bool up = signs[static_cast<std::size_t>(k)] > 0;
      for (int c : up ? addable(cur) : removable(cur)) {
        gens[static_cast<std::size_t>(k)] = up ? F(c) : E(c);
        rec(k - 1, up ? *add_box(cur, c) : *remove_box(cur, c));
      }
    };
    rec(static_cast<int>(signs.size()) - 1, lam);
    std::sort(words.begin(), words.end(), [](const GenWord& a, const GenWord& b) { return a.gens < b.gens; });
    out.insert(out.end(), words.begin(), words.end());
  }
  return out;
}

namespace {

Rational d_of(const Partition& p) { return dimq(p); }
Rational d_of(const std::optional<Partition>& p) { return dimq(*p); }

std::optional<Partition> minus(const std::optional<Partition>& p, int i) { return p ? remove_box(*p, i) : std::nullopt; }

Rational crossing_identity_coeff(int i, int j) {
  if (perturbed(Site::CrossingRemoval)) return i - j + 1 == 0 ? Rational(0) : Rational(1) / Rational(i - j + 1);
  return Rational(1) / Rational(i - j);
}

Rational cap_scale() { return perturbed(Site::RightCapCoeff) ? Rational(2) : Rational(1); }
Rational cup_scale() { return perturbed(Site::RightCupCoeff) ? Rational(2) : Rational(1); }

// Ratio n d_{λ⊟i} d_{λ⊞j} / ((n+1) d_λ d_{λ⊞j⊟i}) of the right-crossing in T;
// S uses its inverse.
Rational right_cross_ratio(const Partition& lam, int i, int j) {
  int n = lam.size();
  Rational r = Rational(n) * d_of(remove_box(lam, i)) * d_of(add_box(lam, j)) /
               (Rational(n + 1) * d_of(lam) * d_of(minus(add_box(lam, j), i)));
  return perturbed(Site::RightCrossCoeff) ? Rational(1) / r : r;
}

struct TBuilder {
  std::vector<GenWord> rows;
  std::map<GenWord, Eigen::Index> row_index;
  std::vector<Eigen::Triplet<Rational, std::int64_t>> trip;
  TReport* report;

  void add(Eigen::Index col, const Rational& c, const LayeredDiagram& d) {
    Morphism2 m = normalize(d);
    if (m.zero) {
      if (report) ++report->dropped;
      return;
    }
    trip.emplace_back(row_index.at(m.dst), col, c * m.scalar);
  }
};

MorphismMatrix t_slice(const std::vector<int>& signs, int base, const HSlice& s, TReport* report) {
  std::vector<int> out_signs = HDiagram{signs, base, {s}}.top_signs();
  MorphismMatrix m;
  m.cols = colored_summands(signs, base);
  m.rows = colored_summands(out_signs, base);
  TBuilder b{m.rows, {}, {}, report};
  for (std::size_t r = 0; r < m.rows.size(); ++r) b.row_index[m.rows[r]] = static_cast<Eigen::Index>(r);
  int p = s.pos;
  for (std::size_t col = 0; col < m.cols.size(); ++col) {
    const GenWord& w = m.cols[col];
    Eigen::Index c = static_cast<Eigen::Index>(col);
    auto labels = word_region_labels(w);
    switch (s.kind) {
      case HSlice::Kind::Cross: {
        const Generator& ga = w.gens[static_cast<std::size_t>(p - 1)];
        const Generator& gb = w.gens[static_cast<std::size_t>(p)];
        const Partition& lam = *labels[static_cast<std::size_t>(p + 1)];
        int n = lam.size();
        LayeredDiagram cross{w, {ASlice::cross(p)}};
        if (ga.kind == gb.kind) {
          int i = ga.color, j = gb.color;
          b.add(c, Rational(i - j - 1) / Rational(i - j), cross);
          b.add(c, ga.kind == GenKind::F ? crossing_identity_coeff(i, j) : crossing_identity_coeff(j, i), {w, {}});
        } else if (ga.kind == GenKind::F) {
          int j = ga.color, i = gb.color;
          if (i != j) {
            Morphism2 t = normalize(cross);
            if (t.zero) {
              if (report) ++report->dropped;
            } else {
              b.add(c, right_cross_ratio(lam, i, j) * Rational(i - j - 1) / Rational(i - j), cross);
            }
          } else {
            for (int k : addable(lam)) {
              if (k == j) continue;
              Rational coef = Rational(n) * d_of(remove_box(lam, j)) * d_of(add_box(lam, k)) /
                              (Rational(n + 1) * d_of(lam) * d_of(lam)) / Rational(k - j);
              b.add(c, coef, {w, {ASlice::cap(p), ASlice::cup(p, k, -1)}});
            }
          }
        } else {
          int j = ga.color, i = gb.color;
          if (i != j) {
            b.add(c, Rational(i - j - 1) / Rational(i - j), cross);
          } else {
            for (int k : removable(lam)) {
              if (k == i) continue;
              b.add(c, Rational(1) / Rational(i - k), {w, {ASlice::cap(p), ASlice::cup(p, k, +1)}});
            }
          }
        }
        break;
      }
      case HSlice::Kind::Cap: {
        const Generator& ga = w.gens[static_cast<std::size_t>(p - 1)];
        const Generator& gb = w.gens[static_cast<std::size_t>(p)];
        if (ga.color != gb.color) break;
        const Partition& lam = *labels[static_cast<std::size_t>(p + 1)];
        Rational coef(1);
        if (ga.kind == GenKind::F)
          coef = cap_scale() * Rational(lam.size()) * d_of(remove_box(lam, ga.color)) / d_of(lam);
        b.add(c, coef, {w, {ASlice::cap(p)}});
        break;
      }
      case HSlice::Kind::Cup: {
        const Partition& lam = *labels[static_cast<std::size_t>(p - 1)];
        if (s.left_sign > 0) {
          for (int i : removable(lam)) b.add(c, Rational(1), {w, {ASlice::cup(p, i, +1)}});
        } else {
          for (int i : addable(lam))
            b.add(c, cup_scale() * d_of(add_box(lam, i)) / (Rational(lam.size() + 1) * d_of(lam)), {w, {ASlice::cup(p, i, -1)}});
        }
        break;
      }
    }
  }
  m.coeffs = QSparse(static_cast<Eigen::Index>(m.rows.size()), static_cast<Eigen::Index>(m.cols.size()));
  m.coeffs.setFromTriplets(b.trip.begin(), b.trip.end());
  prune_zeros(m.coeffs);
  return m;
}

}  // namespace

MorphismMatrix functor_T(const HDiagram& d, TReport* report) {
  auto lv = d.levels();
  MorphismMatrix m = MorphismMatrix::identity(colored_summands(d.signs, d.base));
  for (std::size_t k = 0; k < d.slices.size(); ++k) m = t_slice(lv[k], d.base, d.slices[k], report) * m;
  return m;
}

MorphismMatrix functor_T(const HMorphism& m, TReport* report) {
  MorphismMatrix out{colored_summands(m.top, m.base), colored_summands(m.bottom, m.base), {}};
  out.coeffs = QSparse(static_cast<Eigen::Index>(out.rows.size()), static_cast<Eigen::Index>(out.cols.size()));
  for (const auto& [c, d] : m.terms) out = out + c * functor_T(d, report);
  return out;
}

// ---- F_𝒜 ---------------------------------------------------------------------

std::vector<int> word_signs(const GenWord& w) {
  std::vector<int> s;
  for (const auto& g : w.gens) s.push_back(g.sign());
  return s;
}

namespace {

std::mutex g_proj_mutex;
std::map<std::tuple<std::vector<int>, int, std::size_t>, LinearMap> g_jm_cache;
std::map<std::tuple<std::vector<int>, int, Partition>, LinearMap> g_source_cache;
std::map<GenWord, QSparse> g_basis_cache;

// J_m acting at strand k: on the right of an upward factor, on the left of a
// downward one. Its eigenvalue is the content of the box the strand adds or
// removes.
const LinearMap& strand_jm(const std::vector<int>& signs, int base, std::size_t k) {
  auto key = std::make_tuple(signs, base, k);
  std::lock_guard<std::mutex> lock(g_proj_mutex);
  auto it = g_jm_cache.find(key);
  if (it == g_jm_cache.end()) {
    ChainSpace s = chain_for_word(signs, base);
    int m = s.factors()[k].ambient;
    Side side = signs[k] > 0 ? Side::Right : Side::Left;
    it = g_jm_cache.emplace(key, factor_multiply(s, k, side, jucys_murphy(m, m))).first;
  }
  return it->second;
}

LinearMap source_projector(const std::vector<int>& signs, int base, const Partition& lam) {
  ChainSpace s = chain_for_word(signs, base);
  if (active_site() != Site::None) return junction_multiply(s, signs.size(), central_idempotent(lam));
  auto key = std::make_tuple(signs, base, lam);
  std::lock_guard<std::mutex> lock(g_proj_mutex);
  auto it = g_source_cache.find(key);
  if (it == g_source_cache.end()) it = g_source_cache.emplace(key, junction_multiply(s, signs.size(), central_idempotent(lam))).first;
  return it->second;
}

// P_w m, as e_source at the right end followed by the eigenprojections of
// each strand, right to left.
QSparse apply_projector(const GenWord& w, const QSparse& m) {
  std::vector<int> signs = word_signs(w);
  int base = w.source.size();
  auto labels = word_region_labels(w);
  QSparse zero(m.rows(), m.cols());
  for (const auto& l : labels)
    if (!l) return zero;
  QSparse out = source_projector(signs, base, w.source).matrix * m;
  prune_zeros(out);
  for (std::size_t k = signs.size(); k-- > 0;) {
    const Partition& right = *labels[k + 1];
    std::vector<int> cands = signs[k] > 0 ? addable(right) : removable(right);
    int c = w.gens[k].color;
    if (std::find(cands.begin(), cands.end(), c) == cands.end()) return zero;
    const QSparse& j = strand_jm(signs, base, k).matrix;
    for (int other : cands) {
      if (other == c) continue;
      out = QSparse((j * out - Rational(other) * out) * (Rational(1) / Rational(c - other)));
      prune_zeros(out);
    }
  }
  return out;
}

}  // namespace

LinearMap word_projector(const GenWord& w) {
  ChainSpace s = chain_for_word(word_signs(w), w.source.size());
  return {s, s, apply_projector(w, sparse_identity<Rational>(s.dim()))};
}

QSparse summand_basis(const GenWord& w) {
  bool cacheable = active_site() == Site::None;
  if (cacheable) {
    std::lock_guard<std::mutex> lock(g_proj_mutex);
    auto it = g_basis_cache.find(w);
    if (it != g_basis_cache.end()) return it->second;
  }
  ChainSpace s = chain_for_word(word_signs(w), w.source.size());
  Eigen::Index dim = s.dim();
  auto target = word_apply(w);
  Eigen::Index expected = 0;
  if (target) {
    bool ok = true;
    for (const auto& l : word_region_labels(w)) ok = ok && l.has_value();
    if (ok) expected = static_cast<Eigen::Index>(dim_hook(*word_region_labels(w).front()) * dim_hook(w.source));
  }
  QMatrix rows(0, dim);
  const Eigen::Index batch = 32;
  for (Eigen::Index start = 0; start < dim && rows.rows() < expected; start += batch) {
    Eigen::Index n = std::min(batch, dim - start);
    std::vector<Eigen::Triplet<Rational, std::int64_t>> t;
    for (Eigen::Index k = 0; k < n; ++k) t.emplace_back(start + k, k, Rational(1));
    QSparse units(dim, n);
    units.setFromTriplets(t.begin(), t.end());
    QMatrix img = to_dense(QSparse(apply_projector(w, units)));
    QMatrix stacked(rows.rows() + n, dim);
    stacked << rows, img.transpose();
    rows = column_space_basis(QMatrix(stacked.transpose()));
  }
  if (rows.rows() != expected) throw Error(ErrorCode::CrosscheckFailed, "summand of " + w.str() + " has unexpected dimension");
  QSparse basis = to_sparse(QMatrix(rows.transpose()));
  if (cacheable) {
    std::lock_guard<std::mutex> lock(g_proj_mutex);
    g_basis_cache.emplace(w, basis);
  }
  return basis;
}

namespace {

// Coefficient of S on one slice of an 𝒜 diagram, or nullopt when it is
// undefined (the slice is then zero).
std::optional<Rational> s_coefficient(const GenWord& w, const ASlice& s) {
  auto labels = word_region_labels(w);
  int p = s.pos;
  switch (s.kind) {
    case ASlice::Kind::Cross: {
      const Generator& ga = w.gens[static_cast<std::size_t>(p - 1)];
      const Generator& gb = w.gens[static_cast<std::size_t>(p)];
      auto lam = labels[static_cast<std::size_t>(p + 1)];
      if (!lam) return std::nullopt;
      int i = ga.color, j = gb.color;
      if (ga.kind != gb.kind) std::swap(i, j);
      if (i - j == 0 || i - j == 1) return std::nullopt;
      Rational x = xi(i, j);
      if (ga.kind == GenKind::F && gb.kind == GenKind::E) {
        if (!remove_box(*lam, i) || !add_box(*lam, j) || !minus(add_box(*lam, j), i)) return std::nullopt;
        x *= Rational(1) / right_cross_ratio(*lam, i, j);
      }
      return x;
    }
    case ASlice::Kind::Cap: {
      const Generator& ga = w.gens[static_cast<std::size_t>(p - 1)];
      auto lam = labels[static_cast<std::size_t>(p + 1)];
      if (ga.kind == GenKind::E) return Rational(1);
      if (!lam || lam->size() == 0 || !remove_box(*lam, ga.color)) return std::nullopt;
      return d_of(*lam) / (Rational(lam->size()) * d_of(remove_box(*lam, ga.color))) / cap_scale();
    }
    case ASlice::Kind::Cup: {
      if (s.left_sign > 0) return Rational(1);
      auto lam = labels[static_cast<std::size_t>(p - 1)];
      if (!lam || !add_box(*lam, s.color)) return std::nullopt;
      return Rational(lam->size() + 1) * d_of(*lam) / d_of(add_box(*lam, s.color)) / cup_scale();
    }
  }
  return std::nullopt;
}

HSlice to_h(const ASlice& s) {
  switch (s.kind) {
    case ASlice::Kind::Cross: return HSlice::cross(s.pos);
    case ASlice::Kind::Cap: return HSlice::cap(s.pos);
    case ASlice::Kind::Cup: return HSlice::cup(s.pos, s.left_sign);
  }
  return {};
}

}  // namespace

namespace {

// F_𝒜(d) applied to the columns of m, which lie in the summand of the bottom word.
QSparse eval_FA_columns(const LayeredDiagram& d, QSparse m) {
  auto lv = d.levels();
  int base = d.bottom.source.size();
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    auto coef = s_coefficient(lv[k], d.slices[k]);
    if (!coef) return QSparse(chain_for_word(word_signs(lv.back()), base).dim(), m.cols());
    QSparse x = slice_map(word_signs(lv[k]), base, to_h(d.slices[k])).matrix * m;
    m = apply_projector(lv[k + 1], x) * (*coef);
    prune_zeros(m);
  }
  return m;
}

}  // namespace

LinearMap eval_FA(const LayeredDiagram& d) {
  int base = d.bottom.source.size();
  ChainSpace dom = chain_for_word(word_signs(d.bottom), base);
  ChainSpace cod = chain_for_word(word_signs(d.top()), base);
  return {dom, cod, eval_FA_columns(d, apply_projector(d.bottom, sparse_identity<Rational>(dom.dim())))};
}

QSparse eval_FA_restricted(const LayeredDiagram& d) { return eval_FA_columns(d, summand_basis(d.bottom)); }

QSparse eval_FA_restricted(const Morphism2& m) {
  if (m.zero) {
    int base = m.src.source.size();
    return QSparse(chain_for_word(word_signs(m.dst), base).dim(), summand_basis(m.src).cols());
  }
  QSparse out = eval_FA_restricted(canonical_diagram(m.src, m.dst, m.matching)) * m.scalar;
  prune_zeros(out);
  return out;
}

LinearMap eval_FA(const Morphism2& m) {
  int base = m.src.source.size();
  if (m.zero)
    return LinearMap::zero(chain_for_word(word_signs(m.src), base), chain_for_word(word_signs(m.dst), base));
  return m.scalar * eval_FA(canonical_diagram(m.src, m.dst, m.matching));
}

LinearMap eval_FA(const MorphismMatrix& m) {
  if (m.rows.empty() || m.cols.empty()) throw Error(ErrorCode::SizeMismatch, "eval_FA of an empty direct sum");
  int base = m.cols.front().source.size();
  return eval_FA(m, word_signs(m.cols.front()), word_signs(m.rows.front()), base);
}

LinearMap eval_FA(const MorphismMatrix& m, const std::vector<int>& bottom, const std::vector<int>& top, int base) {
  LinearMap out = LinearMap::zero(chain_for_word(bottom, base), chain_for_word(top, base));
  for (int k = 0; k < m.coeffs.outerSize(); ++k)
    for (QSparse::InnerIterator it(m.coeffs, k); it; ++it)
      out = out + eval_FA(m.entry(static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col())));
  return out;
}

}  // namespace cathei
