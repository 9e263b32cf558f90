#include "cathei/bimodule.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "cathei/error.hpp"
#include "cathei/perturbation.hpp"

namespace cathei {

ChainSpace::ChainSpace(std::vector<ChainFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::MalformedDiagram, "chain with no factors");
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& f = factors_[k];
    if (f.left < 0 || f.right < 0 || f.left > f.ambient || f.right > f.ambient)
      throw Error(ErrorCode::MalformedDiagram, "bad chain factor");
    if (k + 1 < factors_.size() && f.right != factors_[k + 1].left)
      throw Error(ErrorCode::BoundaryMismatch, "adjacent chain factors disagree");
  }
  std::size_t l = factors_.size();
  std::vector<Eigen::Index> radix(l);
  for (std::size_t k = 0; k + 1 < l; ++k) {
    tables_.push_back(&coset_table(factors_[k].ambient, factors_[k].right));
    radix[k] = static_cast<Eigen::Index>(tables_.back()->reps.size());
  }
  radix[l - 1] = static_cast<Eigen::Index>(factorial(factors_[l - 1].ambient));
  strides_.assign(l, 1);
  for (std::size_t k = l - 1; k-- > 0;) strides_[k] = strides_[k + 1] * radix[k + 1];
  dim_ = strides_[0] * radix[0];
  zero_ = false;
}

ChainSpace ChainSpace::zero_space() { return ChainSpace(); }

Eigen::Index ChainSpace::index_of(std::vector<Permutation>& g) const {
  std::size_t l = factors_.size();
  Eigen::Index idx = 0;
  for (std::size_t k = 0; k < l; ++k) {
    int m = factors_[k].ambient;
    if (g[k].degree() < m) g[k] = g[k].extended(m);
    if (k + 1 == l) {
      idx += static_cast<Eigen::Index>(g[k].rank());
      break;
    }
    Permutation h;
    idx += static_cast<Eigen::Index>(tables_[k]->locate(g[k], &h)) * strides_[k];
    int next = factors_[k + 1].ambient;
    if (g[k + 1].degree() < next) g[k + 1] = g[k + 1].extended(next);
    g[k + 1] = h.extended(next) * g[k + 1];
  }
  return idx;
}

std::vector<Permutation> ChainSpace::element(Eigen::Index idx) const {
  std::size_t l = factors_.size();
  std::vector<Permutation> out(l);
  for (std::size_t k = 0; k < l; ++k) {
    Eigen::Index digit = idx / strides_[k];
    idx %= strides_[k];
    if (k + 1 < l) out[k] = tables_[k]->reps[static_cast<std::size_t>(digit)];
    else out[k] = Permutation::unrank(factors_[k].ambient, static_cast<std::uint64_t>(digit));
  }
  return out;
}

std::string ChainSpace::describe() const {
  if (zero_) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) os << " (x) ";
    os << factors_[k].left << "(" << factors_[k].ambient << ")" << factors_[k].right;
  }
  return os.str();
}

LinearMap LinearMap::identity(const ChainSpace& s) { return {s, s, sparse_identity<Rational>(s.dim())}; }

LinearMap LinearMap::zero(const ChainSpace& dom, const ChainSpace& cod) {
  return {dom, cod, QSparse(cod.dim(), dom.dim())};
}

namespace {
void require_same(const ChainSpace& a, const ChainSpace& b, const char* what) {
  if (!(a == b)) throw Error(ErrorCode::BoundaryMismatch, std::string(what) + ": " + a.describe() + " vs " + b.describe());
}
}  // namespace

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  require_same(a.domain, b.codomain, "compose");
  LinearMap out{b.domain, a.codomain, QSparse(a.matrix * b.matrix)};
  prune_zeros(out.matrix);
  return out;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  require_same(a.domain, b.domain, "sum");
  require_same(a.codomain, b.codomain, "sum");
  LinearMap out{a.domain, a.codomain, QSparse(a.matrix + b.matrix)};
  prune_zeros(out.matrix);
  return out;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  require_same(a.domain, b.domain, "difference");
  require_same(a.codomain, b.codomain, "difference");
  LinearMap out{a.domain, a.codomain, QSparse(a.matrix - b.matrix)};
  prune_zeros(out.matrix);
  return out;
}

LinearMap operator*(const Rational& c, const LinearMap& a) {
  LinearMap out{a.domain, a.codomain, QSparse(a.matrix * c)};
  prune_zeros(out.matrix);
  return out;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.domain == b.domain && a.codomain == b.codomain && sparse_equal(a.matrix, b.matrix);
}

LinearMap factor_multiply(const ChainSpace& s, std::size_t k, Side side, const GroupAlgebraElement& x) {
  if (s.is_zero()) return LinearMap::zero(s, s);
  int m = s.factors()[k].ambient;
  GroupAlgebraElement y = x.embedded(m);
  return build_map(s, s, [&](const Tensor& g) {
    TensorTerms out;
    for (const auto& [p, c] : y.terms()) {
      Tensor t = g;
      t[k] = side == Side::Left ? p * g[k] : g[k] * p;
      out.emplace_back(c, std::move(t));
    }
    return out;
  });
}

LinearMap junction_multiply(const ChainSpace& s, std::size_t j, const GroupAlgebraElement& x) {
  if (j == 0) return factor_multiply(s, 0, Side::Left, x);
  return factor_multiply(s, j - 1, Side::Right, x);
}

std::vector<int> word_regions(const std::vector<int>& signs, int base) {
  std::vector<int> r(signs.size() + 1);
  r[signs.size()] = base;
  for (std::size_t k = signs.size(); k-- > 0;) r[k] = r[k + 1] + signs[k];
  return r;
}

ChainSpace chain_for_word(const std::vector<int>& signs, int base) {
  std::vector<int> r = word_regions(signs, base);
  if (*std::min_element(r.begin(), r.end()) < 0) return ChainSpace::zero_space();
  int top = *std::max_element(r.begin(), r.end());
  require_bound(top <= oracle_bounds().eval_region, "region " + std::to_string(top) + " exceeds eval bound");
  std::vector<ChainFactor> f;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    int right = r[k + 1];
    if (signs[k] > 0) f.push_back({right + 1, right + 1, right});
    else f.push_back({right, right - 1, right});
  }
  f.push_back({base, base, base});
  return ChainSpace(std::move(f));
}

namespace {

std::mutex g_slice_mutex;
std::map<std::string, LinearMap> g_slice_cache;

std::string slice_key(char kind, const std::vector<int>& signs, int base, int p, int extra) {
  std::string k(1, kind);
  for (int s : signs) k += s > 0 ? '+' : '-';
  k += '@' + std::to_string(base) + ':' + std::to_string(p) + ':' + std::to_string(extra);
  return k;
}

template <typename Build>
LinearMap cached_slice(const std::string& key, Build&& build) {
  bool cacheable = active_site() == Site::None;
  if (cacheable) {
    std::lock_guard<std::mutex> lock(g_slice_mutex);
    auto it = g_slice_cache.find(key);
    if (it != g_slice_cache.end()) return it->second;
  }
  LinearMap m = build();
  if (cacheable) {
    std::lock_guard<std::mutex> lock(g_slice_mutex);
    g_slice_cache.emplace(key, m);
  }
  return m;
}

void check_position(const std::vector<int>& signs, int p, int span) {
  if (p < 1 || p + span - 1 > static_cast<int>(signs.size()))
    throw Error(ErrorCode::MalformedDiagram, "slice position " + std::to_string(p) + " out of range");
}

// s_i s_{i+1} ... s_{j} in S_n (empty when i > j)
Permutation ascending_product(int n, int i, int j) {
  Permutation out(n);
  for (int k = i; k <= j; ++k) out = out * Permutation::simple(n, k);
  return out;
}

}  // namespace

LinearMap cross_map(const std::vector<int>& signs, int base, int p) {
  check_position(signs, p, 2);
  return cached_slice(slice_key('X', signs, base, p, 0), [&] {
    std::vector<int> out_signs = signs;
    std::swap(out_signs[p - 1], out_signs[p]);
    ChainSpace dom = chain_for_word(signs, base), cod = chain_for_word(out_signs, base);
    if (dom.is_zero() || cod.is_zero()) return LinearMap::zero(dom, cod);
    std::size_t a = static_cast<std::size_t>(p - 1), b = a + 1;
    int s = word_regions(signs, base)[b + 1];
    int ca = signs[a], cb = signs[b];
    Rational tau_sign = perturbed(Site::TauSign) ? Rational(-1) : Rational(1);
    return build_map(dom, cod, [&](const Tensor& g) {
      TensorTerms out;
      Tensor t = g;
      if (ca > 0 && cb > 0) {
        t[a] = g[a] * g[b].extended(s + 2) * Permutation::simple(s + 2, s + 1);
        t[b] = Permutation(s + 1);
        out.emplace_back(Rational(1), std::move(t));
      } else if (ca < 0 && cb < 0) {
        t[b] = Permutation::simple(s, s - 1) * g[a].extended(s) * g[b];
        t[a] = Permutation(s - 1);
        out.emplace_back(Rational(1), std::move(t));
      } else if (ca > 0 && cb < 0) {
        t[a] = g[a].extended(s + 1) * Permutation::simple(s + 1, s) * g[b].extended(s + 1);
        t[b] = Permutation(s + 1);
        out.emplace_back(Rational(1), std::move(t));
      } else {
        Permutation x = g[a] * g[b];
        if (x(s + 1) == s + 1) return out;
        int k = x.inverse()(s + 1);
        Permutation v = k == s ? Permutation(s) : Permutation::transposition(s, k, s);
        t[a] = (x * v.inverse().extended(s + 1) * Permutation::simple(s + 1, s)).restricted(s);
        t[b] = v;
        out.emplace_back(tau_sign, std::move(t));
      }
      return out;
    });
  });
}

LinearMap cap_map(const std::vector<int>& signs, int base, int p) {
  check_position(signs, p, 2);
  if (signs[p - 1] == signs[p]) throw Error(ErrorCode::MalformedDiagram, "cap joins strands of equal orientation");
  return cached_slice(slice_key('C', signs, base, p, 0), [&] {
    std::vector<int> out_signs = signs;
    out_signs.erase(out_signs.begin() + (p - 1), out_signs.begin() + (p + 1));
    ChainSpace dom = chain_for_word(signs, base), cod = chain_for_word(out_signs, base);
    if (dom.is_zero() || cod.is_zero()) return LinearMap::zero(dom, cod);
    std::size_t a = static_cast<std::size_t>(p - 1), b = a + 1;
    int s = word_regions(signs, base)[b + 1];
    bool right_cap = signs[a] > 0;
    return build_map(dom, cod, [&](const Tensor& g) {
      TensorTerms out;
      Permutation x = g[a] * g[b];
      Permutation y;
      if (right_cap) {
        y = x;
      } else {
        if (x(s + 1) != s + 1) return out;
        y = x.restricted(s);
      }
      Tensor t;
      for (std::size_t k = 0; k < g.size(); ++k)
        if (k != a && k != b) t.push_back(g[k]);
      t[a] = y.extended(g[b + 1].degree()) * g[b + 1];
      out.emplace_back(Rational(1), std::move(t));
      return out;
    });
  });
}

LinearMap cup_map(const std::vector<int>& signs, int base, int p, int left_sign) {
  if (p < 1 || p > static_cast<int>(signs.size()) + 1)
    throw Error(ErrorCode::MalformedDiagram, "cup position " + std::to_string(p) + " out of range");
  return cached_slice(slice_key('U', signs, base, p, left_sign), [&] {
    std::vector<int> out_signs = signs;
    out_signs.insert(out_signs.begin() + (p - 1), {left_sign, -left_sign});
    ChainSpace dom = chain_for_word(signs, base), cod = chain_for_word(out_signs, base);
    if (dom.is_zero() || cod.is_zero()) return LinearMap::zero(dom, cod);
    std::size_t a = static_cast<std::size_t>(p - 1);
    int s = word_regions(signs, base)[a];
    TensorTerms pairs;
    if (left_sign > 0) {
      int last = perturbed(Site::EtaLSum) ? s - 1 : s;
      for (int i = 1; i <= last; ++i) {
        Tensor t{ascending_product(s, i, s - 1), ascending_product(s, i, s - 1).inverse()};
        pairs.emplace_back(Rational(1), std::move(t));
      }
    } else {
      pairs.emplace_back(Rational(1), Tensor{Permutation(s + 1), Permutation(s + 1)});
    }
    return build_map(dom, cod, [&](const Tensor& g) {
      TensorTerms out;
      for (const auto& [c, pr] : pairs) {
        Tensor t = g;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(a), pr.begin(), pr.end());
        out.emplace_back(c, std::move(t));
      }
      return out;
    });
  });
}

AdjunctionMaps adjunction_maps(int n) {
  require_bound(n + 1 <= oracle_bounds().eval_region, "adjunction_maps: n+1 exceeds bound");
  return {cap_map({+1, -1}, n + 1, 1), cup_map({}, n, 1, -1), cap_map({-1, +1}, n, 1), cup_map({}, n + 1, 1, +1)};
}

RhoTau rho_tau(int n) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "rho_tau needs n >= 1");
  require_bound(n + 1 <= oracle_bounds().eval_region, "rho_tau: n+1 exceeds bound");
  return {cross_map({+1, -1}, n, 1), cross_map({-1, +1}, n, 1)};
}

CrossingMaps crossing_maps(int n) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "crossing_maps needs n >= 1");
  require_bound(n + 1 <= oracle_bounds().eval_region, "crossing_maps: n+1 exceeds bound");
  return {cross_map({+1, +1}, n - 1, 1), cross_map({-1, -1}, n + 1, 1)};
}

Bimodule Bimodule::regular(int m, int left, int right) {
  return {m, left, right, GroupAlgebraElement::identity(m), GroupAlgebraElement::identity(m), {}};
}

Bimodule Bimodule::irreducible(const Partition& lambda) {
  int n = lambda.size();
  Rational scale = Rational(dim_hook(lambda)) / Rational(factorial(n));
  return {n, n, 0, GroupAlgebraElement::identity(n), young_symmetrizer(lambda) * scale, {}};
}

Rational Bimodule::dimension() const { return sandwich_trace(left_proj.embedded(ambient), right_proj.embedded(ambient)); }

GroupAlgebraElement jm_spectral_projector(int m, int i) {
  GroupAlgebraElement j = jucys_murphy(m, m);
  GroupAlgebraElement id = GroupAlgebraElement::identity(m);
  GroupAlgebraElement annihilator = id;
  for (int k = -(m - 1); k <= m - 1; ++k) annihilator = annihilator * (j - id * Rational(k));
  if (!annihilator.is_zero())
    throw Error(ErrorCode::CrosscheckFailed, "J_m is not annihilated by its content polynomial");
  if (i < -(m - 1) || i > m - 1) return GroupAlgebraElement(m);
  GroupAlgebraElement p = id;
  for (int k = -(m - 1); k <= m - 1; ++k)
    if (k != i) p = p * (j - id * Rational(k)) * (Rational(1) / Rational(i - k));
  return p;
}

GroupAlgebraElement sandwich_projector(int m, int i) {
  GroupAlgebraElement out(m);
  for (const auto& mu : partitions_of(m - 1)) {
    auto up = add_box(mu, i);
    if (up) out += central_idempotent(*up) * central_idempotent(mu).embedded(m);
  }
  return out;
}

namespace {
// columns: the images of the basis g (in rank order) under v ↦ v x or x v
QMatrix multiplication_matrix(int m, const GroupAlgebraElement& x, Side side) {
  auto perms = all_permutations(m);
  Eigen::Index d = static_cast<Eigen::Index>(perms.size());
  QMatrix out = QMatrix::Zero(d, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (const auto& [p, coef] : x.terms()) {
      Permutation img = side == Side::Right ? perms[c] * p : p * perms[c];
      out(static_cast<Eigen::Index>(img.rank()), c) += coef;
    }
  return out;
}
}  // namespace

QMatrix eigenspace_kernel_rref(int m, int i, Side side) {
  GroupAlgebraElement shifted = jucys_murphy(m, m) - GroupAlgebraElement::identity(m) * Rational(i);
  return column_space_basis(kernel_basis(multiplication_matrix(m, shifted, side)));
}

bool eigenspace_matches_sandwich(int m, int i, Side side) {
  GroupAlgebraElement shifted = jucys_murphy(m, m) - GroupAlgebraElement::identity(m) * Rational(i);
  GroupAlgebraElement p = sandwich_projector(m, i);
  GroupAlgebraElement id = GroupAlgebraElement::identity(m);
  if (!(side == Side::Right ? p * shifted : shifted * p).is_zero()) return false;
  Rational image = side == Side::Right ? sandwich_trace(id, p) : sandwich_trace(p, id);
  Eigen::Index kernel_bound = static_cast<Eigen::Index>(factorial(m)) - rank_mod_prime(multiplication_matrix(m, shifted, side));
  return image == Rational(kernel_bound);
}

Bimodule eigenspace_component(int m, int k, int i, Side side) {
  if (m != k + 1) throw Error(ErrorCode::SizeMismatch, "eigenspace_component needs m = k+1");
  require_bound(k <= oracle_bounds().tensor, "eigenspace_component: k = " + std::to_string(k));
  GroupAlgebraElement spectral = jm_spectral_projector(m, i);
  GroupAlgebraElement sandwich = sandwich_projector(m, i);
  if (!(spectral == sandwich))
    throw Error(ErrorCode::CrosscheckFailed, "spectral and sandwich projectors differ");
  if (m <= 5) {
    QMatrix kernel = eigenspace_kernel_rref(m, i, side);
    QMatrix image = column_space_basis(multiplication_matrix(m, sandwich, side));
    if (kernel.rows() != image.rows() || (kernel.rows() > 0 && kernel != image))
      throw Error(ErrorCode::CrosscheckFailed, "kernel and sandwich subspaces differ");
  } else if (!eigenspace_matches_sandwich(m, i, side)) {
    throw Error(ErrorCode::CrosscheckFailed, "kernel and sandwich subspaces differ");
  }
  Bimodule b = side == Side::Right ? Bimodule::regular(m, m, k) : Bimodule::regular(m, k, m);
  (side == Side::Right ? b.right_proj : b.left_proj) = spectral;
  b.filters.push_back({i, side, m});
  return b;
}

TensorResult tensor_over(const Bimodule& left, const Bimodule& right, int middle_degree) {
  if (left.right != middle_degree || right.left != middle_degree)
    throw Error(ErrorCode::BoundaryMismatch, "tensor_over: middle degrees disagree");
  require_bound(std::max(left.ambient, right.ambient) <= oracle_bounds().tensor + 1, "tensor_over: ambient degree");
  ChainSpace s({{left.ambient, left.left, middle_degree}, {right.ambient, middle_degree, right.right}});
  LinearMap p = factor_multiply(s, 0, Side::Left, left.left_proj) * factor_multiply(s, 0, Side::Right, left.right_proj) *
                factor_multiply(s, 1, Side::Left, right.left_proj) * factor_multiply(s, 1, Side::Right, right.right_proj);
  TensorResult out{s, p, QMatrix(), 0};
  Rational tr = sparse_trace(p.matrix);
  if (denominator(tr) != 1) throw Error(ErrorCode::CrosscheckFailed, "tensor projector trace is not integral");
  out.dimension = static_cast<Eigen::Index>(numerator(tr).convert_to<long long>());
  if (s.dim() <= 1000) {
    out.basis = column_space_basis(to_dense(p.matrix));
    if (out.basis.rows() != out.dimension) throw Error(ErrorCode::CrosscheckFailed, "tensor projector is not idempotent");
  }
  return out;
}

std::vector<Partition> decompose_module(const Bimodule& b, const Partition& lambda) {
  if (b.right != lambda.size()) throw Error(ErrorCode::SizeMismatch, "decompose_module: right degree must be |lambda|");
  require_bound(b.ambient <= oracle_bounds().group_algebra, "decompose_module: ambient degree");
  int m = b.ambient, k = b.left;
  GroupAlgebraElement l = b.left_proj.embedded(m);
  GroupAlgebraElement y = b.right_proj.embedded(m) * central_idempotent(lambda).embedded(m);
  Rational d_lambda(dim_hook(lambda));
  const CharacterTable& t = character_table(k);
  std::vector<Rational> chi;  // character of B ⊗ V_λ on each class of S_k
  for (const auto& cls : t.labels) {
    std::vector<int> one_line;
    int start = 1;
    for (int part : cls.parts()) {
      for (int q = 1; q < part; ++q) one_line.push_back(start + q);
      one_line.push_back(start);
      start += part;
    }
    Permutation w = Permutation::from_one_line(one_line).extended(m);
    chi.push_back(sandwich_trace(GroupAlgebraElement::basis(w) * l, y) / d_lambda);
  }
  std::vector<Partition> out;
  Rational order(factorial(k));
  for (std::size_t v = 0; v < t.labels.size(); ++v) {
    Rational mult = 0;
    for (std::size_t c = 0; c < t.labels.size(); ++c) mult += Rational(t.class_sizes[c]) * chi[c] * Rational(t.chi[v][c]);
    mult /= order;
    if (denominator(mult) != 1 || mult < 0) throw Error(ErrorCode::CrosscheckFailed, "non-integral multiplicity");
    for (long long r = numerator(mult).convert_to<long long>(); r > 0; --r) out.push_back(t.labels[v]);
  }
  return out;
}

}  // namespace cathei
