#include <map>
#include <memory>
#include <mutex>

#include "cathei/error.hpp"
#include "cathei/functor_bridge.hpp"
#include "cathei/group_algebra.hpp"

namespace cathei {

namespace {

// Left S_m-module given by the matrices of s_1, ..., s_{m-1}.
struct ExplicitModule {
  int degree = 0;
  Eigen::Index dim = 0;
  std::vector<QSparse> gens;

  QSparse act(const Permutation& g) const {
    QSparse out = sparse_identity<Rational>(dim);
    for (int i : g.reduced_word()) out = QSparse(out * gens[static_cast<std::size_t>(i - 1)]);
    return out;
  }
};

// Rows of an RREF basis of a subspace; coordinates are read off the pivots.
struct Subspace {
  QMatrix rows;
  std::vector<Eigen::Index> pivots;
};

Subspace row_space(const QMatrix& m) {
  Echelon<Rational> e = rref(m);
  return {e.matrix.topRows(e.rank()), e.pivots};
}

// The module induced on an invariant subspace of a module with matrices g.
ExplicitModule restrict_to(const Subspace& s, const std::vector<QSparse>& g, int degree) {
  ExplicitModule out;
  out.degree = degree;
  out.dim = s.rows.rows();
  QMatrix basis = s.rows.transpose();  // columns
  for (const auto& x : g) {
    QMatrix img = x * basis;
    QMatrix coords(out.dim, out.dim);
    for (Eigen::Index r = 0; r < out.dim; ++r)
      for (Eigen::Index c = 0; c < out.dim; ++c) coords(r, c) = img(s.pivots[static_cast<std::size_t>(r)], c);
    if (!(basis * coords == img)) throw Error(ErrorCode::CrosscheckFailed, "eigenspace is not a submodule");
    out.gens.push_back(to_sparse(coords));
  }
  return out;
}

Subspace eigenspace(const QSparse& op, int value) {
  QMatrix a = to_dense(op);
  for (Eigen::Index k = 0; k < a.rows(); ++k) a(k, k) -= Rational(value);
  QMatrix k = kernel_basis(a);
  if (k.cols() == 0) return {QMatrix(0, op.cols()), {}};
  return row_space(k.transpose());
}

// V_λ = A_n c_λ, acting by left multiplication.
ExplicitModule specht(const Partition& lambda) {
  int n = lambda.size();
  require_bound(n <= oracle_bounds().group_algebra, "specht: |λ| exceeds group algebra bound");
  if (n <= 1) {
    ExplicitModule triv;
    triv.degree = n;
    triv.dim = 1;
    return triv;
  }
  auto perms = all_permutations(n);
  Eigen::Index big = static_cast<Eigen::Index>(perms.size());
  GroupAlgebraElement c = young_symmetrizer(lambda);
  QMatrix span(big, big);
  for (Eigen::Index r = 0; r < big; ++r) {
    GroupAlgebraElement v = GroupAlgebraElement::basis(perms[static_cast<std::size_t>(r)]) * c;
    for (Eigen::Index col = 0; col < big; ++col) span(r, col) = 0;
    for (const auto& [p, coef] : v.terms()) span(r, static_cast<Eigen::Index>(p.rank())) = coef;
  }
  Subspace s = row_space(span);
  std::vector<QSparse> left;
  for (int i = 1; i < n; ++i) {
    Permutation si = Permutation::simple(n, i);
    std::vector<Eigen::Triplet<Rational, std::int64_t>> t;
    for (const auto& p : perms) t.emplace_back(static_cast<Eigen::Index>((si * p).rank()), static_cast<Eigen::Index>(p.rank()), Rational(1));
    QSparse m(big, big);
    m.setFromTriplets(t.begin(), t.end());
    left.push_back(m);
  }
  return restrict_to(s, left, n);
}

// A_{n+1} ⊗_{A_n} M with basis c_k ⊗ v_l, index k·dim + l.
struct Induced {
  std::vector<QSparse> gens;  // s_1..s_n
  QSparse jm;                 // c ⊗ v ↦ c J_{n+1} ⊗ v
};

Induced induce(const ExplicitModule& m) {
  int n = m.degree, big = n + 1;
  const CosetTable& t = coset_table(big, n);
  Eigen::Index d = m.dim, blocks = static_cast<Eigen::Index>(t.reps.size());
  std::map<Permutation, QSparse> rho;
  auto rho_of = [&](const Permutation& h) -> const QSparse& {
    auto it = rho.find(h);
    if (it == rho.end()) it = rho.emplace(h, m.act(h)).first;
    return it->second;
  };
  // matrix of c_k ⊗ v ↦ Σ_x c_k x ⊗ v for x in a list of permutations, acting on the right of c_k
  auto right_sum = [&](const std::vector<Permutation>& xs, bool left_action) {
    std::vector<Eigen::Triplet<Rational, std::int64_t>> trip;
    for (Eigen::Index k = 0; k < blocks; ++k)
      for (const auto& x : xs) {
        const Permutation& ck = t.reps[static_cast<std::size_t>(k)];
        Permutation h;
        Eigen::Index k2 = static_cast<Eigen::Index>(t.locate(left_action ? x * ck : ck * x, &h));
        const QSparse& r = rho_of(h);
        for (Eigen::Index c = 0; c < r.outerSize(); ++c)
          for (QSparse::InnerIterator it(r, c); it; ++it) trip.emplace_back(k2 * d + it.row(), k * d + c, it.value());
      }
    QSparse out(blocks * d, blocks * d);
    out.setFromTriplets(trip.begin(), trip.end());
    prune_zeros(out);
    return out;
  };
  Induced ind;
  for (int i = 1; i < big; ++i) ind.gens.push_back(right_sum({Permutation::simple(big, i)}, true));
  std::vector<Permutation> trans;
  for (int k = 1; k < big; ++k) trans.push_back(Permutation::transposition(big, k, big));
  ind.jm = right_sum(trans, false);
  return ind;
}

ExplicitModule apply_generator(const Generator& g, const ExplicitModule& m) {
  if (m.dim == 0) return {g.kind == GenKind::F ? m.degree + 1 : std::max(m.degree - 1, 0), 0, {}};
  if (g.kind == GenKind::F) {
    require_bound(m.degree + 1 <= oracle_bounds().module_degree, "hom oracle: module degree exceeds bound");
    Induced ind = induce(m);
    Subspace s = eigenspace(ind.jm, g.color);
    if (s.rows.rows() == 0) return {m.degree + 1, 0, {}};
    return restrict_to(s, ind.gens, m.degree + 1);
  }
  int n = m.degree;
  if (n == 0) return {0, 0, {}};
  QSparse jm(m.dim, m.dim);
  for (int k = 1; k < n; ++k) jm = QSparse(jm + m.act(Permutation::transposition(n, k, n)));
  Subspace s = eigenspace(jm, g.color);
  if (s.rows.rows() == 0) return {n - 1, 0, {}};
  std::vector<QSparse> gens(m.gens.begin(), m.gens.begin() + (n - 2 > 0 ? n - 2 : 0));
  return restrict_to(s, gens, n - 1);
}

std::mutex g_module_mutex;
std::map<GenWord, std::shared_ptr<const ExplicitModule>> g_module_cache;

std::shared_ptr<const ExplicitModule> module_for(const GenWord& w) {
  {
    std::lock_guard<std::mutex> lock(g_module_mutex);
    auto it = g_module_cache.find(w);
    if (it != g_module_cache.end()) return it->second;
  }
  std::shared_ptr<const ExplicitModule> out;
  if (w.gens.empty()) {
    out = std::make_shared<const ExplicitModule>(specht(w.source));
  } else {
    GenWord rest{w.source, std::vector<Generator>(w.gens.begin() + 1, w.gens.end())};
    out = std::make_shared<const ExplicitModule>(apply_generator(w.gens.front(), *module_for(rest)));
  }
  std::lock_guard<std::mutex> lock(g_module_mutex);
  g_module_cache.emplace(w, out);
  return out;
}

// Multiplicities of the irreducibles of S_m in a module, by characters.
std::vector<Rational> multiplicities(const ExplicitModule& m) {
  const CharacterTable& ct = character_table(m.degree);
  std::vector<Rational> out(ct.labels.size(), Rational(0));
  for (std::size_t c = 0; c < ct.labels.size(); ++c) {
    std::vector<int> one_line;
    int start = 1;
    for (int len : ct.labels[c].parts()) {
      for (int k = 0; k < len; ++k) one_line.push_back(start + (k + 1) % len);
      start += len;
    }
    Permutation rep = m.degree == 0 ? Permutation(0) : Permutation::from_one_line(one_line);
    Rational tr = m.degree == 0 ? Rational(m.dim) : sparse_trace(m.act(rep));
    for (std::size_t l = 0; l < ct.labels.size(); ++l)
      out[l] += Rational(ct.class_sizes[c]) * tr * Rational(ct.chi[l][c]);
  }
  for (auto& x : out) x /= Rational(factorial(m.degree));
  return out;
}

}  // namespace

int oracle_hom_dim(const GenWord& p, const GenWord& q) {
  if (p.source != q.source) throw Error(ErrorCode::SizeMismatch, "oracle_hom_dim: words have different sources");
  auto mp = module_for(p), mq = module_for(q);
  if (mp->dim == 0 || mq->dim == 0 || mp->degree != mq->degree) return 0;
  auto a = multiplicities(*mp), b = multiplicities(*mq);
  Rational total = 0;
  for (std::size_t k = 0; k < a.size(); ++k) total += a[k] * b[k];
  return static_cast<int>(total.convert_to<long>());
}

}  // namespace cathei
