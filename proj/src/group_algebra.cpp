#include "cathei/group_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "cathei/error.hpp"
#include "cathei/perturbation.hpp"

namespace cathei {

GroupAlgebraElement GroupAlgebraElement::identity(int degree) {
  return basis(Permutation(degree));
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p, const Rational& c) {
  GroupAlgebraElement x(p.degree());
  if (c != 0) x.terms_.emplace_back(p, c);
  return x;
}

GroupAlgebraElement GroupAlgebraElement::from_terms(int degree, std::vector<Term> terms) {
  GroupAlgebraElement x(degree);
  x.terms_ = std::move(terms);
  x.normalize();
  return x;
}

void GroupAlgebraElement::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) merged.back().second += t.second;
    else merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.second == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

Rational GroupAlgebraElement::coeff(const Permutation& p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const Term& t, const Permutation& q) { return t.first < q; });
  if (it != terms_.end() && it->first == p) return it->second;
  return Rational(0);
}

GroupAlgebraElement GroupAlgebraElement::embedded(int m) const {
  GroupAlgebraElement x(m);
  x.terms_.reserve(terms_.size());
  for (const auto& [p, c] : terms_) x.terms_.emplace_back(p.extended(m), c);
  x.normalize();
  return x;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
  int m = std::max(degree_, rhs.degree_);
  if (degree_ < m) *this = embedded(m);
  for (const auto& [p, c] : rhs.terms_) terms_.emplace_back(p.extended(m), c);
  normalize();
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& rhs) {
  return *this += rhs * Rational(-1);
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& t : terms_) t.second *= c;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  int m = std::max(a.degree_, b.degree_);
  GroupAlgebraElement out(m);
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<Permutation> bp;
  bp.reserve(b.terms_.size());
  for (const auto& t : b.terms_) bp.push_back(t.first.extended(m));
  std::uint64_t work = static_cast<std::uint64_t>(a.size()) * b.size();
  Integer nf = factorial(m);
  if (work * 8 < nf) {
    std::unordered_map<Permutation, Rational, PermutationHash> acc;
    for (const auto& [p, c] : a.terms_) {
      Permutation pe = p.extended(m);
      for (std::size_t k = 0; k < bp.size(); ++k) acc[pe * bp[k]] += c * b.terms_[k].second;
    }
    out.terms_.reserve(acc.size());
    for (auto& [p, c] : acc) out.terms_.emplace_back(p, std::move(c));
  } else {
    std::size_t total = static_cast<std::size_t>(nf);
    std::vector<Rational> acc(total);
    std::vector<bool> hit(total, false);
    for (const auto& [p, c] : a.terms_) {
      Permutation pe = p.extended(m);
      for (std::size_t k = 0; k < bp.size(); ++k) {
        std::size_t r = static_cast<std::size_t>((pe * bp[k]).rank());
        acc[r] += c * b.terms_[k].second;
        hit[r] = true;
      }
    }
    for (std::size_t r = 0; r < total; ++r)
      if (hit[r] && acc[r] != 0) out.terms_.emplace_back(Permutation::unrank(m, r), std::move(acc[r]));
  }
  out.normalize();
  return out;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree_ == b.degree_) return a.terms_ == b.terms_;
  int m = std::max(a.degree_, b.degree_);
  return a.embedded(m).terms_ == b.embedded(m).terms_;
}

std::string GroupAlgebraElement::dump() const {
  std::ostringstream os;
  for (const auto& [p, c] : terms_) os << c << " * " << p.cycle_notation() << "\n";
  return os.str();
}

namespace {

struct MnKey {
  std::vector<int> parts;
  std::vector<int> cycles;
  bool operator<(const MnKey& o) const {
    return std::tie(parts, cycles) < std::tie(o.parts, o.cycles);
  }
};

std::mutex g_mn_mutex;
std::map<MnKey, Integer> g_mn_memo;

Integer mn_recursive(const std::vector<int>& parts, const std::vector<int>& cycles, std::size_t next) {
  if (next == cycles.size()) return 1;
  MnKey key{parts, std::vector<int>(cycles.begin() + static_cast<long>(next), cycles.end())};
  {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    auto it = g_mn_memo.find(key);
    if (it != g_mn_memo.end()) return it->second;
  }
  int len = static_cast<int>(parts.size());
  std::vector<int> beta(len);
  for (int k = 0; k < len; ++k) beta[k] = parts[k] + (len - 1 - k);
  int r = cycles[next];
  Integer total = 0;
  for (int k = 0; k < len; ++k) {
    int target = beta[k] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[k]) ++between;
    std::vector<int> nb = beta;
    nb[k] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> np(len);
    for (int t = 0; t < len; ++t) np[t] = nb[t] - (len - 1 - t);
    while (!np.empty() && np.back() == 0) np.pop_back();
    Integer sub = mn_recursive(np, cycles, next + 1);
    total += (between % 2 == 0) ? sub : Integer(-sub);
  }
  std::lock_guard<std::mutex> lock(g_mn_mutex);
  g_mn_memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer character_mn(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size())
    throw Error(ErrorCode::SizeMismatch, "character_mn: |λ| ≠ |class|");
  Integer v = mn_recursive(lambda.parts(), cycle_type.parts(), 0);
  if (perturbed(Site::CharacterSign)) {
    const auto& c = cycle_type.parts();
    if (std::find(c.begin(), c.end(), 3) != c.end()) v = -v;
  }
  return v;
}

namespace {
std::mutex g_table_mutex;
std::map<int, CharacterTable> g_tables;
std::mutex g_idem_mutex;
std::map<Partition, GroupAlgebraElement> g_idempotents;
}  // namespace

const CharacterTable& character_table(int n) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = g_tables.find(n);
  if (it != g_tables.end()) return it->second;
  CharacterTable t;
  t.n = n;
  t.labels = partitions_of(n);
  for (const auto& lam : t.labels) {
    std::vector<Integer> row;
    for (const auto& cls : t.labels) row.push_back(mn_recursive(lam.parts(), cls.parts(), 0));
    t.chi.push_back(std::move(row));
  }
  for (const auto& cls : t.labels) t.class_sizes.push_back(class_size(cls));
  return g_tables.emplace(n, std::move(t)).first->second;
}

GroupAlgebraElement central_idempotent(const Partition& lambda) {
  int n = lambda.size();
  require_bound(n <= std::max(oracle_bounds().group_algebra, oracle_bounds().eval_region),
                "central_idempotent: n = " + std::to_string(n));
  bool cacheable = active_site() == Site::None;
  if (cacheable) {
    std::lock_guard<std::mutex> lock(g_idem_mutex);
    auto it = g_idempotents.find(lambda);
    if (it != g_idempotents.end()) return it->second;
  }
  std::map<Partition, Integer> chi;
  for (const auto& cls : partitions_of(n)) chi.emplace(cls, character_mn(lambda, cls));
  Rational scale = Rational(dim_hook(lambda)) / Rational(factorial(n));
  if (perturbed(Site::CentralIdempotent)) scale *= scale;
  std::vector<GroupAlgebraElement::Term> terms;
  for (const auto& w : all_permutations(n)) {
    const Integer& c = chi.at(w.cycle_type());  // χ(w⁻¹) = χ(w)
    if (c != 0) terms.emplace_back(w, scale * Rational(c));
  }
  GroupAlgebraElement e = GroupAlgebraElement::from_terms(n, std::move(terms));
  if (cacheable) {
    std::lock_guard<std::mutex> lock(g_idem_mutex);
    g_idempotents.emplace(lambda, e);
  }
  return e;
}

GroupAlgebraElement jucys_murphy(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "jucys_murphy: i out of range");
  std::vector<GroupAlgebraElement::Term> terms;
  for (int k = 1; k < i; ++k) terms.emplace_back(Permutation::transposition(n, k, i), Rational(1));
  return GroupAlgebraElement::from_terms(n, std::move(terms));
}

Rational regular_trace(const GroupAlgebraElement& x) {
  return Rational(factorial(x.degree())) * x.coeff(Permutation(x.degree()));
}

std::map<Partition, Rational> class_sums(const GroupAlgebraElement& x) {
  std::map<Partition, Rational> out;
  for (const auto& [p, c] : x.terms()) out[p.cycle_type()] += c;
  return out;
}

Rational sandwich_trace(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  int n = std::max(x.degree(), y.degree());
  auto xs = class_sums(x.embedded(n));
  auto ys = class_sums(y.embedded(n));
  Rational total = 0;
  Rational nf = Rational(factorial(n));
  for (const auto& [cls, cx] : xs) {
    auto it = ys.find(cls);
    if (it == ys.end()) continue;
    total += nf / Rational(class_size(cls)) * cx * it->second;
  }
  return total;
}

namespace {

// All permutations of {1..n} preserving each block of the given set partition.
std::vector<Permutation> block_group(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out = {Permutation(n)};
  for (const auto& block : blocks) {
    std::vector<int> images = block;
    std::vector<Permutation> next;
    std::sort(images.begin(), images.end());
    do {
      std::vector<int> line(n);
      for (int k = 0; k < n; ++k) line[k] = k + 1;
      for (std::size_t t = 0; t < block.size(); ++t) line[block[t] - 1] = images[t];
      Permutation q = Permutation::from_one_line(line);
      for (const auto& p : out) next.push_back(p * q);
    } while (std::next_permutation(images.begin(), images.end()));
    out = std::move(next);
  }
  return out;
}

}  // namespace

GroupAlgebraElement young_symmetrizer(const Partition& lambda) {
  int n = lambda.size();
  std::vector<std::vector<int>> rows, cols;
  int next = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    rows.emplace_back();
    for (int c = 0; c < lambda.part(r); ++c) rows.back().push_back(next++);
  }
  for (int c = 0; c < lambda.part(0); ++c) {
    cols.emplace_back();
    for (int r = 0; r < lambda.length() && lambda.part(r) > c; ++r) cols.back().push_back(rows[r][c]);
  }
  std::vector<GroupAlgebraElement::Term> a, b;
  for (const auto& p : block_group(n, rows)) a.emplace_back(p, Rational(1));
  for (const auto& q : block_group(n, cols)) b.emplace_back(q, Rational(q.sign()));
  return GroupAlgebraElement::from_terms(n, std::move(a)) * GroupAlgebraElement::from_terms(n, std::move(b));
}

}  // namespace cathei
