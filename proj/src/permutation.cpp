#include "cathei/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cathei {

Permutation::Permutation(int n) : n_(n) {
  if (n < 0 || n > kMaxDegree) throw std::invalid_argument("permutation degree out of range");
  for (int k = 0; k < n; ++k) img_[k] = static_cast<std::uint8_t>(k);
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    int v = images[k];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation");
    seen[v - 1] = true;
    p.img_[k] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::simple(int n, int i) { return transposition(n, i, i + 1); }

std::vector<int> Permutation::one_line() const {
  std::vector<int> v(n_);
  for (int k = 0; k < n_; ++k) v[k] = img_[k] + 1;
  return v;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  int m = std::max(n_, rhs.n_);
  Permutation a = extended(m), b = rhs.extended(m);
  Permutation out(m);
  for (int k = 0; k < m; ++k) out.img_[k] = a.img_[b.img_[k]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(n_);
  for (int k = 0; k < n_; ++k) out.img_[img_[k]] = static_cast<std::uint8_t>(k);
  return out;
}

Permutation Permutation::extended(int m) const {
  if (m == n_) return *this;
  if (m < n_) throw std::invalid_argument("extended: smaller degree");
  Permutation out(m);
  for (int k = 0; k < n_; ++k) out.img_[k] = img_[k];
  return out;
}

Permutation Permutation::restricted(int m) const {
  if (m == n_) return *this;
  for (int k = m; k < n_; ++k)
    if (img_[k] != k) throw std::invalid_argument("restricted: moves a point above m");
  Permutation out(m);
  for (int k = 0; k < m; ++k) out.img_[k] = img_[k];
  return out;
}

bool Permutation::is_identity() const { return support_max() == 0; }

int Permutation::support_max() const {
  for (int k = n_ - 1; k >= 0; --k)
    if (img_[k] != k) return k + 1;
  return 0;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(n_, false);
  std::vector<int> lens;
  for (int k = 0; k < n_; ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (int j = k; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

std::string Permutation::cycle_notation() const {
  std::ostringstream os;
  std::vector<bool> seen(n_, false);
  bool any = false;
  for (int k = 0; k < n_; ++k) {
    if (seen[k] || img_[k] == k) continue;
    any = true;
    os << "(";
    bool first = true;
    for (int j = k; !seen[j]; j = img_[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
    }
    os << ")";
  }
  if (!any) os << "()";
  return os.str();
}

int Permutation::sign() const {
  Partition ct = cycle_type();
  int s = 1;
  for (int len : ct.parts())
    if (len % 2 == 0) s = -s;
  return s;
}

std::uint64_t Permutation::rank() const {
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int k = 0; k < n_; ++k) {
    int v = img_[k];
    int smaller = __builtin_popcount(~used & ((1u << v) - 1));
    r = r * static_cast<std::uint64_t>(n_ - k) + static_cast<std::uint64_t>(smaller);
    used |= 1u << v;
  }
  return r;
}

Permutation Permutation::unrank(int n, std::uint64_t r) {
  std::vector<std::uint64_t> digits(n);
  for (int k = n - 1; k >= 0; --k) {
    std::uint64_t base = static_cast<std::uint64_t>(n - k);
    digits[k] = r % base;
    r /= base;
  }
  Permutation p(n);
  std::uint32_t used = 0;
  for (int k = 0; k < n; ++k) {
    std::uint64_t d = digits[k];
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      if (d == 0) {
        p.img_[k] = static_cast<std::uint8_t>(v);
        used |= 1u << v;
        break;
      }
      --d;
    }
  }
  return p;
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = 0;
  for (int k = 0; k < n_; ++k) c |= static_cast<std::uint64_t>(img_[k]) << (4 * k);
  return c ^ (static_cast<std::uint64_t>(n_) << 60);
}

std::vector<int> Permutation::reduced_word() const {
  // bubble sort the one-line notation; each swap at positions (i, i+1)
  // records p = p' s_i, so the word reads left to right in reverse.
  std::vector<int> a = one_line();
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n_; ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(i + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

std::mutex g_coset_mutex;
std::map<std::pair<int, int>, CosetTable> g_cosets;

}  // namespace

const CosetTable& coset_table(int m, int b) {
  std::lock_guard<std::mutex> lock(g_coset_mutex);
  auto key = std::make_pair(m, b);
  auto it = g_cosets.find(key);
  if (it != g_cosets.end()) return it->second;
  CosetTable t;
  t.m = m;
  t.b = b;
  for (const Permutation& p : all_permutations(m)) {
    bool sorted = true;
    for (int k = 1; k < b; ++k)
      if (p(k) > p(k + 1)) sorted = false;
    if (!sorted) continue;
    t.index.emplace(p.code(), t.reps.size());
    t.reps.push_back(p);
  }
  return g_cosets.emplace(key, std::move(t)).first->second;
}

std::size_t CosetTable::locate(const Permutation& g, Permutation* h) const {
  std::array<std::uint8_t, Permutation::kMaxDegree> vals{};
  for (int k = 0; k < b; ++k) vals[k] = static_cast<std::uint8_t>(g(k + 1));
  std::sort(vals.begin(), vals.begin() + b);
  std::vector<int> v = g.one_line();
  for (int k = 0; k < b; ++k) v[k] = vals[k];
  Permutation rep = Permutation::from_one_line(v);
  if (h) *h = (rep.inverse() * g).restricted(b);
  return index.at(rep.code());
}

const std::vector<Permutation>& coset_representatives(int m, int b) { return coset_table(m, b).reps; }

std::size_t coset_index(const Permutation& g, int b, Permutation* h) {
  return coset_table(g.degree(), b).locate(g, h);
}

Integer class_size(const Partition& cycle_type) {
  // n! / (Π k^{m_k} m_k!)
  std::map<int, int> mult;
  for (int len : cycle_type.parts()) ++mult[len];
  Integer denom = 1;
  for (auto [len, m] : mult) {
    for (int t = 0; t < m; ++t) denom *= len;
    denom *= factorial(m);
  }
  return factorial(cycle_type.size()) / denom;
}

}  // namespace cathei
