#include "cathei/partition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "cathei/error.hpp"
#include "cathei/perturbation.hpp"

namespace cathei {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1]))
      throw std::invalid_argument("parts must be positive and weakly decreasing");
    size_ += parts_[k];
  }
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  // reverse lexicographic: larger first part comes first
  std::size_t n = std::max(a.parts_.size(), b.parts_.size());
  for (std::size_t k = 0; k < n; ++k) {
    int x = a.part(static_cast<int>(k));
    int y = b.part(static_cast<int>(k));
    if (x != y) return y <=> x;
  }
  return std::strong_ordering::equal;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int col = 0; col < part(0); ++col) {
    int h = 0;
    while (h < length() && parts_[h] > col) ++h;
    c.push_back(h);
  }
  return Partition(c);
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t == "0" || t == "()" || t == "∅") return Partition();
  std::vector<int> parts;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw std::invalid_argument("bad partition: " + text);
    parts.push_back(std::stoi(item));
  }
  return Partition(parts);
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto ps = partitions_of(m);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Content> addable(const Partition& lambda) {
  std::vector<Content> out;
  int rows = lambda.length();
  for (int r = 0; r <= rows; ++r) {
    int c = lambda.part(r);  // new box at (r, c), 0-indexed
    if (r == 0 || lambda.part(r - 1) > c) out.push_back(c - r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Content> removable(const Partition& lambda) {
  std::vector<Content> out;
  for (int r = 0; r < lambda.length(); ++r) {
    int c = lambda.part(r) - 1;
    if (lambda.part(r + 1) <= c) out.push_back(c - r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_addable(const Partition& lambda, Content i) {
  auto a = addable(lambda);
  return std::find(a.begin(), a.end(), i) != a.end();
}

bool is_removable(const Partition& lambda, Content i) {
  auto a = removable(lambda);
  return std::find(a.begin(), a.end(), i) != a.end();
}

std::optional<Partition> add_box(const Partition& lambda, Content i) {
  for (int r = 0; r <= lambda.length(); ++r) {
    int c = lambda.part(r);
    if (c - r == i && (r == 0 || lambda.part(r - 1) > c)) {
      std::vector<int> p = lambda.parts();
      if (r == lambda.length()) p.push_back(1);
      else ++p[r];
      return Partition(p);
    }
  }
  return std::nullopt;
}

std::optional<Partition> remove_box(const Partition& lambda, Content i) {
  for (int r = 0; r < lambda.length(); ++r) {
    int c = lambda.part(r) - 1;
    if (c - r == i && lambda.part(r + 1) <= c) {
      std::vector<int> p = lambda.parts();
      --p[r];
      return Partition(p);
    }
  }
  return std::nullopt;
}

std::vector<Content> contents_multiset(const Partition& lambda) {
  std::vector<Content> out;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c) out.push_back(c - r);
  return out;
}

bool contains(const Partition& lambda, const Partition& mu) {
  for (int r = 0; r < lambda.length(); ++r)
    if (lambda.part(r) > mu.part(r)) return false;
  return true;
}

int hook_length(const Partition& lambda, int row, int col) {
  int arm = lambda.part(row) - col - 1;
  int leg = 0;
  while (row + leg + 1 < lambda.length() && lambda.part(row + leg + 1) > col) ++leg;
  return arm + leg + 1;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Integer dim_hook(const Partition& lambda) {
  Integer prod = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c) prod *= hook_length(lambda, r, c);
  Integer num = factorial(lambda.size());
  assert(num % prod == 0);
  Integer d = num / prod;
  if (perturbed(Site::HookLength) && lambda.size() >= 2) d += 1;
  return d;
}

namespace {

// Fill 1..n row by row, each entry placed at the end of a row whose
// length stays below the row above.
void enumerate_syt(const Partition& shape, std::vector<int>& filled,
                   std::vector<std::vector<int>>& tableau, int next,
                   const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (next > shape.size()) {
    visit(tableau);
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    if (filled[r] >= shape.part(r)) continue;
    if (r > 0 && filled[r - 1] <= filled[r]) continue;
    tableau[r].push_back(next);
    ++filled[r];
    enumerate_syt(shape, filled, tableau, next + 1, visit);
    --filled[r];
    tableau[r].pop_back();
  }
}

}  // namespace

void for_each_standard_tableau(
    const Partition& lambda,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<int> filled(lambda.length(), 0);
  std::vector<std::vector<int>> tableau(lambda.length());
  enumerate_syt(lambda, filled, tableau, 1, visit);
}

Integer dim_syt_oracle(const Partition& lambda) {
  require_bound(lambda.size() <= oracle_bounds().syt,
                "dim_syt_oracle: |λ| = " + std::to_string(lambda.size()));
  Integer count = 0;
  for_each_standard_tableau(lambda, [&](const std::vector<std::vector<int>>&) { count += 1; });
  return count;
}

Rational dimq(const Partition& lambda) { return Rational(dim_hook(lambda)); }

}  // namespace cathei
