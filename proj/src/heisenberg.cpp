#include "cathei/heisenberg.hpp"

#include <algorithm>
#include <numeric>

#include "cathei/error.hpp"
#include "cathei/group_algebra.hpp"

namespace cathei {

std::vector<std::vector<int>> HDiagram::levels() const {
  std::vector<std::vector<int>> out{signs};
  std::vector<int> cur = signs;
  int step = 0;
  for (const auto& s : slices) {
    ++step;
    int n = static_cast<int>(cur.size());
    std::string where = "slice " + std::to_string(step) + ": ";
    switch (s.kind) {
      case HSlice::Kind::Cross:
        if (s.pos < 1 || s.pos >= n) throw Error(ErrorCode::MalformedDiagram, where + "cross position out of range");
        std::swap(cur[s.pos - 1], cur[s.pos]);
        break;
      case HSlice::Kind::Cap:
        if (s.pos < 1 || s.pos >= n) throw Error(ErrorCode::MalformedDiagram, where + "cap position out of range");
        if (cur[s.pos - 1] == cur[s.pos]) throw Error(ErrorCode::MalformedDiagram, where + "cap joins equal orientations");
        cur.erase(cur.begin() + (s.pos - 1), cur.begin() + (s.pos + 1));
        break;
      case HSlice::Kind::Cup:
        if (s.pos < 1 || s.pos > n + 1) throw Error(ErrorCode::MalformedDiagram, where + "cup position out of range");
        if (s.left_sign != 1 && s.left_sign != -1) throw Error(ErrorCode::MalformedDiagram, where + "bad cup orientation");
        cur.insert(cur.begin() + (s.pos - 1), {s.left_sign, -s.left_sign});
        break;
    }
    out.push_back(cur);
  }
  return out;
}

int left_region(const std::vector<int>& signs, int base) {
  return std::accumulate(signs.begin(), signs.end(), base);
}

HRegions infer_h_regions(const HDiagram& d) {
  HRegions out;
  for (const auto& w : d.levels()) {
    std::vector<int> r(w.size() + 1);
    r[w.size()] = d.base;
    for (std::size_t k = w.size(); k-- > 0;) r[k] = r[k + 1] + w[k];
    for (int x : r)
      if (x < 0) out.is_zero = true;
    out.labels.push_back(std::move(r));
  }
  return out;
}

HMorphism HMorphism::zero(const std::vector<int>& bottom, const std::vector<int>& top, int base) {
  HMorphism m;
  m.bottom = bottom;
  m.top = top;
  m.base = base;
  return m;
}

void HMorphism::add(const Rational& c, const HDiagram& d) {
  if (c == 0 || infer_h_regions(d).is_zero) return;
  for (auto& [coef, diag] : terms)
    if (diag == d) {
      coef += c;
      if (coef == 0) terms.erase(std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return t.second == d; }));
      return;
    }
  terms.emplace_back(c, d);
}

HMorphism HMorphism::single(const HDiagram& d, const Rational& c) {
  HMorphism m = zero(d.signs, d.top_signs(), d.base);
  m.add(c, d);
  return m;
}

HMorphism HMorphism::identity(const std::vector<int>& signs, int base) { return single({signs, base, {}}); }
HMorphism HMorphism::cross(const std::vector<int>& signs, int base, int p) {
  return single({signs, base, {HSlice::cross(p)}});
}
HMorphism HMorphism::cap(const std::vector<int>& signs, int base, int p) { return single({signs, base, {HSlice::cap(p)}}); }
HMorphism HMorphism::cup(const std::vector<int>& signs, int base, int p, int left_sign) {
  return single({signs, base, {HSlice::cup(p, left_sign)}});
}

namespace {
void require_same_boundary(const HMorphism& a, const HMorphism& b) {
  if (a.bottom != b.bottom || a.top != b.top || a.base != b.base)
    throw Error(ErrorCode::BoundaryMismatch, "sum of 2-morphisms with different boundaries");
}
}  // namespace

HMorphism operator+(const HMorphism& a, const HMorphism& b) {
  require_same_boundary(a, b);
  HMorphism out = a;
  for (const auto& [c, d] : b.terms) out.add(c, d);
  return out;
}

HMorphism operator-(const HMorphism& a, const HMorphism& b) { return a + Rational(-1) * b; }

HMorphism operator*(const Rational& c, const HMorphism& a) {
  HMorphism out = HMorphism::zero(a.bottom, a.top, a.base);
  for (const auto& [coef, d] : a.terms) out.add(c * coef, d);
  return out;
}

HDiagram braid_of_permutation(const Permutation& w, int n_strands, int base) {
  HDiagram d{std::vector<int>(static_cast<std::size_t>(n_strands), +1), base, {}};
  for (int i : w.inverse().reduced_word()) d.slices.push_back(HSlice::cross(n_strands - i));
  return d;
}

HDiagram braid_down(const Permutation& w, int n_strands, int base) {
  HDiagram d{std::vector<int>(static_cast<std::size_t>(n_strands), -1), base, {}};
  std::vector<int> word = w.inverse().reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) d.slices.push_back(HSlice::cross(*it));
  return d;
}

HDiagram braid_closure(const Permutation& w, int base) {
  int n = w.degree();
  HDiagram d{{}, n + base, {}};
  for (int k = 1; k <= n; ++k) d.slices.push_back(HSlice::cup(k, +1));
  for (const auto& s : braid_of_permutation(w, n, base).slices) d.slices.push_back(s);
  for (int k = n; k >= 1; --k) d.slices.push_back(HSlice::cap(k));
  return d;
}

HMorphism epsilon_lambda(const Partition& lambda, int base) {
  int n = lambda.size();
  require_bound(n <= oracle_bounds().group_algebra, "epsilon_lambda: |λ| exceeds group algebra bound");
  GroupAlgebraElement e = central_idempotent(lambda);
  Rational scale = Rational(1) / Rational(factorial(n));
  HMorphism m = HMorphism::zero({}, {}, n + base);
  for (const auto& [w, c] : e.terms()) m.add(scale * c, braid_closure(w, base));
  return m;
}

HMorphism delta_n(int n) {
  HMorphism m = HMorphism::identity({}, n);
  for (const auto& lam : partitions_of(n)) m = m - epsilon_lambda(lam);
  return m;
}

HMorphism region_shift(const HMorphism& m) {
  HMorphism out = HMorphism::zero(m.bottom, m.top, m.base - 1);
  for (auto [c, d] : m.terms) {
    d.base -= 1;
    out.add(c, d);
  }
  return out;
}

HMorphism compose_h(const HMorphism& a, const HMorphism& b, Compose mode) {
  HMorphism out;
  if (mode == Compose::Vertical) {
    if (b.top != a.bottom || b.base != a.base) throw Error(ErrorCode::BoundaryMismatch, "compose_h: top of b is not the bottom of a");
    out = HMorphism::zero(b.bottom, a.top, a.base);
    for (const auto& [cb, db] : b.terms)
      for (const auto& [ca, da] : a.terms) {
        HDiagram d = db;
        d.slices.insert(d.slices.end(), da.slices.begin(), da.slices.end());
        out.add(ca * cb, d);
      }
    return out;
  }
  if (a.base != left_region(b.bottom, b.base))
    throw Error(ErrorCode::BoundaryMismatch, "compose_h: regions do not meet");
  std::vector<int> bottom = a.bottom, top = a.top;
  bottom.insert(bottom.end(), b.bottom.begin(), b.bottom.end());
  top.insert(top.end(), b.top.begin(), b.top.end());
  out = HMorphism::zero(bottom, top, b.base);
  int offset = static_cast<int>(a.bottom.size());
  for (const auto& [cb, db] : b.terms)
    for (const auto& [ca, da] : a.terms) {
      HDiagram d{bottom, b.base, {}};
      for (HSlice s : db.slices) {
        s.pos += offset;
        d.slices.push_back(s);
      }
      d.slices.insert(d.slices.end(), da.slices.begin(), da.slices.end());
      out.add(ca * cb, d);
    }
  return out;
}

HMorphism clockwise_circle(int n) { return HMorphism::single({{}, n, {HSlice::cup(1, +1), HSlice::cap(1)}}); }
HMorphism counterclockwise_circle(int n) { return HMorphism::single({{}, n, {HSlice::cup(1, -1), HSlice::cap(1)}}); }

HMorphism right_curl(int n) {
  return HMorphism::single({{+1}, n, {HSlice::cup(2, +1), HSlice::cross(1), HSlice::cap(2)}});
}

HMorphism left_curl(int n) {
  return HMorphism::single({{+1}, n, {HSlice::cup(1, -1), HSlice::cross(2), HSlice::cap(1)}});
}

}  // namespace cathei
