#include "cathei/calculus_a.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "cathei/error.hpp"
#include "cathei/linalg.hpp"

namespace cathei {

std::vector<GenWord> LayeredDiagram::levels() const {
  std::vector<GenWord> out{bottom};
  GenWord cur = bottom;
  int step = 0;
  for (const auto& s : slices) {
    ++step;
    int n = static_cast<int>(cur.gens.size());
    std::string where = "slice " + std::to_string(step) + ": ";
    switch (s.kind) {
      case ASlice::Kind::Cross:
        if (s.pos < 1 || s.pos >= n) throw Error(ErrorCode::MalformedDiagram, where + "cross position out of range");
        std::swap(cur.gens[s.pos - 1], cur.gens[s.pos]);
        break;
      case ASlice::Kind::Cap: {
        if (s.pos < 1 || s.pos >= n) throw Error(ErrorCode::MalformedDiagram, where + "cap position out of range");
        const Generator& l = cur.gens[s.pos - 1];
        const Generator& r = cur.gens[s.pos];
        if (l.color != r.color || l.kind == r.kind)
          throw Error(ErrorCode::MalformedDiagram, where + "cap needs equal colors and opposite orientations");
        cur.gens.erase(cur.gens.begin() + (s.pos - 1), cur.gens.begin() + (s.pos + 1));
        break;
      }
      case ASlice::Kind::Cup:
        if (s.pos < 1 || s.pos > n + 1) throw Error(ErrorCode::MalformedDiagram, where + "cup position out of range");
        if (s.left_sign > 0) cur.gens.insert(cur.gens.begin() + (s.pos - 1), {F(s.color), E(s.color)});
        else cur.gens.insert(cur.gens.begin() + (s.pos - 1), {E(s.color), F(s.color)});
        break;
    }
    out.push_back(cur);
  }
  return out;
}

RegionLabels infer_regions(const LayeredDiagram& d) {
  RegionLabels out;
  for (const auto& w : d.levels()) {
    out.labels.push_back(word_region_labels(w));
    for (const auto& l : out.labels.back())
      if (!l) out.zero = true;
  }
  return out;
}

bool ColoredMatching::is_identity(std::size_t strands) const {
  if (pairs.size() != strands) return false;
  for (const auto& p : pairs)
    if (p.a.top || !p.b.top || p.a.pos != p.b.pos) return false;
  return true;
}

std::string ColoredMatching::str() const {
  auto ep = [](const Endpoint& e) { return (e.top ? "t" : "b") + std::to_string(e.pos); };
  std::string out = "matching(";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(pairs[k].color) + ":" + ep(pairs[k].a) + "-" + ep(pairs[k].b);
  }
  return out + ")";
}

std::optional<ColoredMatching> canonical_matching(const GenWord& src, const GenWord& dst) {
  struct End {
    Endpoint e;
    int color, sign;
  };
  std::vector<End> circle;
  for (std::size_t k = 0; k < src.gens.size(); ++k)
    circle.push_back({{false, static_cast<int>(k) + 1}, src.gens[k].color, src.gens[k].sign()});
  for (std::size_t k = dst.gens.size(); k-- > 0;)
    circle.push_back({{true, static_cast<int>(k) + 1}, dst.gens[k].color, -dst.gens[k].sign()});
  std::map<int, std::vector<End>> stacks;
  ColoredMatching m;
  for (const auto& e : circle) {
    auto& st = stacks[e.color];
    if (!st.empty() && st.back().sign != e.sign) {
      Endpoint a = st.back().e, b = e.e;
      if (b < a) std::swap(a, b);
      m.pairs.push_back({e.color, a, b});
      st.pop_back();
    } else {
      st.push_back(e);
    }
  }
  for (const auto& [c, st] : stacks)
    if (!st.empty()) return std::nullopt;
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

ColoredMatching traced_matching(const LayeredDiagram& d, int* closed_loops) {
  std::vector<int> parent;
  std::vector<int> color;
  auto make = [&](int c) {
    parent.push_back(static_cast<int>(parent.size()));
    color.push_back(c);
    return static_cast<int>(parent.size()) - 1;
  };
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  std::vector<int> cur;
  for (const auto& g : d.bottom.gens) cur.push_back(make(g.color));
  std::size_t bottom_count = cur.size();
  d.levels();  // validates the slices
  for (const auto& s : d.slices) {
    switch (s.kind) {
      case ASlice::Kind::Cross:
        std::swap(cur[s.pos - 1], cur[s.pos]);
        break;
      case ASlice::Kind::Cap:
        unite(cur[s.pos - 1], cur[s.pos]);
        cur.erase(cur.begin() + (s.pos - 1), cur.begin() + (s.pos + 1));
        break;
      case ASlice::Kind::Cup: {
        int x = make(s.color), y = make(s.color);
        unite(x, y);
        cur.insert(cur.begin() + (s.pos - 1), {x, y});
        break;
      }
    }
  }
  std::map<int, std::vector<Endpoint>> comps;
  for (std::size_t k = 0; k < bottom_count; ++k) comps[find(static_cast<int>(k))].push_back({false, static_cast<int>(k) + 1});
  for (std::size_t k = 0; k < cur.size(); ++k) comps[find(cur[k])].push_back({true, static_cast<int>(k) + 1});
  ColoredMatching m;
  for (auto& [root, eps] : comps) {
    std::sort(eps.begin(), eps.end());
    if (eps.size() == 2) m.pairs.push_back({color[root], eps[0], eps[1]});
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  if (closed_loops) {
    std::set<int> roots;
    for (std::size_t k = 0; k < parent.size(); ++k) roots.insert(find(static_cast<int>(k)));
    *closed_loops = static_cast<int>(roots.size() - comps.size());
  }
  return m;
}

namespace {

struct Strand {
  Endpoint end;
  Generator gen;
};

struct CapPlan {
  std::vector<ASlice> ops;  // Cross and Cap, in order
  std::vector<Generator> cap_left;  // left generator of each Cap op
  std::vector<Strand> rest;
};

// Caps off every pair of endpoints lying on this side, innermost first.
CapPlan plan_caps(std::vector<Strand> cur, const std::map<Endpoint, Endpoint>& partner, bool top_side) {
  CapPlan plan;
  auto same_side_pair = [&](const Strand& s) {
    auto it = partner.find(s.end);
    return it != partner.end() && it->second.top == top_side;
  };
  for (;;) {
    int best_p = -1, best_q = -1;
    for (int p = 0; p < static_cast<int>(cur.size()); ++p) {
      if (!same_side_pair(cur[p])) continue;
      Endpoint other = partner.at(cur[p].end);
      for (int q = p + 1; q < static_cast<int>(cur.size()); ++q)
        if (cur[q].end == other && (best_p < 0 || q - p < best_q - best_p)) {
          best_p = p;
          best_q = q;
        }
    }
    if (best_p < 0) break;
    for (int q = best_q; q > best_p + 1; --q) {
      plan.ops.push_back(ASlice::cross(q));
      std::swap(cur[q - 1], cur[q]);
    }
    plan.ops.push_back(ASlice::cap(best_p + 1));
    plan.cap_left.push_back(cur[best_p].gen);
    cur.erase(cur.begin() + best_p, cur.begin() + best_p + 2);
  }
  plan.rest = std::move(cur);
  return plan;
}

}  // namespace

LayeredDiagram canonical_diagram(const GenWord& src, const GenWord& dst, const ColoredMatching& m) {
  std::map<Endpoint, Endpoint> partner;
  for (const auto& p : m.pairs) {
    partner[p.a] = p.b;
    partner[p.b] = p.a;
  }
  std::vector<Strand> bottom, top;
  for (std::size_t k = 0; k < src.gens.size(); ++k) bottom.push_back({{false, static_cast<int>(k) + 1}, src.gens[k]});
  for (std::size_t k = 0; k < dst.gens.size(); ++k) top.push_back({{true, static_cast<int>(k) + 1}, dst.gens[k]});
  CapPlan caps = plan_caps(bottom, partner, false);
  CapPlan cups = plan_caps(top, partner, true);
  LayeredDiagram d{src, caps.ops};
  // through strands: bubble sort into the order they have below the cups
  std::map<Endpoint, int> target;
  for (std::size_t k = 0; k < cups.rest.size(); ++k) target[cups.rest[k].end] = static_cast<int>(k);
  std::vector<int> order;
  for (const auto& s : caps.rest) order.push_back(target.at(partner.at(s.end)));
  for (std::size_t pass = 0; pass < order.size(); ++pass)
    for (std::size_t j = 0; j + 1 < order.size(); ++j)
      if (order[j] > order[j + 1]) {
        std::swap(order[j], order[j + 1]);
        d.slices.push_back(ASlice::cross(static_cast<int>(j) + 1));
      }
  std::size_t cap_no = cups.cap_left.size();
  for (std::size_t k = cups.ops.size(); k-- > 0;) {
    const ASlice& op = cups.ops[k];
    if (op.kind == ASlice::Kind::Cross) {
      d.slices.push_back(op);
    } else {
      const Generator& g = cups.cap_left[--cap_no];
      d.slices.push_back(ASlice::cup(op.pos, g.color, g.sign()));
    }
  }
  return d;
}

Morphism2 Morphism2::make_zero(const GenWord& src, const GenWord& dst, std::string reason) {
  Morphism2 z;
  z.src = src;
  z.dst = dst;
  z.zero_reason = std::move(reason);
  return z;
}

Morphism2 Morphism2::canonical(const GenWord& src, const GenWord& dst, const Rational& c) {
  auto ts = word_apply(src), td = word_apply(dst);
  if (!ts || !td) return make_zero(src, dst, "invalid region");
  if (src.source != dst.source || *ts != *td) return make_zero(src, dst, "boundary mismatch");
  if (c == 0) return make_zero(src, dst, "zero scalar");
  auto m = canonical_matching(src, dst);
  if (!m) return make_zero(src, dst, "no colored matching");
  Morphism2 out;
  out.zero = false;
  out.scalar = c;
  out.src = src;
  out.dst = dst;
  out.matching = *m;
  return out;
}

std::string Morphism2::str() const {
  if (zero) return "ZERO (" + zero_reason + ")";
  std::string body = src == dst && matching.is_identity(src.size()) ? "identity-matching" : matching.str();
  return scalar.str() + " * " + body;
}

bool operator==(const Morphism2& a, const Morphism2& b) {
  if (a.src != b.src || a.dst != b.dst || a.zero != b.zero) return false;
  return a.zero || (a.scalar == b.scalar && a.matching == b.matching);
}

Morphism2 normalize(const LayeredDiagram& d) {
  std::vector<GenWord> lv = d.levels();
  for (std::size_t k = 0; k < d.slices.size(); ++k)
    if (d.slices[k].kind == ASlice::Kind::Cross) {
      const auto& w = lv[k].gens;
      int p = d.slices[k].pos;
      if (std::abs(w[p - 1].color - w[p].color) <= 1) return Morphism2::make_zero(d.bottom, lv.back(), "adjacent colors");
    }
  if (infer_regions(d).zero) return Morphism2::make_zero(d.bottom, lv.back(), "invalid region");
  Morphism2 out = Morphism2::canonical(d.bottom, lv.back());
  if (out.zero) throw Error(ErrorCode::CrosscheckFailed, "valid diagram without a canonical matching");
  return out;
}

Morphism2 compose_vertical(const Morphism2& a, const Morphism2& b) {
  if (b.dst != a.src) throw Error(ErrorCode::BoundaryMismatch, b.dst.str() + " vs " + a.src.str());
  if (a.zero || b.zero) return Morphism2::make_zero(b.src, a.dst, "zero factor");
  LayeredDiagram d = canonical_diagram(b.src, b.dst, b.matching);
  LayeredDiagram top = canonical_diagram(a.src, a.dst, a.matching);
  d.slices.insert(d.slices.end(), top.slices.begin(), top.slices.end());
  Morphism2 out = normalize(d);
  if (!out.zero) out.scalar *= a.scalar * b.scalar;
  return out;
}

Morphism2 compose_horizontal(const Morphism2& a, const Morphism2& b) {
  auto tb = word_apply(b.src);
  if (!tb || *tb != a.src.source) throw Error(ErrorCode::RegionMismatch, "compose_horizontal: regions do not meet");
  GenWord src{b.src.source, a.src.gens}, dst{b.dst.source, a.dst.gens};
  src.gens.insert(src.gens.end(), b.src.gens.begin(), b.src.gens.end());
  dst.gens.insert(dst.gens.end(), b.dst.gens.begin(), b.dst.gens.end());
  if (a.zero || b.zero) return Morphism2::make_zero(src, dst, "zero factor");
  LayeredDiagram d{src, {}};
  int offset = static_cast<int>(a.src.size());
  for (ASlice s : canonical_diagram(b.src, b.dst, b.matching).slices) {
    s.pos += offset;
    d.slices.push_back(s);
  }
  for (const ASlice& s : canonical_diagram(a.src, a.dst, a.matching).slices) d.slices.push_back(s);
  Morphism2 out = normalize(d);
  if (!out.zero) out.scalar *= a.scalar * b.scalar;
  return out;
}

int hom_dim(const GenWord& p, const GenWord& q) {
  auto tp = word_apply(p), tq = word_apply(q);
  if (!tp || !tq || p.source != q.source || *tp != *tq) return 0;
  auto m = canonical_matching(p, q);
  if (!m) return 0;
  if (infer_regions(canonical_diagram(p, q, *m)).zero)
    throw Error(ErrorCode::CrosscheckFailed, "canonical diagram " + p.str() + " -> " + q.str() + " has a zero region");
  return 1;
}

Morphism2 MorphismMatrix::entry(std::size_t r, std::size_t c) const {
  Rational v = coeffs.coeff(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  if (v == 0) return Morphism2::make_zero(cols[c], rows[r], "zero entry");
  return Morphism2::canonical(cols[c], rows[r], v);
}

MorphismMatrix MorphismMatrix::identity(const std::vector<GenWord>& words) {
  return {words, words, sparse_identity<Rational>(static_cast<Eigen::Index>(words.size()))};
}

namespace {
std::mutex g_compose_mutex;
std::map<std::tuple<GenWord, GenWord, GenWord>, bool> g_compose_cache;

// Whether canonical(y→z) ∘ canonical(x→y) is nonzero; it is then 1 times
// canonical(x→z).
bool canonical_composite_nonzero(const GenWord& x, const GenWord& y, const GenWord& z) {
  auto key = std::make_tuple(x, y, z);
  {
    std::lock_guard<std::mutex> lock(g_compose_mutex);
    auto it = g_compose_cache.find(key);
    if (it != g_compose_cache.end()) return it->second;
  }
  Morphism2 c = compose_vertical(Morphism2::canonical(y, z), Morphism2::canonical(x, y));
  if (!c.zero && c.scalar != 1) throw Error(ErrorCode::CrosscheckFailed, "composite of canonical morphisms has scalar " + c.scalar.str());
  std::lock_guard<std::mutex> lock(g_compose_mutex);
  g_compose_cache.emplace(key, !c.zero);
  return !c.zero;
}
}  // namespace

MorphismMatrix operator*(const MorphismMatrix& a, const MorphismMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::BoundaryMismatch, "MorphismMatrix product: summands differ");
  std::vector<Eigen::Triplet<Rational, std::int64_t>> trip;
  for (Eigen::Index c = 0; c < b.coeffs.outerSize(); ++c)
    for (QSparse::InnerIterator bk(b.coeffs, c); bk; ++bk)
      for (QSparse::InnerIterator ar(a.coeffs, bk.row()); ar; ++ar) {
        const GenWord& x = b.cols[static_cast<std::size_t>(c)];
        const GenWord& y = b.rows[static_cast<std::size_t>(bk.row())];
        const GenWord& z = a.rows[static_cast<std::size_t>(ar.row())];
        if (canonical_composite_nonzero(x, y, z)) trip.emplace_back(ar.row(), c, ar.value() * bk.value());
      }
  MorphismMatrix out{a.rows, b.cols, QSparse(static_cast<Eigen::Index>(a.rows.size()), static_cast<Eigen::Index>(b.cols.size()))};
  out.coeffs.setFromTriplets(trip.begin(), trip.end());
  prune_zeros(out.coeffs);
  return out;
}

MorphismMatrix operator+(const MorphismMatrix& a, const MorphismMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw Error(ErrorCode::BoundaryMismatch, "MorphismMatrix sum: summands differ");
  MorphismMatrix out{a.rows, a.cols, QSparse(a.coeffs + b.coeffs)};
  prune_zeros(out.coeffs);
  return out;
}

MorphismMatrix operator*(const Rational& c, const MorphismMatrix& a) {
  MorphismMatrix out{a.rows, a.cols, QSparse(a.coeffs * c)};
  prune_zeros(out.coeffs);
  return out;
}

bool operator==(const MorphismMatrix& a, const MorphismMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && sparse_equal(a.coeffs, b.coeffs);
}

bool MorphismMatrix::is_zero() const { return sparse_is_zero(coeffs); }

}  // namespace cathei
