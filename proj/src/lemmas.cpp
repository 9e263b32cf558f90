#include <functional>
#include <map>

#include "cathei/error.hpp"
#include "cathei/functor_bridge.hpp"

namespace cathei {

bool LemmaReport::pass() const {
  for (const auto& i : instances)
    if (!i.pass) return false;
  return true;
}

nlohmann::json LemmaReport::to_json() const {
  nlohmann::json inst = nlohmann::json::array();
  for (const auto& i : instances)
    inst.push_back({{"params", i.params}, {"pass", i.pass}, {"lhs_hash", i.lhs_hash}, {"rhs_hash", i.rhs_hash}});
  return {{"lemma", lemma}, {"bound", bound}, {"pass", pass()}, {"instances", inst}};
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"orthoid",   "concSlide",        "dashed-sum",         "plSlide",
                                              "sandwich",  "circle-values",    "right-curl",         "crossing-removal",
                                              "clockwise-circle-n", "zigzag", "diamond"};
  return names;
}

namespace {

void record(LemmaReport& r, const std::string& params, const LinearMap& lhs, const LinearMap& rhs) {
  r.instances.push_back({params, lhs == rhs, lhs.digest(), rhs.digest()});
}

void record_flag(LemmaReport& r, const std::string& params, bool ok, const LinearMap& witness) {
  r.instances.push_back({params, ok, witness.digest(), witness.digest()});
}

// F_H of a diagram, or of an equivalent junction form when the diagram's
// regions exceed the evaluation bound.
LinearMap eval_or(const HMorphism& full, const std::function<LinearMap()>& junction) {
  try {
    return eval_FH(full);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BoundExceeded) throw;
    return junction();
  }
}

HMorphism epsilon_sum(int n) {
  HMorphism m = HMorphism::zero({}, {}, n);
  for (const auto& lam : partitions_of(n)) m = m + epsilon_lambda(lam);
  return m;
}

LinearMap epsilon_sum_junction(const std::vector<int>& signs, int base, std::size_t gap, int n) {
  ChainSpace s = chain_for_word(signs, base);
  LinearMap m = LinearMap::zero(s, s);
  for (const auto& lam : partitions_of(n)) m = m + region_epsilon(signs, base, gap, lam);
  return m;
}

std::string lam_param(const char* name, const Partition& p) { return std::string(name) + "=" + p.str(); }

LinearMap map_of(const HDiagram& d) { return eval_FH(d); }

// [+] over base n: n cups, D(w) on the n+1 upward strands, n caps.
HDiagram pl_diagram(const Permutation& w, int n) {
  HDiagram d{{+1}, n, {}};
  for (int k = 1; k <= n; ++k) d.slices.push_back(HSlice::cup(k + 1, +1));
  for (const auto& s : braid_of_permutation(w, n + 1, 0).slices) d.slices.push_back(s);
  for (int k = n; k >= 1; --k) d.slices.push_back(HSlice::cap(k + 1));
  return d;
}

LinearMap pl_sum(const GroupAlgebraElement& x, int n) {
  ChainSpace s = chain_for_word({+1}, n);
  LinearMap out = LinearMap::zero(s, s);
  Rational scale = Rational(1) / Rational(factorial(n));
  for (const auto& [w, c] : x.terms()) out = out + (scale * c) * map_of(pl_diagram(w, n));
  return out;
}

void orthoid(LemmaReport& r, int bound) {
  for (int n = 0; n <= bound; ++n) {
    ChainSpace s = chain_for_word({}, n);
    LinearMap total = LinearMap::zero(s, s);
    std::vector<std::pair<Partition, LinearMap>> eps;
    for (const auto& lam : partitions_of(n)) {
      LinearMap e = eval_FH(epsilon_lambda(lam));
      std::string p = "n=" + std::to_string(n) + " " + lam_param("lambda", lam);
      record(r, p + " action", e, factor_multiply(s, 0, Side::Right, central_idempotent(lam)));
      record(r, p + " idempotent", e * e, e);
      Integer d = dim_hook(lam);
      record_flag(r, p + " rank", sparse_rank(e.matrix) == static_cast<Eigen::Index>(d * d), e);
      for (const auto& [mu, f] : eps) record(r, p + " " + lam_param("mu", mu) + " orthogonal", e * f, LinearMap::zero(s, s));
      total = total + e;
      eps.emplace_back(lam, e);
    }
    record(r, "n=" + std::to_string(n) + " sum", total, LinearMap::identity(s));
    record(r, "n=" + std::to_string(n) + " delta", eval_FH(delta_n(n)), LinearMap::zero(s, s));
  }
}

void conc_slide(LemmaReport& r, int bound) {
  for (int n = 0; n <= bound; ++n) {
    std::string p = "n=" + std::to_string(n);
    HMorphism up = HMorphism::identity({+1}, n), down = HMorphism::identity({-1}, n + 1);
    HMorphism en = epsilon_sum(n), en1 = epsilon_sum(n + 1);
    LinearMap l_up = eval_or(compose_h(en1, up, Compose::Horizontal), [&] { return epsilon_sum_junction({+1}, n, 0, n + 1); });
    LinearMap r_up = eval_or(compose_h(up, en, Compose::Horizontal), [&] { return epsilon_sum_junction({+1}, n, 1, n); });
    record(r, p + " up epsilon", l_up, r_up);
    LinearMap id_up = LinearMap::identity(chain_for_word({+1}, n));
    record(r, p + " up delta", id_up - l_up, id_up - r_up);
    LinearMap l_dn = eval_or(compose_h(en, down, Compose::Horizontal), [&] { return epsilon_sum_junction({-1}, n + 1, 0, n); });
    LinearMap r_dn = eval_or(compose_h(down, en1, Compose::Horizontal), [&] { return epsilon_sum_junction({-1}, n + 1, 1, n + 1); });
    record(r, p + " down epsilon", l_dn, r_dn);
    LinearMap id_dn = LinearMap::identity(chain_for_word({-1}, n + 1));
    record(r, p + " down delta", id_dn - l_dn, id_dn - r_dn);
  }
}

void dashed_sum(LemmaReport& r, int bound) {
  for (int n = 1; n <= bound; ++n) {
    std::vector<int> signs(static_cast<std::size_t>(n), +1);
    signs.insert(signs.end(), static_cast<std::size_t>(n), -1);
    HDiagram lhs{signs, n, {}};
    for (int k = n; k >= 1; --k) lhs.slices.push_back(HSlice::cap(k));
    for (int k = 1; k <= n; ++k) lhs.slices.push_back(HSlice::cup(k, +1));
    HMorphism rhs = HMorphism::zero(signs, signs, n);
    for (const auto& z : all_permutations(n)) {
      HMorphism a = HMorphism::single(braid_of_permutation(z, n, 0));
      HMorphism b = HMorphism::single(braid_down(z.inverse(), n, n));
      rhs = rhs + compose_h(a, b, Compose::Horizontal);
    }
    record(r, "n=" + std::to_string(n), eval_FH(lhs), eval_FH(rhs));
  }
}

void pl_slide(LemmaReport& r, int bound) {
  for (int n = 0; n + 1 <= bound; ++n)
    for (const auto& mu : partitions_of(n + 1)) {
      std::string p = "n=" + std::to_string(n) + " " + lam_param("mu", mu);
      LinearMap junction = region_epsilon({+1}, n, 0, mu);
      LinearMap lhs = eval_or(compose_h(epsilon_lambda(mu), HMorphism::identity({+1}, n), Compose::Horizontal),
                              [&] { return junction; });
      record(r, p, lhs, pl_sum(central_idempotent(mu), n));
      record(r, p + " junction", lhs, junction);
    }
}

void sandwich(LemmaReport& r, int bound) {
  for (int n = 0; n + 1 <= bound; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& mu : partitions_of(n + 1)) {
        std::string p = lam_param("lambda", lam) + " " + lam_param("mu", mu);
        LinearMap lhs = region_epsilon({+1}, n, 0, mu) * region_epsilon({+1}, n, 1, lam);
        GroupAlgebraElement x = central_idempotent(mu) * central_idempotent(lam).embedded(n + 1);
        record(r, p, lhs, pl_sum(x, n));
        record_flag(r, p + " vanishing", lhs.is_zero() == !contains(lam, mu), lhs);
      }
}

void circle_values(LemmaReport& r, int bound) {
  for (int n = 0; n + 1 <= bound; ++n)
    for (const auto& lam : partitions_of(n)) {
      std::string p = "n=" + std::to_string(n) + " " + lam_param("lambda", lam);
      int m = n + 1;
      LinearMap cw = cap_map({+1, -1}, m, 1) * region_epsilon({+1, -1}, m, 1, lam) * cup_map({}, m, 1, +1);
      ChainSpace s = chain_for_word({}, m);
      LinearMap rhs = LinearMap::zero(s, s);
      for (int i : addable(lam)) {
        Partition li = *add_box(lam, i);
        rhs = rhs + (Rational(n + 1) * dimq(lam) / dimq(li)) * region_epsilon({}, m, 0, li);
      }
      record(r, p + " clockwise", cw, rhs);
      if (n == 0) continue;
      int b = n - 1;
      LinearMap ccw = cap_map({-1, +1}, b, 1) * region_epsilon({-1, +1}, b, 1, lam) * cup_map({}, b, 1, -1);
      ChainSpace t = chain_for_word({}, b);
      LinearMap rhs2 = LinearMap::zero(t, t);
      for (int i : removable(lam)) {
        Partition li = *remove_box(lam, i);
        rhs2 = rhs2 + (dimq(lam) / (Rational(n) * dimq(li))) * region_epsilon({}, b, 0, li);
      }
      record(r, p + " counterclockwise", ccw, rhs2);
    }
}

void right_curl_removal(LemmaReport& r, int bound) {
  for (int n = 0; n + 1 <= bound; ++n)
    for (const auto& lam : partitions_of(n))
      for (int i : addable(lam)) {
        std::string p = lam_param("lambda", lam) + " i=" + std::to_string(i);
        LinearMap s = region_epsilon({+1}, n, 0, *add_box(lam, i)) * region_epsilon({+1}, n, 1, lam);
        record(r, p, s * eval_FH(right_curl(n)) * s, Rational(i) * s);
      }
}

void crossing_removal(LemmaReport& r, int bound) {
  for (int n = 0; n + 2 <= bound; ++n)
    for (const auto& lam : partitions_of(n))
      for (int i : addable(lam)) {
        Partition li = *add_box(lam, i);
        for (int j : addable(li)) {
          std::string p = lam_param("lambda", lam) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
          std::vector<int> w{+1, +1};
          LinearMap s = region_epsilon(w, n, 0, *add_box(li, j)) * region_epsilon(w, n, 1, li) * region_epsilon(w, n, 2, lam);
          record(r, p, s * cross_map(w, n, 1) * s, (Rational(1) / Rational(j - i)) * s);
        }
      }
}

void clockwise_circle_n(LemmaReport& r, int bound) {
  for (int n = 0; n <= bound; ++n) {
    LinearMap id = LinearMap::identity(chain_for_word({}, n));
    record(r, "n=" + std::to_string(n), eval_FH(clockwise_circle(n)), Rational(n) * id);
  }
}

void zigzag(LemmaReport& r, int bound) {
  for (int n = 0; n <= bound; ++n) {
    std::string p = "n=" + std::to_string(n);
    LinearMap up = LinearMap::identity(chain_for_word({+1}, n));
    record(r, p + " up left", map_of({{+1}, n, {HSlice::cup(2, -1), HSlice::cap(1)}}), up);
    record(r, p + " up right", map_of({{+1}, n, {HSlice::cup(1, +1), HSlice::cap(2)}}), up);
    LinearMap dn = LinearMap::identity(chain_for_word({-1}, n + 1));
    record(r, p + " down left", map_of({{-1}, n + 1, {HSlice::cup(1, -1), HSlice::cap(2)}}), dn);
    record(r, p + " down right", map_of({{-1}, n + 1, {HSlice::cup(2, +1), HSlice::cap(1)}}), dn);
  }
}

void diamond(LemmaReport& r, int bound) {
  for (int n = 1; n <= bound; ++n) {
    std::string p = "n=" + std::to_string(n);
    std::vector<int> pm{+1, -1}, mp{-1, +1};
    LinearMap id_pm = LinearMap::identity(chain_for_word(pm, n));
    record(r, p + " up-down double cross", map_of({pm, n, {HSlice::cross(1), HSlice::cross(1)}}), id_pm);
    LinearMap cc = map_of({pm, n, {HSlice::cross(1), HSlice::cap(1)}});
    record(r, p + " cross then cap", cc, LinearMap::zero(cc.domain, cc.codomain));
    LinearMap uc = map_of({{}, n, {HSlice::cup(1, -1), HSlice::cross(1)}});
    record(r, p + " cup then cross", uc, LinearMap::zero(uc.domain, uc.codomain));
    record(r, p + " counterclockwise circle", map_of({{}, n, {HSlice::cup(1, -1), HSlice::cap(1)}}),
           LinearMap::identity(chain_for_word({}, n)));
    LinearMap sum = map_of({mp, n, {HSlice::cross(1), HSlice::cross(1)}}) + map_of({mp, n, {HSlice::cap(1), HSlice::cup(1, -1)}});
    record(r, p + " down-up sum", sum, LinearMap::identity(chain_for_word(mp, n)));
  }
}

}  // namespace

LemmaReport verify_lemma(const std::string& name, int n_bound) {
  static const std::map<std::string, void (*)(LemmaReport&, int)> table{
      {"orthoid", orthoid},
      {"concSlide", conc_slide},
      {"dashed-sum", dashed_sum},
      {"plSlide", pl_slide},
      {"sandwich", sandwich},
      {"circle-values", circle_values},
      {"right-curl", right_curl_removal},
      {"crossing-removal", crossing_removal},
      {"clockwise-circle-n", clockwise_circle_n},
      {"zigzag", zigzag},
      {"diamond", diamond},
  };
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::UnknownLemma, name);
  require_bound(n_bound >= 0 && n_bound <= oracle_bounds().group_algebra, "verify_lemma: n exceeds oracle bound");
  LemmaReport r{name, n_bound, {}};
  it->second(r, n_bound);
  return r;
}

}  // namespace cathei
