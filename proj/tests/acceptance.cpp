#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "cathei/error.hpp"
#include "cathei/functor_bridge.hpp"
#include "cathei/identities.hpp"
#include "cathei/perturbation.hpp"
#include "cathei/relations.hpp"

using namespace cathei;

namespace {

// Every comparison is exact; the only tolerance is the runtime budget.
struct Outcome {
  bool ok = false;
  std::string detail;
};

int failed = 0;

void criterion(int id, const std::string& what, double budget_s, const std::function<Outcome()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = run();
  } catch (const std::exception& e) {
    r = {false, std::string("threw ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = s <= budget_s;
  bool ok = r.ok && in_time;
  if (!ok) ++failed;
  std::printf("[%s] %2d %s: %s (%.2f s, budget %.0f s%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), r.detail.c_str(), s,
              budget_s, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

Outcome summarize(const std::vector<IdentityReport>& rs, const std::set<std::string>& names) {
  long checked = 0, bad = 0;
  std::string failing;
  for (const auto& r : rs)
    if (names.count(r.identity)) {
      checked += r.checked;
      bad += static_cast<long>(r.failures.size());
      if (!r.pass()) failing += " " + r.identity;
    }
  return {bad == 0 && checked > 0,
          std::to_string(checked) + " instances, " + std::to_string(bad) + " failures" + (failing.empty() ? "" : ":" + failing)};
}

Outcome lemmas(const std::vector<std::string>& names, int n) {
  long inst = 0, bad = 0;
  std::string failing;
  for (const auto& name : names) {
    LemmaReport r = verify_lemma(name, n);
    inst += static_cast<long>(r.instances.size());
    for (const auto& x : r.instances) bad += !x.pass;
    if (!r.pass() || r.instances.empty()) failing += " " + name;
  }
  return {failing.empty(), std::to_string(names.size()) + " lemmas, " + std::to_string(inst) + " instances, " +
                               std::to_string(bad) + " failures" + (failing.empty() ? "" : ":" + failing)};
}

Outcome relations(const RelationReport& r) {
  std::string first = r.failures.empty() ? "" : ", first: " + r.failures.front();
  return {r.pass() && r.checked > 0,
          std::to_string(r.checked) + " relation instances, " + std::to_string(r.failures.size()) + " failures" + first};
}

Outcome eigenspaces() {
  int checked = 0, bad = 0;
  for (int n = 0; n <= 5; ++n)
    for (int i = -n; i <= n; ++i) {
      Integer predicted = 0;
      for (const auto& l : partitions_of(n))
        if (auto up = add_box(l, i)) predicted += dim_hook(l) * dim_hook(*up);
      for (Side side : {Side::Right, Side::Left}) {
        ++checked;
        bool ok = false;
        try {
          ok = eigenspace_component(n + 1, n, i, side).dimension() == Rational(predicted);
          if (n + 1 <= 3) ok = ok && eigenspace_matches_sandwich(n + 1, i, side);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::CrosscheckFailed) throw;
        }
        bad += !ok;
      }
    }
  return {bad == 0, std::to_string(checked) + " (n, i, side) components, " + std::to_string(bad) + " failures"};
}

// Identity in normal form; on E_i F_i 1_λ ≅ 1_λ the representative is cup over cap.
bool is_identity(const Morphism2& m, const GenWord& w) {
  return !m.zero && m == Morphism2::identity(w) && m == normalize(LayeredDiagram{w, {}});
}

// Hom dimensions on random pairs with a common source; canonical matchings
// between words with the same normal form must be mutually inverse.
Outcome hom_pairs() {
  std::vector<GenWord> ws = valid_words(4, 4);
  std::map<std::pair<Partition, Partition>, std::vector<std::size_t>> by_ends;
  std::map<GenWord, std::vector<std::size_t>> by_normal_form;
  std::map<Partition, std::vector<std::size_t>> by_source;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    by_ends[{ws[k].source, *word_apply(ws[k])}].push_back(k);
    by_normal_form[*word_normal_form(ws[k])].push_back(k);
    by_source[ws[k].source].push_back(k);
  }
  std::mt19937 rng(20240917);
  auto pick = [&](const std::vector<std::size_t>& pool) { return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]; };
  int agree = 0, nonzero = 0, iso = 0, round_trips = 0, bad = 0;
  for (int t = 0; t < 500; ++t) {
    const GenWord& p = ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng)];
    int mode = std::uniform_int_distribution<int>(0, 4)(rng);
    const auto& pool = mode < 2 ? by_normal_form[*word_normal_form(p)] : mode < 4 ? by_ends[{p.source, *word_apply(p)}] : by_source[p.source];
    const GenWord& q = ws[pick(pool)];
    int h = hom_dim(p, q);
    bool ok = h == oracle_hom_dim(p, q);
    agree += ok;
    nonzero += h != 0;
    if (word_normal_form(p) == word_normal_form(q)) {
      ++iso;
      Morphism2 pq = Morphism2::canonical(p, q), qp = Morphism2::canonical(q, p);
      bool id = is_identity(compose_vertical(qp, pq), p) && is_identity(compose_vertical(pq, qp), q);
      round_trips += id;
      ok = ok && id;
    }
    bad += !ok;
  }
  return {bad == 0 && iso > 0, std::to_string(agree) + "/500 Hom dimensions agree (" + std::to_string(nonzero) + " nonzero), " +
                                   std::to_string(round_trips) + "/" + std::to_string(iso) + " same-normal-form pairs compose to identities"};
}

// Small bounds of every suite; a thrown error counts as a detected failure.
bool quick_suite_fails() {
  try {
    auto any_fail = [](const std::vector<IdentityReport>& rs) {
      for (const auto& r : rs)
        if (!r.pass()) return true;
      return false;
    };
    if (any_fail(check_dim_identities(8)) || any_fail(check_rational_identities(8)) || any_fail(check_algebra_identities(4)))
      return true;
    for (const auto& name : lemma_names())
      if (!verify_lemma(name, 2).pass()) return true;
    if (!check_T_functoriality(4).pass() || !check_FA_relations(2).pass() || !check_compatibility(2).pass()) return true;
  } catch (const Error&) {
    return true;
  }
  return false;
}

Outcome mutations() {
  if (quick_suite_fails()) return {false, "unperturbed quick suite already fails"};
  std::string missed;
  int caught = 0;
  for (Site s : all_sites()) {
    if (s == Site::None) continue;
    ScopedPerturbation p(s);
    if (quick_suite_fails())
      ++caught;
    else
      missed += " " + site_name(s);
  }
  int total = static_cast<int>(all_sites().size()) - (std::find(all_sites().begin(), all_sites().end(), Site::None) != all_sites().end());
  return {missed.empty(), std::to_string(caught) + "/" + std::to_string(total) + " perturbations detected" +
                              (missed.empty() ? "" : ", missed:" + missed)};
}

}  // namespace

int main() {
  criterion(1, "hook length = tableaux count, |λ| <= 10", 10, [] { return summarize(check_dim_identities(10), {"hldef"}); });
  criterion(2, "hl and hl3, |λ| <= 12", 5, [] { return summarize(check_dim_identities(12), {"hl", "hl3"}); });
  criterion(3, "hl1, hl5, hl8 for |λ| <= 10; app1, app2 for |λ| <= 12", 30, [] {
    Outcome a = summarize(check_rational_identities(10), {"hl1", "hl5", "hl8"});
    Outcome b = summarize(check_rational_identities(12), {"app1", "app2"});
    return Outcome{a.ok && b.ok, a.detail + "; " + b.detail};
  });
  criterion(4, "group algebra suite, n <= 6 (idempotent products n <= 5)", 300, [] {
    return summarize(check_algebra_identities(6), {"idempotent", "central", "orthogonal", "complete", "trace-of-epsilon",
                                                   "jm-idempotent-product", "idempotent-symmetrize"});
  });
  criterion(5, "eigenspace dimension law, n <= 5, both sides", 300, [] {
    oracle_bounds().tensor = std::max(oracle_bounds().tensor, 6);
    return eigenspaces();
  });
  criterion(6, "zigzag and diamond, n <= 5", 600, [] { return lemmas({"zigzag", "diamond"}, 5); });
  criterion(7, "lemma suite, n <= 3", 600, [] { return lemmas(lemma_names(), 3); });
  criterion(8, "T preserves the local relations, n <= 8", 60, [] { return relations(check_T_functoriality(8)); });
  criterion(9, "local relations of the string calculus under F_A, |λ| <= 3", 600, [] {
    Outcome r = relations(check_FA_relations(3));
    std::set<std::string> names;
    for (const auto& l : partitions_up_to(3))
      for (const auto& rel : a_relations(l)) names.insert(rel.name);
    r.ok = r.ok && names.size() == 8;
    r.detail += ", " + std::to_string(names.size()) + " relation families";
    return r;
  });
  criterion(10, "normal form vs explicit-module Hom, 500 pairs", 300, hom_pairs);
  criterion(11, "mutation self-test", 600, mutations);
  std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
