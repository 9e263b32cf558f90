#include "cathei/identities.hpp"

#include "cathei/error.hpp"

namespace cathei {

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : failures) {
    nlohmann::json e{{"lambda", x.lambda.str()}, {"lhs", x.lhs}, {"rhs", x.rhs}};
    e["i"] = x.i ? nlohmann::json(*x.i) : nlohmann::json(nullptr);
    e["j"] = x.j ? nlohmann::json(*x.j) : nlohmann::json(nullptr);
    f.push_back(e);
  }
  return {{"identity", identity}, {"bound", bound}, {"checked", checked}, {"skipped", skipped}, {"pass", pass()}, {"failures", f}};
}

namespace {

// d of λ⊞i or λ⊟i, zero when the box is missing
Rational d_plus(const Partition& l, int i) {
  auto p = add_box(l, i);
  return p ? dimq(*p) : Rational(0);
}
Rational d_minus(const Partition& l, int i) {
  auto p = remove_box(l, i);
  return p ? dimq(*p) : Rational(0);
}

template <typename T>
std::string show(const T& x) {
  if constexpr (std::is_same_v<T, GroupAlgebraElement>)
    return x.dump();
  else
    return x.str();
}

template <typename T>
void compare(IdentityReport& r, const Partition& l, std::optional<int> i, std::optional<int> j, const T& lhs, const T& rhs) {
  ++r.checked;
  if (!(lhs == rhs)) r.failures.push_back({l, i, j, show(lhs), show(rhs)});
}

}  // namespace

std::vector<IdentityReport> check_dim_identities(int max_n) {
  IdentityReport hldef{"hldef", max_n, 0, 0, {}}, hl{"hl", max_n, 0, 0, {}}, hl3{"hl3", max_n, 0, 0, {}};
  for (const auto& l : partitions_up_to(max_n)) {
    if (l.size() <= oracle_bounds().syt)
      compare(hldef, l, std::nullopt, std::nullopt, Integer(dim_hook(l)), Integer(dim_syt_oracle(l)));
    else
      ++hldef.skipped;
    Rational d = dimq(l);
    if (l.size() > 0) {
      Rational sum = 0;
      for (int j : removable(l)) sum += d_minus(l, j);
      compare(hl, l, std::nullopt, std::nullopt, d, sum);
    } else {
      ++hl.skipped;
    }
    Rational up = 0;
    for (int i : addable(l)) up += d_plus(l, i);
    compare(hl3, l, std::nullopt, std::nullopt, up, Rational(l.size() + 1) * d);
  }
  return {hldef, hl, hl3};
}

std::vector<IdentityReport> check_rational_identities(int max_n) {
  IdentityReport hl1{"hl1", max_n, 0, 0, {}}, hl5{"hl5", max_n, 0, 0, {}}, hl8{"hl8", max_n, 0, 0, {}}, app1{"app1", max_n, 0, 0, {}}, app2{"app2", max_n, 0, 0, {}};
  for (const auto& l : partitions_up_to(max_n)) {
    Rational d = dimq(l), n(l.size());
    auto plus = addable(l), minus = removable(l);
    for (int i : plus)
      for (int j : plus) {
        if (i == j) continue;
        auto both = add_box(l, i) ? add_box(*add_box(l, i), j) : std::nullopt;
        if (i - j <= 1 && j - i <= 1) {
          ++hl1.skipped;
          continue;
        }
        if (!both) {
          ++hl1.skipped;
          continue;
        }
        Rational diff(i - j);
        Rational lhs = (Rational(1) - Rational(1) / (diff * diff)) * (n + 1) / (n + 2) * d * dimq(*both) /
                       (d_plus(l, i) * d_plus(l, j));
        compare(hl1, l, i, j, lhs, Rational(1));
      }
    for (int j : minus) {
      Rational lhs = 0;
      for (int i : plus) lhs += d_plus(l, i) / Rational((i - j) * (i - j));
      compare(hl5, l, std::nullopt, j, lhs, (n + 1) * d * d / (n * d_minus(l, j)));
    }
    for (int i : plus) {
      if (l.size() == 0) {
        ++hl8.skipped;
        ++app2.skipped;
        continue;
      }
      Rational lhs = 0, sum2 = 0;
      for (int j : minus) {
        lhs += d_minus(l, j) / Rational((i - j) * (i - j));
        sum2 += d_minus(l, j) / Rational(i - j);
      }
      compare(hl8, l, i, std::nullopt, lhs, (n + 1) * d * d / (d_plus(l, i) * n) - d / n);
      compare(app2, l, i, std::nullopt, sum2, Rational(i) * d / n);
    }
    for (int i : minus) {
      Rational lhs = 0;
      for (int j : plus) lhs += d_plus(l, j) / Rational(j - i);
      compare(app1, l, i, std::nullopt, lhs, Rational(0));
    }
  }
  return {hl1, hl5, hl8, app1, app2};
}

namespace {

// Σ_{w ∈ S_{n-1}} c_w w: the coefficients of x on S_{n-1} ⊂ S_n.
GroupAlgebraElement truncate(const GroupAlgebraElement& x) {
  int n = x.degree();
  std::vector<GroupAlgebraElement::Term> t;
  for (const auto& [p, c] : x.terms())
    if (p(n) == n) t.emplace_back(p.restricted(n - 1), c);
  return GroupAlgebraElement::from_terms(n - 1, std::move(t));
}

}  // namespace

std::vector<IdentityReport> check_algebra_identities(int max_n) {
  int bound = oracle_bounds().group_algebra;
  require_bound(max_n <= bound, "check_algebra_identities: max_n exceeds group algebra bound");
  IdentityReport idem{"idempotent", max_n, 0, 0, {}}, central{"central", max_n, 0, 0, {}}, orth{"orthogonal", max_n, 0, 0, {}},
      complete{"complete", max_n, 0, 0, {}}, trace{"trace-of-epsilon", max_n, 0, 0, {}}, jm{"jm-idempotent-product", max_n, 0, 0, {}},
      sym{"idempotent-symmetrize", max_n, 0, 0, {}};
  for (int n = 0; n <= max_n; ++n) {
    auto parts = partitions_of(n);
    GroupAlgebraElement total(n);
    for (const auto& l : parts) {
      GroupAlgebraElement e = central_idempotent(l);
      total += e;
      compare(idem, l, std::nullopt, std::nullopt, e * e, e);
      for (int k = 1; k < n; ++k) {
        GroupAlgebraElement s = GroupAlgebraElement::basis(Permutation::simple(n, k));
        compare(central, l, k, std::nullopt, s * e, e * s);
      }
      for (const auto& mu : parts)
        if (!(mu == l)) {
          ++orth.checked;
          GroupAlgebraElement p = e * central_idempotent(mu);
          if (!p.is_zero()) orth.failures.push_back({l, std::nullopt, std::nullopt, p.dump(), mu.str()});
        }
    }
    compare(complete, Partition(), n, std::nullopt, total, GroupAlgebraElement::identity(n));
    for (const auto& l : parts) {
      Rational d = dimq(l);
      if (n == 0) {
        ++trace.skipped;
      } else {
        GroupAlgebraElement rhs(n - 1);
        for (int i : removable(l)) rhs += central_idempotent(*remove_box(l, i)) * (d / (Rational(n) * d_minus(l, i)));
        compare(trace, l, std::nullopt, std::nullopt, truncate(central_idempotent(l)), rhs);
      }
      if (n + 1 > bound) {
        ++jm.skipped;
        ++sym.skipped;
        continue;
      }
      GroupAlgebraElement e_up = central_idempotent(l).embedded(n + 1);
      GroupAlgebraElement j = jucys_murphy(n + 1, n + 1);
      for (int i : addable(l)) {
        GroupAlgebraElement prod = central_idempotent(*add_box(l, i)) * e_up;
        compare(jm, l, i, std::nullopt, j * prod, prod * Rational(i));
      }
      GroupAlgebraElement avg(n + 1);
      for (const auto& w : all_permutations(n + 1))
        avg += GroupAlgebraElement::basis(w) * e_up * GroupAlgebraElement::basis(w.inverse());
      avg *= Rational(1) / Rational(factorial(n + 1));
      GroupAlgebraElement rhs(n + 1);
      for (int i : addable(l)) rhs += central_idempotent(*add_box(l, i)) * (d / d_plus(l, i));
      compare(sym, l, std::nullopt, std::nullopt, avg, rhs);
    }
  }
  return {idem, central, orth, complete, trace, jm, sym};
}

bool HarnessReport::pass() const {
  for (const auto& r : identities)
    if (!r.pass()) return false;
  for (const auto& r : lemmas)
    if (!r.pass()) return false;
  return true;
}

nlohmann::json HarnessReport::to_json() const {
  nlohmann::json ids = nlohmann::json::array(), lem = nlohmann::json::array();
  long checked = 0;
  for (const auto& r : identities) {
    ids.push_back(r.to_json());
    checked += r.checked;
  }
  for (const auto& r : lemmas) {
    lem.push_back(r.to_json());
    checked += static_cast<long>(r.instances.size());
  }
  return {{"pass", pass()}, {"checked", checked}, {"identities", ids}, {"lemmas", lem}};
}

HarnessReport run_all(int max_n_dims, int max_n_algebra, int max_n_functors) {
  HarnessReport out;
  auto append = [&](std::vector<IdentityReport> r) { out.identities.insert(out.identities.end(), r.begin(), r.end()); };
  if (max_n_dims > 0) {
    append(check_dim_identities(max_n_dims));
    append(check_rational_identities(max_n_dims));
  }
  if (max_n_algebra > 0) append(check_algebra_identities(max_n_algebra));
  if (max_n_functors > 0)
    for (const auto& name : lemma_names()) out.lemmas.push_back(verify_lemma(name, max_n_functors));
  return out;
}

}  // namespace cathei
