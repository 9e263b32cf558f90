#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cathei/functor_bridge.hpp"

namespace cathei {

struct IdentityFailure {
  Partition lambda;
  std::optional<int> i, j;
  std::string lhs, rhs;
};

struct IdentityReport {
  std::string identity;
  int bound = 0;
  long checked = 0;
  long skipped = 0;
  std::vector<IdentityFailure> failures;

  bool pass() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// hldef (hook formula against tableaux count, |λ| up to the tableaux
/// bound), hl and hl3; one report each.
std::vector<IdentityReport> check_dim_identities(int max_n);
/// hl1, hl5, hl8, app1, app2.
std::vector<IdentityReport> check_rational_identities(int max_n);
/// Central idempotents of A_n for n ≤ max_n (idempotent, central, orthogonal,
/// complete), then trace-of-epsilon, jm-idempotent-product and
/// idempotent-symmetrize wherever A_{n+1} is within the group algebra bound.
/// Throws BoundExceeded when max_n is above it.
std::vector<IdentityReport> check_algebra_identities(int max_n);

struct HarnessReport {
  std::vector<IdentityReport> identities;
  std::vector<LemmaReport> lemmas;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// A bound of 0 or less leaves that family out.
HarnessReport run_all(int max_n_dims, int max_n_algebra, int max_n_functors);

}  // namespace cathei
