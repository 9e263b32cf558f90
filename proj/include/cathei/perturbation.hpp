#pragma once

#include <string>
#include <vector>

namespace cathei {

/// Coefficient sites that the mutation self-test can corrupt. With
/// Site::None every formula is evaluated as stated.
enum class Site {
  None,
  HookLength,          // dim_hook returns d+1 for |λ| >= 2
  XiNumerator,         // ξ_{i,j} = (i-j+1)/(i-j-1)
  RightCapCoeff,       // T and S right-cap coefficients scaled by 2
  RightCupCoeff,       // T and S right-cup coefficients scaled by 2
  CrossingRemoval,     // identity term 1/(i-j) replaced by 1/(i-j+1)
  RightCrossCoeff,     // T/S right-cross dimension ratio inverted
  EtaLSum,             // η_L omits the i = n+1 term
  TauSign,             // τ returns -(a⊗b)
  CentralIdempotent,   // e_λ scaled by d_λ/n! twice
  CharacterSign,       // character at odd classes negated
};

const std::vector<Site>& all_sites();
std::string site_name(Site s);

Site active_site();

class ScopedPerturbation {
 public:
  explicit ScopedPerturbation(Site s);
  ~ScopedPerturbation();
  ScopedPerturbation(const ScopedPerturbation&) = delete;
  ScopedPerturbation& operator=(const ScopedPerturbation&) = delete;

 private:
  Site previous_;
};

inline bool perturbed(Site s) { return active_site() == s; }

}  // namespace cathei
