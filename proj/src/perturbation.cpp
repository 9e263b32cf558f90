#include "cathei/perturbation.hpp"

#include <atomic>

namespace cathei {

namespace {
std::atomic<Site> g_site{Site::None};
}

const std::vector<Site>& all_sites() {
  static const std::vector<Site> sites = {
      Site::HookLength,      Site::XiNumerator,     Site::RightCapCoeff,
      Site::RightCupCoeff,   Site::CrossingRemoval, Site::RightCrossCoeff,
      Site::EtaLSum,         Site::TauSign,         Site::CentralIdempotent,
      Site::CharacterSign,
  };
  return sites;
}

std::string site_name(Site s) {
  switch (s) {
    case Site::None: return "none";
    case Site::HookLength: return "hook-length";
    case Site::XiNumerator: return "xi-numerator";
    case Site::RightCapCoeff: return "right-cap-coefficient";
    case Site::RightCupCoeff: return "right-cup-coefficient";
    case Site::CrossingRemoval: return "crossing-removal-term";
    case Site::RightCrossCoeff: return "right-cross-coefficient";
    case Site::EtaLSum: return "eta-L-sum";
    case Site::TauSign: return "tau-sign";
    case Site::CentralIdempotent: return "central-idempotent-scale";
    case Site::CharacterSign: return "character-sign";
  }
  return "unknown";
}

Site active_site() { return g_site.load(std::memory_order_relaxed); }

ScopedPerturbation::ScopedPerturbation(Site s) : previous_(g_site.exchange(s)) {}

ScopedPerturbation::~ScopedPerturbation() { g_site.store(previous_); }

}  // namespace cathei
