#include "weno/stencil.hpp"

namespace weno {

void SchemeConfig::validate() const {
  if (epsilon.kind == EpsilonPolicy::Kind::Fixed && !(epsilon.value > 0.0))
    throw std::invalid_argument("fixed epsilon must be positive");
  if (epsilon.kind == EpsilonPolicy::Kind::Scaled && !(epsilon.value > 0.0))
    throw std::invalid_argument("scaled epsilon exponent must be positive");
  if (!(p >= 1.0)) throw std::invalid_argument("weight exponent p must be >= 1");
}

double reconstruct_interface(const double f[5], const SchemeConfig& cfg, double dx) {
  for (int m = 0; m < 5; ++m)
    if (!std::isfinite(f[m]))
      throw std::domain_error("non-finite value in reconstruction window");
  return ReconKernel(cfg, dx).reconstruct(f);
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Loc: return "loc";
    case Variant::Js5: return "js5";
    default: return "ud5";
  }
}

}  // namespace weno
