#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace ercd {

// One point of the momentum-space sampling together with the field mass.
// Massless samples are rejected: the spectral transforms divide by ω + m
// and the solution families are stated for m > 0.
struct MomentumSample {
  Eigen::Vector3d k;
  double m;

  MomentumSample(const Eigen::Vector3d& k_, double m_) : k(k_), m(m_) {
    if (!(m > 0.0)) throw std::invalid_argument("MomentumSample: mass must be positive");
  }
};

inline double omega(const MomentumSample& s) {
  return std::sqrt(s.k.squaredNorm() + s.m * s.m);
}

}  // namespace ercd
