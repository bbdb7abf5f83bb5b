#pragma once

#include <cstdint>

#include "qpscan/types.hpp"

namespace qpscan {

/// Counter-based deterministic random stream. The i-th 64-bit word is
///   mix64(seed + i * 0x9E3779B97F4A7C15)
/// where mix64 is the SplitMix64 finalizer
///   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///   z ^= z >> 27; z *= 0x94D049BB133111EB;
///   z ^= z >> 31;
/// so identical seeds yield identical sequences on every platform.
/// Normal variates come from Box-Muller pairs over consecutive uniforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double normal();   // standard normal

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Parameters of the colored-noise Langevin oscillator
///   xi'' + c xi' + U(xi) = F,   U(xi) = a1 xi + a2 xi^2 + a3 xi^3,
///   F'  + F/tau = W/tau,        <W(t) W(t')> = D delta(t - t').
struct LangevinParams {
  double c = 0.0;                // damping, 1/s
  double a1 = 0.0;               // linear potential coefficient (omega^2)
  double a2 = 0.0;
  double a3 = 0.0;
  double noise_intensity = 0.0;  // D
  double tau = 1.0;              // force correlation time, s
  double dt = 0.01;              // integration step, s
  long n_samples = 0;
  std::uint64_t seed = 0;
  int output_stride = 1;         // integration steps per emitted sample
  long burnin_steps = -1;        // negative -> default ceil(10 tau / dt)

  void validate() const;
  long resolved_burnin() const;
};

/// Random-phase realization of a mixed spectrum:
///   xi(t) = sqrt(p) w(t) + sum_a sqrt(2 m_a) cos(theta_a t + phi_a)
/// with w iid standard normal and phi_a iid uniform on [0, 2 pi), all from
/// the seeded stream (phases first, then one normal per sample).
/// The process correlation is exactly the analytic correlation of `spec`.
/// Requires a normalized spectrum (p + sum m_a = 1).
TimeSeries simulate_cosine_noise(const SyntheticSpectrum& spec, long n,
                                 std::uint64_t seed, double dt = 1.0);

/// Euler-Maruyama integration of the Langevin system from state (0, 0, 0),
/// emitting xi every output_stride steps after burn-in. Deterministic per
/// seed. The emitted sampling interval is dt * output_stride.
TimeSeries simulate_langevin(const LangevinParams& params);

/// DR = exp(-2 pi c / sqrt(4 a1 - c^2)), the ratio of consecutive maxima of
/// the damped linear oscillator with omega^2 = a1. Requires 0 <= c < 2 sqrt(a1).
double decay_ratio(double c, double a1);

/// Inverse of decay_ratio in c: c = 2 sqrt(a1) L / sqrt(4 pi^2 + L^2),
/// L = -ln(dr). Requires 0 < dr <= 1.
double damping_for_dr(double dr, double a1);

/// Exact (1/N^2)||Q_N||_2^2 for a normalized mixed spectrum, evaluated in
/// O(N s) directly from the analytic correlation.
double analytic_hs_ratio(const SyntheticSpectrum& spec, int n);

}  // namespace qpscan
