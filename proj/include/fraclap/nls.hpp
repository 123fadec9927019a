#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fraclap/fractional_laplacian.hpp"
#include "fraclap/spectral.hpp"
#include "fraclap/types.hpp"

namespace fraclap::nls {

/// psi(x_j, t) on the output nodes x_j = L cot(s_j).
struct EvolutionState {
  ComplexVector psi;
  double t = 0.0;
};

using RightHandSide = std::function<ComplexVector(double t, std::span<const Complex> psi)>;

/// One classical RK4 step of psi' = rhs(t, psi).
ComplexVector rk4_step(std::span<const Complex> psi, double t, double dt, const RightHandSide& rhs);

/// M = (L pi / N) sum_j |psi_j|^2 / sin^2(s_j), the midpoint rule for the
/// mass integral of |psi|^2 over the real line.
double energy(std::span<const Complex> psi, const GridSpec& g);

/// Focusing fractional cubic NLS i psi_t = 1/2 (-Delta)^(alpha/2) psi - |psi|^2 psi.
/// The operator kernels are precomputed once; f(psi) is rebuilt
/// pseudospectrally at every stage.
class Solver {
 public:
  Solver(const FracLapParams& params, double dt);

  const FracLapParams& params() const noexcept { return laplacian_.params(); }
  double dt() const noexcept { return dt_; }

  /// -i (1/2 (-Delta)^(alpha/2) psi - |psi|^2 psi)
  ComplexVector rhs(std::span<const Complex> psi) const;

  EvolutionState step(const EvolutionState& state) const;
  double energy(std::span<const Complex> psi) const;

 private:
  FractionalLaplacian laplacian_;
  SpectralSampler sampler_;
  double dt_;
};

struct Snapshot {
  double t;
  std::span<const Complex> psi;
  double mass;
};

/// Receives snapshots on the stepping thread.
using SnapshotSink = std::function<void(const Snapshot&)>;

struct EnergyRecord {
  double t;
  double mass;
};

struct SimulationResult {
  std::vector<EnergyRecord> energy;  ///< one record per step, t = 0 included
  EvolutionState final_state;
};

/// Advances psi0 to t_end in steps of dt (round(t_end / dt) steps, t_k = k dt).
/// Snapshots go to sink at t = 0, every snapshot_every steps, and at the final
/// step. Throws BlowUpError as soon as psi contains a non-finite sample.
SimulationResult simulate(ComplexVector psi0, const FracLapParams& params, double dt, double t_end,
                          std::int64_t snapshot_every, const SnapshotSink& sink = {});

/// Number of steps simulate() takes for (dt, t_end). Throws ParameterError
/// when t_end is not a whole multiple of dt.
std::int64_t step_count(double dt, double t_end);

}  // namespace fraclap::nls
