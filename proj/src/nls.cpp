#include "fraclap/nls.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "fraclap/errors.hpp"

namespace fraclap::nls {

namespace {

// y + c * k
ComplexVector axpy(std::span<const Complex> y, double c, const ComplexVector& k) {
  ComplexVector out(y.begin(), y.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * k[i];
  return out;
}

void check_finite(std::span<const Complex> psi, double t) {
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (!std::isfinite(psi[i].real()) || !std::isfinite(psi[i].imag())) throw BlowUpError(i, t);
  }
}

}  // namespace

ComplexVector rk4_step(std::span<const Complex> psi, double t, double dt, const RightHandSide& rhs) {
  const ComplexVector k1 = rhs(t, psi);
  const ComplexVector k2 = rhs(t + 0.5 * dt, axpy(psi, 0.5 * dt, k1));
  const ComplexVector k3 = rhs(t + 0.5 * dt, axpy(psi, 0.5 * dt, k2));
  const ComplexVector k4 = rhs(t + dt, axpy(psi, dt, k3));
  ComplexVector out(psi.begin(), psi.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

double energy(std::span<const Complex> psi, const GridSpec& g) {
  if (static_cast<std::int64_t>(psi.size()) != g.N()) throw ShapeError("energy: psi length does not match grid");
  double sum = 0.0;
  for (std::int64_t j = 0; j < g.N(); ++j) {
    const double s = std::sin(pi_fraction(2 * j + 1, 2 * g.N()));
    sum += std::norm(psi[j]) / (s * s);
  }
  return g.L() * std::numbers::pi / static_cast<double>(g.N()) * sum;
}

Solver::Solver(const FracLapParams& params, double dt)
    : laplacian_(params), sampler_(params.grid()), dt_(dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw ParameterError("dt must be a finite number >= 0");
}

ComplexVector Solver::rhs(std::span<const Complex> psi) const {
  const MidpointSamples f = sampler_.f_from_samples(psi);
  ComplexVector lap = laplacian_.apply(f.values());
  const Complex minus_i{0.0, -1.0};
  for (std::size_t j = 0; j < lap.size(); ++j) {
    lap[j] = minus_i * (0.5 * lap[j] - std::norm(psi[j]) * psi[j]);
  }
  return lap;
}

EvolutionState Solver::step(const EvolutionState& state) const {
  auto f = [this](double, std::span<const Complex> psi) { return rhs(psi); };
  return {rk4_step(state.psi, state.t, dt_, f), state.t + dt_};
}

double Solver::energy(std::span<const Complex> psi) const { return nls::energy(psi, params().grid()); }

std::int64_t step_count(double dt, double t_end) {
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ParameterError("t_end must be a finite number >= 0");
  if (t_end == 0.0) return 0;
  if (!(dt > 0.0)) throw ParameterError("dt must be > 0");
  const double ratio = t_end / dt;
  const double steps = std::round(ratio);
  if (std::abs(ratio - steps) > 1e-9 * std::max(1.0, ratio)) {
    throw ParameterError("t_end must be a whole multiple of dt");
  }
  return static_cast<std::int64_t>(steps);
}

SimulationResult simulate(ComplexVector psi0, const FracLapParams& params, double dt, double t_end,
                          std::int64_t snapshot_every, const SnapshotSink& sink) {
  if (snapshot_every < 1) throw ParameterError("snapshot_every must be >= 1");
  if (static_cast<std::int64_t>(psi0.size()) != params.grid().N()) {
    throw ShapeError("initial data has " + std::to_string(psi0.size()) + " samples, grid has N = " +
                     std::to_string(params.grid().N()));
  }
  const std::int64_t steps = step_count(dt, t_end);
  check_finite(psi0, 0.0);

  const Solver solver(params, dt > 0.0 ? dt : 0.0);
  SimulationResult result;
  result.energy.reserve(static_cast<std::size_t>(steps + 1));
  EvolutionState state{std::move(psi0), 0.0};

  auto emit = [&](std::int64_t k) {
    const double mass = solver.energy(state.psi);
    result.energy.push_back({state.t, mass});
    if (sink && (k % snapshot_every == 0 || k == steps)) sink({state.t, state.psi, mass});
  };

  emit(0);
  for (std::int64_t k = 1; k <= steps; ++k) {
    state.psi = rk4_step(state.psi, state.t, dt, [&](double, std::span<const Complex> psi) {
      return solver.rhs(psi);
    });
    state.t = static_cast<double>(k) * dt;
    check_finite(state.psi, state.t);
    emit(k);
  }
  result.final_state = std::move(state);
  return result;
}

}  // namespace fraclap::nls
