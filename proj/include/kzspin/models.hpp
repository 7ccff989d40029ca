#pragma once

#include <map>
#include <string>

namespace kzspin {

enum class ModelKind { TransverseIsing, XY, XX, XXX, XXZ, LMGRegularized };

std::string to_string(ModelKind kind);

/// One-dimensional spin-1/2 model with its Hamiltonian parameters.
///
/// Conventions: lattice constant a = 1, all couplings and fields
/// dimensionless, momenta in [-pi, pi]. `sites` is only meaningful for
/// finite constructions (exact diagonalization, LMG operators); 0 means
/// thermodynamic limit.
struct SpinModel {
  ModelKind kind = ModelKind::TransverseIsing;
  double gamma = 1.0;    ///< XY anisotropy, gamma in [0,1]; gamma = 1 is the transverse Ising point
  double delta = 1.0;    ///< XXZ anisotropy, delta in [-1,1]
  double field = 0.0;    ///< magnetic field lambda
  int sites = 0;         ///< chain length for finite constructions, 0 = thermodynamic limit
  double coupling = 0.0; ///< LMG only, fixed to 1/(2*sites)

  static SpinModel transverse_ising(double lambda = 0.0);
  static SpinModel xy(double gamma, double lambda = 0.0);
  static SpinModel xx(double lambda = 0.0);
  static SpinModel xxx(double lambda = 0.0);
  static SpinModel xxz(double delta, double lambda = 0.0);
  static SpinModel lmg_regularized(int sites, double lambda = 0.0);
};

/// Flat key-value form used by the CLI config round-trip.
std::map<std::string, std::string> to_key_values(const SpinModel& model);
SpinModel spin_model_from_key_values(const std::map<std::string, std::string>& kv);

/// Linear ramp lambda(t) = -rate * t / tau_q for t <= 0, so lambda(-tau_q) = rate
/// and lambda(0) = 0. The (rate, lambda_critical) pair is bound per model.
struct QuenchSchedule {
  double tau_q = 1.0;
  double rate = 1.0;
  double lambda_critical = 1.0;

  double field_at(double t) const; // t <= 0
};

QuenchSchedule quench_schedule(const SpinModel& model, double tau_q);

std::map<std::string, std::string> to_key_values(const QuenchSchedule& schedule);

/// Critical-point quasiparticle dispersion. eps(k) vanishes at k = 0 and is
/// even in k; near k = 0, eps(k) ~ curvature * k^2. `amplitude` is the
/// model's multiplier on the excitation probability.
struct Dispersion {
  ModelKind model = ModelKind::TransverseIsing;
  double curvature = 1.0;
  double amplitude = 1.0;

  double operator()(double k) const;
};

/// Critical dispersions: Ising/XX -> 2(1-cos k), XXX -> 4(1-cos k).
/// Throws std::invalid_argument for kinds without a quench dispersion
/// (XY with gamma != 1, XXZ, LMG — the LMG case is handled compositionally).
Dispersion dispersion(const SpinModel& model);

/// Geometric phase fraction (1 - cos theta)/2 for a spin tilted at angle
/// theta. theta outside [0, pi] is rejected.
double berry_phase_factor(double theta);

} // namespace kzspin
