#include "kzspin/models.hpp"

#include <cmath>
#include <stdexcept>

namespace kzspin {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::TransverseIsing: return "ising";
    case ModelKind::XY: return "xy";
    case ModelKind::XX: return "xx";
    case ModelKind::XXX: return "xxx";
    case ModelKind::XXZ: return "xxz";
    case ModelKind::LMGRegularized: return "lmg";
  }
  throw std::logic_error("unknown ModelKind");
}

SpinModel SpinModel::transverse_ising(double lambda) {
  SpinModel m;
  m.kind = ModelKind::TransverseIsing;
  m.gamma = 1.0;
  m.field = lambda;
  return m;
}

SpinModel SpinModel::xy(double gamma, double lambda) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("XY anisotropy must lie in [0, 1]");
  SpinModel m;
  m.kind = gamma == 1.0 ? ModelKind::TransverseIsing : ModelKind::XY;
  m.gamma = gamma;
  m.field = lambda;
  return m;
}

SpinModel SpinModel::xx(double lambda) {
  SpinModel m;
  m.kind = ModelKind::XX;
  m.field = lambda;
  return m;
}

SpinModel SpinModel::xxx(double lambda) {
  SpinModel m;
  m.kind = ModelKind::XXX;
  m.delta = 1.0;
  m.field = lambda;
  return m;
}

SpinModel SpinModel::xxz(double delta, double lambda) {
  if (delta < -1.0 || delta > 1.0)
    throw std::invalid_argument("XXZ anisotropy must lie in [-1, 1]");
  SpinModel m;
  m.kind = ModelKind::XXZ;
  m.delta = delta;
  m.field = lambda;
  return m;
}

SpinModel SpinModel::lmg_regularized(int sites, double lambda) {
  if (sites < 2) throw std::invalid_argument("LMG requires at least 2 spins");
  SpinModel m;
  m.kind = ModelKind::LMGRegularized;
  m.field = lambda;
  m.sites = sites;
  m.coupling = 1.0 / (2.0 * sites);
  return m;
}

std::map<std::string, std::string> to_key_values(const SpinModel& model) {
  std::map<std::string, std::string> kv;
  kv["model.kind"] = to_string(model.kind);
  kv["model.lambda"] = std::to_string(model.field);
  if (model.kind == ModelKind::XY) kv["model.gamma"] = std::to_string(model.gamma);
  if (model.kind == ModelKind::XXZ) kv["model.delta"] = std::to_string(model.delta);
  if (model.sites > 0) kv["model.sites"] = std::to_string(model.sites);
  return kv;
}

SpinModel spin_model_from_key_values(const std::map<std::string, std::string>& kv) {
  auto get = [&kv](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };
  const std::string kind = get("model.kind", "ising");
  const double lambda = std::stod(get("model.lambda", "0"));
  if (kind == "ising") return SpinModel::transverse_ising(lambda);
  if (kind == "xy") return SpinModel::xy(std::stod(get("model.gamma", "1")), lambda);
  if (kind == "xx") return SpinModel::xx(lambda);
  if (kind == "xxx") return SpinModel::xxx(lambda);
  if (kind == "xxz") return SpinModel::xxz(std::stod(get("model.delta", "1")), lambda);
  if (kind == "lmg") return SpinModel::lmg_regularized(std::stoi(get("model.sites", "2")), lambda);
  throw std::invalid_argument("unknown model.kind '" + kind + "'");
}

double QuenchSchedule::field_at(double t) const {
  if (t > 0.0) throw std::invalid_argument("quench schedule is defined for t <= 0");
  return -rate * t / tau_q;
}

QuenchSchedule quench_schedule(const SpinModel& model, double tau_q) {
  if (!(tau_q > 0.0)) throw std::invalid_argument("quench time must be positive");
  QuenchSchedule s;
  s.tau_q = tau_q;
  switch (model.kind) {
    case ModelKind::TransverseIsing:
      s.rate = 1.0;
      s.lambda_critical = 1.0;
      break;
    case ModelKind::XX:
    case ModelKind::XXX:
      s.rate = 2.0;
      s.lambda_critical = 2.0;
      break;
    case ModelKind::LMGRegularized:
      // the XXX and Ising ramps superpose to -2t/tau + t/tau = -t/tau
      s.rate = 1.0;
      s.lambda_critical = 1.0;
      break;
    default:
      throw std::invalid_argument("no quench schedule defined for model '" +
                                  to_string(model.kind) + "'");
  }
  return s;
}

std::map<std::string, std::string> to_key_values(const QuenchSchedule& schedule) {
  return {{"quench.tau_q", std::to_string(schedule.tau_q)},
          {"quench.rate", std::to_string(schedule.rate)},
          {"quench.lambda_critical", std::to_string(schedule.lambda_critical)}};
}

double Dispersion::operator()(double k) const {
  switch (model) {
    case ModelKind::XXX: return 4.0 * (1.0 - std::cos(k));
    default: return 2.0 * (1.0 - std::cos(k));
  }
}

Dispersion dispersion(const SpinModel& model) {
  Dispersion d;
  switch (model.kind) {
    case ModelKind::XY:
      if (model.gamma != 1.0)
        throw std::invalid_argument("dispersion only defined at the Ising point gamma = 1");
      [[fallthrough]];
    case ModelKind::TransverseIsing:
      d.model = ModelKind::TransverseIsing;
      d.curvature = 1.0;
      d.amplitude = 1.0;
      break;
    case ModelKind::XX:
      d.model = ModelKind::XX;
      d.curvature = 1.0;
      d.amplitude = 0.5;
      break;
    case ModelKind::XXX:
      d.model = ModelKind::XXX;
      d.curvature = 2.0;
      d.amplitude = 0.5;
      break;
    default:
      throw std::invalid_argument("no critical dispersion for model '" +
                                  to_string(model.kind) + "'");
  }
  return d;
}

double berry_phase_factor(double theta) {
  if (!(theta >= 0.0 && theta <= M_PI))
    throw std::invalid_argument("spin tilt angle must lie in [0, pi]");
  return 0.5 * (1.0 - std::cos(theta));
}

} // namespace kzspin
