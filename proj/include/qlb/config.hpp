#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlb/models.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

enum class ExperimentKind {
  Thermalize,
  RelaxMoments,
  DecohereMomentum,
  DecoherePosition,
  Visibility,
  Refraction,
  StructureFactor,
  BrownianCheck,
};

const char* to_string(ExperimentKind k);
std::optional<ExperimentKind> experiment_from_string(const std::string& s);

enum class UnitSystem { Internal, SI };

// Validated experiment description.  In internal units the gas sets the
// scales (m = 1, v_beta = 1, hbar = 1); in SI everything is in SI units and
// the gas temperature is given in kelvin.
struct ExperimentConfig {
  int schema = 1;
  ExperimentKind kind = ExperimentKind::Thermalize;
  UnitSystem units = UnitSystem::Internal;
  std::uint64_t seed = 0;

  GasSpec gas;
  ParticleSpec particle;
  CrossSectionModel model = ConstantModel{1.0};
  double hbar = 1.0;

  int n_traj = 1000;
  double t_max = 10.0;       // in 1/Gamma_beta for trajectory experiments
  int n_samples = 60;
  Vec3 u0{1, 0, 0};          // initial P/(M v_beta) (thermalize/relax-moments)
  double u0_mag = 1.0;       // +-U0 separation (decohere-momentum)

  // decohere-position
  double s_max = 5.0;        // position separation sweep, units hbar/p_beta
  int n_s = 50;
  double hold_time = 1.0;    // in 1/Gamma_tot

  // visibility
  double beam_p0 = 1.0;
  double flight_time = 1.0;
  double c6 = 1.0;
  double p_max = 1.0;        // pressure sweep upper end
  int n_p = 20;

  // refraction
  double k_min = 0.1, k_max = 5.0;
  int n_k = 25;

  // structure-factor
  double sf_q = 1.0;
  double e_min = -5.0, e_max = 5.0;
  int n_e = 101;

  std::string out_name;      // base name for output files ("" = kind name)

  // The raw key/value pairs, echoed into the metadata sidecar.
  std::map<std::string, std::string> raw;
};

// Parse error carrying every violation found, not just the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Parse a `key = value` text ('#' comments, blank lines ignored).
// Throws ConfigError listing all problems.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace qlb
