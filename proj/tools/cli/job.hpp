#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "locoh/locoh.hpp"

namespace locoh::cli {

/// Input that does not match the job schema; `where` is a JSON path like "module.relations[0]".
class SchemaError : public Error {
 public:
  SchemaError(const std::string& where, const std::string& what);
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

struct RingSpec {
  std::uint32_t characteristic = 32003;
  std::vector<std::string> vars;
  std::vector<int> weights;  // empty = all 1
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct ModuleSpec {
  std::vector<int> target_twists{0};
  std::vector<std::vector<std::string>> relations;  // one row per generator
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct ComplexSpec {
  std::map<int, std::vector<int>> terms;
  std::map<int, std::vector<std::vector<std::string>>> differentials;  // rows = target rank
  friend bool operator==(const ComplexSpec&, const ComplexSpec&) = default;
};

struct JobSpec {
  RingSpec ring;
  std::optional<ModuleSpec> module;
  std::optional<ComplexSpec> complex;
  std::vector<std::string> ideal;
  std::vector<std::string> ideal_b;
  std::string command = "hilbert";
  std::string check;  // for "verify"
  IndexRange i_range{0, 2};
  DegreeWindow window{-6, 6};
  unsigned k_max = 8;
  unsigned stab = 2;
  unsigned K_max = 6;
  unsigned power = 1;
  std::string convention = "inverse";
  int twist = 0;
  std::string report = "json";
  unsigned threads = 0;

  friend bool operator==(const JobSpec& a, const JobSpec& b);
};

inline const std::vector<std::string> kCommands = {"hilbert", "koszul", "lc", "lh", "hom-cech", "ext", "verify"};
inline const std::vector<std::string> kChecks = {"selfdual", "gm", "duality", "dualizing", "generators", "corpus"};

/// Validates the schema and every polynomial (parse + homogeneity).
JobSpec parse_job(const nlohmann::json& doc);
JobSpec load_job(const std::string& path);
/// Canonical JSON: every field present, keys sorted.
nlohmann::json job_to_json(const JobSpec& job);
/// Field overrides, ranges, commands; throws SchemaError.
void validate_job(const JobSpec& job);

/// "a:b" -> {a, b}; throws SchemaError.
std::pair<int, int> parse_range(const std::string& text, const std::string& where);
std::vector<std::string> split_list(const std::string& text);

// Materialization of the specs over the job's ring.
GradedRing build_ring(const JobSpec& job);
PresentedModule build_module(const GradedRing& ring, const JobSpec& job);
std::optional<FreeComplex> build_complex(const GradedRing& ring, const JobSpec& job);
std::vector<Poly> build_ideal(const GradedRing& ring, const std::vector<std::string>& texts, const std::string& where);

}  // namespace locoh::cli
