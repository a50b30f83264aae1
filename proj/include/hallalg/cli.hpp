#pragma once

// Command-line front end: catalog dumps, multiplication tables and identity
// suites, rendered as JSON, CSV or text.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hallalg/motivic.hpp"

namespace hallalg::cli {

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCap = 3;

const std::vector<std::string>& algebra_names();
const std::vector<std::string>& suite_names();

struct RunConfig {
  std::string quiver = "A2";
  int p = 2;
  std::vector<int> primes = Motivic::default_fit_primes();  // motivic fit primes
  int held_out = 7;
  int window = 4;
  std::int64_t cap = kDefaultCap;
  std::string algebra = "dhall";
  std::string suite = "all";
  std::string format = "text";
  std::string out;
  // corpus filter
  int min_shift = -1;
  int max_shift = 1;
  int max_summands = 0;     // 0: 2 for hall and dhall bases, 1 for et and motivic bases
  int max_dim = 4;
  int triple_summands = 1;  // objects entering three-object suites
  bool invert_convention = false;  // Hall numbers with submodule and quotient swapped
};

void validate(const RunConfig& cfg);

nlohmann::json cmd_catalog(const RunConfig& cfg);
// Full table over the basis of cfg.algebra. Cap overruns become entries of "errors".
nlohmann::json cmd_table(const RunConfig& cfg);
// Runs cfg.suite; "pass" is true iff every check passed.
nlohmann::json cmd_check(const RunConfig& cfg);

// Product of two basis labels of cfg.algebra, as serialized in a table row.
nlohmann::json product_terms(const RunConfig& cfg, const std::string& x, const std::string& y);

std::string render(const nlohmann::json& report, const std::string& format);
int exit_code(const nlohmann::json& report);

// Parses argv and the HALLALG_* environment, runs one command and returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hallalg::cli
