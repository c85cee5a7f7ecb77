#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "oqbm/error.hpp"
#include "oqbm_app/config.hpp"
#include "oqbm_app/figures.hpp"

namespace oqbm::app {

// Returns the written files, manifest last.
std::vector<std::filesystem::path> run_solve(const RunConfig& cfg, const std::filesystem::path& out_dir);

std::vector<std::filesystem::path> run_figure(const std::string& name, const std::filesystem::path& out_dir);

enum class Level { Fast, Full };
Level parse_level(const std::string& s);

struct CheckResult {
  std::string name;
  bool passed = false;
  double error = 0.0;
  double tolerance = 0.0;
  std::string note;
};

std::vector<CheckResult> validation_suite(Level level);
// Prints the table; true iff every check passed.
bool run_validate(Level level, std::ostream& os);

int exit_code(ErrorCode code) noexcept;

}  // namespace oqbm::app
