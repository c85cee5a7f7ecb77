#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oqbm/fields.hpp"

namespace oqbm::app {

// 17 significant digits, '.' decimal point, no locale.
std::string format_double(double v);

// Columns t,x,P,Q,C_R,C_I,rho11,rho22.
void write_snapshot_csv(std::ostream& os, const BlochField& f);
void write_snapshot_csv(const std::filesystem::path& path, const BlochField& f);

// Long format t,x,<name> for one panel over several snapshots.
void write_panel_csv(const std::filesystem::path& path, const std::string& value_name,
                     const std::vector<double>& x, const std::vector<std::pair<double, std::vector<double>>>& series);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

std::string snapshot_filename(const std::string& stem, double t);

}  // namespace oqbm::app
