#include "oqbm_app/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "oqbm/error.hpp"

namespace oqbm::app {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorCode::ConfigError, "cannot write " + path.string());
  return os;
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_snapshot_csv(std::ostream& os, const BlochField& f) {
  check_consistent(f);
  const std::string t = format_double(f.time);
  os << "t,x,P,Q,C_R,C_I,rho11,rho22\n";
  std::string line;
  for (std::size_t j = 0; j < f.grid.size(); ++j) {
    const double p = f.rho_plus[j], q = f.rho_minus[j];
    line = t;
    for (double v : {f.grid.node(j), p, q, f.c_r[j], f.c_i[j], 0.5 * (p + q), 0.5 * (p - q)}) {
      line += ',';
      line += format_double(v);
    }
    line += '\n';
    os << line;
  }
}

void write_snapshot_csv(const std::filesystem::path& path, const BlochField& f) {
  auto os = open_out(path);
  write_snapshot_csv(os, f);
}

void write_panel_csv(const std::filesystem::path& path, const std::string& value_name,
                     const std::vector<double>& x, const std::vector<std::pair<double, std::vector<double>>>& series) {
  auto os = open_out(path);
  os << "t,x," << value_name << '\n';
  for (const auto& [t, v] : series) {
    if (v.size() != x.size()) fail(ErrorCode::GridMismatch, "panel series length differs from x");
    const std::string ts = format_double(t);
    for (std::size_t j = 0; j < x.size(); ++j) os << ts << ',' << format_double(x[j]) << ',' << format_double(v[j]) << '\n';
  }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  auto os = open_out(path);
  os << j.dump(2) << '\n';
}

std::string snapshot_filename(const std::string& stem, double t) {
  return stem + "_t" + format_double(t) + ".csv";
}

}  // namespace oqbm::app
