#include "dkglab/io.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "dkglab/version.hpp"

namespace dkglab::io {

namespace fs = std::filesystem;

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

namespace {

const char* rep_name(Rep rep) { return rep == Rep::spectral ? "spectral" : "physical"; }

Rep rep_from_string(const std::string& s) {
  if (s == "spectral") return Rep::spectral;
  if (s == "physical") return Rep::physical;
  throw std::invalid_argument("unknown representation: " + s);
}

nlohmann::json rows_of(const ComplexScalarField& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < f.grid.N; ++i) {
    rows.push_back({f.grid.k_of_slot(i), f.grid.xi_slot(i), f.values[i].real(),
                    f.values[i].imag()});
  }
  return rows;
}

std::vector<cplx> values_of(const nlohmann::json& rows, const GridSpec& g) {
  if (rows.size() != static_cast<std::size_t>(g.N)) {
    throw std::invalid_argument("field rows: length mismatch with grid");
  }
  std::vector<cplx> values(g.N);
  for (int i = 0; i < g.N; ++i) {
    const auto& row = rows[i];
    int k = row.at(0).get<int>();
    if (k != g.k_of_slot(i)) throw std::invalid_argument("field rows: bad mode ordering");
    values[i] = cplx{row.at(2).get<double>(), row.at(3).get<double>()};
  }
  return values;
}

}  // namespace

std::string field_to_csv(const ComplexScalarField& f, const std::string& manifest_ref) {
  std::string out;
  if (!manifest_ref.empty()) out += "# manifest: " + manifest_ref + "\n";
  out += "k,xi,re,im\n";
  for (int i = 0; i < f.grid.N; ++i) {
    out += std::to_string(f.grid.k_of_slot(i)) + "," + format17(f.grid.xi_slot(i)) + "," +
           format17(f.values[i].real()) + "," + format17(f.values[i].imag()) + "\n";
  }
  return out;
}

nlohmann::json field_to_json(const ComplexScalarField& f) {
  return {{"schema", "dkgfld/1"},
          {"grid", {{"N", f.grid.N}, {"L", f.grid.L}}},
          {"rep", rep_name(f.rep)},
          {"columns", {"k", "xi", "re", "im"}},
          {"rows", rows_of(f)}};
}

ComplexScalarField field_from_json(const nlohmann::json& j) {
  GridSpec g = make_grid(j.at("grid").at("N").get<int>(), j.at("grid").at("L").get<double>());
  ComplexScalarField f{g, rep_from_string(j.at("rep").get<std::string>()), {}};
  f.values = values_of(j.at("rows"), g);
  return f;
}

std::string spinor_to_csv(const SpinorField& f, const std::string& manifest_ref) {
  std::string out;
  if (!manifest_ref.empty()) out += "# manifest: " + manifest_ref + "\n";
  out += "component,k,xi,re,im\n";
  for (const auto* part : {&f.up, &f.lo}) {
    const char* tag = part == &f.up ? "upper" : "lower";
    for (int i = 0; i < part->grid.N; ++i) {
      out += std::string(tag) + "," + std::to_string(part->grid.k_of_slot(i)) + "," +
             format17(part->grid.xi_slot(i)) + "," + format17(part->values[i].real()) + "," +
             format17(part->values[i].imag()) + "\n";
    }
  }
  return out;
}

nlohmann::json spinor_to_json(const SpinorField& f) {
  return {{"schema", "dkgspinor/1"},
          {"grid", {{"N", f.grid().N}, {"L", f.grid().L}}},
          {"rep", rep_name(f.rep())},
          {"columns", {"k", "xi", "re", "im"}},
          {"upper", rows_of(f.up)},
          {"lower", rows_of(f.lo)}};
}

SpinorField spinor_from_json(const nlohmann::json& j) {
  GridSpec g = make_grid(j.at("grid").at("N").get<int>(), j.at("grid").at("L").get<double>());
  Rep rep = rep_from_string(j.at("rep").get<std::string>());
  SpinorField f{ComplexScalarField{g, rep, {}}, ComplexScalarField{g, rep, {}}};
  f.up.values = values_of(j.at("upper"), g);
  f.lo.values = values_of(j.at("lower"), g);
  return f;
}

namespace {

constexpr char kMagic[8] = {'D', 'K', 'G', 'F', 'L', 'D', '0', '1'};

template <typename T>
void put_le(std::string& out, T v) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &v, sizeof(T));
  // the build targets little-endian hosts; the memcpy is the layout contract
  out.append(reinterpret_cast<char*>(bytes), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  T v;
  char bytes[sizeof(T)];
  in.read(bytes, sizeof(T));
  if (!in) throw std::runtime_error("binary field: truncated");
  std::memcpy(&v, bytes, sizeof(T));
  return v;
}

}  // namespace

void field_to_binary(const ComplexScalarField& f, const fs::path& path) {
  std::string out;
  out.append(kMagic, sizeof(kMagic));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(f.grid.N));
  put_le<double>(out, f.grid.L);
  put_le<std::uint8_t>(out, f.rep == Rep::spectral ? 0 : 1);
  for (const auto& c : f.values) {
    put_le<double>(out, c.real());
    put_le<double>(out, c.imag());
  }
  atomic_write(path, out);
}

ComplexScalarField field_from_binary(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0) {
    throw std::runtime_error("binary field: bad magic in " + path.string());
  }
  auto n = get_le<std::uint32_t>(in);
  auto L = get_le<double>(in);
  auto rep = get_le<std::uint8_t>(in);
  GridSpec g = make_grid(static_cast<int>(n), L);
  ComplexScalarField f{g, rep == 0 ? Rep::spectral : Rep::physical, {}};
  f.values.resize(g.N);
  for (int i = 0; i < g.N; ++i) {
    double re = get_le<double>(in);
    double im = get_le<double>(in);
    f.values[i] = cplx{re, im};
  }
  return f;
}

nlohmann::json state_to_json(const HalfWaveState& state) {
  return {{"schema", "dkgstate/1"},
          {"t", state.t},
          {"psi_plus", spinor_to_json(state.psi_plus)},
          {"psi_minus", spinor_to_json(state.psi_minus)},
          {"phi_plus", field_to_json(state.phi_plus)},
          {"phi_minus", field_to_json(state.phi_minus)}};
}

HalfWaveState state_from_json(const nlohmann::json& j) {
  HalfWaveState s;
  s.t = j.at("t").get<double>();
  s.psi_plus = spinor_from_json(j.at("psi_plus"));
  s.psi_minus = spinor_from_json(j.at("psi_minus"));
  s.phi_plus = field_from_json(j.at("phi_plus"));
  s.phi_minus = field_from_json(j.at("phi_minus"));
  return s;
}

std::string diagnostics_to_csv(const std::vector<Diagnostics>& rows,
                               const std::string& manifest_ref) {
  std::string out;
  if (!manifest_ref.empty()) out += "# manifest: " + manifest_ref + "\n";
  out += "t,charge,phi_energy,max_coeff\n";
  for (const auto& d : rows) {
    out += format17(d.t) + "," + format17(d.charge) + "," + format17(d.phi_energy) + "," +
           format17(d.max_coeff) + "\n";
  }
  return out;
}

nlohmann::json write_trajectory(const Trajectory& traj, const fs::path& dir, int stride,
                                const nlohmann::json& run_manifest, SnapshotFormat format) {
  if (stride < 1) throw std::invalid_argument("write_trajectory: stride must be >= 1");
  fs::create_directories(dir / "snapshots");

  nlohmann::json manifest = run_manifest;
  manifest["schema"] = "dkgtraj/1";
  manifest["grid"] = {{"N", traj.states.front().grid().N},
                      {"L", traj.states.front().grid().L}};
  manifest["config"] = {{"T", traj.config.T},
                        {"dt", traj.config.dt},
                        {"scheme", traj.config.scheme == Scheme::exponential_rk4
                                       ? "exponential-rk4"
                                       : "strang"},
                        {"dealias", traj.config.dealias}};
  manifest["params"] = {{"M", traj.params.M}, {"m", traj.params.m}, {"g", traj.params.g}};
  manifest["stride"] = stride;
  manifest["blew_up"] = traj.blew_up;
  manifest["last_valid_time"] = traj.last_valid_time;

  manifest["snapshot_format"] = format == SnapshotFormat::json ? "json" : "binary";
  nlohmann::json files = nlohmann::json::array();
  for (std::size_t i = 0; i < traj.states.size(); i += stride) {
    char name[48];
    if (format == SnapshotFormat::json) {
      std::snprintf(name, sizeof(name), "snapshots/%06zu.json", i);
      nlohmann::json snap = state_to_json(traj.states[i]);
      snap["manifest"] = "manifest.json";
      atomic_write(dir / name, snap.dump(0));
      files.push_back(name);
    } else {
      // one DKGFLD01 dump per block; the snapshot entry records t + files
      const HalfWaveState& s = traj.states[i];
      nlohmann::json entry;
      entry["t"] = s.t;
      const std::pair<const char*, const ComplexScalarField*> blocks[] = {
          {"psi_plus_up", &s.psi_plus.up}, {"psi_plus_lo", &s.psi_plus.lo},
          {"psi_minus_up", &s.psi_minus.up}, {"psi_minus_lo", &s.psi_minus.lo},
          {"phi_plus", &s.phi_plus},       {"phi_minus", &s.phi_minus}};
      for (const auto& [tag, field] : blocks) {
        std::snprintf(name, sizeof(name), "snapshots/%06zu_%s.bin", i, tag);
        field_to_binary(*field, dir / name);
        entry[tag] = name;
      }
      files.push_back(entry);
    }
  }
  manifest["snapshots"] = files;
  manifest["diagnostics"] = "diagnostics.csv";
  atomic_write(dir / "diagnostics.csv",
               diagnostics_to_csv(traj.diagnostics, "manifest.json"));
  atomic_write(dir / "manifest.json", manifest.dump(2));
  return manifest;
}

Trajectory load_trajectory(const fs::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw std::runtime_error("cannot open " + (dir / "manifest.json").string());
  nlohmann::json manifest = nlohmann::json::parse(in);

  Trajectory traj;
  traj.params.M = manifest.at("params").at("M").get<double>();
  traj.params.m = manifest.at("params").at("m").get<double>();
  traj.params.g = manifest.at("params").at("g").get<double>();
  int stride = manifest.at("stride").get<int>();
  traj.config.dt = manifest.at("config").at("dt").get<double>() * stride;
  traj.config.dealias = manifest.at("config").at("dealias").get<bool>();
  traj.config.scheme = manifest.at("config").at("scheme").get<std::string>() == "strang"
                           ? Scheme::strang
                           : Scheme::exponential_rk4;

  const bool binary = manifest.value("snapshot_format", "json") == "binary";
  for (const auto& entry : manifest.at("snapshots")) {
    if (!binary) {
      std::ifstream snap_in(dir / entry.get<std::string>());
      if (!snap_in) throw std::runtime_error("cannot open snapshot " + entry.get<std::string>());
      traj.states.push_back(state_from_json(nlohmann::json::parse(snap_in)));
    } else {
      HalfWaveState s;
      s.t = entry.at("t").get<double>();
      auto load = [&](const char* tag) {
        return field_from_binary(dir / entry.at(tag).get<std::string>());
      };
      s.psi_plus = SpinorField{load("psi_plus_up"), load("psi_plus_lo")};
      s.psi_minus = SpinorField{load("psi_minus_up"), load("psi_minus_lo")};
      s.phi_plus = load("phi_plus");
      s.phi_minus = load("phi_minus");
      traj.states.push_back(std::move(s));
    }
  }
  if (traj.states.empty()) throw std::runtime_error("trajectory has no snapshots");
  traj.config.T = traj.states.back().t;
  if (traj.config.T <= 0.0) traj.config.T = traj.config.dt;
  traj.last_valid_time = traj.states.back().t;
  traj.blew_up = manifest.value("blew_up", false);
  for (const auto& s : traj.states) traj.diagnostics.push_back(diagnostics_of(s, traj.params));
  return traj;
}

nlohmann::json run_manifest(const std::string& subcommand, const nlohmann::json& params,
                            std::uint64_t seed) {
  auto now = std::chrono::system_clock::now().time_since_epoch();
  double wall = std::chrono::duration<double>(now).count();
  return {{"schema", "dkgrun/1"},
          {"subcommand", subcommand},
          {"parameters", params},
          {"seed", seed},
          {"version", kVersion},
          {"wall_clock_unix", wall}};
}

}  // namespace dkglab::io
