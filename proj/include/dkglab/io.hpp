#pragma once
#include <json.hpp>

#include <filesystem>
#include <string>

#include "dkglab/evolution.hpp"

namespace dkglab::io {

/// Full round-trip formatting for all numeric text output (17 significant
/// digits, %.17g).
std::string format17(double v);

/// Writes via a temp file + rename so readers never see partial output.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// --- scalar / spinor fields ------------------------------------------------
// Row schema (k, xi_k, Re, Im); spinors prepend a component tag
// in {upper, lower}. The binary dump starts with the 8-byte magic
// "DKGFLD01" and is little-endian throughout.

std::string field_to_csv(const ComplexScalarField& f, const std::string& manifest_ref = "");
nlohmann::json field_to_json(const ComplexScalarField& f);
ComplexScalarField field_from_json(const nlohmann::json& j);

std::string spinor_to_csv(const SpinorField& f, const std::string& manifest_ref = "");
nlohmann::json spinor_to_json(const SpinorField& f);
SpinorField spinor_from_json(const nlohmann::json& j);

void field_to_binary(const ComplexScalarField& f, const std::filesystem::path& path);
ComplexScalarField field_from_binary(const std::filesystem::path& path);

// --- snapshots & trajectories ----------------------------------------------

nlohmann::json state_to_json(const HalfWaveState& state);
HalfWaveState state_from_json(const nlohmann::json& j);

std::string diagnostics_to_csv(const std::vector<Diagnostics>& rows,
                               const std::string& manifest_ref = "");

enum class SnapshotFormat { json, binary };

/// Writes manifest.json, diagnostics.csv and per-snapshot state files under
/// `dir` (snapshots thinned by `stride`); returns the manifest. Binary
/// snapshots store the four blocks as DKGFLD01 field dumps.
nlohmann::json write_trajectory(const Trajectory& traj, const std::filesystem::path& dir,
                                int stride, const nlohmann::json& run_manifest,
                                SnapshotFormat format = SnapshotFormat::json);

/// Loads a trajectory written by write_trajectory (dt is the written stride
/// spacing; diagnostics are recomputed from the snapshots).
Trajectory load_trajectory(const std::filesystem::path& dir);

/// Run provenance: echoed argv, seed, version, wall clock, output paths.
nlohmann::json run_manifest(const std::string& subcommand, const nlohmann::json& params,
                            std::uint64_t seed);

}  // namespace dkglab::io
