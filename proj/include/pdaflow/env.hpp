#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pdaflow/lattice.hpp"

namespace pdaflow {

struct JetState {
    Eigen::Vector2d q = Eigen::Vector2d::Zero();  // (top, bottom) amplitudes
};

struct EnvState {
    FlowField field;
    JetState jets;
    Eigen::Vector2d prev_action = Eigen::Vector2d::Zero();
    int step_index = 0;
};

struct StepOutput {
    Eigen::VectorXd o_fm;  // wake pressures
    Eigen::VectorXd o_pm;  // body-base pressures
    double reward = 0.0;   // -(mean drag coefficient over the control step)
    double drag_coeff = 0.0;
    double lift_coeff = 0.0;
};

struct Observation {
    Eigen::VectorXd o_fm;
    Eigen::VectorXd o_pm;
};

struct ProbeLayout {
    std::vector<int> wake_cells;  // flat cell indices, layout order
    std::vector<int> base_cells;

    // 8x8 wake grid spanning [1D, 9D] downstream x [-1.5D, 1.5D] about the
    // centerline, and 8 probes on the rear face of the body.
    static ProbeLayout standard(const LatticeConfig& cfg);
    void validate(const Lattice& lat) const;  // throws ProbeInSolid
};

// Pressure p = cs^2 (rho - rho0) at each probe cell, layout order.
Eigen::VectorXd sample_pressure(const FlowField& fld, const Lattice& lat,
                                const std::vector<int>& cells);

struct BaselineStats {
    double cd_mean = 0.0, cd_std = 0.0;
    double lift_amplitude = 0.0;
    double lift_freq = 0.0;  // cycles per control step
    double strouhal = 0.0;
    Eigen::VectorXd wake_mean, wake_std, base_mean, base_std;
    // Uncontrolled continuation from the snapshot (one episode of drag values).
    std::vector<double> cd_continuation;
    double uncontrolled_last100_mean = 0.0;
};

class FlowEnv {
  public:
    explicit FlowEnv(const LatticeConfig& cfg);

    const Lattice& lattice() const { return lattice_; }
    const LatticeConfig& config() const { return lattice_.config(); }
    const ProbeLayout& probes() const { return probes_; }
    int fm_dim() const { return static_cast<int>(probes_.wake_cells.size()); }
    int pm_dim() const { return static_cast<int>(probes_.base_cells.size()); }

    EnvState reset(const FlowField* snapshot = nullptr) const;

    // One control step: q <- clip(q + action, +-jet_max), then
    // substeps_per_control lattice updates. Actions outside [-a*, a*]^2 are
    // clipped (with a stderr note). Probes are sampled at the final substep;
    // reward is the negative mean drag coefficient across the substeps.
    StepOutput step(EnvState& state, Eigen::Vector2d action) const;

    Observation observe(const EnvState& state) const;

    // Advances the state with zero action (phase offsets for run ensembles).
    void advance_uncontrolled(EnvState& state, int control_steps) const;

    std::pair<double, double> drag_lift(const EnvState& state) const {
        return lattice_.drag_lift(state.field, state.jets.q[0], state.jets.q[1]);
    }

  private:
    Lattice lattice_;
    ProbeLayout probes_;
};

// Runs the uncontrolled warmup (with a short inflow ramp and a brief
// antisymmetric jet kick to break the symmetric equilibrium), verifies that
// vortex shedding is sustained, and gathers probe/drag statistics over the
// last quarter plus a 400-step zero-action continuation from the snapshot.
// Throws NoSheddingDetected when the lift oscillation dies out.
std::pair<FlowField, BaselineStats> make_baseline_snapshot(
    const FlowEnv& env, int warmup_control_steps = 2000,
    int continuation_steps = 400);

// Snapshot file: "PDAFLOW1" magic, nx/ny as little-endian int64, then f as
// row-major (cell, direction) float64.
void save_snapshot(const std::filesystem::path& path, const FlowField& fld);
FlowField load_snapshot(const std::filesystem::path& path);

void save_baseline_stats(const std::filesystem::path& path, const BaselineStats& s);
BaselineStats load_baseline_stats(const std::filesystem::path& path);

}  // namespace pdaflow
