#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace pdaflow {

// D2Q9 lattice constants. Directions:
//   0:rest 1:E 2:N 3:W 4:S 5:NE 6:NW 7:SW 8:SE
namespace d2q9 {
inline constexpr int kQ = 9;
inline constexpr std::array<int, kQ> cx = {0, 1, 0, -1, 0, 1, -1, -1, 1};
inline constexpr std::array<int, kQ> cy = {0, 0, 1, 0, -1, 1, 1, -1, -1};
inline constexpr std::array<int, kQ> opp = {0, 3, 4, 1, 2, 7, 8, 5, 6};
// mirror about a horizontal axis (y -> -y)
inline constexpr std::array<int, kQ> mirror_y = {0, 1, 4, 3, 2, 8, 7, 6, 5};
inline constexpr std::array<double, kQ> w = {4.0 / 9.0,  1.0 / 9.0,  1.0 / 9.0,
                                             1.0 / 9.0,  1.0 / 9.0,  1.0 / 36.0,
                                             1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0};
inline constexpr double cs2 = 1.0 / 3.0;

inline void equilibrium(double rho, double ux, double uy, double* feq) {
    const double usq = 1.5 * (ux * ux + uy * uy);
    for (int i = 0; i < kQ; ++i) {
        const double cu = 3.0 * (cx[i] * ux + cy[i] * uy);
        feq[i] = w[i] * rho * (1.0 + cu + 0.5 * cu * cu - usq);
    }
}

inline void moments(const double* f, double& rho, double& ux, double& uy) {
    rho = f[0] + f[1] + f[2] + f[3] + f[4] + f[5] + f[6] + f[7] + f[8];
    ux = (f[1] + f[5] + f[8]) - (f[3] + f[6] + f[7]);
    uy = (f[2] + f[5] + f[6]) - (f[4] + f[7] + f[8]);
    ux /= rho;
    uy /= rho;
}

// Single-cell BGK relaxation; exposed for the moment-conservation tests.
inline void bgk_collide(double* f, double tau, double& rho, double& ux, double& uy) {
    moments(f, rho, ux, uy);
    double feq[kQ];
    equilibrium(rho, ux, uy, feq);
    const double omega = 1.0 / tau;
    for (int i = 0; i < kQ; ++i) f[i] += omega * (feq[i] - f[i]);
}
}  // namespace d2q9

enum class Cell : std::uint8_t {
    Fluid = 0,
    Wall,      // channel wall, plain bounce-back, not part of body force
    Obstacle,  // bluff body, bounce-back + momentum exchange
    JetTop,    // obstacle cell on the top face carrying the wall-normal jet
    JetBottom,
    Inlet,
    Outlet,
};

inline bool cell_is_solid(Cell c) {
    return c == Cell::Wall || c == Cell::Obstacle || c == Cell::JetTop ||
           c == Cell::JetBottom;
}
inline bool cell_is_body(Cell c) {
    return c == Cell::Obstacle || c == Cell::JetTop || c == Cell::JetBottom;
}

struct LatticeConfig {
    int nx = 512;
    int ny = 128;
    int obstacle_x = 96;  // lower-left corner of the square, in cells
    int obstacle_y = 56;
    int obstacle_side = 16;
    double inflow_speed = 0.05;  // centerline velocity, lattice units
    double tau = 0.524;
    int substeps_per_control = 50;
    int jet_slot_width = 4;
    double jet_max = 0.03;       // |q| bound, lattice velocity
    double action_bound = 0.005; // a*, per-step jet increment bound
    double target_reynolds = 0.0;  // 0 disables the consistency check

    bool with_obstacle = true;
    bool periodic = false;  // all-fluid wrap-around variant (validation runs)

    double viscosity() const { return (tau - 0.5) / 3.0; }
    double reynolds() const { return inflow_speed * obstacle_side / viscosity(); }

    // Derives tau from a Reynolds target so reynolds() hits it exactly.
    static LatticeConfig with_reynolds(LatticeConfig base, double re);

    void validate() const;  // throws ConstraintViolation
};

struct FlowField {
    int nx = 0, ny = 0;
    std::vector<double> f;      // ncells * 9, direction-contiguous per cell
    std::vector<double> f_tmp;  // streaming scratch, same layout
    std::vector<double> rho, ux, uy;

    int ncells() const { return nx * ny; }
    int idx(int x, int y) const { return y * nx + x; }
};

// Reflects the field about the horizontal centerline (oracle for the
// drag/lift symmetry tests).
FlowField mirror_field(const FlowField& fld);

// Geometry compiled from a LatticeConfig: cell types, jet slots, boundary
// links. Immutable after construction; safe to share across environments.
class Lattice {
  public:
    explicit Lattice(LatticeConfig cfg);

    const LatticeConfig& config() const { return cfg_; }
    Cell cell(int x, int y) const { return type_[y * cfg_.nx + x]; }
    const std::vector<Cell>& cell_types() const { return type_; }
    bool is_fluid_like(int x, int y) const { return !cell_is_solid(cell(x, y)); }

    FlowField rest_field() const;
    // Equilibrium field from prescribed density/velocity functions of (x, y).
    FlowField equilibrium_field(
        const std::function<double(int, int)>& rho,
        const std::function<double(int, int)>& ux,
        const std::function<double(int, int)>& uy) const;

    // One BGK collide-and-stream update. q_top/q_bot are the jet amplitudes
    // (positive = blowing away from the body). If fx/fy are given they
    // receive the momentum-exchange force on the body for this substep.
    // inflow_scale lets warmup ramps avoid an impulsive start.
    void substep(FlowField& fld, double q_top, double q_bot,
                 double* fx = nullptr, double* fy = nullptr,
                 double inflow_scale = 1.0) const;

    // Recomputes rho/u from f; throws NonFiniteField on non-finite totals.
    void refresh_moments(FlowField& fld) const;

    // Momentum-exchange force coefficients of a field state (pure; runs one
    // virtual substep on a copy). Normalization 2F/(rho0 U^2 D).
    std::pair<double, double> drag_lift(const FlowField& fld,
                                        double q_top = 0.0, double q_bot = 0.0) const;

    std::pair<double, double> coeffs_from_force(double fx, double fy) const;

    double inflow_profile(int y) const { return u_in_[y]; }

  private:
    LatticeConfig cfg_;
    std::vector<Cell> type_;
    std::vector<double> u_in_;  // per-row inflow velocity
};

}  // namespace pdaflow
