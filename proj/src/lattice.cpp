#include "pdaflow/lattice.hpp"

#include <cmath>
#include <cstring>

#include "pdaflow/errors.hpp"

namespace pdaflow {

using namespace d2q9;

LatticeConfig LatticeConfig::with_reynolds(LatticeConfig base, double re) {
    if (re <= 0.0) throw ConstraintViolation("reynolds: must be positive");
    base.tau = 0.5 + 3.0 * base.inflow_speed * base.obstacle_side / re;
    base.target_reynolds = re;
    return base;
}

void LatticeConfig::validate() const {
    if (nx < 8 || ny < 8) throw ConstraintViolation("nx/ny: lattice too small");
    if (tau <= 0.5) throw ConstraintViolation("tau: must exceed 1/2");
    if (inflow_speed < 0.0) throw ConstraintViolation("inflow_speed: must be non-negative");
    if (substeps_per_control < 1)
        throw ConstraintViolation("substeps_per_control: must be >= 1");
    if (jet_max < 0.0) throw ConstraintViolation("jet_max: must be non-negative");
    if (action_bound < 0.0) throw ConstraintViolation("action_bound: must be non-negative");
    if (target_reynolds > 0.0) {
        double rel = std::abs(reynolds() - target_reynolds) / target_reynolds;
        if (rel > 1e-9)
            throw ConstraintViolation("reynolds: (inflow_speed, obstacle_side, tau) "
                                      "inconsistent with configured target");
    }
    if (with_obstacle) {
        const int d = obstacle_side;
        if (d < 2) throw ConstraintViolation("obstacle_side: must be >= 2");
        if (jet_slot_width < 1 || jet_slot_width > d)
            throw ConstraintViolation("jet_slot_width: must be in [1, obstacle_side]");
        if (obstacle_x < 2 * d)
            throw ConstraintViolation("obstacle_x: needs >= 2D clearance upstream");
        if (nx - (obstacle_x + d) < 8 * d)
            throw ConstraintViolation("obstacle_x: needs >= 8D clearance downstream");
        if (obstacle_y < 2 || obstacle_y + d > ny - 2)
            throw ConstraintViolation("obstacle_y: obstacle must sit strictly inside the channel");
    }
}

Lattice::Lattice(LatticeConfig cfg) : cfg_(cfg) {
    cfg_.validate();
    const int nx = cfg_.nx, ny = cfg_.ny;
    type_.assign(static_cast<std::size_t>(nx) * ny, Cell::Fluid);
    u_in_.assign(ny, 0.0);

    if (!cfg_.periodic) {
        for (int x = 0; x < nx; ++x) {
            type_[0 * nx + x] = Cell::Wall;
            type_[(ny - 1) * nx + x] = Cell::Wall;
        }
        for (int y = 1; y < ny - 1; ++y) {
            type_[y * nx + 0] = Cell::Inlet;
            type_[y * nx + (nx - 1)] = Cell::Outlet;
        }
        // Parabolic profile with the half-way wall planes at y=1/2 and ny-3/2.
        const double yc = 0.5 * (ny - 1);
        const double h = 0.5 * (ny - 2);
        for (int y = 1; y < ny - 1; ++y) {
            const double s = (y - yc) / h;
            u_in_[y] = cfg_.inflow_speed * (1.0 - s * s);
        }
    }

    if (cfg_.with_obstacle && !cfg_.periodic) {
        const int ox = cfg_.obstacle_x, oy = cfg_.obstacle_y, d = cfg_.obstacle_side;
        for (int y = oy; y < oy + d; ++y)
            for (int x = ox; x < ox + d; ++x) type_[y * nx + x] = Cell::Obstacle;
        // Jet slots occupy the trailing cells of the top and bottom faces.
        const int x0 = ox + d - cfg_.jet_slot_width;
        for (int x = x0; x < ox + d; ++x) {
            type_[(oy + d - 1) * nx + x] = Cell::JetTop;
            type_[oy * nx + x] = Cell::JetBottom;
        }
    }
}

FlowField Lattice::rest_field() const {
    return equilibrium_field([](int, int) { return 1.0; },
                             [](int, int) { return 0.0; },
                             [](int, int) { return 0.0; });
}

FlowField Lattice::equilibrium_field(const std::function<double(int, int)>& rho_fn,
                                     const std::function<double(int, int)>& ux_fn,
                                     const std::function<double(int, int)>& uy_fn) const {
    FlowField fld;
    fld.nx = cfg_.nx;
    fld.ny = cfg_.ny;
    const int n = fld.ncells();
    fld.f.assign(static_cast<std::size_t>(n) * kQ, 0.0);
    fld.f_tmp.assign(static_cast<std::size_t>(n) * kQ, 0.0);
    fld.rho.assign(n, 1.0);
    fld.ux.assign(n, 0.0);
    fld.uy.assign(n, 0.0);
    for (int y = 0; y < cfg_.ny; ++y) {
        for (int x = 0; x < cfg_.nx; ++x) {
            const int c = y * cfg_.nx + x;
            double r = 1.0, vx = 0.0, vy = 0.0;
            if (!cell_is_solid(type_[c])) {
                r = rho_fn(x, y);
                vx = ux_fn(x, y);
                vy = uy_fn(x, y);
            }
            equilibrium(r, vx, vy, &fld.f[static_cast<std::size_t>(c) * kQ]);
            fld.rho[c] = r;
            fld.ux[c] = vx;
            fld.uy[c] = vy;
        }
    }
    return fld;
}

FlowField mirror_field(const FlowField& fld) {
    FlowField out = fld;
    for (int y = 0; y < fld.ny; ++y) {
        const int ym = fld.ny - 1 - y;
        for (int x = 0; x < fld.nx; ++x) {
            const int src = fld.idx(x, y), dst = fld.idx(x, ym);
            for (int i = 0; i < kQ; ++i)
                out.f[static_cast<std::size_t>(dst) * kQ + mirror_y[i]] =
                    fld.f[static_cast<std::size_t>(src) * kQ + i];
            out.rho[dst] = fld.rho[src];
            out.ux[dst] = fld.ux[src];
            out.uy[dst] = -fld.uy[src];
        }
    }
    return out;
}

void Lattice::substep(FlowField& fld, double q_top, double q_bot,
                      double* fx_out, double* fy_out, double inflow_scale) const {
    const int nx = cfg_.nx, ny = cfg_.ny;
    if (fld.nx != nx || fld.ny != ny)
        throw ShapeMismatch("substep: field dimensions do not match lattice");
    const double omega = 1.0 / cfg_.tau;
    const bool periodic = cfg_.periodic;
    double* __restrict f = fld.f.data();
    double* __restrict fn = fld.f_tmp.data();
    double* __restrict rho_a = fld.rho.data();
    double* __restrict ux_a = fld.ux.data();
    double* __restrict uy_a = fld.uy.data();
    const Cell* __restrict type = type_.data();

    double fx_acc = 0.0, fy_acc = 0.0;

    for (int y = 0; y < ny; ++y) {
        for (int x = 0; x < nx; ++x) {
            const int c = y * nx + x;
            double* fc = f + static_cast<std::size_t>(c) * kQ;
            if (cell_is_solid(type[c])) {
                std::memcpy(fn + static_cast<std::size_t>(c) * kQ, fc,
                            kQ * sizeof(double));
                continue;
            }
            double rho, vx, vy;
            moments(fc, rho, vx, vy);
            rho_a[c] = rho;
            ux_a[c] = vx;
            uy_a[c] = vy;

            double fpost[kQ];
            const double usq = 1.5 * (vx * vx + vy * vy);
            for (int i = 0; i < kQ; ++i) {
                const double cu = 3.0 * (cx[i] * vx + cy[i] * vy);
                const double feq = w[i] * rho * (1.0 + cu + 0.5 * cu * cu - usq);
                fpost[i] = fc[i] + omega * (feq - fc[i]);
            }

            fn[static_cast<std::size_t>(c) * kQ] = fpost[0];
            for (int i = 1; i < kQ; ++i) {
                int dx = x + cx[i], dy = y + cy[i];
                if (periodic) {
                    if (dx < 0) dx += nx; else if (dx >= nx) dx -= nx;
                    if (dy < 0) dy += ny; else if (dy >= ny) dy -= ny;
                } else if (dx < 0 || dx >= nx || dy < 0 || dy >= ny) {
                    continue;  // open edge; refilled by the inlet/outlet fix
                }
                const int d = dy * nx + dx;
                const Cell td = type[d];
                if (!cell_is_solid(td)) {
                    fn[static_cast<std::size_t>(d) * kQ + i] = fpost[i];
                    continue;
                }
                // Bounce-back. Jet faces act like porous walls with a
                // wall-normal velocity; the correction applies to the pure
                // vertical links only, so the injection stays on the
                // horizontal faces.
                double fb = fpost[i];
                if (cx[i] == 0) {
                    double uwy = 0.0;
                    if (td == Cell::JetTop) uwy = q_top;          // +y blows out
                    else if (td == Cell::JetBottom) uwy = -q_bot; // -y blows out
                    if (uwy != 0.0) fb -= 6.0 * w[i] * rho * (cy[i] * uwy);
                }
                fn[static_cast<std::size_t>(c) * kQ + opp[i]] = fb;
                if (cell_is_body(td)) {
                    fx_acc += cx[i] * (fpost[i] + fb);
                    fy_acc += cy[i] * (fpost[i] + fb);
                }
            }
        }
    }

    if (!periodic) {
        // Equilibrium inflow at the left boundary.
        for (int y = 1; y < ny - 1; ++y) {
            const int c = y * nx;
            equilibrium(1.0, inflow_scale * u_in_[y], 0.0,
                        fn + static_cast<std::size_t>(c) * kQ);
        }
        // Zero-gradient outflow: copy the westward populations inward.
        for (int y = 1; y < ny - 1; ++y) {
            const int c = y * nx + (nx - 1);
            const int src = y * nx + (nx - 2);
            for (int i : {3, 6, 7})
                fn[static_cast<std::size_t>(c) * kQ + i] =
                    fn[static_cast<std::size_t>(src) * kQ + i];
        }
    }

    fld.f.swap(fld.f_tmp);
    if (fx_out) *fx_out = fx_acc;
    if (fy_out) *fy_out = fy_acc;
}

void Lattice::refresh_moments(FlowField& fld) const {
    const int n = fld.ncells();
    double total = 0.0;
    for (int c = 0; c < n; ++c) {
        if (cell_is_solid(type_[c])) {
            fld.rho[c] = 1.0;
            fld.ux[c] = 0.0;
            fld.uy[c] = 0.0;
            continue;
        }
        double rho, vx, vy;
        moments(&fld.f[static_cast<std::size_t>(c) * kQ], rho, vx, vy);
        fld.rho[c] = rho;
        fld.ux[c] = vx;
        fld.uy[c] = vy;
        total += rho;
    }
    if (!std::isfinite(total))
        throw NonFiniteField("lattice state became non-finite; reduce inflow_speed "
                             "or increase tau");
}

std::pair<double, double> Lattice::coeffs_from_force(double fx, double fy) const {
    const double u = cfg_.inflow_speed;
    const double denom = u * u * cfg_.obstacle_side;  // rho0 = 1
    if (denom == 0.0) return {0.0, 0.0};
    return {2.0 * fx / denom, 2.0 * fy / denom};
}

std::pair<double, double> Lattice::drag_lift(const FlowField& fld,
                                             double q_top, double q_bot) const {
    FlowField copy = fld;
    double fx = 0.0, fy = 0.0;
    substep(copy, q_top, q_bot, &fx, &fy);
    return coeffs_from_force(fx, fy);
}

}  // namespace pdaflow
