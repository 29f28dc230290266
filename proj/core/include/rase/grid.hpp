#ifndef RASE_GRID_HPP
#define RASE_GRID_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rase/params.hpp"

namespace rase {

/// Validity thresholds for the discretization flags.  The defaults mirror the
/// tolerances used by the acceptance experiments.
struct GridThresholds {
    double white_noise_min_w_dt = 20.0;   // W * dt must be at least this
    double resolution_max_ddelta_t = 0.5; // ddelta * T_total must be at most this
};

/// Discretization of time, detuning, and propagation axes.
///
/// Time axis: contiguous bins of uniform width dt covering [t_start, t_end).
/// Detuning axis: uniform bins of width ddelta over the symmetric band
/// [-W, W]; the band engine treats the band as a continuum, the detuning
/// bins parameterize the point-sampled oracle modes and the validity flags.
/// z axis: uniform slice boundaries over [0, length].
struct SimulationGrid {
    // time
    double t_start = 0.0;
    double dt = 1.0;
    std::size_t n_bins = 0;

    // detuning band
    double band_half_width = 0.0; // W
    std::size_t n_detuning_bins = 0;

    // propagation
    double length = 1.0;
    std::size_t n_z_slices = 1;

    // validity flags, set by build_grid
    bool white_noise_valid = false;
    bool resolution_valid = false;
    GridThresholds thresholds{};

    double t_end() const { return t_start + dt * static_cast<double>(n_bins); }
    double t_total() const { return dt * static_cast<double>(n_bins); }
    double bin_center(std::size_t j) const { return t_start + dt * (static_cast<double>(j) + 0.5); }
    double bin_left_edge(std::size_t j) const { return t_start + dt * static_cast<double>(j); }
    std::vector<double> bin_centers() const;

    double ddelta() const
    {
        return n_detuning_bins ? 2.0 * band_half_width / static_cast<double>(n_detuning_bins) : 0.0;
    }
    /// Midpoint detunings of the point-sampled representation.
    std::vector<double> detuning_centers() const;

    double dz() const { return length / static_cast<double>(n_z_slices); }
    double z_center(std::size_t s) const { return dz() * (static_cast<double>(s) + 0.5); }
    std::vector<double> z_boundaries() const;

    /// True when `t` sits on a bin boundary (within 1e-9 * dt).
    bool on_bin_boundary(double t) const;
    /// Index of the bin containing time t; throws if outside the window.
    std::size_t bin_index(double t) const;
};

struct GridRequest {
    double t_start = 0.0;
    double window = 0.0;           // total simulated time
    double dt = 0.0;               // requested bin width
    double band_half_width = 0.0;  // W
    std::size_t n_detuning_bins = 0;
    std::size_t n_z_slices = 0;
    GridThresholds thresholds{};
};

/// Builds a grid, rounding the window to a whole number of bins and setting
/// the validity flags.  Rejects non-positive spans; flag violations are
/// recorded, not errors.
SimulationGrid build_grid(const PhysicalParams& params, const GridRequest& request);

/// JSON round-trip (bit-exact for the stored doubles).
std::string grid_to_json(const SimulationGrid& grid);
SimulationGrid grid_from_json(const std::string& text);

} // namespace rase

#endif
