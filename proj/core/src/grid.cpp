#include "rase/grid.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace rase {

std::vector<double> SimulationGrid::bin_centers() const
{
    std::vector<double> centers(n_bins);
    for (std::size_t j = 0; j < n_bins; ++j)
        centers[j] = bin_center(j);
    return centers;
}

std::vector<double> SimulationGrid::detuning_centers() const
{
    std::vector<double> centers(n_detuning_bins);
    const double dd = ddelta();
    for (std::size_t k = 0; k < n_detuning_bins; ++k)
        centers[k] = -band_half_width + dd * (static_cast<double>(k) + 0.5);
    return centers;
}

std::vector<double> SimulationGrid::z_boundaries() const
{
    std::vector<double> zs(n_z_slices + 1);
    for (std::size_t s = 0; s <= n_z_slices; ++s)
        zs[s] = dz() * static_cast<double>(s);
    return zs;
}

bool SimulationGrid::on_bin_boundary(double t) const
{
    const double u = (t - t_start) / dt;
    return std::abs(u - std::round(u)) < 1e-9;
}

std::size_t SimulationGrid::bin_index(double t) const
{
    const double u = (t - t_start) / dt;
    if (u < -1e-9 || u > static_cast<double>(n_bins) + 1e-9)
        throw config_error("SimulationGrid: time outside window");
    auto j = static_cast<std::size_t>(std::floor(u + 1e-12));
    if (j >= n_bins)
        j = n_bins - 1;
    return j;
}

SimulationGrid build_grid(const PhysicalParams& params, const GridRequest& request)
{
    params.validate();
    if (request.window <= 0.0)
        throw config_error("build_grid: window must be > 0");
    if (request.dt <= 0.0)
        throw config_error("build_grid: dt must be > 0");
    if (request.band_half_width <= 0.0)
        throw config_error("build_grid: band half-width must be > 0");
    if (request.n_detuning_bins == 0)
        throw config_error("build_grid: need at least one detuning bin");
    if (request.n_z_slices == 0)
        throw config_error("build_grid: need at least one z slice");

    SimulationGrid grid;
    grid.t_start = request.t_start;
    grid.dt = request.dt;
    grid.n_bins = static_cast<std::size_t>(std::llround(request.window / request.dt));
    if (grid.n_bins == 0)
        grid.n_bins = 1;
    grid.band_half_width = request.band_half_width;
    grid.n_detuning_bins = request.n_detuning_bins;
    grid.length = params.length;
    grid.n_z_slices = request.n_z_slices;
    grid.thresholds = request.thresholds;

    grid.white_noise_valid =
        grid.band_half_width * grid.dt >= grid.thresholds.white_noise_min_w_dt - 1e-12;
    grid.resolution_valid =
        grid.ddelta() * grid.t_total() <= grid.thresholds.resolution_max_ddelta_t + 1e-12;
    return grid;
}

std::string grid_to_json(const SimulationGrid& g)
{
    nlohmann::json j{
        {"t_start", g.t_start},
        {"dt", g.dt},
        {"n_bins", g.n_bins},
        {"band_half_width", g.band_half_width},
        {"n_detuning_bins", g.n_detuning_bins},
        {"length", g.length},
        {"n_z_slices", g.n_z_slices},
        {"white_noise_valid", g.white_noise_valid},
        {"resolution_valid", g.resolution_valid},
        {"thresholds",
         {{"white_noise_min_w_dt", g.thresholds.white_noise_min_w_dt},
          {"resolution_max_ddelta_t", g.thresholds.resolution_max_ddelta_t}}},
    };
    return j.dump(2);
}

SimulationGrid grid_from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    SimulationGrid g;
    g.t_start = j.at("t_start").get<double>();
    g.dt = j.at("dt").get<double>();
    g.n_bins = j.at("n_bins").get<std::size_t>();
    g.band_half_width = j.at("band_half_width").get<double>();
    g.n_detuning_bins = j.at("n_detuning_bins").get<std::size_t>();
    g.length = j.at("length").get<double>();
    g.n_z_slices = j.at("n_z_slices").get<std::size_t>();
    g.white_noise_valid = j.at("white_noise_valid").get<bool>();
    g.resolution_valid = j.at("resolution_valid").get<bool>();
    g.thresholds.white_noise_min_w_dt = j.at("thresholds").at("white_noise_min_w_dt").get<double>();
    g.thresholds.resolution_max_ddelta_t =
        j.at("thresholds").at("resolution_max_ddelta_t").get<double>();
    return g;
}

} // namespace rase
