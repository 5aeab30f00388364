#pragma once

#include <cstdint>
#include <string_view>

#include "kantorovich/monte_carlo.hpp"
#include "kantorovich/noise.hpp"
#include "kantorovich/sk1d.hpp"

namespace kantorovich {

enum class NoisePlacement {
    PerCell,    ///< one draw added to each Kantorovich mean
    PerSample,  ///< draws added to the signal before averaging
};

enum class NoiseSchedule {
    Fixed,      ///< tau at every n
    InvSqrtN,   ///< tau / sqrt(n)
};

/// Zero-mean Gaussian perturbation N(0, std^2).
struct NoiseModel {
    double std = 0.02;
    NoisePlacement placement = NoisePlacement::PerCell;
    std::uint64_t master_seed = 42;
    NoiseSchedule schedule = NoiseSchedule::Fixed;

    void validate() const;
    double std_at(int n) const;
    NoiseModel at_density(int n) const;
};

NoisePlacement parse_noise_placement(std::string_view name);
NoiseSchedule parse_noise_schedule(std::string_view name);

struct TrialContext {
    std::uint64_t trial_index = 0;

    NoiseStream stream(const NoiseModel& noise) const { return {noise.master_seed, trial_index}; }
};

CellMeans perturb_cell_means(const CellMeans& means, const NoiseModel& noise, const TrialContext& trial);

/// One realization of the probabilistic operator P_n.
///
/// PerCell: S_n applied to perturbed means. PerSample: f + eps is integrated,
/// with one independent draw at every quadrature node of every cell.
GridFunction1D apply_psk(const RealFunction& f, const Domain1D& domain, int n, const Kernel& kernel,
                         const NoiseModel& noise, const TrialContext& trial, const Quadrature& q = {});

enum class ErrorKind { L1Total, MeanL1, Discrete };

/// Monte Carlo estimate of every error functional, trials 0..trials-1.
struct ExpectedErrors {
    MonteCarloEstimate l1_total;
    MonteCarloEstimate mean_l1;
    MonteCarloEstimate discrete_mean;
    MonteCarloEstimate max;
    MonteCarloEstimate min;

    const MonteCarloEstimate& get(ErrorKind kind) const;
};

ExpectedErrors expected_errors(const RealFunction& f, const Domain1D& domain, int n, const Kernel& kernel,
                               const NoiseModel& noise, int trials, const Quadrature& q = {});

MonteCarloEstimate expected_error(const RealFunction& f, const Domain1D& domain, int n, const Kernel& kernel,
                                  const NoiseModel& noise, int trials, ErrorKind kind,
                                  const Quadrature& q = {});

}  // namespace kantorovich
