#include "kantorovich/psk1d.hpp"

#include <cmath>
#include <string>

#include "kantorovich/error.hpp"
#include "kantorovich/parallel.hpp"

namespace kantorovich {
namespace {

// Stream index of a signed cell index, independent of the cover's extent.
std::uint64_t cell_key(long k) {
    const auto v = static_cast<std::int64_t>(k);
    return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

// f evaluated once at every quadrature node of every covering cell.
struct NodeSamples {
    CellRange range;
    std::vector<QuadratureRule> rules;
    std::vector<std::vector<double>> values;
};

NodeSamples sample_nodes(const RealFunction& f, CellRange range, int n, const Quadrature& q) {
    NodeSamples s{range, {}, {}};
    for (long k = range.first; k <= range.last; ++k) {
        QuadratureRule rule =
            quadrature_rule(static_cast<double>(k) / n, static_cast<double>(k + 1) / n, q);
        std::vector<double> vals;
        vals.reserve(rule.nodes.size());
        for (double x : rule.nodes) vals.push_back(f(x));
        s.rules.push_back(std::move(rule));
        s.values.push_back(std::move(vals));
    }
    return s;
}

CellMeans noisy_node_means(const NodeSamples& s, int n, double std, const NoiseStream& stream) {
    CellMeans means;
    means.n = n;
    means.k_min = s.range.first;
    means.k_max = s.range.last;
    means.values.reserve(s.rules.size());
    std::vector<double> noisy;
    for (std::size_t c = 0; c < s.rules.size(); ++c) {
        const long k = s.range.first + static_cast<long>(c);
        const std::uint64_t base = cell_key(k) * s.values[c].size();
        noisy = s.values[c];
        for (std::size_t j = 0; j < noisy.size(); ++j) noisy[j] += std * stream.standard_normal(base + j);
        means.values.push_back(rule_mean(s.rules[c], noisy));
    }
    return means;
}

CellMeans perturb_with_std(const CellMeans& means, double std, const NoiseStream& stream) {
    CellMeans out = means;
    for (long k = out.k_min; k <= out.k_max; ++k)
        out.values[static_cast<std::size_t>(k - out.k_min)] += std * stream.standard_normal(cell_key(k));
    return out;
}

}  // namespace

void NoiseModel::validate() const {
    if (!std::isfinite(std) || std < 0.0) throw InvalidArgument("noise std must be finite and >= 0");
}

double NoiseModel::std_at(int n) const {
    if (schedule == NoiseSchedule::InvSqrtN) return std / std::sqrt(static_cast<double>(n));
    return std;
}

NoiseModel NoiseModel::at_density(int n) const {
    NoiseModel m = *this;
    m.std = std_at(n);
    m.schedule = NoiseSchedule::Fixed;
    return m;
}

NoisePlacement parse_noise_placement(std::string_view name) {
    if (name == "cell") return NoisePlacement::PerCell;
    if (name == "sample") return NoisePlacement::PerSample;
    throw InvalidArgument("unknown noise placement '" + std::string(name) + "'");
}

NoiseSchedule parse_noise_schedule(std::string_view name) {
    if (name == "fixed") return NoiseSchedule::Fixed;
    if (name == "inv-sqrt-n") return NoiseSchedule::InvSqrtN;
    throw InvalidArgument("unknown noise schedule '" + std::string(name) + "'");
}

CellMeans perturb_cell_means(const CellMeans& means, const NoiseModel& noise, const TrialContext& trial) {
    noise.validate();
    if (noise.placement != NoisePlacement::PerCell)
        throw InvalidArgument("perturb_cell_means requires per-cell placement");
    return perturb_with_std(means, noise.std_at(means.n), trial.stream(noise));
}

GridFunction1D apply_psk(const RealFunction& f, const Domain1D& domain, int n, const Kernel& kernel,
                         const NoiseModel& noise, const TrialContext& trial, const Quadrature& q) {
    noise.validate();
    if (noise.placement == NoisePlacement::PerCell) {
        const CellMeans means = compute_cell_means(f, domain, n, q, kernel);
        return apply_sk(perturb_cell_means(means, noise, trial), kernel, domain);
    }
    const NodeSamples nodes = sample_nodes(f, cell_cover(domain, n, kernel), n, q);
    return apply_sk(noisy_node_means(nodes, n, noise.std_at(n), trial.stream(noise)), kernel, domain);
}

const MonteCarloEstimate& ExpectedErrors::get(ErrorKind kind) const {
    switch (kind) {
        case ErrorKind::L1Total: return l1_total;
        case ErrorKind::MeanL1: return mean_l1;
        case ErrorKind::Discrete: return discrete_mean;
    }
    return l1_total;
}

ExpectedErrors expected_errors(const RealFunction& f, const Domain1D& domain, int n, const Kernel& kernel,
                               const NoiseModel& noise, int trials, const Quadrature& q) {
    noise.validate();
    if (trials < 1) throw InvalidArgument("trials must be >= 1");
    const double std = noise.std_at(n);
    const GridFunction1D exact = sample_function(f, domain);
    const CellRange range = cell_cover(domain, n, kernel);

    CellMeans classical;
    NodeSamples nodes;
    if (noise.placement == NoisePlacement::PerCell)
        classical = compute_cell_means(f, domain, n, q, kernel);
    else
        nodes = sample_nodes(f, range, n, q);

    const auto count = static_cast<std::size_t>(trials);
    std::vector<ErrorSummary> per_trial(count);
    parallel_for(count, [&](std::size_t t) {
        const NoiseStream stream(noise.master_seed, t);
        const CellMeans noisy = noise.placement == NoisePlacement::PerCell
                                    ? perturb_with_std(classical, std, stream)
                                    : noisy_node_means(nodes, n, std, stream);
        per_trial[t] = error_summary(pointwise_error(apply_sk(noisy, kernel, domain), exact));
    });

    auto collect = [&](double ErrorSummary::*field) {
        std::vector<double> v(count);
        for (std::size_t t = 0; t < count; ++t) v[t] = per_trial[t].*field;
        return summarize_trials(v);
    };
    return {collect(&ErrorSummary::l1_total), collect(&ErrorSummary::mean_l1),
            collect(&ErrorSummary::discrete_mean), collect(&ErrorSummary::max), collect(&ErrorSummary::min)};
}

MonteCarloEstimate expected_error(const RealFunction& f, const Domain1D& domain, int n, const Kernel& kernel,
                                  const NoiseModel& noise, int trials, ErrorKind kind, const Quadrature& q) {
    return expected_errors(f, domain, n, kernel, noise, trials, q).get(kind);
}

}  // namespace kantorovich
