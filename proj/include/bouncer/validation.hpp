#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bouncer/packet_params.hpp"

namespace bouncer {

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    double measured = 0.0;   // worst observed value of the headline metric
    double threshold = 0.0;  // bound the headline metric is held to
    std::string detail;
};

struct ValidationOptions {
    /// Parameters for the criteria that run on "the demo packet".
    PacketParams demo{-10.0, 5.0, 1.0, 1.0, 1.0};
    /// Replace the left edge (and optionally the point count) of every
    /// quadrature and propagation grid. A too-narrow value makes the tail
    /// check fail, which is how a forced failure is exercised.
    std::optional<double> x_min_override;
    std::optional<std::size_t> n_points_override;
    std::uint64_t seed = 20040517;
};

/// Identifiers of every acceptance criterion, in execution order.
const std::vector<std::string>& criterion_ids();

/// Runs one criterion by id. Exceptions raised by the numerics become a
/// failed result whose detail carries the message.
CriterionResult run_criterion(const std::string& id, const ValidationOptions& options);

std::vector<CriterionResult> run_acceptance(const ValidationOptions& options);

}  // namespace bouncer
