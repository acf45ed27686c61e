#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "znorm/errors.hpp"

namespace znorm {

/**
 * @brief An immutable batch of real-valued observations.
 *
 * Construction validates that the sample is non-empty and that every
 * element is finite, so downstream code can assume both. Producers that
 * guarantee finiteness by construction (e.g. the samplers) can skip the
 * scan with `trusted`.
 */
class Sample {
public:
    /// @throws EmptySample, NonFiniteInput
    explicit Sample(std::vector<double> values);

    /// Wraps `values` without validation. The caller guarantees the
    /// invariants hold.
    static Sample trusted(std::vector<double> values);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

private:
    Sample() = default;
    std::vector<double> values_;
};

}  // namespace znorm
