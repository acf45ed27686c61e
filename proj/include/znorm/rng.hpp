#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace znorm {

/**
 * @brief Deterministic random stream addressed by (seed, stream_id).
 *
 * The generator is xoshiro256++ seeded through splitmix64, so identical
 * (seed, stream_id) pairs produce identical draw sequences on every
 * platform and regardless of how many other streams are in flight.
 * Replicated simulations assign one stream per replication index, which
 * makes results independent of worker count and scheduling.
 *
 * No facility from <random> is used for the variates anywhere in the
 * library: the standard distributions are implementation-defined, which
 * would break cross-platform reproducibility.
 */
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    /// Next 64 random bits.
    std::uint64_t next_u64();

    /// Uniform draw strictly inside (0, 1); 53-bit resolution.
    double uniform01();

    /// Standard normal via the Marsaglia polar method.
    double normal();

private:
    std::array<std::uint64_t, 4> state_{};
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// Stateless 64-bit mixing function (the splitmix64 finalizer).
[[nodiscard]] std::uint64_t mix64(std::uint64_t z) noexcept;

/// Derives a child seed from a base seed and a list of context words
/// (purpose tags, sample sizes, ...). Used to give every calibration and
/// every alternative in a study its own disjoint stream family.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base,
                                        std::initializer_list<std::uint64_t> words) noexcept;

}  // namespace znorm
