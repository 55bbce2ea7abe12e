#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filtval/ring.hpp"

namespace filtval {

enum class SamplerKind { ExhaustiveResidues, BoundedIntegers, BoundedPolys };

/// Deterministic element enumeration. Orders are total and fixed:
/// residues 0..n-1; integers 0, 1, -1, 2, -2, ...; dense polynomials with
/// coefficients drawn from a fixed pool, the constant coefficient varying
/// fastest (so pool {0,1}, degree 1 enumerates 0, 1, x, x+1).
struct SamplerSpec {
    SamplerKind kind = SamplerKind::BoundedIntegers;
    long bound = 200;                                 // BoundedIntegers
    int max_degree = 1;                               // BoundedPolys
    std::vector<std::string> coeff_pool = {"0", "1"}; // BoundedPolys
    std::uint64_t pair_budget = 0;                    // 0 = unlimited
    std::uint64_t seed = 1;

    std::string describe() const;
};

/// Materializes the enumeration; throws config_error when the sampler kind
/// does not fit the carrier.
std::vector<Element> make_sample(const RingDescriptor& ring, const SamplerSpec& spec);

/// Index pairs (i, j) over a sample of the given size, in diagonal order
/// (i + j ascending, then i ascending). When the square exceeds the budget
/// the stream is thinned to exactly `budget` pairs by seeded selection
/// sampling, which preserves the order — "first failing pair" stays
/// meaningful under subsampling.
class PairStream {
public:
    PairStream(std::size_t sample_size, std::uint64_t budget, std::uint64_t seed);

    std::optional<std::pair<std::size_t, std::size_t>> next();

    std::uint64_t total_pairs() const noexcept { return total_; }
    std::uint64_t planned() const noexcept { return planned_; }

private:
    std::size_t size_;
    std::uint64_t total_;
    std::uint64_t planned_;
    std::uint64_t remaining_total_;
    std::uint64_t remaining_planned_;
    std::uint64_t rng_state_;
    long s_ = 0;
    long i_ = 0;

    std::uint64_t next_rng();
    bool advance_cursor(std::size_t& i, std::size_t& j);
};

}  // namespace filtval
