#include "filtval/sampler.hpp"

#include <algorithm>

#include "filtval/errors.hpp"
#include "filtval/parser.hpp"

namespace filtval {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ",";
        out += parts[i];
    }
    return out;
}

}  // namespace

std::string SamplerSpec::describe() const {
    switch (kind) {
        case SamplerKind::ExhaustiveResidues:
            return "residues";
        case SamplerKind::BoundedIntegers:
            return "int±" + std::to_string(bound);
        case SamplerKind::BoundedPolys:
            return "poly(deg<=" + std::to_string(max_degree) + ",coeffs{" + join(coeff_pool) +
                   "})";
    }
    return {};
}

std::vector<Element> make_sample(const RingDescriptor& ring, const SamplerSpec& spec) {
    std::vector<Element> sample;
    switch (spec.kind) {
        case SamplerKind::ExhaustiveResidues: {
            if (ring.kind() != RingKind::ZmodN) {
                throw config_error("/sampler/kind", "exhaustiveResidues requires a Zmod ring");
            }
            const Int& n = ring.modulus();
            if (n > 1000000) {
                throw config_error("/sampler/kind", "residue enumeration too large (n > 1e6)");
            }
            unsigned long count = n.get_ui();
            sample.reserve(count);
            for (unsigned long r = 0; r < count; ++r) {
                sample.push_back(Element::scalar(ring, Int(r)));
            }
            return sample;
        }
        case SamplerKind::BoundedIntegers: {
            if (ring.kind() != RingKind::Z) {
                throw config_error("/sampler/kind", "boundedIntegers requires the ring Z");
            }
            if (spec.bound < 0) throw config_error("/sampler/bound", "bound must be >= 0");
            sample.reserve(static_cast<std::size_t>(2 * spec.bound + 1));
            sample.push_back(Element::scalar(ring, Int(0)));
            for (long k = 1; k <= spec.bound; ++k) {
                sample.push_back(Element::scalar(ring, Int(k)));
                sample.push_back(Element::scalar(ring, Int(-k)));
            }
            return sample;
        }
        case SamplerKind::BoundedPolys: {
            if (!ring.is_polynomial()) {
                throw config_error("/sampler/kind", "boundedPolys requires a polynomial ring");
            }
            if (spec.max_degree < 0) {
                throw config_error("/sampler/maxDegree", "maxDegree must be >= 0");
            }
            if (spec.coeff_pool.empty()) {
                throw config_error("/sampler/coeffPool", "coefficient pool is empty");
            }
            // Pool entries are element texts parsed in the carrier and
            // required to be constants.
            std::vector<Element> pool;
            pool.reserve(spec.coeff_pool.size());
            for (const std::string& text : spec.coeff_pool) {
                Element c = parse_element(ring, text);
                if (c.degree() > 0) {
                    throw config_error("/sampler/coeffPool", "pool entry '" + text +
                                                                 "' is not a constant");
                }
                pool.push_back(std::move(c));
            }
            const std::size_t pool_size = pool.size();
            double total_d = 1;
            for (int i = 0; i <= spec.max_degree; ++i) total_d *= static_cast<double>(pool_size);
            if (total_d > 2e6) {
                throw config_error("/sampler", "polynomial enumeration too large (> 2e6)");
            }
            std::size_t total = static_cast<std::size_t>(total_d);
            sample.reserve(total);
            Element x = parse_element(ring, "x");
            for (std::size_t index = 0; index < total; ++index) {
                Element value = zero(ring);
                Element power = one(ring);
                std::size_t rest = index;
                for (int d = 0; d <= spec.max_degree; ++d) {
                    value = add(value, mul(pool[rest % pool_size], power));
                    rest /= pool_size;
                    if (d < spec.max_degree) power = mul(power, x);
                }
                sample.push_back(std::move(value));
            }
            return sample;
        }
    }
    throw config_error("/sampler/kind", "unknown sampler kind");
}

PairStream::PairStream(std::size_t sample_size, std::uint64_t budget, std::uint64_t seed)
    : size_(sample_size) {
    if (sample_size > (1ULL << 32)) {
        throw budget_exceeded("pair square too large to enumerate");
    }
    total_ = static_cast<std::uint64_t>(sample_size) * sample_size;
    planned_ = budget == 0 ? total_ : std::min(budget, total_);
    remaining_total_ = total_;
    remaining_planned_ = planned_;
    rng_state_ = seed + 0x9E3779B97F4A7C15ULL;
}

// splitmix64: tiny, seedable, identical everywhere.
std::uint64_t PairStream::next_rng() {
    std::uint64_t z = (rng_state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

bool PairStream::advance_cursor(std::size_t& i, std::size_t& j) {
    const long size = static_cast<long>(size_);
    if (size == 0 || s_ > 2 * (size - 1)) return false;
    i = static_cast<std::size_t>(i_);
    j = static_cast<std::size_t>(s_ - i_);
    if (i_ < std::min(s_, size - 1)) {
        ++i_;
    } else {
        ++s_;
        i_ = std::max(0L, s_ - size + 1);
    }
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> PairStream::next() {
    std::size_t i = 0, j = 0;
    while (remaining_planned_ > 0 && advance_cursor(i, j)) {
        bool take = true;
        if (remaining_planned_ < remaining_total_) {
            take = (next_rng() % remaining_total_) < remaining_planned_;
        }
        --remaining_total_;
        if (take) {
            --remaining_planned_;
            return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

}  // namespace filtval
