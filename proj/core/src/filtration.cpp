#include "filtval/filtration.hpp"

#include <atomic>

#include "filtval/errors.hpp"

namespace filtval {

struct Filtration::State {
    RingDescriptor ring;
    bool adic;
    bool unit_flag = false;
    std::optional<Ideal> base;                      // adic
    std::shared_ptr<IdealPowerCache> cache;         // adic
    std::vector<Ideal> chain;                       // explicit
    std::atomic<int> validated_to{0};

    State(RingDescriptor r, bool is_adic) : ring(std::move(r)), adic(is_adic) {}
};

Filtration Filtration::adic(Ideal base) {
    auto state = std::make_shared<State>(base.ring(), true);
    state->unit_flag = is_unit_ideal(base);
    state->cache = std::make_shared<IdealPowerCache>(base);
    state->base = std::move(base);
    return Filtration(std::move(state));
}

Filtration Filtration::explicit_chain(std::vector<Ideal> chain) {
    if (chain.empty()) throw first_level_not_unit("explicit chain is empty");
    if (!is_unit_ideal(chain.front())) {
        throw first_level_not_unit("chain[0] must be the unit ideal, got " +
                                   chain.front().describe());
    }
    for (const Ideal& level : chain) {
        if (level.ring() != chain.front().ring()) {
            throw ring_mismatch("explicit chain mixes rings");
        }
    }
    auto state = std::make_shared<State>(chain.front().ring(), false);
    state->chain = std::move(chain);
    return Filtration(std::move(state));
}

const RingDescriptor& Filtration::ring() const { return state_->ring; }

Ideal Filtration::level(int n) const {
    if (n < 0) throw error("negative filtration level");
    if (state_->adic) return state_->cache->power(n);
    const std::vector<Ideal>& chain = state_->chain;
    std::size_t index = static_cast<std::size_t>(n) < chain.size() ? static_cast<std::size_t>(n)
                                                                   : chain.size() - 1;
    return chain[index];
}

bool Filtration::is_adic() const { return state_->adic; }

const Ideal* Filtration::adic_base() const {
    return state_->adic ? &*state_->base : nullptr;
}

bool Filtration::unit_base_flag() const { return state_->unit_flag; }

int Filtration::validated_to() const { return state_->validated_to.load(); }

Verdict Filtration::validate(int depth) const {
    if (depth < 1) throw error("validate depth must be >= 1");
    std::uint64_t checks = 0;

    // i) level(0) is the whole ring.
    ++checks;
    if (!is_unit_ideal(level(0))) {
        Witness w;
        w.claim = "filtration:i";
        w.a = format_element(level(0).generator());
        w.note = "condition i: level(0) = " + level(0).describe() + " is not the unit ideal";
        return Verdict::fail(std::move(w), checks);
    }

    // ii) descending: the generator of level(n+1) lies in level(n).
    for (int n = 0; n < depth; ++n) {
        ++checks;
        Ideal lower = level(n + 1);
        Ideal upper = level(n);
        if (!contains(upper, lower.generator())) {
            Witness w;
            w.claim = "filtration:ii";
            w.a = format_element(lower.generator());
            w.note = "condition ii at n=" + std::to_string(n) + ": " + w.a + " not in " +
                     upper.describe();
            return Verdict::fail(std::move(w), checks);
        }
    }

    // iii) submultiplicative: level(n)·level(m) ⊆ level(n+m). The n = 0 and
    // m = 0 rows are settled by condition i.
    for (int n = 1; n < depth; ++n) {
        for (int m = n; n + m <= depth; ++m) {
            ++checks;
            Element product = mul(level(n).generator(), level(m).generator());
            if (!contains(level(n + m), product)) {
                Witness w;
                w.claim = "filtration:iii";
                w.a = format_element(product);
                w.note = "condition iii at n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                         ": " + w.a + " not in " + level(n + m).describe();
                return Verdict::fail(std::move(w), checks);
            }
        }
    }

    int seen = state_->validated_to.load();
    while (seen < depth && !state_->validated_to.compare_exchange_weak(seen, depth)) {
    }
    return Verdict::pass(checks);
}

StrongnessReport Filtration::strongness(int depth) const {
    if (validated_to() < depth) {
        throw not_validated("strongness at depth " + std::to_string(depth) +
                            " requires validate to that depth first");
    }
    std::uint64_t checks = 0;
    for (int n = 1; n < depth; ++n) {
        for (int m = n; n + m <= depth; ++m) {
            ++checks;
            Ideal product = mul_ideals(level(n), level(m));
            Ideal target = level(n + m);
            if (!eq_ideals(product, target)) {
                // Validation already gave product ⊆ target, so the level has
                // a generator the product misses.
                bool product_small = !contains(product, target.generator());
                Witness w;
                w.claim = "strongness";
                w.a = format_element(product_small ? target.generator() : product.generator());
                w.note = "level(" + std::to_string(n) + ")*level(" + std::to_string(m) +
                         ") != level(" + std::to_string(n + m) + "): " + w.a + " not in " +
                         (product_small ? product.describe() : target.describe());
                return {depth, Verdict::fail(std::move(w), checks)};
            }
        }
    }
    return {depth, Verdict::pass(checks)};
}

std::optional<int> Filtration::stabilization_index(int max_exponent) const {
    if (state_->adic) return state_->cache->find_stabilization(max_exponent);
    // Start of the constant suffix; with the repeat-last tail every level
    // from there on equals the last entry.
    const std::vector<Ideal>& chain = state_->chain;
    int s = static_cast<int>(chain.size()) - 1;
    while (s > 0 && eq_ideals(chain[static_cast<std::size_t>(s) - 1], chain.back())) --s;
    if (s <= max_exponent) return s;
    return std::nullopt;
}

std::string Filtration::describe() const {
    if (state_->adic) return "adic" + state_->base->describe();
    std::string out = "chain[";
    for (std::size_t i = 0; i < state_->chain.size(); ++i) {
        if (i > 0) out += ",";
        out += state_->chain[i].describe();
    }
    out += "]";
    return out;
}

}  // namespace filtval
