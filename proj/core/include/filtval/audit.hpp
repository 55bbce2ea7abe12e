#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filtval/claims.hpp"

namespace filtval {

/// How to build a filtration, as configured (kept for echoing).
struct FiltrationSpec {
    bool adic = true;
    std::vector<std::string> ideal_generators;         // adic
    std::vector<std::vector<std::string>> chain;       // explicit
};

struct InstanceSpec {
    RingDescriptor ring;
    FiltrationSpec filtration;
    SamplerSpec sampler;
    std::optional<int> max_level;  // falls back to the config default
};

struct AuditConfig {
    int max_level = kDefaultMaxLevel;
    std::uint64_t seed = 1;
    int validate_depth = 16;
    int surjectivity_k = 8;
    std::vector<InstanceSpec> instances;
    std::vector<ClaimId> claims;
};

/// Parses the JSON configuration; schema violations raise config_error
/// with a JSON-pointer path.
AuditConfig parse_audit_config(const std::string& json_text);

/// Canonical JSON echo of a parsed config (sorted keys, no whitespace).
std::string config_to_json(const AuditConfig& config);

/// Builds the runnable instance for one spec (parses generators, applies
/// config defaults, seeds the sampler).
Instance instantiate(const InstanceSpec& spec, const AuditConfig& config);

struct AuditCell {
    ClaimId claim;
    std::size_t instance_index = 0;
    std::string fingerprint;
    Verdict verdict;
    std::int64_t elapsed_micros = 0;
};

/// Deterministic audit result: with equal config and seed everything but
/// the elapsed timings is byte-identical, and content_hash() covers
/// exactly that timing-free content.
struct AuditReport {
    std::string tool_version;
    std::string nu_semantics;
    std::string config_hash;
    std::string config_echo_json;
    std::vector<AuditCell> cells;

    std::string content_hash() const;
    std::string to_json() const;

    bool any_fails() const;
    bool any_inconclusive() const;

    /// 0 clean, 1 any failure, 3 inconclusive-only.
    int exit_code() const;
};

/// Runs every (instance, claim) cell of the config matrix.
AuditReport audit(const AuditConfig& config);

}  // namespace filtval
