#pragma once

#include <random>

#include "bft/lattice.hpp"

namespace bft {

enum class BpaKind { any, normalized, consonant, bayesian, nondogmatic, subnormal };

const char* to_string(BpaKind kind);
BpaKind bpa_kind_from_string(const std::string& name);

/// Seed-deterministic mass-function sampler. Built on mt19937_64 with an
/// explicit bits-to-double mapping, so a given seed yields the same stream on
/// every platform; std::uniform_real_distribution is deliberately avoided.
class BpaSampler {
public:
    explicit BpaSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform();                 // [0, 1)
    double uniform(double lo, double hi);
    std::uint64_t next() { return rng_(); }

    /// Masses drawn from a flat Dirichlet over the support selected by kind.
    MassFunction sample(const Frame& frame, BpaKind kind);

private:
    std::mt19937_64 rng_;
};

}  // namespace bft
