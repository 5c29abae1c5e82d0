#include "bft/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bft {

const char* to_string(BpaKind kind) {
    switch (kind) {
        case BpaKind::any: return "any";
        case BpaKind::normalized: return "normalized";
        case BpaKind::consonant: return "consonant";
        case BpaKind::bayesian: return "bayesian";
        case BpaKind::nondogmatic: return "nondogmatic";
        case BpaKind::subnormal: return "subnormal";
    }
    return "?";
}

BpaKind bpa_kind_from_string(const std::string& name) {
    if (name == "any") return BpaKind::any;
    if (name == "normalized") return BpaKind::normalized;
    if (name == "consonant") return BpaKind::consonant;
    if (name == "bayesian") return BpaKind::bayesian;
    if (name == "nondogmatic") return BpaKind::nondogmatic;
    if (name == "subnormal") return BpaKind::subnormal;
    throw Error("unknown BPA kind: " + name);
}

double BpaSampler::uniform() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double BpaSampler::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

namespace {

// Flat Dirichlet over the given support via normalized exponentials.
void fill_dirichlet(BpaSampler& sampler, const std::vector<SubsetIndex>& support,
                    std::vector<double>& masses) {
    double total = 0.0;
    std::vector<double> draws(support.size());
    for (double& d : draws) {
        d = -std::log(1.0 - sampler.uniform());
        total += d;
    }
    if (total <= 0.0) {
        draws.assign(draws.size(), 1.0);
        total = static_cast<double>(draws.size());
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
        masses[support[i]] = draws[i] / total;
    }
}

}  // namespace

MassFunction BpaSampler::sample(const Frame& frame, BpaKind kind) {
    const SubsetIndex count = frame.subset_count();
    for (;;) {
        std::vector<double> masses(count, 0.0);
        std::vector<SubsetIndex> support;
        switch (kind) {
            case BpaKind::any:
            case BpaKind::subnormal:
                for (SubsetIndex f = 0; f < count; ++f) support.push_back(f);
                break;
            case BpaKind::normalized:
            case BpaKind::nondogmatic:
                for (SubsetIndex f = 1; f < count; ++f) support.push_back(f);
                break;
            case BpaKind::bayesian:
                for (int i = 0; i < frame.size(); ++i) support.push_back(SubsetIndex{1} << i);
                break;
            case BpaKind::consonant: {
                // Random nested chain: shuffle the elements, take prefixes.
                std::vector<int> perm(static_cast<std::size_t>(frame.size()));
                std::iota(perm.begin(), perm.end(), 0);
                for (std::size_t i = perm.size(); i > 1; --i) {
                    const std::size_t j = static_cast<std::size_t>(next() % i);
                    std::swap(perm[i - 1], perm[j]);
                }
                SubsetIndex chain = 0;
                for (int e : perm) {
                    chain |= SubsetIndex{1} << e;
                    support.push_back(chain);
                }
                break;
            }
        }
        fill_dirichlet(*this, support, masses);
        if (kind == BpaKind::nondogmatic && masses[frame.full_set()] <= 1e-9) continue;
        if (kind == BpaKind::subnormal && masses[0] <= 1e-9) continue;
        return MassFunction(frame, std::move(masses));
    }
}

}  // namespace bft
