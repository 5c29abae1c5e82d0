#pragma once

#include <string>

#include "bft/ben.hpp"
#include "bft/canonical.hpp"
#include "bft/isopignistic.hpp"
#include "bft/lattice.hpp"
#include "bft/measures.hpp"
#include "bft/transforms.hpp"

namespace bft {

/// Raised when a document does not match one of the wire formats. The CLI
/// maps this to exit code 2; semantic failures (e.g. masses that do not sum
/// to 1) stay ValidationError / Error and map to exit code 1.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Shortest round-tripping decimal form, locale-independent.
std::string format_double(double value);

// Canonical mass-function document:
//   {"n": 3, "order": "binary-lsb-w1", "masses": [ ... 2^n entries ... ]}
std::string to_json(const MassFunction& m);
MassFunction mass_from_json(const std::string& text);

// {"n": 3, "order": "binary-lsb-w1", "kind": "q", "values": [...]}
std::string to_json(const SetFunction& s);

// {"n": 3, "kind": "betp"|"betpn", "values": [ ... n entries ... ]}
std::string to_json(const PignisticDistribution& p);

// {"n": 3, "form": "tau", "empty": 0.0, "poss": [...],
//  "commitment": {"3": 1.0, ...}}   (keys are decimal subset indices)
std::string to_json(const IsoDecomposition& d);
IsoDecomposition decomposition_from_json(const std::string& text);

// {"n": 3, "kind": "sigma"|"v", "values": {"0": 1.5, ...}} over the defined
// domain (sigma: proper subsets; v: nonempty subsets).
std::string to_json(const WeightFunction& w);
WeightFunction weights_from_json(const std::string& text);

// {"n": 3, "kind": "t", "values": [ ... 2^n entries ... ]}
std::string to_json(const TFunction& t);
TFunction t_from_json(const std::string& text);

// {"yager": ..., "propensity_spec": ..., "commitment_spec": number|"undefined",
//  "entropy_bits": ...}
std::string to_json(const MeasureReport& r);

// {"n": 3, "tau": {"7": 1.0, ...}, "xi": {"7>3": 0.333, ...}}; omitted tau
// entries default to 0, omitted xi entries to the uniform split.
std::string to_json(const BeliefEvolutionNetwork& net);
BeliefEvolutionNetwork network_from_json(const std::string& text);

}  // namespace bft
