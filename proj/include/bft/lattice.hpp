#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bft {

// Frames are capped so that dense 2^n vectors stay materializable.
inline constexpr int kMaxFrameSize = 16;

// Negative masses above -kMassClampEps are rounded to zero; anything lower
// is a hard validation failure.
inline constexpr double kMassClampEps = 1e-12;

// Tolerance on |sum(masses) - 1|.
inline constexpr double kSumEps = 1e-9;

/// Subset of the frame encoded as a bit pattern. Bit i (LSB = i = 0) set
/// means element w_{i+1} is in the subset, so index 0 is the empty set and
/// index 2^n - 1 is the full frame.
using SubsetIndex = std::uint32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a raw vector fails the mass-function invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

inline int cardinality(SubsetIndex f) { return std::popcount(f); }

class Frame {
public:
    explicit Frame(int n);
    Frame(int n, std::vector<std::string> labels);

    int size() const { return n_; }
    SubsetIndex subset_count() const { return SubsetIndex{1} << n_; }
    SubsetIndex full_set() const { return subset_count() - 1; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Name of element i (0-based): the label if present, else "w<i+1>".
    std::string element_name(int i) const;
    /// Render a subset as "{w1,w3}"; the empty set renders as "{}".
    std::string subset_name(SubsetIndex f) const;

    bool operator==(const Frame& other) const { return n_ == other.n_; }
    bool operator!=(const Frame& other) const { return n_ != other.n_; }

private:
    int n_;
    std::vector<std::string> labels_;  // empty, or exactly n_ distinct names
};

/// All subsets with |F| = k, in ascending numeric order. The ascending order
/// is load-bearing: the layered passes over the lattice depend on it.
std::vector<SubsetIndex> subsets_by_cardinality(const Frame& frame, int k);

/// Subsets obtained by removing exactly one element, ascending. |F| >= 1.
std::vector<SubsetIndex> children(SubsetIndex f);

/// Subsets obtained by adding exactly one element, ascending.
std::vector<SubsetIndex> parents(const Frame& frame, SubsetIndex f);

/// Computed classification flags; never stored, recomputed per query.
struct BodyKind {
    bool normalized = false;    // m(empty) = 0
    bool bayesian = false;      // all focal sets singletons
    bool simple = false;        // exactly two focal sets, one of them the frame
    bool non_dogmatic = false;  // m(frame) > 0
    bool consonant = false;     // focal sets form a nested chain
};

/// Checks a raw vector against the mass-function invariants without
/// constructing anything. Returns a diagnostic naming the violated invariant
/// and the offending index, or nullopt if the vector is a valid BPA.
std::optional<std::string> check_mass_vector(std::span<const double> masses);

/// Immutable basic probability assignment over the subsets of a frame.
/// Construction validates and clamps; every operation on mass functions in
/// this library returns a new value.
class MassFunction {
public:
    /// Validates masses (length 2^n, clamped non-negativity, unit sum).
    /// Throws ValidationError with a diagnostic on failure.
    MassFunction(Frame frame, std::vector<double> masses);

    /// Infers the frame from the vector length, which must be a power of two.
    static MassFunction from_vector(std::vector<double> masses);

    const Frame& frame() const { return frame_; }
    const std::vector<double>& masses() const { return masses_; }
    double operator[](SubsetIndex f) const { return masses_[f]; }
    double empty_mass() const { return masses_[0]; }
    double full_mass() const { return masses_[frame_.full_set()]; }
    int frame_size() const { return frame_.size(); }
    SubsetIndex subset_count() const { return frame_.subset_count(); }

    /// Subsets with strictly positive mass, ascending.
    std::vector<SubsetIndex> focal_sets() const;

private:
    Frame frame_;
    std::vector<double> masses_;
};

BodyKind classify(const MassFunction& m);

}  // namespace bft
