#pragma once

#include <stdexcept>
#include <string>

namespace bouncer {

/// The mirror construction vanishes identically (z0 == 0).
class DegenerateMirrorError : public std::domain_error {
public:
    DegenerateMirrorError()
        : std::domain_error("degenerate mirror solution; use special_solutions module") {}
};

/// A quantity that only exists when the classical trajectory hits the wall.
class NoCollisionError : public std::domain_error {
public:
    NoCollisionError()
        : std::domain_error("collision time undefined: requires x0 < 0 and p0 > 0") {}
};

/// The sampled state has not decayed at a non-wall grid edge.
class TailCaptureError : public std::runtime_error {
public:
    TailCaptureError(const std::string& what, double suggested_x_min)
        : std::runtime_error(what), suggested_x_min_(suggested_x_min) {}

    double suggested_x_min() const { return suggested_x_min_; }

private:
    double suggested_x_min_;
};

/// A finite-difference estimate failed its internal step-halving check.
class NonConvergedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bouncer
