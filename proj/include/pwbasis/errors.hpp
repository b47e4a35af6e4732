// Copyright (c) 2026 pwbasis developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pwbasis {

/// Base for all library errors. `kind()` is a stable machine-readable tag.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

/// Two cubes of the spectrum intersect.
class OverlapError : public Error {
  public:
    explicit OverlapError(const std::string& msg) : Error("OverlapError", msg) {}
};

/// Ragged or wrong-length coordinate vectors.
class DimensionError : public Error {
  public:
    explicit DimensionError(const std::string& msg) : Error("DimensionError", msg) {}
};

/// Invalid scalar parameter (nonpositive side length, bad radius, ...).
class ValueError : public Error {
  public:
    explicit ValueError(const std::string& msg) : Error("ValueError", msg) {}
};

/// Translated cells failed to tile a cube within tolerance.
class TilingError : public Error {
  public:
    explicit TilingError(const std::string& msg) : Error("TilingError", msg) {}
};

/// Rejection sampling hit max_tries without an acceptable determinant.
class ShiftSearchExhausted : public Error {
  public:
    ShiftSearchExhausted(const std::string& msg, double best)
        : Error("ShiftSearchExhausted", msg), best_certificate_(best) {}
    double best_certificate() const noexcept { return best_certificate_; }

  private:
    double best_certificate_;
};

/// A per-cell linear system turned out singular while solving.
class SingularSystem : public Error {
  public:
    explicit SingularSystem(const std::string& msg) : Error("SingularSystem", msg) {}
};

/// Extremal-eigenvalue iteration failed to reach the residual target.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& msg, long iterations)
        : Error("ConvergenceError", msg), iterations_(iterations) {}
    long iterations() const noexcept { return iterations_; }

  private:
    long iterations_;
};

/// Density window does not fit inside the populated lattice region.
class WindowTooLarge : public Error {
  public:
    explicit WindowTooLarge(const std::string& msg) : Error("WindowTooLarge", msg) {}
};

/// approximate_cover could not produce a nonempty inner union.
class EmptyInner : public Error {
  public:
    explicit EmptyInner(const std::string& msg) : Error("EmptyInner", msg) {}
};

/// A data file failed to parse.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

/// An oracle threw while being sampled on the lattice.
class SampleError : public Error {
  public:
    explicit SampleError(const std::string& msg) : Error("SampleError", msg) {}
};

}  // namespace pwbasis
