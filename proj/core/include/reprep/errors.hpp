#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "reprep/rational.hpp"

namespace reprep {

enum class Errc {
    SearchSpaceTooLarge,
    EmptyGame,
    DimensionMismatch,
    EmptyRectangle,
    IndexOutOfRange,
    InvalidSpec,
    UndefinedVertex,
    NotRegular,
    EpsOutOfRange,
    InvalidDensity,
    CircuitTooLarge,
    CodeMismatch,
    GadgetTooLarge,
    CloudTooLarge,
    WalkSpaceTooLarge,
    NotComposedGraph,
    CoordinateEmbeddingViolated,
    ImageNotInH,
    NotRobustEnough,
    NoGoodBucket,
    ConfigInvalid,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case Errc::EmptyGame: return "EmptyGame";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::EmptyRectangle: return "EmptyRectangle";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::UndefinedVertex: return "UndefinedVertex";
        case Errc::NotRegular: return "NotRegular";
        case Errc::EpsOutOfRange: return "EpsOutOfRange";
        case Errc::InvalidDensity: return "InvalidDensity";
        case Errc::CircuitTooLarge: return "CircuitTooLarge";
        case Errc::CodeMismatch: return "CodeMismatch";
        case Errc::GadgetTooLarge: return "GadgetTooLarge";
        case Errc::CloudTooLarge: return "CloudTooLarge";
        case Errc::WalkSpaceTooLarge: return "WalkSpaceTooLarge";
        case Errc::NotComposedGraph: return "NotComposedGraph";
        case Errc::CoordinateEmbeddingViolated: return "CoordinateEmbeddingViolated";
        case Errc::ImageNotInH: return "ImageNotInH";
        case Errc::NotRobustEnough: return "NotRobustEnough";
        case Errc::NoGoodBucket: return "NoGoodBucket";
        case Errc::ConfigInvalid: return "ConfigInvalid";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code) {}

    Errc code() const { return code_; }
    bool is_cap_exceeded() const {
        switch (code_) {
            case Errc::SearchSpaceTooLarge:
            case Errc::CircuitTooLarge:
            case Errc::GadgetTooLarge:
            case Errc::CloudTooLarge:
            case Errc::WalkSpaceTooLarge:
                return true;
            default:
                return false;
        }
    }

private:
    Errc code_;
};

/// Raised by extract_rectangle when the measured winning fraction does not
/// clear the 1 - eps threshold. Carries the measurement.
class NotRobustEnoughError : public Error {
public:
    NotRobustEnoughError(Rat measured_fraction, Rat threshold)
        : Error(Errc::NotRobustEnough,
                "winning fraction " + measured_fraction.str() +
                    " below 1-eps = " + threshold.str()),
          measured_fraction_(measured_fraction),
          threshold_(threshold) {}

    Rat measured_fraction() const { return measured_fraction_; }
    Rat threshold() const { return threshold_; }

private:
    Rat measured_fraction_;
    Rat threshold_;
};

/// Execution caps. Operations that enumerate exponential spaces check these
/// first and fail fast with the matching *TooLarge error.
struct Caps {
    std::uint64_t strategy_space = std::uint64_t(1) << 24; // alphabet^(|X|+|Y|)
    std::uint64_t tuple_space = std::uint64_t(1) << 20;    // |E|^k for full products
    std::uint64_t subset_space = std::uint64_t(1) << 22;   // 2^|X| + 2^|Y| for mixing
    std::uint64_t rectangle_pairs = std::uint64_t(1) << 22;
    std::uint64_t circuit_size = 1 << 16;                  // inputs + gates
    std::uint64_t gadget_size = 1 << 12;                   // vertices per gadget
    std::uint64_t cloud_size = 1 << 12;                    // vertices per cloud
    std::uint64_t walk_count = std::uint64_t(1) << 48;     // total (2t+1)-walks

    /// REPREP_CAP_OVERRIDE=<n> pins every cap to n (CI escape hatch).
    static Caps from_env();
};

inline Caps Caps::from_env() {
    Caps caps;
    if (const char* v = std::getenv("REPREP_CAP_OVERRIDE")) {
        std::uint64_t n = std::strtoull(v, nullptr, 10);
        if (n > 0) {
            caps.strategy_space = caps.tuple_space = caps.subset_space = n;
            caps.rectangle_pairs = caps.circuit_size = caps.gadget_size = n;
            caps.cloud_size = caps.walk_count = n;
        }
    }
    return caps;
}

} // namespace reprep
