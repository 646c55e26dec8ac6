// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bochner {

struct FrameInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSymmetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotJCommuting : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotJLinear : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutsideDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownName : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateDraw : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BochnerFlatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProbeSearchFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentBundle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse errors carry a 1-based line number (0 = not line-specific).
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace bochner
