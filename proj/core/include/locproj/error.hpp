#pragma once

#include <stdexcept>
#include <string>

namespace locproj {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroGradeDenominator : Error {
    explicit ZeroGradeDenominator(const std::string& w) : Error(w) {}
};
struct EmptyWindow : Error {
    explicit EmptyWindow(const std::string& w) : Error(w) {}
};
struct OutOfWindow : Error {
    explicit OutOfWindow(const std::string& w) : Error(w) {}
};
struct UnitWeight : Error {
    explicit UnitWeight(const std::string& w) : Error(w) {}
};
struct IndexTooLarge : Error {
    explicit IndexTooLarge(const std::string& w) : Error(w) {}
};
struct BadRank : Error {
    explicit BadRank(const std::string& w) : Error(w) {}
};
struct DegenerateGrading : Error {
    explicit DegenerateGrading(const std::string& w) : Error(w) {}
};
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& w) : Error(w) {}
};
struct Unstable : Error {
    explicit Unstable(const std::string& w) : Error(w) {}
};
struct BadRange : Error {
    explicit BadRange(const std::string& w) : Error(w) {}
};
struct NoStabilization : Error {
    explicit NoStabilization(const std::string& w) : Error(w) {}
};

} // namespace locproj
