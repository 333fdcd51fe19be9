#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drg {

// Base class for every structured failure the library reports.  `kind()` is a
// stable machine-readable tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Input could not be parsed (array grammar, rule file, CLI argument).
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};

// The intersection-array recurrence produced a non-integral or negative
// intersection number: no graph with this array exists.
struct NonIntegralParameters : Error {
    explicit NonIntegralParameters(const std::string& w)
        : Error("NonIntegralParameters", w) {}
};

// The characteristic polynomial does not split over the rationals, so the
// exact integer eigenvalue search cannot represent the spectrum.
struct IrrationalSpectrum : Error {
    explicit IrrationalSpectrum(const std::string& w)
        : Error("IrrationalSpectrum", w) {}
};

// An eigenvalue multiplicity came out non-integral or non-positive: no graph
// with this array exists.
struct NonIntegralMultiplicity : Error {
    explicit NonIntegralMultiplicity(const std::string& w)
        : Error("NonIntegralMultiplicity", w) {}
};

// A Krein parameter is negative: no graph with this array exists.
struct NegativeKrein : Error {
    explicit NegativeKrein(const std::string& w) : Error("NegativeKrein", w) {}
};

// The requested distance graph is not strongly regular at the p-table level
// (the candidate mu values disagree).
struct NotSRGLike : Error {
    explicit NotSRGLike(const std::string& w) : Error("NotSRGLike", w) {}
};

// No triple of vertices realizes the requested distance configuration.
struct UnrealizableConfig : Error {
    explicit UnrealizableConfig(const std::string& w)
        : Error("UnrealizableConfig", w) {}
};

// Geometric rules were requested for an array whose distance-3 graph does not
// have the strongly-regular parameters the rules are proved for.
struct LatticeCheckFailed : Error {
    explicit LatticeCheckFailed(const std::string& w)
        : Error("LatticeCheckFailed", w) {}
};

// An explicit graph failed the distance-regularity check; the message names a
// witness pair.
struct NotDRG : Error {
    explicit NotDRG(const std::string& w) : Error("NotDRG", w) {}
};

// Enumerating a family would exceed the candidate cap; callers fall back to
// symbolic output.
struct EnumerationTooLarge : Error {
    explicit EnumerationTooLarge(const std::string& w)
        : Error("EnumerationTooLarge", w) {}
};

// A linear system (or a family joined with extra constraints) has no
// solution.  `equations` lists the tags of an inconsistent subset: a rational
// combination of exactly these equations yields 0 = 1.
struct Infeasible : Error {
    std::vector<std::string> equations;
    explicit Infeasible(const std::string& w,
                        std::vector<std::string> eqs = {})
        : Error("Infeasible", w), equations(std::move(eqs)) {}
};

}  // namespace drg
