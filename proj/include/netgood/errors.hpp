#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace netgood {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Document / input validation failure (bad schema, broken invariant).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Exact combinatorial test requested above its enumeration cap.
class DimensionTooLarge : public Error {
public:
    DimensionTooLarge(int n_, int cap_)
        : Error("dimension " + std::to_string(n_) + " exceeds enumeration cap " +
                std::to_string(cap_)),
          n(n_), cap(cap_) {}
    int n;
    int cap;
};

/// Iterative eigenvalue computation failed to converge within its cap.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// Complementary pivoting exceeded its pivot budget.
class CycleDetected : public Error {
public:
    using Error::Error;
};

/// Linear system is numerically singular.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// A benefit function was evaluated outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A marginal cost lies outside the range of the agent's marginal benefit.
class CostOutOfRange : public Error {
public:
    CostOutOfRange(std::vector<int> agents_, const std::string& what_)
        : Error(what_), agents(std::move(agents_)) {}
    std::vector<int> agents;
};

/// A perceived (network-modified) cost admits no finite interior target.
class PerceivedCostOutOfRange : public Error {
public:
    PerceivedCostOutOfRange(std::vector<int> agents_, const std::string& what_)
        : Error(what_), agents(std::move(agents_)) {}
    std::vector<int> agents;
};

/// A check that only applies to interior profiles was handed one with
/// positive slack.
class NotInterior : public Error {
public:
    using Error::Error;
};

}  // namespace netgood
