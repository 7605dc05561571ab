#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

// Domain errors map to CLI exit code 1; usage errors are handled by the CLI parser.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured cap (enumeration, solver, sampler, table) was exceeded.
class CapacityError : public DomainError {
public:
    CapacityError(const std::string& what, long long requested, long long cap)
        : DomainError(what + ": requested " + std::to_string(requested) + " exceeds cap " +
                      std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    long long requested() const noexcept { return requested_; }
    long long cap() const noexcept { return cap_; }

private:
    long long requested_;
    long long cap_;
};

// Rejection sampling gave up before accepting a draw.
class RetryExhaustedError : public DomainError {
public:
    RetryExhaustedError(const std::string& what, double acceptance_rate)
        : DomainError(what + " (observed acceptance rate " + std::to_string(acceptance_rate) + ")"),
          acceptance_rate_(acceptance_rate) {}

    double acceptance_rate() const noexcept { return acceptance_rate_; }

private:
    double acceptance_rate_;
};

} // namespace ferrers
