#ifndef CLOSCOMB_ERRORS_HPP
#define CLOSCOMB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace closcomb {

// Enumeration asked to go past the configured brute-force bound.
struct oracle_limit_error : std::runtime_error {
    oracle_limit_error(std::size_t requested, std::size_t bound)
        : std::runtime_error("enumeration size " + std::to_string(requested) +
                             " exceeds oracle bound " + std::to_string(bound)),
          requested(requested), bound(bound) {}
    std::size_t requested;
    std::size_t bound;
};

// A sampler was asked for a size at which the class is empty.
struct empty_class_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric evaluation outside a generating function's disc of convergence,
// or other analytic preconditions.  The message names the offending
// singularity or level.
struct eval_domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boltzmann rejection gave up; carries the observed acceptance rate.
struct retry_limit_error : std::runtime_error {
    retry_limit_error(std::uint64_t attempts, double acceptance_rate)
        : std::runtime_error("boltzmann rejection exceeded " +
                             std::to_string(attempts) + " attempts (acceptance rate " +
                             std::to_string(acceptance_rate) + ")"),
          attempts(attempts), acceptance_rate(acceptance_rate) {}
    std::uint64_t attempts;
    double acceptance_rate;
};

struct parse_error : std::runtime_error {
    parse_error(std::string msg, std::size_t line, std::size_t column)
        : std::runtime_error(std::move(msg)), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

} // namespace closcomb

#endif
