#pragma once

#include <stdexcept>
#include <string>

namespace romdom {

// Bad family parameters, bad labeling domain, bad CLI arguments, ...
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph or labeling text. line is 1-based, 0 when not tied to a line.
struct ParseError : InputError {
    ParseError(const std::string& what, int line_no)
        : InputError(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
    int line;
};

// The requested variant has no feasible solution on this graph (degree precondition).
struct InfeasibleError : InputError {
    explicit InfeasibleError(const std::string& what) : InputError(what) {}
};

// A search budget (node count or wall clock) ran out. Carries the best bounds
// proved so far, so callers can still report something useful.
struct ResourceError : std::runtime_error {
    ResourceError(const std::string& what, long long lower, long long upper)
        : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}
    long long lower_bound;  // best proved lower bound, -1 if none
    long long upper_bound;  // best incumbent value, -1 if none
};

}  // namespace romdom
