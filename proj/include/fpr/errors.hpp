#pragma once

#include <stdexcept>
#include <string>

namespace fpr {

// Numeric failure as opposed to a malformed argument: conditioning on a
// zero-mass event, or asking for a rate over an empty set of positives.
// The CLI maps this to exit code 3, argument errors to exit code 2.
class degenerate_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_arg(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void require_domain(bool cond, const std::string& msg) {
    if (!cond) throw std::domain_error(msg);
}

}  // namespace detail
}  // namespace fpr
