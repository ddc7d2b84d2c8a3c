#ifndef TWINLAB_ERRORS_HPP
#define TWINLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twinlab {

/// A caller-supplied parameter is outside the operation's domain.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input data violates a type invariant (duplicate coordinates, bad symbols, malformed files).
class invalid_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool ok, const std::string& what) {
    if (!ok) throw invalid_parameter(what);
}
}  // namespace detail

}  // namespace twinlab

#endif  // TWINLAB_ERRORS_HPP
