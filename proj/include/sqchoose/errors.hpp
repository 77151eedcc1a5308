#pragma once

#include <stdexcept>
#include <string>

namespace sqchoose {

/// Bad input or a violated precondition (malformed file, hypothesis not met).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A claim the algorithms rely on turned out false on some input: a missing
/// configuration, an empty residual list, an unorientable sponsorship graph.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sqchoose
