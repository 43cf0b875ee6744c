#pragma once

#include <stdexcept>
#include <string>

namespace matroid_xf {

/// Malformed arguments: out-of-range elements, non-bases, loops, bad graphs.
class InvalidInput : public std::invalid_argument {
  public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration or exact search would exceed its configured cap.
class ResourceLimit : public std::runtime_error {
  public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// A guaranteed mathematical fact failed to hold. Signals a bug or a
/// broken rank oracle, never bad user input.
class InternalConsistency : public std::logic_error {
  public:
    explicit InternalConsistency(const std::string& what) : std::logic_error(what) {}
};

/// slack_by_ordering called with a source basis that is not tight at the flat.
class FullIntersectionRequired : public InvalidInput {
  public:
    explicit FullIntersectionRequired(const std::string& what) : InvalidInput(what) {}
};

/// Alice was handed a flacet that no member of the family covers.
class NotAHittingFamily : public InvalidInput {
  public:
    explicit NotAHittingFamily(const std::string& what) : InvalidInput(what) {}
};

}  // namespace matroid_xf
