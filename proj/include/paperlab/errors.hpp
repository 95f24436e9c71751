#ifndef PAPERLAB_ERRORS_HPP
#define PAPERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paperlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CompositionMismatch : Error {
  explicit CompositionMismatch(const std::string& m) : Error(m) {}
};
struct EmptyBoundary : Error {
  explicit EmptyBoundary(const std::string& m) : Error(m) {}
};
struct NotASubcomplex : Error {
  explicit NotASubcomplex(const std::string& m) : Error(m) {}
};
struct UnsupportedPushout : Error {
  explicit UnsupportedPushout(const std::string& m) : Error(m) {}
};
struct ClosureBoundExceeded : Error {
  explicit ClosureBoundExceeded(const std::string& m) : Error(m) {}
};
struct InfiniteNerve : Error {
  explicit InfiniteNerve(const std::string& m) : Error(m) {}
};
struct TruncationTooSmall : Error {
  explicit TruncationTooSmall(const std::string& m) : Error(m) {}
};
struct NotLevelwiseEquivalence : Error {
  explicit NotLevelwiseEquivalence(const std::string& m) : Error(m) {}
};
struct FeasibilityRefused : Error {
  explicit FeasibilityRefused(const std::string& m) : Error(m) {}
};

}  // namespace paperlab

#endif
