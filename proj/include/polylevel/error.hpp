#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polylevel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  enum class Kind { EmptyInput, NotConnected, MalformedGrid };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class NotThin : public Error {
 public:
  NotThin() : Error("NotThin: polyomino contains a 2x2 block of cells") {}
};

class NotSimple : public Error {
 public:
  NotSimple() : Error("NotSimple: polyomino has a hole") {}
};

class NotAPath : public Error {
 public:
  NotAPath() : Error("NotAPath: polyomino is not a path") {}
};

class RankTooLarge : public Error {
 public:
  RankTooLarge(std::size_t rank, std::size_t bound)
      : Error("RankTooLarge: rank " + std::to_string(rank) + " exceeds bound " +
              std::to_string(bound)) {}
};

/// Raised when a random linear system of parameters keeps failing the
/// zero-dimensionality / Hilbert-function guard.
class LsopFailure : public Error {
 public:
  LsopFailure(const std::string& what, std::uint64_t seed)
      : Error("LsopFailure: " + what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

class ClaimViolated : public Error {
 public:
  ClaimViolated(std::string which, std::string witness)
      : Error("ClaimViolated: " + which + ": " + witness),
        which_(std::move(which)),
        witness_(std::move(witness)) {}
  const std::string& which() const noexcept { return which_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string which_;
  std::string witness_;
};

class InconsistentClassification : public Error {
 public:
  using Error::Error;
};

class ModeInsufficient : public Error {
 public:
  using Error::Error;
};

}  // namespace polylevel
