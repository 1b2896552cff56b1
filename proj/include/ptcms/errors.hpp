#pragma once

#include <stdexcept>
#include <string>

namespace ptcms {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (unknown group, 1+4g < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A potential or wavefunction was evaluated at one of its poles.
class SingularEvaluation : public Error {
 public:
  using Error::Error;
};

/// Non-terminating series or a degenerate lower parameter.
class UnsupportedEvaluation : public Error {
 public:
  using Error::Error;
};

/// Non-integer power evaluated on the negative real axis.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

/// Orbit construction produced two different deformed roots for one label.
class ClosureFailure : public Error {
 public:
  ClosureFailure(const std::string& what, std::string word)
      : Error(what + " (word " + word + ")"), word_(std::move(word)) {}

  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

}  // namespace ptcms
