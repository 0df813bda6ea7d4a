#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace invseq {

/// Exact counts. n! leaves 64-bit range at n = 21, so every public count uses this.
using BigInt = boost::multiprecision::cpp_int;

/// Caller violated a documented precondition (bad pattern, bad flag, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeded a configured size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes to the same quantity disagreed. `witness_n` is the first failing size.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, int witness_n)
      : std::runtime_error(what), witness_n_(witness_n) {}
  int witness_n() const noexcept { return witness_n_; }

 private:
  int witness_n_;
};

}  // namespace invseq
