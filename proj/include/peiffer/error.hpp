#ifndef PEIFFER_ERROR_HPP_
#define PEIFFER_ERROR_HPP_

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace peiffer {

  // Dense 0-based element index inside a FiniteGroup.
  using Elem = std::uint32_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or structurally inconsistent input (bad shapes, failed
  // validation on load, mismatched group references).
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // A documented precondition of an operation does not hold.
  class PreconditionFailed : public Error {
   public:
    using Error::Error;
  };

  // A failed axiom together with the elements that exhibit the failure.
  struct Violation {
    std::string         condition;
    std::vector<Elem>   witness;
    std::string         detail;

    std::string message() const {
      std::ostringstream os;
      os << condition << " fails";
      if (!witness.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < witness.size(); ++i) {
          os << (i ? ", " : "") << witness[i];
        }
        os << ")";
      }
      if (!detail.empty()) {
        os << ": " << detail;
      }
      return os.str();
    }
  };

}  // namespace peiffer

#endif  // PEIFFER_ERROR_HPP_
