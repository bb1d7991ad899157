#ifndef SYLV_ERROR_HPP
#define SYLV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sylv {

  // Root of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Bad caller input: malformed text, symbols outside the rank, non-standard
  // arguments where standard ones are required, unknown node locators.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  class RankError : public InputError {
   public:
    using InputError::InputError;
  };

  class NotStandardError : public InputError {
   public:
    using InputError::InputError;
  };

  class InvalidLocatorError : public InputError {
   public:
    using InputError::InputError;
  };

  // An enumeration guard tripped. Never a silent truncation.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::size_t cap)
        : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

    [[nodiscard]] std::size_t cap() const noexcept {
      return cap_;
    }

   private:
    std::size_t cap_;
  };

  // A graph expected to be connected was not. Carries the vertex partition
  // (indices into the graph's vertex list).
  class DisconnectedError : public Error {
   public:
    DisconnectedError(std::string const&                    what,
                      std::vector<std::vector<std::size_t>> parts)
        : Error(what), parts_(std::move(parts)) {}

    [[nodiscard]] std::vector<std::vector<std::size_t>> const&
    parts() const noexcept {
      return parts_;
    }

   private:
    std::vector<std::vector<std::size_t>> parts_;
  };

  // A structural claim the algorithms rely on failed at runtime. This is a
  // bug (or a counterexample), never bad input.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace sylv

#endif  // SYLV_ERROR_HPP
