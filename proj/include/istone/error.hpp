#ifndef ISTONE_ERROR_HPP_
#define ISTONE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace istone {

// All library errors carry a short machine-readable code ("NotAssociative",
// "NotDistributive", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace istone

#endif  // ISTONE_ERROR_HPP_
