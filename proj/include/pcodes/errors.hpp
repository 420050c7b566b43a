#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcodes {

/// Input that violates an operation's precondition (bad index, foreign vertex,
/// length mismatch, malformed string).
class RejectedInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A family or construction parameter outside its admissible range.
class InvalidParameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap would be exceeded.
class ResourceLimit : public std::runtime_error {
public:
  ResourceLimit(std::string cap_name, std::uint64_t cap)
      : std::runtime_error("resource limit exceeded: " + cap_name + " = " +
                           std::to_string(cap)),
        cap_name_(std::move(cap_name)), cap_(cap) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::string cap_name_;
  std::uint64_t cap_;
};

}  // namespace pcodes
