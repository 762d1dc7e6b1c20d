#pragma once

#include <stdexcept>
#include <string>

namespace hypembed {

/// Base exception for contract violations and failed constructions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by a pipeline stage; carries the stage tag.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error("[" + stage + "] " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace hypembed
