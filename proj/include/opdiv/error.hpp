#ifndef OPDIV_ERROR_HPP_
#define OPDIV_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace opdiv {

enum class ErrorCode {
  DisconnectedGraph,
  SelfLoop,
  DuplicateEdge,
  EndpointOutOfRange,
  InvalidLeaders,
  TooFewNodes,
  ArmTooShort,
  NotATree,
  NotAYTree,
  LeaderNotLeaf,
  NotAFollower,
  SolveFailure,
  LeaderOrderViolation,
  UnstableStep,
  OpinionOutOfRange,
  TooFewFollowers,
  UnsupportedBinCount,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type; code() lets
// callers branch without parsing the message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace opdiv

#endif // OPDIV_ERROR_HPP_
