#ifndef SEPGRAPH_ERRORS_HPP
#define SEPGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sepgraph {

enum class ErrorKind {
  // input / syntax
  IoError,
  SyntaxError,
  // semantic / validation
  DuplicateName,
  UnknownVertex,
  UnknownBlock,
  UnknownSymbol,
  BlockOverlap,
  BlockIncomplete,
  EmptyBlock,
  BlockAtWrongVertex,
  NotHereditary,
  NotCSaturated,
  NotTriviallySeparated,
  BlockMismatch,
  InvalidParameters,
  LabelCountMismatch,
  // resource limits
  StepLimitExceeded,
  TooLarge,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Process exit code class: 1 = I/O or syntax, 2 = semantic, 3 = resource.
  int exit_code() const {
    switch (kind_) {
    case ErrorKind::IoError:
    case ErrorKind::SyntaxError:
      return 1;
    case ErrorKind::StepLimitExceeded:
    case ErrorKind::TooLarge:
      return 3;
    default:
      return 2;
    }
  }

private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
  case ErrorKind::IoError: return "IoError";
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::DuplicateName: return "DuplicateName";
  case ErrorKind::UnknownVertex: return "UnknownVertex";
  case ErrorKind::UnknownBlock: return "UnknownBlock";
  case ErrorKind::UnknownSymbol: return "UnknownSymbol";
  case ErrorKind::BlockOverlap: return "BlockOverlap";
  case ErrorKind::BlockIncomplete: return "BlockIncomplete";
  case ErrorKind::EmptyBlock: return "EmptyBlock";
  case ErrorKind::BlockAtWrongVertex: return "BlockAtWrongVertex";
  case ErrorKind::NotHereditary: return "NotHereditary";
  case ErrorKind::NotCSaturated: return "NotCSaturated";
  case ErrorKind::NotTriviallySeparated: return "NotTriviallySeparated";
  case ErrorKind::BlockMismatch: return "BlockMismatch";
  case ErrorKind::InvalidParameters: return "InvalidParameters";
  case ErrorKind::LabelCountMismatch: return "LabelCountMismatch";
  case ErrorKind::StepLimitExceeded: return "StepLimitExceeded";
  case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Error";
}

} // namespace sepgraph

#endif
