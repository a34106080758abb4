#pragma once

#include <stdexcept>
#include <string>

namespace skeinym {

// Error taxonomy shared by every module.  kind() is stable and is what the
// command line tool reports; what() carries the human-readable detail.
enum class ErrorKind {
  Domain,         // argument outside an operation's domain
  Admissibility,  // color triple fails the admissibility conditions
  Degenerate,     // division by a vanishing network evaluation
  Divergence,     // series has no limit for the given parameter
  Genus,          // operation undefined at this genus
  Spine,          // malformed spine description
  Regime,         // parameter regime not accepted by the operation
  Internal,       // broken internal invariant
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::Domain, w) {}
};
struct AdmissibilityError : Error {
  explicit AdmissibilityError(const std::string& w)
      : Error(ErrorKind::Admissibility, w) {}
};
struct DegenerateError : Error {
  explicit DegenerateError(const std::string& w)
      : Error(ErrorKind::Degenerate, w) {}
};
struct DivergenceError : Error {
  explicit DivergenceError(const std::string& w)
      : Error(ErrorKind::Divergence, w) {}
};
struct GenusError : Error {
  explicit GenusError(const std::string& w) : Error(ErrorKind::Genus, w) {}
};
struct SpineError : Error {
  explicit SpineError(const std::string& w) : Error(ErrorKind::Spine, w) {}
};
struct RegimeError : Error {
  explicit RegimeError(const std::string& w) : Error(ErrorKind::Regime, w) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error(ErrorKind::Internal, w) {}
};

}  // namespace skeinym
