#pragma once

#include <stdexcept>
#include <string>

namespace isoptic {

enum class ErrorKind {
  // Caller supplied something outside the documented contract (exit code 2).
  Validation,
  UnsupportedGeometry,
  ImproperFocus,
  DegenerateConic,
  NotOnCurve,
  // The input is well formed but the math has no answer there (exit code 3).
  Domain,
  NoProperAngle,
  DegenerateJoin,
  IdealPoint,
  SingularPoint,
  OnCurve,
  NoTangents,
  ImproperPoint,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors that stem from invalid parameters rather than from the
  /// evaluation point or the numerics.
  bool is_validation() const noexcept {
    switch (kind_) {
      case ErrorKind::Validation:
      case ErrorKind::UnsupportedGeometry:
      case ErrorKind::ImproperFocus:
      case ErrorKind::DegenerateConic:
      case ErrorKind::NotOnCurve:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace isoptic
