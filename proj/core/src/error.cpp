#include "transfinita/error.hpp"

namespace transfinita {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::ResourceExceeded: return "ResourceExceeded";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvalidLambda: return "InvalidLambda";
    case ErrorKind::OutOfField: return "OutOfField";
    case ErrorKind::FragmentExceeded: return "FragmentExceeded";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

namespace {

std::string message_for(ErrorKind kind, const std::string& op, const std::string& detail) {
  std::string msg(to_string(kind));
  msg += " in ";
  msg += op;
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, std::string op, const std::string& detail)
    : std::runtime_error(message_for(kind, op, detail)), kind_(kind), op_(std::move(op)), detail_(detail) {}

}  // namespace transfinita
