#pragma once

#include <stdexcept>
#include <string>

namespace convexcore {

enum class ErrorCode {
  ZeroVector,
  DimensionMismatch,
  NotCollinear,
  DegenerateQuadruple,
  NumericalFailure,
  NotProximal,
  NotInterior,
  CoincidentPoints,
  NotProperlyConvex,
  HyperplaneMeetsClosure,
  ChartDoesNotBound,
  NoConsistentLift,
  BallTooLarge,
  DomainNotInvariant,
  DegenerateCore,
  NotOnBoundary,
  NotTransverse,
  OutsideChart,
  BadParameters,
  BadDimension,
  LiftMissing,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::NotProximal: return "NotProximal";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::NotProperlyConvex: return "NotProperlyConvex";
    case ErrorCode::HyperplaneMeetsClosure: return "HyperplaneMeetsClosure";
    case ErrorCode::ChartDoesNotBound: return "ChartDoesNotBound";
    case ErrorCode::NoConsistentLift: return "NoConsistentLift";
    case ErrorCode::BallTooLarge: return "BallTooLarge";
    case ErrorCode::DomainNotInvariant: return "DomainNotInvariant";
    case ErrorCode::DegenerateCore: return "DegenerateCore";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::OutsideChart: return "OutsideChart";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::LiftMissing: return "LiftMissing";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace convexcore
