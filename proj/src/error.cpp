#include "cathei/error.hpp"

#include <cstdlib>
#include <string>

namespace cathei {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::CrosscheckFailed: return "CROSSCHECK_FAILED";
    case ErrorCode::MalformedDiagram: return "MALFORMED_DIAGRAM";
    case ErrorCode::BoundaryMismatch: return "BOUNDARY_MISMATCH";
    case ErrorCode::RegionMismatch: return "REGION_MISMATCH";
    case ErrorCode::UndefinedCoeff: return "UNDEFINED_COEFF";
    case ErrorCode::UnknownLemma: return "UNKNOWN_LEMMA";
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
  }
  return "ERROR";
}

namespace {

OracleBounds initial_bounds() {
  OracleBounds b;
  if (const char* env = std::getenv("CATHEI_ORACLE_BOUND")) {
    try {
      int v = std::stoi(env);
      if (v >= 0) {
        b.syt = std::max(v, b.syt);
        b.group_algebra = v;
        b.tensor = v;
        b.eval_region = v;
        b.module_degree = std::max(v, b.module_degree);
      }
    } catch (...) {
    }
  }
  return b;
}

}  // namespace

OracleBounds& oracle_bounds() {
  static OracleBounds bounds = initial_bounds();
  return bounds;
}

void set_uniform_oracle_bound(int bound) {
  OracleBounds& b = oracle_bounds();
  b.group_algebra = bound;
  b.tensor = bound;
  b.eval_region = bound;
  b.module_degree = std::max(bound, b.module_degree);
  b.syt = std::max(bound, b.syt);
}

}  // namespace cathei
