#pragma once

#include <stdexcept>
#include <string>

namespace cathei {

enum class ErrorCode {
  BoundExceeded,
  SizeMismatch,
  IndexOutOfRange,
  CrosscheckFailed,
  MalformedDiagram,
  BoundaryMismatch,
  RegionMismatch,
  UndefinedCoeff,
  UnknownLemma,
  SyntaxError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Size limits for brute-force computations. Values are read once from
/// CATHEI_ORACLE_BOUND (a single integer applied to every field) and may be
/// overridden at runtime.
struct OracleBounds {
  int syt = 12;             // standard tableaux enumeration
  int group_algebra = 6;    // products in A_n
  int tensor = 5;           // eigenspace/tensor computations over A_{n+1}
  int eval_region = 6;      // largest region label in eval_FH / eval_FA
  int module_degree = 8;    // explicit module matrices for Hom oracles
};

OracleBounds& oracle_bounds();
void set_uniform_oracle_bound(int bound);

inline void require_bound(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BoundExceeded, what);
}

}  // namespace cathei
