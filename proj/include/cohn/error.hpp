#pragma once

#include <stdexcept>
#include <string>

namespace cohn {

// Error kinds surfaced to callers (and mapped to CLI exit codes).
enum class errc {
  not_a_bijection,
  order_cap_exceeded,
  not_prime,
  index_out_of_range,
  not_a_unit,
  group_mismatch,
  context_mismatch,
  not_square,
  not_p_group,
  not_invertible_over_z,
  not_coprime_orders,
  not_perfect,
  not_in_wh,
  gap_hypothesis_fails,
  budget_exceeded,
  parse_error,
  unknown_suite,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_bijection: return "NotABijection";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::not_prime: return "NotPrime";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_a_unit: return "NotAUnit";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::not_square: return "NotSquare";
    case errc::not_p_group: return "NotPGroup";
    case errc::not_invertible_over_z: return "NotInvertibleOverZ";
    case errc::not_coprime_orders: return "NotCoprimeOrders";
    case errc::not_perfect: return "NotPerfect";
    case errc::not_in_wh: return "NotInWh";
    case errc::gap_hypothesis_fails: return "GapHypothesisFails";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::parse_error: return "ParseError";
    case errc::unknown_suite: return "UnknownSuite";
  }
  return "UnknownError";
}

// Expected failure: bad input, non-unit, budget, ... Recoverable by the caller.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// A broken internal invariant (e.g. a certified-impossible arithmetic outcome).
// Must never fire; firing one is a bug report, not a user error.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg)
      : std::logic_error("internal invariant violated: " + msg) {}
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace cohn
