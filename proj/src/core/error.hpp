#pragma once
#include <stdexcept>
#include <string>

namespace gp {

struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg) : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

struct NotATree : Error { explicit NotATree(const std::string& m) : Error("NotATree", m) {} };
struct ZeroDensity : Error { explicit ZeroDensity(const std::string& m) : Error("ZeroDensity", m) {} };
struct EmptySide : Error { explicit EmptySide(const std::string& m) : Error("EmptySide", m) {} };
struct SizeMismatch : Error { explicit SizeMismatch(const std::string& m) : Error("SizeMismatch", m) {} };
struct MalformedBundle : Error { explicit MalformedBundle(const std::string& m) : Error("MalformedBundle", m) {} };
struct ParseError : Error { explicit ParseError(const std::string& m) : Error("ParseError", m) {} };
struct UnembeddedLeftNeighbour : Error {
  explicit UnembeddedLeftNeighbour(const std::string& m) : Error("UnembeddedLeftNeighbour", m) {}
};

struct ParityMismatch : Error { explicit ParityMismatch(const std::string& m) : Error("ParityMismatch", m) {} };
struct OutOfRange : Error { explicit OutOfRange(const std::string& m) : Error("OutOfRange", m) {} };
struct ClassificationRequired : Error {
  explicit ClassificationRequired(const std::string& m) : Error("ClassificationRequired", m) {}
};
struct MatchingInfeasible : Error {
  explicit MatchingInfeasible(const std::string& m) : Error("MatchingInfeasible", m) {}
};
struct CapExhausted : Error { explicit CapExhausted(const std::string& m) : Error("CapExhausted", m) {} };
struct LabellingRejected : Error {
  int attempts = 0;
  LabellingRejected(int tries, const std::string& m)
      : Error("LabellingRejected", m), attempts(tries) {}
};
struct GreedyStuck : Error { explicit GreedyStuck(const std::string& m) : Error("GreedyStuck", m) {} };
struct NotBalanced : Error {
  std::string condition;  // which balance condition failed: "a", "b" or "c"
  NotBalanced(std::string cond, const std::string& m)
      : Error("NotBalanced", "(" + cond + ") " + m), condition(std::move(cond)) {}
};
struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& m) : Error("PreconditionViolated", m) {}
};
struct UnknownRow : Error { explicit UnknownRow(const std::string& m) : Error("UnknownRow", m) {} };
struct OddDiscrepancy : Error { explicit OddDiscrepancy(const std::string& m) : Error("OddDiscrepancy", m) {} };
struct NoEligiblePath : Error { explicit NoEligiblePath(const std::string& m) : Error("NoEligiblePath", m) {} };
struct LoopDetected : Error { explicit LoopDetected(const std::string& m) : Error("LoopDetected", m) {} };
struct CardinalityMismatch : Error {
  explicit CardinalityMismatch(const std::string& m) : Error("CardinalityMismatch", m) {}
};
struct Infeasible : Error { explicit Infeasible(const std::string& m) : Error("Infeasible", m) {} };
struct Exhausted : Error {
  long long budget = 0;
  Exhausted(long long b, const std::string& m) : Error("Exhausted", m), budget(b) {}
};
struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string& m) : Error("VerificationFailed", m) {}
};
struct RejectionBudgetExceeded : Error {
  explicit RejectionBudgetExceeded(const std::string& m) : Error("RejectionBudgetExceeded", m) {}
};

// stage-level failure carrying machine-readable diagnostics
struct StageFailure : Error {
  std::string stage;
  std::string diagnostics;  // JSON text
  StageFailure(std::string st, const std::string& msg, std::string diag = "{}")
      : Error("StageFailure", st + ": " + msg), stage(std::move(st)), diagnostics(std::move(diag)) {}
};

}  // namespace gp
