#ifndef DENSECUT_ERRORS_H_
#define DENSECUT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace densecut {

// Base of all solver-reported failures. `code()` is a stable machine-readable
// identifier (e.g. "DegenerateCut") surfaced by the CLI in its JSON errors.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define DENSECUT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

DENSECUT_DEFINE_ERROR(DegenerateCut);
DENSECUT_DEFINE_ERROR(TooLarge);
DENSECUT_DEFINE_ERROR(WidthExceeded);
DENSECUT_DEFINE_ERROR(Unsatisfiable);
DENSECUT_DEFINE_ERROR(DpInfeasible);
DENSECUT_DEFINE_ERROR(NoFeasibleProfile);
DENSECUT_DEFINE_ERROR(NoFeasibleCut);
DENSECUT_DEFINE_ERROR(Infeasible);
DENSECUT_DEFINE_ERROR(EmptySchedule);
DENSECUT_DEFINE_ERROR(WalkBudgetExceeded);
DENSECUT_DEFINE_ERROR(InfeasiblePlant);
DENSECUT_DEFINE_ERROR(InfeasibleInput);

#undef DENSECUT_DEFINE_ERROR

}  // namespace densecut

#endif  // DENSECUT_ERRORS_H_
