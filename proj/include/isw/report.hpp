#ifndef ISW_REPORT_HPP
#define ISW_REPORT_HPP

#include <cstdint>
#include <string>

#include "isw/congruence.hpp"
#include "isw/json_io.hpp"
#include "isw/kernels.hpp"

namespace isw {

struct AnalyzeOptions {
  std::uint64_t budget = kernels::kDefaultBudget;
  int max_n = 3; // conjecture levels 0..max_n, also the Mal'cev search bound
  kernels::Mode mode = kernels::Mode::parallel;
  int enumeration_guard = kDefaultEnumerationGuard;
};

// Full analysis document (schema_version 1). Fields that trip a budget or
// enumeration guard are emitted as {"skipped": code, "detail": message}
// instead of a value; everything else is computed.
io::json analyze_semigroup(const InverseSemigroup& s, const AnalyzeOptions& opts);

// Human-readable rendering of the analysis document.
std::string render_report_text(const io::json& report);

} // namespace isw

#endif
