#include "arrpi/analysis.hpp"

namespace arrpi {

Analysis analyze(const ArrangementSpec& spec, const TraceSink& trace) {
  Analysis out;
  out.arrangement = prepare(spec);
  out.sweep = run_sweep(out.arrangement, trace);
  out.meridians = full_meridian_table(out.sweep);
  return out;
}

}  // namespace arrpi
