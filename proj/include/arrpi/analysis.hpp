#pragma once

#include "arrpi/geometry.hpp"
#include "arrpi/meridians.hpp"
#include "arrpi/presentation.hpp"
#include "arrpi/sweep.hpp"

namespace arrpi {

/// Everything the presentations are built from.
struct Analysis {
  PreparedArrangement arrangement;
  SweepResult sweep;
  MeridianTable meridians;

  Presentation complement() const { return complement_presentation(sweep); }
};

Analysis analyze(const ArrangementSpec& spec, const TraceSink& trace = {});

}  // namespace arrpi
