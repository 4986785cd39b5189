#pragma once

#include "nung/beam.hpp"

namespace nung {

// Plug-in estimate, in bits, of the mutual information between the sender
// bit (uniform prior) and the per-particle receiver observable "detected on
// axis". The two reports must come from identical scenarios that differ only
// in the sender's action; absorbed and lost particles carry no observable
// and are skipped. Returns a value in [0, 1].
double slc_mutual_information(const DetectorReport& report_when_sender_0,
                              const DetectorReport& report_when_sender_1);

}  // namespace nung
