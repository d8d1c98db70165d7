#pragma once

#include "spectra/report.hpp"
#include "spectra/ring_model.hpp"

namespace spectra {

/// Divisor-form ideal arithmetic and the ideal/ring predicates against
/// element-level oracles, the arithmetical law over ideal triples, the
/// Jacobson radical as k(Max), reduced <=> semiprimitive and the
/// direct-sum split <=> |Max| >= 2. Needs |R| <= cap.
Report ideal_lattice_suite(const RingModel& model);

}  // namespace spectra
