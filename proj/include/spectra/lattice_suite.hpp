#pragma once

#include <cstdint>

#include "spectra/report.hpp"
#include "spectra/ring_model.hpp"

namespace spectra {

/// The ideal lattice against its order matrix, as the dual of the product of
/// divisor lattices, and as a cap-structure of element sets; distributivity
/// and the frame law on it; both directions of distributive ⇔ frame on
/// synthetic cap-structures (chain, M3 from the Klein four-group, N5); and the
/// closure/nucleus laws of the identity and constant-top maps.
Report lattice_kernel_suite(const RingModel& model, std::uint64_t seed = 0);

}  // namespace spectra
