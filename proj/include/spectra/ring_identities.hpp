#pragma once

#include "spectra/report.hpp"
#include "spectra/ring_model.hpp"

namespace spectra {

/// Zero-set and 0/1-idempotent identities of a product ring, checked over
/// every unordered element pair, every pair of subsets of the index set and
/// every pair of idempotents inside each ideal. Also cross-checks the
/// E(R) <-> subset round trips and regular <=> unit against per-coordinate
/// brute force. Needs |R| <= cap.
Report ring_identities_suite(const RingModel& model);

}  // namespace spectra
