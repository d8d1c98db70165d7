#pragma once

#include <cstdint>
#include <span>

#include "spectra/filter.hpp"
#include "spectra/ideal.hpp"
#include "spectra/report.hpp"
#include "spectra/ring_model.hpp"

namespace spectra {

/// I(F, I) = {x : x e_{A^c} ∈ I for some A ∈ F}. With F = F_S the smallest
/// member S suffices, so the result keeps d_i on S and is full off S.
Ideal ideal_from_filter(const Filter& filter, const Ideal& ideal);

/// Z(E(I)) = {Z : e_Z ∈ I}, whose core is {i : d_i ≠ 1}.
Filter filter_from_ideal(const Ideal& ideal);

/// {x : Z(x) ∈ F} = I(F, 0). Throws PreconditionError for the improper
/// filter, whose preimage is all of R.
Ideal z_preimage(const Filter& filter);

/// ∏ I_λ where components[λ] is an ideal of the single-factor ring Z_{n_λ}.
Ideal component_product(const RingSpec& ring, std::span<const Ideal> components);

/// I(U, ∏ M_λ). Throws PreconditionError unless U is an ultrafilter and each
/// component is a maximal ideal of its factor.
Ideal maximal_from_ultrafilter(const Filter& ultrafilter, std::span<const Ideal> components);

/// The map I ↦ I(F, I) on the ideal lattice: well-definedness, the closure
/// and nucleus laws, finite meets and joins, nonempty joins, and the frame
/// homomorphism onto the frame of fixed ideals.
Report verify_nucleus(const Filter& filter, const RingModel& model, std::uint64_t seed = 0);
/// verify_nucleus for every filter on the index set.
Report nucleus_suite(const RingModel& model, std::uint64_t seed = 0);

/// The map F ↦ I(F, I) over all pairs of filters: increasing, finite
/// intersections, and joins when 2 is a unit.
Report verify_filter_map(const Ideal& ideal, const RingModel& model);
/// verify_filter_map for every ideal.
Report filter_map_suite(const RingModel& model);

/// I(F, 0) ⊆ I(G, 0) ⇔ F ⊆ G over all pairs of filters, improper included.
Report verify_order_embedding(const RingModel& model);

/// For a product of local rings, U ↦ I(U, ∏ M_λ) is a bijection from the
/// ultrafilters onto Max(R). Throws PreconditionError naming the first factor
/// that is not a prime power.
Report ultrafilter_max_bijection(const RingModel& model);

/// Element-level identities for I(F, I), Z(E(I)), Z^{-1}F and the
/// ultrafilter/maximal-ideal maps over every (filter, ideal, element) triple.
/// Needs |R| <= cap.
Report filter_ideal_suite(const RingModel& model);

}  // namespace spectra
