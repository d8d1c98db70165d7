#pragma once

// Replayable counterexample fragments: ideals and filters serialize as the
// tuples their constructors take.

#include "spectra/element_table.hpp"
#include "spectra/filter.hpp"
#include "spectra/ideal.hpp"
#include "spectra/report.hpp"

namespace spectra::payload {

inline Json ideal(const Ideal& value) {
  Json out = Json::array();
  for (std::uint32_t d : value.divisors()) out.push_back(d);
  return out;
}

inline Json filter(const Filter& value) { return to_json(value.core()); }

inline Json element(const ElementTable& table, ElementTable::Index x) {
  Json out = Json::array();
  for (std::size_t c = 0; c < table.arity(); ++c) out.push_back(table.residue(x, c));
  return out;
}

inline Json ring(const RingSpec& value) { return Json{{"ring", value.to_string()}}; }

}  // namespace spectra::payload
