#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxlat/exact_arith.hpp"
#include "coxlat/lattice.hpp"
#include "coxlat/star.hpp"
#include "coxlat/verifier.hpp"

namespace coxlat::io {

using nlohmann::json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

// Coefficient array, lowest degree first.
json poly_to_json(const IntPoly& p);
// {"order": N, "coeffs": [...]}
json series_to_json(const PowerSeries& s);

// {"labels": [...], "gram": [[...]]}
json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const json& j);

// {"g":0,"b":2,"pairs":[[2,1],...],"kind":"kleinian","alpha":[...]}
json invariants_to_json(const OrbitInvariants& inv);
// Full form {"g","b","pairs"} or shorthand {"kind","alpha"}.
OrbitInvariants invariants_from_json(const json& j);

// {"invariants": ..., "minus": lattice, "zero": lattice, "plus": lattice}
json tower_to_json(const LatticeTower& tower, const std::optional<OrbitInvariants>& inv);

/// A Gram file: a single lattice (optionally with "invariants") or the JSON
/// written by "build", whose "minus" lattice is used.
struct GramDocument {
  Lattice minus;
  std::optional<OrbitInvariants> invariants;
};

GramDocument gram_document_from_json(const json& j);

json report_to_json(const VerificationReport& report);

/// "2,3,5" -> {2, 3, 5}; the empty string gives an empty list.
std::vector<std::int64_t> parse_alpha_list(const std::string& text);

json read_json_file(const std::string& path);

}  // namespace coxlat::io
