#pragma once

#include <string>

#include "checks.hpp"

namespace instcone {

// Renders a doubled grading as an exact value: "3" for 6, "-3/2" for -3.
// Never a float.
std::string half_to_string(long long doubled);

// Parses "k" or "p/2" back into a doubled grading.
long long parse_half2(const std::string& text);

// JSON payloads consumed by the C API and the CLI. All objects have stable
// key order so identical inputs give byte-identical output.
std::string validation_to_json(const KnotComplexData& k, const ValidationReport& rep);
std::string invariants_to_json(const InvariantReport& rep);
std::string surgery_row_to_json(const KnotComplexData& k, long long n);
std::string surgery_range_to_json(const KnotComplexData& k, long long from, long long to);
std::string zero_surgery_to_json(const KnotComplexData& k, const ZeroSurgeryReport& rep);
std::string dual_table_to_json(const KnotComplexData& k, const DualKnotTable& table);
std::string dual_entry_to_json(const KnotComplexData& k, long long m, long long j2,
                               std::size_t dim);
std::string large_table_to_json(const KnotComplexData& k, const LargeSurgeryTable& table);
std::string checks_to_json(const KnotComplexData& k, std::uint64_t seed,
                           const std::vector<CheckResult>& results);
std::string catalog_to_json();

// Loads a knot from a path / "catalog:" spec without insisting on validity,
// so the validation report itself can be produced for bad inputs.
KnotComplexData open_knot_unvalidated(const std::string& spec);

} // namespace instcone
