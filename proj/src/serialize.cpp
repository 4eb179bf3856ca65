#include "serialize.hpp"

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace instcone {

using nlohmann::ordered_json;

std::string half_to_string(long long doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

long long parse_half2(const std::string& text) {
    auto bad = [&]() -> long long {
        fail(ErrorKind::Parse, "invalid grading \"" + text + "\" (want an integer or \"k/2\")");
    };
    if (text.empty()) return bad();
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            long long v = std::stoll(text, &used);
            if (used != text.size()) return bad();
            return 2 * v;
        }
        if (text.substr(slash + 1) != "2") return bad();
        std::size_t used = 0;
        long long v = std::stoll(text.substr(0, slash), &used);
        if (used != slash) return bad();
        return v;
    } catch (const std::exception&) {
        return bad();
    }
}

namespace {

// Doubled gradings with even value become JSON integers; odd ones become
// exact-half strings. Floats never appear.
ordered_json half_json(long long doubled) {
    if (doubled % 2 == 0) return ordered_json(doubled / 2);
    return ordered_json(half_to_string(doubled));
}

} // namespace

std::string validation_to_json(const KnotComplexData& k, const ValidationReport& rep) {
    ordered_json j;
    j["name"] = k.name;
    j["valid"] = rep.ok();
    j["checks"] = ordered_json::array();
    for (const auto& item : rep.items)
        j["checks"].push_back(
            {{"invariant", item.invariant}, {"pass", item.pass}, {"offenders", item.offenders}});
    return j.dump(2) + "\n";
}

std::string invariants_to_json(const InvariantReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["tau"] = half_json(rep.tau2);
    j["nu"] = half_json(rep.nu2);
    if (rep.nu_sharp)
        j["nu_sharp"] = *rep.nu_sharp;
    else
        j["nu_sharp"] = nullptr;
    if (rep.r0)
        j["r0"] = *rep.r0;
    else
        j["r0"] = nullptr;
    return j.dump(2) + "\n";
}

namespace {

ordered_json zero_rows(const ZeroSurgeryReport& rep, bool* all_determinate,
                       std::size_t* total_out) {
    ordered_json rows = ordered_json::array();
    bool ok = true;
    std::size_t total = 0;
    for (const auto& e : rep.entries) {
        ordered_json row;
        row["grading"] = e.s;
        row["determinate"] = e.determinate;
        if (e.determinate) {
            row["dim"] = e.dim;
            total += e.dim;
        } else {
            row["dim"] = nullptr;
            row["note"] = e.note;
            ok = false;
        }
        rows.push_back(std::move(row));
    }
    *all_determinate = ok;
    *total_out = total;
    return rows;
}

} // namespace

std::string surgery_row_to_json(const KnotComplexData& k, long long n) {
    ordered_json j;
    j["name"] = k.name;
    j["slope"] = n;
    j["dim"] = integer_surgery_dim(k, n);
    return j.dump(2) + "\n";
}

std::string surgery_range_to_json(const KnotComplexData& k, long long from, long long to) {
    ordered_json j;
    j["name"] = k.name;
    j["from"] = from;
    j["to"] = to;
    j["rows"] = ordered_json::array();
    bool any_indeterminate = false;
    for (long long n = from; n <= to; ++n) {
        ordered_json row;
        row["slope"] = n;
        if (n == 0) {
            ZeroSurgeryReport rep = zero_surgery_dims(k);
            bool ok = false;
            std::size_t total = 0;
            row["gradings"] = zero_rows(rep, &ok, &total);
            if (ok)
                row["dim"] = total;
            else {
                row["dim"] = nullptr;
                any_indeterminate = true;
            }
        } else {
            row["dim"] = integer_surgery_dim(k, n);
        }
        j["rows"].push_back(std::move(row));
    }
    j["indeterminate"] = any_indeterminate;
    return j.dump(2) + "\n";
}

std::string zero_surgery_to_json(const KnotComplexData& k, const ZeroSurgeryReport& rep) {
    ordered_json j;
    j["name"] = k.name;
    j["tau"] = half_json(rep.tau2);
    j["nu"] = half_json(rep.nu2);
    bool ok = false;
    std::size_t total = 0;
    j["gradings"] = zero_rows(rep, &ok, &total);
    if (ok)
        j["dim"] = total;
    else
        j["dim"] = nullptr;
    j["indeterminate"] = !ok;
    return j.dump(2) + "\n";
}

std::string dual_table_to_json(const KnotComplexData& k, const DualKnotTable& table) {
    ordered_json j;
    j["name"] = k.name;
    j["m"] = table.m;
    j["rows"] = ordered_json::array();
    for (const auto& [j2, dim] : table.dims)
        j["rows"].push_back({{"grading", half_to_string(j2)}, {"dim", dim}});
    j["total"] = table.total;
    return j.dump(2) + "\n";
}

std::string dual_entry_to_json(const KnotComplexData& k, long long m, long long j2,
                               std::size_t dim) {
    ordered_json j;
    j["name"] = k.name;
    j["m"] = m;
    j["grading"] = half_to_string(j2);
    j["dim"] = dim;
    return j.dump(2) + "\n";
}

std::string large_table_to_json(const KnotComplexData& k, const LargeSurgeryTable& table) {
    ordered_json j;
    j["name"] = k.name;
    j["rows"] = ordered_json::array();
    for (const auto& [s, dim] : table.dims) j["rows"].push_back({{"s", s}, {"dim", dim}});
    j["sum"] = table.sum;
    j["note"] = "every grading with |s| > genus contributes 1";
    return j.dump(2) + "\n";
}

std::string checks_to_json(const KnotComplexData& k, std::uint64_t seed,
                           const std::vector<CheckResult>& results) {
    ordered_json j;
    j["name"] = k.name;
    j["seed"] = seed;
    j["results"] = ordered_json::array();
    std::size_t failures = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        j["results"].push_back({{"check", r.name},
                                {"instance", r.instance},
                                {"pass", r.pass},
                                {"detail", r.detail}});
    }
    j["failures"] = failures;
    return j.dump(2) + "\n";
}

std::string catalog_to_json() {
    ordered_json j;
    j["models"] = ordered_json::array();
    for (const auto& k : catalog())
        j["models"].push_back({{"name", k.name},
                               {"genus", k.genus},
                               {"generators", k.space.size()}});
    return j.dump(2) + "\n";
}

KnotComplexData open_knot_unvalidated(const std::string& spec) {
    const std::string prefix = "catalog:";
    if (spec.rfind(prefix, 0) == 0) return open_knot(spec);
    return load_knot(spec, /*validated=*/false);
}

} // namespace instcone
