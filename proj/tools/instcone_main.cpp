// instcone command-line front end. Talks to the shared library exclusively
// through the C API; every number printed is computed by the library, this
// file only parses flags and renders tables.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "instcone/instcone.h"

namespace {

using nlohmann::ordered_json;

enum ExitCode {
    kOk = 0,
    kFailure = 1,        // validation / precondition failure
    kIndeterminate = 2,  // result contains indeterminate entries
    kIoError = 3,        // I/O or parse error
};

int exit_code_for(instcone_status st) {
    switch (st) {
        case INSTCONE_OK: return kOk;
        case INSTCONE_ERR_IO:
        case INSTCONE_ERR_PARSE:
        case INSTCONE_ERR_SCHEMA: return kIoError;
        default: return kFailure;
    }
}

int report_error(instcone_status st) {
    std::cerr << "instcone: " << instcone_last_error() << "\n";
    return exit_code_for(st);
}

struct KnotHandle {
    instcone_knot* k = nullptr;
    ~KnotHandle() { instcone_knot_free(k); }
};

struct JsonString {
    char* s = nullptr;
    ~JsonString() { instcone_string_free(s); }
};

enum class Format { Table, Json, Csv };

void add_format_flags(CLI::App* cmd, Format* fmt) {
    cmd->add_flag_callback("--json", [fmt] { *fmt = Format::Json; }, "machine-readable JSON");
    cmd->add_flag_callback("--csv", [fmt] { *fmt = Format::Csv; }, "CSV with a fixed header");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string cell(const ordered_json& v) {
    if (v.is_null()) return "indeterminate";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

// ----- per-command rendering ------------------------------------------------

int render_validate(const ordered_json& j, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "invariant,pass,offenders\n";
        for (const auto& c : j["checks"])
            std::cout << csv_escape(c["invariant"].get<std::string>()) << ","
                      << (c["pass"].get<bool>() ? "true" : "false") << ","
                      << csv_escape(c["offenders"].get<std::string>()) << "\n";
    } else {
        std::cout << j["name"].get<std::string>() << ": "
                  << (j["valid"].get<bool>() ? "valid" : "INVALID") << "\n";
        for (const auto& c : j["checks"]) {
            std::cout << "  " << (c["pass"].get<bool>() ? "pass  " : "FAIL  ")
                      << c["invariant"].get<std::string>();
            std::string off = c["offenders"].get<std::string>();
            if (!off.empty()) std::cout << "  [" << off << "]";
            std::cout << "\n";
        }
    }
    return j["valid"].get<bool>() ? kOk : kFailure;
}

int render_invariants(const ordered_json& j, Format fmt) {
    bool incomplete = j["nu_sharp"].is_null();
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "name,tau,nu,nu_sharp,r0\n";
        std::cout << csv_escape(j["name"].get<std::string>()) << "," << cell(j["tau"]) << ","
                  << cell(j["nu"]) << "," << cell(j["nu_sharp"]) << "," << cell(j["r0"]) << "\n";
    } else {
        std::cout << j["name"].get<std::string>() << "\n"
                  << "  tau      = " << cell(j["tau"]) << "\n"
                  << "  nu       = " << cell(j["nu"]) << "\n"
                  << "  nu_sharp = " << cell(j["nu_sharp"]) << "\n"
                  << "  r0       = " << cell(j["r0"]) << "\n";
        if (incomplete) std::cout << "  (nu_sharp and r0 are determined only when tau != 0)\n";
    }
    return incomplete ? kIndeterminate : kOk;
}

std::string gradings_summary(const ordered_json& rows) {
    std::ostringstream os;
    bool first = true;
    for (const auto& g : rows) {
        if (!first) os << " ";
        first = false;
        os << "s=" << g["grading"].dump() << ":" << cell(g["dim"]);
    }
    return os.str();
}

int render_surgery_range(const ordered_json& j, Format fmt) {
    bool indet = j["indeterminate"].get<bool>();
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "slope,dim,gradings\n";
        for (const auto& row : j["rows"]) {
            std::cout << row["slope"].get<long long>() << "," << cell(row["dim"]) << ",";
            if (row.contains("gradings")) std::cout << csv_escape(gradings_summary(row["gradings"]));
            std::cout << "\n";
        }
    } else {
        std::cout << "surgery dimensions for " << j["name"].get<std::string>() << "\n";
        std::cout << "  slope  dim\n";
        for (const auto& row : j["rows"]) {
            std::cout << "  " << row["slope"].get<long long>() << "\t " << cell(row["dim"]);
            if (row.contains("gradings")) std::cout << "   (" << gradings_summary(row["gradings"]) << ")";
            std::cout << "\n";
        }
    }
    return indet ? kIndeterminate : kOk;
}

int render_surgery_single(const ordered_json& j, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "slope,dim,gradings\n"
                  << j["slope"].get<long long>() << "," << cell(j["dim"]) << ",\n";
    } else {
        std::cout << "dim I#(S^3_" << j["slope"].get<long long>() << "("
                  << j["name"].get<std::string>() << ")) = " << cell(j["dim"]) << "\n";
    }
    return kOk;
}

int render_zero(const ordered_json& j, Format fmt) {
    bool indet = j["indeterminate"].get<bool>();
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "grading,status,dim\n";
        for (const auto& g : j["gradings"])
            std::cout << g["grading"].get<long long>() << ","
                      << (g["determinate"].get<bool>() ? "determinate" : "indeterminate") << ","
                      << cell(g["dim"]) << "\n";
    } else {
        std::cout << "0-surgery of " << j["name"].get<std::string>() << " (tau = "
                  << cell(j["tau"]) << ", nu = " << cell(j["nu"]) << ")\n";
        for (const auto& g : j["gradings"]) {
            std::cout << "  grading " << g["grading"].get<long long>() << ": " << cell(g["dim"]);
            if (!g["determinate"].get<bool>())
                std::cout << "  (" << g["note"].get<std::string>() << ")";
            std::cout << "\n";
        }
        if (!j["dim"].is_null()) std::cout << "  total: " << cell(j["dim"]) << "\n";
    }
    return indet ? kIndeterminate : kOk;
}

int render_dual(const ordered_json& j, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    if (j.contains("rows")) {
        if (fmt == Format::Csv) {
            std::cout << "grading,dim\n";
            for (const auto& r : j["rows"])
                std::cout << r["grading"].get<std::string>() << "," << cell(r["dim"]) << "\n";
        } else {
            std::cout << "dual-knot homology of " << j["name"].get<std::string>()
                      << " at m = " << j["m"].get<long long>() << "\n";
            for (const auto& r : j["rows"])
                std::cout << "  j = " << r["grading"].get<std::string>() << ": " << cell(r["dim"])
                          << "\n";
            std::cout << "  total: " << cell(j["total"]) << "\n";
        }
    } else {
        if (fmt == Format::Csv) {
            std::cout << "grading,dim\n"
                      << j["grading"].get<std::string>() << "," << cell(j["dim"]) << "\n";
        } else {
            std::cout << "dim at j = " << j["grading"].get<std::string>() << ": " << cell(j["dim"])
                      << "\n";
        }
    }
    return kOk;
}

int render_table(const ordered_json& j, Format fmt) {
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "s,dim\n";
        for (const auto& r : j["rows"])
            std::cout << r["s"].get<long long>() << "," << cell(r["dim"]) << "\n";
    } else {
        std::cout << "dim H(A(s)) for " << j["name"].get<std::string>() << "\n";
        for (const auto& r : j["rows"])
            std::cout << "  s = " << r["s"].get<long long>() << ": " << cell(r["dim"]) << "\n";
        std::cout << "  (" << j["note"].get<std::string>() << ")\n";
    }
    return kOk;
}

int render_check(const ordered_json& j, Format fmt) {
    std::size_t failures = j["failures"].get<std::size_t>();
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "check,instance,pass,detail\n";
        for (const auto& r : j["results"])
            std::cout << csv_escape(r["check"].get<std::string>()) << ","
                      << csv_escape(r["instance"].get<std::string>()) << ","
                      << (r["pass"].get<bool>() ? "true" : "false") << ","
                      << csv_escape(r["detail"].get<std::string>()) << "\n";
    } else {
        std::cout << "property suite for " << j["name"].get<std::string>() << " (seed "
                  << j["seed"].get<unsigned long long>() << ")\n";
        for (const auto& r : j["results"]) {
            std::cout << "  " << (r["pass"].get<bool>() ? "pass  " : "FAIL  ")
                      << r["check"].get<std::string>();
            std::string detail = r["detail"].get<std::string>();
            if (!detail.empty()) std::cout << "  [" << detail << "]";
            std::cout << "\n";
        }
        std::cout << "  failures: " << failures << "\n";
    }
    return failures == 0 ? kOk : kFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"framed instanton homology of Dehn surgeries from bent-complex knot data"};
    app.require_subcommand(1);

    std::string file;
    Format fmt = Format::Table;
    long long slope = 0;
    bool have_slope = false;
    std::string range;
    long long dual_m = 0;
    std::string dual_grading;
    unsigned long long seed = 7;
    bool have_seed_flag = false;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "knot JSON file, catalog:NAME, or catalog:random-SEED")
            ->required();
        add_format_flags(cmd, &fmt);
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check every data invariant");
    add_file(c_validate);
    CLI::App* c_invariants = app.add_subcommand("invariants", "tau, nu, nu_sharp, r0");
    add_file(c_invariants);
    CLI::App* c_surgery = app.add_subcommand("surgery", "dim I# of integer surgeries");
    add_file(c_surgery);
    c_surgery->add_option("--slope", slope, "single slope n (0 uses per-grading semantics)")
        ->each([&](const std::string&) { have_slope = true; });
    c_surgery->add_option("--range", range, "slope range a..b");
    CLI::App* c_zero = app.add_subcommand("zero", "per-grading 0-surgery dimensions");
    add_file(c_zero);
    CLI::App* c_dual = app.add_subcommand("dual", "dual-knot homology after -m-framed filling");
    add_file(c_dual);
    c_dual->add_option("--m", dual_m, "framing parameter m")->required();
    c_dual->add_option("--grading", dual_grading, "single grading, e.g. 3 or -5/2");
    CLI::App* c_table = app.add_subcommand("table", "dim H(A(s)) over the genus range");
    add_file(c_table);
    CLI::App* c_check = app.add_subcommand("check", "run the property suite");
    add_file(c_check);
    c_check->add_option("--seed", seed, "suite seed")
        ->each([&](const std::string&) { have_seed_flag = true; });
    CLI::App* c_catalog = app.add_subcommand("catalog", "list built-in models");
    add_format_flags(c_catalog, &fmt);

    CLI11_PARSE(app, argc, argv);

    auto parse_payload = [](const char* text) { return ordered_json::parse(text); };

    if (c_catalog->parsed()) {
        JsonString out;
        instcone_status st = instcone_catalog_json(&out.s);
        if (st != INSTCONE_OK) return report_error(st);
        if (fmt == Format::Json) {
            std::cout << out.s;
        } else {
            ordered_json j = parse_payload(out.s);
            if (fmt == Format::Csv) std::cout << "name,genus,generators\n";
            for (const auto& m : j["models"]) {
                if (fmt == Format::Csv)
                    std::cout << m["name"].get<std::string>() << "," << m["genus"].get<long long>()
                              << "," << m["generators"].get<std::size_t>() << "\n";
                else
                    std::cout << "catalog:" << m["name"].get<std::string>() << "  (genus "
                              << m["genus"].get<long long>() << ", "
                              << m["generators"].get<std::size_t>() << " generators)\n";
            }
        }
        return kOk;
    }

    if (c_validate->parsed()) {
        JsonString out;
        instcone_status st = instcone_validate_json(file.c_str(), &out.s);
        if (st != INSTCONE_OK) return report_error(st);
        return render_validate(parse_payload(out.s), fmt);
    }

    KnotHandle knot;
    instcone_status st = instcone_knot_open(file.c_str(), &knot.k);
    if (st != INSTCONE_OK) return report_error(st);

    if (c_invariants->parsed()) {
        JsonString out;
        st = instcone_invariants_json(knot.k, &out.s);
        if (st != INSTCONE_OK) return report_error(st);
        return render_invariants(parse_payload(out.s), fmt);
    }

    if (c_surgery->parsed()) {
        if (!range.empty()) {
            auto dots = range.find("..");
            if (dots == std::string::npos) {
                std::cerr << "instcone: --range wants a..b\n";
                return kFailure;
            }
            long long a = 0, b = 0;
            try {
                a = std::stoll(range.substr(0, dots));
                b = std::stoll(range.substr(dots + 2));
            } catch (const std::exception&) {
                std::cerr << "instcone: --range wants a..b\n";
                return kFailure;
            }
            JsonString out;
            st = instcone_surgery_range_json(knot.k, a, b, &out.s);
            if (st != INSTCONE_OK) return report_error(st);
            return render_surgery_range(parse_payload(out.s), fmt);
        }
        if (!have_slope) {
            std::cerr << "instcone: surgery needs --slope or --range\n";
            return kFailure;
        }
        if (slope == 0) {
            JsonString out;
            st = instcone_zero_surgery_json(knot.k, &out.s);
            if (st != INSTCONE_OK) return report_error(st);
            return render_zero(parse_payload(out.s), fmt);
        }
        JsonString out;
        size_t dim = 0;
        st = instcone_surgery_dim(knot.k, slope, &dim);
        if (st != INSTCONE_OK) return report_error(st);
        ordered_json j;
        j["name"] = instcone_knot_name(knot.k);
        j["slope"] = slope;
        j["dim"] = dim;
        return render_surgery_single(j, fmt);
    }

    if (c_zero->parsed()) {
        JsonString out;
        st = instcone_zero_surgery_json(knot.k, &out.s);
        if (st != INSTCONE_OK) return report_error(st);
        return render_zero(parse_payload(out.s), fmt);
    }

    if (c_dual->parsed()) {
        JsonString out;
        st = instcone_dual_json(knot.k, dual_m,
                                dual_grading.empty() ? nullptr : dual_grading.c_str(), &out.s);
        if (st != INSTCONE_OK) return report_error(st);
        return render_dual(parse_payload(out.s), fmt);
    }

    if (c_table->parsed()) {
        JsonString out;
        st = instcone_large_table_json(knot.k, &out.s);
        if (st != INSTCONE_OK) return report_error(st);
        return render_table(parse_payload(out.s), fmt);
    }

    if (c_check->parsed()) {
        if (!have_seed_flag) {
            if (const char* env = std::getenv("INSTCONE_SEED")) {
                try {
                    seed = std::stoull(env);
                } catch (const std::exception&) {
                    std::cerr << "instcone: INSTCONE_SEED is not a number\n";
                    return kFailure;
                }
            }
        }
        JsonString out;
        st = instcone_check_suite_json(knot.k, seed, &out.s);
        if (st != INSTCONE_OK) return report_error(st);
        return render_check(parse_payload(out.s), fmt);
    }

    return kOk;
}
