#include "instcone/instcone.h"

#include <cstring>
#include <string>

#include "serialize.hpp"

// The C boundary: translate exceptions into status codes and keep the
// message in thread-local storage.

struct instcone_knot {
    instcone::KnotComplexData data;
};

namespace {

thread_local std::string g_last_error;

instcone_status status_of(instcone::ErrorKind kind) {
    using instcone::ErrorKind;
    switch (kind) {
        case ErrorKind::Io: return INSTCONE_ERR_IO;
        case ErrorKind::Parse: return INSTCONE_ERR_PARSE;
        case ErrorKind::Schema: return INSTCONE_ERR_SCHEMA;
        case ErrorKind::Validation: return INSTCONE_ERR_VALIDATION;
        case ErrorKind::Precondition:
        case ErrorKind::NotChainMap:
        case ErrorKind::InvalidComplex:
        case ErrorKind::MissingScalar: return INSTCONE_ERR_PRECONDITION;
        case ErrorKind::TauZero: return INSTCONE_ERR_TAU_ZERO;
        case ErrorKind::ConventionMismatch: return INSTCONE_ERR_CONVENTION;
        case ErrorKind::WindowUnstable: return INSTCONE_ERR_UNSTABLE;
        case ErrorKind::GeneratorFailure:
        case ErrorKind::Internal: return INSTCONE_ERR_INTERNAL;
    }
    return INSTCONE_ERR_INTERNAL;
}

template <typename Fn>
instcone_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return INSTCONE_OK;
    } catch (const instcone::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return INSTCONE_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return INSTCONE_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

instcone_status require_args(bool ok) {
    if (!ok) {
        g_last_error = "null argument";
        return INSTCONE_ERR_PRECONDITION;
    }
    return INSTCONE_OK;
}

} // namespace

extern "C" {

const char* instcone_last_error(void) { return g_last_error.c_str(); }

void instcone_string_free(char* s) { std::free(s); }

instcone_status instcone_knot_open(const char* spec, instcone_knot** out) {
    if (auto st = require_args(spec && out)) return st;
    return guarded([&] { *out = new instcone_knot{instcone::open_knot(spec)}; });
}

instcone_status instcone_knot_from_json(const char* json_text, instcone_knot** out) {
    if (auto st = require_args(json_text && out)) return st;
    return guarded([&] { *out = new instcone_knot{instcone::knot_from_json(json_text)}; });
}

void instcone_knot_free(instcone_knot* knot) { delete knot; }

const char* instcone_knot_name(const instcone_knot* knot) {
    return knot ? knot->data.name.c_str() : "";
}

instcone_status instcone_knot_to_json(const instcone_knot* knot, char** out_json) {
    if (auto st = require_args(knot && out_json)) return st;
    return guarded([&] { *out_json = dup_string(instcone::knot_to_json(knot->data)); });
}

instcone_status instcone_knot_save(const instcone_knot* knot, const char* path) {
    if (auto st = require_args(knot && path)) return st;
    return guarded([&] { instcone::save_knot(knot->data, path); });
}

instcone_status instcone_mirror(const instcone_knot* knot, instcone_knot** out) {
    if (auto st = require_args(knot && out)) return st;
    return guarded([&] { *out = new instcone_knot{instcone::mirror(knot->data)}; });
}

instcone_status instcone_reverse(const instcone_knot* knot, instcone_knot** out) {
    if (auto st = require_args(knot && out)) return st;
    return guarded([&] { *out = new instcone_knot{instcone::reverse(knot->data)}; });
}

instcone_status instcone_validate_json(const char* spec, char** out_json) {
    if (auto st = require_args(spec && out_json)) return st;
    return guarded([&] {
        instcone::KnotComplexData k = instcone::open_knot_unvalidated(spec);
        instcone::ValidationReport rep = instcone::validate(k);
        *out_json = dup_string(instcone::validation_to_json(k, rep));
    });
}

instcone_status instcone_invariants_json(const instcone_knot* knot, char** out_json) {
    if (auto st = require_args(knot && out_json)) return st;
    return guarded([&] {
        *out_json = dup_string(instcone::invariants_to_json(instcone::invariants(knot->data)));
    });
}

instcone_status instcone_surgery_dim(const instcone_knot* knot, long n, size_t* out_dim) {
    if (auto st = require_args(knot && out_dim)) return st;
    return guarded([&] { *out_dim = instcone::integer_surgery_dim(knot->data, n); });
}

instcone_status instcone_surgery_range_json(const instcone_knot* knot, long from, long to,
                                            char** out_json) {
    if (auto st = require_args(knot && out_json)) return st;
    if (from > to) {
        g_last_error = "empty slope range";
        return INSTCONE_ERR_PRECONDITION;
    }
    return guarded(
        [&] { *out_json = dup_string(instcone::surgery_range_to_json(knot->data, from, to)); });
}

instcone_status instcone_zero_surgery_json(const instcone_knot* knot, char** out_json) {
    if (auto st = require_args(knot && out_json)) return st;
    return guarded([&] {
        instcone::ZeroSurgeryReport rep = instcone::zero_surgery_dims(knot->data);
        *out_json = dup_string(instcone::zero_surgery_to_json(knot->data, rep));
    });
}

instcone_status instcone_dual_json(const instcone_knot* knot, long m, const char* grading,
                                   char** out_json) {
    if (auto st = require_args(knot && out_json)) return st;
    return guarded([&] {
        if (grading == nullptr) {
            *out_json = dup_string(
                instcone::dual_table_to_json(knot->data, instcone::dual_knot_table(knot->data, m)));
        } else {
            long long j2 = instcone::parse_half2(grading);
            std::size_t dim = instcone::dual_knot_dim(knot->data, m, j2);
            *out_json = dup_string(instcone::dual_entry_to_json(knot->data, m, j2, dim));
        }
    });
}

instcone_status instcone_large_table_json(const instcone_knot* knot, char** out_json) {
    if (auto st = require_args(knot && out_json)) return st;
    return guarded([&] {
        *out_json = dup_string(
            instcone::large_table_to_json(knot->data, instcone::large_surgery_table(knot->data)));
    });
}

instcone_status instcone_check_suite_json(const instcone_knot* knot, unsigned long long seed,
                                          char** out_json) {
    if (auto st = require_args(knot && out_json)) return st;
    return guarded([&] {
        auto results = instcone::check_suite(knot->data, seed);
        *out_json = dup_string(instcone::checks_to_json(knot->data, seed, results));
    });
}

instcone_status instcone_catalog_json(char** out_json) {
    if (auto st = require_args(out_json != nullptr)) return st;
    return guarded([&] { *out_json = dup_string(instcone::catalog_to_json()); });
}

} // extern "C"
