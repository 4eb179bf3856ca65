#include "knot.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace instcone {

using nlohmann::ordered_json;

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& i : items) {
        os << (i.pass ? "pass " : "FAIL ") << i.invariant;
        if (!i.offenders.empty()) os << " [" << i.offenders << "]";
        os << "\n";
    }
    return os.str();
}

std::pair<long long, long long> grading_bounds_mu2(const KnotComplexData& k) {
    long long hi = k.q - 1 + 2 * k.genus;
    return {hi, -hi};
}

std::pair<long long, long long> grading_bounds2(const KnotComplexData& k, long long n) {
    long long hi = std::llabs(k.q0 - n * k.q) - 1 + 2 * k.genus;
    return {hi, -hi};
}

namespace {

void check_differential(const KnotComplexData& k, const GradedMap& d, bool raising,
                        const std::string& tag, ValidationReport& rep) {
    const long long step = 2 * k.q;
    std::string bad_shift, bad_h;
    for (const auto& e : d.entries()) {
        const Grading& s = k.space.grading(k.space.index_of(e.from));
        const Grading& t = k.space.grading(k.space.index_of(e.to));
        long long delta = t.alex2 - s.alex2;
        bool ok = raising ? (delta > 0 && delta % step == 0) : (delta < 0 && (-delta) % step == 0);
        if (!ok) {
            if (!bad_shift.empty()) bad_shift += ", ";
            bad_shift += e.from + "->" + e.to;
        }
        if (((t.h - s.h) % 2 + 2) % 2 != 1) {
            if (!bad_h.empty()) bad_h += ", ";
            bad_h += e.from + "->" + e.to;
        }
    }
    rep.items.push_back({tag + (raising ? " raises alex2 by positive multiples of 2q"
                                        : " lowers alex2 by positive multiples of 2q"),
                         bad_shift.empty(), bad_shift});
    rep.items.push_back({tag + " flips the homological grading", bad_h.empty(), bad_h});

    QMatrix m = d.to_matrix();
    bool squares = m.multiply(m).is_zero();
    rep.items.push_back({tag + " squares to zero", squares, squares ? "" : tag + "^2 != 0"});

    // Unit homology only makes sense once the map is an honest differential.
    if (squares) {
        Complex c{k.space, d};
        std::size_t dim = homology_basis(c).dim();
        rep.items.push_back({"unit " + tag + "-homology", dim == 1,
                             dim == 1 ? "" : "dim H = " + std::to_string(dim)});
    } else {
        rep.items.push_back({"unit " + tag + "-homology", false, tag + "^2 != 0"});
    }
}

} // namespace

ValidationReport validate(const KnotComplexData& k) {
    ValidationReport rep;

    auto [hi, lo] = grading_bounds_mu2(k);
    std::string out_of_range;
    for (const auto& g : k.space.generators()) {
        bool in_band = g.grading.alex2 >= lo && g.grading.alex2 <= hi;
        // The lattice steps by 2 from the top bound, so parity is part of
        // membership.
        bool on_lattice = ((g.grading.alex2 - hi) % 2) == 0;
        if (!in_band || !on_lattice) {
            if (!out_of_range.empty()) out_of_range += ", ";
            out_of_range += g.label + " at alex2=" + std::to_string(g.grading.alex2);
        }
    }
    rep.items.push_back({"gradings lie on the lattice within [min2, max2]", out_of_range.empty(),
                         out_of_range});

    check_differential(k, k.d_plus, /*raising=*/true, "d_plus", rep);
    check_differential(k, k.d_minus, /*raising=*/false, "d_minus", rep);
    return rep;
}

void require_valid(const KnotComplexData& k) {
    ValidationReport rep = validate(k);
    if (!rep.ok())
        fail(ErrorKind::Validation, "knot \"" + k.name + "\" failed validation:\n" + rep.summary());
}

KnotComplexData mirror(const KnotComplexData& k) {
    std::vector<Generator> gens;
    gens.reserve(k.space.size());
    for (const auto& g : k.space.generators())
        gens.push_back({g.label, Grading{-g.grading.alex2, g.grading.h}});
    GradedSpace space(std::move(gens));

    auto remap = [&](const GradedMap& d) {
        GradedMap t = d.transpose();
        return GradedMap(space, space, t.entries());
    };
    KnotComplexData out;
    out.name = k.name + "!";
    out.genus = k.genus;
    out.q = k.q;
    out.q0 = k.q0;
    out.space = space;
    out.d_plus = remap(k.d_plus);
    out.d_minus = remap(k.d_minus);
    return out;
}

KnotComplexData reverse(const KnotComplexData& k) {
    std::vector<Generator> gens;
    gens.reserve(k.space.size());
    for (const auto& g : k.space.generators())
        gens.push_back({g.label, Grading{-g.grading.alex2, g.grading.h}});
    GradedSpace space(std::move(gens));

    KnotComplexData out;
    out.name = k.name + "r";
    out.genus = k.genus;
    out.q = k.q;
    out.q0 = k.q0;
    out.space = space;
    out.d_plus = GradedMap(space, space, k.d_minus.entries());
    out.d_minus = GradedMap(space, space, k.d_plus.entries());
    return out;
}

// ---------------------------------------------------------------------------
// JSON schema handling

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
    fail(ErrorKind::Schema, pointer + ": " + what);
}

long long get_int(const ordered_json& j, const std::string& pointer) {
    if (!j.is_number_integer()) schema_error(pointer, "expected an integer");
    return j.get<long long>();
}

std::string get_string(const ordered_json& j, const std::string& pointer) {
    if (!j.is_string()) schema_error(pointer, "expected a string");
    return j.get<std::string>();
}

std::vector<MapEntry> parse_entries(const ordered_json& j, const std::string& pointer) {
    if (!j.is_array()) schema_error(pointer, "expected an array");
    std::vector<MapEntry> entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = pointer + "/" + std::to_string(i);
        const auto& e = j[i];
        if (!e.is_object()) schema_error(p, "expected an object");
        for (auto it = e.begin(); it != e.end(); ++it)
            if (it.key() != "from" && it.key() != "to" && it.key() != "coeff")
                schema_error(p + "/" + it.key(), "unknown field");
        if (!e.contains("from")) schema_error(p, "missing field \"from\"");
        if (!e.contains("to")) schema_error(p, "missing field \"to\"");
        if (!e.contains("coeff")) schema_error(p, "missing field \"coeff\"");
        MapEntry entry;
        entry.from = get_string(e["from"], p + "/from");
        entry.to = get_string(e["to"], p + "/to");
        std::string coeff = get_string(e["coeff"], p + "/coeff");
        try {
            entry.coeff = rational_from_string(coeff);
        } catch (const Error&) {
            schema_error(p + "/coeff", "expected an exact rational string like \"3\" or \"-1/2\"");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace

KnotComplexData knot_from_json(const std::string& text, bool validated) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) schema_error("", "expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key != "name" && key != "genus" && key != "q" && key != "q0" &&
            key != "generators" && key != "d_plus" && key != "d_minus")
            schema_error("/" + key, "unknown field");
    }

    KnotComplexData k;
    if (!j.contains("name")) schema_error("", "missing field \"name\"");
    k.name = get_string(j["name"], "/name");
    if (!j.contains("genus")) schema_error("", "missing field \"genus\"");
    k.genus = get_int(j["genus"], "/genus");
    if (k.genus < 0) schema_error("/genus", "genus must be >= 0");
    if (j.contains("q")) {
        k.q = get_int(j["q"], "/q");
        if (k.q < 1) schema_error("/q", "q must be >= 1");
    }
    if (j.contains("q0")) k.q0 = get_int(j["q0"], "/q0");

    if (!j.contains("generators")) schema_error("", "missing field \"generators\"");
    if (!j["generators"].is_array()) schema_error("/generators", "expected an array");
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < j["generators"].size(); ++i) {
        const std::string p = "/generators/" + std::to_string(i);
        const auto& g = j["generators"][i];
        if (!g.is_object()) schema_error(p, "expected an object");
        for (auto it = g.begin(); it != g.end(); ++it)
            if (it.key() != "id" && it.key() != "alex2" && it.key() != "z2")
                schema_error(p + "/" + it.key(), "unknown field");
        if (!g.contains("id")) schema_error(p, "missing field \"id\"");
        if (!g.contains("alex2")) schema_error(p, "missing field \"alex2\"");
        if (!g.contains("z2")) schema_error(p, "missing field \"z2\"");
        Generator gen;
        gen.label = get_string(g["id"], p + "/id");
        gen.grading.alex2 = get_int(g["alex2"], p + "/alex2");
        long long z2 = get_int(g["z2"], p + "/z2");
        if (z2 != 0 && z2 != 1) schema_error(p + "/z2", "expected 0 or 1");
        gen.grading.h = static_cast<int>(z2);
        gens.push_back(std::move(gen));
    }
    try {
        k.space = GradedSpace(std::move(gens));
    } catch (const Error& e) {
        schema_error("/generators", e.what());
    }

    auto load_map = [&](const char* field) {
        std::vector<MapEntry> entries;
        if (j.contains(field)) entries = parse_entries(j[field], std::string("/") + field);
        try {
            return GradedMap(k.space, k.space, std::move(entries));
        } catch (const Error& e) {
            schema_error(std::string("/") + field, e.what());
        }
    };
    k.d_plus = load_map("d_plus");
    k.d_minus = load_map("d_minus");

    if (validated) require_valid(k);
    return k;
}

std::string knot_to_json(const KnotComplexData& k) {
    ordered_json j;
    j["name"] = k.name;
    j["genus"] = k.genus;
    j["q"] = k.q;
    j["q0"] = k.q0;
    j["generators"] = ordered_json::array();
    for (const auto& g : k.space.generators())
        j["generators"].push_back(
            {{"id", g.label}, {"alex2", g.grading.alex2}, {"z2", g.grading.h}});
    auto dump_map = [](const GradedMap& d) {
        ordered_json arr = ordered_json::array();
        for (const auto& e : d.entries())
            arr.push_back(
                {{"from", e.from}, {"to", e.to}, {"coeff", rational_to_string(e.coeff)}});
        return arr;
    };
    j["d_plus"] = dump_map(k.d_plus);
    j["d_minus"] = dump_map(k.d_minus);
    return j.dump(2) + "\n";
}

KnotComplexData load_knot(const std::string& path, bool validated) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return knot_from_json(buf.str(), validated);
}

void save_knot(const KnotComplexData& k, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot write \"" + path + "\"");
    out << knot_to_json(k);
}

// ---------------------------------------------------------------------------
// Built-in models

namespace {

KnotComplexData make_knot(std::string name, long long genus, std::vector<Generator> gens,
                          std::vector<MapEntry> dplus, std::vector<MapEntry> dminus) {
    KnotComplexData k;
    k.name = std::move(name);
    k.genus = genus;
    k.space = GradedSpace(std::move(gens));
    k.d_plus = GradedMap(k.space, k.space, std::move(dplus));
    k.d_minus = GradedMap(k.space, k.space, std::move(dminus));
    return k;
}

} // namespace

std::vector<KnotComplexData> catalog() {
    std::vector<KnotComplexData> out;

    out.push_back(make_knot("unknot", 0, {{"u", {0, 0}}}, {}, {}));

    KnotComplexData trefoil_neg =
        make_knot("trefoil-neg", 1, {{"x1", {2, 0}}, {"x2", {0, 1}}, {"x3", {-2, 0}}},
                  {{"x2", "x1", Rational(1)}}, {{"x2", "x3", Rational(1)}});
    KnotComplexData trefoil_pos = mirror(trefoil_neg);
    trefoil_pos.name = "trefoil-pos";
    out.push_back(std::move(trefoil_neg));
    out.push_back(std::move(trefoil_pos));

    out.push_back(make_knot(
        "box", 1,
        {{"u", {0, 0}}, {"p", {2, 0}}, {"q", {0, 1}}, {"t", {0, 1}}, {"s", {-2, 0}}},
        {{"q", "p", Rational(1)}, {"s", "t", Rational(1)}},
        {{"t", "s", Rational(1)}, {"p", "q", Rational(1)}}));

    return out;
}

KnotComplexData catalog_knot(const std::string& name) {
    for (auto& k : catalog())
        if (k.name == name) return k;
    fail(ErrorKind::Io, "no catalog model named \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// Random valid inputs
//
// A random input is a direct sum of one "survivor" block carrying the unit
// d_plus- and d_minus-homology plus acyclic blocks, conjugated by a random
// grading-preserving automorphism (applied to both differentials, so every
// computed invariant is unchanged) and relabelled. Survivor shapes:
//   - a single generator at grading zero          (tau = 0, nu = 1)
//   - a vee x -> {hi, lo} at gradings +-2t        (tau = -t, nu = -t + 1)
//   - its mirror                                  (tau = +t, nu = +t)
//   - a box-with-center                           (tau = 0, nu = 1)
//   - a crossed box                               (tau = 0, nu = 0)

namespace {

struct Builder {
    std::vector<Generator> gens;
    std::vector<MapEntry> dp;
    std::vector<MapEntry> dm;
    int counter = 0;

    std::string fresh() { return "g" + std::to_string(counter++); }

    std::string add(long long alex2, int h) {
        std::string label = fresh();
        gens.push_back({label, {alex2, h}});
        return label;
    }
};

} // namespace

KnotComplexData random_knot(std::uint64_t seed) {
    Rng rng(seed ^ 0x5eedULL);
    Builder b;

    int shape = static_cast<int>(rng.range(0, 4));
    long long t = rng.range(1, 2);
    long long surv_top = 0;  // largest |alex2| used by the survivor block
    int hbase = static_cast<int>(rng.range(0, 1));

    switch (shape) {
        case 0: {  // single generator
            b.add(0, hbase);
            break;
        }
        case 1: {  // vee: tau = -t
            std::string hi = b.add(2 * t, hbase);
            std::string lo = b.add(-2 * t, hbase);
            std::string mid = b.add(0, (hbase + 1) % 2);
            b.dp.push_back({mid, hi, rng.nonzero_rational()});
            b.dm.push_back({mid, lo, rng.nonzero_rational()});
            surv_top = 2 * t;
            break;
        }
        case 2: {  // mirrored vee: tau = +t
            std::string hi = b.add(2 * t, hbase);
            std::string lo = b.add(-2 * t, hbase);
            std::string mid = b.add(0, (hbase + 1) % 2);
            b.dp.push_back({lo, mid, rng.nonzero_rational()});
            b.dm.push_back({hi, mid, rng.nonzero_rational()});
            surv_top = 2 * t;
            break;
        }
        case 3: {  // box with center: tau = 0, nu = 1
            std::string u = b.add(0, hbase);
            std::string p = b.add(2, (hbase + 1) % 2);
            std::string q = b.add(0, hbase);
            std::string w = b.add(0, hbase);
            std::string s = b.add(-2, (hbase + 1) % 2);
            b.dp.push_back({q, p, rng.nonzero_rational()});
            b.dp.push_back({s, w, rng.nonzero_rational()});
            b.dm.push_back({w, s, rng.nonzero_rational()});
            b.dm.push_back({p, q, rng.nonzero_rational()});
            (void)u;
            surv_top = 2;
            break;
        }
        case 4: {  // crossed box: tau = 0, nu = 0
            std::string a = b.add(0, hbase);
            std::string c = b.add(0, hbase);
            std::string x = b.add(2, (hbase + 1) % 2);
            std::string y = b.add(-2, (hbase + 1) % 2);
            std::string w = b.add(0, hbase);
            b.dp.push_back({a, x, rng.nonzero_rational()});
            b.dp.push_back({y, w, rng.nonzero_rational()});
            b.dm.push_back({c, y, rng.nonzero_rational()});
            b.dm.push_back({x, w, rng.nonzero_rational()});
            surv_top = 2;
            break;
        }
    }

    long long genus = std::max<long long>(surv_top / 2, rng.range(surv_top / 2, 3));

    // Acyclic staircase blocks: d_plus maps the lower generator up, d_minus
    // maps the upper one back down. Keeps both homologies untouched. Blocks
    // are added symmetrically about grading zero, matching the grading
    // symmetry that actual knot data carries.
    int blocks = genus >= 1 ? static_cast<int>(rng.range(0, 2)) : 0;
    auto add_staircase = [&](long long bot, long long top) {
        int h = static_cast<int>(rng.range(0, 1));
        std::string lo = b.add(bot, h);
        std::string hi = b.add(top, (h + 1) % 2);
        b.dp.push_back({lo, hi, rng.nonzero_rational()});
        b.dm.push_back({hi, lo, rng.nonzero_rational()});
    };
    for (int i = 0; i < blocks && b.gens.size() + 4 <= 12; ++i) {
        long long top = 2 * rng.range(-genus + 1, genus);
        long long bot = top - 2 * rng.range(1, std::max<long long>(1, (top + 2 * genus) / 2));
        if (bot < -2 * genus) bot = -2 * genus;
        if (bot >= top) continue;
        add_staircase(bot, top);
        if (bot != -top) add_staircase(-top, -bot);
    }

    GradedSpace space(b.gens);
    QMatrix dp = GradedMap(space, space, b.dp).to_matrix();
    QMatrix dm = GradedMap(space, space, b.dm).to_matrix();

    // Random invertible grading-preserving change of basis, applied to both
    // differentials as T d T^{-1}. Upper triangular within each (alex2, h)
    // class with nonzero diagonal, so it is invertible by construction.
    const std::size_t n = space.size();
    QMatrix t_mat(n, n);
    for (std::size_t i = 0; i < n; ++i) t_mat.at(i, i) = rng.nonzero_rational(3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (space.grading(i) == space.grading(j) && rng.chance(1, 2))
                t_mat.at(i, j) = rng.rational(2);
    auto t_inv = t_mat.solve(QMatrix::identity(n));
    QMatrix dp2 = t_mat.multiply(dp).multiply(*t_inv);
    QMatrix dm2 = t_mat.multiply(dm).multiply(*t_inv);

    KnotComplexData k;
    k.name = "random-" + std::to_string(seed);
    k.genus = genus;
    k.space = space;
    k.d_plus = GradedMap::from_matrix(space, space, dp2);
    k.d_minus = GradedMap::from_matrix(space, space, dm2);
    require_valid(k);
    return k;
}

KnotComplexData open_knot(const std::string& spec) {
    const std::string prefix = "catalog:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string name = spec.substr(prefix.size());
        const std::string rnd = "random-";
        if (name.rfind(rnd, 0) == 0) {
            try {
                return random_knot(std::stoull(name.substr(rnd.size())));
            } catch (const std::exception&) {
                fail(ErrorKind::Io, "bad random catalog spec \"" + spec + "\"");
            }
        }
        return catalog_knot(name);
    }
    return load_knot(spec);
}

} // namespace instcone
