#include "graded.hpp"

#include <algorithm>

#include "errors.hpp"

namespace instcone {

std::string grading_to_string(const Grading& g) {
    std::string s = "(";
    if (g.alex2 % 2 == 0) {
        s += std::to_string(g.alex2 / 2);
    } else {
        s += std::to_string(g.alex2) + "/2";
    }
    s += ", h=" + std::to_string(g.h) + ")";
    return s;
}

GradedSpace::GradedSpace(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        auto [it, fresh] = index_.emplace(gens_[i].label, i);
        if (!fresh) fail(ErrorKind::Schema, "duplicate generator label \"" + gens_[i].label + "\"");
        if (gens_[i].grading.h != 0 && gens_[i].grading.h != 1)
            fail(ErrorKind::Schema, "generator \"" + gens_[i].label + "\" has z2 grading outside {0,1}");
    }
}

std::optional<std::size_t> GradedSpace::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GradedSpace::index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) fail(ErrorKind::Internal, "unknown generator label \"" + label + "\"");
    return *i;
}

bool GradedSpace::operator==(const GradedSpace& other) const { return gens_ == other.gens_; }

GradedMap::GradedMap(GradedSpace source, GradedSpace target, std::vector<MapEntry> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    for (auto& e : entries_) {
        if (!source_.find(e.from))
            fail(ErrorKind::Schema, "map entry references unknown source generator \"" + e.from + "\"");
        if (!target_.find(e.to))
            fail(ErrorKind::Schema, "map entry references unknown target generator \"" + e.to + "\"");
    }
    std::erase_if(entries_, [](const MapEntry& e) { return instcone::is_zero(e.coeff); });
    std::sort(entries_.begin(), entries_.end(), [&](const MapEntry& a, const MapEntry& b) {
        auto ka = std::make_pair(source_.index_of(a.from), target_.index_of(a.to));
        auto kb = std::make_pair(source_.index_of(b.from), target_.index_of(b.to));
        return ka < kb;
    });
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1].from == entries_[i].from && entries_[i - 1].to == entries_[i].to)
            fail(ErrorKind::Schema, "duplicate map entry " + entries_[i].from + " -> " + entries_[i].to);
}

GradedMap GradedMap::zero(GradedSpace source, GradedSpace target) {
    return GradedMap(std::move(source), std::move(target), {});
}

GradedMap GradedMap::identity(const GradedSpace& space) {
    std::vector<MapEntry> entries;
    for (const auto& g : space.generators()) entries.push_back({g.label, g.label, Rational(1)});
    return GradedMap(space, space, std::move(entries));
}

GradedMap GradedMap::from_matrix(const GradedSpace& source, const GradedSpace& target,
                                 const QMatrix& m) {
    if (m.rows() != target.size() || m.cols() != source.size())
        fail(ErrorKind::Internal, "from_matrix shape mismatch");
    std::vector<MapEntry> entries;
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!instcone::is_zero(m.at(r, c)))
                entries.push_back({source.generator(c).label, target.generator(r).label, m.at(r, c)});
    return GradedMap(source, target, std::move(entries));
}

QMatrix GradedMap::to_matrix() const {
    QMatrix m(target_.size(), source_.size());
    for (const auto& e : entries_) m.at(target_.index_of(e.to), source_.index_of(e.from)) = e.coeff;
    return m;
}

bool GradedMap::is_homogeneous(long long alex2_shift, int h_shift) const {
    for (const auto& e : entries_) {
        const Grading& s = source_.grading(source_.index_of(e.from));
        const Grading& t = target_.grading(target_.index_of(e.to));
        if (t.alex2 - s.alex2 != alex2_shift) return false;
        if (((t.h - s.h) % 2 + 2) % 2 != ((h_shift % 2) + 2) % 2) return false;
    }
    return true;
}

std::optional<std::pair<long long, int>> GradedMap::homogeneous_shift() const {
    if (entries_.empty()) return std::make_pair(0LL, 0);
    const Grading& s0 = source_.grading(source_.index_of(entries_[0].from));
    const Grading& t0 = target_.grading(target_.index_of(entries_[0].to));
    long long a = t0.alex2 - s0.alex2;
    int h = (((t0.h - s0.h) % 2) + 2) % 2;
    if (!is_homogeneous(a, h)) return std::nullopt;
    return std::make_pair(a, h);
}

GradedMap GradedMap::transpose() const {
    std::vector<MapEntry> entries;
    entries.reserve(entries_.size());
    for (const auto& e : entries_) entries.push_back({e.to, e.from, e.coeff});
    return GradedMap(target_, source_, std::move(entries));
}

GradedMap GradedMap::scale(const Rational& c) const {
    std::vector<MapEntry> entries = entries_;
    for (auto& e : entries) e.coeff *= c;
    return GradedMap(source_, target_, std::move(entries));
}

GradedMap GradedMap::add(const GradedMap& other) const {
    if (!(source_ == other.source_) || !(target_ == other.target_))
        fail(ErrorKind::Internal, "map sum between different spaces");
    return from_matrix(source_, target_, to_matrix().add(other.to_matrix()));
}

GradedMap rescale_by_grading(const GradedMap& f, const std::map<Grading, Rational>& scalars) {
    std::vector<MapEntry> entries = f.entries();
    for (auto& e : entries) {
        const Grading& g = f.source().grading(f.source().index_of(e.from));
        auto it = scalars.find(g);
        if (it == scalars.end())
            fail(ErrorKind::MissingScalar,
                 "no scalar for source grading " + grading_to_string(g) + " of entry " + e.from +
                     " -> " + e.to);
        if (is_zero(it->second))
            fail(ErrorKind::MissingScalar, "scalar for grading " + grading_to_string(g) + " is zero");
        e.coeff *= it->second;
    }
    return GradedMap(f.source(), f.target(), std::move(entries));
}

} // namespace instcone
