#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace instcone {

// splitmix64. Small, fully deterministic across platforms, good enough for
// fixture generation; reproducibility of seeded runs is a hard requirement.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        if (hi <= lo) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    bool chance(int num, int den) { return range(0, den - 1) < num; }

    Rational nonzero_rational(int max_abs = 5) {
        long long num = 0;
        while (num == 0) num = range(-max_abs, max_abs);
        long long den = range(1, max_abs);
        Rational q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return q;
    }

    Rational rational(int max_abs = 5) {
        long long num = range(-max_abs, max_abs);
        long long den = range(1, max_abs);
        Rational q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return q;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(range(0, static_cast<long long>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace instcone
