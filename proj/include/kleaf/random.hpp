#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace kleaf {

// Seeded generator whose draws are identical on every platform (the standard
// distributions are implementation-defined, so they are avoided here).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform-ish integer in [lo, hi].
    int uniform(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool chance(int percent) { return uniform(0, 99) < percent; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(engine_() % i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace kleaf
