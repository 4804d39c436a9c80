#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

namespace monkey {

// One keystroke model. UniformRandom: every symbol 1/m. Educated: types only
// typical text at entropy rate h bits/character, so 2^(lh) keystrokes per
// length-l target. IIDGeneral: arbitrary fixed per-symbol distribution.
struct UniformRandom {
    int m;
};
struct Educated {
    double h;
};
struct IIDGeneral {
    std::vector<double> probs;
};

class MonkeyModel {
public:
    MonkeyModel(UniformRandom u) : kind_(u) {
        if (u.m < 2) throw std::invalid_argument("alphabet size must be >= 2");
    }
    MonkeyModel(Educated e) : kind_(e) {
        if (!(e.h > 0)) throw std::invalid_argument("entropy rate must be > 0");
    }
    MonkeyModel(IIDGeneral g) : kind_(std::move(g)) {
        const auto& p = std::get<IIDGeneral>(kind_).probs;
        if (p.size() < 2) throw std::invalid_argument("need >= 2 symbols");
        double sum = 0.0;
        for (double x : p) {
            if (!(x > 0)) throw std::invalid_argument("probabilities must be > 0");
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("probabilities must sum to 1");
    }

    bool is_uniform() const { return std::holds_alternative<UniformRandom>(kind_); }
    bool is_educated() const { return std::holds_alternative<Educated>(kind_); }
    bool is_iid_general() const { return std::holds_alternative<IIDGeneral>(kind_); }

    const UniformRandom& uniform() const { return std::get<UniformRandom>(kind_); }
    const Educated& educated() const { return std::get<Educated>(kind_); }
    const IIDGeneral& iid_general() const { return std::get<IIDGeneral>(kind_); }

    // Symbol count for models that have one.
    int alphabet_size() const {
        if (is_uniform()) return uniform().m;
        if (is_iid_general()) return static_cast<int>(iid_general().probs.size());
        throw std::logic_error("educated model has no alphabet size");
    }

private:
    std::variant<UniformRandom, Educated, IIDGeneral> kind_;
};

} // namespace monkey
