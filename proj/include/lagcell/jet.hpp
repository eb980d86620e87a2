#pragma once
/**
 * @file jet.hpp
 * @brief First-order jets over the Gaussian rationals (forward-mode derivatives).
 */

#include <cstddef>
#include <vector>

#include "lagcell/rational.hpp"

namespace lagcell {

struct Jet {
    GaussianRational value;
    std::vector<GaussianRational> partials;

    Jet() = default;
    Jet(GaussianRational v, std::size_t nvars) : value(std::move(v)), partials(nvars) {}

    static Jet variable(GaussianRational v, std::size_t nvars, std::size_t index, GaussianRational seed = 1) {
        Jet j(std::move(v), nvars);
        j.partials[index] = std::move(seed);
        return j;
    }

    Jet& operator+=(const Jet& o) {
        value += o.value;
        grow(o.partials.size());
        for (std::size_t i = 0; i < o.partials.size(); ++i) partials[i] += o.partials[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        value -= o.value;
        grow(o.partials.size());
        for (std::size_t i = 0; i < o.partials.size(); ++i) partials[i] -= o.partials[i];
        return *this;
    }
    Jet& operator*=(const Jet& o) {
        grow(o.partials.size());
        for (std::size_t i = 0; i < partials.size(); ++i) {
            GaussianRational d = partials[i] * o.value;
            if (i < o.partials.size() && !o.partials[i].is_zero()) d += value * o.partials[i];
            partials[i] = std::move(d);
        }
        value *= o.value;
        return *this;
    }

    friend Jet inverse(const Jet& a) {
        const GaussianRational inv = inverse(a.value);
        const GaussianRational dinv = -(inv * inv);
        Jet out(inv, a.partials.size());
        for (std::size_t i = 0; i < a.partials.size(); ++i)
            if (!a.partials[i].is_zero()) out.partials[i] = dinv * a.partials[i];
        return out;
    }

    friend Jet operator-(Jet a) {
        a.value = -a.value;
        for (auto& p : a.partials) p = -p;
        return a;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }

private:
    void grow(std::size_t n) {
        if (partials.size() < n) partials.resize(n);
    }
};

inline bool is_zero(const Jet& j) { return j.value.is_zero(); }

}  // namespace lagcell
