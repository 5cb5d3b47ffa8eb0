#pragma once

// Floating-point evaluation of scalars, used only as a test oracle against
// the exact arithmetic. Never part of the library proper.

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "reflectq/scalar.hpp"

namespace reflectq::testsupport {

inline double eval_double(const LaurentPoly& p, const std::vector<double>& point) {
    double acc = 0.0;
    for (auto& [e, c] : p.terms()) {
        double term = rat_to_double(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            term *= std::pow(point[i], e[i]);
        }
        acc += term;
    }
    return acc;
}

inline double eval_double(const Scalar& s, const std::vector<double>& point) {
    return eval_double(s.num(), point) / eval_double(s.den(), point);
}

// deterministic random rational points, small numerators/denominators,
// resampled per-coordinate until no denominator in `guards` vanishes
class RationalPointSource {
  public:
    explicit RationalPointSource(unsigned seed) : rng_(seed) {}

    std::vector<Rat> point(size_t width) {
        std::vector<Rat> pt(width);
        for (auto& x : pt) x = draw();
        return pt;
    }

    std::vector<Rat> point_avoiding(size_t width, const std::vector<Scalar>& guards) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<Rat> pt = point(width);
            bool ok = true;
            for (const auto& g : guards) {
                if (g.den().eval_rat(pt) == 0 || g.num().eval_rat(pt) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return pt;
        }
        throw std::runtime_error("could not sample a pole-free rational point");
    }

    Rat draw() {
        std::uniform_int_distribution<int> num(2, 23);
        std::uniform_int_distribution<int> den(1, 7);
        std::uniform_int_distribution<int> sgn(0, 1);
        int n = num(rng_), d = den(rng_);
        if (sgn(rng_)) n = -n;
        return make_rat(n, d);
    }

  private:
    std::mt19937 rng_;
};

inline std::vector<double> to_double_point(const std::vector<Rat>& pt) {
    std::vector<double> d(pt.size());
    for (size_t i = 0; i < pt.size(); ++i) d[i] = rat_to_double(pt[i]);
    return d;
}

}  // namespace reflectq::testsupport
