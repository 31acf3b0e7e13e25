/*
   Copyright 2026 the supfbm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUPFBM_TYPES_HPP
#define SUPFBM_TYPES_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace supfbm {

/// Hurst roughness parameter, restricted to (0, 1].
class HurstExponent {
public:
    explicit HurstExponent(double h) : h_(h) {
        if (!(std::isfinite(h) && h > 0.0 && h <= 1.0)) {
            throw std::domain_error("Hurst exponent must lie in (0, 1], got " +
                                    std::to_string(h));
        }
    }
    double value() const noexcept { return h_; }

private:
    double h_;
};

/// Power applied to the supremum; any positive real.
class MomentOrder {
public:
    explicit MomentOrder(double gamma) : gamma_(gamma) {
        if (!(std::isfinite(gamma) && gamma > 0.0)) {
            throw std::domain_error("moment order must be finite and > 0, got " +
                                    std::to_string(gamma));
        }
    }
    double value() const noexcept { return gamma_; }

private:
    double gamma_;
};

/// Right endpoint of the time interval [0, T].
class Horizon {
public:
    explicit Horizon(double t) : t_(t) {
        if (!(std::isfinite(t) && t > 0.0)) {
            throw std::domain_error("horizon must be finite and > 0, got " +
                                    std::to_string(t));
        }
    }
    double value() const noexcept { return t_; }

private:
    double t_;
};

/// Uniform grid t_i = i*T/n_steps, i = 0..n_steps.
struct GridSpec {
    std::int64_t n_steps;
    Horizon horizon;

    GridSpec(std::int64_t n, Horizon t) : n_steps(n), horizon(t) {
        if (n < 2) {
            throw std::domain_error("grid needs at least 2 steps, got " +
                                    std::to_string(n));
        }
    }
    double dt() const noexcept { return horizon.value() / double(n_steps); }
    double time_at(std::int64_t i) const noexcept {
        return double(i) * horizon.value() / double(n_steps);
    }
    friend bool operator==(const GridSpec& a, const GridSpec& b) noexcept {
        return a.n_steps == b.n_steps && a.horizon.value() == b.horizon.value();
    }
};

/// Identifies the formula a bound or exact value came from.
enum class FormulaTag {
    THM1_I,
    THM1_II_LOWER,
    THM1_II_UPPER,
    PROP1_I,
    PROP1_II,
    LEMMA_CONCAVE,
    LEMMA_CONVEX,
};

inline std::string to_string(FormulaTag tag) {
    switch (tag) {
        case FormulaTag::THM1_I: return "THM1_I";
        case FormulaTag::THM1_II_LOWER: return "THM1_II_LOWER";
        case FormulaTag::THM1_II_UPPER: return "THM1_II_UPPER";
        case FormulaTag::PROP1_I: return "PROP1_I";
        case FormulaTag::PROP1_II: return "PROP1_II";
        case FormulaTag::LEMMA_CONCAVE: return "LEMMA_CONCAVE";
        case FormulaTag::LEMMA_CONVEX: return "LEMMA_CONVEX";
    }
    throw std::logic_error("unknown FormulaTag");
}

/// Whether the supremum is taken over |X(t)| or over X(t) itself.
enum class SupMode { reflected, one_sided };

inline std::string to_string(SupMode mode) {
    return mode == SupMode::reflected ? "reflected" : "one_sided";
}

inline SupMode sup_mode_from_string(const std::string& s) {
    if (s == "reflected") return SupMode::reflected;
    if (s == "one_sided" || s == "one-sided") return SupMode::one_sided;
    throw std::domain_error("unknown supremum mode: " + s);
}

/// Lower/upper/exact values for a sup-moment constant, each tagged with
/// the formula that produced it.  `one_sided` marks bounds that apply to
/// E[sup X]^gamma rather than the reflected E[sup |X|]^gamma.
struct BoundsReport {
    double lower = 0.0;
    std::optional<double> upper;
    std::optional<double> exact;
    FormulaTag lower_tag = FormulaTag::THM1_I;
    std::optional<FormulaTag> upper_tag;
    std::optional<FormulaTag> exact_tag;
    bool one_sided = false;
};

}  // namespace supfbm

#endif  // SUPFBM_TYPES_HPP
