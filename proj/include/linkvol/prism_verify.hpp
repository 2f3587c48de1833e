#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkvol/case_analysis.hpp"
#include "linkvol/diophantine.hpp"
#include "linkvol/montesinos.hpp"
#include "linkvol/parallel.hpp"
#include "linkvol/slopes.hpp"
#include "linkvol/volume.hpp"

namespace linkvol {

enum class PrismStatus {
    excluded,              ///< degenerate parameter, outside the prism family
    candidate_exceptional, ///< a computable obstruction fails; n may have lv < 2 V0
    conditional            ///< every computable obstruction holds; lv = 2 V0 modulo non-effective steps
};

inline const char* to_string(PrismStatus s) {
    switch (s) {
    case PrismStatus::excluded: return "excluded";
    case PrismStatus::candidate_exceptional: return "candidate-exceptional";
    case PrismStatus::conditional: return "conditional";
    }
    return "?";
}

struct SlopeDemo {
    std::vector<std::pair<Slope, Slope>> pairs; // (regular fiber f, fiber-surface boundary c)
    std::vector<std::size_t> counts;            // #{alpha : delta(f,alpha) = 1, delta(c,alpha) <= 2}
};

struct PrismReport {
    std::int64_t n = 0;
    PrismStatus status = PrismStatus::excluded;
    std::optional<CoverCertificate> upper_bound; // double cover over L_n
    double upper_bound_value = 0.0;
    bool twist_knot_excluded = false;
    std::optional<CaseAnalysis> case_analysis;
    SlopeDemo slope_demo;
    std::int64_t max_degree = 0; // largest degree p >= 3 cover still within budget
    std::vector<std::string> conditional_on;
    std::string note;
};

struct PrismVerification {
    std::vector<PrismReport> reports; // ascending n

    std::vector<std::int64_t> with_status(PrismStatus s) const {
        std::vector<std::int64_t> out;
        for (const auto& r : reports)
            if (r.status == s)
                out.push_back(r.n);
        return out;
    }
    std::vector<std::int64_t> candidate_exceptional() const { return with_status(PrismStatus::candidate_exceptional); }
};

/// Representative (f, boundary-of-fiber-surface) slope pairs for the finiteness demonstration.
inline std::vector<std::pair<Slope, Slope>> slope_demo_pairs() {
    return {{Slope(1, 0), Slope(0, 1)}, {Slope(1, 0), Slope(1, 2)}, {Slope(2, 1), Slope(1, 1)}, {Slope(3, 2), Slope(5, 3)}};
}

/// Twist knots checked by the lens-space exclusion: W_k for k in [1, kTwistKnotRange].
inline constexpr std::int64_t kTwistKnotRange = 24;

/// Steps of the argument that are finite but not effective; they qualify every verdict.
inline std::vector<std::string> non_effective_steps() {
    return {
        "pseudo-Anosov monodromy: finitely many fillings are non-hyperbolic (non-effective)",
        "reducible monodromy, hyperbolic V1: finitely many non-hyperbolic fillings (non-effective)",
        "reducible monodromy, Seifert V1: finitely many slopes with delta(f,a)=1, delta(dF,a)<=2; "
        "the slopes on the actual torus are not computed",
        "degree >= 3 covers: finitely many links of volume < 2V0/3, each with finitely many covers (non-effective)",
    };
}

inline PrismReport prism_report(std::int64_t n) {
    PrismReport r;
    r.n = n;
    if (prism_index(n) < 3) {
        r.status = PrismStatus::excluded;
        r.note = "excluded parameter: |4n-1| < 3, M_n is not a prism manifold";
        return r;
    }

    const VolumeConstant& v0 = whitehead_volume();
    r.upper_bound.emplace(2, v0.value, "double cover of S^3 branched over L_n, vol = V0");
    r.upper_bound_value = complexity(*r.upper_bound);

    // Twist-knot exclusion: double covers over twist knots are lens spaces, M_n is not.
    const auto [oo, on] = prism_fibrations(n);
    bool twist_covers_lens = true;
    for (std::int64_t k = 1; k <= kTwistKnotRange; ++k)
        twist_covers_lens = twist_covers_lens && is_lens_space_symbol(double_branched_cover(twist_knot(k)));
    r.twist_knot_excluded = twist_covers_lens && !is_lens_space_symbol(oo) && !is_lens_space_symbol(on);

    r.case_analysis = prism_case_analysis(n);

    for (const auto& [f, c] : slope_demo_pairs()) {
        r.slope_demo.pairs.emplace_back(f, c);
        r.slope_demo.counts.push_back(enumerate_constrained_slopes(f, c, 1, 2).size());
    }

    r.max_degree = degree_bound_for_budget(2.0 * v0.value, one_cusp_floor().value);

    r.conditional_on = non_effective_steps();
    if (r.case_analysis->admits_horizontal() || !r.twist_knot_excluded) {
        r.status = PrismStatus::candidate_exceptional;
        std::string why = "periodic monodromy not excluded:";
        for (const auto& [num, d] : r.case_analysis->solutions())
            why += " case " + std::to_string(num) + " degree " + std::to_string(d) + ";";
        if (!r.twist_knot_excluded)
            why += " twist-knot exclusion failed;";
        r.note = why + " deciding whether M_n double covers S^3 over some P_m needs the isotopy argument";
    } else {
        r.status = PrismStatus::conditional;
        r.note = "lv = 2V0 conditional on the non-effective steps";
    }
    return r;
}

/// Per-n verification over the interval, ascending in n, tasks fanned out on `workers` threads.
inline PrismVerification prism_verify(IntInterval range, unsigned workers = default_workers()) {
    PrismVerification out;
    if (range.empty())
        return out;
    out.reports = parallel_map(
        range.size(), [&](std::size_t i) { return prism_report(range.lo + static_cast<std::int64_t>(i)); }, workers);
    return out;
}

} // namespace linkvol
