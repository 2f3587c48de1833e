#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linkvol/error.hpp"
#include "linkvol/seifert.hpp"

namespace linkvol {

/// Rational tangle beta/alpha.
struct Tangle {
    std::int64_t beta = 0;
    std::int64_t alpha = 1;
    friend bool operator==(const Tangle&, const Tangle&) = default;
};

/// A Montesinos link given by its plumbing genus and rational tangles. No diagram is stored.
class MontesinosLink {
public:
    MontesinosLink(std::int64_t genus, std::vector<Tangle> tangles) : genus_(genus), tangles_(std::move(tangles)) {
        if (genus_ < 0)
            throw InvalidArgument("Montesinos genus must be non-negative");
        if (tangles_.empty())
            throw InvalidArgument("a Montesinos link needs at least one tangle");
        for (const auto& t : tangles_)
            if (t.alpha < 1)
                throw InvalidArgument("tangle alpha must be positive");
    }

    std::int64_t genus() const noexcept { return genus_; }
    const std::vector<Tangle>& tangles() const noexcept { return tangles_; }

    friend bool operator==(const MontesinosLink&, const MontesinosLink&) = default;

private:
    std::int64_t genus_;
    std::vector<Tangle> tangles_;
};

/// Seifert symbol of the double branched cover: (Oo,0; beta_i/alpha_i) for genus 0 and
/// (On,g; beta_i/alpha_i) otherwise, normalized.
inline SeifertSymbol double_branched_cover(const MontesinosLink& l) {
    std::vector<Fiber> fibers;
    fibers.reserve(l.tangles().size());
    for (const auto& t : l.tangles())
        fibers.push_back({t.beta, t.alpha});
    const BaseClass cls = l.genus() == 0 ? BaseClass::Oo : BaseClass::On;
    return normalize(SeifertSymbol(cls, l.genus(), std::move(fibers)));
}

/// The two Montesinos presentations of L_n: (0; 1/2, -1/2, -2/(4n-1)) and (1; (4n-1)/2).
/// Defined for every n; at n = 0 the third tangle is the integer tangle 2/1.
inline std::pair<MontesinosLink, MontesinosLink> ln_link(std::int64_t n) {
    const std::int64_t m = 4 * n - 1;
    const Tangle third = m > 0 ? Tangle{-2, m} : Tangle{2, -m};
    return {MontesinosLink(0, {{1, 2}, {-1, 2}, third}), MontesinosLink(1, {{m, 2}})};
}

/// Two-tangle data for the twist knot with k half twists: a clasp (1/2) and a twist region (1/k).
inline MontesinosLink twist_knot(std::int64_t k) {
    if (k < 1)
        throw InvalidArgument("twist knot needs at least one half twist");
    return MontesinosLink(0, {{1, 2}, {1, k}});
}

/// Oo over the sphere with at most two exceptional fibers. Normalizes first, since the count of
/// exceptional fibers depends on the presentation.
inline bool is_lens_space_symbol(const SeifertSymbol& s) {
    const SeifertSymbol norm = normalize(s);
    return norm.base_class() == BaseClass::Oo && norm.genus() == 0 && norm.exceptional_fibers().size() <= 2;
}

} // namespace linkvol
