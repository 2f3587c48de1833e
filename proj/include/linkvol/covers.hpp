#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "linkvol/error.hpp"
#include "linkvol/parallel.hpp"

namespace linkvol {

/// Finite presentation: generators 1..generators, relators as words of signed generator indices.
class GroupPresentation {
public:
    GroupPresentation(int generators, std::vector<std::vector<int>> relators)
        : generators_(generators), relators_(std::move(relators)) {
        if (generators_ < 1)
            throw InvalidArgument("a presentation needs at least one generator");
        for (const auto& r : relators_)
            for (int l : r)
                if (l == 0 || std::abs(l) > generators_)
                    throw InvalidArgument("relator letter " + std::to_string(l) + " names no generator");
    }

    int generators() const noexcept { return generators_; }
    const std::vector<std::vector<int>>& relators() const noexcept { return relators_; }

    GroupPresentation with_relator(std::vector<int> r) const {
        auto rels = relators_;
        rels.push_back(std::move(r));
        return GroupPresentation(generators_, std::move(rels));
    }

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

private:
    int generators_;
    std::vector<std::vector<int>> relators_;
};

enum class RepresentationFilter { all, transitive };

/// Largest number of candidate generator tuples count_representations will scan.
inline constexpr double kRepresentationBudget = 1e8;

namespace detail {

using Perm = std::vector<std::uint8_t>;

inline std::vector<Perm> symmetric_group(int d) {
    Perm p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    std::vector<Perm> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

inline Perm inverse(const Perm& p) {
    Perm inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[p[i]] = static_cast<std::uint8_t>(i);
    return inv;
}

class RepresentationCounter {
public:
    RepresentationCounter(const GroupPresentation& g, int d, RepresentationFilter filter)
        : g_(g), d_(d), filter_(filter), group_(symmetric_group(d)) {
        inverses_.reserve(group_.size());
        for (const auto& p : group_)
            inverses_.push_back(inverse(p));
        // Relators become checkable once their highest generator is assigned.
        checks_.resize(static_cast<std::size_t>(g.generators()));
        for (const auto& r : g.relators()) {
            int top = 0;
            for (int l : r)
                top = std::max(top, std::abs(l));
            if (top > 0)
                checks_[static_cast<std::size_t>(top - 1)].push_back(&r);
        }
    }

    std::size_t group_order() const { return group_.size(); }

    /// Homomorphisms whose first generator maps to group element `first`.
    std::uint64_t count_with_first(std::size_t first) const {
        std::vector<std::size_t> choice(static_cast<std::size_t>(g_.generators()));
        choice[0] = first;
        if (!relators_hold(0, choice))
            return 0;
        return extend(1, choice);
    }

private:
    std::uint64_t extend(std::size_t k, std::vector<std::size_t>& choice) const {
        if (k == choice.size())
            return (filter_ == RepresentationFilter::all || transitive(choice)) ? 1 : 0;
        std::uint64_t total = 0;
        for (std::size_t e = 0; e < group_.size(); ++e) {
            choice[k] = e;
            if (relators_hold(k, choice))
                total += extend(k + 1, choice);
        }
        return total;
    }

    bool relators_hold(std::size_t k, const std::vector<std::size_t>& choice) const {
        Perm cur(static_cast<std::size_t>(d_));
        for (const auto* r : checks_[k]) {
            std::iota(cur.begin(), cur.end(), std::uint8_t{0});
            for (int l : *r) {
                const std::size_t idx = choice[static_cast<std::size_t>(std::abs(l) - 1)];
                const Perm& p = l > 0 ? group_[idx] : inverses_[idx];
                for (auto& c : cur)
                    c = p[c];
            }
            for (std::size_t i = 0; i < cur.size(); ++i)
                if (cur[i] != i)
                    return false;
        }
        return true;
    }

    bool transitive(const std::vector<std::size_t>& choice) const {
        std::vector<bool> seen(static_cast<std::size_t>(d_), false);
        std::vector<std::uint8_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (auto idx : choice) {
                const auto y = group_[idx][x];
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        return reached == static_cast<std::size_t>(d_);
    }

    const GroupPresentation& g_;
    int d_;
    RepresentationFilter filter_;
    std::vector<Perm> group_;
    std::vector<Perm> inverses_;
    std::vector<std::vector<const std::vector<int>*>> checks_;
};

} // namespace detail

/// Number of candidate tuples (d!)^generators, as a double.
inline double representation_candidates(const GroupPresentation& g, int d) {
    return std::pow(std::tgamma(static_cast<double>(d) + 1.0), g.generators());
}

/// Number of homomorphisms from the presented group to the symmetric group on d symbols (tuples
/// of permutations satisfying every relator), optionally only those with transitive image.
/// Exhaustive, with relators checked as soon as their generators are assigned. The tuple space
/// is split by the image of the first generator across `workers` threads.
inline std::uint64_t count_representations(const GroupPresentation& g, int d,
                                            RepresentationFilter filter = RepresentationFilter::all,
                                            unsigned workers = default_workers()) {
    if (d < 1)
        throw InvalidArgument("symmetric group degree must be positive");
    const double candidates = representation_candidates(g, d);
    if (d > 12 || candidates > kRepresentationBudget) {
        std::ostringstream msg;
        msg << std::setprecision(3) << "enumeration of " << candidates << " tuples into S_" << d
            << " exceeds the budget of " << kRepresentationBudget << (d > 12 ? " (degree above 12)" : "");
        throw TooLarge(msg.str(), candidates, kRepresentationBudget);
    }
    const detail::RepresentationCounter counter(g, d, filter);
    const auto partial = parallel_map(
        counter.group_order(), [&](std::size_t first) { return counter.count_with_first(first); }, workers);
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

} // namespace linkvol
