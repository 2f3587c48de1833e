#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "linkvol/error.hpp"

namespace linkvol {

/// Word in the Artin generators of the braid group on `strands` strands. Letter i stands for
/// sigma_i, -i for its inverse.
class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters = {}) : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 2)
            throw InvalidArgument("a braid needs at least two strands");
        for (int l : letters_)
            if (l == 0 || std::abs(l) >= strands_)
                throw InvalidArgument("generator " + std::to_string(l) + " invalid on " + std::to_string(strands_) +
                                      " strands");
    }

    int strands() const noexcept { return strands_; }
    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }

    bool positive() const {
        return std::all_of(letters_.begin(), letters_.end(), [](int l) { return l > 0; });
    }

    BraidWord& operator*=(const BraidWord& o) {
        if (o.strands_ != strands_)
            throw InvalidArgument("cannot multiply braids on different strand counts");
        letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
        return *this;
    }
    friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }

    BraidWord inverse() const {
        std::vector<int> inv(letters_.rbegin(), letters_.rend());
        for (int& l : inv)
            l = -l;
        return BraidWord(strands_, std::move(inv));
    }

    BraidWord power(std::int64_t k) const {
        const BraidWord base = k < 0 ? inverse() : *this;
        BraidWord out(strands_);
        for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
            out *= base;
        return out;
    }

    /// Artin notation, e.g. "s1 s2 s1^-1". The empty word prints as "e".
    std::string artin() const {
        if (letters_.empty())
            return "e";
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i)
                out += ' ';
            out += 's' + std::to_string(std::abs(letters_[i]));
            if (letters_[i] < 0)
                out += "^-1";
        }
        return out;
    }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<int> letters_;
};

/// sigma_1 sigma_2 ... sigma_{k-1} on `strands` strands.
inline BraidWord ascending_block(int strands, int k) {
    std::vector<int> letters(static_cast<std::size_t>(k - 1));
    std::iota(letters.begin(), letters.end(), 1);
    return BraidWord(strands, std::move(letters));
}

/// T(p, q; r, s): (sigma_1...sigma_{p-1})^q (sigma_1...sigma_{r-1})^{r s}, i.e. s full twists on
/// the first r strands after the torus braid.
inline BraidWord twisted_torus_braid(int p, std::int64_t q, int r, std::int64_t s) {
    if (p < 2)
        throw InvalidArgument("twisted torus knot needs p >= 2");
    if (r < 2 || r > p)
        throw InvalidArgument("twisted strand count r must lie in [2, p]");
    return ascending_block(p, p).power(q) * ascending_block(p, r).power(static_cast<std::int64_t>(r) * s);
}

inline BraidWord torus_braid(int p, std::int64_t q) { return ascending_block(p, p).power(q); }

/// Strand permutation of the braid: perm[i] is where strand i ends.
inline std::vector<int> braid_permutation(const BraidWord& w) {
    std::vector<int> position(static_cast<std::size_t>(w.strands()));
    std::iota(position.begin(), position.end(), 0);
    // track which strand sits at each position
    std::vector<int> at = position;
    for (int l : w.letters()) {
        const int i = std::abs(l) - 1;
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> perm(position.size());
    for (std::size_t pos = 0; pos < at.size(); ++pos)
        perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
    return perm;
}

/// Number of components of the closure = number of cycles of the strand permutation.
inline int closure_components(const BraidWord& w) {
    const auto perm = braid_permutation(w);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j]))
            seen[j] = true;
    }
    return cycles;
}

inline std::int64_t exponent_sum(const BraidWord& w) {
    std::int64_t sum = 0;
    for (int l : w.letters())
        sum += l > 0 ? 1 : -1;
    return sum;
}

/// Euler characteristic of the Seifert surface of the closure of a positive braid:
/// strands - crossings.
inline std::int64_t bennequin_chi(const BraidWord& w) {
    if (!w.positive())
        throw InvalidArgument("bennequin_chi needs a positive braid word");
    return static_cast<std::int64_t>(w.strands()) - static_cast<std::int64_t>(w.length());
}

/// Genus of the closure of a positive braid whose closure is a knot, (1 - chi) / 2. Refuses
/// links and non-positive words, where the surface need not realize the genus.
inline std::int64_t bennequin_genus(const BraidWord& w) {
    const std::int64_t chi = bennequin_chi(w);
    if (closure_components(w) != 1)
        throw InvalidArgument("genus is reported only for braids whose closure is a knot");
    return (1 - chi) / 2;
}

} // namespace linkvol
