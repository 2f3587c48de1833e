#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linkvol/error.hpp"
#include "linkvol/int_matrix.hpp"
#include "linkvol/orbifold.hpp"
#include "linkvol/rational.hpp"
#include "linkvol/smith.hpp"

namespace linkvol {

/// Oo: orientable base, On: non-orientable base (genus counts cross-caps). Total space orientable.
enum class BaseClass { Oo, On };

inline const char* to_string(BaseClass c) { return c == BaseClass::Oo ? "Oo" : "On"; }

/// One beta/alpha entry of a Seifert symbol. alpha == 1 entries are integer terms.
struct Fiber {
    std::int64_t beta = 0;
    std::int64_t alpha = 1;

    bool exceptional() const noexcept { return alpha >= 2; }
    Rational ratio() const { return Rational(BigInt(beta), BigInt(alpha)); }

    friend bool operator==(const Fiber&, const Fiber&) = default;
    friend std::strong_ordering operator<=>(const Fiber& a, const Fiber& b) {
        if (auto c = a.alpha <=> b.alpha; c != 0)
            return c;
        return a.beta <=> b.beta;
    }
};

class SeifertSymbol {
public:
    SeifertSymbol(BaseClass cls, std::int64_t genus, std::vector<Fiber> fibers)
        : class_(cls), genus_(genus), fibers_(std::move(fibers)) {
        if (genus_ < 0)
            throw InvalidArgument("Seifert symbol genus must be non-negative");
        if (class_ == BaseClass::On && genus_ < 1)
            throw InvalidArgument("On symbols need genus >= 1 (at least one cross-cap)");
        for (const auto& f : fibers_) {
            if (f.alpha < 1)
                throw InvalidArgument("fiber alpha must be positive");
            if (f.alpha >= 2 && std::gcd(f.beta, f.alpha) != 1)
                throw InvalidArgument("fiber " + std::to_string(f.beta) + "/" + std::to_string(f.alpha) +
                                      " is not in lowest terms");
        }
    }

    BaseClass base_class() const noexcept { return class_; }
    std::int64_t genus() const noexcept { return genus_; }
    const std::vector<Fiber>& fibers() const noexcept { return fibers_; }

    std::vector<Fiber> exceptional_fibers() const {
        std::vector<Fiber> out;
        for (const auto& f : fibers_)
            if (f.exceptional())
                out.push_back(f);
        return out;
    }

    friend bool operator==(const SeifertSymbol&, const SeifertSymbol&) = default;

    friend std::ostream& operator<<(std::ostream& os, const SeifertSymbol& s) {
        os << '(' << to_string(s.class_) << ',' << s.genus_;
        for (std::size_t i = 0; i < s.fibers_.size(); ++i)
            os << (i ? ", " : "; ") << s.fibers_[i].beta << '/' << s.fibers_[i].alpha;
        return os << ')';
    }

private:
    BaseClass class_;
    std::int64_t genus_;
    std::vector<Fiber> fibers_;
};

/// Unique normal form: exceptional betas reduced into [0, alpha), the excess gathered into one
/// trailing integer term (b, 1), exceptional fibers sorted by (alpha, beta).
inline SeifertSymbol normalize(const SeifertSymbol& s) {
    std::vector<Fiber> exceptional;
    std::int64_t integer_part = 0;
    for (const auto& f : s.fibers()) {
        if (f.alpha == 1) {
            integer_part += f.beta;
            continue;
        }
        std::int64_t q = f.beta / f.alpha;
        std::int64_t r = f.beta % f.alpha;
        if (r < 0) {
            r += f.alpha;
            --q;
        }
        integer_part += q;
        exceptional.push_back({r, f.alpha});
    }
    std::sort(exceptional.begin(), exceptional.end());
    exceptional.push_back({integer_part, 1});
    return SeifertSymbol(s.base_class(), s.genus(), std::move(exceptional));
}

inline bool is_normalized(const SeifertSymbol& s) { return normalize(s) == s; }

/// e = -sum beta/alpha.
inline Rational euler_number(const SeifertSymbol& s) {
    Rational e;
    for (const auto& f : s.fibers())
        e -= f.ratio();
    return e;
}

/// Closed base orbifold; cone indices are the exceptional alphas.
inline Orbifold2D base_orbifold(const SeifertSymbol& s) {
    std::vector<std::int64_t> cones;
    for (const auto& f : s.fibers())
        if (f.exceptional())
            cones.push_back(f.alpha);
    return Orbifold2D(s.base_class() == BaseClass::Oo, s.genus(), 0, std::move(cones));
}

struct RegularFiber {};
struct ExceptionalFiber {
    std::size_t index; // into SeifertSymbol::fibers()
};
using FiberChoice = std::variant<RegularFiber, ExceptionalFiber>;

/// Base orbifold of the complement of a fibered neighbourhood of one fiber: one boundary circle
/// added, and the cone point dropped when the removed fiber is exceptional.
inline Orbifold2D remove_fiber(const SeifertSymbol& s, FiberChoice which) {
    std::vector<std::int64_t> cones;
    std::optional<std::size_t> skip;
    if (const auto* ex = std::get_if<ExceptionalFiber>(&which)) {
        if (ex->index >= s.fibers().size())
            throw InvalidArgument("fiber index " + std::to_string(ex->index) + " out of range");
        if (!s.fibers()[ex->index].exceptional())
            throw InvalidArgument("fiber " + std::to_string(ex->index) + " is not exceptional");
        skip = ex->index;
    }
    for (std::size_t i = 0; i < s.fibers().size(); ++i)
        if (s.fibers()[i].exceptional() && i != skip)
            cones.push_back(s.fibers()[i].alpha);
    return Orbifold2D(s.base_class() == BaseClass::Oo, s.genus(), 1, std::move(cones));
}

/// H_1 of an Oo Seifert manifold. Generators a_1, b_1, ..., a_g, b_g, x_1..x_r, h with relations
/// alpha_i x_i + beta_i h = 0 and x_1 + ... + x_r = 0 (every fiber, integer terms included).
inline AbelianGroup first_homology(const SeifertSymbol& s) {
    if (s.base_class() != BaseClass::Oo)
        throw Unsupported("first_homology is implemented for Oo symbols only");
    const std::size_t r = s.fibers().size();
    const std::size_t surface_gens = 2 * static_cast<std::size_t>(s.genus());
    const std::size_t cols = surface_gens + r + 1;
    IntMatrix rel(r + 1, cols);
    const std::size_t h = cols - 1;
    for (std::size_t i = 0; i < r; ++i) {
        rel(i, surface_gens + i) = s.fibers()[i].alpha;
        rel(i, h) = s.fibers()[i].beta;
        rel(r, surface_gens + i) = 1;
    }
    return abelian_group_from_relations(rel);
}

/// The two Seifert fibrations of the prism manifold M_n, normalized:
/// (Oo,0; 1/2, -1/2, -2/(4n-1)) and (On,1; (4n-1)/2).
inline std::pair<SeifertSymbol, SeifertSymbol> prism_fibrations(std::int64_t n) {
    const std::int64_t m = 4 * n - 1;
    if (m > -3 && m < 3)
        throw DegenerateParameter("n = " + std::to_string(n) + ": |4n-1| < 3, M_n is not a prism manifold");
    // -2/m with a positive denominator
    const Fiber third = m > 0 ? Fiber{-2, m} : Fiber{2, -m};
    SeifertSymbol oo(BaseClass::Oo, 0, {{1, 2}, {-1, 2}, third});
    SeifertSymbol on(BaseClass::On, 1, {{m, 2}});
    return {normalize(oo), normalize(on)};
}

/// |4n - 1|, the third cone index of the Oo fibration of M_n.
inline std::int64_t prism_index(std::int64_t n) {
    const std::int64_t m = 4 * n - 1;
    return m < 0 ? -m : m;
}

} // namespace linkvol
