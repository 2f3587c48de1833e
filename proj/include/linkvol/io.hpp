#pragma once

// JSON schemas for every exchanged type. Parsers name the offending field in their errors.

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "linkvol/braid.hpp"
#include "linkvol/case_analysis.hpp"
#include "linkvol/covers.hpp"
#include "linkvol/error.hpp"
#include "linkvol/montesinos.hpp"
#include "linkvol/orbifold.hpp"
#include "linkvol/prism_verify.hpp"
#include "linkvol/seifert.hpp"
#include "linkvol/slopes.hpp"

namespace linkvol::io {

using Json = nlohmann::ordered_json;

/// Raised for JSON that parses but violates a schema; `field` is a path like "fibers[2][1]".
class SchemaError : public InvalidArgument {
public:
    SchemaError(std::string field, const std::string& what)
        : InvalidArgument("field '" + field + "': " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

inline Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument("malformed JSON at byte " + std::to_string(e.byte) + ": " + text.substr(0, 60));
    }
}

namespace detail {

inline const Json& field(const Json& j, const char* name, const std::string& path) {
    if (!j.is_object())
        throw SchemaError(path.empty() ? std::string("<root>") : path, "expected an object");
    const auto it = j.find(name);
    if (it == j.end())
        throw SchemaError(path.empty() ? name : path + "." + name, "missing");
    return *it;
}

inline std::string join(const std::string& path, const char* name) { return path.empty() ? name : path + "." + name; }
inline std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline std::int64_t as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw SchemaError(path, "expected an integer");
    return j.get<std::int64_t>();
}

inline bool as_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean())
        throw SchemaError(path, "expected true or false");
    return j.get<bool>();
}

inline const Json& as_array(const Json& j, const std::string& path) {
    if (!j.is_array())
        throw SchemaError(path, "expected an array");
    return j;
}

inline std::pair<std::int64_t, std::int64_t> as_pair(const Json& j, const std::string& path) {
    as_array(j, path);
    if (j.size() != 2)
        throw SchemaError(path, "expected a two-element array");
    return {as_int(j[0], index(path, 0)), as_int(j[1], index(path, 1))};
}

inline std::vector<std::int64_t> as_int_list(const Json& j, const std::string& path) {
    as_array(j, path);
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], index(path, i)));
    return out;
}

/// Re-raise invariant violations from a constructor against the object's path.
template <class F>
auto construct(const std::string& path, F&& make) {
    try {
        return make();
    } catch (const SchemaError&) {
        throw;
    } catch (const InvalidArgument& e) {
        throw SchemaError(path.empty() ? std::string("<root>") : path, e.what());
    }
}

} // namespace detail

// ---- slopes ----------------------------------------------------------------

inline Json to_json(const Slope& s) { return Json::array({s.p(), s.q()}); }

inline Slope slope_from_json(const Json& j, const std::string& path = "") {
    const auto [p, q] = detail::as_pair(j, path.empty() ? "<root>" : path);
    return detail::construct(path, [&] { return Slope(p, q); });
}

// ---- Seifert symbols -------------------------------------------------------

inline Json to_json(const SeifertSymbol& s) {
    Json fibers = Json::array();
    for (const auto& f : s.fibers())
        fibers.push_back(Json::array({f.beta, f.alpha}));
    return Json{{"class", to_string(s.base_class())}, {"genus", s.genus()}, {"fibers", std::move(fibers)}};
}

inline SeifertSymbol seifert_from_json(const Json& j, const std::string& path = "") {
    const Json& cls = detail::field(j, "class", path);
    if (!cls.is_string() || (cls != "Oo" && cls != "On"))
        throw SchemaError(detail::join(path, "class"), "expected \"Oo\" or \"On\"");
    const std::int64_t genus = detail::as_int(detail::field(j, "genus", path), detail::join(path, "genus"));
    const std::string fpath = detail::join(path, "fibers");
    const Json& fs = detail::as_array(detail::field(j, "fibers", path), fpath);
    std::vector<Fiber> fibers;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto [beta, alpha] = detail::as_pair(fs[i], detail::index(fpath, i));
        if (alpha < 1)
            throw SchemaError(detail::index(detail::index(fpath, i), 1), "alpha must be positive");
        fibers.push_back({beta, alpha});
    }
    return detail::construct(path, [&] {
        return SeifertSymbol(cls == "Oo" ? BaseClass::Oo : BaseClass::On, genus, std::move(fibers));
    });
}

// ---- surfaces and orbifolds ------------------------------------------------

inline Json to_json(const SurfaceData& s) {
    return Json{{"genus", s.genus},
                {"boundary", s.boundary},
                {"orientable", s.orientable},
                {"chi", s.euler_characteristic()}};
}

inline SurfaceData surface_from_json(const Json& j, const std::string& path = "") {
    const auto genus = detail::as_int(detail::field(j, "genus", path), detail::join(path, "genus"));
    const auto boundary = detail::as_int(detail::field(j, "boundary", path), detail::join(path, "boundary"));
    const auto orientable = detail::as_bool(detail::field(j, "orientable", path), detail::join(path, "orientable"));
    const SurfaceData s = detail::construct(path, [&] { return SurfaceData(genus, boundary, orientable); });
    if (j.contains("chi") && detail::as_int(j["chi"], detail::join(path, "chi")) != s.euler_characteristic())
        throw SchemaError(detail::join(path, "chi"), "inconsistent with genus and boundary");
    return s;
}

inline Json to_json(const Orbifold2D& b) {
    return Json{{"orientable", b.orientable()}, {"genus", b.genus()}, {"boundary", b.boundary()}, {"cones", b.cones()}};
}

inline Orbifold2D orbifold_from_json(const Json& j, const std::string& path = "") {
    const auto orientable = detail::as_bool(detail::field(j, "orientable", path), detail::join(path, "orientable"));
    const auto genus = detail::as_int(detail::field(j, "genus", path), detail::join(path, "genus"));
    const auto boundary = detail::as_int(detail::field(j, "boundary", path), detail::join(path, "boundary"));
    auto cones = detail::as_int_list(detail::field(j, "cones", path), detail::join(path, "cones"));
    return detail::construct(path, [&] { return Orbifold2D(orientable, genus, boundary, std::move(cones)); });
}

inline Json to_json(const CaseResult& c) {
    return Json{{"case", c.number},
                {"description", c.description},
                {"orbifold", to_json(c.orbifold)},
                {"chi_orb", c.chi_orb.str()},
                {"degrees", c.degrees},
                {"chi_only_degrees", c.chi_only_degrees}};
}

inline Json to_json(const CaseAnalysis& a) {
    Json cases = Json::array();
    for (const auto& c : a.cases)
        cases.push_back(to_json(c));
    return Json{{"n", a.n},
                {"fiber_surface", to_json(a.fiber_surface)},
                {"admits_horizontal", a.admits_horizontal()},
                {"cases", std::move(cases)}};
}

// ---- Montesinos links ------------------------------------------------------

inline Json to_json(const MontesinosLink& l) {
    Json tangles = Json::array();
    for (const auto& t : l.tangles())
        tangles.push_back(Json::array({t.beta, t.alpha}));
    return Json{{"genus", l.genus()}, {"tangles", std::move(tangles)}};
}

inline MontesinosLink montesinos_from_json(const Json& j, const std::string& path = "") {
    const auto genus = detail::as_int(detail::field(j, "genus", path), detail::join(path, "genus"));
    const std::string tpath = detail::join(path, "tangles");
    const Json& ts = detail::as_array(detail::field(j, "tangles", path), tpath);
    std::vector<Tangle> tangles;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto [beta, alpha] = detail::as_pair(ts[i], detail::index(tpath, i));
        tangles.push_back({beta, alpha});
    }
    return detail::construct(path, [&] { return MontesinosLink(genus, std::move(tangles)); });
}

// ---- braids ----------------------------------------------------------------

inline Json to_json(const BraidWord& w) { return Json{{"strands", w.strands()}, {"letters", w.letters()}}; }

inline BraidWord braid_from_json(const Json& j, const std::string& path = "") {
    const auto strands = detail::as_int(detail::field(j, "strands", path), detail::join(path, "strands"));
    const auto raw = detail::as_int_list(detail::field(j, "letters", path), detail::join(path, "letters"));
    std::vector<int> letters(raw.begin(), raw.end());
    return detail::construct(path, [&] { return BraidWord(static_cast<int>(strands), std::move(letters)); });
}

// ---- group presentations ---------------------------------------------------

inline Json to_json(const GroupPresentation& g) {
    return Json{{"generators", g.generators()}, {"relators", g.relators()}};
}

inline GroupPresentation presentation_from_json(const Json& j, const std::string& path = "") {
    const auto gens = detail::as_int(detail::field(j, "generators", path), detail::join(path, "generators"));
    const std::string rpath = detail::join(path, "relators");
    const Json& rs = detail::as_array(detail::field(j, "relators", path), rpath);
    std::vector<std::vector<int>> relators;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto raw = detail::as_int_list(rs[i], detail::index(rpath, i));
        relators.emplace_back(raw.begin(), raw.end());
    }
    return detail::construct(path, [&] { return GroupPresentation(static_cast<int>(gens), std::move(relators)); });
}

// ---- prism verification report ---------------------------------------------

/// Decimal with 12 digits after the point, carried as the nearest double.
inline double decimal12(double v) { return std::round(v * 1e12) / 1e12; }

inline Json to_json(const PrismReport& r) {
    Json j{{"n", r.n}};
    if (r.upper_bound) {
        j["upper_bound"] = "2*V0";
        j["upper_bound_value"] = decimal12(r.upper_bound_value);
        j["twist_knot_excluded"] = r.twist_knot_excluded;
        j["case_analysis"] = to_json(*r.case_analysis);
        Json pairs = Json::array();
        for (const auto& [f, c] : r.slope_demo.pairs)
            pairs.push_back(Json::array({to_json(f), to_json(c)}));
        j["slope_demo"] = Json{{"pairs", std::move(pairs)}, {"counts", r.slope_demo.counts}};
        j["max_degree"] = r.max_degree;
    }
    j["status"] = to_string(r.status);
    j["conditional_on"] = r.conditional_on;
    j["note"] = r.note;
    return j;
}

inline Json to_json(const PrismVerification& v) {
    Json out = Json::array();
    for (const auto& r : v.reports)
        out.push_back(to_json(r));
    return out;
}

} // namespace linkvol::io
