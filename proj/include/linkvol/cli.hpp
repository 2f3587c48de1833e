#pragma once

// Command-line front end. `run` is the whole program minus process plumbing, so tests drive it
// in-process with string streams.
//
// Exit status: 0 success, 1 domain error (including malformed input), 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkvol/io.hpp"
#include "linkvol/linkvol.hpp"

#ifndef LINKVOL_DEFAULT_FIXTURE_DIR
#define LINKVOL_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace linkvol::cli {

using io::Json;

/// Environment variable selecting the default output format ("json" or "table").
inline constexpr const char* kFormatEnv = "LINKVOL_FORMAT";
/// Environment variable overriding the fixture directory.
inline constexpr const char* kFixturesEnv = "LINKVOL_FIXTURES";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Settings {
    bool json = false;
    std::string fixtures;
    unsigned workers = default_workers();
};

/// A JSON document supplied inline, by path, or by fixture name.
struct InputSource {
    std::string inline_json;
    std::string file;
    std::string fixture;
};

inline void add_input(CLI::App* sub, InputSource& in, const std::string& what) {
    sub->add_option("input", in.inline_json, what + " as inline JSON");
    sub->add_option("--file", in.file, "read the " + what + " from a JSON file");
    sub->add_option("--fixture", in.fixture, "read the " + what + " from <fixtures>/<name>.json");
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    if (!f)
        throw InvalidArgument("cannot read " + p.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline Json load(const InputSource& in, const Settings& s) {
    const int given = !in.inline_json.empty() + !in.file.empty() + !in.fixture.empty();
    if (given != 1)
        throw UsageError("supply exactly one of: inline JSON, --file, --fixture");
    if (!in.inline_json.empty())
        return io::parse(in.inline_json);
    if (!in.file.empty())
        return io::parse(slurp(in.file));
    return io::parse(slurp(std::filesystem::path(s.fixtures) / (in.fixture + ".json")));
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<std::int64_t> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(what + ": '" + text + "' is not a comma-separated integer list");
        }
    }
    return out;
}

inline Slope parse_slope(const std::string& text) {
    const auto v = parse_int_list(text, "slope");
    if (v.size() != 2)
        throw UsageError("slope '" + text + "' must be two comma-separated integers");
    return Slope(v[0], v[1]);
}

inline Json int_or_string(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline std::string join_ints(const std::vector<std::int64_t>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

inline std::string fixed12(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(12) << v;
    return os.str();
}

inline std::string symbol_line(const SeifertSymbol& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

inline std::string orbifold_line(const Orbifold2D& b) {
    return "orientable=" + std::string(b.orientable() ? "true" : "false") + " genus=" + std::to_string(b.genus()) +
           " boundary=" + std::to_string(b.boundary()) + " cones=" + join_ints(b.cones()) + "  [" + b.describe() + "]";
}

inline std::string surface_line(const SurfaceData& s) {
    return "genus=" + std::to_string(s.genus) + " boundary=" + std::to_string(s.boundary) +
           " orientable=" + (s.orientable ? "true" : "false") + " chi=" + std::to_string(s.euler_characteristic());
}

inline std::string case_analysis_table(const CaseAnalysis& a) {
    std::ostringstream os;
    os << "n=" << a.n << " fiber: " << surface_line(a.fiber_surface) << '\n';
    for (const auto& c : a.cases)
        os << "case " << c.number << ": " << c.orbifold.describe() << "  chi_orb=" << c.chi_orb
           << "  degrees=[" << join_ints(c.degrees) << "]  chi_only_degrees=[" << join_ints(c.chi_only_degrees)
           << "]\n";
    os << "admits horizontal: " << (a.admits_horizontal() ? "yes" : "no");
    return os.str();
}

inline std::string prism_table(const PrismVerification& v) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "n" << std::setw(23) << "status" << std::setw(17) << "upper_bound"
       << std::setw(7) << "twist" << std::setw(28) << "case solutions (case:d)" << std::setw(11) << "max_degree"
       << "slope counts\n";
    for (const auto& r : v.reports) {
        os << std::setw(6) << r.n << std::setw(23) << to_string(r.status);
        if (!r.upper_bound) {
            os << r.note << '\n';
            continue;
        }
        std::string sols;
        for (const auto& [num, d] : r.case_analysis->solutions())
            sols += (sols.empty() ? "" : " ") + std::to_string(num) + ":" + std::to_string(d);
        std::vector<std::int64_t> counts(r.slope_demo.counts.begin(), r.slope_demo.counts.end());
        os << std::setw(17) << fixed12(io::decimal12(r.upper_bound_value)) << std::setw(7)
           << (r.twist_knot_excluded ? "yes" : "no") << std::setw(28) << (sols.empty() ? "-" : sols) << std::setw(11)
           << r.max_degree << join_ints(counts) << '\n';
    }
    const auto cand = v.candidate_exceptional();
    os << "candidate-exceptional: [" << join_ints(cand) << "]";
    return os.str();
}

} // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    Settings settings;
    if (const char* env = std::getenv(kFormatEnv))
        settings.json = std::string(env) == "json";
    settings.fixtures = LINKVOL_DEFAULT_FIXTURE_DIR;
    if (const char* env = std::getenv(kFixturesEnv))
        settings.fixtures = env;

    CLI::App app{"Seifert, orbifold, slope, braid and branched-cover computations for prism manifold link volume",
                 "linkvol"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_flag = false;
    bool table_flag = false;
    app.add_flag("--json", json_flag, "emit JSON");
    app.add_flag("--table", table_flag, "emit human-readable text (default unless " + std::string(kFormatEnv) +
                                            "=json)");
    app.add_option("--fixtures", settings.fixtures, "directory of JSON fixtures");
    app.add_option("--workers", settings.workers, "worker threads for enumeration")->check(CLI::Range(1u, 1024u));

    std::function<void()> action;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        return parent->add_subcommand(name, help);
    };
    auto emit = [&](const Json& j, const std::string& table) {
        if (settings.json)
            out << j.dump() << '\n';
        else
            out << table << '\n';
    };

    // ---- seifert ----------------------------------------------------------
    auto* seifert = app.add_subcommand("seifert", "Seifert symbols")->require_subcommand(1);
    InputSource sym_in;
    auto load_symbol = [&] { return io::seifert_from_json(load(sym_in, settings)); };
    for (const char* name : {"normalize", "euler", "h1", "base"}) {
        auto* sub = leaf(seifert, name, std::string("seifert ") + name);
        add_input(sub, sym_in, "Seifert symbol");
        sub->callback([&, n = std::string(name)] {
            action = [&, n] {
                const SeifertSymbol s = load_symbol();
                if (n == "normalize") {
                    const auto norm = normalize(s);
                    emit(io::to_json(norm), symbol_line(norm));
                } else if (n == "euler") {
                    const auto e = euler_number(s);
                    emit(Json{{"euler_number", e.str()}}, e.str());
                } else if (n == "h1") {
                    const auto h = first_homology(s);
                    Json divisors = Json::array();
                    std::string line;
                    for (const auto& d : h.divisors()) {
                        divisors.push_back(int_or_string(d));
                        line += (line.empty() ? "" : " ") + d.str();
                    }
                    const auto order = h.order();
                    Json j{{"divisors", divisors},
                           {"free_rank", h.free_rank},
                           {"order", order ? int_or_string(*order) : Json(nullptr)}};
                    emit(j, "divisors: " + (line.empty() ? std::string("(trivial)") : line) +
                                "\nfree_rank: " + std::to_string(h.free_rank) +
                                "\norder: " + (order ? order->str() : std::string("infinite")));
                } else {
                    const auto b = base_orbifold(s);
                    emit(io::to_json(b), orbifold_line(b));
                }
            };
        });
    }
    std::int64_t prism_n = 0;
    auto* seifert_prism = leaf(seifert, "prism", "the two Seifert fibrations of M_n");
    seifert_prism->add_option("n", prism_n)->required();
    seifert_prism->callback([&] {
        action = [&] {
            const auto [oo, on] = prism_fibrations(prism_n);
            emit(Json{{"n", prism_n}, {"fibrations", Json::array({io::to_json(oo), io::to_json(on)})}},
                 symbol_line(oo) + "\n" + symbol_line(on));
        };
    });

    // ---- orbifold -----------------------------------------------------------
    auto* orbifold = app.add_subcommand("orbifold", "2-orbifolds and branched surface covers")->require_subcommand(1);
    struct OrbifoldFlags {
        std::string orientable = "true";
        std::int64_t genus = 0;
        std::int64_t boundary = 0;
        std::string cones;
        InputSource in;
    } orb;
    auto add_orbifold_flags = [&](CLI::App* sub) {
        sub->add_option("--orientable", orb.orientable, "true or false")->check(CLI::IsMember({"true", "false"}));
        sub->add_option("--genus", orb.genus, "genus (cross-caps when non-orientable)");
        sub->add_option("--boundary", orb.boundary, "boundary circles");
        sub->add_option("--cones", orb.cones, "comma-separated cone indices");
        add_input(sub, orb.in, "orbifold");
    };
    auto load_orbifold = [&] {
        if (!orb.in.inline_json.empty() || !orb.in.file.empty() || !orb.in.fixture.empty())
            return io::orbifold_from_json(load(orb.in, settings));
        return Orbifold2D(orb.orientable == "true", orb.genus, orb.boundary, parse_int_list(orb.cones, "--cones"));
    };

    auto* orb_chi = leaf(orbifold, "chi", "orbifold Euler characteristic");
    add_orbifold_flags(orb_chi);
    orb_chi->callback([&] {
        action = [&] {
            const auto chi = chi_orb(load_orbifold());
            emit(Json{{"chi_orb", chi.str()}}, chi.str());
        };
    });

    struct CoverFlags {
        std::string orientable = "true";
        std::int64_t genus = 0;
        std::int64_t boundary = 1;
        std::int64_t degree = 1;
        std::vector<std::string> branch;
        std::optional<std::int64_t> cover_boundary;
        std::string cover_orientable;
    } cov;
    auto* orb_cover = leaf(orbifold, "cover", "Riemann-Hurwitz for a branched cover of a surface");
    orb_cover->add_option("--orientable", cov.orientable, "base orientability")->check(CLI::IsMember({"true", "false"}));
    orb_cover->add_option("--genus", cov.genus, "base genus");
    orb_cover->add_option("--boundary", cov.boundary, "base boundary circles");
    orb_cover->add_option("--degree", cov.degree, "cover degree")->required();
    orb_cover->add_option("--branch", cov.branch, "local degrees over one branch point, e.g. 2 or 1,2 (repeatable)");
    orb_cover->add_option("--cover-boundary", cov.cover_boundary, "boundary count of the cover when not forced");
    orb_cover->add_option("--cover-orientable", cov.cover_orientable, "orientability of the cover when not forced")
        ->check(CLI::IsMember({"true", "false"}));
    orb_cover->callback([&] {
        action = [&] {
            const SurfaceData base(cov.genus, cov.boundary, cov.orientable == "true");
            std::vector<std::vector<std::int64_t>> branch;
            for (const auto& b : cov.branch)
                branch.push_back(parse_int_list(b, "--branch"));
            CoverHints hints;
            hints.boundary = cov.cover_boundary;
            if (!cov.cover_orientable.empty())
                hints.orientable = cov.cover_orientable == "true";
            const auto s = riemann_hurwitz_cover(base, cov.degree, branch, hints);
            emit(io::to_json(s), surface_line(s));
        };
    });

    std::int64_t fiber_genus = 2;
    std::int64_t fiber_boundary = 1;
    auto* orb_solve = leaf(orbifold, "solve", "degrees d with chi(F) = d chi_orb(B)");
    add_orbifold_flags(orb_solve);
    orb_solve->add_option("--fiber-genus", fiber_genus, "genus of the orientable surface F (default 2)");
    orb_solve->add_option("--fiber-boundary", fiber_boundary, "boundary circles of F (default 1)");
    orb_solve->callback([&] {
        action = [&] {
            const auto b = load_orbifold();
            const SurfaceData f(fiber_genus, fiber_boundary, true);
            const auto degrees = degree_solutions(f, b, DegreeFilter::cone_divisible);
            const auto chi_only = degree_solutions(f, b, DegreeFilter::chi_only);
            const auto chi = chi_orb(b);
            emit(Json{{"fiber_chi", f.euler_characteristic()},
                      {"chi_orb", chi.str()},
                      {"degrees", degrees},
                      {"chi_only_degrees", chi_only}},
                 "fiber_chi=" + std::to_string(f.euler_characteristic()) + " chi_orb=" + chi.str() + " degrees=[" +
                     join_ints(degrees) + "] chi_only_degrees=[" + join_ints(chi_only) + "]");
        };
    });

    std::int64_t cases_n = 0;
    auto* orb_cases = leaf(orbifold, "cases", "the five drilled-fiber bases of M_n and their degree solutions");
    orb_cases->add_option("n", cases_n)->required();
    orb_cases->add_option("--fiber-genus", fiber_genus, "genus of the fiber surface (default 2)");
    orb_cases->add_option("--fiber-boundary", fiber_boundary, "boundary circles of the fiber surface (default 1)");
    orb_cases->callback([&] {
        action = [&] {
            const auto a = prism_case_analysis(cases_n, SurfaceData(fiber_genus, fiber_boundary, true));
            emit(io::to_json(a), case_analysis_table(a));
        };
    });

    // ---- montesinos ---------------------------------------------------------
    auto* montesinos = app.add_subcommand("montesinos", "Montesinos links")->require_subcommand(1);
    InputSource link_in;
    auto* mont_cover = leaf(montesinos, "cover", "Seifert symbol of the double branched cover");
    add_input(mont_cover, link_in, "Montesinos link");
    mont_cover->callback([&] {
        action = [&] {
            const auto s = double_branched_cover(io::montesinos_from_json(load(link_in, settings)));
            emit(io::to_json(s), symbol_line(s));
        };
    });
    std::int64_t ln_n = 0;
    auto* mont_ln = leaf(montesinos, "ln", "the two Montesinos presentations of L_n and their covers");
    mont_ln->add_option("n", ln_n)->required();
    mont_ln->callback([&] {
        action = [&] {
            const auto [a, b] = ln_link(ln_n);
            const auto ca = double_branched_cover(a);
            const auto cb = double_branched_cover(b);
            emit(Json{{"n", ln_n},
                      {"presentations", Json::array({io::to_json(a), io::to_json(b)})},
                      {"covers", Json::array({io::to_json(ca), io::to_json(cb)})}},
                 io::to_json(a).dump() + " -> " + symbol_line(ca) + "\n" + io::to_json(b).dump() + " -> " +
                     symbol_line(cb));
        };
    });

    // ---- slopes -------------------------------------------------------------
    auto* slopes = app.add_subcommand("slopes", "slopes on a torus")->require_subcommand(1);
    std::vector<std::string> slope_args;
    auto* sl_delta = leaf(slopes, "delta", "absolute algebraic intersection number");
    sl_delta->add_option("slopes", slope_args, "two slopes p,q")->expected(2)->required();
    sl_delta->callback([&] {
        action = [&] {
            const auto d = delta(parse_slope(slope_args.at(0)), parse_slope(slope_args.at(1)));
            emit(Json{{"delta", d}}, std::to_string(d));
        };
    });
    std::int64_t k1 = 1;
    std::int64_t k2 = 2;
    auto* sl_enum = leaf(slopes, "enumerate", "slopes a with delta(f,a) = k1 and delta(c,a) <= k2");
    sl_enum->add_option("slopes", slope_args, "f and c as p,q")->expected(2)->required();
    sl_enum->add_option("--k1", k1, "required delta(f, a) (default 1)");
    sl_enum->add_option("--k2", k2, "bound on delta(c, a) (default 2)");
    sl_enum->callback([&] {
        action = [&] {
            const Slope f = parse_slope(slope_args.at(0));
            const Slope c = parse_slope(slope_args.at(1));
            const auto found = enumerate_constrained_slopes(f, c, k1, k2);
            Json list = Json::array();
            std::string line;
            for (const auto& s : found) {
                list.push_back(io::to_json(s));
                line += (line.empty() ? "" : " ") + std::to_string(s.p()) + "," + std::to_string(s.q());
            }
            emit(Json{{"f", io::to_json(f)}, {"c", io::to_json(c)}, {"k1", k1}, {"k2", k2}, {"slopes", list}},
                 std::to_string(found.size()) + " slopes: " + line);
        };
    });

    // ---- braid ----------------------------------------------------------------
    auto* braid = app.add_subcommand("braid", "braid words")->require_subcommand(1);
    std::vector<std::int64_t> ttk_args;
    auto* br_ttk = leaf(braid, "ttk", "braid word of the twisted torus knot T(p,q;r,s)");
    br_ttk->add_option("params", ttk_args, "p q r s")->expected(4)->required();
    br_ttk->callback([&] {
        action = [&] {
            const auto w = twisted_torus_braid(static_cast<int>(ttk_args[0]), ttk_args[1], static_cast<int>(ttk_args[2]),
                                               ttk_args[3]);
            emit(io::to_json(w), w.artin());
        };
    });
    InputSource braid_in;
    std::string ttk_params;
    auto load_braid = [&] {
        if (!ttk_params.empty()) {
            const auto v = parse_int_list(ttk_params, "--ttk");
            if (v.size() != 4)
                throw UsageError("--ttk expects p,q,r,s");
            return twisted_torus_braid(static_cast<int>(v[0]), v[1], static_cast<int>(v[2]), v[3]);
        }
        return io::braid_from_json(load(braid_in, settings));
    };
    auto* br_comp = leaf(braid, "components", "number of components of the closure");
    auto* br_chi = leaf(braid, "chi", "Euler characteristic (and genus) of the Bennequin surface");
    for (auto* sub : {br_comp, br_chi}) {
        add_input(sub, braid_in, "braid word");
        sub->add_option("--ttk", ttk_params, "use the twisted torus braid p,q,r,s");
    }
    br_comp->callback([&] {
        action = [&] {
            const int c = closure_components(load_braid());
            emit(Json{{"components", c}}, std::to_string(c));
        };
    });
    br_chi->callback([&] {
        action = [&] {
            const auto w = load_braid();
            const auto chi = bennequin_chi(w);
            Json j{{"chi", chi}, {"components", closure_components(w)}};
            std::string line = "chi=" + std::to_string(chi) + " components=" + std::to_string(closure_components(w));
            if (closure_components(w) == 1) {
                j["genus"] = bennequin_genus(w);
                line += " genus=" + std::to_string(bennequin_genus(w));
            }
            emit(j, line);
        };
    });

    // ---- covers -------------------------------------------------------------
    auto* covers = app.add_subcommand("covers", "representations into symmetric groups")->require_subcommand(1);
    InputSource pres_in;
    int cover_degree = 2;
    bool transitive_only = false;
    auto* cov_count = leaf(covers, "count", "count homomorphisms to S_d");
    add_input(cov_count, pres_in, "group presentation");
    cov_count->add_option("--degree,-d", cover_degree, "symmetric group degree d")->required();
    cov_count->add_flag("--transitive", transitive_only, "count only transitive representations");
    cov_count->callback([&] {
        action = [&] {
            const auto g = io::presentation_from_json(load(pres_in, settings));
            const auto filter = transitive_only ? RepresentationFilter::transitive : RepresentationFilter::all;
            const auto count = count_representations(g, cover_degree, filter, settings.workers);
            emit(Json{{"degree", cover_degree}, {"filter", transitive_only ? "transitive" : "all"}, {"count", count}},
                 std::to_string(count));
        };
    });

    // ---- prism --------------------------------------------------------------
    auto* prism = app.add_subcommand("prism", "prism manifold link-volume pipeline")->require_subcommand(1);
    std::int64_t from = 0;
    std::int64_t to = 0;
    auto* pv = leaf(prism, "verify", "run every computable obstruction for n in [from, to]");
    pv->add_option("--from", from, "first n")->required();
    pv->add_option("--to", to, "last n")->required();
    pv->callback([&] {
        action = [&] {
            const auto v = prism_verify(IntInterval{from, to}, settings.workers);
            emit(io::to_json(v), prism_table(v));
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        // an unknown word where a subcommand belongs surfaces as "subcommand required"
        const auto extras = app.remaining(true);
        if (!extras.empty() && dynamic_cast<const CLI::RequiredError*>(&e)) {
            err << "error: unrecognized argument:";
            for (const auto& x : extras)
                err << ' ' << x;
            err << '\n' << app.help();
        } else {
            err << "error: " << e.what() << '\n' << app.help();
        }
        return 2;
    }

    if (json_flag && table_flag) {
        err << "error: --json and --table are exclusive\n";
        return 2;
    }
    if (json_flag)
        settings.json = true;
    if (table_flag)
        settings.json = false;

    try {
        if (!action)
            throw UsageError("no command given");
        action();
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace linkvol::cli
