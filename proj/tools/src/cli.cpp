#include "cli.hpp"

#include "gridtorus/acceptance.hpp"
#include "gridtorus/adjunction.hpp"
#include "gridtorus/contact.hpp"
#include "gridtorus/families.hpp"
#include "gridtorus/localization.hpp"
#include "gridtorus/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace gridtorus::cli {

namespace {

// Violations found while loading a grid; carried to the exit-code mapping.
struct ViolationError : std::runtime_error {
    std::vector<Violation> list;
    explicit ViolationError(std::vector<Violation> v) : std::runtime_error("grid has violations"), list(std::move(v)) {}
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    return buf.str();
}

GridData load_grid(const std::string& path, std::istream& in, bool check = true) {
    std::string text;
    if (path.empty() || path == "-") {
        text = read_all(in);
    } else {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open '" + path + "'");
        text = read_all(f);
    }
    GridData g = from_json(text);
    if (check) {
        auto v = validate(g);
        if (!v.empty()) throw ViolationError(std::move(v));
    }
    return g;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            auto v = std::stoll(text);
            return {v, v};
        }
        return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + text + "', expected N or A..B");
    }
}

std::vector<Rational> parse_rationals(const std::string& text, std::size_t count, const std::string& flag) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception&) {
            throw UsageError(flag + ": '" + item + "' is not a rational number");
        }
    }
    if (out.size() != count) throw UsageError(flag + " needs " + std::to_string(count) + " comma-separated values");
    return out;
}

// "0,1,2" (unit blocks) or "0:2,1:1" (weight:block size)
std::vector<std::pair<std::int64_t, std::int64_t>> parse_weights(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::stringstream ss(text);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                out.push_back({std::stoll(item), 1});
            else
                out.push_back({std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1))});
        }
    } catch (const std::exception&) {
        throw UsageError("bad --weights '" + text + "'");
    }
    return out;
}

std::string print_outcome(const ClassificationOutcome& oc) {
    std::string s = "case: " + to_string(oc.kind) + "\n";
    s += "detail: " + oc.detail + "\n";
    if (oc.tau) s += "tau: " + oc.tau->str() + "\n";
    for (const auto& c : oc.certificates) s += "certificate: " + c + "\n";
    return s;
}

struct Options {
    std::string family, grid, output, bundle = "L", split, weights, scope = "minimal";
    std::string fano4, fano5, fano5_a, fano5_b, range, table_kind;
    std::int64_t n = -1, m = -1, a = -1, slice = 0, power = 0;
    unsigned threads = 1;
};

GridData build_family(const Options& o) {
    auto need = [&](std::int64_t v, const char* flag) {
        if (v < 0) throw UsageError("build " + o.family + " needs " + flag);
        return v;
    };
    const std::string& f = o.family;
    if (f == "scroll") {
        const std::int64_t n = need(o.n, "--n");
        return build_scroll(n, o.split.empty() ? ScrollSplit::OnesThree : parse_scroll_split(n, o.split));
    }
    if (f == "quadric-bundle") return build_quadric_bundle(need(o.n, "--n"));
    if (f == "p1cubed") return build_p1cubed();
    if (f == "cube-torus") return build_cube_full_torus();
    if (f == "sp6") return build_sp6();
    if (f == "p1xp1-o12") return build_p1xp1_o12();
    if (f == "projective-space") {
        if (o.weights.empty()) throw UsageError("build projective-space needs --weights");
        return build_projective_space(parse_weights(o.weights));
    }
    if (f == "quadric-torus") return build_quadric_full_torus(need(o.n, "--n"));
    if (f == "quadric-axis") return quadric_downgrade_axis(build_quadric_full_torus(need(o.n, "--n")));
    if (f == "quadric-diagonal") return quadric_downgrade_diagonal(build_quadric_full_torus(need(o.n, "--n")));
    if (f == "bw3-isolated") return build_bw3_isolated(need(o.n, "--n"), need(o.a, "--a"));
    if (f == "so-adjoint") return build_so_adjoint(need(o.m, "--m"));
    if (f == "so-slice") return so_adjoint_slice(build_so_adjoint(need(o.m, "--m")), o.slice);
    throw UsageError("unknown family '" + f + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grid data, localization and bandwidth-3 classification for torus actions", "gridtorus"};
    app.require_subcommand(1, 1);
    Options o;

    auto* build = app.add_subcommand("build", "Write the grid of a family as JSON");
    build->add_option("family", o.family,
                      "scroll, quadric-bundle, p1cubed, cube-torus, sp6, p1xp1-o12, projective-space, quadric-torus, "
                      "quadric-axis, quadric-diagonal, bw3-isolated, so-adjoint, so-slice")
        ->required();
    build->add_option("--n", o.n, "Dimension");
    build->add_option("--m", o.m, "SO_m for so-adjoint and so-slice");
    build->add_option("--a", o.a, "Inner point count for bw3-isolated");
    build->add_option("--i", o.slice, "Slice index for so-slice");
    build->add_option("--split", o.split, "Scroll splitting type, e.g. 1,1,1,1,3");
    build->add_option("--weights", o.weights, "Projective space weights: 0,1,2 or a:d,...");
    build->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto* val = app.add_subcommand("validate", "Check grid invariants");
    val->add_option("--grid", o.grid, "Grid JSON ('-' for stdin)");

    auto* bw = app.add_subcommand("bandwidth", "Print the bandwidth of a bundle");
    bw->add_option("--grid", o.grid, "Grid JSON ('-' for stdin)");
    bw->add_option("--bundle", o.bundle, "Bundle name");

    auto* nef = app.add_subcommand("nef-check", "Check a bundle for nefness on the orbit graph");
    nef->add_option("--grid", o.grid, "Grid JSON ('-' for stdin)");
    nef->add_option("--bundle", o.bundle, "Bundle name, or K+<tau>L");
    nef->add_option("--scope", o.scope, "minimal or all")->check(CLI::IsMember({"minimal", "all"}));

    auto* chi = app.add_subcommand("chi", "Equivariant Euler characteristic or Fano Hilbert polynomials");
    chi->add_option("--grid", o.grid, "Grid JSON ('-' for stdin)");
    chi->add_option("--bundle", o.bundle, "Bundle name");
    chi->add_option("--m", o.power, "Tensor power m >= 0");
    chi->add_option("--fano4", o.fano4, "c1^4,c1^2c2");
    chi->add_option("--fano5", o.fano5, "c1^5,c1^3c2");
    chi->add_option("--a", o.fano5_a, "a1,a2 for the factorization check");
    chi->add_option("--b", o.fano5_b, "b1,b2 for the alternate check");

    auto* ident = app.add_subcommand("identity", "Solve the bandwidth-3 identity for a");
    ident->add_option("--n", o.n, "Dimension")->required();
    ident->add_option("--a", o.a, "Check this value instead of solving");

    auto* cls = app.add_subcommand("classify", "Classify a bandwidth-3 grid");
    cls->add_option("--grid", o.grid, "Grid JSON ('-' or omitted: stdin)");

    auto* tbl = app.add_subcommand("table", "Print the adjoint summary table as CSV");
    tbl->add_option("kind", o.table_kind, "so-adjoint, sp or sl")->required()->check(CLI::IsMember({"so-adjoint", "sp", "sl"}));
    tbl->add_option("--m", o.range, "m or m1..m2 for so-adjoint");
    tbl->add_option("--n", o.range, "n or n1..n2 for sp and sl");

    auto* dot = app.add_subcommand("export-dot", "Render the orbit graph as DOT");
    dot->add_option("--grid", o.grid, "Grid JSON ('-' for stdin)");
    dot->add_option("--bundle", o.bundle, "Bundle defining the ranks");
    dot->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
    ver->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 64u));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*build) {
            write_text(o.output, to_json(build_family(o)), out);
            return kExitOk;
        }
        if (*val) {
            GridData g = load_grid(o.grid, in, false);
            auto v = validate(g);
            if (v.empty()) {
                out << "ok\n";
                return kExitOk;
            }
            for (const auto& x : v) out << x.str() << "\n";
            return kExitViolations;
        }
        if (*bw) {
            out << bandwidth(load_grid(o.grid, in), o.bundle).str() << "\n";
            return kExitOk;
        }
        if (*nef) {
            GridData g = load_grid(o.grid, in);
            std::string bundle = o.bundle;
            if (bundle.size() > 3 && bundle.rfind("K+", 0) == 0 && bundle.back() == 'L') {
                Rational tau = Rational::parse(bundle.substr(2, bundle.size() - 3));
                g = mu_adjoint(mu_canonical(g), tau, bundle);
            }
            const bool ok = is_nef(g, bundle, o.scope == "all" ? NefScope::AllEdges : NefScope::MinimalEdges);
            out << bundle << (ok ? " is nef" : " is not nef") << "\n";
            for (const auto& e : g.edges) {
                Rational drop = amfm_degree(g, e, bundle);
                if (drop.sign() <= 0) out << "  " << e.src << " -> " << e.dst << ": drop " << drop.str() << "\n";
            }
            return ok ? kExitOk : kExitViolations;
        }
        if (*chi) {
            if (!o.fano4.empty()) {
                auto v = parse_rationals(o.fano4, 2, "--fano4");
                LaurentPoly p = chi_fano4(v[0], v[1]);
                out << "chi(t) = " << p.str() << "\n";
                out << "chi(1) = " << chi_fano4_at_one(v[0], v[1]).str() << "\n";
                out << "bogomolov: " << (bogomolov_gate(v[0], v[1]) ? "passes" : "fails") << "\n";
                return kExitOk;
            }
            if (!o.fano5.empty()) {
                auto v = parse_rationals(o.fano5, 2, "--fano5");
                std::optional<std::pair<Rational, Rational>> a, b;
                if (!o.fano5_a.empty()) {
                    auto x = parse_rationals(o.fano5_a, 2, "--a");
                    a = std::pair{x[0], x[1]};
                }
                if (!o.fano5_b.empty()) {
                    auto x = parse_rationals(o.fano5_b, 2, "--b");
                    b = std::pair{x[0], x[1]};
                }
                Fano5Record r = chi_fano5(v[0], v[1], a, b);
                out << "chi(1) = " << r.chi1.str() << "\n";
                out << "chi(1/2) = " << r.chi_half.str() << "\n";
                if (r.polynomial) out << "chi(t) = " << r.polynomial->str() << "\n";
                if (r.factorization_check) out << "factorization check: " << (*r.factorization_check ? "passes" : "fails") << "\n";
                if (r.alternate_check) out << "alternate check: " << (*r.alternate_check ? "passes" : "fails") << "\n";
                return kExitOk;
            }
            if (o.power < 0) throw UsageError("--m must be >= 0");
            GridData g = load_grid(o.grid, in);
            LaurentRational x = euler_char(g, o.bundle, o.power);
            out << "chi = " << x.str() << "\n";
            if (x.is_laurent_polynomial())
                out << "value at 1 = " << x.to_laurent_poly().coefficient_sum().str() << "\n";
            else
                out << "value at 1 = undefined (not a Laurent polynomial)\n";
            return kExitOk;
        }
        if (*ident) {
            if (o.a >= 0) {
                const bool holds = verify_bw3_identity(o.n, o.a);
                out << "a = " << o.a << (holds ? ": identity holds" : ": identity fails") << "\n";
                return holds ? kExitOk : kExitViolations;
            }
            auto a = solve_bw3_a(o.n);
            if (a)
                out << "a = " << *a << "\n";
            else
                out << "no nonnegative integer a (n = " << o.n << ")\n";
            return kExitOk;
        }
        if (*cls) {
            GridData g = load_grid(o.grid, in, false);
            const ClassificationOutcome oc = classify_bw3(g);
            out << print_outcome(oc);
            return oc.kind == Bw3Case::Inconsistent ? kExitViolations : kExitOk;
        }
        if (*tbl) {
            if (o.range.empty()) throw UsageError(o.table_kind == "so-adjoint" ? "table so-adjoint needs --m" : "table needs --n");
            auto [lo, hi] = parse_range(o.range);
            out << kAdjointTableHeader << "\n";
            for (std::int64_t k = lo; k <= hi; ++k) {
                try {
                    if (o.table_kind == "so-adjoint")
                        out << to_csv(adjoint_table_row(AdjointGroup::SO, k - 4)) << "\n";
                    else
                        out << to_csv(adjoint_table_row(o.table_kind == "sp" ? AdjointGroup::Sp : AdjointGroup::SL, k)) << "\n";
                } catch (const std::out_of_range&) {
                    err << (o.table_kind == "so-adjoint" ? "m = " : "n = ") << k << ": outside the table\n";
                }
            }
            return kExitOk;
        }
        if (*dot) {
            write_text(o.output, to_dot(load_grid(o.grid, in), o.bundle), out);
            return kExitOk;
        }
        if (*ver) {
            auto results = run_acceptance(o.threads);
            bool all = true;
            for (const auto& r : results) {
                out << format_result(r) << "\n";
                all = all && r.passed;
            }
            out << (all ? "all criteria pass" : "some criteria fail") << "\n";
            return all ? kExitOk : kExitFailure;
        }
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const nlohmann::json::exception& e) {
        err << "malformed JSON: " << e.what() << "\n";
        return kExitSchema;
    } catch (const ViolationError& e) {
        err << "grid violates " << e.list.size() << " invariant(s):\n";
        for (const auto& v : e.list) err << "  " << v.str() << "\n";
        return kExitViolations;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace gridtorus::cli
