#include "lieinv/cli.hpp"

#include "lieinv/errors.hpp"
#include "lieinv/extension.hpp"
#include "lieinv/legendre.hpp"
#include "lieinv/problem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <utility>

namespace lieinv {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240917;

enum class Format { Text, Json };

struct Settings {
    std::string file;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::string invariant;
    std::string on;
};

// Usage or input problem, exit code 1.
struct InputError {
    std::string message;
};

std::uint64_t resolve_seed(const Settings& s, const Problem& p) {
    if (s.seed) return *s.seed;
    if (p.seed) return *p.seed;
    if (const char* env = std::getenv(kSeedVariable); env && *env) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string(env).size()) return value;
        } catch (const std::exception&) {
        }
        throw InputError{std::string(kSeedVariable) + " is not a non-negative integer: " + env};
    }
    return kDefaultSeed;
}

Json strings(const ExprVector& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(e.to_string());
    return out;
}

Json verdict_json(const Verdict& v) {
    Json out{{"verdict", to_string(v.kind)}, {"max_residual", v.max_residual}};
    if (!v.witness.empty()) {
        Json w = Json::object();
        for (const auto& [name, value] : v.witness) w[name] = value;
        out["witness"] = w;
    }
    if (!v.detail.empty()) out["detail"] = v.detail;
    return out;
}

Json set_json(const InvariantSet& set) {
    Json invariants = Json::array();
    for (std::size_t i = 0; i < set.invariants.size(); ++i) {
        Json entry{{"expr", set.invariants[i].to_string()}};
        if (i < set.verdicts.size()) entry.update(verdict_json(set.verdicts[i]));
        invariants.push_back(entry);
    }
    Json out{{"status", to_string(set.status)},
             {"coordinates", set.coords},
             {"invariants", invariants},
             {"chart", strings(set.chart)}};
    if (!set.diagnostic.empty()) out["diagnostic"] = set.diagnostic;
    if (!set.implicit.empty()) out["implicit"] = strings(set.implicit);
    if (!set.candidates.empty()) out["candidates"] = strings(set.candidates);
    return out;
}

void print_set_text(std::ostream& out, const InvariantSet& set) {
    out << "status: " << to_string(set.status) << '\n';
    for (std::size_t i = 0; i < set.invariants.size(); ++i) {
        out << "  J" << i + 1 << " = " << set.invariants[i].to_string();
        if (i < set.verdicts.size()) out << "  [" << to_string(set.verdicts[i].kind) << ']';
        out << '\n';
    }
    for (const auto& c : set.chart) out << "  chart: " << c.to_string() << " > 0\n";
    for (const auto& e : set.implicit) out << "  unsolved: " << e.to_string() << " = 0\n";
    if (!set.diagnostic.empty()) out << "  note: " << set.diagnostic << '\n';
}

Json header(const std::string& command, const Problem& p, std::uint64_t seed) {
    return Json{{"schema", kProblemSchema}, {"command", command}, {"problem", p.name}, {"seed", seed}};
}

const Representation& need_representation(const Problem& p) {
    if (!p.representation) throw InputError{p.name + ": the command needs a representation"};
    return *p.representation;
}

PipelineOptions pipeline_options(const Problem& p, std::uint64_t seed) {
    PipelineOptions options;
    options.seed = seed;
    options.covector = p.covector;
    options.hints = p.hints;
    options.verify = p.verify;
    options.verify.seed = seed;
    return options;
}

int run(const std::string& command, const Settings& s, std::ostream& out) {
    const Format format = s.format == "json" ? Format::Json : Format::Text;
    const Problem p = load_problem(s.file);
    const std::uint64_t seed = resolve_seed(s, p);

    const ValidationReport report = validate_problem(p);
    if (!report.ok()) {
        if (format == Format::Json) {
            Json j = header(command, p, seed);
            j["valid"] = false;
            j["violations"] = report.violations;
            out << j.dump(2) << '\n';
        } else {
            out << "invalid:\n";
            for (const auto& v : report.violations) out << "  " << v << '\n';
        }
        return 1;
    }

    Json j = header(command, p, seed);
    if (command == "validate" || command == "index") {
        const std::size_t idx = index(p.algebra, seed);
        std::optional<std::size_t> count;
        if (p.representation) count = invariant_count(*p.representation, seed);
        if (format == Format::Json) {
            if (command == "validate") j["valid"] = true;
            j["dim"] = p.algebra.dim();
            j["index"] = idx;
            if (count) {
                j["representation_dim"] = p.representation->dim();
                j["invariant_count"] = *count;
            }
        } else if (command == "validate") {
            out << "algebra valid; ";
            if (count) out << "representation valid; N = " << *count << '\n';
            else out << "index = " << idx << '\n';
        } else {
            out << "index = " << idx << '\n';
            if (count) out << "invariant count = " << *count << '\n';
        }
    } else if (command == "casimirs") {
        const InvariantSet set = casimirs(p.algebra, pipeline_options(p, seed));
        if (format == Format::Json) j.update(set_json(set));
        else print_set_text(out, set);
    } else if (command == "rep-invariants") {
        const InvariantSet set = rep_invariants(p.algebra, need_representation(p), pipeline_options(p, seed));
        if (format == Format::Json) j.update(set_json(set));
        else print_set_text(out, set);
    } else if (command == "conjugate-invariants") {
        const ConjugateResult r = conjugate_invariants(p.algebra, need_representation(p), pipeline_options(p, seed));
        if (format == Format::Json) {
            j.update(set_json(r.invariants));
            j["sheaf"] = r.sheaf.combined().to_string();
            j["hessian_determinant"] = r.determinant.to_string();
            j["transform"] = r.transform.to_string();
            j["involution"] = r.involution;
        } else {
            out << "sheaf: " << r.sheaf.combined().to_string() << '\n'
                << "hessian determinant: " << r.determinant.to_string() << '\n'
                << "transform: " << r.transform.to_string() << '\n'
                << "involution: " << (r.involution ? "holds" : "fails") << '\n';
            print_set_text(out, r.invariants);
        }
    } else if (command == "verify") {
        std::string on = s.on.empty() ? (p.representation ? "representation" : "coadjoint") : s.on;
        Representation rep;
        std::vector<std::string> coords;
        if (on == "coadjoint") {
            rep = coadjoint(p.algebra);
            coords = coordinate_names("X", p.algebra.dim());
        } else {
            rep = on == "conjugate" ? dual_representation(need_representation(p)) : need_representation(p);
            coords = coordinate_names(on == "conjugate" ? "X" : "x", rep.dim());
        }
        Expr invariant;
        try {
            invariant = parse_expr(s.invariant);
        } catch (const Error& e) {
            throw InputError{"--invariant: " + std::string(e.what())};
        }
        for (const auto& name : invariant.free_symbols())
            if (std::find(coords.begin(), coords.end(), name) == coords.end())
                throw InputError{"--invariant uses " + name + ", which is not a coordinate of the " + on + " space"};
        VerifyOptions verify = p.verify;
        verify.seed = seed;
        const Verdict v = verify_invariant(generators(rep, coords), invariant, verify);
        if (format == Format::Json) {
            j["on"] = on;
            j["invariant"] = invariant.to_string();
            j.update(verdict_json(v));
        } else {
            out << invariant.to_string() << ": " << to_string(v.kind) << " (max residual " << v.max_residual << ")\n";
            if (!v.detail.empty()) out << "  " << v.detail << '\n';
        }
    }
    if (format == Format::Json) out << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of Lie algebra representations", "lieinv"};
    app.require_subcommand(1);
    Settings s;
    auto common = [&s](CLI::App* sub) {
        sub->add_option("file", s.file, "problem file (JSON)")->required();
        sub->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", s.seed, "seed for randomized choices (default: LIEINV_SEED)");
    };
    const std::pair<const char*, const char*> commands[] = {
        {"validate", "check the Jacobi identity and the representation"},
        {"index", "index of the algebra and the invariant count of the representation"},
        {"casimirs", "Casimir functions on the dual of the algebra"},
        {"rep-invariants", "invariants of the representation"},
        {"conjugate-invariants", "invariants of the conjugate representation via the Legendre transform"}};
    for (const auto& [name, description] : commands) common(app.add_subcommand(name, description));
    CLI::App* verify = app.add_subcommand("verify", "check that an expression is annihilated by the generators");
    common(verify);
    verify->add_option("--invariant", s.invariant, "expression in the coordinates of the chosen space")->required();
    verify->add_option("--on", s.on, "space: coadjoint, representation or conjugate")
        ->check(CLI::IsMember({"coadjoint", "representation", "conjugate"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        return run(command, s, out);
    } catch (const InputError& e) {
        err << "error: " << e.message << '\n';
        return 1;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Validation) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
        err << "error";
        if (!e.stage().empty()) err << " in stage " << e.stage();
        err << " [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        if (s.format == "json") {
            Json j{{"schema", kProblemSchema},
                   {"command", command},
                   {"error", {{"kind", to_string(e.kind())}, {"stage", e.stage()}, {"message", e.what()}}}};
            out << j.dump(2) << '\n';
        }
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace lieinv
