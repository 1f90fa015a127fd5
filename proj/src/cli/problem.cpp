#include "lieinv/problem.hpp"

#include "lieinv/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace lieinv {

namespace {

using nlohmann::json;

class Reader {
public:
    explicit Reader(std::string path) : path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Validation, (path_.empty() ? "problem" : path_) + ": " + what);
    }

    Reader at(const std::string& key) const { return Reader(path_.empty() ? key : path_ + "." + key); }
    Reader at(std::size_t i) const { return Reader(path_ + "[" + std::to_string(i) + "]"); }

    const json& object(const json& j) const {
        if (!j.is_object()) fail("expected an object");
        return j;
    }
    const json& array(const json& j, std::optional<std::size_t> size = {}) const {
        if (!j.is_array()) fail("expected an array");
        if (size && j.size() != *size) fail("expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
        return j;
    }
    std::size_t count(const json& j) const {
        if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) fail("expected a positive integer");
        return j.get<std::size_t>();
    }
    std::size_t index(const json& j, std::size_t dim) const {
        if (!j.is_number_unsigned() || j.get<std::uint64_t>() < 1 || j.get<std::uint64_t>() > dim)
            fail("expected an index in 1.." + std::to_string(dim));
        return j.get<std::size_t>() - 1;
    }
    Rational rational(const json& j) const {
        if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
        if (j.is_number_float()) fail("inexact number; write fractions as strings such as \"1/2\"");
        if (!j.is_string()) fail("expected an integer or a rational string");
        try {
            if (const auto q = parse_expr(j.get<std::string>()).as_rational()) return *q;
        } catch (const Error&) {
        }
        fail("\"" + j.get<std::string>() + "\" is not an exact rational");
    }
    Expr expression(const json& j) const {
        if (j.is_number_integer()) return Expr(Rational(std::to_string(j.get<std::int64_t>())));
        if (!j.is_string()) fail("expected an expression string");
        try {
            return parse_expr(j.get<std::string>());
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    std::string name(const json& j) const {
        if (!j.is_string() || j.get<std::string>().empty()) fail("expected a symbol name");
        const Expr e = expression(j);
        if (e.as_symbol() != j.get<std::string>()) fail("\"" + j.get<std::string>() + "\" is not a plain symbol");
        return j.get<std::string>();
    }

private:
    std::string path_;
};

void reject_unknown(const Reader& r, const json& j, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) r.at(key).fail("unknown field");
    }
}

LieAlgebra read_algebra(const Reader& r, const json& j) {
    r.object(j);
    reject_unknown(r, j, {"dim", "labels", "brackets"});
    if (!j.contains("dim")) r.at("dim").fail("missing");
    const std::size_t n = r.at("dim").count(j["dim"]);
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const Reader lr = r.at("labels");
        for (std::size_t i = 0; i < lr.array(j["labels"], n).size(); ++i) {
            if (!j["labels"][i].is_string()) lr.at(i).fail("expected a string");
            labels.push_back(j["labels"][i].get<std::string>());
        }
    }
    LieAlgebra algebra(n, labels);
    if (!j.contains("brackets")) return algebra;
    const Reader br = r.at("brackets");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < br.array(j["brackets"]).size(); ++t) {
        const Reader tr = br.at(t);
        const json& triple = tr.array(j["brackets"][t], 4);
        std::size_t a = tr.at(0).index(triple[0], n);
        std::size_t b = tr.at(1).index(triple[1], n);
        const std::size_t c = tr.at(2).index(triple[2], n);
        Rational value = tr.at(3).rational(triple[3]);
        if (a == b) tr.fail("bracket of a basis vector with itself");
        if (a > b) {
            std::swap(a, b);
            value = -value;
        }
        if (!seen.emplace(a, b, c).second) tr.fail("duplicate entry for this bracket component");
        algebra.set_constant(a, b, c, Expr(value));
    }
    return algebra;
}

Representation read_representation(const Reader& r, const json& j, std::size_t algebra_dim, Convention convention) {
    r.object(j);
    reject_unknown(r, j, {"dim", "matrices"});
    if (!j.contains("dim")) r.at("dim").fail("missing");
    if (!j.contains("matrices")) r.at("matrices").fail("missing");
    const std::size_t d = r.at("dim").count(j["dim"]);
    const Reader mr = r.at("matrices");
    std::vector<ExprMatrix> matrices;
    for (std::size_t a = 0; a < mr.array(j["matrices"], algebra_dim).size(); ++a) {
        const Reader ar = mr.at(a);
        ExprMatrix m(d, d);
        for (std::size_t row = 0; row < ar.array(j["matrices"][a], d).size(); ++row) {
            const Reader rr = ar.at(row);
            const json& entries = rr.array(j["matrices"][a][row], d);
            for (std::size_t col = 0; col < d; ++col) m(row, col) = Expr(rr.at(col).rational(entries[col]));
        }
        matrices.push_back(std::move(m));
    }
    return Representation(d, std::move(matrices), convention);
}

ParamCovector read_covector(const Reader& r, const json& j, std::size_t n) {
    r.object(j);
    reject_unknown(r, j, {"entries", "params"});
    ParamCovector out;
    const Reader er = r.at("entries");
    if (!j.contains("entries")) er.fail("missing");
    for (std::size_t i = 0; i < er.array(j["entries"], n).size(); ++i) out.entries.push_back(er.at(i).expression(j["entries"][i]));
    const Reader pr = r.at("params");
    if (!j.contains("params")) pr.fail("missing");
    for (std::size_t i = 0; i < pr.array(j["params"]).size(); ++i) out.params.push_back(pr.at(i).name(j["params"][i]));
    if (!is_affine_in_params(out)) r.fail("entries must be affine in the listed params and use no other symbols");
    return out;
}

Subspace read_span(const Reader& r, const json& j, std::size_t n) {
    std::vector<ExprVector> vectors;
    for (std::size_t v = 0; v < r.array(j).size(); ++v) {
        const Reader vr = r.at(v);
        const json& entries = vr.array(j[v], n);
        ExprVector vec;
        for (std::size_t i = 0; i < n; ++i) vec.push_back(Expr(vr.at(i).rational(entries[i])));
        vectors.push_back(std::move(vec));
    }
    return make_subspace(n, vectors);
}

}  // namespace

Problem parse_problem(std::string_view text, const std::string& fallback_name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                          ": malformed JSON");
    }
    const Reader root("");
    root.object(j);
    reject_unknown(root, j, {"schema", "name", "algebra", "representation", "covector", "hints", "options"});
    if (!j.contains("schema") || j["schema"] != kProblemSchema)
        root.at("schema").fail("expected schema version " + std::to_string(kProblemSchema));

    Problem p;
    p.name = fallback_name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) root.at("name").fail("expected a string");
        p.name = j["name"].get<std::string>();
    }

    Convention convention = Convention::Plus;
    if (j.contains("options")) {
        const Reader o = root.at("options");
        const json& opts = o.object(j["options"]);
        reject_unknown(o, opts, {"seed", "convention", "probe-count", "tolerance"});
        if (opts.contains("seed")) {
            if (!opts["seed"].is_number_unsigned()) o.at("seed").fail("expected a non-negative integer");
            p.seed = opts["seed"].get<std::uint64_t>();
        }
        if (opts.contains("convention")) {
            if (opts["convention"] == "plus") convention = Convention::Plus;
            else if (opts["convention"] == "minus") convention = Convention::Minus;
            else o.at("convention").fail("expected \"plus\" or \"minus\"");
        }
        if (opts.contains("probe-count")) p.verify.points = static_cast<int>(o.at("probe-count").count(opts["probe-count"]));
        if (opts.contains("tolerance")) {
            if (!opts["tolerance"].is_number() || opts["tolerance"].get<double>() <= 0)
                o.at("tolerance").fail("expected a positive number");
            p.verify.tolerance = opts["tolerance"].get<double>();
        }
    }

    if (!j.contains("algebra")) root.at("algebra").fail("missing");
    p.algebra = read_algebra(root.at("algebra"), j["algebra"]);
    const std::size_t n = p.algebra.dim();
    if (j.contains("representation"))
        p.representation = read_representation(root.at("representation"), j["representation"], n, convention);
    if (j.contains("covector")) p.covector = read_covector(root.at("covector"), j["covector"], n);
    if (j.contains("hints")) {
        const Reader h = root.at("hints");
        const json& hints = h.object(j["hints"]);
        reject_unknown(h, hints, {"cartan", "radical"});
        if (hints.contains("cartan")) p.hints.cartan = read_span(h.at("cartan"), hints["cartan"], n);
        if (hints.contains("radical")) p.hints.radical = read_span(h.at("radical"), hints["radical"], n);
    }
    return p;
}

Problem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Validation, "cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_problem(text.str(), path.stem().string());
}

ValidationReport validate_problem(const Problem& problem) {
    ValidationReport report = check_lie_algebra(problem.algebra);
    if (problem.representation) {
        for (auto& v : check_representation(problem.algebra, *problem.representation).violations)
            report.violations.push_back("representation: " + v);
    }
    return report;
}

}  // namespace lieinv
