#include "lieinv/errors.hpp"
#include "lieinv/extension.hpp"
#include "lieinv/invariants.hpp"

#include "combine.hpp"

#include <algorithm>

namespace lieinv {

namespace {

template <class F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        throw e.with_stage(stage);
    }
}

InvariantSet coadjoint_invariants(const LieAlgebra& algebra, const std::vector<std::string>& coords,
                                  const PipelineOptions& options) {
    const ParamCovector lambda = staged("parametrize", [&] {
        if (!options.covector) return parametrize_covector(algebra, options.seed);
        if (options.covector->entries.size() != algebra.dim())
            throw Error(ErrorKind::DimensionMismatch, "covector length differs from the algebra dimension");
        if (!covector_certificate(algebra, *options.covector, options.seed))
            throw Error(ErrorKind::DegenerateCovector, "covector override fails the nondegeneracy certificate");
        return *options.covector;
    });
    const Subspace p = staged("polarize", [&] { return polarization(algebra, lambda, options.hints); });
    const AdaptedBasis basis = staged("complete-basis", [&] { return complete_basis(algebra, p); });
    const TransitionSet ts = staged("transition", [&] { return transition_functions(algebra, basis, lambda); });
    InvariantSet set = staged("eliminate", [&] { return eliminate(ts, coords); });
    staged("verify", [&] {
        const auto fields = generators(coadjoint(algebra), coords);
        for (const auto& j : set.invariants) {
            set.verdicts.push_back(verify_invariant(fields, j, options.verify));
            if (set.verdicts.back().kind == VerdictKind::Refuted)
                throw Error(ErrorKind::Construction, "eliminated invariant " + j.to_string() + " is refuted");
        }
        return 0;
    });
    return set;
}

bool only_depends_on(const Expr& e, const std::vector<std::string>& names) {
    for (const auto& s : e.free_symbols())
        if (std::find(names.begin(), names.end(), s) == names.end()) return false;
    return true;
}

}  // namespace

InvariantSet casimirs(const LieAlgebra& algebra, const PipelineOptions& options) {
    return coadjoint_invariants(algebra, coordinate_names("X", algebra.dim()), options);
}

InvariantSet rep_invariants(const LieAlgebra& algebra, const Representation& rep, const PipelineOptions& options) {
    const ExtendedAlgebra ext = staged("extend", [&] { return extend(algebra, rep); });
    const std::size_t wanted = staged("count", [&] { return invariant_count(rep, options.seed); });
    const auto base = coordinate_names("X", algebra.dim());
    const auto x = coordinate_names("x", rep.dim());
    std::vector<std::string> coords = base;
    coords.insert(coords.end(), x.begin(), x.end());

    InvariantSet all = coadjoint_invariants(ext.result, coords, options);
    InvariantSet out;
    out.coords = x;
    out.candidates = all.invariants;
    out.diagnostic = all.diagnostic;

    ExprVector chosen;
    for (const auto& j : all.invariants)
        if (only_depends_on(j, x)) chosen.push_back(j);
    if (chosen.size() < wanted) {
        staged("select", [&] {
            for (const auto& c : detail::x_only_combinations(all.invariants, base, coords, options.seed))
                chosen.push_back(c);
            return 0;
        });
    }
    chosen = detail::independent_subset(chosen, x, options.seed);
    for (const auto& j : chosen) out.invariants.push_back(detail::tidy(j));
    for (const auto& c : all.chart)
        if (only_depends_on(c, x)) out.chart.push_back(c);

    staged("verify", [&] {
        const auto fields = generators(rep, x);
        for (const auto& j : out.invariants) {
            out.verdicts.push_back(verify_invariant(fields, j, options.verify));
            if (out.verdicts.back().kind == VerdictKind::Refuted)
                throw Error(ErrorKind::Construction, "selected invariant " + j.to_string() + " is refuted");
        }
        return 0;
    });
    if (out.invariants.size() == wanted)
        out.status = InvariantStatus::Complete;
    else
        out.status = all.status == InvariantStatus::Implicit ? InvariantStatus::Implicit : InvariantStatus::Partial;
    if (out.status == InvariantStatus::Complete) out.diagnostic.clear();
    if (out.status == InvariantStatus::Implicit) out.implicit = all.implicit;
    if (out.status == InvariantStatus::Partial && out.diagnostic.empty())
        out.diagnostic = "selected " + std::to_string(out.invariants.size()) + " of " + std::to_string(wanted) +
                         " invariants; all Casimirs are listed as candidates";
    return out;
}

}  // namespace lieinv
