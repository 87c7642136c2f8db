#include "shadowkit_tools/json_io.hpp"

#include <fstream>
#include <sstream>

#include "shadowkit/binomial_sum.hpp"
#include "shadowkit/errors.hpp"
#include "shadowkit/lattice.hpp"

namespace shadowkit::io {

namespace {

Json rows_to_json(const std::vector<InequalityRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        out.push_back({{"step", r.step}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"holds", r.holds()},
                       {"tight", r.tight()}});
    }
    return out;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object() && !j.empty()) {
        for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

}  // namespace

Json to_json(const ExactInt& x) {
    if (x.fits_int64()) return x.to_int64();
    return x.to_string();
}

Json to_json(const Seq& s) { return Json(std::vector<std::int64_t>(s.terms().begin(), s.terms().end())); }

Json to_json(const KFamily& f) {
    Json sets = Json::array();
    for (const Mask s : f.sets()) sets.push_back(elements_of(s));
    return {{"n", f.n()}, {"k", f.k()}, {"sets", std::move(sets)}};
}

Json to_json(const ElementReport& r) {
    return {{"element", r.element},
            {"deletion_size", to_json(r.deletion_size)},
            {"link_size", to_json(r.link_size)},
            {"threshold", to_json(r.threshold)},
            {"deletion_cascade", to_json(r.deletion_cascade)},
            {"link_cascade", to_json(r.link_cascade)},
            {"branch", std::string(to_string(r.branch))},
            {"inclusion", r.inclusion},
            {"deletion_extremal", r.deletion_extremal},
            {"link_extremal", r.link_extremal},
            {"numerical_equality", r.numerical_equality},
            {"reverse_inclusion", r.reverse_inclusion},
            {"satisfied", r.satisfied}};
}

Json to_json(const CharacterizationReport& r) {
    Json elements = Json::array();
    for (const auto& e : r.elements) elements.push_back(to_json(e));
    return {{"cascade", to_json(r.cascade)}, {"verdict", r.verdict}, {"elements", std::move(elements)}};
}

Json to_json(const AbcReport& r) {
    return {{"value_split", r.value_split},
            {"b_nonempty", r.b_nonempty},
            {"lex_condition", r.lex_condition},
            {"nonnegative", r.nonnegative},
            {"lower_bounds", r.lower_bounds},
            {"hypotheses_hold", r.hypotheses_hold()},
            {"inequalities_hold", r.inequalities_hold()},
            {"failing_steps", r.failing_steps()},
            {"equality_at_one", r.equality_at_one},
            {"equality_propagates", r.equality_propagates},
            {"rows", rows_to_json(r.rows)}};
}

Json to_json(const SweepSummary& s) {
    return {{"triples", s.triples},
            {"violations", s.violations},
            {"propagation_checked", s.propagation_checked},
            {"propagation_failures", s.propagation_failures},
            {"examples", strings(s.examples)}};
}

Json to_json(const SplitsSummary& s) {
    return {{"cascades", s.cascades},
            {"mismatches", s.mismatches},
            {"extra_exhaustive", s.extra_exhaustive},
            {"missing_exhaustive", s.missing_exhaustive},
            {"examples", strings(s.examples)}};
}

Json to_json(const ConjectureReport& r) {
    return {{"k", r.k},
            {"points", r.points},
            {"min_slack", r.min_slack},
            {"worst", {{"x", r.worst.x}, {"y", r.worst.y}, {"z", r.worst.z}, {"slack", r.worst.slack}}}};
}

Json to_json(const FamilySweepReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"families", r.families},
            {"extremal", r.extremal},
            {"verdict_mismatches", r.verdict_mismatches},
            {"witness_unsound", r.witness_unsound},
            {"chain_failures", r.chain_failures},
            {"shadow_not_extremal", r.shadow_not_extremal},
            {"split_bound_failures", r.split_bound_failures},
            {"min_degree_checked", r.min_degree_checked},
            {"min_degree_failures", r.min_degree_failures},
            {"clean", r.clean()},
            {"examples", strings(r.examples)}};
}

Json to_json(const UniquenessRow& r) {
    return {{"m", r.m}, {"classes", r.classes}, {"predicate", r.predicate}, {"agrees", r.agrees()}};
}

Json to_json(const Counted& c) { return {{"value", to_json(c.value)}, {"cascade", to_json(c.cascade)}}; }

Json to_json(const PartArithmetic& p) {
    return {{"link", to_json(p.link)},
            {"link_shadow", to_json(p.link_shadow)},
            {"deletion", to_json(p.deletion)},
            {"deletion_shadow", to_json(p.deletion_shadow)},
            {"link_extremal", p.link_extremal},
            {"deletion_extremal", p.deletion_extremal},
            {"branch", std::string(to_string(p.branch))},
            {"numerical_equality", p.numerical_equality}};
}

Json to_json(const ForbiddenPairArithmetic& a) {
    return {{"n", a.n},
            {"k", a.k},
            {"m", a.m},
            {"t", a.t},
            {"r", a.r},
            {"full", to_json(a.full)},
            {"full_shadow", to_json(a.full_shadow)},
            {"full_extremal", a.full_extremal},
            {"deleted", to_json(a.deleted)},
            {"reduced", to_json(a.reduced)},
            {"reduced_shadow", to_json(a.reduced_shadow)},
            {"reduced_extremal", a.reduced_extremal},
            {"outside", to_json(a.outside)},
            {"inside", to_json(a.inside)}};
}

Json to_json(const PerturbationResult& p) {
    Json j = {{"status", std::string(to_string(p.status))},
              {"pivot", p.pivot},
              {"removed", elements_of(p.removed)},
              {"added", elements_of(p.added)}};
    if (p.family) {
        j["extremal"] = p.extremal;
        j["same_shadow"] = p.same_shadow;
        j["isomorphic_to_segment"] = p.isomorphic_to_segment ? Json(*p.isomorphic_to_segment) : Json(nullptr);
        j["family"] = to_json(*p.family);
    }
    return j;
}

Json to_json(const Wall& w) { return {{"heights", w.heights()}, {"level", w.level()}}; }

Json to_json(const ReductionOutcome& o) {
    Json trace = Json::array();
    for (const auto c : o.trace) trace.push_back(std::string(to_string(c)));
    return {{"wall", to_json(o.wall_out)},
            {"b", to_json(o.b_out)},
            {"c", to_json(o.c_out)},
            {"rubble", o.rubble.uppers},
            {"pavement", o.pavement.indices},
            {"shared", to_string(o.shared)},
            {"trace", std::move(trace)}};
}

Json to_json(const ReductionCheck& c) {
    return {{"sequence_identity", c.sequence_identity}, {"wall_identity", c.wall_identity},
            {"terminal", c.terminal}, {"ok", c.ok()}};
}

KFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw PreconditionError("family JSON must be an object");
    if (!j.contains("sets") && j.contains("family")) return family_from_json(j.at("family"));
    try {
        const int n = j.at("n").get<int>();
        const int k = j.at("k").get<int>();
        if (n < 0 || n > kMaxGround) throw PreconditionError("family JSON: n must lie in [0,64]");
        std::vector<Mask> sets;
        for (const auto& set : j.at("sets")) {
            const auto elements = set.get<std::vector<int>>();
            if (!std::is_sorted(elements.begin(), elements.end()) ||
                std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
                throw PreconditionError("family JSON: each set must list distinct elements in ascending order");
            }
            for (const int x : elements) {
                if (x < 1 || x > n) throw PreconditionError("family JSON: element outside [1,n]");
            }
            sets.push_back(mask_of(elements));
        }
        const std::size_t listed = sets.size();
        KFamily f(n, k, std::move(sets));
        if (f.size() != listed) throw PreconditionError("family JSON: duplicate sets");
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("family JSON: ") + e.what());
    }
}

KFamily read_family(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return family_from_json(j);
}

void write_family(const std::filesystem::path& path, const KFamily& f) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write " + path.string());
    out << to_json(f).dump() << '\n';
}

std::string to_text(const Json& j) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t width = 0;
    for (const auto& [key, _] : rows) width = std::max(width, key.size());
    std::ostringstream out;
    for (const auto& [key, value] : rows) out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    return out.str();
}

}  // namespace shadowkit::io
