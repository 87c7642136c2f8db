#include "shadowkit/sweeps.hpp"

#include "shadowkit/binomial.hpp"
#include "shadowkit/errors.hpp"
#include "shadowkit/extremal.hpp"
#include "shadowkit/family.hpp"
#include "parallel.hpp"

namespace shadowkit {

namespace {

constexpr std::size_t kMaxExamples = 8;
constexpr int kMaxSweepLayer = 24;

void note(FamilySweepReport& r, const KFamily& f, const char* what) {
    if (r.examples.size() < kMaxExamples) r.examples.push_back(std::string(what) + ": " + to_string(f));
}

void audit(FamilySweepReport& r, const KFamily& f) {
    ++r.families;
    const bool extremal = is_extremal(f);
    const CharacterizationReport report = characterize(f);
    if (report.verdict != extremal) {
        ++r.verdict_mismatches;
        note(r, f, "verdict mismatch");
    }
    if (!extremal) {
        for (const ElementReport& e : report.elements) {
            if (e.satisfied) {
                ++r.witness_unsound;
                note(r, f, "unsound witness");
                break;
            }
        }
    } else {
        ++r.extremal;
        if (!shadow_chain_check(f)) {
            ++r.chain_failures;
            note(r, f, "chain failure");
        }
        if (!is_extremal(shadow(f))) {
            ++r.shadow_not_extremal;
            note(r, f, "shadow not extremal");
        }
    }
    const std::size_t whole = shadow(f).size();
    for (int x = 1; x <= f.n(); ++x) {
        if (whole < shadow(delete_star(f, x)).size() + shadow(link(f, x)).size()) {
            ++r.split_bound_failures;
            note(r, f, "split bound failure");
            break;
        }
    }
    if (f.size() > 1 && f.n() > f.k()) {
        ++r.min_degree_checked;
        if (!min_degree_bound_check(f)) {
            ++r.min_degree_failures;
            note(r, f, "minimum degree failure");
        }
    }
}

void merge(FamilySweepReport& into, const FamilySweepReport& part) {
    into.families += part.families;
    into.extremal += part.extremal;
    into.verdict_mismatches += part.verdict_mismatches;
    into.witness_unsound += part.witness_unsound;
    into.chain_failures += part.chain_failures;
    into.shadow_not_extremal += part.shadow_not_extremal;
    into.split_bound_failures += part.split_bound_failures;
    into.min_degree_checked += part.min_degree_checked;
    into.min_degree_failures += part.min_degree_failures;
    for (const auto& e : part.examples) {
        if (into.examples.size() < kMaxExamples) into.examples.push_back(e);
    }
}

}  // namespace

FamilySweepReport sweep_all_families(int n, int k, unsigned threads) {
    if (k < 2 || n < k || n > kMaxGround) throw PreconditionError("family sweep requires 2 <= k <= n");
    if (binom(n, k) > kMaxSweepLayer) throw PreconditionError("family sweep requires C(n,k) <= 24");
    const KFamily layer = full_layer(n, k);
    const auto sets = layer.sets();
    const std::size_t width = sets.size();
    // Chunks of consecutive selection masks; the low bits vary inside a chunk.
    const std::size_t low_bits = std::min<std::size_t>(width, 12);
    const std::size_t chunks = std::size_t{1} << (width - low_bits);
    std::vector<FamilySweepReport> parts(chunks);
    detail::parallel_for(chunks, threads, [&](std::size_t chunk) {
        FamilySweepReport& part = parts[chunk];
        std::vector<Mask> chosen;
        for (std::size_t low = 0; low < (std::size_t{1} << low_bits); ++low) {
            const std::uint64_t selection = (static_cast<std::uint64_t>(chunk) << low_bits) | low;
            if (selection == 0) continue;
            chosen.clear();
            for (std::size_t i = 0; i < width; ++i) {
                if ((selection >> i) & 1U) chosen.push_back(sets[i]);
            }
            audit(part, compact_support(KFamily(n, k, chosen)).family);
        }
    });
    FamilySweepReport total;
    total.n = n;
    total.k = k;
    for (const auto& part : parts) merge(total, part);
    return total;
}

std::vector<UniquenessRow> uniqueness_table(int n, int k, EnumerationMethod method, const SearchOptions& opts) {
    if (k < 1 || n < k) throw PreconditionError("uniqueness table requires 1 <= k <= n");
    const std::int64_t top = binom(n, k).to_int64();
    std::vector<UniquenessRow> rows;
    for (std::int64_t m = 1; m <= top; ++m) {
        UniquenessRow row;
        row.m = m;
        row.classes = enumerate_extremal(n, k, ExactInt(m), true, method, opts).size();
        row.predicate = uniqueness_predicate(n, k, ExactInt(m));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace shadowkit
