#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "shadowkit/constructions.hpp"
#include "shadowkit/extremal.hpp"
#include "shadowkit/family.hpp"
#include "shadowkit/inequalities.hpp"
#include "shadowkit/reduction.hpp"
#include "shadowkit/seq.hpp"
#include "shadowkit/sweeps.hpp"

namespace shadowkit::io {

// Insertion-ordered so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// Numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const ExactInt& x);
Json to_json(const Seq& s);
Json to_json(const KFamily& f);
Json to_json(const ElementReport& r);
Json to_json(const CharacterizationReport& r);
Json to_json(const AbcReport& r);
Json to_json(const SweepSummary& s);
Json to_json(const SplitsSummary& s);
Json to_json(const ConjectureReport& r);
Json to_json(const FamilySweepReport& r);
Json to_json(const UniquenessRow& r);
Json to_json(const Counted& c);
Json to_json(const PartArithmetic& p);
Json to_json(const ForbiddenPairArithmetic& a);
Json to_json(const PerturbationResult& p);
Json to_json(const Wall& w);
Json to_json(const ReductionOutcome& o);
Json to_json(const ReductionCheck& c);

// Accepts {"n", "k", "sets": [[1-based elements]]} or any object holding one under "family".
// Throws PreconditionError on malformed input.
KFamily family_from_json(const Json& j);
KFamily read_family(const std::filesystem::path& path);
void write_family(const std::filesystem::path& path, const KFamily& f);

// Two-column "path  value" listing of a report.
std::string to_text(const Json& j);

}  // namespace shadowkit::io
