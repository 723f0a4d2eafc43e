#pragma once

#include <functional>
#include <optional>

#include "semimod/injectivity.hpp"
#include "semimod/matrix_witness.hpp"
#include "semimod/parse.hpp"
#include "semimod/sequences.hpp"

namespace semimod {

// A built-in object with a pinned expected verdict. `run` returns nothing on
// a match and a human-readable mismatch description otherwise.
struct CorpusEntry {
    std::string name;
    std::string claim;
    std::function<std::optional<std::string>(const SearchLimits&)> run;
};

// The built-in registry: the three-element idempotent semiring S3 with its
// distinguished ideal, the Boolean semiring B, the two-element ring Z2, the
// saturating truncations N2/N3, their regular modules, and a few derived
// modules and maps.
const Registry& corpus_registry();

const std::vector<CorpusEntry>& corpus_entries();

std::vector<std::string> corpus_semiring_names();

// Modules over one corpus semiring, used as the test pool.
std::vector<SemimodulePtr> corpus_pool(const std::string& semiring_name);

// Runs the given entries; the report carries one verdict witness per entry,
// mismatches are detailed (and raised as CorpusMismatch when
// throw_on_mismatch is set).
Report run_entries(const std::vector<CorpusEntry>& entries, const SearchLimits& limits = {},
                   bool throw_on_mismatch = true);

Report run_corpus(const SearchLimits& limits = {}, bool throw_on_mismatch = true);

}  // namespace semimod
