#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semimod/morphisms.hpp"

namespace semimod {

// One `map` block before resolution.
struct RawMapBlock {
    std::string name;
    std::string source;
    std::string target;
    std::vector<std::pair<std::string, std::string>> entries;
};

// The blocks of one input file, in declaration order. Grammar (tokens are
// whitespace-separated, `#` starts a comment to end of line, `/` separates
// sections):
//
//   semiring NAME / elements e0 e1 ... / zero ei / one ej
//     / add <n*n entries> / mul <n*n entries> / end
//   semimodule NAME over SR / elements ... / zero ei
//     / add <n*n entries> / act <|SR|*n entries> / end
//   map NAME : A -> B / e0 -> f0 e1 -> f1 ... / end
struct AlgebraFile {
    std::vector<RawSemiring> semirings;
    std::vector<RawSemimodule> semimodules;
    std::vector<RawMapBlock> maps;
};

AlgebraFile parse_algebra(std::string_view text);

// Name -> validated object environment; files load on top of whatever is
// already registered (the built-in corpus, earlier files).
struct Registry {
    std::map<std::string, SemiringPtr> semirings;
    std::map<std::string, SemimodulePtr> semimodules;
    std::map<std::string, LinearMap> maps;

    SemiringPtr semiring(const std::string& name) const;
    SemimodulePtr semimodule(const std::string& name) const;  // falls back to a
                                                              // semiring's regular module
    const LinearMap& map(const std::string& name) const;
};

// Validates every block of the file and registers it; DuplicateElement on a
// name that is already taken.
void load_into(Registry& reg, const AlgebraFile& file);

// Canonical text form: the zero element first, remaining elements in
// declaration order, one table row per line. parse(serialize(x)) == x.
std::string serialize(const Semiring& s);
std::string serialize(const Semimodule& m);
std::string serialize(const LinearMap& f, std::string_view name);

}  // namespace semimod
