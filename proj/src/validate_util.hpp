#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semimod/core.hpp"

namespace semimod::detail {

// Name -> index resolution with duplicate detection, shared by validators.
class NameIndex {
public:
    explicit NameIndex(const std::vector<std::string>& names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            auto [it, fresh] = map_.emplace(names[i], static_cast<Elem>(i));
            if (!fresh) throw DuplicateElement("duplicate element '" + names[i] + "'");
        }
    }

    Elem resolve(const std::string& n, const std::string& role) const {
        auto it = map_.find(n);
        if (it == map_.end())
            throw UnresolvedReference("unknown element '" + n + "' referenced as " + role);
        return it->second;
    }

    std::optional<Elem> find(const std::string& n) const {
        auto it = map_.find(n);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::unordered_map<std::string, Elem> map_;
};

// Resolves a raw table against the carrier's element names. Entries that do
// not name a declared element are closure violations (the operation escapes
// the carrier), not reference errors. Row labels are the left operands.
inline std::vector<Elem> resolve_table(const std::vector<std::vector<std::string>>& rows,
                                       std::size_t nrows, std::size_t ncols, const NameIndex& ix,
                                       const std::vector<std::string>& row_labels,
                                       const std::string& table, std::vector<AxiomViolation>& out) {
    if (rows.size() != nrows)
        throw ShapeError(table + " table has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(nrows));
    std::vector<Elem> flat(nrows * ncols, 0);
    for (std::size_t i = 0; i < nrows; ++i) {
        if (rows[i].size() != ncols)
            throw ShapeError(table + " table row " + std::to_string(i) + " (" + row_labels[i] +
                             ") has " + std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(ncols));
        for (std::size_t j = 0; j < ncols; ++j) {
            auto e = ix.find(rows[i][j]);
            if (!e) {
                out.push_back({"closure", {table, row_labels[i], rows[i][j]}});
                flat[i * ncols + j] = 0;
            } else {
                flat[i * ncols + j] = *e;
            }
        }
    }
    return flat;
}

}  // namespace semimod::detail
