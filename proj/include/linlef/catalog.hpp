#pragma once

#include "linlef/json_io.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linlef {

struct NamedMorphism {
    std::string name;
    Matrix matrix;
};

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    // Positive weights w_i such that diag(t^{w_i}) is an automorphism.
    std::optional<std::vector<unsigned>> grading;
    std::optional<SplitPresentation> split;
    std::vector<NamedMorphism> morphisms;
    std::string notes;
};

CatalogEntry parse_catalog_entry(const json::json& j, const std::string& path = "");
json::json to_json(const CatalogEntry& entry);

class Catalog {
public:
    // Entries compiled into the binary.
    static const Catalog& builtin();
    // Built-in entries, overridden or extended by every <name>.json in the
    // directory named by LEFSCHETZ_CATALOG_DIR when that variable is set.
    static Catalog load_default();
    static Catalog with_overrides(const std::filesystem::path& dir);

    std::vector<std::string> names() const;
    bool contains(const std::string& name) const { return entries_.count(name) != 0; }
    // Throws InputError ("UnknownEntry") for names not in the catalog.
    const CatalogEntry& get(const std::string& name) const;

private:
    std::map<std::string, CatalogEntry> entries_;
};

// diag(t^{w_i}). Throws InputError ("NoGrading") when the entry has no grading.
LieMorphism graded_scaling(const CatalogEntry& entry, const Rational& t);
// Graded scaling by a seeded random nonzero t = ±a/b with 1 ≤ a, b ≤ 5.
LieMorphism random_graded_endomorphism(const CatalogEntry& entry, std::uint64_t seed);

// Runs every validator on every entry; returns one message per failure.
std::vector<std::string> selftest(const Catalog& catalog);

} // namespace linlef
