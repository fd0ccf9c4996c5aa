#pragma once

#include "linlef/catalog.hpp"

#include <optional>
#include <string>

namespace linlef {

// An input document for the CLI:
//   { "algebra": {...} | "catalog-name", "map": {"matrix": ...},
//     "module": {...}, "intertwiner": {"matrix": ...}, "split": {...} }
// Only "algebra" is required. A bare algebra document ({"dim": ...}) is also
// accepted. The module defaults to the trivial 1-dimensional one and the
// intertwiner to the identity on the module.
struct Task {
    LieAlgebra algebra;
    std::optional<std::string> catalog_name;
    std::optional<LieMorphism> map;
    Representation module;
    Matrix intertwiner;
    std::optional<SplitPresentation> split;

    Intertwiner xi() const;
};

Task load_task(const json::json& doc, const Catalog& catalog);
Task load_task_file(const std::string& path, const Catalog& catalog);
json::json read_json_file(const std::string& path);

// Runs every applicable validator. Throws InputError for the first failure,
// prefixed with the document path of the component that failed.
void validate_task(const Task& task);

} // namespace linlef
