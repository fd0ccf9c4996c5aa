#include "linlef/task.hpp"

#include "linlef/errors.hpp"

#include <fstream>

namespace linlef {

Intertwiner Task::xi() const
{
    if (!map) throw InputError("/map: this command needs a map");
    return Intertwiner{*map, module, intertwiner};
}

json::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::json::parse(in);
    } catch (const json::json::parse_error& e) {
        throw InputError(path + ": invalid JSON: " + e.what());
    }
}

Task load_task(const json::json& doc, const Catalog& catalog)
{
    if (!doc.is_object()) throw InputError("/: expected a JSON object");
    if (!doc.contains("algebra") && doc.contains("dim")) return load_task(json::json{{"algebra", doc}}, catalog);
    if (!doc.contains("algebra")) throw InputError("/: missing key 'algebra'");

    const auto& alg = doc["algebra"];
    std::optional<std::string> name;
    std::optional<SplitPresentation> split;
    LieAlgebra algebra = LieAlgebra::abelian(1);
    if (alg.is_string()) {
        const CatalogEntry& entry = catalog.get(alg.get<std::string>());
        name = entry.name;
        algebra = entry.algebra;
        split = entry.split;
    } else {
        algebra = json::parse_algebra(alg, "/algebra");
    }

    Representation module = doc.contains("module") ? json::parse_representation(doc["module"], algebra, "/module")
                                                   : Representation::trivial(algebra);
    Matrix xi = Matrix::identity(module.dim);
    if (doc.contains("intertwiner")) {
        const auto& it = doc["intertwiner"];
        if (!it.is_object() || !it.contains("matrix")) throw InputError("/intertwiner: missing key 'matrix'");
        xi = json::parse_matrix(it["matrix"], "/intertwiner/matrix");
        if (xi.rows() != module.dim || xi.cols() != module.dim)
            throw InputError("/intertwiner/matrix: expected a " + std::to_string(module.dim) + "x" +
                             std::to_string(module.dim) + " matrix");
    }
    std::optional<LieMorphism> map;
    if (doc.contains("map")) map = json::parse_endomorphism(doc["map"], algebra, "/map");
    if (doc.contains("split")) split = json::parse_split(doc["split"], algebra, "/split");

    return Task{std::move(algebra), std::move(name), std::move(map), std::move(module), std::move(xi), std::move(split)};
}

Task load_task_file(const std::string& path, const Catalog& catalog)
{
    return load_task(read_json_file(path), catalog);
}

void validate_task(const Task& task)
{
    auto at = [](const std::string& path, auto&& check) {
        try {
            check();
        } catch (const InputError& e) {
            throw InputError(path + ": " + e.what());
        }
    };
    at("/algebra", [&] { validate(task.algebra); });
    at("/module", [&] { validate_rep(task.module); });
    if (task.map) {
        at("/map", [&] { check_morphism(*task.map); });
        at("/intertwiner", [&] { validate_intertwiner(task.xi()); });
    }
    if (task.split) at("/split", [&] { validate_split(*task.split); });
}

} // namespace linlef
