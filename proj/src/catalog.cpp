#include "linlef/catalog.hpp"

#include "linlef/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>

namespace linlef {

namespace {

constexpr const char* kEmbeddedEntries[] = {
    R"({"name": "abelian_1", "algebra": {"dim": 1, "basis": ["x"], "brackets": []},
        "grading": [1],
        "morphisms": [{"name": "identity", "matrix": [["1"]]},
                      {"name": "zero", "matrix": [["0"]]},
                      {"name": "triple", "matrix": [["3"]]}],
        "notes": "The circle."})",
    R"({"name": "abelian_2", "algebra": {"dim": 2, "basis": ["x", "y"], "brackets": []},
        "grading": [1, 1],
        "morphisms": [{"name": "identity", "matrix": [["1", "0"], ["0", "1"]]},
                      {"name": "zero", "matrix": [["0", "0"], ["0", "0"]]},
                      {"name": "cat_map", "matrix": [["2", "1"], ["1", "1"]]},
                      {"name": "rotation", "matrix": [["0", "-1"], ["1", "0"]]}],
        "notes": "The 2-torus; cat_map is the Anosov automorphism."})",
    R"({"name": "abelian_3", "algebra": {"dim": 3, "basis": ["x", "y", "z"], "brackets": []},
        "grading": [1, 1, 1],
        "morphisms": [{"name": "identity", "matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]},
                      {"name": "zero", "matrix": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]},
                      {"name": "mixed", "matrix": [["1", "2", "0"], ["0", "1", "1"], ["1", "0", "2"]]}],
        "notes": "The 3-torus."})",
    R"({"name": "abelian_4", "algebra": {"dim": 4, "basis": ["x", "y", "z", "w"], "brackets": []},
        "grading": [1, 1, 1, 1],
        "morphisms": [{"name": "identity", "matrix": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
                      {"name": "zero", "matrix": [["0", "0", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]]},
                      {"name": "block", "matrix": [["2", "1", "0", "0"], ["1", "1", "0", "0"], ["0", "0", "0", "-1"], ["0", "0", "1", "0"]]}],
        "notes": "The 4-torus."})",
    R"({"name": "heisenberg3",
        "algebra": {"dim": 3, "basis": ["x", "y", "z"],
                    "brackets": [{"left": 0, "right": 1, "result": {"2": "1"}}]},
        "grading": [1, 1, 2],
        "morphisms": [{"name": "identity", "matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]},
                      {"name": "zero", "matrix": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]},
                      {"name": "scaling_2_3", "matrix": [["2", "0", "0"], ["0", "3", "0"], ["0", "0", "6"]]},
                      {"name": "shear", "matrix": [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]]},
                      {"name": "cat_lift", "matrix": [["2", "1", "0"], ["1", "1", "0"], ["5", "-1", "1"]]}],
        "notes": "[x,y] = z; the Heisenberg nilmanifold."})",
    R"({"name": "heisenberg5",
        "algebra": {"dim": 5, "basis": ["x1", "y1", "x2", "y2", "z"],
                    "brackets": [{"left": 0, "right": 1, "result": {"4": "1"}},
                                 {"left": 2, "right": 3, "result": {"4": "1"}}]},
        "grading": [1, 1, 1, 1, 2],
        "morphisms": [{"name": "identity", "matrix": [["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","1"]]},
                      {"name": "zero", "matrix": [["0","0","0","0","0"],["0","0","0","0","0"],["0","0","0","0","0"],["0","0","0","0","0"],["0","0","0","0","0"]]},
                      {"name": "scaling", "matrix": [["2","0","0","0","0"],["0","3","0","0","0"],["0","0","1","0","0"],["0","0","0","6","0"],["0","0","0","0","6"]]},
                      {"name": "swap_pairs", "matrix": [["0","0","1","0","0"],["0","0","0","1","0"],["1","0","0","0","0"],["0","1","0","0","0"],["0","0","0","0","1"]]}],
        "notes": "[x1,y1] = [x2,y2] = z."})",
    R"({"name": "filiform4",
        "algebra": {"dim": 4, "basis": ["e0", "e1", "e2", "e3"],
                    "brackets": [{"left": 0, "right": 1, "result": {"2": "1"}},
                                 {"left": 0, "right": 2, "result": {"3": "1"}}]},
        "grading": [1, 2, 3, 4],
        "morphisms": [{"name": "identity", "matrix": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]},
                      {"name": "zero", "matrix": [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]},
                      {"name": "scaling_2_3", "matrix": [["2","0","0","0"],["0","3","0","0"],["0","0","6","0"],["0","0","0","12"]]},
                      {"name": "shear", "matrix": [["1","0","0","0"],["1","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}],
        "notes": "[e0,e1] = e2, [e0,e2] = e3; 3-step nilpotent."})",
    R"({"name": "sol3",
        "algebra": {"dim": 3, "basis": ["t", "x", "y"],
                    "brackets": [{"left": 0, "right": 1, "result": {"1": "1"}},
                                 {"left": 0, "right": 2, "result": {"2": "-1"}}]},
        "split": {"nil_ideal": [1, 2], "complement": [0]},
        "morphisms": [{"name": "identity", "matrix": [["1","0","0"],["0","1","0"],["0","0","1"]]},
                      {"name": "zero", "matrix": [["0","0","0"],["0","0","0"],["0","0","0"]]},
                      {"name": "hyperbolic_2", "matrix": [["1","0","0"],["0","2","0"],["0","0","1/2"]]},
                      {"name": "flip", "matrix": [["-1","0","0"],["0","0","1"],["0","1","0"]]},
                      {"name": "collapse", "matrix": [["3","0","0"],["1","0","0"],["2","0","0"]]}],
        "notes": "[t,x] = x, [t,y] = -y; completely solvable, not nilpotent."})",
    R"({"name": "sol3_jordan",
        "algebra": {"dim": 3, "basis": ["t", "x", "y"],
                    "brackets": [{"left": 0, "right": 1, "result": {"1": "1"}},
                                 {"left": 0, "right": 2, "result": {"1": "1", "2": "1"}}]},
        "split": {"nil_ideal": [1, 2], "complement": [0]},
        "morphisms": [{"name": "identity", "matrix": [["1","0","0"],["0","1","0"],["0","0","1"]]},
                      {"name": "zero", "matrix": [["0","0","0"],["0","0","0"],["0","0","0"]]},
                      {"name": "ideal_scaling", "matrix": [["1","0","0"],["0","2","0"],["0","0","2"]]}],
        "notes": "ad(t) acts on the ideal as the Jordan block [[1,1],[0,1]]; its nilshadow is Heisenberg."})",
};

void check_weights_match(const CatalogEntry& e, const std::vector<unsigned>& w, const std::string& path)
{
    if (w.size() != e.algebra.dim()) throw InputError(path + "/grading: expected " + std::to_string(e.algebra.dim()) + " weights");
    for (auto x : w)
        if (x == 0) throw InputError(path + "/grading: weights must be positive");
}

} // namespace

CatalogEntry parse_catalog_entry(const json::json& j, const std::string& path)
{
    if (!j.is_object() || !j.contains("name") || !j["name"].is_string())
        throw InputError(path + "/name: catalog entry needs a string name");
    if (!j.contains("algebra")) throw InputError(path + ": catalog entry needs an algebra");

    CatalogEntry e{j["name"].get<std::string>(), json::parse_algebra(j["algebra"], path + "/algebra"), {}, {}, {}, {}};
    if (j.contains("grading")) {
        std::vector<unsigned> w;
        for (const auto& x : j["grading"]) {
            if (!x.is_number_unsigned()) throw InputError(path + "/grading: weights must be positive integers");
            w.push_back(x.get<unsigned>());
        }
        check_weights_match(e, w, path);
        e.grading = std::move(w);
    }
    if (j.contains("split")) e.split = json::parse_split(j["split"], e.algebra, path + "/split");
    if (j.contains("morphisms")) {
        const auto& ms = j["morphisms"];
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const std::string mp = path + "/morphisms/" + std::to_string(i);
            auto f = json::parse_endomorphism(ms[i], e.algebra, mp);
            e.morphisms.push_back({ms[i].value("name", "morphism_" + std::to_string(i)), std::move(f.matrix)});
        }
    }
    e.notes = j.value("notes", "");
    return e;
}

json::json to_json(const CatalogEntry& e)
{
    json::json out = {{"name", e.name}, {"algebra", json::to_json(e.algebra)}, {"notes", e.notes}};
    if (e.grading) out["grading"] = *e.grading;
    if (e.split) out["split"] = {{"nil_ideal", e.split->nil_ideal}, {"complement", e.split->complement}};
    json::json ms = json::json::array();
    for (const auto& m : e.morphisms) ms.push_back({{"name", m.name}, {"matrix", json::to_json(m.matrix)}});
    out["morphisms"] = ms;
    return out;
}

const Catalog& Catalog::builtin()
{
    static const Catalog catalog = [] {
        Catalog c;
        for (const char* text : kEmbeddedEntries) {
            CatalogEntry e = parse_catalog_entry(json::json::parse(text));
            c.entries_.emplace(e.name, std::move(e));
        }
        return c;
    }();
    return catalog;
}

Catalog Catalog::with_overrides(const std::filesystem::path& dir)
{
    Catalog c = builtin();
    if (!std::filesystem::is_directory(dir)) throw InputError("catalog directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".json") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        json::json doc;
        try {
            doc = json::json::parse(in);
        } catch (const json::json::parse_error& err) {
            throw InputError(f.string() + ": " + err.what());
        }
        CatalogEntry e = parse_catalog_entry(doc, f.string() + "#");
        c.entries_.insert_or_assign(e.name, std::move(e));
    }
    return c;
}

Catalog Catalog::load_default()
{
    if (const char* dir = std::getenv("LEFSCHETZ_CATALOG_DIR"); dir && *dir) return with_overrides(dir);
    return builtin();
}

std::vector<std::string> Catalog::names() const
{
    std::vector<std::string> out;
    for (const auto& [name, _] : entries_) out.push_back(name);
    return out;
}

const CatalogEntry& Catalog::get(const std::string& name) const
{
    const auto it = entries_.find(name);
    if (it == entries_.end()) throw InputError("UnknownEntry: no catalog entry named '" + name + "'");
    return it->second;
}

LieMorphism graded_scaling(const CatalogEntry& entry, const Rational& t)
{
    if (!entry.grading) throw InputError("NoGrading: catalog entry '" + entry.name + "' has no grading");
    std::vector<Rational> diag;
    for (auto w : *entry.grading) diag.push_back(pow(t, w));
    return LieMorphism::endomorphism(entry.algebra, Matrix::diagonal(diag));
}

LieMorphism random_graded_endomorphism(const CatalogEntry& entry, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> magnitude(1, 5);
    std::bernoulli_distribution negative(0.5);
    long num = magnitude(rng);
    const long den = magnitude(rng);
    if (negative(rng)) num = -num;
    return graded_scaling(entry, Rational(num, den));
}

std::vector<std::string> selftest(const Catalog& catalog)
{
    std::vector<std::string> failures;
    for (const auto& name : catalog.names()) {
        const auto& e = catalog.get(name);
        auto record = [&](const std::string& what) { failures.push_back(name + ": " + what); };
        try {
            if (auto v = find_jacobi_violation(e.algebra)) record(v->describe());
            if (e.grading)
                if (auto v = find_morphism_violation(graded_scaling(e, Rational(2))))
                    record("grading is not an automorphism: " + v->describe());
            for (const auto& m : e.morphisms)
                if (auto v = find_morphism_violation(LieMorphism::endomorphism(e.algebra, m.matrix)))
                    record("morphism '" + m.name + "': " + v->describe());
            if (e.split) build_shadow(*e.split);
        } catch (const std::exception& ex) {
            record(ex.what());
        }
    }
    return failures;
}

} // namespace linlef
