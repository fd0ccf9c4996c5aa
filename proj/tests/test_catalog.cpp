#include "support.hpp"

#include "linlef/errors.hpp"
#include "linlef/json_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace linlef;

namespace {

bool preserves_brackets(const LieAlgebra& g, const Matrix& f)
{
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (f * g.structure(i, j) != g.bracket(f.column(i), f.column(j))) return false;
    return true;
}

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() / ("linlef_catalog_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_SUITE("catalog") {

TEST_CASE("built-in entries")
{
    const auto& c = Catalog::builtin();
    for (const char* name : {"abelian_1", "abelian_2", "abelian_3", "abelian_4", "heisenberg3", "heisenberg5",
                             "filiform4", "sol3"})
        CHECK(c.contains(name));
    CHECK_THROWS_AS(c.get("nope"), InputError);
    CHECK(selftest(c).empty());
}

TEST_CASE("nilpotency and splits match the names")
{
    const auto& c = Catalog::builtin();
    for (const auto& name : testing::nilpotent_catalog_names()) {
        CHECK(is_nilpotent(c.get(name).algebra));
        CHECK(c.get(name).grading);
    }
    CHECK_FALSE(is_nilpotent(c.get("sol3").algebra));
    CHECK(c.get("sol3").split);
    CHECK_FALSE(c.get("sol3").grading);
}

TEST_CASE("every listed morphism preserves brackets")
{
    const auto& c = Catalog::builtin();
    for (const auto& name : c.names())
        for (const auto& m : c.get(name).morphisms) CHECK(preserves_brackets(c.get(name).algebra, m.matrix));
}

TEST_CASE("graded scaling by 2 on heisenberg3")
{
    const auto f = graded_scaling(Catalog::builtin().get("heisenberg3"), 2);
    CHECK(f.matrix == Matrix::diagonal(Vector{2, 2, 4}));
    CHECK_THROWS_AS(graded_scaling(Catalog::builtin().get("sol3"), 2), InputError);
}

TEST_CASE("seeded graded endomorphisms are automorphisms")
{
    const auto& c = Catalog::builtin();
    for (const auto& name : testing::nilpotent_catalog_names()) {
        const auto& e = c.get(name);
        const auto& w = *e.grading;
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const auto f = random_graded_endomorphism(e, seed);
            CHECK(preserves_brackets(e.algebra, f.matrix));
            const Rational t = f.matrix(0, 0);
            CHECK_FALSE(t.is_zero());
            for (std::size_t i = 0; i < w.size(); ++i) CHECK(pow(f.matrix(i, i), w[0]) == pow(t, w[i]));
        }
        CHECK(random_graded_endomorphism(e, 5).matrix == random_graded_endomorphism(e, 5).matrix);
    }
}

TEST_CASE("json round trip")
{
    for (const auto& name : Catalog::builtin().names()) {
        const auto& e = Catalog::builtin().get(name);
        const auto back = parse_catalog_entry(to_json(e));
        CHECK(back.algebra == e.algebra);
        CHECK(back.grading == e.grading);
        CHECK(back.morphisms.size() == e.morphisms.size());
        CHECK(to_json(back) == to_json(e));
    }
}

TEST_CASE("override directory")
{
    TempDir dir;
    {
        std::ofstream out(dir.path / "heisenberg3.json");
        out << R"({"name": "heisenberg3", "algebra": {"dim": 3, "brackets": []}, "morphisms": []})";
    }
    {
        std::ofstream out(dir.path / "line.json");
        out << R"({"name": "line", "algebra": {"dim": 1, "brackets": []}, "grading": [1], "morphisms": []})";
    }
    const auto c = Catalog::with_overrides(dir.path);
    CHECK(c.get("heisenberg3").algebra == LieAlgebra::abelian(3));
    CHECK(c.contains("line"));
    CHECK(c.contains("sol3"));
    CHECK(Catalog::builtin().get("heisenberg3").algebra != LieAlgebra::abelian(3));

    ::setenv("LEFSCHETZ_CATALOG_DIR", dir.path.c_str(), 1);
    CHECK(Catalog::load_default().contains("line"));
    ::unsetenv("LEFSCHETZ_CATALOG_DIR");
    CHECK_FALSE(Catalog::load_default().contains("line"));

    {
        std::ofstream out(dir.path / "zz_broken.json");
        out << R"({"name": "broken", "algebra": {"dim": 0}})";
    }
    CHECK_THROWS_AS(Catalog::with_overrides(dir.path), InputError);
    CHECK_THROWS_AS(Catalog::with_overrides(dir.path / "missing"), InputError);
}

}
