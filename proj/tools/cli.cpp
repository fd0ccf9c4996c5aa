#include "cli.hpp"

#include "linlef/errors.hpp"
#include "linlef/linalg.hpp"
#include "linlef/task.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace linlef::cli {

namespace {

using Json = nlohmann::json;

void emit(std::ostream& out, const Json& j)
{
    out << j.dump(2) << '\n';
}

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::string join(const std::vector<Rational>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

// "2,1;1,1" -> [[2,1],[1,1]]
Matrix parse_matrix_literal(const std::string& text)
{
    std::vector<std::vector<Rational>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<Rational> entries;
        std::stringstream es(row);
        std::string entry;
        while (std::getline(es, entry, ',')) {
            const auto b = entry.find_first_not_of(" \t");
            const auto e = entry.find_last_not_of(" \t");
            entries.push_back(Rational::parse(b == std::string::npos ? "" : entry.substr(b, e - b + 1)));
        }
        rows.push_back(std::move(entries));
    }
    if (rows.empty() || rows[0].empty()) throw InputError("--matrix: empty matrix literal");
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw InputError("--matrix: ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

struct Options {
    std::string file;
    std::string module_file;
    std::string a_matrix;
    std::string matrix;
    std::string name;
    bool as_json = false;
    bool verbose = false;
};

int cmd_check(const Options& o, std::ostream& out)
{
    const Catalog catalog = Catalog::load_default();
    const Task task = load_task_file(o.file, catalog);
    validate_task(task);
    out << "algebra: ok (dim " << task.algebra.dim() << ")\n";
    out << "module: ok (dim " << task.module.dim << ")\n";
    if (task.map) out << "map: ok\nintertwiner: ok\n";
    if (task.split) out << "split: ok\n";
    return kSuccess;
}

int cmd_cohomology(const Options& o, std::ostream& out)
{
    const Catalog catalog = Catalog::load_default();
    Task task = load_task_file(o.file, catalog);
    if (!o.module_file.empty()) {
        task.module = json::parse_representation(read_json_file(o.module_file), task.algebra, "/module");
        task.intertwiner = Matrix::identity(task.module.dim);
    }
    validate_task(task);

    const CochainComplex complex = build_complex(task.algebra, task.module);
    const CohomologyData data = cohomology(complex);
    std::optional<std::vector<Matrix>> maps;
    if (task.map) maps = induced_cohomology_map(complex, data, induced_chain_map(complex, *task.map, task.xi()));

    if (o.as_json) {
        Json report = json::cohomology_report(data.betti(), complex.dims, maps ? &*maps : nullptr);
        if (o.verbose) {
            Json reps = Json::object();
            for (std::size_t p = 0; p < data.degrees.size(); ++p) {
                Json list = Json::array();
                for (const auto& v : data.degrees[p].representative_basis) list.push_back(json::to_json(v));
                reps[std::to_string(p)] = list;
            }
            report["representatives"] = reps;
        }
        emit(out, report);
        return kSuccess;
    }
    out << "dims:  " << join(complex.dims) << '\n';
    out << "betti: " << join(data.betti()) << '\n';
    for (std::size_t p = 0; p < data.degrees.size(); ++p) {
        if (o.verbose)
            for (const auto& v : data.degrees[p].representative_basis)
                out << "  H^" << p << " representative " << format_vector(v) << '\n';
        if (maps) out << "  H^" << p << " map " << (*maps)[p] << '\n';
    }
    return kSuccess;
}

int cmd_lefschetz(const Options& o, std::ostream& out)
{
    const Catalog catalog = Catalog::load_default();
    const Task task = load_task_file(o.file, catalog);
    if (!task.map) throw InputError("/map: the lefschetz command needs a map");
    validate_task(task);

    std::string source = o.a_matrix;
    if (source.empty()) {
        if (task.split && !is_nilpotent(task.algebra))
            throw InputError("ambiguous linearization for a split solvable algebra: pass --a-matrix map|shadow");
        source = "map";
    }
    LinearizationTarget target{task.map->matrix, task.algebra, "map"};
    if (source == "shadow") {
        if (!task.split) throw InputError("--a-matrix shadow needs a split presentation");
        const auto shadow = build_shadow(*task.split);
        target = LinearizationTarget{induced_shadow_map(*task.split, *task.map).s, shadow.shadow, "shadow"};
    }

    const CochainComplex complex = build_complex(task.algebra, task.module);
    const LefschetzReport r = twisted_lefschetz(task.algebra, task.module, *task.map, task.xi(), target);
    if (o.as_json) {
        emit(out, json::lefschetz_report(r, complex.dims));
    } else {
        out << "betti:          " << join(r.betti) << '\n';
        out << "traces:         " << join(r.traces) << '\n';
        out << "lefschetz:      " << r.lefschetz_cohomology << '\n';
        out << "hopf trace:     " << r.hopf_trace << '\n';
        out << "det(I - A):     " << r.linearization << "  (A from " << r.linearization_source << ")\n";
        out << "agree:          " << (r.agree ? "yes" : "no");
        if (!r.agree)
            out << (r.disagreement_possible ? " (possible for twisted coefficients or non-nilpotent algebras)"
                                            : " (unexpected)");
        out << '\n';
        if (r.first_divergent_degree) out << "first divergent degree: " << *r.first_divergent_degree << '\n';
    }
    return r.agree ? kSuccess : kVerdictFalse;
}

int cmd_shadow(const Options& o, std::ostream& out, std::ostream& err)
{
    const Catalog catalog = Catalog::load_default();
    const Task task = load_task_file(o.file, catalog);
    if (!task.split) throw InputError("/split: the shadow command needs a split presentation");
    validate_task(task);

    if (!task.map) {
        const ShadowResult shadow = build_shadow(*task.split);
        if (o.as_json) {
            emit(out, {{"shadow", json::to_json(shadow.shadow)}, {"shadow_nilpotent", is_nilpotent(shadow.shadow)}});
        } else {
            out << "shadow brackets:\n";
            for (const auto& [pair, value] : shadow.shadow.brackets()) {
                Vector v(shadow.shadow.dim());
                for (const auto& [k, c] : value) v[k] = c;
                out << "  [" << pair.first << "," << pair.second << "] = " << format_vector(v) << '\n';
            }
        }
        return kSuccess;
    }

    const ShadowLinearization result = verify_shadow_linearization(*task.split, *task.map);
    if (o.as_json) {
        emit(out, json::shadow_report(result));
    } else {
        out << "shadow nilpotent: " << (is_nilpotent(result.shadow.shadow) ? "yes" : "no") << '\n';
        out << "S:                " << result.map.s << '\n';
        out << "S shadow morphism: " << (result.map.shadow_morphism ? "yes" : "no") << '\n';
        out << "det(I - S):       " << result.map.det_shadow << '\n';
        out << "det(I - T):       " << result.map.det_original << '\n';
        if (result.shadow_lefschetz)
            out << "shadow lefschetz: " << result.shadow_lefschetz->lefschetz_cohomology << '\n';
        out << "verified:         " << (result.verified ? "yes" : "no") << '\n';
    }
    if (!result.map.shadow_morphism) {
        err << "error: T does not induce a morphism of the shadow: " << result.map.shadow_violation->describe() << '\n';
        return kInvalidInput;
    }
    return result.verified ? kSuccess : kVerdictFalse;
}

int cmd_torus(const Options& o, std::ostream& out)
{
    const TorusMap t(parse_matrix_literal(o.matrix));
    const TorusCrossCheck check = cross_check_with_ce(t);
    if (o.as_json) {
        emit(out, json::torus_report(check));
    } else {
        const auto& fp = check.fixed_points;
        out << "fixed points:   " << fp.count << '\n';
        out << "index each:     " << (fp.index_each > 0 ? "+1" : "-1") << '\n';
        out << "lefschetz:      " << fp.lefschetz << '\n';
        out << "ce lefschetz:   " << check.ce.lefschetz_cohomology << '\n';
        out << "cross-check:    " << (check.pass ? "pass" : "FAIL") << '\n';
    }
    return check.pass ? kSuccess : kInternalFailure;
}

int cmd_catalog(const std::string& action, const Options& o, std::ostream& out, std::ostream& err)
{
    const Catalog catalog = Catalog::load_default();
    if (action == "list") {
        for (const auto& n : catalog.names()) out << n << '\n';
        return kSuccess;
    }
    if (action == "export") {
        emit(out, to_json(catalog.get(o.name)));
        return kSuccess;
    }
    if (action == "show") {
        const auto& e = catalog.get(o.name);
        out << e.name << ": dim " << e.algebra.dim() << ", "
            << (is_nilpotent(e.algebra) ? "nilpotent" : is_solvable(e.algebra) ? "solvable" : "not solvable") << '\n';
        out << "  basis: ";
        for (const auto& l : e.algebra.labels()) out << l << ' ';
        out << '\n';
        for (const auto& [pair, value] : e.algebra.brackets()) {
            Vector v(e.algebra.dim());
            for (const auto& [k, c] : value) v[k] = c;
            out << "  [" << pair.first << "," << pair.second << "] = " << format_vector(v) << '\n';
        }
        if (e.grading) {
            out << "  grading:";
            for (auto w : *e.grading) out << ' ' << w;
            out << '\n';
        }
        if (e.split) out << "  split: ideal {" << join(e.split->nil_ideal) << "}, complement {" << join(e.split->complement) << "}\n";
        for (const auto& m : e.morphisms) out << "  morphism " << m.name << ": " << m.matrix << '\n';
        if (!e.notes.empty()) out << "  " << e.notes << '\n';
        return kSuccess;
    }
    // selftest
    const auto failures = selftest(catalog);
    for (const auto& n : catalog.names()) {
        bool ok = true;
        for (const auto& f : failures)
            if (f.rfind(n + ":", 0) == 0) ok = false;
        out << (ok ? "ok    " : "FAIL  ") << n << '\n';
    }
    for (const auto& f : failures) err << f << '\n';
    return failures.empty() ? kSuccess : kInvalidInput;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Lefschetz numbers and linearization checks for nilpotent and solvable Lie algebras", "linlef"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Run every validator on a task document");
    check->add_option("file", o.file, "Task JSON")->required();

    auto* coh = app.add_subcommand("cohomology", "Betti numbers and induced maps on cohomology");
    coh->add_option("file", o.file, "Task JSON")->required();
    coh->add_option("--module", o.module_file, "Representation JSON overriding the task's module");
    coh->add_flag("--json", o.as_json, "Machine-readable output");
    coh->add_flag("--verbose", o.verbose, "Print representative cocycles");

    auto* lef = app.add_subcommand("lefschetz", "Twisted Lefschetz number versus det(I - A)");
    lef->add_option("file", o.file, "Task JSON")->required();
    lef->add_flag("--json", o.as_json, "Machine-readable output");
    lef->add_option("--a-matrix", o.a_matrix, "Which matrix is A")->check(CLI::IsMember({"map", "shadow"}));

    auto* sh = app.add_subcommand("shadow", "Nilshadow, induced map S and the det(I - S) check");
    sh->add_option("file", o.file, "Task JSON")->required();
    sh->add_flag("--json", o.as_json, "Machine-readable output");

    auto* tor = app.add_subcommand("torus", "Fixed points of a linear torus map");
    tor->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','")->required();
    tor->add_flag("--json", o.as_json, "Machine-readable output");

    auto* cat = app.add_subcommand("catalog", "Built-in example algebras");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "List entry names");
    cat->add_subcommand("show", "Describe an entry")->add_option("name", o.name)->required();
    cat->add_subcommand("export", "Print an entry as JSON")->add_option("name", o.name)->required();
    cat->add_subcommand("selftest", "Validate every entry");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (coh->parsed()) return cmd_cohomology(o, out);
        if (lef->parsed()) return cmd_lefschetz(o, out);
        if (sh->parsed()) return cmd_shadow(o, out, err);
        if (tor->parsed()) return cmd_torus(o, out);
        if (cat->parsed()) {
            for (const auto* sub : cat->get_subcommands())
                return cmd_catalog(sub->get_name(), o, out, err);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InternalError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kInternalFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalFailure;
    }
    return kInvalidInput;
}

} // namespace linlef::cli
