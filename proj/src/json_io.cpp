#include "linlef/json_io.hpp"

#include "linlef/errors.hpp"


namespace linlef::json {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw InputError((path.empty() ? std::string("/") : path) + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& path)
{
    if (!j.is_object()) fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing key '") + key + "'");
    return *it;
}

std::size_t parse_index(const json& j, const std::string& path)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<std::size_t> parse_index_list(const json& j, const std::string& path)
{
    if (!j.is_array()) fail(path, "expected an array of indices");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_index(j[i], path + "/" + std::to_string(i)));
    return out;
}

// Re-throws an InputError from a constructor with the document path attached.
template <typename F>
auto at_path(const std::string& path, F&& make)
{
    try {
        return make();
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

} // namespace

Rational parse_rational(const json& j, const std::string& path)
{
    if (j.is_string()) return at_path(path, [&] { return Rational::parse(j.get<std::string>()); });
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail(path, "expected a rational string such as \"-3/2\"");
}

json to_json(const Rational& r)
{
    return r.str();
}

Matrix parse_matrix(const json& j, const std::string& path)
{
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) fail(path + "/0", "expected a row array");
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = path + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols) fail(rp, "expected a row of length " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_rational(j[r][c], rp + "/" + std::to_string(c));
    }
    return m;
}

json to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Vector& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

LieAlgebra parse_algebra(const json& j, const std::string& path)
{
    const std::size_t dim = parse_index(member(j, "dim", path), path + "/dim");
    if (dim == 0) fail(path + "/dim", "Lie algebra must have dimension >= 1");

    std::vector<std::string> labels;
    if (j.contains("basis")) {
        const json& b = j["basis"];
        if (!b.is_array()) fail(path + "/basis", "expected an array of labels");
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!b[i].is_string()) fail(path + "/basis/" + std::to_string(i), "expected a string label");
            labels.push_back(b[i].get<std::string>());
        }
        if (labels.size() != dim) fail(path + "/basis", "expected " + std::to_string(dim) + " labels");
    } else {
        for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    }

    LieAlgebra::BracketTable table;
    if (j.contains("brackets")) {
        const json& br = j["brackets"];
        const std::string bp = path + "/brackets";
        if (!br.is_array()) fail(bp, "expected an array");
        for (std::size_t e = 0; e < br.size(); ++e) {
            const std::string ep = bp + "/" + std::to_string(e);
            const std::size_t left = parse_index(member(br[e], "left", ep), ep + "/left");
            const std::size_t right = parse_index(member(br[e], "right", ep), ep + "/right");
            if (left >= dim || right >= dim) fail(ep, "bracket index out of range");
            if (left >= right) fail(ep, "left < right required");
            const json& res = member(br[e], "result", ep);
            if (!res.is_object()) fail(ep + "/result", "expected an object mapping index to rational");
            SparseVector v;
            for (const auto& [key, value] : res.items()) {
                const std::string kp = ep + "/result/" + key;
                std::size_t k = 0;
                try {
                    std::size_t used = 0;
                    k = std::stoul(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    fail(kp, "result keys must be basis indices");
                }
                if (k >= dim) fail(kp, "result index out of range");
                v[k] += parse_rational(value, kp);
            }
            if (!table.emplace(std::make_pair(left, right), std::move(v)).second)
                fail(ep, "duplicate bracket entry");
        }
    }
    return at_path(path, [&] { return LieAlgebra(dim, std::move(labels), std::move(table)); });
}

json to_json(const LieAlgebra& algebra)
{
    json brackets = json::array();
    for (const auto& [pair, value] : algebra.brackets()) {
        json result = json::object();
        for (const auto& [k, c] : value) result[std::to_string(k)] = c.str();
        brackets.push_back({{"left", pair.first}, {"right", pair.second}, {"result", result}});
    }
    return {{"dim", algebra.dim()}, {"basis", algebra.labels()}, {"brackets", brackets}};
}

LieMorphism parse_endomorphism(const json& j, const LieAlgebra& algebra, const std::string& path)
{
    Matrix m = parse_matrix(member(j, "matrix", path), path + "/matrix");
    if (m.rows() != algebra.dim() || m.cols() != algebra.dim())
        fail(path + "/matrix", "expected a " + std::to_string(algebra.dim()) + "x" + std::to_string(algebra.dim()) +
                                   " matrix");
    return LieMorphism::endomorphism(algebra, std::move(m));
}

Representation parse_representation(const json& j, const LieAlgebra& algebra, const std::string& path)
{
    const std::size_t dim = parse_index(member(j, "dim", path), path + "/dim");
    if (dim == 0) fail(path + "/dim", "module dimension must be >= 1");
    const json& acts = member(j, "actions", path);
    if (!acts.is_array() || acts.size() != algebra.dim())
        fail(path + "/actions", "expected " + std::to_string(algebra.dim()) + " action matrices");
    std::vector<Matrix> actions;
    for (std::size_t i = 0; i < acts.size(); ++i) {
        const std::string ap = path + "/actions/" + std::to_string(i);
        Matrix m = parse_matrix(acts[i], ap);
        if (m.rows() != dim || m.cols() != dim) fail(ap, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
        actions.push_back(std::move(m));
    }
    return at_path(path, [&] { return Representation(algebra, dim, std::move(actions)); });
}

json to_json(const Representation& v)
{
    json acts = json::array();
    for (const auto& a : v.actions) acts.push_back(to_json(a));
    return {{"dim", v.dim}, {"actions", acts}};
}

SplitPresentation parse_split(const json& j, const LieAlgebra& algebra, const std::string& path)
{
    LieAlgebra g = algebra;
    if (j.contains("algebra")) {
        g = parse_algebra(j["algebra"], path + "/algebra");
        if (!(g == algebra)) fail(path + "/algebra", "split algebra differs from the task algebra");
    }
    return SplitPresentation{g, parse_index_list(member(j, "nil_ideal", path), path + "/nil_ideal"),
                             parse_index_list(member(j, "complement", path), path + "/complement")};
}

json to_json(const SplitPresentation& split)
{
    return {{"algebra", to_json(split.algebra)}, {"nil_ideal", split.nil_ideal}, {"complement", split.complement}};
}

json cohomology_report(const std::vector<std::size_t>& betti, const std::vector<std::size_t>& dims,
                       const std::vector<Matrix>* maps)
{
    json out = {{"betti", betti}, {"dims", dims}};
    if (maps) {
        json m = json::object();
        for (std::size_t p = 0; p < maps->size(); ++p) m[std::to_string(p)] = to_json((*maps)[p]);
        out["maps"] = m;
    }
    return out;
}

json lefschetz_report(const LefschetzReport& r, const std::vector<std::size_t>& dims)
{
    json out = cohomology_report(r.betti, dims, &r.cohomology_maps);
    json traces = json::array();
    for (const auto& t : r.traces) traces.push_back(t.str());
    out["traces"] = traces;
    out["lefschetz"] = r.lefschetz_cohomology.str();
    out["hopf"] = r.hopf_trace.str();
    out["det_i_minus_a"] = r.linearization.str();
    out["a_source"] = r.linearization_source;
    out["agree"] = r.agree;
    out["disagreement_possible"] = r.disagreement_possible;
    if (r.first_divergent_degree) out["first_divergent_degree"] = *r.first_divergent_degree;
    return out;
}

json shadow_report(const ShadowLinearization& result)
{
    json parts = json::array();
    for (const auto& s : result.shadow.semisimple_parts) parts.push_back(to_json(s));
    json out = {
        {"shadow", to_json(result.shadow.shadow)},
        {"shadow_nilpotent", is_nilpotent(result.shadow.shadow)},
        {"semisimple_parts", parts},
        {"s", to_json(result.map.s)},
        {"shadow_morphism", result.map.shadow_morphism},
        {"det_i_minus_s", result.map.det_shadow.str()},
        {"det_i_minus_t", result.map.det_original.str()},
        {"verified", result.verified},
    };
    if (result.map.shadow_violation) out["shadow_violation"] = result.map.shadow_violation->describe();
    if (result.shadow_lefschetz) {
        out["shadow_lefschetz"] = result.shadow_lefschetz->lefschetz_cohomology.str();
        out["shadow_betti"] = result.shadow_lefschetz->betti;
        json traces = json::array();
        for (const auto& t : result.shadow_lefschetz->traces) traces.push_back(t.str());
        out["shadow_traces"] = traces;
    }
    return out;
}

json torus_report(const TorusCrossCheck& check)
{
    const auto& fp = check.fixed_points;
    return {
        {"nondegenerate", fp.nondegenerate},
        {"count", fp.count},
        {"count_by_determinant", fp.count_by_determinant},
        {"count_by_enumeration", fp.count_by_enumeration},
        {"index_each", fp.index_each},
        {"lefschetz", fp.lefschetz.str()},
        {"ce_lefschetz", check.ce.lefschetz_cohomology.str()},
        {"pass", check.pass},
    };
}

} // namespace linlef::json
