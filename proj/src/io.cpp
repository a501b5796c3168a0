#include "toricsec/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "toricsec/errors.hpp"

namespace toricsec {

namespace {

const Integer json_int_limit = Integer(1) << 53;

Json optional_json(const std::optional<Integer>& x)
{
    return x ? integer_json(*x) : Json(nullptr);
}

std::vector<IntVec> coordinate_list(const Json& j, const std::string& key)
{
    if (!j.is_array() || j.empty())
        throw InputError("\"" + key + "\" must be a nonempty array of points");
    std::vector<IntVec> out;
    out.reserve(j.size());
    std::size_t dim = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.empty())
            throw InputError("point " + std::to_string(i) + " must be a nonempty array of integers");
        if (i == 0)
            dim = row.size();
        else if (row.size() != dim)
            throw InputError("point " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " coordinates, expected " + std::to_string(dim));
        IntVec v;
        v.reserve(dim);
        for (const auto& c : row)
            v.push_back(integer_from_json(c));
        out.push_back(std::move(v));
    }
    return out;
}

std::string scalar_text(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    return j.dump();
}

std::string inline_text(const Json& e)
{
    if (!e.is_array())
        return scalar_text(e);
    std::string t;
    for (const auto& x : e)
        t += (t.empty() ? "" : ",") + inline_text(x);
    return "(" + t + ")";
}

bool is_scalar_array(const Json& j)
{
    return std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_object(); });
}

bool is_flat(const Json& j)
{
    return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows)
{
    if (j.is_object()) {
        if (j.empty())
            rows.emplace_back(prefix, "{}");
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array() && !is_scalar_array(j)) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else if (j.is_array()) {
        std::string s;
        for (const auto& e : j) {
            if (!s.empty())
                s += ' ';
            s += inline_text(e);
        }
        rows.emplace_back(prefix, s.empty() ? "-" : s);
    } else {
        rows.emplace_back(prefix, j.is_null() ? "-" : scalar_text(j));
    }
}

// Indented like dump(2), except that arrays without objects or nested
// arrays of arrays stay on one line.
void write_json(const Json& j, int indent, std::string& out)
{
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            out += first ? "" : ",\n";
            first = false;
            out += pad + Json(k).dump() + ": ";
            write_json(v, indent + 2, out);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += i ? ",\n" : "";
            out += pad;
            write_json(j[i], indent + 2, out);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else {
        out += j.dump(-1, ' ', false);
    }
}

}  // namespace

Json integer_json(const Integer& x)
{
    if (abs(x) <= json_int_limit)
        return Json(x.convert_to<long long>());
    return Json(x.str());
}

Json rational_json(const Rational& x)
{
    if (denominator(x) == 1)
        return integer_json(Integer(numerator(x)));
    return Json(x.str());
}

Json vector_json(const IntVec& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(integer_json(x));
    return out;
}

Json point_list_json(std::span<const IntVec> points)
{
    Json out = Json::array();
    for (const auto& p : points)
        out.push_back(vector_json(p));
    return out;
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return Integer(j.get<unsigned long long>());
        return Integer(j.get<long long>());
    }
    if (j.is_string()) {
        static const std::regex decimal("-?[0-9]+");
        const auto& s = j.get_ref<const std::string&>();
        if (std::regex_match(s, decimal))
            return Integer(s);
        throw InputError("coordinate \"" + s + "\" is not a decimal integer");
    }
    throw InputError("non-integer coordinate " + j.dump());
}

IntVec ambient_point(const LatticePolytope& p, const IntVec& x)
{
    return p.embedding() ? p.embedding()->to_ambient(x) : x;
}

Json polytope_json(const LatticePolytope& p)
{
    std::vector<IntVec> verts;
    for (const auto& v : p.vertices())
        verts.push_back(ambient_point(p, v));
    std::sort(verts.begin(), verts.end());
    return Json{{"schema", schema_version}, {"vertices", point_list_json(verts)}};
}

Json points_json(const PointConfiguration& a)
{
    return Json{{"schema", schema_version}, {"points", point_list_json(a.points())}};
}

Json catalog_json(const CatalogObject& obj)
{
    if (const auto* p = std::get_if<LatticePolytope>(&obj))
        return polytope_json(*p);
    return points_json(std::get<PointConfiguration>(obj));
}

Json lattice_points_json(const LatticePolytope& p)
{
    std::vector<IntVec> pts;
    for (const auto& x : lattice_points(p))
        pts.push_back(ambient_point(p, x));
    std::sort(pts.begin(), pts.end());
    return Json{{"schema", schema_version}, {"points", point_list_json(pts)}};
}

Json to_json(const PolytopeStats& s)
{
    return Json{{"volume", integer_json(s.volume)},
                {"boundary_points", integer_json(s.boundary_points)},
                {"vertex_count", integer_json(s.vertex_count)},
                {"edge_points", integer_json(s.edge_points)},
                {"interior_points", integer_json(s.interior_points)},
                {"perimeter", integer_json(s.perimeter)},
                {"surface_area", integer_json(s.surface_area)},
                {"lattice_points", integer_json(s.lattice_points)}};
}

Json to_json(const FamilyLabel& label)
{
    Json out{{"family", family_name(label.family)}, {"n", label.n}, {"label", to_string(label)}};
    if (label.family == Family::TruncatedDoubledSimplex)
        out["k"] = label.k;
    if (label.family == Family::ProductOfSimplices)
        out["l"] = label.l;
    if (label.witness) {
        Json rows = Json::array();
        const auto& m = label.witness->linear();
        for (std::size_t i = 0; i < m.rows(); ++i)
            rows.push_back(vector_json(m.row(i)));
        out["witness"] = Json{{"linear", rows}, {"translation", vector_json(label.witness->translation())}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json to_json(const CrossCheck& check)
{
    Json values = Json::object();
    for (const auto& [k, v] : check.values)
        values[k] = integer_json(v);
    return Json{{"name", check.name}, {"passed", check.passed}, {"informational", check.informational}, {"values", values}};
}

Json to_json(const SecantReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.cross_checks)
        checks.push_back(to_json(c));
    return Json{{"schema", schema_version},
                {"n", report.n},
                {"r", report.r},
                {"family", to_json(report.family)},
                {"dim_sec", report.dim_sec},
                {"expected_dim", report.expected_dim},
                {"has_expected_dim", report.has_expected_dim},
                {"deg_sec", integer_json(report.deg_sec)},
                {"deg_phi", report.deg_phi},
                {"secant_lines", to_string(report.secant_lines)},
                {"rhs", integer_json(report.rhs)},
                {"degree", integer_json(report.degree)},
                {"consistent", report.consistent()},
                {"cross_checks", checks}};
}

Json to_json(const SubsetReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.cross_checks)
        checks.push_back(to_json(c));
    Json out{{"schema", schema_version},
             {"n", report.n},
             {"s", report.s},
             {"hypothesis_ok", report.hypothesis_ok},
             {"missing", point_list_json(report.missing)},
             {"dim_sec", report.dim_sec ? Json(*report.dim_sec) : Json(nullptr)},
             {"deg_divides", optional_json(report.deg_divides)},
             {"deg_sec", optional_json(report.deg_sec)},
             {"expected_dim_ok", report.expected_dim_ok},
             {"exceptional", report.exceptional},
             {"consistent", report.consistent()},
             {"cross_checks", checks}};
    out["constraint"] = report.deg_divides ? Json("divides " + report.deg_divides->str()) : Json(nullptr);
    out["polytope"] = report.polytope ? to_json(*report.polytope) : Json(nullptr);
    if (report.polytope)
        out["polytope"].erase("schema");
    return out;
}

Json chow_json(const LatticePolytope& p, bool monomials)
{
    auto x = toric_variety(p);
    const auto& ring = x.ring;
    const unsigned n = static_cast<unsigned>(ring.dim());
    Json names = Json::object();
    for (const auto& [k, v] : intersection_numbers(x))
        names[k] = rational_json(v);
    Json out{{"schema", schema_version},
             {"n", n},
             {"c1^n", rational_json(ring.integrate(ring.power(ring.chern_class(1), n)))},
             {"rhs", integer_json(secant_rhs(x))},
             {"todd", rational_json(ring.integrate(ring.todd()))},
             {"todd_count", integer_json(riemann_roch_count(x))},
             {"euler", rational_json(ring.integrate(ring.chern_class(n)))},
             {"degree", integer_json(degree_of_embedding(x))},
             {"intersection_numbers", names}};
    if (monomials) {
        Json table = Json::object();
        for (const auto& [m, v] : monomial_table(ring))
            table[to_string(m)] = rational_json(v);
        out["monomials"] = table;
    }
    return out;
}

CatalogObject parse_input(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InputError("expected a JSON object with \"vertices\" or \"points\"");
    for (const auto& [k, v] : j.items())
        if (k != "schema" && k != "vertices" && k != "points")
            throw InputError("unknown field \"" + k + "\"");
    if (j.contains("schema") && !(j["schema"].is_number_integer() && j["schema"].get<long long>() == schema_version))
        throw InputError("unsupported schema " + j["schema"].dump() + ", expected 1");
    const bool has_v = j.contains("vertices");
    const bool has_p = j.contains("points");
    if (has_v == has_p)
        throw InputError("exactly one of \"vertices\" and \"points\" is required");
    try {
        if (has_v) {
            auto verts = coordinate_list(j["vertices"], "vertices");
            return LatticePolytope::from_vertices(verts);
        }
        return PointConfiguration(coordinate_list(j["points"], "points"));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

CatalogObject read_input(const std::string& path_or_spec)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(path_or_spec, ec)) {
        std::ifstream in(path_or_spec, std::ios::binary);
        if (!in)
            throw InputError("cannot read " + path_or_spec);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_input(ss.str());
    }
    try {
        return make_family(parse_family_spec(path_or_spec));
    } catch (const std::invalid_argument& e) {
        throw InputError("\"" + path_or_spec + "\" is neither a readable file nor a family spec (" + e.what() + ")");
    }
}

std::string dump(const Json& j)
{
    std::string out;
    write_json(j, 0, out);
    return out + "\n";
}

std::string render_table(const Json& j)
{
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t width = 0;
    for (const auto& [k, v] : rows)
        width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : rows) {
        out += k;
        out.append(width - k.size() + 2, ' ');
        out += v;
        out += '\n';
    }
    return out;
}

}  // namespace toricsec
