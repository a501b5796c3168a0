#include "toricsec/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "toricsec/errors.hpp"
#include "toricsec/io.hpp"
#include "toricsec/selftest.hpp"

namespace fs = std::filesystem;

namespace toricsec {

namespace {

struct Options
{
    std::string input;
    std::string format = "json";
    bool debug_all_vertices = false;
    bool monomials = false;
    std::string batch;
    std::string out_dir;
    unsigned jobs = 0;

    // catalog
    std::string family;
    std::optional<long> n, k, r;
    std::vector<long> d, dims;
    std::string output;
};

struct Outcome
{
    int code = exit_ok;
    Json body;
    std::string error;
};

LatticePolytope as_polytope(const CatalogObject& obj)
{
    if (const auto* p = std::get_if<LatticePolytope>(&obj))
        return *p;
    return LatticePolytope::from_points(std::get<PointConfiguration>(obj));
}

PointConfiguration as_points(const CatalogObject& obj)
{
    if (const auto* a = std::get_if<PointConfiguration>(&obj))
        return *a;
    const auto& p = std::get<LatticePolytope>(obj);
    std::vector<IntVec> verts;
    for (const auto& v : p.vertices())
        verts.push_back(ambient_point(p, v));
    return PointConfiguration(verts);
}

template <class F>
Outcome guarded(F&& f)
{
    Outcome o;
    try {
        f(o);
    } catch (const InputError& e) {
        o = {exit_input, nullptr, e.what()};
    } catch (const NotSmoothError& e) {
        o = {exit_not_smooth, nullptr, e.what()};
    } catch (const HypothesisError& e) {
        o = {exit_hypothesis, nullptr, e.what()};
    } catch (const ConsistencyError& e) {
        o = {exit_consistency, nullptr, e.what()};
    } catch (const std::invalid_argument& e) {
        o = {exit_input, nullptr, e.what()};
    } catch (const std::exception& e) {
        o = {exit_failure, nullptr, e.what()};
    }
    return o;
}

Outcome analyze_object(const CatalogObject& obj, const Options& opt)
{
    return guarded([&](Outcome& o) {
        auto report = analyze(as_polytope(obj), AnalyzeOptions{opt.debug_all_vertices});
        o.body = to_json(report);
        if (!report.consistent()) {
            o.code = exit_consistency;
            o.error = "cross-check failed";
        }
    });
}

Outcome dispatch(const std::string& verb, const Options& opt)
{
    return guarded([&](Outcome& o) {
        if (verb == "catalog") {
            FamilySpec spec;
            if (opt.family.find(':') != std::string::npos)
                spec = parse_family_spec(opt.family);
            else
                spec.family = opt.family;
            if (opt.n)
                spec.params["n"] = {*opt.n};
            if (!opt.dims.empty())
                spec.params["n"] = opt.dims;
            if (opt.k)
                spec.params["k"] = {*opt.k};
            if (opt.r)
                spec.params["r"] = {*opt.r};
            if (!opt.d.empty())
                spec.params["d"] = opt.d;
            o.body = catalog_json(make_family(spec));
            return;
        }
        if (verb == "selftest") {
            Json cases = Json::array();
            bool all = true;
            for (const auto& t : run_selftest()) {
                cases.push_back(Json{{"name", t.name}, {"passed", t.passed}, {"detail", t.detail}});
                all = all && t.passed;
            }
            o.body = Json{{"schema", schema_version}, {"passed", all}, {"cases", cases}};
            if (!all) {
                o.code = exit_consistency;
                o.error = "selftest failed";
            }
            return;
        }

        const auto obj = read_input(opt.input);
        if (verb == "analyze") {
            o = analyze_object(obj, opt);
        } else if (verb == "classify") {
            o.body = to_json(classify(as_polytope(obj), ClassifyOptions{opt.debug_all_vertices}));
            o.body["schema"] = schema_version;
        } else if (verb == "points") {
            o.body = lattice_points_json(as_polytope(obj));
        } else if (verb == "volume") {
            auto p = as_polytope(obj);
            o.body = Json{{"schema", schema_version},
                          {"n", p.dim()},
                          {"volume", integer_json(normalized_volume(p))},
                          {"stats", to_json(stats(p))}};
        } else if (verb == "chow") {
            o.body = chow_json(as_polytope(obj), opt.monomials);
        } else if (verb == "subset") {
            auto report = analyze_points(as_points(obj), AnalyzeOptions{opt.debug_all_vertices});
            o.body = to_json(report);
            if (!report.consistent()) {
                o.code = exit_consistency;
                o.error = "cross-check failed";
            } else if (!report.hypothesis_ok) {
                o.code = exit_hypothesis;
                o.error = "A is missing a vertex or a neighbor of a vertex of conv(A)";
            }
        }
    });
}

void write_atomically(const fs::path& target, const std::string& text)
{
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot write " + tmp.string());
        f << text;
        if (!f.flush())
            throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string report_name(const fs::path& input)
{
    return input.stem().string() + ".report.json";
}

bool is_batch_input(const fs::path& p)
{
    const std::string name = p.filename().string();
    auto ends_with = [&](const std::string& suffix) {
        return name.size() >= suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    return ends_with(".json") && !ends_with(".report.json");
}

Outcome run_batch(const Options& opt)
{
    const fs::path dir = opt.batch;
    if (!fs::is_directory(dir))
        return {exit_input, nullptr, "not a directory: " + opt.batch};
    const fs::path out_dir = opt.out_dir.empty() ? dir : fs::path(opt.out_dir);
    fs::create_directories(out_dir);

    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && is_batch_input(entry.path()))
            inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());

    std::vector<Outcome> results(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) {
            results[i] = guarded([&](Outcome& o) {
                o = analyze_object(read_input(inputs[i].string()), opt);
                if (!o.body.is_null())
                    write_atomically(out_dir / report_name(inputs[i]), dump(o.body));
            });
        }
    };
    unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(inputs.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    Outcome summary;
    Json rows = Json::array();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto& r = results[i];
        Json row{{"input", inputs[i].filename().string()}, {"exit", r.code}};
        row["output"] = r.body.is_null() ? Json(nullptr) : Json(report_name(inputs[i]));
        row["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
        row["deg_sec"] = r.body.is_null() ? Json(nullptr) : r.body["deg_sec"];
        row["dim_sec"] = r.body.is_null() ? Json(nullptr) : r.body["dim_sec"];
        rows.push_back(row);
        summary.code = std::max(summary.code, r.code);
    }
    summary.body = Json{{"schema", schema_version}, {"results", rows}};
    return summary;
}

void add_common(CLI::App* sub, Options& opt, bool needs_input)
{
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    if (needs_input)
        sub->add_option("input", opt.input, "Polytope or points JSON file, or a family spec")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Secant varieties of smooth projective toric varieties", "toricsec"};
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand("analyze", "Dimension and degree of the secant variety");
    add_common(analyze_cmd, opt, false);
    analyze_cmd->add_option("input", opt.input, "Polytope or points JSON file, or a family spec");
    analyze_cmd->add_option("--batch", opt.batch, "Analyze every *.json file in a directory");
    analyze_cmd->add_option("--out", opt.out_dir, "Directory for batch reports (default: the batch directory)");
    analyze_cmd->add_option("--jobs", opt.jobs, "Worker threads for batch mode");
    analyze_cmd->add_flag("--debug-all-vertices", opt.debug_all_vertices, "Cross-check classification at every vertex");

    auto* classify_cmd = app.add_subcommand("classify", "Family of a smooth polytope");
    add_common(classify_cmd, opt, true);
    classify_cmd->add_flag("--debug-all-vertices", opt.debug_all_vertices, "Cross-check classification at every vertex");

    add_common(app.add_subcommand("points", "Lattice points"), opt, true);
    add_common(app.add_subcommand("volume", "Normalized volume and lattice statistics"), opt, true);

    auto* chow_cmd = app.add_subcommand("chow", "Chern numbers and the double point right-hand side");
    add_common(chow_cmd, opt, true);
    chow_cmd->add_flag("--monomials", opt.monomials, "Dump every nonzero intersection number of boundary divisors");

    auto* subset_cmd = app.add_subcommand("subset", "Secant variety of a point configuration");
    add_common(subset_cmd, opt, true);
    subset_cmd->add_flag("--debug-all-vertices", opt.debug_all_vertices, "Cross-check classification at every vertex");

    auto* catalog_cmd = app.add_subcommand("catalog", "Write a named family as JSON");
    add_common(catalog_cmd, opt, false);
    catalog_cmd->add_option("family", opt.family,
                            "simplex, truncated, product, scroll, scroll-points, hexagon, hexagon-outer, cube")
        ->required();
    catalog_cmd->add_option("--n", opt.n, "Dimension");
    catalog_cmd->add_option("--k", opt.k, "Truncation parameter");
    catalog_cmd->add_option("--r", opt.r, "Dilation");
    catalog_cmd->add_option("--d", opt.d, "Dilations or scroll degrees")->delimiter(',');
    catalog_cmd->add_option("--dims", opt.dims, "Factor dimensions of a product")->delimiter(',');
    catalog_cmd->add_option("-o,--output", opt.output, "Write to a file instead of stdout");

    add_common(app.add_subcommand("selftest", "Run the built-in worked examples"), opt, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    Outcome o;
    if (verb == "analyze" && !opt.batch.empty()) {
        if (!opt.input.empty()) {
            err << "error: give either an input or --batch, not both\n";
            return exit_input;
        }
        o = guarded([&](Outcome& r) { r = run_batch(opt); });
    } else if (verb == "analyze" && opt.input.empty()) {
        err << "error: analyze needs an input or --batch\n";
        return exit_input;
    } else {
        o = dispatch(verb, opt);
    }

    if (!o.body.is_null()) {
        const std::string text = opt.format == "table" ? render_table(o.body) : dump(o.body);
        if (verb == "catalog" && !opt.output.empty()) {
            try {
                write_atomically(opt.output, text);
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return exit_failure;
            }
        } else {
            out << text;
        }
    }
    if (!o.error.empty())
        err << "error: " << o.error << "\n";
    return o.code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace toricsec
