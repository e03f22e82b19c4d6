#include "geoseries/cli.hpp"

#include "geoseries/construction.hpp"
#include "geoseries/feasibility.hpp"
#include "geoseries/geometry.hpp"
#include "geoseries/render_svg.hpp"
#include "geoseries/scene_json.hpp"
#include "geoseries/series.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace geoseries::cli {

using nlohmann::json;

namespace {

// Thrown for bad input that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const
    {
        std::vector<std::size_t> widths(rows_.front().size(), 0);
        for (const auto& row : rows_)
            for (std::size_t i = 0; i < row.size(); ++i)
                widths[i] = std::max(widths[i], row[i].size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::string line;
            for (std::size_t i = 0; i < rows_[r].size(); ++i) {
                if (i)
                    line += "  ";
                line += rows_[r][i];
                if (i + 1 < rows_[r].size())
                    line.append(widths[i] - rows_[r][i].size(), ' ');
            }
            os << line << '\n';
            if (r == 0) {
                std::size_t total = 0;
                for (auto w : widths)
                    total += w;
                os << std::string(total + 2 * (widths.size() - 1), '-') << '\n';
            }
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

const char* yes_no(bool v)
{
    return v ? "yes" : "no";
}

Rational parse_rational_option(const std::string& text, const char* flag)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::string join(const std::vector<std::string>& parts, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

// ---------------------------------------------------------------- feasible

json feasibility_json(const FeasibilityReport& r)
{
    json row{{"m", r.candidate_m},
             {"r", r.r.str()},
             {"passes_integrality", r.passes_integrality},
             {"n", r.derived_n ? json(*r.derived_n) : json(nullptr)},
             {"a", r.derived_a ? json(*r.derived_a) : json(nullptr)},
             {"passes_square_constraint", r.passes_square_constraint},
             {"passes_bound", r.passes_bound},
             {"a_in_range", r.a_in_range},
             {"feasible", r.feasible},
             {"failed", r.failed_constraints()}};
    row["sum"] = r.feasible ? json(Rational(BigInt(*r.derived_a), BigInt(*r.derived_n)).str()) : json(nullptr);
    return row;
}

int cmd_feasible(std::int64_t max_m, const std::string& format, std::ostream& out)
{
    if (max_m < 2)
        throw UsageError("--max-m must be >= 2");
    const auto reports = enumerate_feasible(max_m);

    std::vector<std::int64_t> feasible;
    for (const auto& r : reports)
        if (r.feasible)
            feasible.push_back(r.candidate_m);

    if (format == "json") {
        json rows = json::array();
        for (const auto& r : reports)
            rows.push_back(feasibility_json(r));
        out << json{{"schema", json_schema_version},
                    {"command", "feasible"},
                    {"max_m", max_m},
                    {"candidates", std::move(rows)},
                    {"feasible_m", feasible}}
                   .dump(2)
            << '\n';
        return exit_ok;
    }

    TextTable table({"m", "r", "2/r int", "n", "a", "square", "bound", "a<n", "feasible", "sum", "failed"});
    for (const auto& r : reports) {
        auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
        auto failed = r.failed_constraints();
        table.add({std::to_string(r.candidate_m), r.r.str(), yes_no(r.passes_integrality), opt(r.derived_n),
                   opt(r.derived_a), yes_no(r.passes_square_constraint), yes_no(r.passes_bound),
                   yes_no(r.a_in_range), yes_no(r.feasible),
                   r.feasible ? Rational(BigInt(*r.derived_a), BigInt(*r.derived_n)).str() : "-",
                   failed.empty() ? "-" : join(failed, ",")});
    }
    table.print(out);
    std::vector<std::string> names;
    for (auto m : feasible)
        names.push_back("m=" + std::to_string(m));
    out << "feasible: " << (names.empty() ? "none" : join(names, ", ")) << " of " << reports.size()
        << " candidates\n";
    return exit_ok;
}

// ------------------------------------------------------------------- table

int cmd_table(const std::string& ratio_text, const std::string& first_text, std::uint64_t terms,
              const std::string& format, std::ostream& out)
{
    const Rational ratio = parse_rational_option(ratio_text, "--ratio");
    const Rational first = parse_rational_option(first_text, "--first-term");
    if (terms == 0)
        throw UsageError("--terms must be >= 1");
    std::optional<SeriesSpec> spec;
    try {
        spec.emplace(ratio, first, true);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Rational limit = closed_limit(*spec);

    json rows = json::array();
    TextTable table({"terms", "term", "partial_sum", "partial_sum_naive", "limit"});
    for (std::uint64_t j = 1; j <= terms; ++j) {
        const Rational term = spec->term(j - 1);
        const Rational closed = first * partial_sum_closed(ratio, j - 1);
        const Rational naive = first * partial_sum_naive(ratio, j - 1);
        rows.push_back(json{{"terms", j},
                            {"term", term.str()},
                            {"partial_sum", closed.str()},
                            {"partial_sum_naive", naive.str()},
                            {"agree", closed == naive}});
        table.add({std::to_string(j), term.str(), closed.str(), naive.str(), limit.str()});
    }

    if (format == "json") {
        out << json{{"schema", json_schema_version},
                    {"command", "table"},
                    {"ratio", ratio.str()},
                    {"first_term", first.str()},
                    {"limit", limit.str()},
                    {"rows", std::move(rows)}}
                   .dump(2)
            << '\n';
    } else {
        table.print(out);
        out << "limit: " << limit << '\n';
    }
    return exit_ok;
}

// ------------------------------------------------------ scene construction

struct SceneRequest {
    std::string construction;
    std::optional<std::int64_t> m;
    std::optional<std::string> s;
    std::uint32_t layers = 4;
    bool allow_infeasible = false;
};

Scene build_requested_scene(const SceneRequest& req, std::ostream& err)
{
    if (req.layers == 0)
        throw UsageError("--layers must be >= 1");
    if (req.construction == "layered") {
        if (!req.m)
            throw UsageError("--construction layered needs --m");
        if (*req.m < 2 || *req.m > max_candidate_m)
            throw UsageError("--m must lie in [2, " + std::to_string(max_candidate_m) + "]");
        const FeasibilityReport report = assess_candidate(*req.m);
        LayeredParams p = derive_config(*req.m);
        if (!report.feasible) {
            std::string why = "m=" + std::to_string(*req.m) + " admits no layered picture: " + p.str() +
                              " fails " + join(report.failed_constraints(), ",") +
                              "; only m=2 and m=3 are feasible (see `geoseries feasible`)";
            if (!req.allow_infeasible)
                throw UsageError(why);
            p.a = std::min(p.a, p.n);
            err << "warning: " << why << "; drawing with a clamped to " << p.a << '\n';
        }
        return build_layered_scene(p, req.layers);
    }
    if (!req.s)
        throw UsageError("--construction staircase needs --s");
    const Rational s = parse_rational_option(*req.s, "--s");
    try {
        return build_staircase_scene(StaircaseParams(s), req.layers);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// ------------------------------------------------------------------ verify

struct Identity {
    std::string name;
    Rational lhs;
    Rational rhs;
};

std::vector<Identity> identities_for(const Scene& scene, const AuditReport& audit)
{
    std::vector<Identity> ids;
    const std::uint64_t layers = scene.layers_rendered;
    if (const auto* p = std::get_if<LayeredParams>(&scene.params)) {
        Rational sum;
        for (std::uint64_t k = 1; k <= layers; ++k)
            sum += layer_term(*p, k);
        ids.push_back({"sum of layer terms = (a/n)(1-(1-r)^(2L))", sum, colored_area_partial(*p, layers)});
        ids.push_back({"colored area + (a/n)(1-r)^(2L) = a/n",
                       audit.colored_area + colored_limit(*p) * apex_remainder(*p, layers), colored_limit(*p)});
        ids.push_back({"tiled area + apex remainder = 1", audit.tiled_area + apex_remainder(*p, layers), 1});
    } else {
        const auto& q = std::get<StaircaseParams>(scene.params);
        const Rational r = q.r();
        ids.push_back({"sum of layer areas = (1-s^(2L))/(2(1-s))", audit.tiled_area,
                       (Rational(1) - pow(r, layers)) / (Rational(2) * (Rational(1) - q.s()))});
        ids.push_back({"2 * colored area = (1-r^L)/(1-r)", Rational(2) * audit.colored_area,
                       partial_sum_closed(r, layers - 1)});
        ids.push_back({"2 * colored fraction * total area = 1/(1-r)",
                       Rational(2) * staircase_colored_fraction(q) * staircase_total_area(q),
                       Rational(1) / (Rational(1) - r)});
    }
    return ids;
}

json params_json(const Scene& scene)
{
    if (const auto* p = std::get_if<LayeredParams>(&scene.params))
        return json{{"n", p->n}, {"a", p->a}, {"r", p->r.str()}};
    const auto& q = std::get<StaircaseParams>(scene.params);
    return json{{"s", q.s().str()}, {"r", q.r().str()}};
}

int verify_scene(const Scene& scene, const std::string& format, std::ostream& out, std::ostream& err)
{
    const AuditReport audit = audit_scene(scene);
    bool pass = audit.ok();

    std::vector<Identity> identities;
    try {
        identities = identities_for(scene, audit);
    } catch (const std::exception& e) {
        throw UsageError(std::string("scene parameters: ") + e.what());
    }
    json ids = json::array();
    for (const auto& id : identities) {
        pass = pass && id.lhs == id.rhs;
        ids.push_back(json{{"name", id.name}, {"lhs", id.lhs.str()}, {"rhs", id.rhs.str()}, {"holds", id.lhs == id.rhs}});
    }

    json report{{"schema", json_schema_version},
                {"command", "verify"},
                {"construction", to_string(scene.kind)},
                {"params", params_json(scene)},
                {"layers_rendered", scene.layers_rendered},
                {"audit", audit_to_json(audit)},
                {"identities", ids}};
    std::string fraction_formula;
    Rational expected_fraction;
    if (const auto* p = std::get_if<LayeredParams>(&scene.params)) {
        fraction_formula = "a/n";
        expected_fraction = colored_limit(*p);
        report["square_constraint"] = check_square_constraint(*p);
    } else {
        fraction_formula = "1/(1+s)";
        expected_fraction = staircase_colored_fraction(std::get<StaircaseParams>(scene.params));
    }
    report["colored_fraction_formula"] = fraction_formula;
    report["expected_colored_fraction"] = expected_fraction.str();
    report["check"] = pass ? "pass" : "fail";

    if (format == "json") {
        out << report.dump(2) << '\n';
    } else {
        out << audit.params_echo << '\n';
        TextTable table({"layer", "polygons", "colored", "colored_area", "layer_area", "colored_fraction"});
        for (const auto& t : audit.layers) {
            table.add({std::to_string(t.layer), std::to_string(t.polygon_count), std::to_string(t.colored_count),
                       t.colored_area.str(), t.layer_area.str(), t.colored_fraction().str()});
        }
        table.print(out);
        out << "expected colored fraction " << fraction_formula << " = " << expected_fraction << '\n';
        out << "total area " << audit.total_area << ", tiled " << audit.tiled_area << ", colored "
            << audit.colored_area << ", remainder " << audit.remainder << " (expected "
            << audit.expected_remainder << ")\n";
        if (report.contains("square_constraint"))
            out << "square constraint: " << (report["square_constraint"].get<bool>() ? "holds" : "fails") << '\n';
        for (const auto& id : identities)
            out << (id.lhs == id.rhs ? "[ok]   " : "[FAIL] ") << id.name << ": " << id.lhs << " = " << id.rhs
                << '\n';
        for (const auto& m : audit.mismatches)
            out << "[FAIL] " << (m.layer ? "layer " + std::to_string(*m.layer) + " " : std::string()) << m.formula
                << ": expected " << m.expected << ", got " << m.actual << '\n';
        out << "check: " << (pass ? "pass" : "fail") << '\n';
    }

    if (!pass) {
        err << json{{"error", "verification mismatch"},
                    {"mismatches", report["audit"]["mismatches"]},
                    {"identities", ids}}
                   .dump()
            << '\n';
        return exit_mismatch;
    }
    return exit_ok;
}

Scene load_scene(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open scene file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("scene file '" + path + "' is not valid JSON: " + e.what());
    }
    try {
        return scene_from_json(doc);
    } catch (const std::exception& e) {
        throw UsageError("scene file '" + path + "': " + e.what());
    }
}

// ------------------------------------------------------------------ render

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot write '" + path.string() + "'");
    os << text;
    if (!os)
        throw IoError("failed writing '" + path.string() + "'");
}

int cmd_render(const Scene& scene, const RenderOptions& options, const std::string& out_path, bool emit_scene,
               std::ostream& out)
{
    try {
        options.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string svg = render(scene, options);
    std::filesystem::path path(out_path);
    write_file(path, svg);
    out << "wrote " << path.string() << " (" << scene.polygons.size() - 1 << " tiles, " << scene.colored_count()
        << " colored)\n";
    if (emit_scene) {
        std::filesystem::path scene_path = path;
        scene_path.replace_extension(".json");
        if (scene_path == path)
            throw UsageError("--emit-scene would overwrite the SVG output; give --out a non-.json extension");
        write_file(scene_path, scene_to_json(scene).dump(2) + "\n");
        out << "wrote " << scene_path.string() << '\n';
    }
    return exit_ok;
}

void add_scene_options(CLI::App* cmd, SceneRequest& req, bool construction_required)
{
    auto* construction = cmd->add_option("--construction", req.construction, "layered or staircase")
                             ->check(CLI::IsMember({"layered", "staircase"}));
    if (construction_required)
        construction->required();
    auto* m = cmd->add_option("--m", req.m, "layer ratio r = 1/m (layered)");
    auto* s = cmd->add_option("--s", req.s, "staircase parameter s = P/Q, series ratio s^2");
    m->excludes(s);
    cmd->add_option("--layers", req.layers, "number of layers")->capture_default_str();
    cmd->add_flag("--allow-infeasible", req.allow_infeasible,
                  "draw an infeasible layered configuration with a clamped to n");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification and rendering of proof-without-words figures for geometric series",
                 "geoseries"};
    app.require_subcommand(1);

    std::int64_t max_m = 10;
    std::string feasible_format = "table";
    auto* feasible = app.add_subcommand("feasible", "which ratios r = 1/m admit a layered-triangle picture");
    feasible->add_option("--max-m", max_m, "largest candidate m")->capture_default_str();
    feasible->add_option("--format", feasible_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    SceneRequest verify_req;
    std::string verify_format = "table";
    std::string from_scene;
    auto* verify = app.add_subcommand("verify", "audit a construction against its closed-form areas");
    add_scene_options(verify, verify_req, false);
    verify->add_option("--format", verify_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    auto* from = verify->add_option("--from-scene", from_scene, "audit a scene JSON written by render --emit-scene");
    from->excludes(verify->get_option("--construction"));
    from->excludes(verify->get_option("--m"));
    from->excludes(verify->get_option("--s"));

    SceneRequest render_req;
    RenderOptions options;
    std::string out_path;
    bool emit_scene = false;
    bool no_labels = false;
    bool no_annotations = false;
    bool no_equilateral = false;
    auto* render_cmd = app.add_subcommand("render", "write an SVG figure");
    add_scene_options(render_cmd, render_req, true);
    render_cmd->add_option("--out", out_path, "SVG output path")->required();
    render_cmd->add_flag("--emit-scene", emit_scene, "also write the scene JSON next to the SVG");
    render_cmd->add_option("--width", options.canvas_width_px, "canvas width in px")->capture_default_str();
    render_cmd->add_option("--fill", options.color_fill, "colored fill, hex")->capture_default_str();
    render_cmd->add_option("--stroke", options.stroke_color, "stroke color, hex")->capture_default_str();
    render_cmd->add_option("--decimals", options.decimal_places, "fractional digits per coordinate")
        ->capture_default_str();
    render_cmd->add_flag("--no-labels", no_labels, "omit point labels");
    render_cmd->add_flag("--no-layer-annotations", no_annotations, "omit layer annotations");
    render_cmd->add_flag("--no-equilateral", no_equilateral, "draw layered scenes in audit coordinates");

    std::string ratio;
    std::string first_term = "1";
    std::uint64_t terms = 10;
    std::string table_format = "table";
    auto* table = app.add_subcommand("table", "partial sums of first_term * (1 + ratio + ratio^2 + ...)");
    table->add_option("--ratio", ratio, "ratio P/Q in (0, 1)")->required();
    table->add_option("--first-term", first_term, "first term P/Q > 0")->capture_default_str();
    table->add_option("--terms", terms, "number of rows")->capture_default_str();
    table->add_option("--format", table_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (feasible->parsed())
            return cmd_feasible(max_m, feasible_format, out);
        if (table->parsed())
            return cmd_table(ratio, first_term, terms, table_format, out);
        if (verify->parsed()) {
            if (!from_scene.empty())
                return verify_scene(load_scene(from_scene), verify_format, out, err);
            if (verify_req.construction.empty())
                throw UsageError("verify needs --construction or --from-scene");
            return verify_scene(build_requested_scene(verify_req, err), verify_format, out, err);
        }
        if (render_cmd->parsed()) {
            options.show_labels = !no_labels;
            options.show_layer_annotations = !no_annotations;
            options.equilateral = !no_equilateral;
            return cmd_render(build_requested_scene(render_req, err), options, out_path, emit_scene, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_mismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace geoseries::cli
