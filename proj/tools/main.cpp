#include "sqchoose/discharging.hpp"
#include "sqchoose/errors.hpp"
#include "sqchoose/listcolor.hpp"
#include "sqchoose/oracle.hpp"
#include "sqchoose/profile.hpp"
#include "sqchoose/sparsity.hpp"
#include "sqchoose/structure.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <numeric>

using namespace sqchoose;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_invariant = 2;
constexpr int exit_counterexample = 3;

struct Options {
    std::string graph_file;
    std::string embedding_file;
    std::string profiles_file;
    std::string lists_file;
    std::optional<std::uint64_t> random_seed;
    int lemma = 0;
    int config = 0;
    int k = 0;
    int universe = 0;
};

ProfileTable load_profiles(const Options& o)
{
    ProfileTable table;
    if (!o.profiles_file.empty()) table.apply_override_file(o.profiles_file);
    return table;
}

std::optional<RotationSystem> load_embedding(const Graph& g, const Options& o)
{
    if (o.embedding_file.empty()) return std::nullopt;
    return read_rotation_file(g, o.embedding_file);
}

void print_vertices(const std::vector<VertexId>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i) std::cout << (i ? " " : "") << vs[i];
    std::cout << '\n';
}

void print_list_assignment(const ListAssignment& lists, const std::vector<VertexId>& names)
{
    for (std::size_t i = 0; i < lists.size(); ++i) {
        std::cout << names[i] << ':';
        for (Color c : lists[i]) std::cout << ' ' << c;
        std::cout << '\n';
    }
}

int run_square(const Options& o)
{
    std::cout << to_text(square(read_graph_file(o.graph_file)));
    return exit_ok;
}

int run_girth(const Options& o)
{
    auto value = girth(read_graph_file(o.graph_file));
    std::cout << (value ? std::to_string(*value) : "inf") << '\n';
    return exit_ok;
}

int run_mad(const Options& o)
{
    MadResult r = mad_exact(read_graph_file(o.graph_file));
    std::cout << to_string(r.value) << '\n';
    print_vertices(r.witness);
    return exit_ok;
}

int run_profile(const Options& o)
{
    Graph g = read_graph_file(o.graph_file);
    ProfileTable table = load_profiles(o);
    auto p = profile_for(g, table);
    if (!p) {
        if (auto rot = load_embedding(g, o)) {
            faces_of(g, *rot);
            for (const auto& row : table.rows()) {
                if (row.planar_required) p = row;
            }
        }
    }
    if (p) {
        std::cout << "lemma" << p->lemma << " k=" << p->k << '\n';
    } else {
        std::cout << "none\n";
    }
    return exit_ok;
}

int run_find_config(const Options& o)
{
    Graph g = read_graph_file(o.graph_file);
    auto rot = load_embedding(g, o);
    auto matches = rot ? find_configs(g, o.lemma, *rot) : find_configs(g, o.lemma);
    for (const auto& m : matches) {
        std::cout << m.lemma << ' ' << config_label(m.config);
        for (VertexId v : m.vertices) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return exit_ok;
}

int run_verify_discharge(const Options& o)
{
    Graph g = read_graph_file(o.graph_file);
    auto rot = load_embedding(g, o);
    ChargeState state = discharge(g, o.lemma, rot ? &*rot : nullptr);
    BoundReport report = verify_bound(state, o.lemma);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::cout << "vertex " << v << ' ' << to_string(report.final_vertex[v]) << '\n';
    }
    if (state.face_charge) {
        for (std::size_t f = 0; f < state.face_charge->size(); ++f) {
            std::cout << "face " << f << ' ' << to_string((*state.face_charge)[f]) << '\n';
        }
    }
    std::cout << "threshold " << to_string(report.threshold) << '\n';
    if (!report.exempt.empty()) {
        std::cout << "exempt";
        for (VertexId v : report.exempt) std::cout << ' ' << v;
        std::cout << '\n';
    }
    if (report.holds()) {
        std::cout << "verdict holds\n";
        return exit_ok;
    }
    std::cout << "verdict violated";
    for (VertexId v : report.vertex_violators) std::cout << " v" << v;
    for (FaceId f : report.face_violators) std::cout << " f" << f;
    std::cout << '\n';
    return exit_invariant;
}

int run_color(const Options& o)
{
    Graph g = read_graph_file(o.graph_file);
    auto rot = load_embedding(g, o);
    LemmaProfile profile = load_profiles(o).profile(o.lemma);
    if (o.k > 0) profile.k = o.k;
    ListAssignment lists;
    if (!o.lists_file.empty()) {
        lists = read_lists_file(o.lists_file, g.vertex_count());
    } else if (o.random_seed) {
        lists = random_lists(g.vertex_count(), profile.k, *o.random_seed);
    } else {
        lists = uniform_lists(g.vertex_count(), profile.k);
    }
    Coloring coloring = color_square(g, lists, profile, rot ? &*rot : nullptr);
    for (VertexId v = 0; v < g.vertex_count(); ++v) std::cout << v << ' ' << coloring[v] << '\n';
    return exit_ok;
}

int run_faces(const Options& o)
{
    Graph g = read_graph_file(o.graph_file);
    FaceList faces = faces_of(g, read_rotation_file(g, o.embedding_file));
    for (std::size_t f = 0; f < faces.faces.size(); ++f) {
        std::cout << "face " << f << ' ' << faces.faces[f].length() << ':';
        for (VertexId v : faces.faces[f].walk) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return exit_ok;
}

int run_choosable(const Options& o)
{
    Graph g = read_graph_file(o.graph_file);
    const int universe = o.universe > 0 ? o.universe : 2 * o.k + 4;
    ChoosabilityResult r = is_k_choosable(g, o.k, universe);
    if (r.choosable) {
        std::cout << "CHOOSABLE k=" << o.k << " universe=" << universe << '\n';
        return exit_ok;
    }
    std::cout << "NOT CHOOSABLE k=" << o.k << " universe=" << universe << '\n';
    std::vector<VertexId> names(static_cast<std::size_t>(g.vertex_count()));
    std::iota(names.begin(), names.end(), 0);
    print_list_assignment(*r.counterexample, names);
    return exit_ok;
}

int run_reduce(const Options& o)
{
    Graph g = read_graph_file(o.graph_file);
    auto rot = load_embedding(g, o);
    const int k = o.k > 0 ? o.k : load_profiles(o).profile(o.lemma).k;
    auto matches = find_config(g, o.lemma, o.config, rot ? &*rot : nullptr);
    if (matches.empty()) {
        throw PreconditionError("graph contains no lemma " + std::to_string(o.lemma) + " config (" +
                                config_label(o.config) + ")");
    }
    int status = exit_ok;
    for (const auto& m : matches) {
        ReductionReport r = verify_reduction(g, m, k);
        if (r.certified) {
            std::cout << "CERTIFIED " << r.mode << " floors";
            for (std::size_t i = 0; i < r.vertices.size(); ++i) std::cout << ' ' << r.vertices[i] << ':' << r.floors[i];
            std::cout << '\n';
        } else {
            std::cout << "COUNTEREXAMPLE " << r.failure << '\n';
            print_list_assignment(*r.counterexample, r.vertices);
            status = exit_counterexample;
        }
    }
    return status;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"List coloring of squares of graphs with maximum degree 4"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--profiles", o.profiles_file, "profile override file")->check(CLI::ExistingFile);

    auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", o.graph_file, "graph file")->required(); };
    auto lemma_opt = [&](CLI::App* sub) {
        sub->add_option("--lemma", o.lemma, "lemma 1..6")->required()->check(CLI::Range(1, 6));
    };
    auto embedding_opt = [&](CLI::App* sub, bool required) {
        auto opt = sub->add_option("--embedding", o.embedding_file, "rotation system file");
        if (required) opt->required();
    };

    auto square_cmd = app.add_subcommand("square", "print the square of a graph");
    graph_arg(square_cmd);
    auto girth_cmd = app.add_subcommand("girth", "print the girth, or inf");
    graph_arg(girth_cmd);
    auto mad_cmd = app.add_subcommand("mad", "print mad as p/q and a densest vertex set");
    graph_arg(mad_cmd);
    auto profile_cmd = app.add_subcommand("profile", "print the strongest applicable bound");
    embedding_opt(profile_cmd, false);
    graph_arg(profile_cmd);
    auto find_cmd = app.add_subcommand("find-config", "list reducible configurations");
    lemma_opt(find_cmd);
    embedding_opt(find_cmd, false);
    graph_arg(find_cmd);
    auto discharge_cmd = app.add_subcommand("verify-discharge", "run the discharging rules and check the bound");
    lemma_opt(discharge_cmd);
    embedding_opt(discharge_cmd, false);
    graph_arg(discharge_cmd);
    auto color_cmd = app.add_subcommand("color", "list-color the square of a graph");
    lemma_opt(color_cmd);
    color_cmd->add_option("--k", o.k, "list size")->check(CLI::PositiveNumber);
    auto lists_opt = color_cmd->add_option("--lists", o.lists_file, "list file");
    color_cmd->add_option("--random-lists", o.random_seed, "seed for random k-subsets of 2k colors")
        ->excludes(lists_opt);
    embedding_opt(color_cmd, false);
    graph_arg(color_cmd);
    auto faces_cmd = app.add_subcommand("faces", "list the faces of an embedding");
    embedding_opt(faces_cmd, true);
    graph_arg(faces_cmd);

    auto oracle_cmd = app.add_subcommand("oracle", "brute-force checks");
    oracle_cmd->require_subcommand(1);
    auto choosable_cmd = oracle_cmd->add_subcommand("choosable", "decide k-choosability of the graph itself");
    choosable_cmd->add_option("--k", o.k, "list size")->required()->check(CLI::PositiveNumber);
    choosable_cmd->add_option("--universe", o.universe, "number of colors lists draw from (default 2k+4)");
    graph_arg(choosable_cmd);
    auto reduce_cmd = oracle_cmd->add_subcommand("reduce", "certify each match of a configuration");
    lemma_opt(reduce_cmd);
    reduce_cmd->add_option("--config", o.config, "configuration number")->required()->check(CLI::PositiveNumber);
    reduce_cmd->add_option("--k", o.k, "list size (default: the lemma's)")->check(CLI::PositiveNumber);
    embedding_opt(reduce_cmd, false);
    graph_arg(reduce_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*square_cmd) return run_square(o);
        if (*girth_cmd) return run_girth(o);
        if (*mad_cmd) return run_mad(o);
        if (*profile_cmd) return run_profile(o);
        if (*find_cmd) return run_find_config(o);
        if (*discharge_cmd) return run_verify_discharge(o);
        if (*color_cmd) return run_color(o);
        if (*faces_cmd) return run_faces(o);
        if (*choosable_cmd) return run_choosable(o);
        if (*reduce_cmd) return run_reduce(o);
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return exit_invariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
