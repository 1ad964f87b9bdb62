// Command-line surface: thin adapters over the library. No game or
// stability logic lives here.
#include "ahg/io.hpp"
#include "ahg/stability.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ahg;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write file: " + out_path);
    out << text;
}

// "12.5" for EQ models; "15w+9" style for the weighted SF/AL pairs.
std::string render_value(UtilityModel m, const UtilityValue& u) {
    if (degree_of(m) == AltruismDegree::equal_treatment)
        return to_display_string(u.primary);
    if (u.primary == 0)
        return to_display_string(u.secondary);
    std::string out = to_display_string(u.primary) + "w";
    if (u.secondary > 0)
        out += "+" + to_display_string(u.secondary);
    else if (u.secondary < 0)
        out += to_display_string(u.secondary);
    return out;
}

std::string render_document(const InstanceDocument& doc, const std::string& format) {
    return format == "edgelist" ? serialize_edgelist(doc) : serialize_instance(doc);
}

struct GadgetArgs {
    std::string kind;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t k_prime = 0;
    std::string out_path;
    std::string format = "full";
};

int run_gadget(const GadgetArgs& a) {
    Gadget g = [&] {
        if (a.kind == "circulant") {
            if (a.k == 0)
                throw ContractError("gadget circulant: provide -k");
            return make_circulant(a.k, a.k_prime);
        }
        if (a.d == 0)
            throw ContractError("gadget " + a.kind + ": provide -d");
        return a.kind == "dome" ? make_dome(a.d, a.k_prime) : make_pinched_dome(a.d, a.k_prime);
    }();
    emit(render_document(document_from_gadget(g), a.format), a.out_path);
    return 0;
}

struct ReduceArgs {
    std::string target;
    std::size_t k = 0;
    std::string in_path;
    std::string out_path;
    std::string format = "full";
};

int run_reduce(const ReduceArgs& a) {
    const auto target = target_from_tag(a.target);
    if (!target)
        throw ContractError("reduce: unknown target \"" + a.target + "\"");
    const InstanceDocument doc = parse_instance(slurp(a.in_path));
    const ReductionArtifact artifact = run_reduction(graph_from_document(doc), a.k, *target);
    emit(render_document(document_from_artifact(artifact), a.format), a.out_path);
    return 0;
}

struct VerifyArgs {
    std::string in_path;
    std::string model;
    std::string strategy = "exhaustive";
    std::size_t max_size = 0;
    std::vector<PlayerId> candidates;
    unsigned threads = 0;
    bool deterministic = true;
    bool strict = false;
};

int run_verify(const VerifyArgs& a) {
    const InstanceDocument doc = parse_instance(slurp(a.in_path));
    GameInstance game(graph_from_document(doc));
    auto partition = partition_from_document(doc);
    if (!partition)
        throw ContractError("verify: the instance document carries no partition");

    UtilityModel model;
    if (!a.model.empty()) {
        const auto m = model_from_string(a.model);
        if (!m)
            throw ContractError("verify: unknown model \"" + a.model + "\"");
        model = *m;
    } else if (doc.model) {
        model = *doc.model;
    } else {
        throw ContractError("verify: provide --model or a document with a model field");
    }

    SearchStrategy strategy = [&]() -> SearchStrategy {
        if (a.strategy == "exhaustive")
            return ExhaustiveStrategy{false, a.threads, a.deterministic, 25};
        if (a.strategy == "exhaustive-parallel")
            return ExhaustiveStrategy{true, a.threads, a.deterministic, 25};
        if (a.strategy == "restricted") {
            if (a.max_size == 0)
                throw ContractError("verify: restricted strategy needs --max-size");
            if (a.candidates.empty())
                throw ContractError("verify: restricted strategy needs --candidates");
            return RestrictedStrategy{a.max_size, a.candidates};
        }
        throw ContractError("verify: unknown strategy \"" + a.strategy + "\"");
    }();

    const CoreVerdict verdict = a.strict ? verify_strict_core(game, *partition, model, strategy)
                                         : verify_core(game, *partition, model, strategy);

    std::cout << "model: " << to_string(model) << "\n";
    std::cout << "notion: " << (a.strict ? "strict-core" : "core") << "\n";
    std::cout << "strategy: " << a.strategy << "\n";
    std::cout << "status: " << to_string(verdict.status) << "\n";
    std::cout << "explored: " << verdict.explored << "\n";
    if (verdict.bound)
        std::cout << "bound: size<=" << verdict.bound->max_size << " over "
                  << verdict.bound->num_candidates << " candidates\n";
    if (verdict.certificate) {
        std::cout << "certificate:";
        for (PlayerId p : verdict.certificate->members())
            std::cout << " " << p;
        std::cout << "\n";
    }
    return exit_code_for(verdict.status);
}

struct UtilitiesArgs {
    std::string in_path;
    std::vector<PlayerId> coalition;
    std::string model;
    std::string w;
};

void print_player_row(const GameInstance& game, PlayerId i, const Coalition& c,
                      const std::vector<UtilityModel>& models, const BigInt* w) {
    std::cout << "player " << i << ": val=" << valuation(game, i, c);
    for (UtilityModel m : models) {
        const UtilityValue u = utility(game, i, c, m);
        std::cout << " " << to_string(m) << "=" << render_value(m, u);
        if (w)
            std::cout << " (=" << to_display_string(to_numeric(u, m, *w)) << ")";
    }
    std::cout << "\n";
}

int run_utilities(const UtilitiesArgs& a) {
    const InstanceDocument doc = parse_instance(slurp(a.in_path));
    GameInstance game(graph_from_document(doc));

    std::vector<UtilityModel> models;
    if (!a.model.empty()) {
        const auto m = model_from_string(a.model);
        if (!m)
            throw ContractError("utilities: unknown model \"" + a.model + "\"");
        models.push_back(*m);
    } else {
        models.assign(kAllModels.begin(), kAllModels.end());
    }

    std::optional<BigInt> w;
    if (!a.w.empty())
        w = BigInt(a.w);

    if (!a.coalition.empty()) {
        const Coalition c = Coalition::from_members(game.num_players(), a.coalition);
        std::cout << "coalition:";
        for (PlayerId p : c.members())
            std::cout << " " << p;
        std::cout << "\n";
        for (PlayerId p : c.members())
            print_player_row(game, p, c, models, w ? &*w : nullptr);
        return 0;
    }
    const auto partition = partition_from_document(doc);
    if (!partition)
        throw ContractError("utilities: provide --coalition or a document with a partition");
    for (PlayerId i = 0; i < game.num_players(); ++i)
        print_player_row(game, i, partition->block_of(i), models, w ? &*w : nullptr);
    return 0;
}

// The worked example: five players a..e on a fixed friendship graph,
// evaluated in the grand coalition and in {a,b,c,d}.
int run_demo(const std::string& which) {
    if (which != "example1")
        throw ContractError("demo: unknown demo \"" + which + "\"");
    const auto g = FriendshipGraph::build(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    GameInstance game(g);
    const std::vector<std::string> names = {"a", "b", "c", "d", "e"};

    const auto print_table = [&](const char* title, const Coalition& c) {
        std::cout << title << "\n";
        std::cout << std::left << std::setw(8) << "player" << std::setw(6) << "val";
        for (UtilityModel m : kAllModels)
            std::cout << std::setw(10) << to_string(m);
        std::cout << "\n";
        for (PlayerId i : c.members()) {
            std::cout << std::left << std::setw(8) << names[i] << std::setw(6)
                      << valuation(game, i, c);
            for (UtilityModel m : kAllModels)
                std::cout << std::setw(10) << render_value(m, utility(game, i, c, m));
            std::cout << "\n";
        }
        std::cout << "\n";
    };

    print_table("Grand coalition {a,b,c,d,e}:", Coalition::of(5, {0, 1, 2, 3, 4}));
    print_table("Coalition {a,b,c,d}:", Coalition::of(5, {0, 1, 2, 3}));

    const Coalition c = Coalition::of(5, {0, 1, 2, 3});
    const CoalitionStructure gamma = CoalitionStructure::grand_coalition(5);
    std::cout << "{a,b,c,d} blocks the grand coalition under:";
    for (UtilityModel m : kAllModels)
        if (blocks(game, c, gamma, m))
            std::cout << " " << to_string(m);
    std::cout << "\n";

    const BigInt w = 625; // n^4
    std::cout << "numeric cross-check at w=625: ";
    std::cout << "min-al(a,C)=" << to_display_string(to_numeric(
                     utility(game, 0, c, UtilityModel::min_al), UtilityModel::min_al, w));
    const auto grand = Coalition::of(5, {0, 1, 2, 3, 4});
    std::cout << ", min-sf(e,N)=" << to_display_string(to_numeric(
                     utility(game, 4, grand, UtilityModel::min_sf), UtilityModel::min_sf, w));
    std::cout << "\n";
    return 0;
}

int cli_main(int argc, char** argv) {
    CLI::App app{"Exact engine for altruistic hedonic games: valuations, the six utility "
                 "models, core verification, and clique-hardness instance generators"};
    app.require_subcommand(1);
    int exit_code = 0;

    GadgetArgs gadget_args;
    auto* gadget_cmd = app.add_subcommand("gadget", "Emit a gadget graph with its role map");
    gadget_cmd->add_option("kind", gadget_args.kind, "circulant | dome | pinched-dome")
        ->required()
        ->check(CLI::IsMember({"circulant", "dome", "pinched-dome"}));
    gadget_cmd->add_option("-k,--k", gadget_args.k, "circulant size-class parameter (odd, >= 3)");
    gadget_cmd->add_option("-d,--d", gadget_args.d, "dome mid-player count (>= 1)");
    gadget_cmd->add_option("--k-prime", gadget_args.k_prime, "gadget size parameter")->required();
    gadget_cmd->add_option("--out", gadget_args.out_path, "output file (default stdout)");
    gadget_cmd->add_option("--format", gadget_args.format, "full | edgelist")
        ->check(CLI::IsMember({"full", "edgelist"}));
    gadget_cmd->callback([&] { exit_code = run_gadget(gadget_args); });

    ReduceArgs reduce_args;
    auto* reduce_cmd =
        app.add_subcommand("reduce", "Generate a core-verification instance from a graph");
    reduce_cmd->add_option("--target", reduce_args.target, "thm1 | thm2 | thm3")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3"}));
    reduce_cmd->add_option("-k,--k", reduce_args.k, "clique size sought in the source")
        ->required();
    reduce_cmd->add_option("--in", reduce_args.in_path, "source graph file ('-' for stdin)")
        ->required();
    reduce_cmd->add_option("--out", reduce_args.out_path, "output file (default stdout)");
    reduce_cmd->add_option("--format", reduce_args.format, "full | edgelist")
        ->check(CLI::IsMember({"full", "edgelist"}));
    reduce_cmd->callback([&] { exit_code = run_reduce(reduce_args); });

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Search for a blocking coalition");
    verify_cmd->add_option("--in", verify_args.in_path, "instance file ('-' for stdin)")
        ->required();
    verify_cmd->add_option("--model", verify_args.model,
                           "avg-sf | avg-eq | avg-al | min-sf | min-eq | min-al");
    verify_cmd->add_option("--strategy", verify_args.strategy,
                           "exhaustive | exhaustive-parallel | restricted");
    verify_cmd->add_option("--max-size", verify_args.max_size,
                           "largest coalition size for the restricted strategy");
    verify_cmd
        ->add_option("--candidates", verify_args.candidates,
                     "comma-separated player ids for the restricted strategy")
        ->delimiter(',');
    verify_cmd->add_option("--threads", verify_args.threads,
                           "worker threads (0: AHG_THREADS env var, else hardware)");
    verify_cmd->add_flag("--deterministic,!--no-deterministic", verify_args.deterministic,
                         "reproduce the sequential certificate in parallel runs");
    verify_cmd->add_flag("--strict", verify_args.strict,
                         "verify the strict core (weak blocking)");
    verify_cmd->callback([&] { exit_code = run_verify(verify_args); });

    UtilitiesArgs util_args;
    auto* util_cmd =
        app.add_subcommand("utilities", "Print valuations and utilities for a coalition");
    util_cmd->add_option("--in", util_args.in_path, "instance file ('-' for stdin)")->required();
    util_cmd->add_option("--coalition", util_args.coalition, "comma-separated player ids")
        ->delimiter(',');
    util_cmd->add_option("--model", util_args.model, "restrict output to one model");
    util_cmd->add_option("--w", util_args.w, "also print numeric utilities at this weight");
    util_cmd->callback([&] { exit_code = run_utilities(util_args); });

    std::string demo_name;
    auto* demo_cmd = app.add_subcommand("demo", "Reproduce the worked example tables");
    demo_cmd->add_option("name", demo_name, "example1")
        ->required()
        ->check(CLI::IsMember({"example1"}));
    demo_cmd->callback([&] { exit_code = run_demo(demo_name); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) { return cli_main(argc, argv); }
