#include "batrel/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>

#include "batrel/error.hpp"
#include "batrel/implicit_bat.hpp"
#include "batrel/oracle.hpp"
#include "batrel/plsa.hpp"
#include "batrel/report.hpp"

namespace batrel::cli {

namespace {

NetworkInstance load(const RunConfig& config) {
    NetworkInstance instance = load_network(config.network_path);
    if (config.p) {
        instance.distribution = uniform_distribution(instance.network.arc_count(), *config.p);
    }
    return instance;
}

void write_enumeration_row(std::ostream& out, std::uint64_t index, StateVector x,
                           ConnectivityChecker& checker, const ArcDistribution* dist) {
    const bool connected = checker.connected(x);
    out << index << ',' << x.to_string() << ',' << weight_forward(x) << ',' << x.ones() << ','
        << (connected ? 'Y' : 'N');
    if (dist) out << ',' << format_round_trip(connected ? state_probability(x, *dist) : 0.0);
    out << '\n';
}

}  // namespace

int cmd_exact(const RunConfig& config, std::ostream& out) {
    const NetworkInstance instance = load(config);
    const double r = exact_reliability(instance.network, instance.distribution, config.exact_cap);
    if (config.format == OutputFormat::csv) {
        out << "R," << format_round_trip(r) << ",exact\n";
    } else {
        out << "R = " << format_fixed(r) << '\n';
    }
    return kSuccess;
}

int cmd_appbat(const RunConfig& config, std::ostream& out) {
    const NetworkInstance instance = load(config);
    const int min_ones = config.max_failed
                             ? max_failed_to_min_ones(instance.network, *config.max_failed)
                             : *config.min_ones;
    AppBatOptions options;
    options.delta_threshold = config.delta_threshold;
    if (config.time_limit_seconds) {
        options.time_budget = std::chrono::duration<double>(*config.time_limit_seconds);
    }
    options.direction = config.direction;
    options.workers = config.workers;
    const ReliabilityReport report =
        approximate_reliability(instance.network, instance.distribution, min_ones, options);
    if (config.format == OutputFormat::csv) {
        write_report_csv(out, report);
    } else {
        write_report_table(out, report);
    }
    return kSuccess;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
    const NetworkInstance instance = load(config);
    const Network& net = instance.network;
    ConnectivityChecker checker(net);
    const ArcDistribution* dist = config.with_probability ? &instance.distribution : nullptr;
    out << "index,bits,W_f,One,connected" << (dist ? ",pr" : "") << '\n';
    std::uint64_t index = 1;
    if (config.all) {
        for (const StateVector& x : enumerate_all(net.arc_count(), config.order)) {
            write_enumeration_row(out, index++, x, checker, dist);
        }
    } else {
        const int z = *config.ones;
        if (z < 0 || z > net.arc_count()) {
            throw InputError("--ones " + std::to_string(z) + " outside 0.." +
                             std::to_string(net.arc_count()));
        }
        LevelCursor cursor(net.arc_count(), z);
        do {
            write_enumeration_row(out, index++, cursor.state(), checker, dist);
        } while (cursor.advance());
    }
    return kSuccess;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
    const NetworkInstance instance = load(config);
    const StateVector x = StateVector::parse(config.state);
    const LayerTrace trace = layer_trace(instance.network, x);
    auto nodes = [](const std::vector<int>& layer, const char* sep) {
        std::string s;
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (i) s += sep;
            s += std::to_string(layer[i]);
        }
        return s;
    };
    if (config.format == OutputFormat::csv) {
        out << "layer,nodes\n";
        for (std::size_t i = 0; i < trace.layers.size(); ++i) {
            out << i + 1 << ',' << nodes(trace.layers[i], " ") << '\n';
        }
        out << "verdict," << (trace.connected ? "connected" : "disconnected") << '\n';
    } else {
        out << "X = " << x.to_tuple_string() << '\n';
        for (std::size_t i = 0; i < trace.layers.size(); ++i) {
            out << "L" << i + 1 << " = {" << nodes(trace.layers[i], ", ") << "}\n";
        }
        out << (trace.connected ? "connected" : "disconnected") << '\n';
    }
    return kSuccess;
}

int cmd_mcs(const RunConfig& config, std::ostream& out) {
    const NetworkInstance instance = load(config);
    const McsEstimate e = mcs_estimate(instance.network, instance.distribution, config.samples,
                                       config.seed, config.workers);
    if (config.format == OutputFormat::csv) {
        out << "estimate,standard_error,samples,seed\n"
            << format_round_trip(e.estimate) << ',' << format_round_trip(e.standard_error) << ','
            << e.samples << ',' << e.seed << '\n';
    } else {
        out << "R ~ " << format_fixed(e.estimate) << " +/- " << format_fixed(e.standard_error)
            << " (samples " << e.samples << ", seed " << e.seed << ")\n";
    }
    return kSuccess;
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
    Network net = generate_random_network(
        config.gen_nodes, config.gen_arcs,
        config.gen_undirected ? Orientation::undirected : Orientation::directed, config.seed);
    const NetworkInstance instance{net, uniform_distribution(net.arc_count(), config.gen_p)};
    const std::string text = render_network(instance);
    if (config.output_path.empty()) {
        out << text;
    } else {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file || !(file << text)) {
            throw InputError("cannot write '" + config.output_path + "'");
        }
    }
    return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Two-terminal network reliability by binary-addition-tree enumeration", "batrel"};
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> formats{{"table", OutputFormat::table},
                                                      {"csv", OutputFormat::csv}};
    const std::map<std::string, Direction> directions{{"ascending", Direction::ascending},
                                                      {"descending", Direction::descending}};
    const std::map<std::string, BatOrder> orders{{"forward", BatOrder::forward},
                                                 {"backward", BatOrder::backward}};
    std::string format_name = "table";
    std::string direction_name = "descending";
    std::string order_name = "forward";

    auto add_network = [&](CLI::App* sub) {
        sub->add_option("network", config.network_path, "Network file")->required();
        sub->add_option("--p", config.p, "Use this probability for every arc")
            ->check(CLI::Range(0.0, 1.0));
        sub->add_option("--format", format_name, "Output format: table or csv")
            ->check(CLI::IsMember(formats, CLI::ignore_case));
    };
    auto add_workers = [&](CLI::App* sub) {
        sub->add_option("--workers", config.workers, "Worker threads")
            ->check(CLI::Range(1, 1024));
    };

    auto* exact = app.add_subcommand("exact", "Exact reliability by full enumeration");
    add_network(exact);
    exact->add_option("--cap", config.exact_cap, "Largest arc count to enumerate")
        ->check(CLI::Range(0, kExactArcHardCap));

    auto* appbat = app.add_subcommand("appbat", "Level-by-level lower bound (AppBAT)");
    add_network(appbat);
    add_workers(appbat);
    auto* min_ones = appbat->add_option("--min-ones", config.min_ones,
                                        "Lowest working-arc count to evaluate");
    auto* max_failed = appbat->add_option("--max-failed", config.max_failed,
                                          "Highest failed-arc count to evaluate");
    min_ones->excludes(max_failed);
    max_failed->excludes(min_ones);
    std::string delta_text;
    auto* delta = appbat->add_option("--delta", delta_text,
                                     "Stop after a level whose mass is below this "
                                     "(default 1e-5 when given without a value)")
                      ->expected(0, 1);
    appbat->add_option("--time-limit", config.time_limit_seconds, "Time budget in seconds")
        ->check(CLI::NonNegativeNumber);
    appbat->add_option("--direction", direction_name, "ascending or descending")
        ->check(CLI::IsMember(directions, CLI::ignore_case));

    auto* enumerate = app.add_subcommand("enumerate", "Stream state vectors as CSV");
    add_network(enumerate);
    auto* ones = enumerate->add_option("--ones", config.ones, "Only vectors with this many working arcs");
    auto* all = enumerate->add_flag("--all", config.all, "All 2^m vectors");
    ones->excludes(all);
    all->excludes(ones);
    enumerate->add_option("--order", order_name, "forward or backward (with --all)")
        ->check(CLI::IsMember(orders, CLI::ignore_case));
    enumerate->add_flag("--with-prob", config.with_probability,
                        "Append Pr(X) of connected vectors");

    auto* check = app.add_subcommand("check", "Connectivity of one state vector, with layers");
    add_network(check);
    check->add_option("--state", config.state, "Arc states, arc 0 first, e.g. 11100")->required();

    auto* mcs = app.add_subcommand("mcs", "Monte-Carlo reliability estimate");
    add_network(mcs);
    add_workers(mcs);
    mcs->add_option("--samples", config.samples, "Number of samples")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    mcs->add_option("--seed", config.seed, "Random seed");

    auto* gen = app.add_subcommand("gen", "Write a random network file");
    gen->add_option("--nodes", config.gen_nodes, "Node count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--arcs", config.gen_arcs, "Arc count")->required()->check(CLI::NonNegativeNumber);
    gen->add_flag("--undirected", config.gen_undirected, "Undirected arcs (default directed)");
    gen->add_option("--p", config.gen_p, "Arc probability written to the file")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", config.seed, "Random seed");
    gen->add_option("-o,--output", config.output_path, "Output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (appbat->parsed()) {
            if (!config.min_ones && !config.max_failed) {
                throw CLI::RequiredError("one of --min-ones or --max-failed");
            }
            if (delta->count() > 0) {
                if (delta_text.empty()) {
                    config.delta_threshold = kDefaultDeltaThreshold;
                } else {
                    double value = 0.0;
                    const auto* end = delta_text.data() + delta_text.size();
                    auto [ptr, ec] = std::from_chars(delta_text.data(), end, value);
                    if (ec != std::errc{} || ptr != end || !(value >= 0.0)) {
                        throw CLI::ValidationError("--delta", "expected a non-negative number");
                    }
                    config.delta_threshold = value;
                }
            }
        }
        if (enumerate->parsed() && !config.ones && !config.all) {
            throw CLI::RequiredError("one of --ones or --all");
        }
        auto lower = [](std::string s) {
            for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return s;
        };
        config.format = formats.at(lower(format_name));
        config.direction = directions.at(lower(direction_name));
        config.order = orders.at(lower(order_name));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
    }

    try {
        config.subcommand = app.get_subcommands().front()->get_name();
        using Command = int (*)(const RunConfig&, std::ostream&);
        const std::map<std::string, Command> commands{
            {"exact", cmd_exact}, {"appbat", cmd_appbat}, {"enumerate", cmd_enumerate},
            {"check", cmd_check}, {"mcs", cmd_mcs},       {"gen", cmd_gen}};
        return commands.at(config.subcommand)(config, out);
    } catch (const CapabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kCapability;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace batrel::cli
