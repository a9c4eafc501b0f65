#include "modrep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "modrep/an_classify.hpp"
#include "modrep/branching.hpp"
#include "modrep/js.hpp"
#include "modrep/mullineux.hpp"
#include "modrep/partition.hpp"
#include "modrep/verify.hpp"

namespace modrep::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kUsageError = 2;

Orientation parse_orientation(const std::string &text) {
    if (text == "auto" || text == "bottom-up")
        return text == "auto" ? kCalibratedOrientation : Orientation::BottomUp;
    return Orientation::TopDown;
}

ojson nodes_json(const std::vector<Node> &nodes) {
    auto arr = ojson::array();
    for (const Node &node : nodes)
        arr.push_back({node.row, node.col});
    return arr;
}

ojson symbol_json(const MullineuxSymbol &symbol) {
    auto arr = ojson::array();
    for (const auto &c : symbol.columns)
        arr.push_back({c.rim_size, c.rows});
    return arr;
}

std::string join(const std::vector<int> &values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k)
        out += (k ? "," : "") + std::to_string(values[k]);
    return out;
}

std::string nodes_text(const std::vector<Node> &nodes) {
    std::string out;
    for (const Node &node : nodes)
        out += (out.empty() ? "" : " ") + std::string("(") +
               std::to_string(node.row) + "," + std::to_string(node.col) + ")";
    return out.empty() ? "-" : out;
}

struct Options {
    int p = 5;
    int n = 0;
    int max_n = -1;
    bool json = false;
    bool fixed_only = false;
    bool regular_only = false;
    bool calibration = false;
    bool serial = false;
    std::size_t cap = 25;
    std::string orientation = "auto";
    std::string partition;
    std::vector<std::string> split;
    std::vector<std::string> signs;
    std::vector<std::string> nonsplit;
};

int cmd_mull(const Options &opt, std::ostream &out) {
    const Prime p(opt.p);
    const Partition lambda = parse_partition(opt.partition);
    const auto result = mullineux(lambda, p, parse_orientation(opt.orientation));
    if (!opt.json) {
        out << format_partition(result.image) << '\n';
        return 0;
    }
    ojson j;
    j["partition"] = format_partition(lambda);
    j["p"] = opt.p;
    j["image"] = format_partition(result.image);
    j["fixed"] = result.image == lambda;
    j["residue_trace"] = std::get<ResidueTrace>(result.trace).residues;
    j["symbol"] = lambda.empty() ? ojson::array()
                                 : symbol_json(mullineux_symbol(lambda, p));
    out << j.dump() << '\n';
    return 0;
}

int cmd_nodes(const Options &opt, std::ostream &out) {
    const Prime p(opt.p);
    const Partition lambda = parse_partition(opt.partition);
    const Orientation o = parse_orientation(opt.orientation);
    const auto nodes = classify_nodes(lambda, p, o);
    if (opt.json) {
        ojson j;
        j["partition"] = format_partition(lambda);
        j["p"] = opt.p;
        j["orientation"] = to_string(o);
        auto residues = ojson::array();
        for (int i = 0; i < opt.p; ++i) {
            const auto &r = nodes.residues[i];
            residues.push_back({{"residue", i},
                                {"addable", nodes_json(r.addable)},
                                {"removable", nodes_json(r.removable)},
                                {"normal", nodes_json(r.normal)},
                                {"conormal", nodes_json(r.conormal)},
                                {"epsilon", nodes.epsilon(i)},
                                {"phi", nodes.phi(i)}});
        }
        j["residues"] = residues;
        j["epsilon"] = nodes.epsilons();
        j["phi"] = nodes.phis();
        out << j.dump() << '\n';
        return 0;
    }
    for (int i = 0; i < opt.p; ++i) {
        const auto &r = nodes.residues[i];
        out << "residue " << i << ": removable " << nodes_text(r.removable)
            << "; addable " << nodes_text(r.addable) << "; normal "
            << nodes_text(r.normal) << "; conormal " << nodes_text(r.conormal)
            << '\n';
    }
    out << "epsilon " << join(nodes.epsilons()) << '\n';
    out << "phi " << join(nodes.phis()) << '\n';
    return 0;
}

int cmd_js(const Options &opt, std::ostream &out) {
    const Prime p(opt.p);
    const auto found = enumerate_js(opt.n, p, opt.fixed_only);
    if (opt.json) {
        ojson j;
        j["n"] = opt.n;
        j["p"] = opt.p;
        j["fixed_only"] = opt.fixed_only;
        auto arr = ojson::array();
        for (const auto &lambda : found)
            arr.push_back(format_partition(lambda));
        j["partitions"] = arr;
        out << j.dump() << '\n';
        return 0;
    }
    for (const auto &lambda : found)
        out << format_partition(lambda) << '\n';
    return 0;
}

int cmd_enumerate(const Options &opt, std::ostream &out) {
    const Prime p(opt.p);
    if (opt.n < 0)
        throw Error(ErrorCode::MalformedPartition, "--n must be >= 0");
    const auto all = enumerate_partitions(opt.n, p, opt.regular_only);
    if (opt.json) {
        ojson j;
        j["n"] = opt.n;
        j["p"] = opt.p;
        j["regular_only"] = opt.regular_only;
        j["count"] = all.size();
        auto arr = ojson::array();
        for (const auto &lambda : all)
            arr.push_back(format_partition(lambda));
        j["partitions"] = arr;
        out << j.dump() << '\n';
        return 0;
    }
    for (const auto &lambda : all)
        out << format_partition(lambda) << '\n';
    return 0;
}

int cmd_classify(const Options &opt, std::ostream &out) {
    const Prime p(opt.p);
    if (opt.signs.size() != opt.split.size())
        throw Error(ErrorCode::SignMissing,
                    "give one --sign for every --split label");
    std::vector<AnLabel> labels;
    for (std::size_t k = 0; k < opt.split.size(); ++k) {
        const std::string &s = opt.signs[k];
        if (s != "+" && s != "-")
            throw Error(ErrorCode::SignMissing, "--sign must be + or -");
        labels.push_back(make_label(parse_partition(opt.split[k]),
                                    s == "+" ? Sign::Plus : Sign::Minus, p));
    }
    for (const auto &text : opt.nonsplit)
        labels.push_back(make_label(parse_partition(text), std::nullopt, p));
    if (labels.size() != 2)
        throw Error(ErrorCode::MismatchedLabels,
                    "classify needs exactly two labels (--split/--nonsplit)");

    const auto outcome = classify_tensor(labels[0], labels[1]);
    if (opt.json) {
        ojson j;
        j["labels"] = {labels[0].to_string(), labels[1].to_string()};
        j["p"] = opt.p;
        j["verdict"] = outcome.irreducible ? "Irreducible" : "NotIrreducible";
        j["nu"] = outcome.nu ? ojson(format_partition(*outcome.nu)) : ojson();
        j["reason"] = outcome.reason ? ojson(to_string(*outcome.reason)) : ojson();
        out << j.dump() << '\n';
        return 0;
    }
    if (outcome.irreducible)
        out << "Irreducible " << format_partition(*outcome.nu) << '\n';
    else
        out << "NotIrreducible " << to_string(*outcome.reason) << '\n';
    return 0;
}

int cmd_verify(const Options &opt, std::ostream &out) {
    verify::RunConfig config;
    if (opt.max_n >= 0)
        config.n_max = opt.max_n;
    config.options.orientation = parse_orientation(opt.orientation);
    config.options.cap = opt.cap;
    config.parallel = !opt.serial;
    const auto result = verify::run_all(config);
    if (opt.json) {
        out << verify::to_jsonl(result.reports);
    } else {
        for (const auto &r : result.reports) {
            out << (r.pass() ? "PASS " : "FAIL ") << verify::to_string(r.id)
                << "  n=" << r.sweep.n_min << ".." << r.sweep.n_max
                << " p=" << join(r.sweep.primes) << "  instances "
                << r.instances << "  counterexamples "
                << r.counterexamples.size() + r.truncated << "  "
                << r.elapsed.count() << " ms\n";
            for (const auto &c : r.counterexamples)
                out << "    " << c.input << ": got " << c.observed
                    << ", expected " << c.expected << '\n';
        }
        if (result.calibration_aborted)
            out << "calibration failed under orientation "
                << to_string(config.options.orientation)
                << "; remaining checks skipped\n";
    }
    return result.exit_status;
}

int cmd_report(const Options &opt, std::ostream &out) {
    if (opt.calibration) {
        const auto cal = verify::calibrate(opt.max_n >= 0 ? opt.max_n : 12);
        ojson j;
        auto trials = ojson::array();
        for (const auto &t : cal.trials)
            trials.push_back({{"orientation", to_string(t.orientation)},
                              {"mullx_failures", t.mullx_failures},
                              {"closed_failures", t.closed_failures},
                              {"pass", t.pass()}});
        j["trials"] = trials;
        j["selected"] = cal.selected ? ojson(to_string(*cal.selected)) : ojson();
        j["frozen"] = to_string(kCalibratedOrientation);
        j["matches_frozen"] = cal.matches_frozen();
        if (opt.json) {
            out << j.dump() << '\n';
        } else {
            for (const auto &t : cal.trials)
                out << to_string(t.orientation) << ": MULLX failures "
                    << t.mullx_failures << ", CLOSED failures "
                    << t.closed_failures << (t.pass() ? "  (pass)" : "  (fail)")
                    << '\n';
            out << "selected "
                << (cal.selected ? to_string(*cal.selected) : "none")
                << ", frozen " << to_string(kCalibratedOrientation) << '\n';
        }
        return cal.matches_frozen() ? 0 : 1;
    }

    const Prime p(opt.p);
    const Partition lambda = parse_partition(opt.partition);
    ojson j;
    j["partition"] = format_partition(lambda);
    j["exponent_form"] = format_partition_exponent(lambda);
    j["n"] = lambda.size();
    j["height"] = lambda.height();
    j["p"] = opt.p;
    j["p_regular"] = is_p_regular(lambda, p);
    j["residue_content"] = residue_content(lambda, p).counts;
    j["specht_dimension"] =
        lambda.empty() ? ojson() : ojson(specht_dimension(lambda));
    const auto nodes = classify_nodes(lambda, p);
    j["epsilon"] = nodes.epsilons();
    j["phi"] = nodes.phis();
    if (is_p_regular(lambda, p) && !lambda.empty()) {
        const Partition dual = mullineux(lambda, p).image;
        j["js"] = is_js(lambda, p);
        j["mullineux"] = format_partition(dual);
        j["mullineux_fixed"] = dual == lambda;
        j["canonical_label"] = format_partition(std::max(lambda, dual));
        j["restriction_end_dim"] = restriction_end_dim(lambda, p);
        j["induction_end_dim"] = induction_end_dim(lambda, p);
        j["l13_lower_bound"] = l13_lower_bound(lambda, p);
    }
    if (opt.json) {
        out << j.dump() << '\n';
        return 0;
    }
    for (const auto &[key, value] : j.items())
        out << key << ": "
            << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
    return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Partition combinatorics for modular representations of "
                 "symmetric and alternating groups"};
    app.name("modrep");
    app.require_subcommand(1);

    Options opt;
    auto add_p = [&](CLI::App *sub) {
        sub->add_option("--p", opt.p, "odd prime characteristic")
            ->capture_default_str();
    };
    auto add_json = [&](CLI::App *sub) {
        sub->add_flag("--json", opt.json, "emit JSON on stdout");
    };
    auto add_orientation = [&](CLI::App *sub) {
        sub->add_option("--orientation", opt.orientation,
                        "signature scan order (unstable; calibration only)")
            ->check(CLI::IsMember({"auto", "top-down", "bottom-up"}))
            ->capture_default_str();
    };

    auto *mull = app.add_subcommand("mull", "Mullineux image of a partition");
    mull->add_option("partition", opt.partition, "e.g. 7 or 4^3,1^2")->required();
    add_p(mull);
    add_json(mull);
    add_orientation(mull);

    auto *nodes = app.add_subcommand("nodes", "addable/removable/normal/conormal nodes");
    nodes->add_option("partition", opt.partition)->required();
    add_p(nodes);
    add_json(nodes);
    add_orientation(nodes);

    auto *js = app.add_subcommand("js", "list JS-partitions of n");
    js->add_option("--n", opt.n)->required();
    js->add_flag("--fixed-only", opt.fixed_only, "only Mullineux-fixed ones");
    add_p(js);
    add_json(js);

    auto *classify = app.add_subcommand(
        "classify", "irreducibility of a tensor product of A_n labels (p = 5)");
    classify->add_option("--split", opt.split, "Mullineux-fixed partition");
    classify->add_option("--sign", opt.signs, "+ or - for each --split");
    classify->add_option("--nonsplit", opt.nonsplit, "non-fixed partition");
    add_p(classify);
    add_json(classify);

    auto *enumerate = app.add_subcommand("enumerate", "list partitions of n");
    enumerate->add_option("--n", opt.n)->required();
    enumerate->add_flag("--regular-only", opt.regular_only);
    add_p(enumerate);
    add_json(enumerate);

    auto *verify_cmd = app.add_subcommand("verify", "run the verification checks");
    verify_cmd->add_option("--max-n", opt.max_n, "override every sweep's n_max");
    verify_cmd->add_option("--cap", opt.cap, "counterexamples kept per check")
        ->capture_default_str();
    verify_cmd->add_flag("--serial", opt.serial, "run checks one at a time");
    add_json(verify_cmd);
    add_orientation(verify_cmd);

    auto *report = app.add_subcommand("report", "summary of one partition");
    report->add_option("partition", opt.partition);
    report->add_flag("--calibration", opt.calibration,
                     "orientation calibration instead of a partition summary");
    report->add_option("--max-n", opt.max_n, "calibration sweep bound");
    add_p(report);
    add_json(report);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*mull) return cmd_mull(opt, out);
        if (*nodes) return cmd_nodes(opt, out);
        if (*js) return cmd_js(opt, out);
        if (*classify) return cmd_classify(opt, out);
        if (*enumerate) return cmd_enumerate(opt, out);
        if (*verify_cmd) return cmd_verify(opt, out);
        if (*report) {
            if (!opt.calibration && opt.partition.empty() && !report->count("partition"))
                throw Error(ErrorCode::MalformedPartition,
                            "report needs a partition or --calibration");
            return cmd_report(opt, out);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace modrep::cli
