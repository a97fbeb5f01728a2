#include <berge/cli.hpp>

#include <berge/campaign.hpp>
#include <berge/constructions.hpp>
#include <berge/cycle_structure.hpp>
#include <berge/io.hpp>
#include <berge/report.hpp>
#include <berge/solver.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace berge::cli {

namespace {

const std::vector<std::string> solve_actions{"longest-path", "circumference", "has-path"};
const std::vector<std::string> verify_actions{"theorem-uniform", "theorem-shadow", "remark", "claims"};

std::vector<std::string> family_names()
{
    std::vector<std::string> names;
    for (auto f : construction_families())
        names.emplace_back(f);
    return names;
}

[[noreturn]] void usage(const std::string & message)
{
    throw Error(ErrorCode::UsageError, message);
}

void require_input(const std::string & path)
{
    if (path != "-" && !std::filesystem::exists(path))
        throw Error(ErrorCode::IoError, "input file '" + path + "' not found");
}

using Clock = std::chrono::steady_clock;

} // namespace

Command parse_args(const std::vector<std::string> & argv)
{
    Command cmd;
    cmd.args = argv;
    cmd.seed = default_seed;
    cmd.jobs = std::max(1U, std::thread::hardware_concurrency());

    CLI::App app{"Berge paths in linear {2,3}-uniform hypergraphs", "berge"};
    app.require_subcommand(1);

    auto * construct = app.add_subcommand("construct", "write an extremal construction as .hg");
    construct->add_option("family", cmd.action, "construction family")->required()->check(CLI::IsMember(family_names()));
    construct->add_option("--n", cmd.n, "vertex count");
    construct->add_option("--k", cmd.k, "STS order for disjoint_sts");
    construct->add_option("--copies", cmd.copies, "number of disjoint copies");
    construct->add_option("-o,--output", cmd.output, "output file (default stdout)");

    auto * solve = app.add_subcommand("solve", "exact Berge path / cycle search");
    solve->add_option("action", cmd.action, "longest-path | circumference | has-path")->required()->check(CLI::IsMember(solve_actions));
    solve->add_option("file", cmd.input, ".hg file, or - for stdin")->required();
    solve->add_option("--k", cmd.k, "path length for has-path");
    solve->add_option("-o,--output", cmd.output, "output file (default stdout)");

    auto * check = app.add_subcommand("check", "structural checks around a longest cycle");
    check->add_option("action", cmd.action, "claims")->required()->check(CLI::IsMember(std::vector<std::string>{"claims"}));
    check->add_option("file", cmd.input, ".hg file, or - for stdin")->required();
    check->add_option("-o,--output", cmd.output, "output file (default stdout)");

    auto * verify = app.add_subcommand("verify", "exhaustive or sampled verification campaigns");
    verify->add_option("action", cmd.action, "theorem-uniform | theorem-shadow | remark | claims")->required()->check(CLI::IsMember(verify_actions));
    verify->add_option("--n", cmd.n, "vertex count")->required();
    verify->add_option("--k", cmd.k, "forbidden Berge path length");
    verify->add_option("--samples", cmd.samples, "random instances instead of exhaustive enumeration");
    verify->add_option("--seed", cmd.seed, "seed for random instances");
    verify->add_option("--jobs", cmd.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--cap", cmd.cap, "override the exhaustive n cap");
    verify->add_flag("--dedup", cmd.dedup, "collect extremal witnesses up to isomorphism");
    verify->add_option("--max-witnesses", cmd.max_witnesses, "labelled witnesses kept in the report");
    verify->add_option("--all-cycles-up-to", cmd.all_cycles_up_to, "claims: audit every longest cycle up to this n");
    verify->add_option("--uniformity", cmd.uniformity, "claims: 3 or 2,3")->check(CLI::IsMember(std::vector<std::string>{"3", "2,3"}));
    verify->add_option("--witness-dir", cmd.witness_dir, "write extremal witnesses as .hg files here");
    verify->add_option("-o,--output", cmd.output, "output file (default stdout)");

    auto * shadow_cmd = app.add_subcommand("shadow", "two-shadow of a hypergraph");
    shadow_cmd->add_option("file", cmd.input, ".hg file, or - for stdin")->required();
    shadow_cmd->add_option("-o,--output", cmd.output, "output file (default stdout)");

    auto * stats = app.add_subcommand("stats", "basic counts and degrees");
    stats->add_option("file", cmd.input, ".hg file, or - for stdin")->required();
    stats->add_option("-o,--output", cmd.output, "output file (default stdout)");

    std::vector<std::string> storage{"berge"};
    storage.insert(storage.end(), argv.begin(), argv.end());
    std::vector<char *> raw;
    for (auto & s : storage)
        raw.push_back(s.data());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    }
    catch (const CLI::CallForHelp &) {
        auto * sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        cmd.help = sub->help();
        return cmd;
    }
    catch (const CLI::ParseError & e) {
        usage(std::string(e.what()) + "\n" + app.help());
    }

    cmd.verb = app.get_subcommands().front()->get_name();
    if (cmd.verb == "solve" && cmd.action == "has-path" && cmd.k < 0)
        usage("solve has-path needs --k K (K >= 0)");
    if (cmd.verb == "verify") {
        if (cmd.action != "claims" && cmd.k < 0)
            usage("verify " + cmd.action + " needs --k K");
        if (cmd.n < 0)
            usage("--n must be non-negative");
    }
    if (cmd.verb == "construct") {
        if (cmd.action == "disjoint_sts" && cmd.k < 0)
            usage("construct disjoint_sts needs --k K");
        if (cmd.action != "fano" && cmd.action != "disjoint_sts" && cmd.n < 0)
            usage("construct " + cmd.action + " needs --n N");
    }
    if (!cmd.input.empty())
        require_input(cmd.input);
    return cmd;
}

namespace {

void emit(const Command & cmd, std::ostream & out, const std::string & text)
{
    if (cmd.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cmd.output);
    if (!file)
        throw Error(ErrorCode::IoError, "cannot write '" + cmd.output + "'");
    file << text;
}

void write_witnesses(const Command & cmd, const VerificationReport & r)
{
    namespace fs = std::filesystem;
    fs::create_directories(cmd.witness_dir);
    const auto stem = r.campaign + "-n" + std::to_string(r.params.n) + "-k" + std::to_string(r.params.k);
    auto write = [](const fs::path & path, const LinearHypergraph & h) {
        std::ofstream file(path);
        if (!file)
            throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
        write_hg(file, h);
    };
    for (std::size_t i = 0; i < r.extremal_witnesses.size(); ++i)
        write(fs::path(cmd.witness_dir) / (stem + "-witness" + std::to_string(i) + ".hg"), r.extremal_witnesses[i]);
    for (std::size_t i = 0; i < r.extremal_classes.size(); ++i)
        write(fs::path(cmd.witness_dir) / (stem + "-class" + std::to_string(i) + ".hg"), r.extremal_classes[i].representative);
}

VerificationReport run_campaign(const Command & cmd)
{
    CampaignParams params = with_environment_caps({});
    params.n = cmd.n;
    params.k = std::max(cmd.k, 0);
    params.samples = cmd.samples;
    params.seed = cmd.seed;
    params.dedup = cmd.dedup;
    params.jobs = cmd.jobs;
    params.max_witnesses = cmd.max_witnesses;
    params.all_cycles_up_to = cmd.all_cycles_up_to;
    if (cmd.cap >= 0)
        params.cap_mixed = params.cap_triples = cmd.cap;
    if (cmd.uniformity == "3")
        params.uniformity = Uniformity::triples_only;

    if (cmd.action == "theorem-uniform")
        return verify_theorem_uniform(params);
    if (cmd.action == "theorem-shadow")
        return verify_theorem_shadow(params);
    if (cmd.action == "remark")
        return verify_remark(params);
    return verify_claims(params);
}

} // namespace

int run(const Command & cmd, std::ostream & out, std::ostream & err)
{
    if (cmd.help) {
        out << *cmd.help;
        return 0;
    }
    const auto start = Clock::now();
    auto finish = [&](json result, int code) {
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        const auto verb = cmd.verb == "shadow" || cmd.verb == "stats" ? cmd.verb : cmd.verb + " " + cmd.action;
        emit(cmd, out, make_envelope(verb, cmd.args, std::move(result), seconds).dump(2) + "\n");
        return code;
    };

    if (cmd.verb == "construct") {
        ConstructionSpec spec{cmd.action, cmd.n, cmd.k, cmd.copies};
        emit(cmd, out, to_hg(construct(spec)));
        return 0;
    }
    if (cmd.verb == "verify") {
        const auto report = run_campaign(cmd);
        if (!cmd.witness_dir.empty())
            write_witnesses(cmd, report);
        for (const auto & v : report.violations)
            err << "violation: " << v.kind << ": " << v.detail << '\n';
        return finish(to_json(report), report.verified() ? 0 : 1);
    }

    const auto h = read_hg_file(cmd.input);
    if (cmd.verb == "shadow")
        return finish(shadow_result(h), 0);
    if (cmd.verb == "stats")
        return finish(stats_result(h), 0);
    if (cmd.verb == "solve") {
        if (cmd.action == "longest-path")
            return finish(path_result(longest_berge_path(h)), 0);
        if (cmd.action == "circumference")
            return finish(cycle_result(longest_berge_cycle(h)), 0);
        const auto path = find_berge_path(h, cmd.k);
        json result = {{"k", cmd.k}, {"has_path", path.has_value()}};
        result.update(path ? path_result(*path) : path_result(BergePath{}));
        return finish(result, 0);
    }
    if (cmd.verb == "check") {
        const auto ctx = longest_cycle_context(h);
        ClaimAudit audit;
        if (ctx)
            audit = audit_claims(h, *ctx);
        for (const auto & v : audit.violations)
            err << "violation: " << v.check << ": " << v.clause << '\n';
        return finish(claims_result(ctx, audit), audit.violations.empty() ? 0 : 1);
    }
    throw Error(ErrorCode::UsageError, "unknown verb '" + cmd.verb + "'");
}

int main(const std::vector<std::string> & argv, std::ostream & out, std::ostream & err)
{
    try {
        return run(parse_args(argv), out, err);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace berge::cli
