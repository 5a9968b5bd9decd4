#include "solenoid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "solenoid/error.hpp"
#include "solenoid/monodromy.hpp"
#include "solenoid/oracle.hpp"
#include "solenoid/rationals.hpp"
#include "solenoid/typealg.hpp"

namespace solenoid::cli {

OutputRecord& OutputRecord::add(std::string key, std::string value)
{
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
}

void print_records(std::ostream& out, const std::vector<OutputRecord>& records)
{
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i > 0)
            out << '\n';
        for (const auto& [k, v] : records[i].fields())
            out << k << '=' << v << '\n';
    }
}

namespace {

constexpr std::uint64_t kMaxDegree = 1'000'000;
constexpr std::size_t kExhaustiveDegree = 8;

/// Signals an internal disagreement after the records have been printed.
struct Outcome {
    std::vector<OutputRecord> records;
    std::vector<std::string> mismatches;
};

template <class T>
std::string join(const std::vector<T>& values, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            s += sep;
        if constexpr (std::is_same_v<T, std::string>)
            s += values[i];
        else
            s += std::to_string(values[i]);
    }
    return s;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    if (!text.empty() && text.back() == ',')
        out.emplace_back();
    return out;
}

/// Oracle component count for one covering, appended as a record.
OutputRecord oracle_record(const SolenoidType& type, const Permutation& sigma, Stage base_stage, Stage horizon,
                           const CoveringReport& report, Outcome& outcome, const char* check)
{
    const auto limit = oracle::component_limit(type, sigma, horizon, base_stage);
    const bool agrees = !limit.stabilized || limit.count == report.components.size();
    if (!agrees) {
        outcome.mismatches.push_back("oracle counts " + std::to_string(limit.count) + " components for " +
                                     sigma.to_string() + ", classifier " + std::to_string(report.components.size()));
    }
    OutputRecord rec;
    rec.add("check", check)
        .add("monodromy", sigma.to_string())
        .add("base_stage", base_stage)
        .add("horizon", horizon)
        .add("oracle_counts", join(limit.per_stage))
        .add("oracle_components", limit.count)
        .add("oracle_stabilized", limit.stabilized)
        .add("classifier_components", report.components.size())
        .add("agrees", agrees);
    return rec;
}

Outcome cmd_exists(const SolenoidType& type, std::uint64_t r, std::optional<Stage> verify)
{
    if (r < 1)
        throw DomainError("degree must be at least 1");
    if (r > kMaxDegree)
        throw DomainError("degree exceeds " + std::to_string(kMaxDegree));
    Outcome outcome;
    const auto result = connected_covering_exists(type, r);

    OutputRecord head;
    head.add("command", "exists").add("type", format_type(type)).add("degree", r);
    head.add("verdict", to_string(result.verdict.decision));
    if (result.verdict.decision == Decision::HorizonLimited)
        head.add("coprime_at_horizon", result.verdict.at_horizon);
    if (result.witness) {
        head.add("witness", result.witness->to_string());
        head.add("witness_base_stage", result.witness_base_stage);
    }
    outcome.records.push_back(std::move(head));
    if (!verify)
        return outcome;

    if (!type.has_period()) {
        outcome.records.push_back(OutputRecord().add("check", "skipped").add("reason", "horizon-limited"));
        return outcome;
    }
    const bool claimed = result.verdict.decided_true();
    const auto cycle = Permutation::full_cycle(r);
    const Stage base = claimed ? result.witness_base_stage : type.prefix().size();
    const auto report = classify(type, cycle, base);
    if (report.connected != claimed)
        outcome.mismatches.push_back("r-cycle at base stage " + std::to_string(base) + " classifies as " +
                                     (report.connected ? "connected" : "disconnected"));
    outcome.records.push_back(oracle_record(type, cycle, base, std::max<Stage>(*verify, 1), report, outcome, "r_cycle"));

    if (r <= kExhaustiveDegree) {
        const auto perms = all_permutations(r);
        bool found = false;
        std::size_t classified = 0;
        for (Stage m = 0; m <= type.prefix().size() && !found; ++m) {
            for (const auto& sigma : perms) {
                ++classified;
                if (classify(type, sigma, m).connected) {
                    found = true;
                    break;
                }
            }
        }
        if (found != claimed)
            outcome.mismatches.push_back("exhaustive search " + std::string(found ? "found" : "did not find") +
                                         " a connected covering");
        outcome.records.push_back(OutputRecord()
                                      .add("check", "exhaustive")
                                      .add("permutations", perms.size())
                                      .add("base_stages", type.prefix().size() + 1)
                                      .add("classified", classified)
                                      .add("connected_found", found)
                                      .add("agrees", found == claimed));
    }
    return outcome;
}

Outcome cmd_classify(const SolenoidType& type, const Permutation& sigma, Stage base_stage, std::optional<Stage> verify)
{
    Outcome outcome;
    const auto report = classify(type, sigma, base_stage);

    OutputRecord head;
    head.add("command", "classify")
        .add("type", format_type(type))
        .add("monodromy", sigma.to_string())
        .add("degree", report.degree)
        .add("base_stage", report.base_stage)
        .add("stabilization_stage", report.stabilization.stage)
        .add("stabilization", report.stabilization.decided ? "decided" : "horizon-limited")
        .add("components", report.components.size())
        .add("connected", report.connected);
    outcome.records.push_back(std::move(head));

    for (std::size_t i = 0; i < report.components.size(); ++i) {
        const auto& c = report.components[i];
        OutputRecord rec;
        rec.add("component", i + 1)
            .add("length", c.length)
            .add("sheets", join(c.sheets))
            .add("tail_coprime", to_string(c.coprime.decision))
            .add("homeomorphic_to_base", c.homeomorphic_to_base ? "true" : "unverified");
        outcome.records.push_back(std::move(rec));
    }
    if (verify)
        outcome.records.push_back(oracle_record(type, sigma, base_stage, std::max<Stage>(*verify, 1), report, outcome, "oracle"));
    return outcome;
}

Outcome cmd_cohomology(const SolenoidType& type, const std::string& coeff, std::optional<Stage> stages,
                       const std::optional<std::string>& gens)
{
    Outcome outcome;
    OutputRecord head;
    head.add("command", "cohomology").add("type", format_type(type)).add("coefficient", coeff);
    if (coeff == "Q") {
        if (gens)
            throw DomainError("--gens applies to Z coefficients only");
        const Stage n = stages.value_or(32);
        const int rank = limit_rank_over_Q(type, n);
        head.add("stages", n).add("rank", rank);
        outcome.records.push_back(std::move(head));
        return outcome;
    }
    if (coeff != "Z")
        throw DomainError("coefficient must be Z or Q");

    std::vector<Fraction> generators;
    std::vector<Stage> generator_stages;
    if (gens && !gens->empty()) {
        for (const auto& token : split_list(*gens)) {
            auto x = Fraction::parse(token);
            auto at = expressible_stage(type, x, stages.value_or(std::numeric_limits<Stage>::max()));
            if (!at)
                throw DomainError("generator " + x.to_string() + " is not expressible at the given stages");
            generators.push_back(std::move(x));
            generator_stages.push_back(*at);
        }
    }
    if (stages)
        head.add("stages", *stages);
    std::vector<std::string> shown;
    for (const auto& g : generators)
        shown.push_back(g.to_string());
    head.add("generators", join(shown)).add("generator_stages", join(generator_stages));

    const auto group = span(generators);
    const auto witness = non_fg_witness(type, group);
    const auto element = inject(type, witness);
    if (contains(group, element))
        outcome.mismatches.push_back("witness " + element.to_string() + " lies in the span");
    head.add("span", group.generator().to_string())
        .add("witness_stage", witness.stage)
        .add("witness", element.to_string());
    outcome.records.push_back(std::move(head));
    return outcome;
}

Outcome cmd_equiv(const SolenoidType& left, const SolenoidType& right)
{
    Outcome outcome;
    OutputRecord rec;
    rec.add("command", "equiv")
        .add("left", format_type(left))
        .add("right", format_type(right))
        .add("left_supernatural", supernatural_of(left).to_string())
        .add("right_supernatural", supernatural_of(right).to_string())
        .add("equivalent", types_equivalent(left, right));
    outcome.records.push_back(std::move(rec));
    return outcome;
}

Outcome cmd_oracle(const oracle::StageGroup& group, const Permutation& sigma)
{
    Outcome outcome;
    const oracle::ProductSystem system{group, sigma};
    const auto closed = oracle::orbit_count_closed_form(system);
    OutputRecord rec;
    rec.add("command", "oracle")
        .add("order", to_bigint(group.order).str())
        .add("order_factors", group.order.to_string())
        .add("sheets", sigma.degree())
        .add("monodromy", sigma.to_string())
        .add("orbits_closed_form", closed);
    try {
        const auto counted = oracle::orbit_count_enumerated(system);
        rec.add("orbits_enumerated", counted);
        if (counted != closed)
            outcome.mismatches.push_back("enumeration and closed form disagree");
    } catch (const BudgetError&) {
        rec.add("orbits_enumerated", "skipped");
    }
    outcome.records.push_back(std::move(rec));
    return outcome;
}

SolenoidType parse_type_arg(const std::string& text) { return parse_type(text); }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite coverings and cohomology of solenoids"};
    app.require_subcommand(1);
    std::string format = "records";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"records"}));

    std::string type_text;
    std::string monodromy_text;
    std::uint64_t degree = 0;
    Stage base_stage = 0;
    std::optional<Stage> verify;
    std::optional<Stage> stages;
    std::optional<std::string> gens;
    std::string coeff;
    std::string left_text, right_text;
    std::optional<std::uint64_t> order;
    std::optional<Stage> stage;

    auto* exists = app.add_subcommand("exists", "Decide whether a connected r-fold covering exists");
    exists->add_option("--type", type_text, "Type descriptor, e.g. \"2,3|5\"")->required();
    exists->add_option("--degree", degree, "Covering degree r")->required();
    exists->add_option("--verify", verify, "Cross-check with the classifier and oracle up to this stage");

    auto* classify_cmd = app.add_subcommand("classify", "Components of the covering with a given monodromy");
    classify_cmd->add_option("--type", type_text, "Type descriptor")->required();
    classify_cmd->add_option("--monodromy", monodromy_text, "Cycles like \"(1 2)(3 4 5)\" or \"id:r\"")->required();
    classify_cmd->add_option("--base-stage", base_stage, "Stage at which the monodromy is given");
    classify_cmd->add_option("--verify", verify, "Append oracle orbit counts up to this stage");

    auto* cohomology = app.add_subcommand("cohomology", "First Cech cohomology as a subgroup of Q");
    cohomology->add_option("--type", type_text, "Type descriptor")->required();
    cohomology->add_option("--coeff", coeff, "Z or Q")->required();
    cohomology->add_option("--stages", stages, "Stage horizon");
    cohomology->add_option("--gens", gens, "Comma-separated fractions, e.g. \"1/2,1/4\"");

    auto* equiv = app.add_subcommand("equiv", "Compare two periodic types");
    equiv->add_option("--left", left_text, "Type descriptor")->required();
    equiv->add_option("--right", right_text, "Type descriptor")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Raw orbit count of the finite product system");
    oracle_cmd->add_option("--monodromy", monodromy_text, "Monodromy permutation")->required();
    auto* order_opt = oracle_cmd->add_option("--order", order, "Group order q");
    auto* type_opt = oracle_cmd->add_option("--type", type_text, "Type descriptor");
    auto* stage_opt = oracle_cmd->add_option("--stage", stage, "Stage n (q = w_{m+1}...w_n)");
    oracle_cmd->add_option("--base-stage", base_stage, "Base stage m");
    order_opt->excludes(type_opt);
    stage_opt->needs(type_opt);
    type_opt->needs(stage_opt);

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
        return kInputError;
    }

    Outcome outcome;
    try {
        if (exists->parsed()) {
            outcome = cmd_exists(parse_type_arg(type_text), degree, verify);
        } else if (classify_cmd->parsed()) {
            outcome = cmd_classify(parse_type_arg(type_text), Permutation::parse(monodromy_text), base_stage, verify);
        } else if (cohomology->parsed()) {
            outcome = cmd_cohomology(parse_type_arg(type_text), coeff, stages, gens);
        } else if (equiv->parsed()) {
            outcome = cmd_equiv(parse_type_arg(left_text), parse_type_arg(right_text));
        } else if (oracle_cmd->parsed()) {
            const auto sigma = Permutation::parse(monodromy_text);
            if (order) {
                outcome = cmd_oracle(oracle::StageGroup::of_order(*order), sigma);
            } else if (stage) {
                const auto type = parse_type_arg(type_text);
                if (*stage < base_stage)
                    throw DomainError("stage precedes the base stage");
                outcome = cmd_oracle(oracle::StageGroup::at(type, *stage, base_stage), sigma);
            } else {
                throw DomainError("oracle needs --order or --type with --stage");
            }
        }
    } catch (const CrossCheckError& e) {
        err << "cross-check failed: " << e.what() << '\n';
        return kCrossCheckFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    print_records(out, outcome.records);
    if (!outcome.mismatches.empty()) {
        for (const auto& m : outcome.mismatches)
            err << "cross-check failed: " << m << '\n';
        return kCrossCheckFailure;
    }
    return kSuccess;
}

} // namespace solenoid::cli
