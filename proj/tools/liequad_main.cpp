#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "liequad/jobs.hpp"

namespace {

int run_and_print(const liequad::JobSpec& spec) {
    const liequad::JobReport report = liequad::run(spec);
    std::cout << (spec.format == "json" ? report.render_json() : report.render_text());
    return report.exit_status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact split simple Lie algebras, Casimir projectors and the quadratic "
                 "equations of highest-weight orbit closures"};
    app.require_subcommand(1);

    liequad::JobSpec spec;
    auto add_common = [&](CLI::App* cmd, bool with_weight) {
        cmd->add_option("type", spec.type_string, "simple type, e.g. A3 or G2")->required();
        if (with_weight)
            cmd->add_option("weight", spec.weight_string,
                            "dominant weight in fundamental coordinates, e.g. 0,1,0")
                ->required();
        cmd->add_option("--max-dim", spec.max_dim, "module dimension cap (default 64)");
        cmd->add_option("--format", spec.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    add_common(app.add_subcommand("describe", "root system summary"), false);
    add_common(app.add_subcommand("rep", "module dimension and weight multiplicities"), true);
    add_common(app.add_subcommand("projector",
                                  "projector constant, Casimir eigenvalue, Lichtenstein constant"),
               true);
    add_common(app.add_subcommand("equations", "emit the quadratic equation system"), true);

    auto* member = app.add_subcommand("member", "test a vector for orbit membership");
    add_common(member, true);
    member->add_option("--vector", spec.vector_csv, "comma-separated rational coordinates")
        ->required();

    auto* ideal = app.add_subcommand("inner-ideal", "test a subspace for the inner ideal property");
    add_common(ideal, true);
    ideal->add_option("--subspace", spec.subspace_path, "file with one column per line")
        ->required();

    auto* sample = app.add_subcommand("orbit-sample", "sample a point of the highest-weight orbit");
    add_common(sample, true);
    sample->add_option("--word", spec.word_spec,
                       "steps like f1:1/2,e2:-1 (1-based generator indices)");
    std::uint64_t seed_value = 0;
    auto* seed_opt = sample->add_option("--seed", seed_value, "deterministic word seed");

    add_common(app.add_subcommand("verify", "run the full exact invariant suite"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (seed_opt->count() > 0) spec.seed = seed_value;
    spec.command = app.get_subcommands().front()->get_name();
    return run_and_print(spec);
}
