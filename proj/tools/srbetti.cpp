// srbetti: graded Betti numbers, Hilbert series and h-vector identity checks
// for Stanley-Reisner rings.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srbetti/cli.hpp"

namespace {

struct Output
{
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path)
    {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw srbetti::Error("cannot write " + path);
        stream = &file;
    }
};

} // namespace

int main(int argc, char** argv)
{
    using namespace srbetti;

    CLI::App app{"Graded Betti numbers and h-vector identities of Stanley-Reisner rings"};
    app.require_subcommand(1);

    std::string field = "32003";
    std::string format = "text";
    std::string out_path;
    cli::CliConfig config;
    app.add_option("--field", field, "prime characteristic or Q")->capture_default_str();
    app.add_option("--n-cap", config.n_cap, "largest vertex count accepted by the Betti sweep")->capture_default_str();
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", config.seed, "corpus seed")->capture_default_str();
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--threads", config.threads, "worker threads, 0 = all cores")->capture_default_str();
    app.add_flag("--exhaustive-froberg", config.exhaustive_froberg, "add the sweep over all graphs on 6 vertices");
    app.add_flag("!--skip-field-check", config.field_check, "do not recompute tables over Q");

    auto* analyze = app.add_subcommand("analyze", "analyze a .cplx or .graph file");
    std::string analyze_path;
    analyze->add_option("path", analyze_path, "complex (.cplx) or graph (.graph) file")->required();

    auto* gen = app.add_subcommand("gen-chordal", "write a seeded random chordal graph");
    int gen_n = 0;
    double gen_density = 0.5;
    std::uint64_t gen_seed = 0;
    gen->add_option("n", gen_n, "vertex count")->required()->check(CLI::PositiveNumber);
    gen->add_option("density", gen_density, "attachment density in [0,1]")->required()->check(CLI::Range(0.0, 1.0));
    gen->add_option("seed", gen_seed, "generator seed")->required();

    auto* verify = app.add_subcommand("verify", "check every identity on files or a seeded corpus");
    cli::VerifyRequest request;
    verify->add_option("--count", request.count, "corpus size")->capture_default_str();
    verify->add_option("--n-max", request.n_max, "largest corpus vertex count")->capture_default_str();
    verify->add_option("paths", request.paths, "explicit .cplx / .graph files");

    // Global options are accepted after the subcommand name too.
    for (auto* sub : {analyze, gen, verify}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        config.field = FieldSpec::parse(field);
        config.format = format == "json" ? cli::Format::json : cli::Format::text;
        if (config.n_cap > kMaxVertices) throw InvalidArgument("--n-cap may not exceed 64");
        if (*gen) return cli::cmd_gen_chordal(gen_n, gen_density, gen_seed, out_path, config, std::cout, std::cerr);
        Output output(out_path);
        if (*analyze) return cli::cmd_analyze(analyze_path, config, *output.stream, std::cerr);
        return cli::cmd_verify(request, config, *output.stream, std::cerr);
    } catch (const Error& e) {
        std::cerr << "srbetti: " << e.what() << '\n';
        return 2;
    }
}
