#include "linembed/cli.hpp"

#include "linembed/builder.hpp"
#include "linembed/corpus.hpp"
#include "linembed/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace linembed::cli {

namespace {

struct RunConfig
{
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t base = EmbedParams{}.base;
    std::uint64_t spread = EmbedParams{}.spread;
    int max_escalations = EmbedParams{}.max_escalations;
    std::string output;

    std::string gen_name;
    std::vector<long> gen_params;
    std::string target = "vertex";
    std::string mode = "collapsible";
    std::string svg;
    std::vector<std::string> inputs;
    int parts = 2;
    bool allow_large = false;

    EmbedParams embed_params() const
    {
        EmbedParams p;
        p.seed = seed;
        p.base = base;
        p.spread = spread;
        p.max_escalations = max_escalations;
        return p;
    }
};

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class Session
{
public:
    Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    template <class Reader>
    auto read(const std::string& path, Reader reader)
    {
        if (path == "-") {
            if (stdin_used_) throw InputError("standard input can only be read once");
            stdin_used_ = true;
            return with_context("<stdin>", [&] { return reader(in_); });
        }
        std::ifstream f(path);
        if (!f) throw InputError("cannot open " + path);
        return with_context(path, [&] { return reader(f); });
    }

    // Result stream: the --output file if given, else `out`.
    std::ostream& result(const RunConfig& cfg)
    {
        if (cfg.output.empty()) return out_;
        if (!file_.is_open()) {
            file_.open(cfg.output);
            if (!file_) throw InputError("cannot write " + cfg.output);
        }
        return file_;
    }

    std::ostream& err() { return err_; }

private:
    template <class F>
    static auto with_context(const std::string& name, F f)
    {
        try {
            return f();
        } catch (const ParseError& e) {
            throw InputError(name + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw InputError(name + ": " + e.what());
        }
    }

    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    std::ofstream file_;
    bool stdin_used_ = false;
};

SimplicialComplex read_complex_file(Session& s, const std::string& path)
{
    return s.read(path, [](std::istream& is) { return read_complex(is); });
}

int cmd_gen(Session& s, const RunConfig& cfg)
{
    write_complex(s.result(cfg), generate({cfg.gen_name, cfg.gen_params}, cfg.seed));
    return kOk;
}

int report_search(Session& s, SearchStatus status, std::uint64_t nodes, const std::string& what)
{
    if (status == SearchStatus::not_found) {
        s.err() << what << ": not found (search exhausted after " << nodes << " nodes)\n";
        return kAbsent;
    }
    s.err() << what << ": undecided (budget exhausted after " << nodes << " nodes)\n";
    return kExhausted;
}

int cmd_collapse(Session& s, const RunConfig& cfg)
{
    const SimplicialComplex c = read_complex_file(s, cfg.inputs.at(0));
    auto outcome = cfg.target == "cycle" ? find_collapse_to_cycle(c, cfg.budget) : find_collapse_to_vertex(c, cfg.budget);
    if (outcome.status != SearchStatus::found)
        return report_search(s, outcome.status, outcome.nodes_expanded, "collapse to " + cfg.target);
    write_sequence(s.result(cfg), *outcome.result);
    return kOk;
}

SearchOutcome<MorseCertificate> morse_search(const SimplicialComplex& c, std::uint64_t budget)
{
    if (c.dim() != 2) throw InputError("Morse (1,1,1) needs a 2-dimensional complex, got dimension " +
                                       std::to_string(c.dim()));
    return find_morse_111(c, budget);
}

int cmd_morse111(Session& s, const RunConfig& cfg)
{
    const SimplicialComplex c = read_complex_file(s, cfg.inputs.at(0));
    auto outcome = morse_search(c, cfg.budget);
    if (outcome.status != SearchStatus::found)
        return report_search(s, outcome.status, outcome.nodes_expanded, "Morse (1,1,1) certificate");
    write_certificate(s.result(cfg), *outcome.result);
    return kOk;
}

int cmd_embed(Session& s, const RunConfig& cfg)
{
    const SimplicialComplex c = read_complex_file(s, cfg.inputs.at(0));
    const EmbedParams params = cfg.embed_params();
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }

    EmbedResult res;
    try {
        if (cfg.mode == "generic") {
            res = embed_generic(c, params);
        } else if (cfg.mode == "morse111") {
            auto outcome = morse_search(c, cfg.budget);
            if (outcome.status != SearchStatus::found)
                return report_search(s, outcome.status, outcome.nodes_expanded, "Morse (1,1,1) certificate");
            res = embed_morse111(c, *outcome.result, params);
        } else {
            auto outcome = find_collapse_to_vertex(c, cfg.budget);
            if (outcome.status != SearchStatus::found)
                return report_search(s, outcome.status, outcome.nodes_expanded, "collapse to vertex");
            res = embed_collapsible(c, *outcome.result, params);
        }
    } catch (const EmbedError& e) {
        s.err() << "embed: " << e.what() << '\n';
        write_report(s.err(), e.last_report());
        return kExhausted;
    }

    write_embedding(s.result(cfg), res.embedding);
    if (!cfg.svg.empty()) {
        if (res.embedding.ambient_dim != 2) throw InputError("--svg needs a planar (dim 2) embedding");
        std::ofstream svg(cfg.svg);
        if (!svg) throw InputError("cannot write " + cfg.svg);
        write_svg(svg, c, res.embedding);
    }
    s.err() << "embed: verified in R^" << res.embedding.ambient_dim << " after " << res.escalations
            << " escalation(s), " << res.redraws << " redraw(s)";
    if (res.placement == Placement::moment_curve) s.err() << ", moment-curve placement";
    s.err() << '\n';
    return kOk;
}

int cmd_verify(Session& s, const RunConfig& cfg)
{
    const SimplicialComplex c = read_complex_file(s, cfg.inputs.at(0));
    const EmbeddingMap e = s.read(cfg.inputs.at(1), [](std::istream& is) { return read_embedding(is); });
    VerificationReport report;
    try {
        report = verify_embedding(c, e);
    } catch (const std::out_of_range& ex) {
        throw InputError(ex.what());
    } catch (const DimensionError& ex) {
        throw InputError(ex.what());
    }
    write_report(s.result(cfg), report);
    return report.embedded() ? kOk : kAbsent;
}

int cmd_tverberg(Session& s, const RunConfig& cfg)
{
    const std::vector<Point> points = s.read(cfg.inputs.at(0), [](std::istream& is) { return read_points(is); });
    std::optional<TverbergCertificate> cert;
    try {
        cert = find_tverberg_partition(points, cfg.parts, TverbergOptions{cfg.allow_large});
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const InstanceTooLarge& e) {
        throw InputError(std::string(e.what()) + " (pass --allow-large to override)");
    }
    if (!cert) {
        s.err() << "tverberg: no partition into " << cfg.parts << " parts has intersecting hulls\n";
        return kAbsent;
    }
    write_tverberg(s.result(cfg), *cert);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Collapse-driven linear embeddings of simplicial complexes, with exact verification", "linembed"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", cfg.seed, "Random seed for generators and coordinate draws");
    app.add_option("--budget", cfg.budget, "Search-tree node budget")->check(CLI::PositiveNumber);
    app.add_option("--base", cfg.base, "Separation ratio between consecutive first coordinates");
    app.add_option("--spread", cfg.spread, "Range factor for the remaining coordinates");
    app.add_option("--max-escalations", cfg.max_escalations, "Bound on escalations and on redraws");
    app.add_option("--output", cfg.output, "Write the result here instead of standard output");

    std::string registry_help = "Generators:\n";
    for (const auto& g : generator_registry()) registry_help += "  " + std::string(g.usage) + "\n";

    auto* gen = app.add_subcommand("gen", "Emit a corpus complex")->footer(registry_help);
    gen->add_option("name", cfg.gen_name, "Generator name")->required();
    gen->add_option("params", cfg.gen_params, "Integer parameters");

    auto* collapse = app.add_subcommand("collapse", "Search for a collapsing sequence");
    collapse->add_option("complex", cfg.inputs, "Complex file or -")->required()->expected(1);
    collapse->add_option("--target", cfg.target, "vertex or cycle")->check(CLI::IsMember({"vertex", "cycle"}));

    auto* morse = app.add_subcommand("morse111", "Search for a Morse (1,1,1) certificate");
    morse->add_option("complex", cfg.inputs, "Complex file or -")->required()->expected(1);

    auto* embed = app.add_subcommand("embed", "Build a verified linear embedding");
    embed->add_option("complex", cfg.inputs, "Complex file or -")->required()->expected(1);
    embed->add_option("--mode", cfg.mode, "collapsible, morse111 or generic")
        ->check(CLI::IsMember({"collapsible", "morse111", "generic"}));
    embed->add_option("--svg", cfg.svg, "Also draw a planar embedding as SVG");

    auto* verify = app.add_subcommand("verify", "Check an embedding exactly");
    verify->add_option("files", cfg.inputs, "Complex file and embedding file")->required()->expected(2);

    auto* tverberg = app.add_subcommand("tverberg", "Find a certified Tverberg partition");
    tverberg->add_option("points", cfg.inputs, "Points file or -")->required()->expected(1);
    tverberg->add_option("-r", cfg.parts, "Number of parts")->required();
    tverberg->add_flag("--allow-large", cfg.allow_large, "Lift the instance-size guard");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    Session session(in, out, err);
    try {
        if (*gen) return cmd_gen(session, cfg);
        if (*collapse) return cmd_collapse(session, cfg);
        if (*morse) return cmd_morse111(session, cfg);
        if (*embed) return cmd_embed(session, cfg);
        if (*verify) return cmd_verify(session, cfg);
        return cmd_tverberg(session, cfg);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    }
    return kInputError;
}

} // namespace linembed::cli
