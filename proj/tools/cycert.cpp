#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cycert/checks.hpp"
#include "cycert/gen.hpp"
#include "cycert/graph.hpp"
#include "cycert/io.hpp"
#include "cycert/witness.hpp"

namespace {

cycert::Graph load_graph(const std::string& path, const std::string& format) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw cycert::ParseError("cannot open input file: " + path);
        in = &file;
    }
    if (format == "graph6") {
        std::string line;
        if (!std::getline(*in, line)) throw cycert::ParseError("empty graph6 input");
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        return cycert::from_graph6(line);
    }
    return cycert::read_edge_list(*in);
}

void emit_graph(const cycert::Graph& g, const std::string& path, const std::string& format) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw cycert::ParseError("cannot open output file: " + path);
        out = &file;
    }
    if (format == "graph6")
        *out << cycert::to_graph6(g) << '\n';
    else
        cycert::write_edge_list(*out, g);
}

void emit_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw cycert::ParseError("cannot open output file: " + path);
    file << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructive cycle / independent-set witness engine"};
    app.require_subcommand(1);

    std::string input = "-", output, format = "edgelist", lemma;
    int p = 0, r = 0, trials = 0, max_n = 0;
    uint64_t seed = 1;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("--input", input, "input graph file, - for stdin");
        cmd->add_option("--out", output, "output file, default stdout");
        cmd->add_option("--format", format, "graph format: edgelist or graph6")
            ->check(CLI::IsMember({"edgelist", "graph6"}));
    };

    CLI::App* wit = app.add_subcommand("witness", "find a long cycle or an independent set");
    add_io(wit, true);
    wit->add_option("--p", p, "cycle target parameter")->required();
    wit->add_option("--r", r, "independence parameter")->required();

    CLI::App* ext = app.add_subcommand("extremal", "emit the tight example graph");
    add_io(ext, false);
    ext->add_option("--p", p, "clique order")->required();
    ext->add_option("--r", r, "number of cliques")->required();

    CLI::App* chk = app.add_subcommand("check-lemma", "replay a lemma check on seeded instances");
    chk->add_option("--lemma", lemma, "one of: chop collate erdos_gallai saw_find pr1 super lux flat saw_cycles")
        ->required()
        ->check(CLI::IsMember(cycert::lemma_names()));
    chk->add_option("--trials", trials, "number of generated instances");
    chk->add_option("--seed", seed, "base seed");
    chk->add_option("--max-n", max_n, "instance size limit");

    CLI::App* gen = app.add_subcommand("gen", "emit a seeded test instance");
    add_io(gen, false);
    gen->add_option("--p", p, "clique order / degree floor");
    gen->add_option("--r", r, "number of cliques (0: random 2-connected graph)");
    gen->add_option("--trials", trials, "number of cross edges for clique unions");
    gen->add_option("--seed", seed, "seed");
    gen->add_option("--max-n", max_n, "vertex count for random graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (wit->parsed()) {
            cycert::Graph g = load_graph(input, format);
            cycert::Certificate cert = cycert::ramsey_witness(g, p, r);
            emit_text(cycert::certificate_to_json(cert).dump(2) + "\n", output);
            if (cert.kind == cycert::OutcomeKind::Failure) {
                std::cerr << "failure: " << cert.message << '\n';
                return 3;
            }
            if (!cycert::verify_certificate(g, cert)) {
                std::cerr << "internal error: certificate failed verification\n";
                return 3;
            }
            return 0;
        }
        if (ext->parsed()) {
            emit_graph(cycert::extremal_graph(p, r), output, format);
            return 0;
        }
        if (chk->parsed()) {
            cycert::CheckResult res = cycert::run_lemma_check(lemma, trials, seed, max_n);
            std::cout << "lemma " << res.lemma << ": " << res.trials << " trials, "
                      << res.failures << " failures\n";
            if (!res.message.empty()) std::cout << "first failure: " << res.message << '\n';
            return res.ok() ? 0 : 3;
        }
        if (gen->parsed()) {
            cycert::Graph g;
            if (r >= 1 && p >= 2) {
                // r cliques, the last one vertex larger: total p*r + 1, the
                // smallest order the witness subcommand accepts for (p, r)
                std::vector<int> sizes(r, p);
                sizes.back() = p + 1;
                g = cycert::clique_union_cross(sizes, trials, seed);
            } else {
                int n = max_n > 0 ? max_n : 10;
                g = cycert::two_connected_random(n, p > 0 ? p : 3, seed);
            }
            emit_graph(g, output, format);
            return 0;
        }
    } catch (const cycert::HypothesisViolated& e) {
        std::cerr << "hypothesis violated: " << e.what() << '\n';
        return 2;
    } catch (const cycert::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const cycert::SizeCapExceeded& e) {
        std::cerr << "size cap: " << e.what() << '\n';
        return 1;
    } catch (const cycert::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
