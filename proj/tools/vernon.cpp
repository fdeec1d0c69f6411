// vernon: command-line front end for trees, mu-syntax and combinators.
//
// Exit status: 0 success, 1 counterexample or inequivalence, 2 malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vernon/decompose.hpp"
#include "vernon/dot.hpp"
#include "vernon/error.hpp"
#include "vernon/laws.hpp"
#include "vernon/monad.hpp"
#include "vernon/rewrite.hpp"
#include "vernon/text.hpp"
#include "vernon/translate.hpp"

using nlohmann::json;
using namespace vernon;

namespace {

struct Failure {
    int status;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{2, path + ": cannot open"};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Document load(const std::string& path) {
    try {
        Document doc = parse_document(read_file(path));
        if (!doc.has_body()) throw Failure{2, path + ": no object after the declarations"};
        return doc;
    } catch (const Error& e) {
        throw Failure{2, path + ":" + e.what()};
    }
}

/// Runs f, prefixing library errors with the file name.
template <class F>
auto located(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw Failure{2, path + ":" + e.what()};
    } catch (const Error& e) {
        throw Failure{2, path + ": " + e.what()};
    }
}

bool body_is_tree(const Document& doc) {
    for (std::size_t i = doc.body_offset; i < doc.text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(doc.text[i]))) return doc.text[i] == '{';
    }
    return false;
}

json tree_json(const VernonGraph& g) {
    json fv = json::array();
    for (const auto& v : g.free_variables()) fv.push_back(v.name());
    return {{"tree", to_string(g)}, {"kind", to_string(classify(g))}, {"free_variables", fv}};
}

struct Output {
    bool as_json = false;
    json data = json::object();
    std::ostringstream text;

    void emit() const {
        if (as_json) std::cout << data.dump(2) << "\n";
        else std::cout << text.str();
    }
};

std::size_t default_bound() {
    if (const char* env = std::getenv("VERNON_BOUND")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw Failure{2, std::string("VERNON_BOUND: not a number: ") + env};
        }
    }
    return 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vernon: cyclic operads as Vernon trees, mu-syntax and combinators"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Structured output");

    std::string file, file_b, from, to, out_path, suite = "all";
    std::size_t at = 0, instances = 250;
    std::optional<std::size_t> bound;
    std::uint64_t seed = 7;
    bool trace = false;

    auto* validate = app.add_subcommand("validate", "Classify a Vernon graph");
    validate->add_option("file", file)->required();
    auto* nf = app.add_subcommand("nf", "Eliminate special corollas");
    nf->add_option("file", file)->required();
    nf->add_flag("--trace", trace, "Print every contraction");
    auto* munf = app.add_subcommand("mu-nf", "Normalise a mu-syntax command");
    munf->add_option("file", file)->required();
    auto* canon = app.add_subcommand("alpha-canon", "Alpha-canonical form of a tree or command");
    canon->add_option("file", file)->required();
    auto* compose = app.add_subcommand("compose", "Evaluate a combinator script on tree classes");
    compose->add_option("file", file)->required();
    auto* flat = app.add_subcommand("flatten", "Flatten a two-level tree and apply mu");
    flat->add_option("file", file)->required();
    auto* tr = app.add_subcommand("translate", "Translate between mu-syntax, combinators and trees");
    tr->add_option("file", file)->required();
    tr->add_option("--from", from)->required()->check(CLI::IsMember({"mu", "comb"}));
    tr->add_option("--to", to)->required()->check(CLI::IsMember({"mu", "comb", "tree"}));
    auto* eval = app.add_subcommand("eval", "Tree class denoted by a command");
    eval->add_option("file", file)->required();
    auto* equiv = app.add_subcommand("equiv", "Decide equality of two commands");
    equiv->add_option("a", file)->required();
    equiv->add_option("b", file_b)->required();
    auto* dec = app.add_subcommand("decompose", "Split an ordinary tree at a corolla");
    dec->add_option("file", file)->required();
    dec->add_option("--at", at, "Corolla index")->required();
    auto* cmdof = app.add_subcommand("command-of", "Normal-form command headed by a corolla");
    cmdof->add_option("file", file)->required();
    cmdof->add_option("--at", at, "Corolla index")->required();
    auto* laws = app.add_subcommand("laws", "Run a law suite");
    laws->add_option("--suite", suite)->check(CLI::IsMember({"operad", "rewrite", "monad", "translate", "decompose", "all"}));
    laws->add_option("--bound", bound);
    laws->add_option("--seed", seed);
    laws->add_option("--instances", instances);
    auto* dot = app.add_subcommand("dot", "Graphviz export of a tree");
    dot->add_option("file", file)->required();
    dot->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? 0 : 2;
    }

    Output out;
    out.as_json = as_json;
    int status = 0;
    try {
        if (validate->parsed()) {
            const Document doc = load(file);
            const VernonGraph g = located(file, [&] { return parse_tree(doc); });
            const TreeKind kind = classify(g);
            out.data = tree_json(g);
            if (!kind.is_tree()) {
                out.data["error"] = "not a tree: " + to_string(kind.defect);
                throw Failure{2, file + ": not a tree: " + to_string(kind.defect)};
            }
            out.data["class"] = canonicalize(g).key();
            out.text << to_string(kind) << "\nfree variables " << to_string(g.free_variables()) << "\n";
        } else if (nf->parsed()) {
            const Document doc = load(file);
            const VernonGraph g = located(file, [&] { return parse_tree(doc); });
            located(file, [&] {
                if (!classify(g).is_tree()) throw ValidationError("not a tree: " + to_string(classify(g).defect));
                return 0;
            });
            std::vector<RewriteStep> steps;
            const VernonGraph r = normal_form(g, trace ? &steps : nullptr);
            json js = json::array();
            for (const auto& s : steps) {
                const char* kind = s.redex.kind == RedexKind::OrdinarySpecial ? "ordinary-special" : "special-special";
                out.text << "contract " << kind << " (" << s.redex.edge.first.name() << "~" << s.redex.edge.second.name() << ")\n  " << s.before << "\n  => " << to_string(s.after) << "\n";
                js.push_back({{"before", s.before}, {"after", to_string(s.after)}});
            }
            out.text << to_string(r) << "\n";
            out.data = tree_json(r);
            if (trace) out.data["steps"] = js;
        } else if (munf->parsed()) {
            const Document doc = load(file);
            const MuCommand c = located(file, [&] {
                MuCommand c = parse_mu_command(doc);
                (void)type_of(c);
                return c;
            });
            const MuCommand n = mu_normal_form(c);
            out.text << to_string(n) << (is_unit_command(n) ? "  // unit-command" : "") << "\n";
            out.data = {{"normal_form", to_string(n)}, {"unit_command", is_unit_command(n)}};
        } else if (canon->parsed()) {
            const Document doc = load(file);
            if (body_is_tree(doc)) {
                const TreeClass c = located(file, [&] { return canonicalize(parse_tree(doc)); });
                out.text << c.key() << "\n";
                out.data = {{"class", c.key()}, {"kind", to_string(c.kind())}};
            } else {
                const MuCommand c = located(file, [&] {
                    MuCommand c = parse_mu_command(doc);
                    (void)type_of(c);
                    return c;
                });
                out.text << alpha_key(c) << "\n";
                out.data = {{"command", alpha_key(c)}};
            }
        } else if (compose->parsed()) {
            const Document doc = load(file);
            const TreeClass c = located(file, [&] {
                return interpret(parse_combinator(doc), TreeModel(TreeModel::Parameters::Flatten));
            });
            out.text << c.key() << "\n";
            out.data = {{"class", c.key()}, {"kind", to_string(c.kind())}};
        } else if (flat->parsed()) {
            const Document doc = load(file);
            const VernonGraph g = located(file, [&] { return flatten(parse_tree(doc)); });
            const TreeClass m = located(file, [&] { return canonicalize(normal_form(g)); });
            out.text << "flat " << to_string(g) << "\nmu   " << m.key() << "\n";
            out.data = {{"flat", to_string(g)}, {"mu", m.key()}};
        } else if (tr->parsed()) {
            const Document doc = load(file);
            std::string result;
            located(file, [&] {
                if (from == "mu") {
                    const MuCommand c = parse_mu_command(doc);
                    (void)type_of(c);
                    if (to == "mu") result = to_string(c);
                    else if (to == "comb") result = to_string(translate(c));
                    else result = phi(c).key();
                } else {
                    const Combinator k = parse_combinator(doc);
                    (void)type_of(k);
                    if (to == "comb") result = to_string(k);
                    else if (to == "mu") result = to_string(comb_to_mu(k));
                    else result = interpret(k, TreeModel{}).key();
                }
                return 0;
            });
            out.text << result << "\n";
            out.data = {{"from", from}, {"to", to}, {"result", result}};
        } else if (eval->parsed()) {
            const Document doc = load(file);
            const TreeClass c = located(file, [&] {
                const MuCommand m = parse_mu_command(doc);
                (void)type_of(m);
                return phi(m);
            });
            out.text << c.key() << "\n";
            out.data = {{"class", c.key()}};
        } else if (equiv->parsed()) {
            const Document da = load(file), db = load(file_b);
            const MuCommand a = located(file, [&] { return parse_mu_command(da); });
            const MuCommand b = located(file_b, [&] { return parse_mu_command(db); });
            const bool same = located(file, [&] { return mu_equiv(a, b); });
            out.text << (same ? "equivalent" : "not equivalent") << "\n";
            out.data = {{"equivalent", same}, {"a", phi(a).key()}, {"b", phi(b).key()}};
            if (!same) status = 1;
        } else if (dec->parsed()) {
            const Document doc = load(file);
            const VernonGraph g = located(file, [&] { return parse_tree(doc); });
            const Decomposition d = located(file, [&] { return decomposition(g, at); });
            out.text << "center " << to_string(g.corollas()[d.center]) << "\n";
            json pieces = json::array();
            for (const auto& p : d.pieces) {
                out.text << "at " << p.at.name() << " entry " << p.entry.name() << ": " << to_string(p.tree) << "\n";
                pieces.push_back({{"at", p.at.name()}, {"entry", p.entry.name()}, {"tree", to_string(p.tree)}});
            }
            out.data = {{"center", to_string(g.corollas()[d.center])}, {"pieces", pieces}};
        } else if (cmdof->parsed()) {
            const Document doc = load(file);
            const MuCommand c = located(file, [&] { return command_of(parse_tree(doc), at); });
            out.text << to_string(c) << "\n";
            out.data = {{"command", to_string(c)}};
        } else if (laws->parsed()) {
            LawOptions o;
            o.bound = bound ? *bound : default_bound();
            o.seed = seed;
            o.instances = instances;
            const auto reports = run_suite(suite, o);
            json js = json::array();
            for (const auto& r : reports) {
                print_report(out.text, r);
                for (const auto& l : r.results) {
                    js.push_back({{"suite", r.suite}, {"law", l.name}, {"instances", l.instances}, {"failures", l.failures},
                                  {"witness", l.witness}});
                }
                if (!r.ok()) status = 1;
            }
            out.data = {{"bound", o.bound}, {"seed", o.seed}, {"results", js}};
        } else if (dot->parsed()) {
            const Document doc = load(file);
            const std::string text = located(file, [&] { return to_dot(parse_tree(doc)); });
            if (out_path.empty()) {
                out.text << text;
            } else {
                std::ofstream f(out_path);
                if (!f) throw Failure{2, out_path + ": cannot write"};
                f << text;
            }
            out.data = {{"dot", text}};
        }
    } catch (const Failure& f) {
        if (as_json) {
            out.data["error"] = f.message;
            out.emit();
        }
        std::cerr << "vernon: " << f.message << "\n";
        return f.status;
    } catch (const Error& e) {
        std::cerr << "vernon: " << e.what() << "\n";
        return 2;
    }
    out.emit();
    return status;
}
