#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "documents.hpp"
#include "wrec/closure.hpp"
#include "wrec/density.hpp"
#include "wrec/grammar.hpp"
#include "wrec/growth.hpp"
#include "wrec/regex.hpp"

namespace wrec::cli {

namespace {

// Prefix length used by --classify when N is shorter than the estimator needs.
constexpr std::size_t kClassifyLength = 64;

std::string read_text(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw ValidationError({"cannot open '" + path + "'"});
        buf << file.rdbuf();
    }
    return buf.str();
}

LanguageAutomaton load_automaton(const std::string& path, std::istream& in) {
    return automaton_from_json(parse_json(read_text(path, in)));
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

void print_words(std::ostream& out, const WordSet& words) {
    for (const auto& w : words) out << display_word(w) << '\n';
}

LanguageAutomaton deterministic(const LanguageAutomaton& a, std::ostream& err) {
    if (is_deterministic(a)) return a;
    LanguageAutomaton d = determinize(a);
    err << "note: input is nondeterministic; determinized " << a.size() << " states into " << d.size()
        << " states\n";
    return d;
}

template <Semiring S>
void print_reduced_table(std::ostream& out, const ReducedSystem<S>& reduced, std::size_t originals, std::size_t n) {
    const auto& sys = reduced.system;
    std::vector<std::vector<value_t<S>>> columns;
    out << 'n';
    for (std::size_t i = 0; i < originals; ++i) {
        out << '\t' << sys.labels()[reduced.index_of[i]];
        columns.push_back(evaluate_prefix(sys, reduced.index_of[i], n));
    }
    out << '\n';
    for (std::size_t t = 0; t <= n; ++t) {
        out << t;
        for (const auto& col : columns) out << '\t' << sys.semiring().format(col[t]);
        out << '\n';
    }
}

struct Options {
    std::string alphabet;
    std::string regex;
    std::string document = "-";
    std::vector<std::string> documents;
    std::string operation;
    std::string word;
    std::size_t n = 0;
    std::size_t max_words = 1'000'000;
    bool matrix_power = false;
    bool classify = false;
    bool density = false;
    std::optional<std::size_t> evaluate;
};

int dispatch(CLI::App& app, const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const WordLimits limits{o.max_words};
    auto got = [&](const char* name) { return app.get_subcommand(name)->parsed(); };

    if (got("compile")) {
        const Alphabet alphabet(o.alphabet);
        print_json(out, automaton_to_json(compile_regex(parse_regex(o.regex, alphabet), alphabet)));
    } else if (got("cross-section")) {
        print_words(out, cross_section(load_automaton(o.document, in), o.n, limits).words);
    } else if (got("enumerate")) {
        for (const auto& section : enumerate_up_to(load_automaton(o.document, in), o.n, limits)) {
            out << "# n=" << section.length << '\n';
            print_words(out, section.words);
        }
    } else if (got("member")) {
        const std::string word = o.word == "&" ? std::string() : o.word;
        out << (member(load_automaton(o.document, in), word) ? "true" : "false") << '\n';
    } else if (got("density")) {
        const LanguageAutomaton a = deterministic(load_automaton(o.document, in), err);
        const auto method = o.matrix_power ? DensityMethod::MatrixPower : DensityMethod::Step;
        const std::size_t length = o.classify ? std::max(o.n, kClassifyLength - 1) : o.n;
        const auto rho = density_prefix(a, length, method);
        for (std::size_t t = 0; t <= o.n; ++t) out << t << '\t' << rho[t] << '\n';
        if (o.classify) out << "class: " << estimate_growth(rho).to_string() << '\n';
    } else if (got("paths")) {
        out << behavior(path_counting(load_automaton(o.document, in)), o.n) << '\n';
    } else if (got("ops")) {
        const std::size_t want = o.operation == "star" ? 1 : 2;
        if (o.documents.size() != want) {
            throw ValidationError({"'ops " + o.operation + "' takes " + std::to_string(want) + " document(s), got " +
                                   std::to_string(o.documents.size())});
        }
        const LanguageAutomaton a = load_automaton(o.documents[0], in);
        if (o.operation == "star") {
            print_json(out, automaton_to_json(star(a)));
        } else {
            const LanguageAutomaton b = load_automaton(o.documents[1], in);
            print_json(out, automaton_to_json(o.operation == "union" ? unite(a, b) : concat(a, b)));
        }
    } else if (got("determinize")) {
        print_json(out, automaton_to_json(determinize(load_automaton(o.document, in))));
    } else if (got("grammar")) {
        out << format_grammar(to_grammar(load_automaton(o.document, in)));
    } else if (got("recurrence")) {
        const LanguageAutomaton a = load_automaton(o.document, in);
        if (o.density) {
            print_json(out, recurrence_to_json(density_system(deterministic(a, err)).system));
        } else {
            print_json(out, recurrence_to_json(automaton_to_recurrence(a.to_counting())));
        }
    } else if (got("reduce")) {
        const auto hs = higher_degree_from_json(parse_json(read_text(o.document, in)));
        std::visit(
            [&](const auto& system) {
                const auto reduced = reduce_to_first_order(system);
                if (o.evaluate) {
                    print_reduced_table(out, reduced, system.labels.size(), *o.evaluate);
                } else {
                    print_json(out, recurrence_to_json(reduced.system));
                }
            },
            hs);
    } else {
        err << app.help();
        return Invalid;
    }
    return Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted recurrences, counting automata and regular-language densities", "wrec"};
    app.require_subcommand(1);
    Options o;

    auto doc_arg = [&](CLI::App* sub) { sub->add_option("document", o.document, "automaton document (- for stdin)"); };
    auto doc_required = [&](CLI::App* sub) {
        sub->add_option("document", o.document, "automaton document (- for stdin)")->required();
    };
    auto max_words = [&](CLI::App* sub) {
        sub->add_option("--max-words", o.max_words, "guard on materialized words per step")->capture_default_str();
    };

    auto* compile = app.add_subcommand("compile", "compile a regular expression into an automaton document");
    compile->add_option("--alphabet", o.alphabet, "alphabet letters in order, e.g. ab")->required();
    compile->add_option("regex", o.regex, "regular expression")->required();

    auto* section = app.add_subcommand("cross-section", "words of length n, one per line");
    doc_required(section);
    section->add_option("n", o.n)->required();
    max_words(section);

    auto* enumerate = app.add_subcommand("enumerate", "cross-sections 0..N");
    doc_required(enumerate);
    enumerate->add_option("N", o.n)->required();
    max_words(enumerate);

    auto* mem = app.add_subcommand("member", "membership test; & is the empty word");
    doc_required(mem);
    mem->add_option("word", o.word)->required();

    auto* dens = app.add_subcommand("density", "density sequence rho(0..N)");
    doc_required(dens);
    dens->add_option("N", o.n)->required();
    dens->add_flag("--matrix-power", o.matrix_power, "evaluate each entry by matrix power");
    dens->add_flag("--classify", o.classify, "append a heuristic growth class");

    auto* paths = app.add_subcommand("paths", "number of successful paths of length n");
    doc_required(paths);
    paths->add_option("n", o.n)->required();

    auto* ops = app.add_subcommand("ops", "closure constructions");
    ops->add_option("operation", o.operation)->required()->check(CLI::IsMember({"union", "concat", "star"}));
    ops->add_option("documents", o.documents, "operand documents")->required();

    doc_arg(app.add_subcommand("determinize", "subset construction"));
    doc_arg(app.add_subcommand("grammar", "right-linear grammar"));

    auto* rec = app.add_subcommand("recurrence", "recurrence system of an automaton");
    doc_arg(rec);
    rec->add_flag("--density", o.density, "emit the cardinality system over the naturals");

    auto* reduce = app.add_subcommand("reduce", "reduce a higher-degree system to first order");
    reduce->add_option("document", o.document, "higher-degree document (- for stdin)");
    reduce->add_option("--evaluate", o.evaluate, "print original functions for n = 0..N instead");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return dispatch(app, o, in, out, err);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const ParseError& e) {
        err << "syntax error: " << e.what() << '\n';
        return Syntax;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << '\n';
        return Syntax;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return Guard;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed document: " << e.what() << '\n';
        return Syntax;
    }
}

} // namespace wrec::cli
