/*
 * Copyright 2026 The polygame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "polygame/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polygame/additive.hpp"
#include "polygame/exponential.hpp"
#include "polygame/io.hpp"
#include "polygame/laws.hpp"
#include "polygame/smcc.hpp"
#include "polygame/synthesis.hpp"

namespace polygame::cli {

namespace {

using io::Document;
using io::DocKind;
using io::Json;

struct Flags {
    std::size_t max_enum = Limits{}.max_enum;
    std::size_t bound = 2;
    std::size_t search_bound = Limits{}.search_bound;
    std::size_t k = 2;
    std::size_t cases = 20;
    std::uint64_t seed = 0;
    std::string format = "compact";
    std::string mode = "full";
    std::string side = "alfred";
    std::string suite = "all";
    bool region = false;
    std::vector<std::string> files;

    Limits limits() const { return Limits{max_enum, search_bound}; }
};

Document load(const std::string& path)
{
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ValidationError("cannot read '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return io::parse(text);
    } catch (const Error& e) {
        // Keep the original class so the exit code is unchanged.
        if (dynamic_cast<const SizingError*>(&e))
            throw;
        throw ValidationError(path + ": " + e.what());
    }
}

GameRef load_game(const std::string& path)
{
    Document d = load(path);
    if (d.kind != DocKind::game)
        throw ValidationError(path + ": expected a game document, got " + io::kind_name(d.kind));
    return share(std::move(std::get<Game>(d.payload)));
}

Simulation load_sim(const std::string& path, bool validate = true)
{
    Document d = load(path);
    if (d.kind != DocKind::simulation)
        throw ValidationError(path + ": expected a simulation document, got " + io::kind_name(d.kind));
    Simulation s = std::move(std::get<Simulation>(d.payload));
    if (validate) {
        auto diags = check_simulation(s);
        if (!diags.empty())
            throw ValidationError(path + ": invalid simulation: " + diags.front().to_string());
    }
    return s;
}

void need_files(const Flags& f, std::size_t n, const std::string& usage)
{
    if (f.files.size() != n)
        throw ValidationError("expected " + std::to_string(n) + " input file(s): " + usage);
}

Json diagnostics_json(const Diagnostics& d)
{
    Json a = Json::array();
    for (const auto& x : d)
        a.push_back(x.to_string());
    return a;
}

int emit(const Document& d, const Flags& f, std::ostream& out)
{
    out << io::print(d, f.format == "pretty");
    return ok;
}

int dispatch(const std::string& cmd, const Flags& f, std::ostream& out, std::ostream& err)
{
    const Limits lim = f.limits();
    if (cmd == "validate") {
        need_files(f, 1, "validate FILE");
        Document d = load(f.files[0]);
        Diagnostics diags;
        if (d.kind == DocKind::simulation)
            diags = check_simulation(std::get<Simulation>(d.payload));
        for (const auto& x : diags)
            err << x.to_string() << "\n";
        emit(io::make_report(Json{{"command", "validate"},
                                  {"kind", io::kind_name(d.kind)},
                                  {"valid", diags.empty()},
                                  {"diagnostics", diagnostics_json(diags)}}),
             f, out);
        return diags.empty() ? ok : validation;
    }
    if (cmd == "tensor") {
        need_files(f, 2, "tensor P Q");
        return emit(io::make_document(tensor(*load_game(f.files[0]), *load_game(f.files[1]))), f, out);
    }
    if (cmd == "lollipop") {
        need_files(f, 2, "lollipop P Q");
        return emit(io::make_document(lollipop(*load_game(f.files[0]), *load_game(f.files[1]), lim)), f, out);
    }
    if (cmd == "dual") {
        need_files(f, 1, "dual P");
        return emit(io::make_document(dual(*load_game(f.files[0]), lim)), f, out);
    }
    if (cmd == "oplus") {
        need_files(f, 2, "oplus P Q");
        return emit(io::make_document(oplus(*load_game(f.files[0]), *load_game(f.files[1]))), f, out);
    }
    if (cmd == "bang") {
        need_files(f, 1, "bang P");
        return emit(io::make_document(bang(*load_game(f.files[0]), f.bound, lim)), f, out);
    }
    if (cmd == "power") {
        need_files(f, 1, "power P");
        return emit(io::make_document(power_game(*load_game(f.files[0]), f.k, lim)), f, out);
    }
    if (cmd == "compose") {
        need_files(f, 2, "compose S T");
        return emit(io::make_document(compose(load_sim(f.files[0]), load_sim(f.files[1]))), f, out);
    }
    if (cmd == "check-sim") {
        need_files(f, 1, "check-sim S");
        Simulation s = load_sim(f.files[0], false);
        auto diags = check_simulation(s);
        for (const auto& x : diags)
            err << x.to_string() << "\n";
        emit(io::make_report(
                 Json{{"command", "check-sim"}, {"valid", diags.empty()}, {"diagnostics", diagnostics_json(diags)}}),
             f, out);
        return diags.empty() ? ok : validation;
    }
    if (cmd == "equiv") {
        need_files(f, 2, "equiv S T");
        EquivMode mode = f.mode == "span" ? EquivMode::span_only : EquivMode::full;
        auto iso = equivalent(load_sim(f.files[0]), load_sim(f.files[1]), mode, lim);
        Json report{{"command", "equiv"}, {"mode", f.mode}, {"equivalent", iso.has_value()}};
        if (iso) {
            Json fwd = Json::object();
            for (const auto& [a, b] : iso->forward)
                fwd[to_string(a)] = io::element_to_json(b);
            report["forward"] = fwd;
        }
        return emit(io::make_report(report), f, out);
    }
    if (cmd == "curry") {
        need_files(f, 3, "curry S P1 P2");
        return emit(io::make_document(curry(load_sim(f.files[0]), load_game(f.files[1]), load_game(f.files[2]), lim)),
                    f, out);
    }
    if (cmd == "uncurry") {
        need_files(f, 3, "uncurry S P2 P3");
        return emit(io::make_document(uncurry(load_sim(f.files[0]), load_game(f.files[1]), load_game(f.files[2]))), f,
                    out);
    }
    if (cmd == "synth") {
        need_files(f, 1, "synth P");
        GameRef p = load_game(f.files[0]);
        bool alfred = f.side == "alfred";
        if (f.region)
            return emit(io::make_document(alfred ? alfred_region(*p) : dominic_region(*p)), f, out);
        return emit(io::make_document(alfred ? alfred_strategy(p) : dominic_strategy(p)), f, out);
    }
    if (cmd == "max-sim") {
        need_files(f, 2, "max-sim P Q");
        return emit(io::make_document(max_simulation(load_game(f.files[0]), load_game(f.files[1]))), f, out);
    }
    if (cmd == "factor-power") {
        need_files(f, 2, "factor-power S P");
        return emit(io::make_document(
                        factor_through_power(load_sim(f.files[0]), load_game(f.files[1]), f.k, std::nullopt, lim)),
                    f, out);
    }
    if (cmd == "laws") {
        std::vector<Game> games;
        for (const auto& path : f.files)
            games.push_back(*load_game(path));
        LawOptions opt;
        opt.seed = f.seed;
        opt.cases = f.cases;
        opt.bound = f.bound;
        opt.limits = lim;
        auto results = run_laws(f.suite, games, opt);
        bool passed = std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.ok(); });
        Json rows = Json::array();
        for (const auto& r : results) {
            Json row{{"suite", r.suite}, {"law", r.law},         {"cases", r.cases},
                     {"failures", r.failures}, {"skipped", r.skipped}};
            if (!r.ok()) {
                row["counterexample"] = r.counterexample;
                Json ev = Json::array();
                for (const auto& s : r.evidence)
                    ev.push_back(io::simulation_to_json(s));
                row["evidence"] = ev;
                err << r.suite << ": " << r.law << ": " << r.counterexample << "\n";
            }
            rows.push_back(row);
        }
        emit(io::make_report(Json{{"command", "laws"},
                                  {"suite", f.suite},
                                  {"seed", f.seed},
                                  {"passed", passed},
                                  {"results", rows}}),
             f, out);
        return passed ? ok : counterexample;
    }
    throw ValidationError("unknown command '" + cmd + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite polynomial games: constructions, simulations and law checks", "polygame"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    app.add_option("--max-enum", f.max_enum, "Largest function space enumerated per state");
    app.add_option("--bound", f.bound, "Truncation bound K for the exponential");
    auto* sb = app.add_option("--search-bound", f.search_bound, "Largest apex searched for isomorphisms");
    app.add_option("--k", f.k, "Arity of the symmetric power");
    app.add_option("--format", f.format, "Output layout")->check(CLI::IsMember({"compact", "pretty"}));

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"validate", "Parse and validate a document"},
        {"tensor", "Tensor product of two games"},
        {"lollipop", "Internal hom of two games"},
        {"dual", "Linear negation of a game"},
        {"oplus", "Biproduct of two games"},
        {"bang", "Exponential, truncated at --bound"},
        {"power", "Symmetric power of arity --k"},
        {"compose", "Compose two simulations"},
        {"check-sim", "Check a simulation and list violations"},
        {"equiv", "Search for an equivalence of two simulations"},
        {"curry", "Curry a simulation out of a tensor"},
        {"uncurry", "Uncurry a simulation into a lollipop"},
        {"synth", "Non-losing strategy or region for one player"},
        {"max-sim", "Maximal simulation between two games"},
        {"factor-power", "Factor a symmetric simulation through the power"},
        {"laws", "Run law suites on games and random inputs"},
    };
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("files", f.files, "Input documents ('-' for standard input)");
        std::string name = c.name;
        if (name == "equiv")
            sub->add_option("--mode", f.mode, "Equivalence mode")->check(CLI::IsMember({"full", "span"}));
        if (name == "synth") {
            sub->add_option("--side", f.side, "Player")->check(CLI::IsMember({"alfred", "dominic"}));
            sub->add_flag("--region", f.region, "Print the winning region instead of a strategy");
        }
        if (name == "laws") {
            sub->add_option("--suite", f.suite, "Suite name or 'all'");
            sub->add_option("--seed", f.seed, "Random seed");
            sub->add_option("--cases", f.cases, "Random cases per law");
        }
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return validation;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    // Law checks default to a larger search bound than single queries.
    if (cmd == "laws" && sb->count() == 0)
        f.search_bound = LawOptions{}.limits.search_bound;

    try {
        return dispatch(cmd, f, out, err);
    } catch (const SizingError& e) {
        err << "sizing: " << e.what() << "\n";
        return sizing;
    } catch (const SearchRefused& e) {
        err << "sizing: " << e.what() << "\n";
        return sizing;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return validation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return validation;
    }
}

} // namespace polygame::cli
