// atomkit_cli.cpp -- command line front end.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "atomkit/atoms.hpp"
#include "atomkit/bounds.hpp"
#include "atomkit/io.hpp"
#include "atomkit/operations.hpp"
#include "atomkit/oracle.hpp"
#include "atomkit/witness.hpp"

namespace {

using nlohmann::json;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

atomkit::Dfa load_dfa(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    json j = json::parse(in);
    return atomkit::dfa_from_json(j);
}

int resolve_jobs(int jobs) {
    if (jobs > 0)
        return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t random_suite_seed() {
    if (const char* env = std::getenv("ATOMKIT_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 1;
}

int run_witness(int n, const std::string& format, bool atomaton_out,
                const std::string& output) {
    if (atomaton_out) {
        if (n > 12)
            throw std::invalid_argument("--atomaton export is limited to n <= 12");
        atomkit::Atomaton a = atomkit::witness_atomaton_direct(n);
        write_output(format == "dot" ? atomkit::atomaton_to_dot(a)
                                     : atomkit::atomaton_to_json(a).dump(2),
                     output);
        return 0;
    }
    atomkit::Dfa d = atomkit::witness(n);
    write_output(format == "dot" ? atomkit::dfa_to_dot(d) : atomkit::dfa_to_json(d).dump(2),
                 output);
    return 0;
}

int run_atoms(std::optional<int> n, const std::string& input, bool as_json, int jobs) {
    atomkit::Dfa d = n ? atomkit::witness(*n) : load_dfa(input);

    atomkit::MinimalityReport mr = atomkit::check_minimal(d);
    if (!mr.minimal) {
        std::cerr << "input DFA is not minimal:";
        if (mr.merged_pair)
            std::cerr << " states " << mr.merged_pair->first << " and "
                      << mr.merged_pair->second << " are equivalent;";
        for (int q : mr.unreachable)
            std::cerr << " state " << q << " is unreachable;";
        std::cerr << '\n';
        return 2;
    }

    std::vector<atomkit::AtomReport> reports = atomkit::atom_complexities(d, jobs);
    if (as_json) {
        std::cout << atomkit::reports_to_json(reports).dump(2) << '\n';
        return 0;
    }

    std::cout << "P\tr\tcomplexity\tbound\ttight\n";
    int tight = 0, max_complexity = 0;
    for (const atomkit::AtomReport& rep : reports) {
        std::cout << atomkit::label_string(rep.label) << '\t' << rep.r << '\t'
                  << rep.complexity << '\t' << rep.bound.get_str() << '\t'
                  << (rep.tight ? "yes" : "no") << '\n';
        tight += rep.tight;
        max_complexity = std::max(max_complexity, rep.complexity);
    }
    std::cout << reports.size() << " atoms, " << tight << " tight, max complexity "
              << max_complexity << '\n';
    return 0;
}

int run_bounds(int n, std::optional<int> r, bool all) {
    if (r) {
        std::cout << atomkit::atom_bound(n, *r).get_str() << '\n';
        return 0;
    }
    if (!all)
        throw CLI::ValidationError("bounds", "pass --r R or --all");
    for (int rr = 0; rr <= n; ++rr)
        std::cout << "r=" << rr << ": " << atomkit::atom_bound(n, rr).get_str() << '\n';
    atomkit::MaxBound mb = atomkit::max_bound(n);
    std::cout << "max: r=" << mb.r << " " << mb.value.get_str() << '\n';
    if (n >= 2)
        std::cout << "ratio: " << atomkit::growth_ratio(n) << '\n';
    return 0;
}

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

int run_verify(int n, bool deep, bool as_json, int jobs) {
    using namespace atomkit;
    if (n == 8 && !deep)
        throw CLI::ValidationError("verify", "n = 8 needs --deep");

    std::vector<Check> checks;
    auto add = [&](std::string name, bool ok, std::string detail) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    };

    Dfa d = witness(n);
    Atomaton a = atomaton(d);

    {
        std::vector<AtomReport> reports = atom_complexities(d, jobs);
        int tight = 0, max_complexity = 0;
        for (const AtomReport& rep : reports) {
            tight += rep.tight;
            max_complexity = std::max(max_complexity, rep.complexity);
        }
        bool ok = tight == static_cast<int>(reports.size()) &&
                  max_complexity == max_bound(n).value;
        add("tightness", ok,
            std::to_string(tight) + "/" + std::to_string(reports.size()) +
                " atoms tight, max complexity " + std::to_string(max_complexity));
    }

    {
        bool ok = a.nfa.n == (1 << n);
        add("atom-count", ok,
            std::to_string(a.nfa.n) + " atoms, expected " + std::to_string(1 << n));
    }

    {
        int rev = determinize(reverse(d)).dfa.n;
        add("reversal-complexity", rev == (1 << n),
            "L^R needs " + std::to_string(rev) + " states");
    }

    {
        std::vector<StateSet> sigs = reachable_signatures(d);
        std::vector<StateSet> labels = a.labels;
        std::sort(labels.begin(), labels.end());
        add("signature-oracle", sigs == labels,
            std::to_string(sigs.size()) + " signatures vs " +
                std::to_string(labels.size()) + " labels");
    }

    add("direct-construction", same_labeled_nfa(witness_atomaton_direct(n), a),
        "transition rules agree with the pipeline");

    if (n <= (deep ? 7 : 6)) {
        std::uint64_t expected = 1;
        for (int i = 0; i < n; ++i)
            expected *= static_cast<std::uint64_t>(n);
        std::optional<std::uint64_t> size = semigroup_size(d, expected + 1);
        add("semigroup", size && *size == expected,
            (size ? std::to_string(*size) : std::string("cap exceeded")) + " of " +
                std::to_string(expected) + " transformations");
    }

    if (n <= (deep ? 7 : 6))
        add("minimality", verify_minimality_of_atom_dfas(d),
            "no atom DFA shrinks under the independent minimizer");

    if (n <= 4) {
        add("partition", partition_check(d, 6), "words up to length 6");
        bool ok = true;
        for (int i = 0; i < n; ++i)
            ok = ok && quotient_union_check(d, i);
        add("quotient-union", ok, "every quotient is the union of its atoms");
    }

    if (deep && n <= 6) {
        bool ok = true;
        std::string mismatch;
        for (const StateSet& label : a.labels) {
            int direct = tuple_product_atom_dfa(d, label).n;
            int pipeline = atom_dfa(a, label).n;
            if (direct != pipeline) {
                ok = false;
                mismatch = label_string(label) + ": " + std::to_string(direct) + " vs " +
                           std::to_string(pipeline);
                break;
            }
        }
        add("tuple-oracle", ok, ok ? "per-atom complexities agree" : mismatch);
    }

    if (deep) {
        std::uint64_t seed = random_suite_seed();
        std::mt19937_64 rng(seed);
        bool ok = true;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            Dfa rd = random_minimal_dfa(4, 2, rng);
            Atomaton ra = atomaton(rd);
            std::vector<StateSet> labels = ra.labels;
            std::sort(labels.begin(), labels.end());
            ok = ok && reachable_signatures(rd) == labels;
            for (const StateSet& label : ra.labels)
                ok = ok && tuple_product_atom_dfa(rd, label).n == atom_dfa(ra, label).n;
        }
        add("random-suite", ok, "10 random minimal DFAs, seed=" + std::to_string(seed));
    }

    bool all_ok = true;
    for (const Check& c : checks)
        all_ok = all_ok && c.ok;

    if (as_json || !all_ok) {
        json verdict;
        verdict["n"] = n;
        verdict["deep"] = deep;
        verdict["ok"] = all_ok;
        verdict["checks"] = json::array();
        for (const Check& c : checks)
            verdict["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        std::cout << verdict.dump(2) << '\n';
    }
    if (!as_json)
        for (const Check& c : checks)
            std::cout << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail << '\n';

    return all_ok ? 0 : 1;
}

int run_export(const std::string& input, const std::string& format,
               const std::string& output) {
    std::ifstream in(input);
    if (!in)
        throw std::runtime_error("cannot read " + input);
    json j = json::parse(in);
    std::variant<atomkit::Dfa, atomkit::Nfa> automaton = atomkit::automaton_from_json(j);

    std::string text;
    if (std::holds_alternative<atomkit::Dfa>(automaton)) {
        const atomkit::Dfa& d = std::get<atomkit::Dfa>(automaton);
        text = format == "dot" ? atomkit::dfa_to_dot(d) : atomkit::dfa_to_json(d).dump(2);
    } else {
        const atomkit::Nfa& m = std::get<atomkit::Nfa>(automaton);
        text = format == "dot" ? atomkit::nfa_to_dot(m) : atomkit::nfa_to_json(m).dump(2);
    }
    write_output(text, output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"atomkit: atoms of regular languages and their quotient complexity"};
    app.require_subcommand(1);

    auto* cmd_witness = app.add_subcommand("witness", "emit the witness DFA family");
    int w_n = 0;
    std::string w_format = "json", w_output;
    bool w_atomaton = false;
    cmd_witness->add_option("--n", w_n, "family index")->required()->check(CLI::Range(2, 64));
    cmd_witness->add_option("--format", w_format)->check(CLI::IsMember({"json", "dot"}));
    cmd_witness->add_flag("--atomaton", w_atomaton, "emit the atomaton instead of the DFA");
    cmd_witness->add_option("--output", w_output, "write to a file instead of stdout");

    auto* cmd_atoms = app.add_subcommand("atoms", "atom complexities of a minimal DFA");
    int a_n = -1, a_jobs = 0;
    std::string a_input;
    bool a_json = false;
    cmd_atoms->add_option("--n", a_n, "use the witness DFA (n = 9+ takes minutes)")
        ->check(CLI::Range(2, 12));
    cmd_atoms->add_option("--input", a_input, "DFA in the JSON automaton format");
    cmd_atoms->add_flag("--json", a_json);
    cmd_atoms->add_option("--jobs", a_jobs, "worker threads (0 = all cores)");

    auto* cmd_bounds = app.add_subcommand("bounds", "bound values f(n,r)");
    int b_n = 0, b_r = -1;
    bool b_all = false;
    cmd_bounds->add_option("--n", b_n)->required()->check(CLI::Range(1, 1000));
    auto* b_r_opt = cmd_bounds->add_option("--r", b_r);
    cmd_bounds->add_flag("--all", b_all, "every r plus max and ratio rows");

    auto* cmd_table = app.add_subcommand("table", "bound table with max and ratio rows");
    int t_max_n = 10;
    bool t_csv = false;
    cmd_table->add_option("--max-n", t_max_n)->check(CLI::Range(1, 100));
    cmd_table->add_flag("--csv", t_csv);

    auto* cmd_verify = app.add_subcommand("verify", "pipeline vs oracle suite");
    int v_n = 0, v_jobs = 0;
    bool v_deep = false, v_json = false;
    cmd_verify->add_option("--n", v_n)->required()->check(CLI::Range(2, 8));
    cmd_verify->add_flag("--deep", v_deep, "enable n = 8 and the tuple oracle");
    cmd_verify->add_flag("--json", v_json, "machine-readable verdict");
    cmd_verify->add_option("--jobs", v_jobs, "worker threads (0 = all cores)");

    auto* cmd_export = app.add_subcommand("export", "convert an automaton file");
    std::string e_input, e_format = "dot", e_output;
    cmd_export->add_option("--input", e_input)->required();
    cmd_export->add_option("--format", e_format)->check(CLI::IsMember({"json", "dot"}));
    cmd_export->add_option("--output", e_output);

    try {
        app.parse(argc, argv);

        if (cmd_witness->parsed())
            return run_witness(w_n, w_format, w_atomaton, w_output);
        if (cmd_atoms->parsed()) {
            if ((a_n >= 0) == !a_input.empty())
                throw CLI::ValidationError("atoms", "pass exactly one of --n and --input");
            return run_atoms(a_n >= 0 ? std::optional<int>(a_n) : std::nullopt, a_input,
                             a_json, resolve_jobs(a_jobs));
        }
        if (cmd_bounds->parsed())
            return run_bounds(b_n, *b_r_opt ? std::optional<int>(b_r) : std::nullopt, b_all);
        if (cmd_table->parsed()) {
            std::cout << atomkit::render_bound_table(t_max_n, t_csv);
            return 0;
        }
        if (cmd_verify->parsed())
            return run_verify(v_n, v_deep, v_json, resolve_jobs(v_jobs));
        if (cmd_export->parsed())
            return run_export(e_input, e_format, e_output);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
