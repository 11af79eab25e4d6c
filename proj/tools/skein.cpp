#include "skein/errors.hpp"
#include "skein/invariants.hpp"
#include "skein/stability.hpp"
#include "skein/tl.hpp"
#include "skein/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "json.hpp"

using namespace skein;

namespace {

struct Budget {
    int threads = 0;
    std::size_t max_states = 5'000'000;
    std::size_t max_networks = 100'000;
    int max_crossings = 20;
    std::string cache_dir;

    InvariantOptions options() const {
        InvariantOptions o;
        o.threads = threads;
        o.max_states = max_states;
        o.max_networks = max_networks;
        o.max_crossings = max_crossings;
        return o;
    }
};

class FlagError : public std::runtime_error {
public:
    FlagError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

template <class F>
auto at_flag(const std::string& flag, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const FlagError&) {
        throw;
    } catch (const std::exception& e) {
        throw FlagError(flag, e.what());
    }
}

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw ParseError("bad integer '" + item + "'", 0);
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty list", 0);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Source {
    std::string pretzel, pd, json;

    void add_to(CLI::App* app) {
        app->add_option("--pretzel", pretzel, "Pretzel twist counts, e.g. 8,6,3");
        app->add_option("--pd", pd, "File holding PD[X[...],...] with optional Regions[...]");
        app->add_option("--json", json, "Diagram JSON file");
    }
    LinkDiagram load() const {
        const int given = !pretzel.empty() + !pd.empty() + !json.empty();
        if (given != 1) throw FlagError("--pretzel/--pd/--json", "give exactly one diagram source");
        if (!pretzel.empty()) return at_flag("--pretzel", [&] { return skein::pretzel(int_list(pretzel)); });
        if (!pd.empty())
            return at_flag("--pd " + pd, [&] {
                auto d = parse_pd(read_file(pd));
                d.name = pd;
                return d;
            });
        return at_flag("--json " + json, [&] { return from_json(read_file(json)); });
    }
};

struct Family {
    std::string pretzel_family, color = "2", projector_color, range = "1..1", grading = "q";

    void add_to(CLI::App* app) {
        app->add_option("--pretzel-family", pretzel_family, "Region expressions in k, e.g. \"k+2,k+4,k+1\"")->required();
        app->add_option("--color", color, "Index N of J_N as an expression in k")->capture_default_str();
        app->add_option("--projector-color", projector_color, "Projector color n (J_{n+1}) as an expression in k");
        app->add_option("--range", range, "k range a..b")->capture_default_str();
    }
    FamilySpec spec() const {
        FamilySpec s = at_flag("--pretzel-family", [&] { return FamilySpec::pretzel_family("P(" + pretzel_family + ")"); });
        if (!projector_color.empty()) {
            s.color = at_flag("--projector-color", [&] { return FamilyExpr::parse(projector_color); });
            s.index = ColorIndex::Projector;
        } else {
            s.color = at_flag("--color", [&] { return FamilyExpr::parse(color); });
        }
        at_flag("--range", [&] {
            const auto dots = range.find("..");
            if (dots == std::string::npos) throw ParseError("expected a..b", 0);
            s.k_min = std::stoi(range.substr(0, dots));
            s.k_max = std::stoi(range.substr(dots + 2));
            if (s.k_min > s.k_max) throw RangeError("empty range " + range);
        });
        s.grading = grading == "A" ? Grading::AUnits : Grading::QUnits;
        at_flag("--pretzel-family", [&] { s.validate(); });
        return s;
    }
};

std::string join(const std::vector<long long>& v, const std::string& sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

int cmd_bracket(const Source& src, int color, int jones, const std::string& pipeline, const std::string& format,
                const Budget& b) {
    const LinkDiagram d = src.load();
    const auto opts = b.options();
    LaurentPoly value;
    std::string used;
    if (jones) {
        value = reduced_jones_poly(d, jones, opts);
        used = "reduced J_" + std::to_string(jones);
    } else {
        BracketValue v;
        if (pipeline == "state-sum") v = color == 1 ? bracket_state_sum(d, opts) : colored_state_sum(d, color, opts);
        else if (pipeline == "fused") v = colored_bracket_fused(d, color, opts);
        else v = unreduced_colored_jones(d, color, opts);
        value = v.value;
        used = v.pipeline;
    }
    std::optional<int> predicted;
    std::string note;
    if (!jones) {
        try {
            predicted = predicted_min_degree(d, color);
        } catch (const PreconditionError& e) {
            note = e.what();
        }
    }
    const bool zero = value.is_zero();
    if (format == "json") {
        nlohmann::json j{{"diagram", d.name}, {"color", color}, {"pipeline", used}, {"value", value.to_string()}};
        if (jones) j["q"] = substitute_quarter(value).to_string();
        if (!zero) j["min_degree"] = min_degree(value);
        if (predicted) j["predicted_min_degree"] = *predicted;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << d.name << " [" << used << "]\n" << value.to_string() << "\n";
        if (jones) std::cout << "q: " << substitute_quarter(value).to_string() << "\n";
        if (!zero) std::cout << "min degree " << min_degree(value) << "\n";
        if (predicted)
            std::cout << "predicted -c n^2 - 2n|s_-| = " << *predicted
                      << (!zero && *predicted == min_degree(value) ? "  ok" : "  MISMATCH") << "\n";
        else if (!note.empty())
            std::cout << "no prediction: " << note << "\n";
    }
    return 0;
}

int cmd_table(const Family& fam, const std::string& window, const std::string& format, const Budget& b) {
    const FamilySpec spec = fam.spec();
    const FamilyExpr w = at_flag("--window", [&] { return FamilyExpr::parse(window); });
    struct Row {
        int k;
        std::string link;
        int jones;
        CoeffList coeffs;
    };
    std::vector<Row> rows;
    for (int k = spec.k_min; k <= spec.k_max; ++k) {
        const long long len = w(k);
        if (len < 1) throw FlagError("--window", "window " + std::to_string(len) + " at k = " + std::to_string(k));
        const auto d = spec.member(k);
        const int n = spec.projector_color(k);
        rows.push_back({k, d.name, n + 1,
                        normalize(invariant_window(d, n, Grading::QUnits, static_cast<std::size_t>(len), b.options()))});
    }
    if (format == "csv") {
        std::cout << "k,link,N,coefficients\n";
        for (const auto& r : rows) std::cout << r.k << ",\"" << r.link << "\"," << r.jones << ",\"" << join(r.coeffs.coeffs) << "\"\n";
    } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back({{"k", r.k}, {"link", r.link}, {"N", r.jones}, {"coefficients", r.coeffs.coeffs}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : rows) std::cout << "k=" << r.k << "  " << r.link << "  J_" << r.jones << ": " << join(r.coeffs.coeffs, ", ") << "\n";
    }
    return 0;
}

int cmd_tail(const Family& fam, const std::string& rate, const std::string& format, const Budget& b) {
    const FamilySpec spec = fam.spec();
    const FamilyExpr f = at_flag("--rate", [&] { return FamilyExpr::parse(rate); });
    const StabilityReport rep = family_tail(spec, f, b.options());
    if (format == "json") {
        std::cout << rep.to_json() << "\n";
    } else {
        std::cout << rep.to_text();
        for (const auto& s : rep.steps)
            if (!s.pass)
                std::cout << "  witness at " << s.left << ": " << join(normalize(s.left_window).coeffs) << " vs "
                          << join(normalize(s.right_window).coeffs) << "\n";
    }
    return rep.passed() ? 0 : 1;
}

int cmd_higher(const Family& fam, const std::string& rate, int levels, const Budget& b) {
    const FamilySpec spec = fam.spec();
    const FamilyExpr f = at_flag("--rate", [&] { return FamilyExpr::parse(rate); });
    const StabilityReport rep = family_tail(spec, f, b.options());
    std::cout << "level 0 tail: " << join(rep.tail.coeffs) << (rep.passed() ? "" : "  (rate not verified)") << "\n";
    // members minus the tail, leading zeros dropped, then compared again
    std::vector<std::vector<long long>> rest;
    for (int k = spec.k_min; k <= spec.k_max; ++k) {
        auto w = normalize(invariant_window(spec.member(k), spec.projector_color(k), Grading::QUnits,
                                            static_cast<std::size_t>(std::max<long long>(1, f(k))) + 4, b.options()))
                     .coeffs;
        rest.push_back(w);
    }
    std::vector<long long> tail = rep.tail.coeffs;
    for (int level = 1; level <= levels; ++level) {
        std::vector<CoeffList> diffs;
        for (auto& w : rest) {
            // the tail is only known to its verified length
            std::vector<long long> d(std::min(w.size(), tail.size()));
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = w[i] - tail[i];
            auto first = std::find_if(d.begin(), d.end(), [](long long x) { return x != 0; });
            CoeffList c;
            c.coeffs.assign(first, d.end());
            diffs.push_back(c);
        }
        std::cout << "level " << level << ":\n";
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            std::cout << "  k=" << spec.k_min + static_cast<int>(i) << ": " << join(diffs[i].coeffs);
            if (i + 1 < diffs.size()) std::cout << "  (agrees with next to " << stable_prefix(diffs[i], diffs[i + 1]) << ")";
            std::cout << "\n";
        }
        if (std::any_of(diffs.begin(), diffs.end(), [](const CoeffList& c) { return c.coeffs.empty(); })) break;
        for (auto& d : diffs)
            if (!d.coeffs.empty()) d = normalize(d);
        rest.clear();
        for (auto& d : diffs) rest.push_back(d.coeffs);
        tail = rest.back();
    }
    return 0;
}

int cmd_verify(const std::string& suite, bool stretch, const std::string& format, const Budget& b) {
    VerifyOptions opts;
    opts.invariants = b.options();
    opts.stretch = stretch;
    const SuiteResult r = run_suite(suite, opts);
    std::cout << (format == "json" ? r.to_json() + "\n" : r.to_text());
    return r.passed() ? 0 : 1;
}

int cmd_graph(const Source& src, bool reduced, bool plus) {
    const LinkDiagram d = src.load();
    StateGraph g = plus ? plus_graph(d) : minus_graph(d);
    if (reduced) g = g.reduce();
    std::cout << g.to_dot(plus ? (reduced ? "G_plus_reduced" : "G_plus") : (reduced ? "G_minus_reduced" : "G_minus"));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman bracket, colored Jones and tail stability toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Budget budget;
    app.add_option("--threads", budget.threads, "Worker threads (default: SKEIN_THREADS or all cores)");
    app.add_option("--max-states", budget.max_states, "Cap on simultaneous contraction states")->capture_default_str();
    app.add_option("--max-networks", budget.max_networks, "Cap on colored states / fusion terms")->capture_default_str();
    app.add_option("--max-crossings", budget.max_crossings, "Cap on crossings for the classical state sum")->capture_default_str();
    app.add_option("--cache-dir", budget.cache_dir, "Directory for the persistent projector cache");
    std::string format = "text";
    app.add_option("--format", format, "Output format")->capture_default_str()->check(CLI::IsMember({"text", "csv", "json"}));

    Source bsrc;
    int color = 1, jones = 0;
    std::string pipeline = "auto";
    auto* bracket = app.add_subcommand("bracket", "Colored Kauffman bracket or reduced colored Jones of a diagram");
    bsrc.add_to(bracket);
    bracket->add_option("--color,-n", color, "Projector color n of the cabling")->capture_default_str()->check(CLI::PositiveNumber);
    bracket->add_option("--jones", jones, "Print the reduced J_N instead (N >= 2)");
    bracket->add_option("--pipeline", pipeline, "auto, fused or state-sum")->capture_default_str()
        ->check(CLI::IsMember({"auto", "fused", "state-sum"}));

    Family tfam;
    std::string window = "k+1";
    auto* table = app.add_subcommand("table", "Normalized lowest coefficients of J_N along a pretzel family");
    tfam.add_to(table);
    table->add_option("--window", window, "Number of coefficients, expression in k")->capture_default_str();

    Family lfam;
    std::string rate = "k+1";
    auto* tail = app.add_subcommand("tail", "Verify P_k ~ P_{k+1} at the given rate and report the tail");
    lfam.add_to(tail);
    tail->add_option("--rate", rate, "Rate of stability, expression in k")->capture_default_str();
    tail->add_option("--grading", lfam.grading, "q (reduced J_N) or A (unreduced bracket)")->capture_default_str()
        ->check(CLI::IsMember({"q", "A"}));

    std::string suite;
    bool stretch = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_flag("--stretch", stretch, "Include the high-color rows of the fourth table");

    Source gsrc;
    std::string emit = "dot";
    bool reduced = false, plus = false;
    auto* graph = app.add_subcommand("graph", "Emit the all-B (or all-A) state graph");
    gsrc.add_to(graph);
    graph->add_option("--emit", emit, "Output format")->capture_default_str()->check(CLI::IsMember({"dot"}));
    graph->add_flag("--reduced", reduced, "Merge parallel edges");
    graph->add_flag("--plus", plus, "Use the all-A state instead");

    Family hfam;
    std::string hrate = "k+1";
    int levels = 1;
    auto* higher = app.add_subcommand("experimental-higher", "Subtract the tail and look for stability again");
    hfam.add_to(higher);
    higher->add_option("--rate", hrate, "Rate of the first level")->capture_default_str();
    higher->add_option("--levels", levels, "Levels to iterate")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    try {
        if (!budget.cache_dir.empty()) set_projector_cache_dir(budget.cache_dir);
        if (*bracket) return cmd_bracket(bsrc, color, jones, pipeline, format, budget);
        if (*table) return cmd_table(tfam, window, format, budget);
        if (*tail) return cmd_tail(lfam, rate, format, budget);
        if (*verify) return cmd_verify(suite, stretch, format, budget);
        if (*graph) return cmd_graph(gsrc, reduced, plus);
        if (*higher) return cmd_higher(hfam, hrate, levels, budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
