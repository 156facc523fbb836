#include "fuzzyahp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "fuzzyahp/composition.hpp"
#include "fuzzyahp/error.hpp"
#include "fuzzyahp/paper_reference.hpp"
#include "fuzzyahp/solver.hpp"
#include "fuzzyahp/study_io.hpp"
#include "fuzzyahp/survey.hpp"
#include "json.hpp"

namespace fahp::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fixed(double v, int precision = 6) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(precision) << v;
    return ss.str();
}

std::string sci(double v) {
    std::ostringstream ss;
    ss << std::scientific << std::setprecision(2) << v;
    return ss.str();
}

std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

struct Table {
    std::vector<std::string> header;
    /// right-aligned columns
    std::vector<bool> numeric;
    std::vector<std::vector<std::string>> rows;

    void print(std::ostream& out) const {
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) {
            width[c] = display_width(header[c]);
            for (const auto& r : rows) width[c] = std::max(width[c], display_width(r[c]));
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string text;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const std::string pad(width[c] - display_width(cells[c]), ' ');
                text += "  " + (numeric[c] ? pad + cells[c] : cells[c] + pad);
            }
            while (!text.empty() && text.back() == ' ') text.pop_back();
            out << text << '\n';
        };
        line(header);
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        out << "  " << std::string(total - 2, '-') << '\n';
        for (const auto& r : rows) line(r);
    }
};

std::map<std::string, std::string> labels_of(const Node& root) {
    std::map<std::string, std::string> out;
    std::vector<const Node*> stack{&root};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        out[n->id] = n->label;
        for (const auto& c : n->children) stack.push_back(&c);
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + path + "'");
    f << text;
    if (!f) throw ValidationError("failed writing '" + path + "'");
}

int cmd_solve(const std::string& study_path, const std::string& out_path, double tol, bool no_timestamp,
              std::ostream& out) {
    const Study study = load_study(study_path);
    SolverConfig cfg = study.solver;
    if (tol > 0) cfg.bisection_tol = tol;
    cfg.check();

    const auto solved = solve_blocks(study.hierarchy, cfg);
    std::map<std::string, WeightMap> block_weights;
    for (const auto& [id, r] : solved) block_weights[id] = r.weight_map();
    const GlobalRanking ranking = compose_hierarchy(study.hierarchy, block_weights);
    const auto labels = labels_of(study.hierarchy.root);

    out << "Study: " << study.name << '\n';
    out << "Solver: lambda in [" << cfg.lambda_lo << ", " << cfg.lambda_cap << "], tolerance " << cfg.bisection_tol
        << ", weight floor " << cfg.weight_floor << "\n";
    for (const Node* node : internal_nodes(study.hierarchy.root)) {
        auto it = solved.find(node->id);
        if (it == solved.end()) continue;
        const SolveResult& r = it->second;
        out << "\nBlock " << node->id << (node->label.empty() ? "" : " (" + node->label + ")") << ": lambda "
            << fixed(r.lambda) << (r.clamped ? ", at cap" : "") << (r.consistent ? ", consistent" : ", inconsistent")
            << '\n';
        const auto ranks = rank(r.weight_map());
        Table t{{"Challenge", "Code", "Weight", "Rank", "Lambda"}, {false, false, true, true, true}, {}};
        for (std::size_t i = 0; i < r.items.size(); ++i)
            t.rows.push_back({labels.at(r.items[i]), r.items[i], fixed(r.weights[i]),
                              std::to_string(ranks.at(r.items[i])), fixed(r.lambda, 4)});
        t.print(out);
        if (r.non_unique)
            out << "  note: optimum not unique, a weight can move by up to " << fixed(r.face_width, 4)
                << " at this lambda\n";
    }

    out << "\nGlobal ranking\n";
    Table g{{"Challenge", "Code", "Category", "Category weight", "Local weight", "Global weight", "Rank"},
            {false, false, false, true, true, true, true},
            {}};
    double total = 0;
    for (const auto& row : ranking.rows) {
        g.rows.push_back({labels.at(row.leaf), row.leaf, row.category, fixed(row.category_weight),
                          fixed(row.local_weight), fixed(row.global_weight), std::to_string(row.rank)});
        total += row.global_weight;
    }
    g.print(out);
    out << "Sum of global weights: " << fixed(total) << '\n';

    if (!out_path.empty()) {
        ResultsDocument doc = make_results(study, solved, ranking, cfg);
        if (!no_timestamp) doc.timestamp = utc_timestamp();
        write_text(out_path, dump_results(doc));
        out << "Results written to " << out_path << '\n';
    }
    return kOk;
}

const char* sign_name(double v) { return v > 0 ? "+" : v < 0 ? "-" : "0"; }

int cmd_reproduce_paper(const std::string& out_path, std::ostream& out, std::ostream& err) {
    const Hierarchy h = paper_study();
    const PaperReference& ref = paper_reference();
    const auto labels = labels_of(h.root);

    const auto solved = solve_blocks(h, {});
    std::map<std::string, WeightMap> computed_blocks, printed_blocks;
    for (const auto& [id, r] : solved) {
        const double sum = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
        if (std::abs(sum - 1) > 1e-9)
            throw Error("block '" + id + "' weights sum to " + sci(sum) + ", expected 1 within 1e-9");
        computed_blocks[id] = r.weight_map();
    }
    for (const auto& [block, items] : ref.block_weights) printed_blocks[block] = WeightMap(items.begin(), items.end());

    const GlobalRanking from_solver = compose_hierarchy(h, computed_blocks);
    const GlobalRanking from_printed = compose_hierarchy(h, printed_blocks);

    json report;
    out << "Reproduction of the supply chain 4.0 study from its printed comparison matrices\n";

    out << "\nBlock consistency index (lambda)\n";
    Table lt{{"Block", "Printed", "Computed", "Delta", "Printed sign", "Computed sign"},
             {false, true, true, true, false, false},
             {}};
    json lambda_rows = json::array();
    for (const auto& [block, items] : ref.block_weights) {
        const double printed = ref.block_lambda.at(block);
        const double computed = solved.at(block).lambda;
        lt.rows.push_back({block, fixed(printed, 4), fixed(computed), fixed(std::abs(computed - printed)),
                           sign_name(printed), sign_name(computed)});
        lambda_rows.push_back({{"block", block},
                               {"printed", printed},
                               {"computed", computed},
                               {"delta", std::abs(computed - printed)},
                               {"clamped", solved.at(block).clamped}});
    }
    lt.print(out);
    report["lambda"] = lambda_rows;

    out << "\nLocal weights\n";
    Table wt{{"Block", "Challenge", "Code", "Printed", "Computed", "Delta"}, {false, false, false, true, true, true}, {}};
    json weight_rows = json::array();
    double worst_local = 0;
    for (const auto& [block, items] : ref.block_weights) {
        for (const auto& [id, printed] : items) {
            const double computed = computed_blocks.at(block).at(id);
            const double delta = std::abs(computed - printed);
            worst_local = std::max(worst_local, delta);
            wt.rows.push_back({block, labels.at(id), id, fixed(printed), fixed(computed), fixed(delta)});
            weight_rows.push_back(
                {{"block", block}, {"item", id}, {"printed", printed}, {"computed", computed}, {"delta", delta}});
        }
    }
    wt.print(out);
    report["local_weights"] = weight_rows;

    out << "\nGlobal weights (printed: table value; composed: printed block weights multiplied;"
           " solver: computed block weights multiplied)\n";
    Table gt{{"Code", "Printed", "Composed", "Delta", "Solver", "Delta", "Printed rank", "Composed rank", "Solver rank"},
             {false, true, true, true, true, true, true, true, true},
             {}};
    json global_rows = json::array();
    double worst_identity = 0;
    for (const auto& row : from_printed.rows) {
        const double printed = ref.global_weight.at(row.leaf);
        const auto& solver_row = from_solver.row(row.leaf);
        const double identity_delta = std::abs(row.global_weight - printed);
        worst_identity = std::max(worst_identity, identity_delta);
        gt.rows.push_back({row.leaf, fixed(printed), fixed(row.global_weight), sci(identity_delta),
                           fixed(solver_row.global_weight), fixed(std::abs(solver_row.global_weight - printed)),
                           std::to_string(ref.global_rank.at(row.leaf)), std::to_string(row.rank),
                           std::to_string(solver_row.rank)});
        global_rows.push_back({{"leaf", row.leaf},
                               {"printed", printed},
                               {"composed", row.global_weight},
                               {"composed_delta", identity_delta},
                               {"solver", solver_row.global_weight},
                               {"solver_delta", std::abs(solver_row.global_weight - printed)},
                               {"printed_rank", ref.global_rank.at(row.leaf)},
                               {"composed_rank", row.rank},
                               {"solver_rank", solver_row.rank}});
    }
    gt.print(out);
    report["global"] = global_rows;

    bool ranks_match = true;
    for (const auto& row : from_printed.rows) ranks_match = ranks_match && row.rank == ref.global_rank.at(row.leaf);
    const bool identity_ok = worst_identity <= 5e-6 && ranks_match;

    out << "\nComposition identity on printed block weights: max delta " << sci(worst_identity)
        << (identity_ok ? " (within 5e-6, ranks identical)" : " (FAILED)") << '\n';
    out << "Largest local weight deviation of the solver from the printed tables: " << fixed(worst_local) << '\n';
    out << "The printed block weights are not reachable from the printed matrices (the two-item block has a single"
           " judgment whose support excludes the printed ratio); deviations are reported, not asserted.\n";

    report["composition_identity"] = {{"max_delta", worst_identity}, {"ranks_match", ranks_match}, {"ok", identity_ok}};
    if (!out_path.empty()) {
        write_text(out_path, report.dump(2) + "\n");
        out << "Deviation report written to " << out_path << '\n';
    }
    if (!identity_ok) {
        err << "error: composition identity violated (max delta " << sci(worst_identity) << ")\n";
        return kInternal;
    }
    return kOk;
}

int cmd_oracle(const std::string& study_path, double step, std::ostream& out, std::ostream& err) {
    const Study study = load_study(study_path);
    const auto nodes = internal_nodes(study.hierarchy.root);
    for (const Node* n : nodes) {
        auto it = study.hierarchy.matrices.find(n->id);
        if (it != study.hierarchy.matrices.end() && it->second.items.size() > kOracleMaxItems)
            throw ArgumentError("block '" + n->id + "' has " + std::to_string(it->second.items.size()) +
                                " items; the oracle handles at most " + std::to_string(kOracleMaxItems));
    }

    Table t{{"Block", "Items", "Step", "Lambda solver", "Lambda oracle", "Lambda delta", "Max weight delta", "Status"},
            {false, true, true, true, true, true, true, false},
            {}};
    std::vector<std::string> breaches;
    for (const Node* n : nodes) {
        auto it = study.hierarchy.matrices.find(n->id);
        if (it == study.hierarchy.matrices.end()) continue;
        const ComparisonMatrix& m = it->second;
        const double used = step > 0 ? step : (m.items.size() >= 4 ? 0.01 : 0.005);
        const SolveResult r = solve_fpp(m, study.solver);
        const SolveResult o = oracle_solve(m, used);
        double dw = 0;
        for (std::size_t i = 0; i < r.weights.size(); ++i) dw = std::max(dw, std::abs(r.weights[i] - o.weights[i]));
        const double dl = std::abs(r.lambda - o.lambda);
        const bool ok = dl <= kOracleTolerance && dw <= kOracleTolerance;
        if (!ok) breaches.push_back(n->id);
        t.rows.push_back({n->id, std::to_string(m.items.size()), fixed(used, 4), fixed(r.lambda), fixed(o.lambda),
                          fixed(dl), fixed(dw), ok ? "ok" : "BREACH"});
    }
    out << "Solver versus exhaustive lattice search (tolerance " << kOracleTolerance << ")\n";
    t.print(out);
    if (!breaches.empty()) {
        std::string list;
        for (const auto& b : breaches) list += (list.empty() ? "" : ", ") + b;
        err << "error: oracle tolerance " << kOracleTolerance << " exceeded in block(s): " << list << '\n';
        return kOracleBreach;
    }
    return kOk;
}

int cmd_delphi(const std::vector<std::string>& files, double threshold, int max_rounds, std::ostream& out) {
    if (!(threshold > 0 && threshold <= 1)) throw ArgumentError("--threshold must be in (0, 1]");
    std::size_t count = files.size();
    if (max_rounds != 0) {
        if (max_rounds < 1 || static_cast<std::size_t>(max_rounds) > files.size())
            throw ArgumentError("--rounds must be between 1 and the number of ratings files (" +
                                std::to_string(files.size()) + ")");
        count = static_cast<std::size_t>(max_rounds);
    }
    std::vector<DelphiRatings> rounds;
    for (std::size_t k = 0; k < count; ++k) {
        std::ifstream in(files[k], std::ios::binary);
        if (!in) throw ValidationError("cannot open '" + files[k] + "'");
        rounds.push_back(read_ratings_csv(in, files[k]));
    }
    const auto retained = run_delphi(rounds, threshold);

    for (std::size_t k = 0; k < rounds.size(); ++k) {
        const DelphiRatings& r = rounds[k];
        const DelphiRoundResult res = delphi_round(r, threshold);
        out << (k ? "\n" : "") << "Round " << k + 1 << ": " << r.items().size() << " items, " << r.experts().size()
            << " experts, threshold " << fixed(threshold, 2) << '\n';
        Table t{{"Item", "Consensus", "Decision"}, {false, true, false}, {}};
        for (std::size_t i = 0; i < r.items().size(); ++i)
            t.rows.push_back({r.items()[i], fixed(r.consensus(i), 3),
                              res.accepted.count(r.items()[i]) ? "accepted" : "deferred"});
        t.print(out);
        out << "Accepted " << res.accepted.size() << ", deferred " << res.deferred.size() << '\n';
    }
    out << "\nRetained items (" << retained.size() << "):";
    for (const auto& id : retained) out << ' ' << id;
    out << '\n';
    return kOk;
}

int cmd_alpha(const std::string& path, std::ostream& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    const ItemResponses x = read_responses_csv(in, path);
    const double alpha = cronbach_alpha(x);
    out << "Cronbach's alpha: " << fixed(alpha) << " (k = " << x.item_count() << " items, N = " << x.respondent_count()
        << " respondents)\n";
    return kOk;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const SolverError*>(&e) || dynamic_cast<const StatisticError*>(&e)) return kUndefined;
    if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const ArgumentError*>(&e) ||
        dynamic_cast<const LookupError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
        dynamic_cast<const CompositionError*>(&e))
        return kInput;
    return kInternal;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy AHP priority derivation and survey utilities", "fuzzyahp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", FUZZYAHP_VERSION);

    std::string study_path, out_path;
    double tol = 0, step = 0, threshold = kDefaultDelphiThreshold;
    bool no_timestamp = false;
    int rounds = 0;
    std::vector<std::string> csv_files;
    std::string responses;

    auto* solve = app.add_subcommand("solve", "Solve every block of a study and compose the global ranking");
    solve->add_option("study", study_path, "Study document (JSON)")->required();
    solve->add_option("--out", out_path, "Write the results document here");
    solve->add_option("--tol", tol, "Bisection tolerance on lambda")->check(CLI::PositiveNumber);
    solve->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp from the results document");

    auto* reproduce = app.add_subcommand("reproduce-paper", "Compare the embedded case study with its printed results");
    reproduce->add_option("--out", out_path, "Write the deviation report (JSON) here");

    auto* oracle = app.add_subcommand("oracle", "Check the solver against exhaustive lattice search");
    oracle->add_option("study", study_path, "Study document (JSON)")->required();
    oracle->add_option("--step", step, "Lattice spacing (default 0.005, or 0.01 for 4-item blocks)");

    auto* delphi = app.add_subcommand("delphi", "Delphi consensus screening, one ratings file per round");
    delphi->add_option("ratings", csv_files, "Ratings CSV files (item,expert,rating), in round order")->required();
    delphi->add_option("--threshold", threshold, "Consensus fraction needed for acceptance");
    delphi->add_option("--rounds", rounds, "Use only the first k rounds");

    auto* alpha = app.add_subcommand("alpha", "Cronbach's alpha of a questionnaire");
    alpha->add_option("responses", responses, "Responses CSV (header of item ids)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*solve) return cmd_solve(study_path, out_path, tol, no_timestamp, out);
        if (*reproduce) return cmd_reproduce_paper(out_path, out, err);
        if (*oracle) return cmd_oracle(study_path, step, out, err);
        if (*delphi) return cmd_delphi(csv_files, threshold, rounds, out);
        if (*alpha) return cmd_alpha(responses, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

} // namespace fahp::cli
