#include "evdec/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <CLI11.hpp>

#include "evdec/cli/format.hpp"
#include "evdec/cli/goal_file.hpp"
#include "evdec/classical.hpp"
#include "evdec/constructive.hpp"
#include "evdec/credal.hpp"
#include "evdec/preference.hpp"

namespace evdec::cli {

namespace {

bool is_one_of(const std::string& s, std::initializer_list<const char*> names) {
    return std::any_of(names.begin(), names.end(), [&](const char* n) { return s == n; });
}

double require_alpha(const CriterionParams& params, const std::string& criterion) {
    if (!params.alpha) throw UsageError("criterion '" + criterion + "' needs --alpha");
    return *params.alpha;
}

double require_beta(const CriterionParams& params, const std::string& criterion) {
    if (!params.beta) throw UsageError("criterion '" + criterion + "' needs --beta");
    return *params.beta;
}

template <class F>
std::vector<double> per_act(const DecisionProblem& p, F&& f) {
    std::vector<double> out;
    for (std::size_t i = 0; i < p.act_count(); ++i) out.push_back(f(i));
    return out;
}

void check_index_labels(const Json& doc, const DecisionProblem& p) {
    if (!doc.is_object()) throw ValidationError("pessimism index: expected an object");
    if (!doc.contains("pairs")) return;
    const Json& pairs = doc["pairs"];
    if (!pairs.is_array()) throw ValidationError("pessimism index: \"pairs\" must be a list");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const std::string f = "pairs[" + std::to_string(k) + "]";
        const Json& e = pairs[k];
        if (!e.is_object() || !e.contains("worst") || !e.contains("best") || !e.contains("alpha") ||
            !e["worst"].is_string() || !e["best"].is_string() || !e["alpha"].is_number()) {
            throw ValidationError("pessimism index: " + f + ": expected {\"worst\", \"best\", \"alpha\"}");
        }
        bool known = false;
        for (std::size_t i = 0; i < p.act_count() && !known; ++i) {
            const auto& labels = p.act(i).consequences().labels();
            known = std::find(labels.begin(), labels.end(), e["worst"].get<std::string>()) != labels.end() &&
                    std::find(labels.begin(), labels.end(), e["best"].get<std::string>()) != labels.end();
        }
        if (!known) throw ValidationError("pessimism index: " + f + ": unknown consequence pair");
    }
}

// Output helpers.

struct Out {
    OutputFormat format;
    std::ostream& os;
    std::string num(double x) const { return format_number(x, format); }
};

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

std::vector<std::string> names_of(const std::vector<std::string>& names, const ChoiceSet& set) {
    ChoiceSet sorted = set;
    std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    std::vector<std::string> out;
    for (std::size_t i : sorted) out.push_back(names[i]);
    return out;
}

std::string subset_label(const Frame& f, Subset s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t k : s.elements()) {
        if (!first) out += ", ";
        first = false;
        out += f.label(k);
    }
    return out + "}";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) line += ',';
        line += csv_field(cells[c]);
    }
    return line + '\n';
}

void print_rows(const Out& o, const std::vector<std::vector<std::string>>& rows) {
    if (o.format == OutputFormat::Csv) {
        for (const auto& r : rows) o.os << csv_line(r);
    } else {
        o.os << format_table(rows);
    }
}

// Commands.

struct Globals {
    OutputFormat format = OutputFormat::Text;
    double tolerance = 1e-9;
    bool emit_normalized = false;
};

void cmd_rank(const DecisionProblem& p, const std::string& criterion, const CriterionParams& params,
              const Globals& g, std::ostream& os) {
    const auto scores = score_acts(p, criterion, params);
    const auto ranked = rank_scores(scores, lower_is_better(criterion), g.tolerance);
    Out o{g.format, os};
    if (g.format == OutputFormat::Json) {
        Json j;
        j["criterion"] = criterion;
        Json par = Json::object();
        if (params.auto_alpha) par["alpha"] = "auto";
        else if (params.alpha) par["alpha"] = *params.alpha;
        if (params.beta) par["beta"] = *params.beta;
        j["parameters"] = std::move(par);
        j["order"] = lower_is_better(criterion) ? "ascending" : "descending";
        Json rows = Json::array();
        for (const auto& r : ranked) rows.push_back({{"act", p.act_names()[r.act]}, {"score", r.score}, {"rank", r.rank}});
        j["ranking"] = std::move(rows);
        print_json(os, j);
        return;
    }
    std::vector<std::vector<std::string>> rows{{"rank", "act", "score"}};
    for (const auto& r : ranked) rows.push_back({std::to_string(r.rank), p.act_names()[r.act], o.num(r.score)});
    print_rows(o, rows);
}

void cmd_choice(const DecisionProblem& p, const std::string& rule, const Globals& g, std::ostream& os) {
    const auto& names = p.act_names();
    const std::size_t n = p.act_count();
    Out o{g.format, os};
    Json j;
    j["rule"] = rule;
    std::vector<std::vector<std::string>> extra;
    ChoiceSet choice;

    if (rule == "interval-dominance" || rule == "interval-bound") {
        std::vector<double> lo, up;
        for (std::size_t i = 0; i < n; ++i) {
            const auto mu = p.lottery(i);
            const auto u = p.utility(i);
            lo.push_back(lower_expectation(mu, u));
            up.push_back(upper_expectation(mu, u));
        }
        const Relation r = rule == "interval-dominance" ? interval_dominance(lo, up) : interval_bound_dominance(lo, up);
        choice = maximal_elements(r);
        Json bounds = Json::array();
        extra.push_back({"act", "lower", "upper"});
        for (std::size_t i = 0; i < n; ++i) {
            bounds.push_back({{"act", names[i]}, {"lower", lo[i]}, {"upper", up[i]}});
            extra.push_back({names[i], o.num(lo[i]), o.num(up[i])});
        }
        j["bounds"] = std::move(bounds);
    } else if (rule == "maximality") {
        const auto gambles = p.gambles();
        const auto res = maximality_relation(gambles, p.require_mass(), g.tolerance);
        choice = res.choice;
        std::vector<std::string> head{""};
        for (const auto& nm : names) head.push_back(nm);
        extra.push_back(head);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> row{names[i]};
            for (std::size_t k = 0; k < n; ++k) row.push_back(i == k ? "-" : o.num(res.delta[i][k]));
            extra.push_back(row);
        }
        j["delta"] = {{"acts", names}, {"matrix", res.delta}};
    } else if (rule == "e-admissibility") {
        const auto gambles = p.gambles();
        EAdmissibilityOptions opt;
        opt.tolerance = std::max(opt.tolerance, g.tolerance);
        const auto members = e_admissible_set(gambles, p.require_mass(), opt);
        const auto& states = p.states().labels();
        std::vector<std::string> head{"act"};
        for (const auto& s : states) head.push_back(s);
        extra.push_back(head);
        Json wit = Json::array();
        for (const auto& m : members) {
            choice.push_back(m.index);
            std::vector<std::string> row{names[m.index]};
            Json prob = Json::object();
            for (std::size_t k = 0; k < states.size(); ++k) {
                row.push_back(o.num(m.witness[k]));
                prob[states[k]] = m.witness[k];
            }
            extra.push_back(row);
            wit.push_back({{"act", names[m.index]}, {"probability", prob}});
        }
        j["witnesses"] = std::move(wit);
    } else if (rule == "prune-dominated") {
        const auto res = prune_dominated(p.payoff_matrix());
        choice = res.survivors;
        Json dom = Json::array();
        for (const auto& [a, b] : res.dominance) {
            dom.push_back({{"dominating", names[a]}, {"dominated", names[b]}});
            extra.push_back({names[a], "dominates", names[b]});
        }
        j["dominance"] = std::move(dom);
    } else {
        throw UsageError("unknown rule '" + rule + "'");
    }

    if (g.format == OutputFormat::Json) {
        j["choice"] = names_of(names, choice);
        print_json(os, j);
        return;
    }
    if (g.format == OutputFormat::Csv) {
        os << "choice\n";
        for (const auto& nm : names_of(names, choice)) os << csv_field(nm) << '\n';
        if (!extra.empty()) {
            os << '\n';
            print_rows(o, extra);
        }
        return;
    }
    os << "choice  " << format_choice_set(names, choice) << '\n';
    if (!extra.empty()) {
        os << '\n';
        print_rows(o, extra);
    }
}

void cmd_sweep(const DecisionProblem& p, const std::string& criterion, const SweepGrid& grid, const Globals& g,
               std::ostream& os) {
    const auto res = sweep(p, criterion, grid);
    Out o{g.format, os};
    if (g.format == OutputFormat::Json) {
        Json j;
        j["criterion"] = criterion;
        j["parameter"] = res.parameter;
        j["values"] = res.values;
        Json cols = Json::object();
        for (std::size_t i = 0; i < p.act_count(); ++i) {
            std::vector<double> col;
            for (const auto& row : res.scores) col.push_back(row[i]);
            cols[p.act_names()[i]] = col;
        }
        j["scores"] = std::move(cols);
        print_json(os, j);
        return;
    }
    // Plot-ready CSV in both text and csv modes; text rounds to 6 digits.
    std::vector<std::string> head{res.parameter};
    for (const auto& nm : p.act_names()) head.push_back(nm);
    os << csv_line(head);
    for (std::size_t k = 0; k < res.values.size(); ++k) {
        std::vector<std::string> row{o.num(res.values[k])};
        for (double x : res.scores[k]) row.push_back(o.num(x));
        os << csv_line(row);
    }
}

void cmd_goals(const GoalFile& gf, const std::string& mode, const Globals& g, std::ostream& os) {
    Out o{g.format, os};
    if (mode == "audit") {
        if (!gf.system) throw ValidationError("goal file has no goals");
        const auto a = goal_audit(*gf.system);
        const auto b = [](bool x) { return std::string(x ? "true" : "false"); };
        if (g.format == OutputFormat::Json) {
            print_json(os, {{"consistent", a.consistent}, {"monotonic", a.monotonic}});
        } else if (g.format == OutputFormat::Csv) {
            os << "consistent,monotonic\n" << b(a.consistent) << ',' << b(a.monotonic) << '\n';
        } else {
            os << format_table({{"consistent", b(a.consistent)}, {"monotonic", b(a.monotonic)}});
        }
        return;
    }
    if (mode == "score") {
        if (!gf.system) throw ValidationError("goal file has no goals");
        if (gf.acts.empty()) throw ValidationError("goal file has no acts");
        const GoalSystem& gs = *gf.system;
        std::vector<ExpectedScore> scores;
        std::vector<double> values;
        for (const auto& a : gf.acts) {
            scores.push_back(expected_score(gs, a.effect.as_mass(gs.frame())));
            values.push_back(scores.back().score);
        }
        const auto ranked = rank_scores(values, false, g.tolerance);
        if (g.format == OutputFormat::Json) {
            Json rows = Json::array();
            for (const auto& r : ranked) {
                const auto& s = scores[r.act];
                rows.push_back({{"act", gf.acts[r.act].name},
                                {"score", s.score},
                                {"expected_achieved", s.expected_achieved},
                                {"expected_precluded", s.expected_precluded},
                                {"rank", r.rank}});
            }
            print_json(os, {{"dropped_constant", gs.total_weight()}, {"ranking", rows}});
            return;
        }
        std::vector<std::vector<std::string>> rows{{"rank", "act", "score", "achieved", "precluded"}};
        for (const auto& r : ranked) {
            const auto& s = scores[r.act];
            rows.push_back({std::to_string(r.rank), gf.acts[r.act].name, o.num(s.score), o.num(s.expected_achieved),
                            o.num(s.expected_precluded)});
        }
        print_rows(o, rows);
        return;
    }
    if (mode == "classify") {
        if (!gf.classify) throw ValidationError("goal file has no \"classify\" section");
        const auto res = classification_scores(gf.classify->mass, gf.classify->weights);
        const Frame& classes = gf.classify->mass.frame();
        std::vector<std::size_t> order(res.rows.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return res.preference.strictly_prefers(a, b);
        });
        std::string chain;
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k) chain += res.preference.indifferent(order[k - 1], order[k]) ? " ~ " : " > ";
            chain += subset_label(classes, res.rows[order[k]].classes);
        }
        if (g.format == OutputFormat::Json) {
            Json rows = Json::array();
            for (const auto& r : res.rows) {
                Json set = Json::array();
                for (std::size_t k : r.classes.elements()) set.push_back(classes.label(k));
                rows.push_back({{"classes", set},
                                {"bel_plus_pl", r.bel_plus_pl},
                                {"tail_weight", r.tail_weight},
                                {"score", r.score}});
            }
            print_json(os, {{"rows", rows}, {"chain", chain}});
            return;
        }
        std::vector<std::vector<std::string>> rows{{"classes", "bel+pl", "weight", "score"}};
        for (const auto& r : res.rows) {
            rows.push_back({subset_label(classes, r.classes), o.num(r.bel_plus_pl), o.num(r.tail_weight), o.num(r.score)});
        }
        print_rows(o, rows);
        if (g.format == OutputFormat::Text) os << "\nchain  " << chain << '\n';
        return;
    }
    throw UsageError("unknown mode '" + mode + "'");
}

struct MassInput {
    std::optional<DecisionProblem> problem;
    std::optional<MassFunction> mass;
};

MassInput parse_mass_input(const Json& doc) {
    MassInput in;
    if (doc.is_object() && doc.contains("acts")) {
        in.problem = parse_problem(doc);
        in.mass = in.problem->mass();
    } else {
        if (!doc.is_object() || !doc.contains("states")) throw ValidationError("document: missing \"states\"");
        if (!doc.contains("mass")) throw ValidationError("document: missing \"mass\"");
        in.mass = parse_mass(doc["mass"], parse_frame(doc["states"], "states"), "mass");
    }
    return in;
}

Json mass_input_json(const MassInput& in) {
    if (in.problem) return in.problem->to_json();
    Json doc;
    doc["states"] = in.mass->frame().labels();
    doc["mass"] = mass_to_json(*in.mass);
    return doc;
}

void cmd_transform(const MassInput& in, const std::string& kind, const Globals& g, std::ostream& os) {
    Out o{g.format, os};
    if (kind == "pignistic" || kind == "plausibility") {
        if (!in.mass) throw ValidationError("problem has no mass function");
        const auto p = kind == "pignistic" ? pignistic(*in.mass) : plausibility_transform(*in.mass);
        const auto& labels = in.mass->frame().labels();
        if (g.format == OutputFormat::Json) {
            Json prob = Json::object();
            for (std::size_t k = 0; k < labels.size(); ++k) prob[labels[k]] = p[k];
            print_json(os, {{"transform", kind}, {"probability", prob}});
            return;
        }
        std::vector<std::vector<std::string>> rows{{"state", "probability"}};
        for (std::size_t k = 0; k < labels.size(); ++k) rows.push_back({labels[k], o.num(p[k])});
        print_rows(o, rows);
        return;
    }
    if (kind == "pushforward") {
        if (!in.problem) throw ValidationError("pushforward needs acts");
        const DecisionProblem& p = *in.problem;
        if (g.format == OutputFormat::Json) {
            Json acts = Json::array();
            for (std::size_t i = 0; i < p.act_count(); ++i) {
                acts.push_back({{"act", p.act_names()[i]}, {"mass", mass_to_json(p.lottery(i))}});
            }
            print_json(os, {{"transform", kind}, {"lotteries", acts}});
            return;
        }
        std::vector<std::vector<std::string>> rows{{"act", "focal", "mass"}};
        for (std::size_t i = 0; i < p.act_count(); ++i) {
            const auto mu = p.lottery(i);
            for (const auto& fe : mu.focal()) {
                rows.push_back({p.act_names()[i], subset_label(mu.frame(), fe.set), o.num(fe.mass)});
            }
        }
        print_rows(o, rows);
        return;
    }
    throw UsageError("unknown transform '" + kind + "'");
}

double parse_double(const std::string& s, const std::string& flag) {
    try {
        std::size_t used = 0;
        const double x = std::stod(s, &used);
        if (used == s.size() && std::isfinite(x)) return x;
    } catch (const std::exception&) {
    }
    throw UsageError(flag + ": expected a number, got '" + s + "'");
}

}  // namespace

const std::vector<std::string>& rank_criteria() {
    static const std::vector<std::string> names{"maximin", "maximax", "hurwicz", "laplace",  "regret",
                                                "owa",     "lower",   "upper",   "ghurwicz", "pignistic",
                                                "gowa",    "gregret", "jaffray"};
    return names;
}

bool lower_is_better(const std::string& criterion) { return criterion == "regret" || criterion == "gregret"; }

LocalPessimismIndex parse_pessimism_index(const Json& doc, const Frame& consequences) {
    LocalPessimismIndex index;
    if (!doc.is_object()) throw ValidationError("pessimism index: expected an object");
    if (doc.contains("default")) {
        if (!doc["default"].is_number()) throw ValidationError("pessimism index: \"default\" must be a number");
        index.set_default(doc["default"].get<double>());
    }
    if (doc.contains("pairs")) {
        const auto& labels = consequences.labels();
        const auto find = [&](const Json& node) -> std::optional<std::size_t> {
            if (!node.is_string()) return std::nullopt;
            auto it = std::find(labels.begin(), labels.end(), node.get<std::string>());
            if (it == labels.end()) return std::nullopt;
            return static_cast<std::size_t>(it - labels.begin());
        };
        for (const auto& e : doc["pairs"]) {
            if (!e.is_object() || !e.contains("worst") || !e.contains("best") || !e.contains("alpha")) continue;
            const auto w = find(e["worst"]), b = find(e["best"]);
            if (w && b && e["alpha"].is_number()) index.set(*w, *b, e["alpha"].get<double>());
        }
    }
    return index;
}

std::vector<double> score_acts(const DecisionProblem& p, const std::string& criterion, const CriterionParams& params) {
    if (is_one_of(criterion, {"maximin", "maximax", "hurwicz", "laplace"})) {
        IgnoranceCriterion c = IgnoranceCriterion::maximin();
        if (criterion == "maximax") c = IgnoranceCriterion::maximax();
        if (criterion == "laplace") c = IgnoranceCriterion::laplace();
        if (criterion == "hurwicz") c = IgnoranceCriterion::hurwicz(require_alpha(params, criterion));
        return score_ignorance(p.payoff_matrix(), c);
    }
    if (criterion == "regret") return minimax_regret(p.payoff_matrix()).max_regret;
    if (criterion == "owa") {
        const double beta = require_beta(params, criterion);
        const auto u = p.payoff_matrix();
        const auto w = max_entropy_owa_weights(u.states(), beta);
        return per_act(p, [&](std::size_t i) { return owa_aggregate(u.row(i), w); });
    }
    if (criterion == "gregret") return generalized_minimax_regret(p.payoff_matrix(), p.require_mass());
    if (criterion == "lower") {
        return per_act(p, [&](std::size_t i) { return lower_expectation(p.lottery(i), p.utility(i)); });
    }
    if (criterion == "upper") {
        return per_act(p, [&](std::size_t i) { return upper_expectation(p.lottery(i), p.utility(i)); });
    }
    if (criterion == "pignistic") {
        return per_act(p, [&](std::size_t i) { return pignistic_expected_utility(p.lottery(i), p.utility(i)); });
    }
    if (criterion == "ghurwicz") {
        if (!params.auto_alpha) require_alpha(params, criterion);
        p.require_mass();
        return per_act(p, [&](std::size_t i) {
            const auto mu = p.lottery(i);
            const double alpha = params.auto_alpha ? auto_hurwicz_alpha(mu) : *params.alpha;
            return generalized_hurwicz(mu, p.utility(i), alpha);
        });
    }
    if (criterion == "gowa") {
        const double beta = require_beta(params, criterion);
        return per_act(p, [&](std::size_t i) { return generalized_owa_expected_utility(p.lottery(i), p.utility(i), beta); });
    }
    if (criterion == "jaffray") {
        if (!params.index && !params.alpha) throw UsageError("criterion 'jaffray' needs --index or --alpha");
        p.require_mass();
        if (params.index) check_index_labels(*params.index, p);
        return per_act(p, [&](std::size_t i) {
            const auto idx = params.index ? parse_pessimism_index(*params.index, p.act(i).consequences())
                                          : LocalPessimismIndex::constant(*params.alpha);
            return jaffray_utility(p.lottery(i), p.utility(i), idx);
        });
    }
    throw UsageError("unknown criterion '" + criterion + "'");
}

std::vector<RankedAct> rank_scores(const std::vector<double>& scores, bool lower_better, double tolerance) {
    const Relation r = Relation::from_scores(scores, lower_better ? Relation::Better::Lower : Relation::Better::Higher,
                                             tolerance);
    std::vector<RankedAct> out;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        std::size_t better = 0;
        for (std::size_t j = 0; j < scores.size(); ++j) better += r.strictly_prefers(j, i);
        out.push_back({i, scores[i], better + 1});
    }
    std::stable_sort(out.begin(), out.end(), [](const RankedAct& a, const RankedAct& b) { return a.rank < b.rank; });
    return out;
}

double SweepGrid::at(std::size_t k) const {
    if (k + 1 >= steps) return to;
    return from + (to - from) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

SweepResult sweep(const DecisionProblem& p, const std::string& criterion, const SweepGrid& grid) {
    if (!is_one_of(criterion, {"hurwicz", "ghurwicz", "owa", "gowa"})) {
        throw UsageError("sweep supports hurwicz, ghurwicz, owa and gowa, not '" + criterion + "'");
    }
    if (!(std::isfinite(grid.from) && std::isfinite(grid.to)) || grid.from > grid.to) {
        throw UsageError("sweep grid needs from <= to");
    }
    if (grid.steps < 2) throw UsageError("sweep grid needs at least 2 steps");
    if (grid.from < 0.0 || grid.to > 1.0) throw UsageError("sweep grid must lie in [0, 1]");
    SweepResult res;
    const bool alpha = criterion == "hurwicz" || criterion == "ghurwicz";
    res.parameter = alpha ? "alpha" : "beta";
    for (std::size_t k = 0; k < grid.steps; ++k) {
        CriterionParams params;
        const double x = grid.at(k);
        (alpha ? params.alpha : params.beta) = x;
        res.values.push_back(x);
        res.scores.push_back(score_acts(p, criterion, params));
    }
    return res;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decision making with belief functions", "evdec"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--tolerance", g.tolerance, "Tie and dominance tolerance")->check(CLI::NonNegativeNumber);
    app.add_flag("--emit-normalized", g.emit_normalized, "Print the validated input back as JSON and stop");

    std::string input;
    std::string criterion, rule, mode, kind, alpha_text, index_path;
    std::optional<double> beta;
    SweepGrid grid;

    auto* rank = app.add_subcommand("rank", "Score and rank acts by one criterion");
    rank->add_option("input", input, "Problem file, or - for stdin")->required();
    rank->add_option("--criterion", criterion)->required()->check(CLI::IsMember(rank_criteria()));
    rank->add_option("--alpha", alpha_text, "Pessimism index in [0, 1]; 'auto' for ghurwicz");
    rank->add_option("--beta", beta, "OWA degree of optimism in [0, 1]");
    rank->add_option("--index", index_path, "Local pessimism index file for jaffray");

    auto* choice = app.add_subcommand("choice", "Compute a choice set");
    choice->add_option("input", input, "Problem file, or - for stdin")->required();
    choice->add_option("--rule", rule)
        ->required()
        ->check(CLI::IsMember({"interval-dominance", "interval-bound", "maximality", "e-admissibility",
                               "prune-dominated"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "Scores over a grid of alpha or beta values");
    sweep_cmd->add_option("input", input, "Problem file, or - for stdin")->required();
    sweep_cmd->add_option("--criterion", criterion)->required()->check(CLI::IsMember({"hurwicz", "ghurwicz", "owa", "gowa"}));
    sweep_cmd->add_option("--from", grid.from, "First grid value (default 0)");
    sweep_cmd->add_option("--to", grid.to, "Last grid value (default 1)");
    sweep_cmd->add_option("--steps", grid.steps, "Number of grid points, at least 2 (default 101)");

    auto* goals = app.add_subcommand("goals", "Goal-based scoring");
    goals->add_option("input", input, "Goal file, or - for stdin")->required();
    goals->add_option("--mode", mode)->required()->check(CLI::IsMember({"audit", "score", "classify"}));

    auto* transform = app.add_subcommand("transform", "Probability transforms and pushforwards of a mass function");
    transform->add_option("input", input, "Mass or problem file, or - for stdin")->required();
    transform->add_option("--kind", kind)->required()->check(CLI::IsMember({"pignistic", "plausibility", "pushforward"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    g.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;

    try {
        const Json doc = read_json(input, in);
        if (*goals) {
            const GoalFile gf = parse_goal_file(doc);
            if (g.emit_normalized) {
                print_json(out, gf.to_json());
                return kExitOk;
            }
            cmd_goals(gf, mode, g, out);
            return kExitOk;
        }
        if (*transform) {
            const MassInput mi = parse_mass_input(doc);
            if (g.emit_normalized) {
                print_json(out, mass_input_json(mi));
                return kExitOk;
            }
            cmd_transform(mi, kind, g, out);
            return kExitOk;
        }
        const DecisionProblem p = parse_problem(doc);
        if (g.emit_normalized) {
            print_json(out, p.to_json());
            return kExitOk;
        }
        if (*rank) {
            CriterionParams params;
            params.beta = beta;
            if (!alpha_text.empty()) {
                if (alpha_text == "auto") {
                    if (criterion != "ghurwicz") throw UsageError("--alpha auto is only defined for ghurwicz");
                    params.auto_alpha = true;
                } else {
                    params.alpha = parse_double(alpha_text, "--alpha");
                }
            }
            if (!index_path.empty()) {
                if (criterion != "jaffray") throw UsageError("--index is only used by jaffray");
                params.index = read_json(index_path, in);
            }
            cmd_rank(p, criterion, params, g, out);
        } else if (*choice) {
            cmd_choice(p, rule, g, out);
        } else if (*sweep_cmd) {
            cmd_sweep(p, criterion, grid, g, out);
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SolverError& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const Error& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace evdec::cli
