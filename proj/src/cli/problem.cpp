#include "evdec/cli/problem.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace evdec::cli {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ValidationError(field + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& field) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(field, std::string("missing \"") + key + "\"");
    return *it;
}

double number(const Json& node, const std::string& field) {
    if (!node.is_number()) fail(field, "expected a number");
    return node.get<double>();
}

std::string label(const Json& node, const std::string& field) {
    if (!node.is_string()) fail(field, "expected a label");
    return node.get<std::string>();
}

std::size_t index_in(const Frame& frame, const std::string& name, const std::string& field, const char* kind) {
    const auto& labels = frame.labels();
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (labels[k] == name) return k;
    }
    fail(field, std::string("unknown ") + kind + " '" + name + "'");
}

/// Rethrows library validation failures with the field path prefixed.
template <class F>
auto in_field(const std::string& field, F&& f) {
    try {
        return f();
    } catch (const ValidationError& e) {
        fail(field, e.what());
    } catch (const FrameMismatch& e) {
        fail(field, e.what());
    }
}

Json labels_json(const Frame& frame, Subset s) {
    Json out = Json::array();
    for (std::size_t k : s.elements()) out.push_back(frame.label(k));
    return out;
}

}  // namespace

Frame parse_frame(const Json& node, const std::string& field) {
    if (!node.is_array() || node.empty()) fail(field, "expected a non-empty list of labels");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < node.size(); ++k) {
        labels.push_back(label(node[k], field + "[" + std::to_string(k) + "]"));
    }
    return in_field(field, [&] { return Frame(std::move(labels)); });
}

Subset parse_subset(const Json& node, const Frame& frame, const std::string& field) {
    if (node.is_string()) return Subset::singleton(index_in(frame, node.get<std::string>(), field, "label"));
    if (!node.is_array() || node.empty()) fail(field, "expected a label or a non-empty list of labels");
    Subset s;
    for (std::size_t k = 0; k < node.size(); ++k) {
        const std::string f = field + "[" + std::to_string(k) + "]";
        s = s | Subset::singleton(index_in(frame, label(node[k], f), f, "label"));
    }
    return s;
}

MassFunction parse_mass(const Json& list, const Frame& frame, const std::string& field) {
    if (!list.is_array() || list.empty()) fail(field, "expected a non-empty list of focal elements");
    std::vector<FocalElement> focal;
    std::set<Subset> seen;
    for (std::size_t j = 0; j < list.size(); ++j) {
        const std::string f = field + "[" + std::to_string(j) + "]";
        if (!list[j].is_object()) fail(f, "expected {\"focal\": [...], \"mass\": x}");
        const Subset s = parse_subset(member(list[j], "focal", f), frame, f + ".focal");
        if (!seen.insert(s).second) fail(f + ".focal", "duplicate focal set");
        focal.push_back({s, number(member(list[j], "mass", f), f + ".mass")});
    }
    return in_field(field, [&] { return MassFunction(frame, std::move(focal)); });
}

Json mass_to_json(const MassFunction& m) {
    Json out = Json::array();
    for (const auto& fe : m.focal()) {
        Json e;
        e["focal"] = labels_json(m.frame(), fe.set);
        e["mass"] = fe.mass;
        out.push_back(std::move(e));
    }
    return out;
}

Json read_json(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw UsageError("cannot read '" + path + "'");
        std::ostringstream os;
        os << file.rdbuf();
        text = os.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

DecisionProblem parse_problem(const Json& doc) {
    if (!doc.is_object()) fail("document", "expected an object");
    DecisionProblem p;
    p.states_ = parse_frame(member(doc, "states", "document"), "states");
    const Frame& states = *p.states_;
    const std::size_t s = states.size();

    const Json& acts = member(doc, "acts", "document");
    if (!acts.is_array() || acts.empty()) fail("acts", "expected a non-empty list");
    const bool rows = acts[0].is_object() && acts[0].contains("utilities");
    p.form_ = rows ? ProblemForm::Rows : ProblemForm::Outcomes;

    if (rows) {
        if (doc.contains("consequences")) fail("consequences", "not used when acts give utility rows");
        if (doc.contains("utilities")) fail("utilities", "not used when acts give utility rows");
    } else {
        if (doc.contains("consequences")) {
            p.consequences_ = parse_frame(doc["consequences"], "consequences");
        } else {
            // Order of first appearance across acts, in state order.
            std::vector<std::string> seen;
            for (const auto& a : acts) {
                if (!a.is_object() || !a.contains("outcomes") || !a["outcomes"].is_object()) continue;
                for (const auto& st : states.labels()) {
                    auto it = a["outcomes"].find(st);
                    if (it == a["outcomes"].end()) continue;
                    std::vector<Json> items = it->is_array() ? it->get<std::vector<Json>>() : std::vector<Json>{*it};
                    for (const auto& c : items) {
                        if (c.is_string() && std::find(seen.begin(), seen.end(), c.get<std::string>()) == seen.end()) {
                            seen.push_back(c.get<std::string>());
                        }
                    }
                }
            }
            if (seen.empty()) fail("acts", "no consequence labels found");
            p.consequences_ = in_field("consequences", [&] { return Frame(seen); });
        }
        if (doc.contains("utilities")) {
            const Json& u = doc["utilities"];
            if (!u.is_object()) fail("utilities", "expected an object keyed by consequence");
            std::vector<double> values(p.consequences_->size());
            std::vector<bool> given(values.size(), false);
            for (auto it = u.begin(); it != u.end(); ++it) {
                const std::string f = "utilities." + it.key();
                const std::size_t c = index_in(*p.consequences_, it.key(), f, "consequence");
                values[c] = number(it.value(), f);
                given[c] = true;
            }
            for (std::size_t c = 0; c < values.size(); ++c) {
                if (!given[c]) fail("utilities", "no utility for consequence '" + p.consequences_->label(c) + "'");
            }
            p.consequence_utilities_ = std::move(values);
        }
    }

    std::set<std::string> names;
    for (std::size_t i = 0; i < acts.size(); ++i) {
        const std::string f = "acts[" + std::to_string(i) + "]";
        const Json& a = acts[i];
        if (!a.is_object()) fail(f, "expected an object");
        const std::string name = label(member(a, "name", f), f + ".name");
        if (!names.insert(name).second) fail(f + ".name", "duplicate act name '" + name + "'");
        p.act_names_.push_back(name);
        if (rows) {
            if (a.contains("outcomes")) fail(f, "acts must all use \"utilities\" or all use \"outcomes\"");
            const Json& r = member(a, "utilities", f);
            if (!r.is_array() || r.size() != s) {
                fail(f + ".utilities", "expected " + std::to_string(s) + " values, one per state");
            }
            std::vector<double> row;
            std::vector<std::string> cons;
            std::vector<std::size_t> identity;
            for (std::size_t j = 0; j < s; ++j) {
                row.push_back(number(r[j], f + ".utilities[" + std::to_string(j) + "]"));
                cons.push_back(name + ":" + states.label(j));
                identity.push_back(j);
            }
            p.rows_.push_back(std::move(row));
            p.acts_.push_back(in_field(f, [&] { return Act::single_valued(name, states, Frame(cons), identity); }));
        } else {
            if (a.contains("utilities")) fail(f, "acts must all use \"utilities\" or all use \"outcomes\"");
            const Json& o = member(a, "outcomes", f);
            if (!o.is_object()) fail(f + ".outcomes", "expected an object keyed by state");
            for (auto it = o.begin(); it != o.end(); ++it) {
                index_in(states, it.key(), f + ".outcomes." + it.key(), "state");
            }
            std::vector<Subset> images;
            for (const auto& st : states.labels()) {
                const std::string g = f + ".outcomes." + st;
                auto it = o.find(st);
                if (it == o.end()) fail(f + ".outcomes", "no outcome for state '" + st + "'");
                images.push_back(parse_subset(*it, *p.consequences_, g));
            }
            p.acts_.push_back(in_field(f, [&] { return Act(name, states, *p.consequences_, images); }));
        }
    }

    if (doc.contains("mass")) p.mass_ = parse_mass(doc["mass"], states, "mass");
    return p;
}

bool DecisionProblem::has_utilities() const {
    return form_ == ProblemForm::Rows || consequence_utilities_.has_value();
}

bool DecisionProblem::single_valued() const {
    for (const auto& a : acts_) {
        if (!a.is_single_valued()) return false;
    }
    return true;
}

const MassFunction& DecisionProblem::require_mass() const {
    if (!mass_) throw ValidationError("problem has no mass function");
    return *mass_;
}

UtilityTable DecisionProblem::utility(std::size_t i) const {
    if (form_ == ProblemForm::Rows) return UtilityTable(acts_.at(i).consequences(), rows_.at(i));
    if (!consequence_utilities_) throw ValidationError("problem has no utilities");
    return UtilityTable(*consequences_, *consequence_utilities_);
}

MassFunction DecisionProblem::lottery(std::size_t i) const { return pushforward(require_mass(), acts_.at(i)); }

PayoffMatrix DecisionProblem::payoff_matrix() const {
    if (form_ == ProblemForm::Rows) return PayoffMatrix(act_names_, states_->labels(), rows_);
    if (!consequence_utilities_) throw ValidationError("problem has no utilities");
    std::vector<std::vector<double>> u;
    for (const auto& a : acts_) {
        if (!a.is_single_valued()) {
            throw ValidationError("act '" + a.name() + "' is multi-valued; this rule needs a utility per state");
        }
        std::vector<double> row;
        for (Subset img : a.images()) row.push_back((*consequence_utilities_)[img.elements().front()]);
        u.push_back(std::move(row));
    }
    return PayoffMatrix(act_names_, states_->labels(), std::move(u));
}

std::vector<Gamble> DecisionProblem::gambles() const {
    std::vector<Gamble> out;
    const PayoffMatrix u = payoff_matrix();
    for (const auto& row : u.rows()) out.emplace_back(row);
    return out;
}

Json DecisionProblem::to_json() const {
    Json doc;
    doc["states"] = states_->labels();
    if (form_ == ProblemForm::Outcomes) {
        doc["consequences"] = consequences_->labels();
        if (consequence_utilities_) {
            Json u = Json::object();
            for (std::size_t c = 0; c < consequences_->size(); ++c) u[consequences_->label(c)] = (*consequence_utilities_)[c];
            doc["utilities"] = std::move(u);
        }
    }
    Json acts = Json::array();
    for (std::size_t i = 0; i < acts_.size(); ++i) {
        Json a;
        a["name"] = act_names_[i];
        if (form_ == ProblemForm::Rows) {
            a["utilities"] = rows_[i];
        } else {
            Json o = Json::object();
            for (std::size_t j = 0; j < states_->size(); ++j) {
                const Subset img = acts_[i].image(j);
                o[states_->label(j)] = img.size() == 1 ? Json(consequences_->label(img.elements().front()))
                                                       : labels_json(*consequences_, img);
            }
            a["outcomes"] = std::move(o);
        }
        acts.push_back(std::move(a));
    }
    doc["acts"] = std::move(acts);
    if (mass_) doc["mass"] = mass_to_json(*mass_);
    return doc;
}

}  // namespace evdec::cli
