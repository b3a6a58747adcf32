#include "evdec/cli/goal_file.hpp"

#include <set>

namespace evdec::cli {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ValidationError(field + ": " + what);
}

double number(const Json& node, const std::string& field) {
    if (!node.is_number()) fail(field, "expected a number");
    return node.get<double>();
}

Json labels_json(const Frame& frame, Subset s) {
    Json out = Json::array();
    for (std::size_t k : s.elements()) out.push_back(frame.label(k));
    return out;
}

}  // namespace

GoalFile parse_goal_file(const Json& doc) {
    if (!doc.is_object()) fail("document", "expected an object");
    GoalFile gf;

    if (doc.contains("theta") || doc.contains("goals")) {
        if (!doc.contains("theta")) fail("document", "missing \"theta\"");
        if (!doc.contains("goals")) fail("document", "missing \"goals\"");
        const Frame theta = parse_frame(doc["theta"], "theta");
        const Json& goals = doc["goals"];
        if (!goals.is_array() || goals.empty()) fail("goals", "expected a non-empty list");
        std::vector<Subset> sets;
        std::vector<double> weights;
        for (std::size_t i = 0; i < goals.size(); ++i) {
            const std::string f = "goals[" + std::to_string(i) + "]";
            const Json& g = goals[i];
            if (!g.is_object() || !g.contains("subset")) fail(f, "expected {\"subset\": [...]}");
            gf.goal_names.push_back(g.contains("name") && g["name"].is_string() ? g["name"].get<std::string>()
                                                                                 : "G" + std::to_string(i + 1));
            sets.push_back(parse_subset(g["subset"], theta, f + ".subset"));
            weights.push_back(g.contains("weight") ? number(g["weight"], f + ".weight") : 1.0);
        }
        try {
            gf.system.emplace(theta, std::move(sets), std::move(weights));
        } catch (const ValidationError& e) {
            fail("goals", e.what());
        }

        if (doc.contains("acts")) {
            const Json& acts = doc["acts"];
            if (!acts.is_array()) fail("acts", "expected a list");
            std::set<std::string> names;
            for (std::size_t i = 0; i < acts.size(); ++i) {
                const std::string f = "acts[" + std::to_string(i) + "]";
                const Json& a = acts[i];
                if (!a.is_object() || !a.contains("name") || !a["name"].is_string()) fail(f, "expected a named act");
                NamedEffect ne{a["name"].get<std::string>(), {}};
                if (!names.insert(ne.name).second) fail(f + ".name", "duplicate act name '" + ne.name + "'");
                const bool certain = a.contains("certain"), uncertain = a.contains("mass");
                if (certain == uncertain) fail(f, "give exactly one of \"certain\" or \"mass\"");
                if (certain) {
                    ne.effect.certain = parse_subset(a["certain"], theta, f + ".certain");
                } else {
                    ne.effect.uncertain = parse_mass(a["mass"], theta, f + ".mass");
                }
                gf.acts.push_back(std::move(ne));
            }
        }
    } else if (doc.contains("acts")) {
        fail("acts", "acts need \"theta\" and \"goals\"");
    }

    if (doc.contains("classify")) {
        const Json& c = doc["classify"];
        if (!c.is_object()) fail("classify", "expected an object");
        for (const char* key : {"classes", "weights", "mass"}) {
            if (!c.contains(key)) fail("classify", std::string("missing \"") + key + "\"");
        }
        const Frame classes = parse_frame(c["classes"], "classify.classes");
        const Json& w = c["weights"];
        if (!w.is_array()) fail("classify.weights", "expected a list");
        std::vector<double> weights;
        for (std::size_t k = 0; k < w.size(); ++k) {
            weights.push_back(number(w[k], "classify.weights[" + std::to_string(k) + "]"));
        }
        if (weights.size() != classes.size()) fail("classify.weights", "expected one weight per class count");
        for (double x : weights) {
            if (!(x > 0.0)) fail("classify.weights", "weights must be strictly positive");
        }
        gf.classify = ClassificationInput{parse_mass(c["mass"], classes, "classify.mass"), std::move(weights)};
    }

    if (!gf.system && !gf.classify) fail("document", "expected \"goals\" or \"classify\"");
    return gf;
}

Json GoalFile::to_json() const {
    Json doc;
    if (system) {
        const Frame& theta = system->frame();
        doc["theta"] = theta.labels();
        Json goals = Json::array();
        for (std::size_t i = 0; i < system->goals().size(); ++i) {
            Json g;
            g["name"] = goal_names[i];
            g["subset"] = labels_json(theta, system->goals()[i]);
            g["weight"] = system->weights()[i];
            goals.push_back(std::move(g));
        }
        doc["goals"] = std::move(goals);
        Json acts = Json::array();
        for (const auto& a : this->acts) {
            Json j;
            j["name"] = a.name;
            if (a.effect.certain) {
                j["certain"] = labels_json(theta, *a.effect.certain);
            } else {
                j["mass"] = mass_to_json(*a.effect.uncertain);
            }
            acts.push_back(std::move(j));
        }
        doc["acts"] = std::move(acts);
    }
    if (classify) {
        Json c;
        c["classes"] = classify->mass.frame().labels();
        c["weights"] = classify->weights;
        c["mass"] = mass_to_json(classify->mass);
        doc["classify"] = std::move(c);
    }
    return doc;
}

}  // namespace evdec::cli
