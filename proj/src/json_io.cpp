#include "bft/json_io.hpp"

#include <charconv>

#include <json.hpp>

namespace bft {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kOrderTag = "binary-lsb-w1";

ordered_json parse_document(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const ordered_json& field(const ordered_json& doc, const char* name) {
    const auto it = doc.find(name);
    if (it == doc.end()) {
        throw ParseError(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

int frame_size_field(const ordered_json& doc) {
    const ordered_json& n = field(doc, "n");
    if (!n.is_number_integer()) throw ParseError("field \"n\" must be an integer");
    const int value = n.get<int>();
    if (value < 1 || value > kMaxFrameSize) {
        throw ParseError("field \"n\" must be in [1, " + std::to_string(kMaxFrameSize) + "]");
    }
    return value;
}

std::vector<double> number_array(const ordered_json& node, std::size_t expected,
                                 const char* name) {
    if (!node.is_array() || node.size() != expected) {
        throw ParseError(std::string("field \"") + name + "\" must be an array of " +
                         std::to_string(expected) + " numbers");
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const auto& v : node) {
        if (!v.is_number()) {
            throw ParseError(std::string("field \"") + name + "\" must contain only numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

SubsetIndex subset_key(const std::string& key, SubsetIndex limit) {
    SubsetIndex value = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
    if (ec != std::errc{} || ptr != key.data() + key.size() || value >= limit) {
        throw ParseError("\"" + key + "\" is not a subset index below " + std::to_string(limit));
    }
    return value;
}

ordered_json commitment_object(const Frame& frame, const std::vector<double>& values) {
    ordered_json obj = ordered_json::object();
    for (SubsetIndex f = 0; f < frame.subset_count(); ++f) {
        if (cardinality(f) >= 2) obj[std::to_string(f)] = values[f];
    }
    return obj;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string to_json(const MassFunction& m) {
    ordered_json doc;
    doc["n"] = m.frame_size();
    doc["order"] = kOrderTag;
    doc["masses"] = m.masses();
    return doc.dump();
}

MassFunction mass_from_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    const int n = frame_size_field(doc);
    const ordered_json& order = field(doc, "order");
    if (!order.is_string() || order.get<std::string>() != kOrderTag) {
        throw ParseError(std::string("field \"order\" must be \"") + kOrderTag + "\"");
    }
    Frame frame(n);
    auto masses = number_array(field(doc, "masses"), frame.subset_count(), "masses");
    return MassFunction(std::move(frame), std::move(masses));
}

std::string to_json(const SetFunction& s) {
    ordered_json doc;
    doc["n"] = s.frame.size();
    doc["order"] = kOrderTag;
    doc["kind"] = to_string(s.kind);
    doc["values"] = s.values;
    return doc.dump();
}

std::string to_json(const PignisticDistribution& p) {
    ordered_json doc;
    doc["n"] = p.frame.size();
    doc["kind"] = p.normalized ? "betpn" : "betp";
    doc["values"] = p.probs;
    return doc.dump();
}

std::string to_json(const IsoDecomposition& d) {
    ordered_json doc;
    doc["n"] = d.propensity.frame.size();
    doc["form"] = to_string(d.commitment.form);
    doc["empty"] = d.empty_mass;
    doc["poss"] = d.propensity.poss;
    doc["commitment"] = commitment_object(d.propensity.frame, d.commitment.values);
    return doc.dump();
}

IsoDecomposition decomposition_from_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    const int n = frame_size_field(doc);
    Frame frame(n);

    const ordered_json& form_node = field(doc, "form");
    CommitmentForm form;
    if (form_node == "tau") {
        form = CommitmentForm::tau;
    } else if (form_node == "zeta") {
        form = CommitmentForm::zeta;
    } else {
        throw ParseError("field \"form\" must be \"tau\" or \"zeta\"");
    }

    const ordered_json& empty_node = field(doc, "empty");
    if (!empty_node.is_number()) throw ParseError("field \"empty\" must be a number");

    auto poss = number_array(field(doc, "poss"), static_cast<std::size_t>(n), "poss");

    std::vector<double> values(frame.subset_count(), 0.0);
    const ordered_json& commitment = field(doc, "commitment");
    if (!commitment.is_object()) throw ParseError("field \"commitment\" must be an object");
    for (const auto& [key, value] : commitment.items()) {
        const SubsetIndex f = subset_key(key, frame.subset_count());
        if (cardinality(f) < 2) {
            throw ParseError("commitment key \"" + key + "\" must name a multi-element subset");
        }
        if (!value.is_number()) throw ParseError("commitment values must be numbers");
        values[f] = value.get<double>();
    }

    return IsoDecomposition{PossibilityDistribution(frame, std::move(poss)),
                            IsoCommitment{form, std::move(values)},
                            empty_node.get<double>()};
}

std::string to_json(const WeightFunction& w) {
    ordered_json doc;
    doc["n"] = w.frame.size();
    doc["kind"] = to_string(w.kind);
    ordered_json values = ordered_json::object();
    for (SubsetIndex f = 0; f < w.frame.subset_count(); ++f) {
        if (w.kind == WeightKind::sigma && f == w.frame.full_set()) continue;
        if (w.kind == WeightKind::v && f == 0) continue;
        values[std::to_string(f)] = w.values[f];
    }
    doc["values"] = std::move(values);
    return doc.dump();
}

WeightFunction weights_from_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    const int n = frame_size_field(doc);
    Frame frame(n);

    const ordered_json& kind_node = field(doc, "kind");
    WeightKind kind;
    if (kind_node == "sigma") {
        kind = WeightKind::sigma;
    } else if (kind_node == "v") {
        kind = WeightKind::v;
    } else {
        throw ParseError("field \"kind\" must be \"sigma\" or \"v\"");
    }

    std::vector<double> values(frame.subset_count(), 1.0);
    const ordered_json& entries = field(doc, "values");
    if (!entries.is_object()) throw ParseError("field \"values\" must be an object");
    for (const auto& [key, value] : entries.items()) {
        const SubsetIndex f = subset_key(key, frame.subset_count());
        if (kind == WeightKind::sigma && f == frame.full_set()) {
            throw ParseError("sigma is undefined on the full frame");
        }
        if (kind == WeightKind::v && f == 0) {
            throw ParseError("v is undefined on the empty set");
        }
        if (!value.is_number()) throw ParseError("weight values must be numbers");
        values[f] = value.get<double>();
    }
    return WeightFunction{std::move(frame), kind, std::move(values)};
}

std::string to_json(const TFunction& t) {
    ordered_json doc;
    doc["n"] = t.frame.size();
    doc["kind"] = "t";
    doc["values"] = t.values;
    return doc.dump();
}

TFunction t_from_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    const int n = frame_size_field(doc);
    Frame frame(n);
    if (field(doc, "kind") != "t") throw ParseError("field \"kind\" must be \"t\"");
    auto values = number_array(field(doc, "values"), frame.subset_count(), "values");
    return TFunction{std::move(frame), std::move(values)};
}

std::string to_json(const MeasureReport& r) {
    ordered_json doc;
    doc["yager"] = r.yager;
    doc["propensity_spec"] = r.propensity_spec;
    if (r.commitment_spec) {
        doc["commitment_spec"] = *r.commitment_spec;
    } else {
        doc["commitment_spec"] = "undefined";
    }
    doc["entropy_bits"] = r.entropy_bits;
    return doc.dump();
}

std::string to_json(const BeliefEvolutionNetwork& net) {
    ordered_json doc;
    doc["n"] = net.frame().size();
    ordered_json tau = ordered_json::object();
    for (const auto& [f, value] : net.explicit_tau()) {
        tau[std::to_string(f)] = value;
    }
    ordered_json xi = ordered_json::object();
    for (const auto& [edge, value] : net.explicit_xi()) {
        xi[std::to_string(edge.first) + ">" + std::to_string(edge.second)] = value;
    }
    doc["tau"] = std::move(tau);
    doc["xi"] = std::move(xi);
    return doc.dump();
}

BeliefEvolutionNetwork network_from_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    const int n = frame_size_field(doc);
    Frame frame(n);

    BeliefEvolutionNetwork::TauMap tau;
    if (const auto it = doc.find("tau"); it != doc.end()) {
        if (!it->is_object()) throw ParseError("field \"tau\" must be an object");
        for (const auto& [key, value] : it->items()) {
            if (!value.is_number()) throw ParseError("tau values must be numbers");
            tau[subset_key(key, frame.subset_count())] = value.get<double>();
        }
    }

    BeliefEvolutionNetwork::XiMap xi;
    if (const auto it = doc.find("xi"); it != doc.end()) {
        if (!it->is_object()) throw ParseError("field \"xi\" must be an object");
        for (const auto& [key, value] : it->items()) {
            const auto sep = key.find('>');
            if (sep == std::string::npos) {
                throw ParseError("xi keys must look like \"parent>child\", got \"" + key + "\"");
            }
            const SubsetIndex parent = subset_key(key.substr(0, sep), frame.subset_count());
            const SubsetIndex child = subset_key(key.substr(sep + 1), frame.subset_count());
            if (!value.is_number()) throw ParseError("xi values must be numbers");
            xi[{parent, child}] = value.get<double>();
        }
    }

    return BeliefEvolutionNetwork(std::move(frame), tau, xi);
}

}  // namespace bft
