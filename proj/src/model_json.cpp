#include "qpov/model_json.hpp"

#include "qpov/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qpov {

using nlohmann::json;

std::string model_to_json(const QuantileModel& model) {
    json j;
    j["family"] = model.family_name();
    j["params"] = json::object();
    for (const auto& [name, value] : model.params()) j["params"][name] = value;
    j["u_domain"] = {model.domain().lo, model.domain().hi};
    if (model.family() == Family::TabulatedQ) {
        j["table"] = {{"u", model.table_u()}, {"q", model.table_q()}};
        auto tails = model.tail_masses();
        if (tails.lower) j["table"]["lower_tail"] = *tails.lower;
        if (tails.upper) j["table"]["upper_tail"] = *tails.upper;
    }
    return j.dump(2) + "\n";
}

namespace {

std::vector<double> number_array(const json& j, const std::string& what, const std::string& source) {
    if (!j.is_array()) throw ValidationError(source + ": " + what + " must be an array of numbers");
    std::vector<double> v;
    for (const auto& x : j) {
        if (!x.is_number()) throw ValidationError(source + ": " + what + " must be an array of numbers");
        v.push_back(x.get<double>());
    }
    return v;
}

QuantileModel build(const json& j, const std::string& source) {
    if (!j.is_object()) throw ValidationError(source + ": expected a JSON object");
    if (!j.contains("family") || !j["family"].is_string())
        throw ValidationError(source + ": missing string field \"family\"");
    const std::string family = j["family"].get<std::string>();

    Params params;
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw ValidationError(source + ": \"params\" must be an object");
        for (const auto& [name, value] : j["params"].items()) {
            if (!value.is_number())
                throw ValidationError(source + ": parameter " + name + " must be a number");
            params[name] = value.get<double>();
        }
    }

    std::optional<UDomain> domain;
    if (j.contains("u_domain")) {
        auto d = number_array(j["u_domain"], "\"u_domain\"", source);
        if (d.size() != 2) throw ValidationError(source + ": \"u_domain\" must be [lo, hi]");
        domain = UDomain{d[0], d[1]};
    }

    const std::string prefix = "lorenz:";
    if (family.rfind(prefix, 0) == 0) {
        auto kind = lorenz_kind_from_string(family.substr(prefix.size()));
        if (!kind) throw ValidationError(source + ": unknown Lorenz curve \"" + family + "\"");
        return QuantileModel::lorenz_derived(*kind, params);
    }

    auto f = family_from_string(family);
    if (!f) throw ValidationError(source + ": unknown family \"" + family + "\"");
    if (*f == Family::LorenzDerived)
        throw ValidationError(source + ": Lorenz-derived models are written \"lorenz:<kind>\"");
    if (*f == Family::TabulatedQ) {
        if (!j.contains("table") || !j["table"].is_object())
            throw ValidationError(source + ": tabulated model needs a \"table\" object");
        const auto& t = j["table"];
        if (!t.contains("u") || !t.contains("q"))
            throw ValidationError(source + ": \"table\" needs \"u\" and \"q\" arrays");
        TailMasses tails;
        if (t.contains("lower_tail")) tails.lower = t["lower_tail"].get<double>();
        if (t.contains("upper_tail")) tails.upper = t["upper_tail"].get<double>();
        return QuantileModel::tabulated(number_array(t["u"], "table.u", source),
                                        number_array(t["q"], "table.q", source), tails);
    }
    return QuantileModel::create(*f, params, domain);
}

} // namespace

QuantileModel model_from_json(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(source + ": malformed JSON: " + e.what());
    }
    try {
        return build(j, source);
    } catch (const json::exception& e) {
        throw ValidationError(source + ": " + e.what());
    }
}

QuantileModel read_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str(), path);
}

} // namespace qpov
