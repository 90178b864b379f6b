#include "scl/json_io.hpp"

#include "scl/errors.hpp"

namespace scl {

Json result_to_json(const SclResult& result) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["input"] = result.input;
    doc["reduced"] = result.word.to_string();
    doc["length"] = result.word.size();
    if (result.infinite) {
        doc["scl"] = "infinite";
        doc["n"] = 0;
    } else {
        doc["scl"] = {{"num", result.scl.numerator().get_str()},
                      {"den", result.scl.denominator().get_str()}};
        doc["n"] = to_int64(result.n);
    }
    Json weights = Json::array();
    for (auto i : result.circuits_used()) {
        weights.push_back({{"circuit", result.circuits[i].turns},
                           {"weight", to_int64(result.integer_weights[i])}});
    }
    doc["weights"] = std::move(weights);
    doc["lp"] = {{"variables", result.lp_variables}, {"constraints", result.lp_constraints}};
    return doc;
}

Json surface_to_json(const SurfaceDescription& surface) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    Json disks = Json::array();
    for (const auto& d : surface.disks) disks.push_back({{"circuit", d.turns}, {"copy", d.copy}});
    doc["disks"] = std::move(disks);
    Json rects = Json::array();
    for (const auto& r : surface.rectangles) {
        rects.push_back({{"letter", std::string(1, r.letter.to_char())},
                         {"from", {{"disk", r.from.disk}, {"side", r.from.side}}},
                         {"to", {{"disk", r.to.disk}, {"side", r.to.side}}}});
    }
    doc["rectangles"] = std::move(rects);
    doc["chi"] = surface.chi;
    doc["n"] = surface.n;
    doc["boundary"] = surface.boundary_words;
    return doc;
}

std::optional<BigRational> certified_scl_from_json(const Json& doc) {
    try {
        if (doc.at("schema").get<int>() != kSchemaVersion) throw InputError("unsupported schema version");
        const auto& value = doc.at("scl");
        if (value.is_string()) {
            if (value.get<std::string>() != "infinite") throw InputError("bad scl value");
            return std::nullopt;
        }
        const BigRational stated(BigInt(value.at("num").get<std::string>(), 10),
                                 BigInt(value.at("den").get<std::string>(), 10));
        std::vector<BigInt> weights;
        for (const auto& w : doc.at("weights")) weights.emplace_back(w.at("weight").get<long>());
        const BigInt n(doc.at("n").get<long>());
        const auto length = doc.at("length").get<std::size_t>();
        if (certificate_value(length, weights, n) != stated) {
            throw InvariantViolation("result document fails the certificate identity");
        }
        return stated;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed result document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        if (dynamic_cast<const InputError*>(&e)) throw;
        throw InputError(std::string("malformed number in result document: ") + e.what());
    }
}

}  // namespace scl
