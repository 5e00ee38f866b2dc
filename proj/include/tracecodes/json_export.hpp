#pragma once

// JSON serialization for every externally visible object.  Key order is
// fixed (ordered_json + explicit insertion order) so repeated runs with the
// same inputs produce byte-identical documents.

#include <complex>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tracecodes/char_sums.hpp"
#include "tracecodes/code.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/planar.hpp"
#include "tracecodes/secret_sharing.hpp"
#include "tracecodes/theory.hpp"

namespace tracecodes {

using Json = nlohmann::ordered_json;

inline Json field_to_json(const FieldCtx& F) {
    Json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["modulus"] = F.modulus();
    return j;
}

inline Json complex_to_json(const std::complex<double>& z) {
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

inline Json weights_to_json(const WeightDistribution& wd) {
    Json arr = Json::array();
    for (const auto& [w, a] : wd.counts) {
        if (w == 0) continue;
        Json row;
        row["w"] = w;
        row["A"] = a;
        arr.push_back(row);
    }
    return arr;
}

// {"p","m","kind","n","k","d","weights":[{"w","A"}...]}
inline Json code_report_json(const FieldCtx& F, const DefiningSet& d,
                             const WeightDistribution& wd, bool include_defining_set = true) {
    Json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["kind"] = kind_string(d);
    j["n"] = wd.n;
    j["k"] = wd.k;
    j["d"] = wd.min_nonzero_weight();
    j["weights"] = weights_to_json(wd);
    if (include_defining_set) j["defining_set"] = d.elements;
    return j;
}

inline Json check_to_json(const ComplexCheck& c, Json params) {
    Json j;
    j["lemma"] = c.name;
    j["params"] = std::move(params);
    j["enumerated"] = complex_to_json(c.enumerated);
    j["closed_form"] = complex_to_json(c.closed_form);
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass();
    return j;
}

inline Json check_to_json(const CountCheck& c, Json params) {
    Json j;
    j["lemma"] = c.name;
    j["params"] = std::move(params);
    j["enumerated"] = c.enumerated;
    j["closed_form"] = c.closed_form;
    j["pass"] = c.pass();
    return j;
}

// {"theorem","p","m","pass","rows":[{"w","predicted","observed"}...]}
inline Json theorem_report_json(const TheoremReport& r) {
    Json j;
    j["theorem"] = theorem_name(r.source);
    j["p"] = r.p;
    j["m"] = r.m;
    j["degenerate"] = r.degenerate;
    j["pass"] = r.pass;
    j["predicted_n"] = r.predicted_n;
    j["observed_n"] = r.observed_n;
    j["predicted_k"] = r.predicted_k;
    j["observed_k"] = r.observed_k;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json rj;
        rj["w"] = row.w;
        rj["predicted"] = row.predicted;
        rj["observed"] = row.observed;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    return j;
}

inline Json conditions_to_json(const StructuralConditions& c) {
    Json j;
    j["vanishes_at_zero"] = c.vanishes_at_zero;
    j["even"] = c.even;
    if (c.homogeneity_exponent)
        j["homogeneity_exponent"] = *c.homogeneity_exponent;
    else
        j["homogeneity_exponent"] = nullptr;
    return j;
}

inline Json planar_params_json(const PlanarSpec& spec) {
    Json j = Json::object();
    if (spec.family == PlanarFamily::DembowskiOstrom ||
        spec.family == PlanarFamily::CoulterMatthews)
        j["k"] = spec.k;
    if (spec.family == PlanarFamily::DingYuan) j["u"] = spec.u_enc;
    return j;
}

// --- share bundles ---------------------------------------------------------

// {"p","m","kind","seed","shares":[{"participant","value"}...]}
// The secret itself is deliberately absent.
inline Json share_bundle_json(const FieldCtx& F, const std::string& kind, const ShareDeal& deal) {
    Json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["kind"] = kind;
    j["seed"] = deal.seed;
    Json shares = Json::array();
    for (std::size_t i = 0; i < deal.shares.size(); ++i) {
        Json s;
        s["participant"] = i + 1;
        s["value"] = deal.shares[i];
        shares.push_back(s);
    }
    j["shares"] = shares;
    return j;
}

struct ShareBundle {
    std::uint32_t p = 0, m = 0;
    std::string kind;
    std::uint64_t seed = 0;
    std::vector<std::uint16_t> shares;  // indexed by participant-1
};

inline ShareBundle parse_share_bundle(const Json& j) {
    ShareBundle b;
    try {
        b.p = j.at("p").get<std::uint32_t>();
        b.m = j.at("m").get<std::uint32_t>();
        b.kind = j.at("kind").get<std::string>();
        b.seed = j.at("seed").get<std::uint64_t>();
        const auto& shares = j.at("shares");
        if (!shares.is_array()) throw std::invalid_argument("shares must be an array");
        b.shares.assign(shares.size(), 0);
        std::vector<bool> seen(shares.size(), false);
        for (const auto& s : shares) {
            const std::uint64_t idx = s.at("participant").get<std::uint64_t>();
            if (idx == 0 || idx > b.shares.size())
                throw std::invalid_argument("participant index out of range");
            if (seen[idx - 1]) throw std::invalid_argument("duplicate participant in bundle");
            seen[idx - 1] = true;
            const auto value = s.at("value").get<std::uint16_t>();
            if (value >= b.p) throw std::invalid_argument("share value out of range for p");
            b.shares[idx - 1] = value;
        }
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed share bundle: ") + e.what());
    }
    return b;
}

inline Json access_structure_json(const AccessStructure& a) {
    Json j;
    Json sets = Json::array();
    for (const auto& s : a.minimal_sets) sets.push_back(s);
    j["minimal_access_sets"] = sets;
    Json per = Json::object();
    for (const auto& [i, c] : a.per_participant) per[std::to_string(i)] = c;
    j["per_participant_count"] = per;
    j["dictators"] = a.dictators;
    return j;
}

}  // namespace tracecodes
