// Command-line front end for the trace-code workbench.
//
// Subcommands: construct, verify, planar, sss (setup|deal|recover|structure),
// bounds.  Every invocation emits a single JSON object on stdout whose
// "manifest" member records the command, resolved parameters, field modulus,
// library version and wall time; repeated runs differ only in wall_time_ms.
// --pretty switches stdout to human-readable tables (the JSON can still be
// written with --out).
//
// Exit codes: 0 success; 1 verification failure or data integrity failure;
// 2 usage/parameter errors; 3 resource-ceiling errors.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tracecodes/char_sums.hpp"
#include "tracecodes/code.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/json_export.hpp"
#include "tracecodes/planar.hpp"
#include "tracecodes/rng.hpp"
#include "tracecodes/secret_sharing.hpp"
#include "tracecodes/theory.hpp"
#include "tracecodes/version.hpp"

namespace tc = tracecodes;
using tc::Json;

namespace {

struct CommonOpts {
    unsigned threads = 1;
    std::uint64_t ceiling = 0;  // 0 = unresolved; see resolve_ceiling
    bool ceiling_from_flag = false;
    std::string config_path;
    std::string out_path;
    bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--threads", c.threads, "worker threads for enumeration")
        ->check(CLI::Range(1u, 64u));
    cmd->add_option("--ceiling", c.ceiling, "enumeration ceiling (max p^m / p^k)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--config", c.config_path, "JSON config file (default ./tracecodes.json)");
    cmd->add_option("--out", c.out_path, "also write the JSON result to this file");
    cmd->add_flag("--pretty", c.pretty, "human-readable tables on stdout instead of JSON");
}

// Precedence: --ceiling flag > config file > TRACECODES_CEILING env > default.
std::uint64_t resolve_ceiling(const CommonOpts& c) {
    if (c.ceiling != 0) return c.ceiling;
    std::string path = c.config_path;
    if (path.empty()) {
        std::ifstream probe("tracecodes.json");
        if (probe.good()) path = "tracecodes.json";
    }
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in.good()) throw std::invalid_argument("config file not readable: " + path);
        Json cfg;
        try {
            in >> cfg;
        } catch (const Json::exception& e) {
            throw std::invalid_argument("config file is not valid JSON: " + std::string(e.what()));
        }
        if (cfg.contains("ceiling")) return cfg["ceiling"].get<std::uint64_t>();
    }
    if (const char* env = std::getenv("TRACECODES_CEILING")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw std::invalid_argument("TRACECODES_CEILING must be a positive integer");
        return v;
    }
    return tc::kDefaultEnumerationCeiling;
}

Json make_manifest(const std::string& command, Json parameters, const tc::FieldCtx* F,
                   std::uint64_t wall_ms) {
    Json m;
    m["command"] = command;
    m["parameters"] = std::move(parameters);
    m["field"] = F ? tc::field_to_json(*F) : Json(nullptr);
    m["version"] = tc::kVersion;
    m["wall_time_ms"] = wall_ms;
    return m;
}

class Stopwatch {
public:
    std::uint64_t ms() const {
        return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start_)
                                              .count());
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Json& doc, const CommonOpts& c, const std::string& pretty_text) {
    if (!c.out_path.empty()) {
        std::ofstream out(c.out_path);
        if (!out.good()) throw std::invalid_argument("cannot write output file: " + c.out_path);
        out << doc.dump(2) << "\n";
    }
    if (c.pretty)
        std::cout << pretty_text;
    else
        std::cout << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::uint32_t p = 3, m = 2;
    bool punctured = false;
    std::string planar_spec;  // "family" or "family:k=2,u=5"
    std::uint32_t modulus_index = 0;
    bool no_defining_set = false;
    CommonOpts common;
};

// Parses "family[:key=value[,key=value...]]" with keys k and u.
tc::PlanarSpec parse_planar_spec(const std::string& text, std::vector<std::string> extra_params) {
    std::string name = text;
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        std::stringstream ss(text.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) extra_params.push_back(tok);
    }
    const auto fam = tc::family_from_name(name);
    if (!fam)
        throw std::invalid_argument(
            "unknown family (expected square|dembowski_ostrom|coulter_matthews|ding_yuan)");
    tc::PlanarSpec spec;
    spec.family = *fam;
    for (const auto& kv : extra_params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("planar parameter must look like k=2 or u=5: " + kv);
        const std::string key = kv.substr(0, eq);
        const std::uint64_t value = std::stoull(kv.substr(eq + 1));
        if (key == "k")
            spec.k = static_cast<std::uint32_t>(value);
        else if (key == "u")
            spec.u_enc = value;
        else
            throw std::invalid_argument("unknown planar parameter: " + key);
    }
    return spec;
}

int run_construct(const ConstructArgs& a) {
    Stopwatch watch;
    const std::uint64_t ceiling = resolve_ceiling(a.common);
    tc::FieldCtx F(a.p, a.m, tc::find_irreducible(a.p, a.m, a.modulus_index),
                   tc::FieldConfig{ceiling});

    tc::DefiningSet d;
    if (!a.planar_spec.empty()) {
        if (a.punctured)
            throw std::invalid_argument("--planar and --punctured cannot be combined");
        const tc::PlanarSpec spec = parse_planar_spec(a.planar_spec, {});
        const std::string why = tc::admissibility_failure(spec, F);
        if (!why.empty()) throw std::invalid_argument("inadmissible parameters: " + why);
        d = tc::build_planar_set(spec, F);
    } else {
        d = tc::build_defining_set(F);
        if (a.punctured) d = tc::puncture_representatives(F, d);
    }
    const tc::TraceCode code = tc::build_code(F, std::move(d));
    const tc::WeightDistribution wd =
        tc::weight_distribution(code.linear(), a.common.threads, ceiling);

    Json payload = tc::code_report_json(F, code.defining_set, wd, !a.no_defining_set);

    Json params;
    params["p"] = a.p;
    params["m"] = a.m;
    params["punctured"] = a.punctured;
    if (!a.planar_spec.empty()) params["planar"] = a.planar_spec;
    params["modulus_index"] = a.modulus_index;
    params["threads"] = a.common.threads;
    params["ceiling"] = ceiling;

    Json doc;
    doc["manifest"] = make_manifest("construct", params, &F, watch.ms());
    for (auto& [key, value] : payload.items()) doc[key] = value;

    std::ostringstream pretty;
    pretty << "[" << wd.n << ", " << wd.k << ", " << wd.min_nonzero_weight() << "] code over GF("
           << a.p << "), kind " << tc::kind_string(code.defining_set) << "\n";
    pretty << "  w : A\n";
    for (auto& [w, cnt] : wd.counts)
        if (w != 0) pretty << "  " << w << " : " << cnt << "\n";
    emit(doc, a.common, pretty.str());
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string range = "3,5:2-5";
    std::uint32_t p = 0, m = 0;  // nonzero: single-cell grid overriding --range
    unsigned weil_samples = 100;
    std::uint64_t seed = 1;
    bool want_lemmas = false;    // --all-lemmas
    bool want_theorems = false;  // --theorems
    CommonOpts common;
};

struct GridSpec {
    std::vector<std::uint32_t> primes;
    std::uint32_t m_lo = 2, m_hi = 5;
};

GridSpec parse_range(const std::string& text) {
    // "<p1,p2,...>:<mlo>-<mhi>", e.g. "3,5:2-5"
    GridSpec g;
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("range must look like \"3,5:2-5\"");
    std::stringstream ps(text.substr(0, colon));
    std::string tok;
    while (std::getline(ps, tok, ',')) {
        const unsigned long v = std::stoul(tok);
        g.primes.push_back(static_cast<std::uint32_t>(v));
    }
    const std::string mpart = text.substr(colon + 1);
    const auto dash = mpart.find('-');
    if (dash == std::string::npos)
        throw std::invalid_argument("range must look like \"3,5:2-5\"");
    g.m_lo = static_cast<std::uint32_t>(std::stoul(mpart.substr(0, dash)));
    g.m_hi = static_cast<std::uint32_t>(std::stoul(mpart.substr(dash + 1)));
    if (g.primes.empty() || g.m_lo < 1 || g.m_hi < g.m_lo)
        throw std::invalid_argument("empty verification grid");
    return g;
}

Json verify_field(const tc::FieldCtx& F, unsigned weil_samples, std::uint64_t seed, bool& pass) {
    Json checks = Json::array();

    auto g = tc::check_gauss_sum(F);
    checks.push_back(tc::check_to_json(g, Json::object()));
    pass = pass && g.pass();

    auto b1 = tc::check_scaled_square_sum(F);
    checks.push_back(tc::check_to_json(b1, Json::object()));
    pass = pass && b1.pass();

    for (std::uint32_t a = 0; a < F.p(); ++a) {
        auto na = tc::check_square_trace_fiber(F, a);
        Json params;
        params["a"] = a;
        checks.push_back(tc::check_to_json(na, params));
        pass = pass && na.pass();
    }

    // Sampled Weil triples (a2 uniform nonzero, a1/a0 uniform).
    {
        tc::SplitMix64 rng(seed);
        std::uint64_t failures = 0;
        Json first_failure = nullptr;
        for (unsigned i = 0; i < weil_samples; ++i) {
            const std::uint64_t a2 = 1 + rng.below(F.q() - 1);
            const std::uint64_t a1 = rng.below(F.q());
            const std::uint64_t a0 = rng.below(F.q());
            auto w = tc::check_weil_quadratic(F, a2, a1, a0);
            if (!w.pass()) {
                ++failures;
                if (first_failure.is_null()) {
                    Json params;
                    params["a2"] = a2;
                    params["a1"] = a1;
                    params["a0"] = a0;
                    first_failure = tc::check_to_json(w, params);
                }
            }
        }
        Json agg;
        agg["lemma"] = "weil_quadratic";
        agg["samples"] = weil_samples;
        agg["seed"] = seed;
        agg["failures"] = failures;
        agg["first_failure"] = first_failure;
        agg["pass"] = failures == 0;
        checks.push_back(agg);
        pass = pass && failures == 0;
    }

    // Exhaustive b sweeps (m >= 2: the kernel count needs a proper extension).
    if (F.m() >= 2) {
        std::uint64_t sum_failures = 0, count_failures = 0;
        Json first_sum = nullptr, first_count = nullptr;
        for (std::uint64_t b = 1; b < F.q(); ++b) {
            auto t = tc::check_quadratic_linear_sum(F, b);
            if (!t.pass()) {
                ++sum_failures;
                if (first_sum.is_null()) {
                    Json params;
                    params["b"] = b;
                    first_sum = tc::check_to_json(t, params);
                }
            }
            auto nb = tc::check_joint_trace_kernel(F, b);
            if (!nb.pass()) {
                ++count_failures;
                if (first_count.is_null()) {
                    Json params;
                    params["b"] = b;
                    first_count = tc::check_to_json(nb, params);
                }
            }
        }
        Json aggs;
        aggs["lemma"] = "quadratic_linear_sum";
        aggs["b_count"] = F.q() - 1;
        aggs["failures"] = sum_failures;
        aggs["first_failure"] = first_sum;
        aggs["pass"] = sum_failures == 0;
        checks.push_back(aggs);
        Json aggc;
        aggc["lemma"] = "joint_trace_kernel";
        aggc["b_count"] = F.q() - 1;
        aggc["failures"] = count_failures;
        aggc["first_failure"] = first_count;
        aggc["pass"] = count_failures == 0;
        checks.push_back(aggc);
        pass = pass && sum_failures == 0 && count_failures == 0;
    }

    Json out;
    out["field"] = tc::field_to_json(F);
    out["checks"] = checks;
    return out;
}

int run_verify(const VerifyArgs& a) {
    Stopwatch watch;
    const std::uint64_t ceiling = resolve_ceiling(a.common);
    GridSpec grid;
    if (a.p != 0 || a.m != 0) {
        if (a.p == 0 || a.m == 0)
            throw std::invalid_argument("--p and --m must be given together");
        grid.primes = {a.p};
        grid.m_lo = grid.m_hi = a.m;
    } else {
        grid = parse_range(a.range);
    }
    // With no selector, run everything; otherwise run what was asked for.
    const bool lemmas = a.want_lemmas || !a.want_theorems;
    const bool theorems = a.want_theorems || !a.want_lemmas;
    if (theorems && grid.m_hi < 2)
        throw std::invalid_argument("weight-distribution checks need m >= 2");

    bool pass = true;
    Json fields = Json::array();
    Json theorem_cells = Json::array();
    for (auto p : grid.primes) {
        for (std::uint32_t m = grid.m_lo; m <= grid.m_hi; ++m) {
            tc::FieldCtx F(p, m, tc::FieldConfig{ceiling});
            if (lemmas) fields.push_back(verify_field(F, a.weil_samples, a.seed, pass));
            if (theorems && m >= 2) {
                for (bool punct : {false, true}) {
                    auto rep = tc::verify_code_theorem(p, m, punct, a.common.threads, ceiling);
                    theorem_cells.push_back(tc::theorem_report_json(rep));
                    pass = pass && rep.pass;
                }
            }
        }
    }

    Json params;
    if (a.p != 0)
        params["range"] = std::to_string(a.p) + ":" + std::to_string(a.m) + "-" +
                          std::to_string(a.m);
    else
        params["range"] = a.range;
    params["weil_samples"] = a.weil_samples;
    params["seed"] = a.seed;
    params["lemmas"] = lemmas;
    params["theorems"] = theorems;
    params["threads"] = a.common.threads;
    params["ceiling"] = ceiling;

    Json doc;
    doc["manifest"] = make_manifest("verify", params, nullptr, watch.ms());
    doc["fields"] = fields;
    doc["theorems"] = theorem_cells;
    doc["pass"] = pass;

    std::ostringstream pretty;
    pretty << (pass ? "PASS" : "FAIL") << ": " << fields.size() << " field check sets, "
           << theorem_cells.size() << " theorem cells\n";
    for (const auto& t : theorem_cells)
        pretty << "  " << t["theorem"].get<std::string>() << " p=" << t["p"] << " m=" << t["m"]
               << (t["degenerate"].get<bool>() ? " (degenerate)" : "")
               << (t["pass"].get<bool>() ? " ok" : " MISMATCH") << "\n";
    emit(doc, a.common, pretty.str());
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// planar
// ---------------------------------------------------------------------------

struct PlanarArgs {
    std::string family = "square";
    std::uint32_t p = 3, m = 3;
    std::uint32_t k = 1;
    std::uint64_t u = 1;
    std::vector<std::string> params;  // repeatable --param k=2 / u=5
    bool compare = false;
    std::uint64_t planarity_ceiling = tc::kDefaultPlanarityCeiling;
    CommonOpts common;
};

int run_planar(const PlanarArgs& a) {
    Stopwatch watch;
    const std::uint64_t ceiling = resolve_ceiling(a.common);
    tc::FieldCtx F(a.p, a.m, tc::FieldConfig{ceiling});
    std::vector<std::string> tokens;
    tokens.push_back("k=" + std::to_string(a.k));
    tokens.push_back("u=" + std::to_string(a.u));
    for (const auto& t : a.params) tokens.push_back(t);
    const tc::PlanarSpec spec = parse_planar_spec(a.family, tokens);

    const std::string why = tc::admissibility_failure(spec, F);
    if (!why.empty()) throw std::invalid_argument("inadmissible parameters: " + why);

    const auto conditions = tc::check_structural_conditions(spec, F);
    const auto measure = tc::nonlinearity_measure(spec, F, a.planarity_ceiling);

    Json doc;
    Json params;
    params["family"] = a.family;
    params["k"] = spec.k;
    params["u"] = spec.u_enc;
    params["p"] = a.p;
    params["m"] = a.m;
    params["compare"] = a.compare;
    params["threads"] = a.common.threads;
    params["ceiling"] = ceiling;
    params["planarity_ceiling"] = a.planarity_ceiling;
    doc["manifest"] = make_manifest("planar", params, &F, 0);  // patched below

    doc["family"] = a.family;
    doc["params"] = tc::planar_params_json(spec);
    doc["p"] = a.p;
    doc["m"] = a.m;
    doc["conditions"] = tc::conditions_to_json(conditions);
    doc["P_f"] = measure.ratio_string();
    doc["planar"] = measure.is_planar();

    std::ostringstream pretty;
    pretty << a.family << " on GF(" << a.p << "^" << a.m << "): P_f = " << measure.ratio_string()
           << (measure.is_planar() ? " (planar)" : " (NOT planar)") << "\n";

    if (a.compare) {
        const tc::DefiningSet d = tc::build_defining_set(F);
        const tc::DefiningSet df = tc::build_planar_set(spec, F);
        const auto cd = tc::weight_distribution(tc::build_code(F, d).linear(), a.common.threads,
                                                ceiling);
        const auto cdf = tc::weight_distribution(tc::build_code(F, df).linear(), a.common.threads,
                                                 ceiling);
        auto strip = [](tc::WeightDistribution wd) {
            wd.counts.erase(0);
            return wd;
        };
        const auto cds = strip(cd), cdfs = strip(cdf);
        const bool equal = cds.n == cdfs.n && cds.k == cdfs.k && cds.counts == cdfs.counts;
        doc["equal_to_CD"] = equal;
        doc["cd"] = tc::code_report_json(F, d, cd, false);
        doc["cdf"] = tc::code_report_json(F, df, cdf, false);
        pretty << "  code comparison: " << (equal ? "identical parameters and weights" : "DIFFER")
               << "\n";
    }

    doc["manifest"]["wall_time_ms"] = watch.ms();
    emit(doc, a.common, pretty.str());
    return 0;
}

// ---------------------------------------------------------------------------
// sss
// ---------------------------------------------------------------------------

struct SssArgs {
    std::uint32_t p = 3, m = 5;
    bool punctured = false;
    std::uint32_t secret = 0;
    std::uint64_t seed = 1;
    std::string bundle_path;
    std::string coalition;
    std::uint64_t max_sets = 0;  // 0 = no cap
    CommonOpts common;
};

tc::TraceCode build_base(const tc::FieldCtx& F, bool punctured) {
    tc::DefiningSet d = tc::build_defining_set(F);
    if (punctured) d = tc::puncture_representatives(F, d);
    return tc::build_code(F, std::move(d));
}

std::vector<std::uint64_t> parse_coalition(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoull(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty coalition");
    return out;
}

int run_sss_setup(const SssArgs& a) {
    Stopwatch watch;
    const std::uint64_t ceiling = resolve_ceiling(a.common);
    tc::FieldCtx F(a.p, a.m, tc::FieldConfig{ceiling});
    const tc::TraceCode base = build_base(F, a.punctured);
    const tc::MasseyScheme scheme(base.linear());
    const auto dd = tc::dual_minimum_distance(base.linear(), ceiling);

    Json params;
    params["p"] = a.p;
    params["m"] = a.m;
    params["punctured"] = a.punctured;
    params["ceiling"] = ceiling;

    Json doc;
    doc["manifest"] = make_manifest("sss setup", params, &F, watch.ms());
    doc["kind"] = tc::kind_string(base.defining_set);
    doc["n"] = base.linear().n();
    doc["k"] = base.linear().k();
    doc["participants"] = scheme.participants();
    doc["dual_dimension"] = scheme.dual_dimension();
    doc["d_dual"] = Json{{"value", dd.value}, {"exact", dd.exact}};

    std::ostringstream pretty;
    pretty << "scheme on the dual of a [" << base.linear().n() << ", " << base.linear().k()
           << "] code: " << scheme.participants() << " participants\n";
    emit(doc, a.common, pretty.str());
    return 0;
}

int run_sss_deal(const SssArgs& a) {
    Stopwatch watch;
    const std::uint64_t ceiling = resolve_ceiling(a.common);
    if (a.bundle_path.empty()) throw std::invalid_argument("--bundle is required for deal");
    tc::FieldCtx F(a.p, a.m, tc::FieldConfig{ceiling});
    const tc::TraceCode base = build_base(F, a.punctured);
    const tc::MasseyScheme scheme(base.linear());
    const tc::ShareDeal sd = tc::deal(scheme, static_cast<tc::PrimeElement>(a.secret), a.seed);

    const Json bundle = tc::share_bundle_json(F, tc::kind_string(base.defining_set), sd);
    std::ofstream out(a.bundle_path);
    if (!out.good()) throw std::invalid_argument("cannot write bundle file: " + a.bundle_path);
    out << bundle.dump(2) << "\n";

    Json params;
    params["p"] = a.p;
    params["m"] = a.m;
    params["punctured"] = a.punctured;
    params["seed"] = a.seed;
    params["ceiling"] = ceiling;

    Json doc;
    doc["manifest"] = make_manifest("sss deal", params, &F, watch.ms());
    doc["bundle"] = a.bundle_path;
    doc["participants"] = scheme.participants();
    doc["note"] = "the secret is never written to the bundle";

    std::ostringstream pretty;
    pretty << "dealt " << scheme.participants() << " shares to " << a.bundle_path << "\n";
    emit(doc, a.common, pretty.str());
    return 0;
}

int run_sss_recover(const SssArgs& a) {
    Stopwatch watch;
    const std::uint64_t ceiling = resolve_ceiling(a.common);
    if (a.bundle_path.empty()) throw std::invalid_argument("--bundle is required for recover");
    std::ifstream in(a.bundle_path);
    if (!in.good()) throw std::invalid_argument("bundle file not readable: " + a.bundle_path);
    Json bundle_json;
    try {
        in >> bundle_json;
    } catch (const Json::exception& e) {
        throw std::invalid_argument("bundle is not valid JSON: " + std::string(e.what()));
    }
    const tc::ShareBundle bundle = tc::parse_share_bundle(bundle_json);

    bool punctured;
    if (bundle.kind == "full")
        punctured = false;
    else if (bundle.kind == "punctured")
        punctured = true;
    else
        throw std::invalid_argument("unsupported bundle kind: " + bundle.kind);

    tc::FieldCtx F(bundle.p, bundle.m, tc::FieldConfig{ceiling});
    const tc::TraceCode base = build_base(F, punctured);
    const tc::MasseyScheme scheme(base.linear());
    if (bundle.shares.size() != scheme.participants())
        throw tc::integrity_error("bundle share count does not match the scheme");

    const auto coalition = parse_coalition(a.coalition);
    std::vector<std::uint16_t> shares;
    for (auto i : coalition) {
        if (i == 0 || i > bundle.shares.size())
            throw std::invalid_argument("participant index out of range");
        shares.push_back(bundle.shares[i - 1]);
    }
    const tc::RecoveryResult rec = tc::recover(scheme, coalition, shares);

    Json params;
    params["bundle"] = a.bundle_path;
    params["coalition"] = a.coalition;
    params["ceiling"] = ceiling;

    Json doc;
    doc["manifest"] = make_manifest("sss recover", params, &F, watch.ms());
    doc["is_access_set"] = rec.is_access_set;
    if (rec.is_access_set)
        doc["secret"] = rec.secret;
    else
        doc["secret"] = nullptr;

    std::ostringstream pretty;
    if (rec.is_access_set)
        pretty << "recovered secret: " << static_cast<unsigned>(rec.secret) << "\n";
    else
        pretty << "not an access set\n";
    emit(doc, a.common, pretty.str());
    return 0;
}

int run_sss_structure(const SssArgs& a) {
    Stopwatch watch;
    const std::uint64_t ceiling = resolve_ceiling(a.common);
    tc::FieldCtx F(a.p, a.m, tc::FieldConfig{ceiling});
    const tc::TraceCode base = build_base(F, a.punctured);
    const tc::MasseyScheme scheme(base.linear());
    const auto dd = tc::dual_minimum_distance(base.linear(), ceiling);
    const auto access = tc::access_structure(base.linear(), ceiling);

    Json params;
    params["p"] = a.p;
    params["m"] = a.m;
    params["punctured"] = a.punctured;
    params["ceiling"] = ceiling;
    params["max_sets"] = a.max_sets;

    Json doc;
    doc["manifest"] = make_manifest("sss structure", params, &F, watch.ms());
    doc["kind"] = tc::kind_string(base.defining_set);
    doc["n"] = base.linear().n();
    doc["k"] = base.linear().k();
    doc["participants"] = scheme.participants();
    if (a.punctured) {
        // Informational only: a closing claim elsewhere puts the participant
        // count at p^(m-2); the enumerated scheme has n-1.  Both are
        // reported, neither is asserted.
        std::uint64_t claimed = 1;
        for (std::uint32_t i = 0; i + 2 < a.m; ++i) claimed *= a.p;
        doc["claimed_participants"] = claimed;
    }
    doc["d_dual"] = Json{{"value", dd.value}, {"exact", dd.exact}};

    Json aj = tc::access_structure_json(access);
    doc["minimal_set_count"] = access.minimal_sets.size();
    if (a.max_sets != 0 && access.minimal_sets.size() > a.max_sets) {
        Json truncated = Json::array();
        for (std::uint64_t i = 0; i < a.max_sets; ++i) truncated.push_back(access.minimal_sets[i]);
        aj["minimal_access_sets"] = truncated;
        aj["sets_truncated"] = true;
    }
    for (auto& [key, value] : aj.items()) doc[key] = value;

    Json theory;
    theory["predicted_total"] = tc::predicted_minimal_access_sets(a.p, base.linear().k());
    if (dd.exact && dd.value >= 3 && base.linear().k() >= 2)
        theory["predicted_per_single_participant"] =
            tc::predicted_sets_containing_group(a.p, base.linear().k(), dd.value, 1);
    else
        theory["predicted_per_single_participant"] = nullptr;
    doc["theory"] = theory;

    std::ostringstream pretty;
    pretty << access.minimal_sets.size() << " minimal access sets over "
           << scheme.participants() << " participants; " << access.dictators.size()
           << " dictatorial participants\n";
    emit(doc, a.common, pretty.str());
    return 0;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

struct BoundsArgs {
    std::uint32_t p = 3;
    std::uint64_t n = 0, k = 0, d = 0;
    CommonOpts common;
};

int run_bounds(const BoundsArgs& a) {
    Stopwatch watch;
    const std::uint64_t g = tc::griesmer_min_length(a.p, a.k, a.d);

    Json params;
    params["p"] = a.p;
    params["n"] = a.n;
    params["k"] = a.k;
    params["d"] = a.d;

    Json doc;
    doc["manifest"] = make_manifest("bounds", params, nullptr, watch.ms());
    doc["griesmer"] = g;
    doc["optimal"] = a.n == g;

    std::ostringstream pretty;
    pretty << "griesmer minimum length for [*, " << a.k << ", " << a.d << "] over GF(" << a.p
           << "): " << g << (a.n == g ? " (met with equality)" : "") << "\n";
    emit(doc, a.common, pretty.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace-code verification workbench"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a code and its weight distribution");
    construct->add_option("--p", ca.p, "odd prime")->required();
    construct->add_option("--m", ca.m, "extension degree")->required();
    construct->add_flag("--punctured", ca.punctured, "use orbit representatives");
    construct->add_option("--planar", ca.planar_spec,
                          "defining set from a planar function, e.g. ding_yuan:u=2");
    construct->add_option("--modulus-index", ca.modulus_index,
                          "pick the i-th irreducible modulus instead of the canonical one");
    construct->add_flag("--no-defining-set", ca.no_defining_set,
                        "omit the defining_set array from the output");
    add_common(construct, ca.common);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check closed forms against enumeration");
    verify->add_option("--range", va.range, "grid \"p1,p2:mlo-mhi\" (default 3,5:2-5)");
    verify->add_option("--p", va.p, "single-cell prime (with --m, overrides --range)");
    verify->add_option("--m", va.m, "single-cell extension degree");
    verify->add_option("--weil-samples", va.weil_samples, "random quadratic sums per field");
    verify->add_option("--seed", va.seed, "seed for sampled checks");
    verify->add_flag("--all-lemmas", va.want_lemmas, "run the character-sum checks");
    verify->add_flag("--theorems", va.want_theorems, "run the weight-distribution checks");
    add_common(verify, va.common);

    PlanarArgs pa;
    auto* planar = app.add_subcommand("planar", "planarity measure and induced codes");
    planar->add_option("--family", pa.family,
                       "square|dembowski_ostrom|coulter_matthews|ding_yuan")
        ->required();
    planar->add_option("--p", pa.p, "odd prime")->required();
    planar->add_option("--m", pa.m, "extension degree")->required();
    planar->add_option("--k", pa.k, "exponent parameter for the monomial families");
    planar->add_option("--u", pa.u, "coefficient encoding for the quartic family");
    planar->add_option("--param", pa.params, "parameter as key=value, e.g. --param u=1");
    planar->add_flag("--compare", pa.compare, "also build both codes and compare");
    planar->add_option("--planarity-ceiling", pa.planarity_ceiling,
                       "max q for the quadratic-cost measure");
    add_common(planar, pa.common);

    SssArgs sa;
    auto* sss = app.add_subcommand("sss", "secret sharing on the dual code");
    sss->require_subcommand(1);
    auto add_scheme_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", sa.p, "odd prime");
        cmd->add_option("--m", sa.m, "extension degree");
        cmd->add_flag("--punctured", sa.punctured, "base on the punctured code (default: full)");
    };
    auto* setup = sss->add_subcommand("setup", "describe the scheme");
    add_scheme_opts(setup);
    add_common(setup, sa.common);
    auto* dealc = sss->add_subcommand("deal", "deal shares into a bundle file");
    add_scheme_opts(dealc);
    dealc->add_option("--secret", sa.secret, "secret value in [0, p)")->required();
    dealc->add_option("--seed", sa.seed, "deal seed")->required();
    dealc->add_option("--bundle", sa.bundle_path, "output bundle path")->required();
    add_common(dealc, sa.common);
    auto* recoverc = sss->add_subcommand("recover", "recover from a coalition");
    recoverc->add_option("--bundle", sa.bundle_path, "bundle path")->required();
    recoverc->add_option("--coalition", sa.coalition, "comma-separated participant indices")
        ->required();
    add_common(recoverc, sa.common);
    auto* structure = sss->add_subcommand("structure", "minimal access sets and statistics");
    add_scheme_opts(structure);
    structure->add_option("--max-sets", sa.max_sets, "truncate the sets list in the output");
    add_common(structure, sa.common);

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Griesmer bound arithmetic");
    bounds->add_option("--p", ba.p, "odd prime")->required();
    bounds->add_option("--n", ba.n, "length")->required();
    bounds->add_option("--k", ba.k, "dimension")->required();
    bounds->add_option("--d", ba.d, "minimum distance")->required();
    add_common(bounds, ba.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) return run_construct(ca);
        if (*verify) return run_verify(va);
        if (*planar) return run_planar(pa);
        if (*sss) {
            if (*setup) return run_sss_setup(sa);
            if (*dealc) return run_sss_deal(sa);
            if (*recoverc) return run_sss_recover(sa);
            if (*structure) return run_sss_structure(sa);
        }
        if (*bounds) return run_bounds(ba);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const tc::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const tc::integrity_error& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
