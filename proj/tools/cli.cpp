/*
   Copyright 2026 The scatlin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "scatlin/scatlin.hpp"

namespace scatlin::cli {

namespace {

using io::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Common {
    std::string field = "3^1";
    unsigned workers = default_workers();
    bool table = false;
};

struct PolyArgs {
    std::string poly;
    std::string family;
    std::string h;
    std::string delta;
};

void add_poly_args(CLI::App* app, PolyArgs& a) {
    app->add_option("--poly", a.poly, "JSON coefficients or family spec tag[:elt]");
    app->add_option("--family", a.family, "family tag");
    app->add_option("--h", a.h, "parameter h");
    app->add_option("--delta", a.delta, "parameter delta");
}

io::PolySpec resolve_poly(const FieldPtr& F, const PolyArgs& a) {
    if (!a.poly.empty()) return io::parse_poly_spec(F, a.poly);
    if (a.family.empty()) throw CLI::ValidationError("--poly or --family is required");
    std::string spec = a.family;
    const std::string& param = !a.h.empty() ? a.h : a.delta;
    if (!param.empty()) spec += ":" + param;
    return io::parse_poly_spec(F, spec);
}

json header(const std::vector<std::string>& args, const Field& F) {
    std::string echo = "scatlin";
    for (auto& a : args) echo += " " + a;
    return json{{"command", echo}, {"version", SCATLIN_VERSION}, {"field", io::field_summary(F)}};
}

void emit(std::ostream& out, const json& j, bool table) { out << (table ? io::table(j) : j.dump(2) + "\n"); }

std::vector<Elem> h_list(const Field& F, const std::string& h) {
    if (h.empty() || h == "all") return enumerate_h(F, natural_variant(F));
    return {F.parse(h)};
}

// ---- reproduction suites ----

struct Suite {
    json assertions = json::array();
    bool pass = true;
    void expect(const std::string& name, bool cond, json detail = nullptr) {
        assertions.push_back(json{{"assertion", name}, {"pass", cond}, {"detail", std::move(detail)}});
        pass = pass && cond;
    }
};

using SuiteFn = std::function<FieldPtr(Suite&, unsigned)>;

FieldPtr suite_case1_positive(Suite& s, unsigned workers, u64 p) {
    auto F = Field::make(p, 1);
    const QPoly f = build(F, {FamilyTag::case1, std::nullopt});
    ScanOptions o{workers};
    const auto spec = weight_spectrum(f, o);
    const u64 expect = (F.get()->order()) / (F->q() - 1);
    s.expect("oracle scattered", is_scattered_oracle(f, o).scattered);
    s.expect("dickson scattered", is_scattered_dickson(f, o).scattered);
    s.expect("spectrum is {1: (q^6-1)/(q-1)}", spec.counts == std::map<unsigned, std::uint64_t>{{1, expect}},
             io::to_json(*F, spec));
    return F;
}

FieldPtr suite_case1_q7(Suite& s, unsigned workers) {
    auto F = Field::make(7, 1);
    const QPoly f = build(F, {FamilyTag::case1, std::nullopt});
    ScanOptions o{workers};
    const auto orc = is_scattered_oracle(f, o);
    const auto dk = is_scattered_dickson(f, o);
    s.expect("oracle non-scattered", !orc.scattered, io::to_json(*F, orc));
    s.expect("dickson non-scattered", !dk.scattered, io::to_json(*F, dk));
    if (dk.witness) {
        const Elem m = *dk.witness;
        s.expect("witness m^2 = -4", F->mul(m, m) == F->neg(F->from_int(4)), F->format(m));
        s.expect("witness in F_{q^2} \\ F_q", F->in_subfield(m, 2) && !F->in_subfield(m, 1));
    }
    return F;
}

FieldPtr suite_case2_q3(Suite& s, unsigned workers) {
    auto F = Field::make(3, 1);
    ScanOptions o{workers};
    const auto hs = enumerate_h(*F, HVariant::odd);
    s.expect("28 valid h", hs.size() == 28, hs.size());
    json bad = json::array();
    for (Elem h : hs) {
        const QPoly f = build(F, {FamilyTag::new_fh, h});
        if (!is_scattered_oracle(f, o).scattered || !is_scattered_dickson(f, o).scattered) bad.push_back(F->format(h));
    }
    s.expect("every f_h scattered by both methods", bad.empty(), bad);
    return F;
}

FieldPtr suite_even_q4(Suite& s, unsigned workers) {
    auto F = Field::make(2, 2);
    ScanOptions o{workers};
    const auto hs = enumerate_h(*F, HVariant::even);
    s.expect("q^3 + 1 valid h", hs.size() == 65, hs.size());
    json bad = json::array();
    for (Elem h : hs) {
        const QPoly f = build(F, {FamilyTag::new_fh, h});
        const Elem m = F->add(F->frob(h, 2), F->frob(h, 1));
        const bool ok = point_weight(f, m) >= 2 && dickson_common_root(f, m) && !is_scattered_dickson(f, o).scattered;
        if (!ok) bad.push_back(F->format(h));
    }
    s.expect("witness h^{q^2}+h^q accepted by both deciders for every h", bad.empty(), bad);
    return F;
}

FieldPtr suite_intn_q3(Suite& s, unsigned) {
    auto F = Field::make(3, 1);
    json bad = json::array();
    for (Elem h : enumerate_h(*F, HVariant::odd)) {
        const auto G = gamma_of(F, h);
        const auto r1 = intn(G, 1), r5 = intn(G, 5);
        const bool ok = r1.intn == 3 && r5.intn == 3 && r1.dims_chain.size() >= 3 && r1.dims_chain[0] == 3 &&
                        r1.dims_chain[1] == 1 && r1.dims_chain[2] == -1;
        if (!ok) bad.push_back(json{{"h", F->format(h)}, {"result", io::to_json(r1)}});
    }
    s.expect("chain (3, 1, -1) and intn 3 under sigma and sigma^5", bad.empty(), bad);
    return F;
}

EquivWitness trinomial_witness(const Field& F, Elem h) {
    const Elem one = F.one(), hi = F.inv(h), h2 = F.mul(h, h), h3 = F.mul(h2, h);
    return {0, F.sub(hi, h), one, F.add(F.sub(F.sub(hi, one), h3), h2), F.sub(F.sub(h, h2), one)};
}

FieldPtr suite_trinomial_q3(Suite& s, unsigned workers) {
    auto F = Field::make(3, 1);
    int n = 0;
    for (Elem h : enumerate_h(*F, HVariant::odd)) {
        if (!F->in_subfield(h, 2)) continue;
        ++n;
        const QPoly fh = build(F, {FamilyTag::new_fh, h});
        const QPoly tr = build(F, {FamilyTag::trinomial, h});
        const auto w = trinomial_witness(*F, h);
        s.expect("explicit witness maps U_h onto U_tri, h = " + F->format(h),
                 verify_witness(fh, tr, w) && verify_witness_pointwise(fh, tr, w, F->size()));
        const auto v = gl_equivalent(fh, tr, {workers});
        s.expect("search finds a witness, h = " + F->format(h),
                 v.kind == EquivKind::equivalent && verify_witness(fh, tr, *v.witness), io::to_json(*F, v));
    }
    s.expect("h in F_{q^2} exist", n > 0, n);
    return F;
}

FieldPtr suite_l4_q5(Suite& s, unsigned workers) {
    auto F = Field::make(5, 1);
    const Elem h = F->from_int(2);
    const QPoly fh = build(F, {FamilyTag::new_fh, h});
    bool any = false;
    for (Elem delta : mz_deltas(*F))
        for (auto var : {L4Variant::trin, L4Variant::trin2}) {
            const auto r = check_system_L4(F, h, delta, var);
            if (!r.found) continue;
            any = true;
            const Elem k = *r.k;
            const Elem poly = F->add(F->sub(F->mul(F->from_int(9), F->mul(k, k)), F->mul(F->from_int(3), k)),
                                     F->from_int(5));
            s.expect("9k^2 - 3k + 5 = 0", F->is_zero(poly), F->format(k));
            s.expect("witness verifies", verify_witness(fh, l4_target(F, delta, var), *r.witness),
                     io::to_json(*F, *r.witness));
            const auto v = gl_equivalent(fh, l4_target(F, delta, var), {workers});
            s.expect("search agrees", v.kind == EquivKind::equivalent);
        }
    s.expect("system solvable for h = 2", any);
    return F;
}

FieldPtr suite_mrd_q3(Suite& s, unsigned workers) {
    auto F = Field::make(3, 1);
    const Elem h = enumerate_h(*F, HVariant::odd).front();
    const RankCode C = code_from(build(F, {FamilyTag::new_fh, h}));
    const auto dist = rank_distribution(C, {DistributionMode::orbit, workers});
    const auto v = mrd_verdict(dist);
    const u64 q12 = F->size() * F->size();
    s.expect("count(0) = 1", dist.counts.at(0) == 1, io::to_json(dist));
    s.expect("total q^12", dist.total() == q12);
    s.expect("min distance 5", v.min_distance == 5, v.min_distance);
    s.expect("Singleton equality", v.singleton_equality);
    const auto id = left_idealiser_field_check(C);
    s.expect("left idealiser closure for all nonzero c", id.closed && id.faithful && id.checked == F->size() - 1,
             id.checked);
    return F;
}

const std::map<std::string, SuiteFn>& suites() {
    static const std::map<std::string, SuiteFn> m{
        {"case1-q5", [](Suite& s, unsigned w) { return suite_case1_positive(s, w, 5); }},
        {"case1-q7-negative", suite_case1_q7},
        {"case2-q3", suite_case2_q3},
        {"even-q4-negative", suite_even_q4},
        {"intn-q3", suite_intn_q3},
        {"trinomial-q3", suite_trinomial_q3},
        {"l4-q5-power5", suite_l4_q5},
        {"mrd-q3", suite_mrd_q3},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& reproduce_tags() {
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> t;
        for (auto& [k, v] : suites()) t.push_back(k);
        return t;
    }();
    return tags;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scattered linearized polynomials over F_{q^6}", "scatlin"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(SCATLIN_VERSION));

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", common.field, "field spec p^s");
        sub->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--table,!--json", common.table, "aligned table instead of JSON");
    };

    // check
    PolyArgs check_poly;
    std::string method = "both";
    auto* check = app.add_subcommand("check", "decide scatteredness");
    add_common(check);
    add_poly_args(check, check_poly);
    check->add_option("--method", method)->check(CLI::IsMember({"oracle", "dickson", "both"}));

    // enumerate-h
    std::string variant;
    auto* enum_h = app.add_subcommand("enumerate-h", "parameters h with h^(q^3+1) = -1 (odd) or 1 (even)");
    add_common(enum_h);
    enum_h->add_option("--variant", variant)->check(CLI::IsMember({"odd", "even"}));

    // linset
    PolyArgs lin_poly;
    auto* linset = app.add_subcommand("linset", "weight spectrum of L_f");
    add_common(linset);
    add_poly_args(linset, lin_poly);

    // intn
    std::string intn_h;
    unsigned power = 1;
    auto* intn_cmd = app.add_subcommand("intn", "intersection number of Gamma_h");
    add_common(intn_cmd);
    intn_cmd->add_option("--h", intn_h, "element or 'all'");
    intn_cmd->add_option("--power", power)->check(CLI::IsMember({1, 5}));

    // equiv
    std::string left, right, resume, checkpoint, trin_h;
    std::optional<u64> budget;
    bool pgl = false, trin_search = false;
    auto* equiv = app.add_subcommand("equiv", "GammaL-equivalence search");
    add_common(equiv);
    equiv->add_option("--left", left);
    equiv->add_option("--right", right);
    equiv->add_option("--budget", budget, "triples to try before stopping");
    equiv->add_option("--resume", resume, "checkpoint file to continue from");
    equiv->add_option("--checkpoint", checkpoint, "where to write the cursor when the budget runs out");
    equiv->add_flag("--pgl", pgl, "also try the adjoint of the right side");
    equiv->add_flag("--trinomial-search", trin_search, "compare f_h against every trinomial form");
    equiv->add_option("--h", trin_h, "h for --trinomial-search");

    // mrd
    PolyArgs mrd_poly;
    bool full_dist = false;
    auto* mrd = app.add_subcommand("mrd", "rank distribution of C_f");
    add_common(mrd);
    add_poly_args(mrd, mrd_poly);
    mrd->add_flag("--full-distribution", full_dist, "enumerate all q^12 codewords");

    // lemmas
    std::string lem_h;
    auto* lemmas = app.add_subcommand("lemmas", "auxiliary root classifications for h");
    add_common(lemmas);
    lemmas->add_option("--h", lem_h, "element or 'all'");

    // reproduce
    std::string tag;
    auto* repro = app.add_subcommand("reproduce", "run a theorem reproduction suite");
    repro->add_option("tag", tag)->required()->check(CLI::IsMember(reproduce_tags()));
    repro->add_option("--workers", common.workers)->check(CLI::PositiveNumber);
    repro->add_flag("--table,!--json", common.table);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }

    try {
        const auto t0 = Clock::now();
        if (repro->parsed()) {
            Suite s;
            const FieldPtr F = suites().at(tag)(s, common.workers);
            json j = header(args, *F);
            j["tag"] = tag;
            j["assertions"] = s.assertions;
            j["pass"] = s.pass;
            j["elapsed_ms"] = ms_since(t0);
            emit(out, j, common.table);
            return s.pass ? ok : math_mismatch;
        }

        const FieldPtr F = io::make_field(common.field);
        json j = header(args, *F);
        int code = ok;

        if (check->parsed()) {
            const auto ps = resolve_poly(F, check_poly);
            ScanOptions o{common.workers};
            j["poly"] = io::to_json(ps.poly);
            std::optional<bool> a, b;
            if (method != "dickson") {
                const auto v = is_scattered_oracle(ps.poly, o);
                a = v.scattered;
                j["oracle"] = io::to_json(*F, v);
                j["spectrum"] = io::to_json(*F, weight_spectrum(ps.poly, o));
            }
            if (method != "oracle") {
                const auto v = is_scattered_dickson(ps.poly, o);
                b = v.scattered;
                j["dickson"] = io::to_json(*F, v);
            }
            j["scattered"] = a ? *a : *b;
            if (ps.family) j["baseline_status"] = std::string(baseline_status(*ps.family));
            if (a && b && *a != *b) {
                j["mismatch"] = "oracle and Dickson verdicts differ";
                code = math_mismatch;
            }
        } else if (enum_h->parsed()) {
            const HVariant v = variant.empty() ? natural_variant(*F) : variant == "odd" ? HVariant::odd : HVariant::even;
            json hs = json::array();
            for (Elem h : enumerate_h(*F, v)) hs.push_back(F->format(h));
            j["variant"] = v == HVariant::odd ? "odd" : "even";
            j["count"] = hs.size();
            j["h"] = hs;
        } else if (linset->parsed()) {
            const auto ps = resolve_poly(F, lin_poly);
            const auto spec = weight_spectrum(ps.poly, {common.workers});
            j["poly"] = io::to_json(ps.poly);
            j["spectrum"] = io::to_json(*F, spec);
            j["points"] = spec.size();
            j["mass_conserved"] = spec.mass_conserved(*F);
            j["scattered"] = spec.scattered();
        } else if (intn_cmd->parsed()) {
            json items = json::array();
            for (Elem h : h_list(*F, intn_h)) {
                json r = io::to_json(intn(gamma_of(F, h), power));
                r["h"] = F->format(h);
                items.push_back(r);
            }
            j["power"] = power;
            j["results"] = items;
        } else if (equiv->parsed()) {
            EquivOptions o{common.workers, budget, {}};
            if (trin_search) {
                if (left.empty() && trin_h.empty()) throw CLI::ValidationError("--trinomial-search needs --left or --h");
                const QPoly f = left.empty() ? build(F, {FamilyTag::new_fh, F->parse(trin_h)})
                                             : io::parse_poly_spec(F, left).poly;
                json items = json::array();
                for (Elem t : F->enumerate_subfield(2)) {
                    if (!F->in_subfield(t, 2) || F->mul(t, F->frob(t, 1)) != F->neg(F->one())) continue;
                    const auto v = pgl_linear_sets_equivalent(f, build(F, {FamilyTag::trinomial, t}),
                                                              FamilyTag::trinomial, o);
                    json r = io::to_json(*F, v);
                    r["trinomial_h"] = F->format(t);
                    items.push_back(r);
                }
                j["left"] = io::to_json(f);
                j["trinomials"] = items;
            } else {
                if (left.empty() || right.empty()) throw CLI::ValidationError("--left and --right are required");
                const auto L = io::parse_poly_spec(F, left), R = io::parse_poly_spec(F, right);
                if (!resume.empty()) {
                    std::ifstream in(resume);
                    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + resume);
                    const json cp = json::parse(in);
                    if (cp.at("fingerprint") != io::fingerprint(*F) || cp.at("left") != io::to_json(L.poly) ||
                        cp.at("right") != io::to_json(R.poly))
                        throw Error(ErrorKind::ParseError, "checkpoint belongs to a different search");
                    o.resume = io::cursor_from_json(cp.at("cursor"));
                }
                const EquivVerdict v = pgl && R.family ? pgl_linear_sets_equivalent(L.poly, R.poly, *R.family, o)
                                       : pgl ? pgl_linear_sets_equivalent(L.poly, R.poly, FamilyTag::new_fh, o)
                                             : gl_equivalent(L.poly, R.poly, o);
                j["left"] = io::to_json(L.poly);
                j["right"] = io::to_json(R.poly);
                const json vj = io::to_json(*F, v);
                for (auto& [k, val] : vj.items()) j[k] = val;
                if (v.kind == EquivKind::budget_exceeded) {
                    j["cursor"] = io::to_json(v.cursor);
                    if (!checkpoint.empty()) {
                        std::ofstream cp(checkpoint);
                        cp << json{{"fingerprint", io::fingerprint(*F)},
                                   {"left", io::to_json(L.poly)},
                                   {"right", io::to_json(R.poly)},
                                   {"cursor", io::to_json(v.cursor)}}
                                  .dump(2)
                           << "\n";
                    }
                }
            }
        } else if (mrd->parsed()) {
            const auto ps = resolve_poly(F, mrd_poly);
            const RankCode C = code_from(ps.poly);
            const auto dist = rank_distribution(
                C, {full_dist ? DistributionMode::full : DistributionMode::orbit, common.workers});
            const auto v = mrd_verdict(dist);
            j["poly"] = io::to_json(ps.poly);
            j["min_distance"] = v.min_distance;
            j["distribution"] = io::to_json(dist);
            j["singleton_equality"] = v.singleton_equality;
            j["mrd"] = v.mrd;
        } else if (lemmas->parsed()) {
            json items = json::array();
            for (Elem h : h_list(*F, lem_h)) {
                json r{{"h", F->format(h)}};
                const bool h4 = F->pow(h, 4) == F->one();
                try {
                    if (!h4) {
                        const auto l1 = lemma1_checks(*F, h);
                        r["lemma1"] = json{{"item1", l1.item1},
                                           {"item2", l1.item2},
                                           {"item3", l1.item3 ? json(*l1.item3) : json(nullptr)},
                                           {"item4_lhs_zero", l1.item4_lhs_zero},
                                           {"item4_class", l1.item4_class},
                                           {"item4_consistent", l1.item4_consistent}};
                        if (!l1.item4_consistent) code = math_mismatch;
                    }
                    json roots = json::array();
                    for (auto& rt : lemma_roots(*F, h, h4 ? LemmaWhich::lemma3 : LemmaWhich::lemma2, common.workers))
                        roots.push_back(json{{"sigma", F->format(rt.sigma)}, {"class", std::string(to_string(rt.cls))}});
                    r[h4 ? "lemma3_roots" : "lemma2_roots"] = roots;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::ClassificationGap && e.kind() != ErrorKind::HypothesisViolated) throw;
                    r["error"] = std::string(to_string(e.kind())) + ": " + e.what();
                    code = math_mismatch;
                }
                items.push_back(r);
            }
            j["results"] = items;
        }
        j["elapsed_ms"] = ms_since(t0);
        emit(out, j, common.table);
        return code;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::ParseError:
            case ErrorKind::NotPrime:
            case ErrorKind::TooLarge:
            case ErrorKind::InvalidParameter:
            case ErrorKind::ParityMismatch:
            case ErrorKind::ZeroParameter:
            case ErrorKind::ZeroMap:
            case ErrorKind::DegenerateInput:
            case ErrorKind::HypothesisViolated:
            case ErrorKind::PreconditionFailed:
            case ErrorKind::BudgetExceeded: return usage_error;
            default: return math_mismatch;
        }
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

}  // namespace scatlin::cli
