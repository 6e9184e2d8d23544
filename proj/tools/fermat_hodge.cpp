/*
   Copyright 2026 The fermat-hodge authors

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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fermat/presets.hpp"
#include "fermat/qform.hpp"
#include "fermat/serialize.hpp"
#include "fermat/tangent.hpp"

namespace {

using fermat::Json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string emit = "json";
    std::string out_path;
    bool approx = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--emit", opts.emit, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
    cmd->add_flag("--approx", opts.approx,
                  "Add non-authoritative floating-point renderings of exact values");
}

Json approx_json(const fermat::Cyclo& z) {
    const std::complex<double> v = z.to_complex();
    return Json::array({v.real(), v.imag()});
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_ints(const Json& arr, const char* sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : arr) {
        if (!first) os << sep;
        first = false;
        os << v.get<long>();
    }
    return os.str();
}

std::string rational_str(const Json& pair) {
    const auto part = [](const Json& j) {
        return j.is_string() ? j.get<std::string>() : std::to_string(j.get<std::int64_t>());
    };
    const std::string den = part(pair[1]);
    return den == "1" ? part(pair[0]) : part(pair[0]) + "/" + den;
}

std::string cyclo_str(const Json& j) { return fermat::cyclo_from_json(j).to_string(); }

// Flat renderings for csv/text; json is the authoritative format.
std::string render_csv(const Json& report) {
    std::ostringstream os;
    const std::string type = report.value("type", "");
    if (type == "fake-cycle-certificate") {
        os << "key,value\n";
        os << "certified," << (report.at("certified").get<bool>() ? "true" : "false") << "\n";
        os << "true_linear," << (report.at("true_linear").get<bool>() ? "true" : "false") << "\n";
        os << "beta_prime,period\n";
        for (const auto& rec : report.at("periods"))
            os << csv_escape(join_ints(rec.at("beta_prime"))) << ","
               << csv_escape(rational_str(rec.at("value"))) << "\n";
        return os.str();
    }
    if (type == "periods-report") {
        os << "beta_prime,value\n";
        for (const auto& rec : report.at("records")) {
            const Json& v = rec.at("value");
            const std::string rendered =
                v.contains("coeff")
                    ? cyclo_str(v.at("coeff")) + " * Gamma" + v.at("gamma").dump() + " * (2 pi i)^" +
                          v.at("pi_power").dump()
                    : cyclo_str(v);
            os << csv_escape(join_ints(rec.at("beta_prime"))) << "," << csv_escape(rendered) << "\n";
        }
        return os.str();
    }
    if (type == "hodge-numbers-report") {
        os << "p,q,h\n";
        for (const auto& rec : report.at("values"))
            os << rec.at("p").get<int>() << "," << rec.at("q").get<int>() << ","
               << rec.at("h").get<long>() << "\n";
        return os.str();
    }
    if (type == "lemma-check-report") {
        os << "d,q,exceptional,identity_ok\n";
        for (const auto& rec : report.at("records"))
            os << rec.at("d").get<int>() << "," << rec.at("q").get<int>() << ","
               << (rec.at("exceptional").get<bool>() ? "true" : "false") << ","
               << (rec.at("identity_ok").get<bool>() ? "true" : "false") << "\n";
        return os.str();
    }
    // generic fallback: top-level scalar fields
    os << "key,value\n";
    for (const auto& [k, v] : report.items())
        if (!v.is_structured()) os << csv_escape(k) << "," << csv_escape(v.dump()) << "\n";
    return os.str();
}

std::string render_text(const Json& report) {
    std::ostringstream os;
    const std::string type = report.value("type", "");
    if (type == "fake-cycle-certificate") {
        os << "certified:    " << (report.at("certified").get<bool>() ? "yes" : "NO") << "\n";
        os << "true linear:  " << (report.at("true_linear").get<bool>() ? "yes" : "no") << "\n";
        if (!report.at("spec").at("c_lambda").is_null())
            os << "c_lambda:     " << cyclo_str(report.at("spec").at("c_lambda")) << "\n";
        os << "periods:      " << report.at("periods").size() << " checked";
        if (report.at("certified").get<bool>()) os << ", all rational";
        os << "\n";
        if (!report.at("failure").is_null())
            os << "failure at beta' = (" << join_ints(report.at("failure").at("beta_prime"))
               << "): " << cyclo_str(report.at("failure").at("value")) << "\n";
        return os.str();
    }
    if (type == "tangent-report") {
        os << "tangent codim: " << report.at("codim").get<int>() << "\n";
        if (!report.at("colon_dim").is_null())
            os << "colon dim (degree " << report.at("degree").get<int>()
               << "): " << report.at("colon_dim").get<int>() << "\n";
        if (!report.at("idealfake_equal").is_null())
            os << "generator ideal matches: "
               << (report.at("idealfake_equal").get<bool>() ? "yes" : "NO") << "\n";
        if (!report.at("hilbert_function").is_null())
            os << "hilbert function: " << report.at("hilbert_function").dump() << "\n";
        return os.str();
    }
    if (type == "qform-report") {
        os << "pair index: " << report.at("pair_index").get<int>() << "\n";
        if (report.contains("witness_found") && !report.at("witness_found").is_null())
            os << "witness found: " << (report.at("witness_found").get<bool>() ? "yes" : "no") << "\n";
        os << "class zero: " << (report.at("class_zero").get<bool>() ? "yes" : "no") << "\n";
        if (report.contains("reason") && !report.at("reason").is_null())
            os << "reason: " << report.at("reason").get<std::string>() << "\n";
        return os.str();
    }
    return report.dump(2) + "\n";
}

void write_report(Json report, const OutputOptions& opts) {
    if (report.is_object() && report.contains("schema_version"))
        report["generator"] = std::string("fermat-hodge/") + fermat::kToolVersion;
    std::string rendered;
    if (opts.emit == "json")
        rendered = report.dump(2) + "\n";
    else if (opts.emit == "csv")
        rendered = render_csv(report);
    else
        rendered = render_text(report);
    if (opts.out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(opts.out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + opts.out_path);
        out << rendered;
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

struct SpecSource {
    std::string preset;
    std::string inline_c;
    std::string c_file;
    std::string spec_file;
    int d = 0;
    int n = 0;
};

void add_spec_source(CLI::App* cmd, SpecSource& src, bool with_dims) {
    if (with_dims) {
        cmd->add_option("--d", src.d, "Degree (3, 4 or 6)");
        cmd->add_option("--n", src.n, "Even dimension");
    }
    cmd->add_option("--preset", src.preset, "Named c-vector preset");
    cmd->add_option("--c", src.inline_c, "Inline JSON array of cyclotomic numbers");
    cmd->add_option("--c-file", src.c_file, "File with a JSON array of cyclotomic numbers");
    cmd->add_option("--spec", src.spec_file, "Spec or certificate JSON file (replayable)");
}

fermat::FakeCycleSpec resolve_spec(const SpecSource& src) {
    int sources = 0;
    for (const std::string* s : {&src.preset, &src.inline_c, &src.c_file, &src.spec_file})
        if (!s->empty()) ++sources;
    if (sources != 1)
        throw std::invalid_argument("exactly one of --preset, --c, --c-file, --spec is required");
    if (!src.preset.empty()) {
        fermat::FakeCycleSpec spec = fermat::preset_spec(src.preset);
        if (src.d != 0 && src.d != spec.ctx.d)
            throw std::invalid_argument("--d disagrees with the preset");
        if (src.n != 0 && src.n != spec.ctx.n)
            throw std::invalid_argument("--n disagrees with the preset");
        return spec;
    }
    if (!src.spec_file.empty()) return fermat::spec_from_any_json(load_json_file(src.spec_file));
    if (src.d == 0 || src.n == 0)
        throw std::invalid_argument("--d and --n are required with --c/--c-file");
    Json arr = src.inline_c.empty() ? load_json_file(src.c_file) : Json::parse(src.inline_c);
    std::vector<fermat::Cyclo> c;
    for (const Json& ci : arr) c.push_back(fermat::cyclo_from_json(ci));
    return fermat::make_spec(src.d, src.n, std::move(c));
}

// Translate a RunConfig JSON object into an argv-style invocation:
// {"command": "fake-cycle", "preset": "cubic-all-ones", "solve": true, ...}.
// The "parallelism" hint is accepted and ignored (all computations are exact
// single-process sweeps).
std::vector<std::string> config_to_args(const Json& config) {
    if (!config.is_object() || !config.contains("command"))
        throw std::invalid_argument("run config must be an object with a \"command\" field");
    std::vector<std::string> args{config.at("command").get<std::string>()};
    if (args[0] == "run") throw std::invalid_argument("run config cannot nest another run");
    for (const auto& [key, value] : config.items()) {
        if (key == "command" || key == "parallelism") continue;
        std::string flag = "--" + key;
        for (auto& ch : flag)
            if (ch == '_') ch = '-';
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else if (value.is_string()) {
            args.push_back(flag);
            args.push_back(value.get<std::string>());
        } else if (value.is_number_integer()) {
            args.push_back(flag);
            args.push_back(std::to_string(value.get<long>()));
        } else {
            throw std::invalid_argument("unsupported config value for " + key);
        }
    }
    return args;
}

int run_cli(std::vector<std::string> args, int depth) {
    CLI::App app{"Exact toolkit for fake linear cycles on Fermat hypersurfaces of degree 3, 4, 6"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    // ---- hodge-numbers ----
    auto* hodge_cmd = app.add_subcommand("hodge-numbers", "Primitive Hodge numbers h^{p,q}_prim");
    struct {
        int d = 0, n = 0, p = -1, q = -1;
        OutputOptions out;
    } hodge_opts;
    hodge_cmd->add_option("--d", hodge_opts.d, "Degree")->required();
    hodge_cmd->add_option("--n", hodge_opts.n, "Even dimension")->required();
    hodge_cmd->add_option("--p", hodge_opts.p, "Restrict to one p");
    hodge_cmd->add_option("--q", hodge_opts.q, "Restrict to one q");
    add_output_options(hodge_cmd, hodge_opts.out);
    hodge_cmd->callback([&] {
        const fermat::FermatContext ctx(hodge_opts.n, hodge_opts.d);
        Json values = Json::array();
        for (int q = 0; q <= ctx.n; ++q) {
            const int p = ctx.n - q;
            if (hodge_opts.p >= 0 && p != hodge_opts.p) continue;
            if (hodge_opts.q >= 0 && q != hodge_opts.q) continue;
            values.push_back(Json{{"p", p}, {"q", q}, {"h", fermat::hodge_number(ctx, p, q)}});
        }
        Json report{{"schema_version", fermat::kSchemaVersion},
                    {"type", "hodge-numbers-report"},
                    {"d", ctx.d},
                    {"n", ctx.n},
                    {"values", values}};
        write_report(report, hodge_opts.out);
    });

    // ---- picmax ----
    auto* picmax_cmd = app.add_subcommand("picmax", "Does every middle zero-free character stay Hodge?");
    struct {
        int d = 0, n = 2;
        OutputOptions out;
    } picmax_opts;
    picmax_cmd->add_option("--d", picmax_opts.d, "Degree")->required();
    picmax_cmd->add_option("--n", picmax_opts.n, "Even dimension")->capture_default_str();
    add_output_options(picmax_cmd, picmax_opts.out);
    picmax_cmd->callback([&] {
        const fermat::FermatContext ctx(picmax_opts.n, picmax_opts.d);
        Json report{{"schema_version", fermat::kSchemaVersion},
                    {"type", "picmax-report"},
                    {"d", ctx.d},
                    {"n", ctx.n},
                    {"maximal", fermat::picmax_check(ctx)}};
        write_report(report, picmax_opts.out);
    });

    // ---- lemma-check ----
    auto* lemma_cmd = app.add_subcommand(
        "lemma-check", "Least nondividing prime classification and the residue identity");
    struct {
        int d = 0, dmax = 0;
        bool witness = false;
        OutputOptions out;
    } lemma_opts;
    lemma_cmd->add_option("--d", lemma_opts.d, "Single degree (>= 5, != 6)");
    lemma_cmd->add_option("--dmax", lemma_opts.dmax, "Check every degree 5..dmax (skipping 6)");
    lemma_cmd->add_flag("--witness", lemma_opts.witness,
                        "Also run the Galois exclusion witness per degree");
    add_output_options(lemma_cmd, lemma_opts.out);
    lemma_cmd->callback([&] {
        if ((lemma_opts.d == 0) == (lemma_opts.dmax == 0))
            throw std::invalid_argument("give exactly one of --d or --dmax");
        Json records = Json::array();
        bool all_ok = true;
        const int lo = lemma_opts.d ? lemma_opts.d : 5;
        const int hi = lemma_opts.d ? lemma_opts.d : lemma_opts.dmax;
        for (int d = lo; d <= hi; ++d) {
            if (d == 6) continue;
            const auto mp = fermat::min_nondividing_prime(d);
            const auto ri = fermat::villasmall_identity_detail(d);
            Json rec{{"d", d},
                     {"q", mp.q},
                     {"exceptional", mp.exceptional},
                     {"identity_ok", ri.ok},
                     {"k", ri.k},
                     {"value", ri.value}};
            if (lemma_opts.witness) {
                const auto w = fermat::no_fake_cycles_witness(d);
                rec["witness_ok"] = w.ok;
                all_ok = all_ok && w.ok;
            }
            all_ok = all_ok && ri.ok;
            records.push_back(std::move(rec));
        }
        Json report{{"schema_version", fermat::kSchemaVersion},
                    {"type", "lemma-check-report"},
                    {"records", records},
                    {"all_ok", all_ok}};
        write_report(report, lemma_opts.out);
        if (!all_ok) exit_code = kExitMathFailure;
    });

    // ---- periods ----
    auto* periods_cmd = app.add_subcommand("periods", "Exact periods over all vanishing cycles");
    struct {
        SpecSource src;
        std::string beta;
        bool solve = false;
        OutputOptions out;
    } periods_opts;
    add_spec_source(periods_cmd, periods_opts.src, true);
    periods_cmd->add_option("--beta", periods_opts.beta,
                            "Raw residue-form periods for this comma-separated beta (needs --d --n)");
    periods_cmd->add_flag("--solve", periods_opts.solve, "Solve for c_lambda first");
    add_output_options(periods_cmd, periods_opts.out);
    periods_cmd->callback([&] {
        Json records = Json::array();
        if (!periods_opts.beta.empty()) {
            if (periods_opts.src.d == 0 || periods_opts.src.n == 0)
                throw std::invalid_argument("--beta requires explicit --d and --n");
            const fermat::FermatContext ctx(periods_opts.src.n, periods_opts.src.d);
            fermat::ExpVec beta;
            std::stringstream ss(periods_opts.beta);
            for (std::string tok; std::getline(ss, tok, ',');) beta.push_back(std::stoi(tok));
            for (const auto& bp : fermat::all_vanishing_cycles(ctx)) {
                const fermat::PeriodValue v = fermat::period_omega_beta(beta, bp, ctx);
                Json rec{{"beta_prime", bp.entries}, {"value", fermat::period_value_to_json(v)}};
                if (periods_opts.out.approx)
                    rec["approx"] = Json{{"coeff", approx_json(v.coeff)}, {"non_authoritative", true}};
                records.push_back(std::move(rec));
            }
        } else {
            fermat::FakeCycleSpec spec = resolve_spec(periods_opts.src);
            if (periods_opts.solve)
                spec.c_lambda = fermat::solve_c_lambda(fermat::cocycle_phi(spec));
            if (!spec.c_lambda)
                throw std::invalid_argument("spec has no c_lambda; pass --solve or provide one");
            for (const auto& bp : fermat::all_vanishing_cycles(spec.ctx)) {
                const fermat::Cyclo v = fermat::normalized_period(spec, bp);
                Json rec{{"beta_prime", bp.entries}, {"value", fermat::cyclo_to_json(v)}};
                if (periods_opts.out.approx)
                    rec["approx"] = Json{{"value", approx_json(v)}, {"non_authoritative", true}};
                records.push_back(std::move(rec));
            }
        }
        Json report{{"schema_version", fermat::kSchemaVersion},
                    {"type", "periods-report"},
                    {"records", records}};
        write_report(report, periods_opts.out);
    });

    // ---- fake-cycle ----
    auto* fake_cmd = app.add_subcommand("fake-cycle", "Build, solve and certify a fake linear cycle");
    struct {
        SpecSource src;
        bool solve = false, certify = false;
        OutputOptions out;
    } fake_opts;
    add_spec_source(fake_cmd, fake_opts.src, true);
    fake_cmd->add_flag("--solve", fake_opts.solve, "Compute c_lambda by splitting the cocycle");
    fake_cmd->add_flag("--certify", fake_opts.certify, "Check rationality of every period");
    add_output_options(fake_cmd, fake_opts.out);
    fake_cmd->callback([&] {
        fermat::FakeCycleSpec spec = resolve_spec(fake_opts.src);
        if (fake_opts.solve) spec.c_lambda = fermat::solve_c_lambda(fermat::cocycle_phi(spec));
        Json report;
        if (fake_opts.certify) {
            if (!spec.c_lambda)
                throw std::invalid_argument("certification needs c_lambda; pass --solve or provide one");
            const fermat::HodgeCertificate cert = fermat::certify_hodge(spec);
            report = fermat::certificate_to_json(spec, cert);
            if (!cert.success) exit_code = kExitMathFailure;
        } else {
            report = Json{{"schema_version", fermat::kSchemaVersion},
                          {"type", "spec-report"},
                          {"spec", fermat::spec_to_json(spec)},
                          {"true_linear", fermat::is_true_linear(spec)}};
        }
        if (fake_opts.out.approx && spec.c_lambda)
            report["approx"] =
                Json{{"c_lambda", approx_json(*spec.c_lambda)}, {"non_authoritative", true}};
        write_report(report, fake_opts.out);
    });

    // ---- tangent ----
    auto* tangent_cmd = app.add_subcommand("tangent", "Tangent space of the Hodge locus at Fermat");
    struct {
        SpecSource src;
        int degree = -1;
        bool compare = false, hilbert = false, solve = false;
        OutputOptions out;
    } tangent_opts;
    add_spec_source(tangent_cmd, tangent_opts.src, true);
    tangent_cmd->add_option("--degree", tangent_opts.degree, "Colon-ideal dimension in this degree");
    tangent_cmd->add_flag("--compare-idealfake", tangent_opts.compare,
                          "Compare against the explicit generator ideal in degrees 1..d");
    tangent_cmd->add_flag("--hilbert-function", tangent_opts.hilbert,
                          "Emit the Hilbert function of the quotient");
    tangent_cmd->add_flag("--solve", tangent_opts.solve, "Solve for c_lambda first");
    add_output_options(tangent_cmd, tangent_opts.out);
    tangent_cmd->callback([&] {
        fermat::FakeCycleSpec spec = resolve_spec(tangent_opts.src);
        if (tangent_opts.solve || !spec.c_lambda)
            spec.c_lambda = fermat::solve_c_lambda(fermat::cocycle_phi(spec));
        Json report{{"schema_version", fermat::kSchemaVersion},
                    {"type", "tangent-report"},
                    {"spec", fermat::spec_to_json(spec)},
                    {"codim", fermat::tangent_codim(spec)}};
        report["degree"] = tangent_opts.degree >= 0 ? Json(tangent_opts.degree) : Json(nullptr);
        if (tangent_opts.degree >= 0) {
            const fermat::Poly p = fermat::build_P_lambda(spec);
            report["colon_dim"] = fermat::colon_dim(p, tangent_opts.degree, spec.ctx);
        } else {
            report["colon_dim"] = nullptr;
        }
        if (tangent_opts.compare) {
            bool all = true;
            for (int e = 1; e <= spec.ctx.d; ++e) all = all && fermat::idealfake_compare(spec, e);
            report["idealfake_equal"] = all;
            if (!all) exit_code = kExitMathFailure;
        } else {
            report["idealfake_equal"] = nullptr;
        }
        report["hilbert_function"] =
            tangent_opts.hilbert ? Json(fermat::hilbert_function(spec)) : Json(nullptr);
        write_report(report, tangent_opts.out);
    });

    // ---- qform ----
    auto* qform_cmd = app.add_subcommand("qform", "Quadratic fundamental form in the critical degree");
    struct {
        SpecSource src;
        int pair = 0;
        std::string d_expr;
        bool witness = false, solve = false;
        OutputOptions out;
    } qform_opts;
    add_spec_source(qform_cmd, qform_opts.src, true);
    qform_cmd->add_option("--pair", qform_opts.pair, "Coordinate pair index i (1-based)");
    qform_cmd->add_option("--D", qform_opts.d_expr,
                          "Degree d-1 polynomial, e.g. \"x1*x3 + x5*x7\"");
    qform_cmd->add_flag("--witness", qform_opts.witness, "Search for a non-reducedness witness");
    qform_cmd->add_flag("--solve", qform_opts.solve, "Solve for c_lambda first");
    add_output_options(qform_cmd, qform_opts.out);
    qform_cmd->callback([&] {
        fermat::FakeCycleSpec spec = resolve_spec(qform_opts.src);
        if (qform_opts.solve || !spec.c_lambda)
            spec.c_lambda = fermat::solve_c_lambda(fermat::cocycle_phi(spec));
        Json report{{"schema_version", fermat::kSchemaVersion},
                    {"type", "qform-report"},
                    {"spec", fermat::spec_to_json(spec)}};
        if (qform_opts.witness) {
            const fermat::NonreducedWitness w = fermat::nonreduced_witness(spec);
            report["pair_index"] = w.pair_index;
            report["D"] = fermat::poly_to_json(w.D);
            Json cls = Json::array();
            for (const auto& c : w.class_coords) cls.push_back(fermat::cyclo_to_json(c));
            report["class"] = cls;
            report["class_zero"] = !w.found;
            report["witness_found"] = w.found;
            report["reason"] = w.reason.empty() ? Json(nullptr) : Json(w.reason);
            if (!w.found && !fermat::is_true_linear(spec)) exit_code = kExitMathFailure;
        } else {
            if (qform_opts.pair < 1 || qform_opts.d_expr.empty())
                throw std::invalid_argument("single evaluation needs --pair and --D (or use --witness)");
            const fermat::Poly D =
                fermat::parse_poly_expr(qform_opts.d_expr, spec.ctx.vars());
            const fermat::Poly ell =
                fermat::Poly::variable(spec.ctx.vars(), 2 * qform_opts.pair - 2) -
                spec.c_of_pair(qform_opts.pair) *
                    fermat::Poly::variable(spec.ctx.vars(), 2 * qform_opts.pair - 1);
            const fermat::QFormResult res =
                fermat::qr(ell * D, ell * D, spec, fermat::DecomposeStrategy::Paired);
            report["pair_index"] = qform_opts.pair;
            report["D"] = fermat::poly_to_json(D);
            Json cls = Json::array();
            for (const auto& c : res.class_coords) cls.push_back(fermat::cyclo_to_json(c));
            report["class"] = cls;
            report["class_zero"] = res.class_zero;
            report["witness_found"] = nullptr;
        }
        write_report(report, qform_opts.out);
    });

    // ---- schema ----
    auto* schema_cmd = app.add_subcommand("schema", "Versioned JSON schema of every report type");
    struct {
        std::string validate_path;
        OutputOptions out;
    } schema_opts;
    schema_cmd->add_option("--validate", schema_opts.validate_path,
                           "Validate an emitted report file against the schema instead");
    add_output_options(schema_cmd, schema_opts.out);
    schema_cmd->callback([&] {
        if (!schema_opts.validate_path.empty()) {
            const std::string err =
                fermat::validate_report(load_json_file(schema_opts.validate_path));
            Json report{{"schema_version", fermat::kSchemaVersion},
                        {"type", "validation-result"},
                        {"file", schema_opts.validate_path},
                        {"valid", err.empty()},
                        {"error", err.empty() ? Json(nullptr) : Json(err)}};
            write_report(report, schema_opts.out);
            if (!err.empty()) exit_code = kExitMathFailure;
            return;
        }
        write_report(fermat::schema_document(), schema_opts.out);
    });

    // ---- run (config file dispatch) ----
    auto* run_cmd = app.add_subcommand("run", "Execute a command described by a RunConfig JSON file");
    struct {
        std::string config_path;
    } run_opts;
    run_cmd->add_option("--config", run_opts.config_path, "RunConfig JSON file")->required();
    run_cmd->callback([&] {
        if (depth > 0) throw std::invalid_argument("nested run configs are not allowed");
        exit_code = run_cli(config_to_args(load_json_file(run_opts.config_path)), depth + 1);
    });

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes args back to front
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: malformed JSON input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(std::move(args), 0);
}
