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

#include "fermat/serialize.hpp"

#include <cctype>
#include <stdexcept>

namespace fermat {

namespace {

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

Json rational_to_json(const Rational& q) {
    return Json::array({integer_to_json(Integer(q.get_num())), integer_to_json(Integer(q.get_den()))});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational must be a [numerator, denominator] pair");
    Rational q(integer_from_json(j[0]), integer_from_json(j[1]));
    q.canonicalize();
    return q;
}

Json cyclo_to_json(const Cyclo& z) {
    Json coeffs = Json::array();
    for (const Rational& q : z.coeffs()) coeffs.push_back(rational_to_json(q));
    return Json{{"m", z.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclo cyclo_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
        throw std::invalid_argument("cyclotomic number must be {\"m\":..., \"coeffs\":[...]}");
    const int m = j.at("m").get<int>();
    std::vector<Rational> coeffs;
    for (const Json& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    if (static_cast<int>(coeffs.size()) != euler_phi(m))
        throw std::invalid_argument("cyclotomic number needs deg Phi_m coefficients");
    return Cyclo::from_powers(m, coeffs);
}

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(Json{{"exps", e}, {"coeff", cyclo_to_json(c)}});
    return out;
}

Poly poly_from_json(const Json& j, int nvars) {
    Poly p(nvars);
    for (const Json& term : j)
        p.add_term(term.at("exps").get<std::vector<int>>(), cyclo_from_json(term.at("coeff")));
    return p;
}

Json spec_to_json(const FakeCycleSpec& spec) {
    Json c = Json::array();
    for (const Cyclo& ci : spec.c) c.push_back(cyclo_to_json(ci));
    Json out{{"d", spec.ctx.d}, {"n", spec.ctx.n}, {"c", std::move(c)}};
    out["c_lambda"] = spec.c_lambda ? cyclo_to_json(*spec.c_lambda) : Json(nullptr);
    return out;
}

FakeCycleSpec spec_from_json(const Json& j) {
    const int d = j.at("d").get<int>();
    const int n = j.at("n").get<int>();
    std::vector<Cyclo> c;
    for (const Json& ci : j.at("c")) c.push_back(cyclo_from_json(ci));
    std::optional<Cyclo> c_lambda;
    if (j.contains("c_lambda") && !j.at("c_lambda").is_null())
        c_lambda = cyclo_from_json(j.at("c_lambda"));
    return make_spec(d, n, std::move(c), std::move(c_lambda));
}

FakeCycleSpec spec_from_any_json(const Json& j) {
    if (j.contains("spec")) return spec_from_json(j.at("spec"));
    return spec_from_json(j);
}

Json period_value_to_json(const PeriodValue& v) {
    if (v.is_pure() && v.pi_power == 0) return cyclo_to_json(v.coeff);
    Json gamma = Json::array();
    for (const auto& [a, mult] : v.gamma_word)
        for (int i = 0; i < mult; ++i) gamma.push_back(a);
    return Json{{"coeff", cyclo_to_json(v.coeff)}, {"gamma", std::move(gamma)}, {"pi_power", v.pi_power}};
}

Json certificate_to_json(const FakeCycleSpec& spec, const HodgeCertificate& cert) {
    Json out{{"schema_version", kSchemaVersion}, {"type", "fake-cycle-certificate"}};
    out["spec"] = spec_to_json(spec);
    out["certified"] = cert.success;
    out["true_linear"] = cert.true_linear;
    if (cert.success) {
        Json periods = Json::array();
        const auto cycles = all_vanishing_cycles(spec.ctx);
        for (std::size_t i = 0; i < cycles.size(); ++i)
            periods.push_back(Json{{"beta_prime", cycles[i].entries}, {"value", rational_to_json(cert.periods[i])}});
        out["periods"] = std::move(periods);
        out["failure"] = nullptr;
    } else {
        out["periods"] = Json::array();
        out["failure"] = Json{{"beta_prime", cert.failure->first}, {"value", cyclo_to_json(cert.failure->second)}};
    }
    return out;
}

Json schema_document() {
    Json rational = {{"type", "array"}, {"items", "integer or decimal string"}, {"length", 2},
                     {"doc", "numerator, denominator in lowest terms, denominator positive"}};
    Json cyclo = {{"type", "object"},
                  {"fields", {{"m", "positive integer conductor"},
                              {"coeffs", "array of rationals, length deg Phi_m, power basis mod Phi_m"}}}};
    Json spec = {{"type", "object"},
                 {"fields", {{"d", "degree, one of 3, 4, 6"},
                             {"n", "even dimension with d >= 2 + 6/n"},
                             {"c", "array of n/2+1 cyclotomic numbers on the twisted unit circle"},
                             {"c_lambda", "cyclotomic number or null"}}}};
    Json certificate = {{"type", "object"},
                        {"fields", {{"schema_version", "string"},
                                    {"type", "\"fake-cycle-certificate\""},
                                    {"spec", "spec object (replayable)"},
                                    {"certified", "boolean"},
                                    {"true_linear", "boolean"},
                                    {"periods", "array of {beta_prime, value: rational}, beta' ordered by total then lex"},
                                    {"failure", "null or {beta_prime, value: cyclotomic}"}}}};
    Json tangent = {{"type", "object"},
                    {"fields", {{"schema_version", "string"},
                                {"type", "\"tangent-report\""},
                                {"spec", "spec object"},
                                {"codim", "integer"},
                                {"degree", "integer or null"},
                                {"colon_dim", "integer or null"},
                                {"idealfake_equal", "boolean or null"},
                                {"hilbert_function", "array of integers or null"}}}};
    Json qform = {{"type", "object"},
                  {"fields", {{"schema_version", "string"},
                              {"type", "\"qform-report\""},
                              {"spec", "spec object"},
                              {"pair_index", "integer"},
                              {"D", "polynomial (array of {exps, coeff})"},
                              {"class", "array of cyclotomic numbers over the complement basis"},
                              {"class_zero", "boolean"},
                              {"witness_found", "boolean or null"}}}};
    Json periods_report = {{"type", "object"},
                           {"fields", {{"schema_version", "string"},
                                       {"type", "\"periods-report\""},
                                       {"records", "array of {beta_prime, value: cyclotomic | {coeff, gamma, pi_power}}"}}}};
    Json spec_report = {{"type", "object"},
                        {"fields", {{"schema_version", "string"},
                                    {"type", "\"spec-report\""},
                                    {"spec", "spec object"},
                                    {"true_linear", "boolean"}}}};
    Json hodge_report = {{"type", "object"},
                         {"fields", {{"schema_version", "string"},
                                     {"type", "\"hodge-numbers-report\""},
                                     {"d", "integer"},
                                     {"n", "integer"},
                                     {"values", "array of {p, q, h}"}}}};
    Json picmax_report = {{"type", "object"},
                          {"fields", {{"schema_version", "string"},
                                      {"type", "\"picmax-report\""},
                                      {"d", "integer"},
                                      {"n", "integer"},
                                      {"maximal", "boolean"}}}};
    Json lemma_report = {{"type", "object"},
                         {"fields", {{"schema_version", "string"},
                                     {"type", "\"lemma-check-report\""},
                                     {"records", "array of {d, q, exceptional, identity_ok, k, value}"},
                                     {"all_ok", "boolean"}}}};
    return Json{{"schema_version", kSchemaVersion},
                {"formats",
                 {{"rational", rational}, {"cyclotomic", cyclo}, {"spec", spec},
                  {"fake-cycle-certificate", certificate}, {"tangent-report", tangent},
                  {"qform-report", qform}, {"periods-report", periods_report},
                  {"spec-report", spec_report}, {"hodge-numbers-report", hodge_report},
                  {"picmax-report", picmax_report}, {"lemma-check-report", lemma_report}}}};
}

namespace {

std::string check_rational(const Json& j) {
    if (!j.is_array() || j.size() != 2) return "rational is not a pair";
    for (const Json& part : j)
        if (!part.is_number_integer() && !part.is_string()) return "rational entry is neither integer nor string";
    return "";
}

std::string check_cyclo(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs")) return "cyclotomic missing m/coeffs";
    if (!j.at("m").is_number_integer()) return "cyclotomic conductor not an integer";
    if (!j.at("coeffs").is_array()) return "cyclotomic coeffs not an array";
    for (const Json& c : j.at("coeffs")) {
        const std::string err = check_rational(c);
        if (!err.empty()) return err;
    }
    return "";
}

std::string check_spec(const Json& j) {
    if (!j.is_object()) return "spec is not an object";
    for (const char* key : {"d", "n", "c"})
        if (!j.contains(key)) return std::string("spec missing ") + key;
    if (!j.at("c").is_array()) return "spec c is not an array";
    for (const Json& ci : j.at("c")) {
        const std::string err = check_cyclo(ci);
        if (!err.empty()) return err;
    }
    if (j.contains("c_lambda") && !j.at("c_lambda").is_null()) return check_cyclo(j.at("c_lambda"));
    return "";
}

}  // namespace

std::string validate_report(const Json& report) {
    if (!report.is_object()) return "report is not an object";
    if (!report.contains("schema_version") || report.at("schema_version") != kSchemaVersion)
        return "missing or unknown schema_version";
    if (!report.contains("type") || !report.at("type").is_string()) return "missing type tag";
    const std::string type = report.at("type").get<std::string>();
    if (type == "fake-cycle-certificate") {
        for (const char* key : {"spec", "certified", "true_linear", "periods", "failure"})
            if (!report.contains(key)) return std::string("certificate missing ") + key;
        const std::string err = check_spec(report.at("spec"));
        if (!err.empty()) return err;
        if (!report.at("certified").is_boolean()) return "certified not boolean";
        if (!report.at("periods").is_array()) return "periods not an array";
        for (const Json& rec : report.at("periods")) {
            if (!rec.contains("beta_prime") || !rec.contains("value")) return "period record incomplete";
            const std::string perr = check_rational(rec.at("value"));
            if (!perr.empty()) return perr;
        }
        return "";
    }
    if (type == "tangent-report") {
        for (const char* key : {"spec", "codim"})
            if (!report.contains(key)) return std::string("tangent report missing ") + key;
        return check_spec(report.at("spec"));
    }
    if (type == "qform-report") {
        for (const char* key : {"spec", "pair_index", "class", "class_zero"})
            if (!report.contains(key)) return std::string("qform report missing ") + key;
        return check_spec(report.at("spec"));
    }
    if (type == "periods-report") {
        if (!report.contains("records") || !report.at("records").is_array()) return "periods report missing records";
        return "";
    }
    if (type == "spec-report") {
        if (!report.contains("spec")) return "spec report missing spec";
        return check_spec(report.at("spec"));
    }
    if (type == "hodge-numbers-report") {
        for (const char* key : {"d", "n", "values"})
            if (!report.contains(key)) return std::string("hodge-numbers report missing ") + key;
        if (!report.at("values").is_array()) return "hodge-numbers values not an array";
        return "";
    }
    if (type == "picmax-report") {
        for (const char* key : {"d", "n", "maximal"})
            if (!report.contains(key)) return std::string("picmax report missing ") + key;
        return "";
    }
    if (type == "lemma-check-report") {
        for (const char* key : {"records", "all_ok"})
            if (!report.contains(key)) return std::string("lemma-check report missing ") + key;
        return "";
    }
    if (type == "validation-result") {
        for (const char* key : {"file", "valid"})
            if (!report.contains(key)) return std::string("validation result missing ") + key;
        return "";
    }
    return "unknown report type: " + type;
}

Poly parse_poly_expr(const std::string& text, int nvars) {
    Poly out(nvars);
    std::size_t i = 0;
    const auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("parse_poly_expr: expected + or - between terms");
        }
        first = false;
        skip_ws();
        long coeff = 1;
        ExpVec exps(static_cast<std::size_t>(nvars), 0);
        bool saw_factor = false;
        while (i < text.size()) {
            skip_ws();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                long v = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    v = v * 10 + (text[i++] - '0');
                coeff *= v;
                saw_factor = true;
            } else if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("parse_poly_expr: variable index expected after x");
                int idx = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    idx = idx * 10 + (text[i++] - '0');
                if (idx >= nvars) throw std::invalid_argument("parse_poly_expr: variable index out of range");
                int e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                        throw std::invalid_argument("parse_poly_expr: exponent expected after ^");
                    e = 0;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        e = e * 10 + (text[i++] - '0');
                }
                exps[static_cast<std::size_t>(idx)] += e;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw std::invalid_argument("parse_poly_expr: empty term");
        out.add_term(exps, Cyclo(sign * coeff));
        skip_ws();
    }
    return out;
}

}  // namespace fermat
