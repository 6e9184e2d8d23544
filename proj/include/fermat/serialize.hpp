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

#ifndef FERMAT_SERIALIZE_HPP
#define FERMAT_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "fermat/fake_cycles.hpp"
#include "fermat/periods.hpp"
#include "fermat/polyring.hpp"
#include "fermat/qform.hpp"

namespace fermat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "1.0.0";

/// Fractions serialize as [numerator, denominator] in lowest terms with
/// positive denominator; values outside 64-bit range fall back to decimal
/// strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"m": conductor, "coeffs": [[num, den], ...]} with deg Phi_m entries.
Json cyclo_to_json(const Cyclo& z);
Cyclo cyclo_from_json(const Json& j);

/// [{"exps": [...], "coeff": {...}}, ...] in graded-lex order.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int nvars);

/// {"d":, "n":, "c": [...], "c_lambda": {...}|null}
Json spec_to_json(const FakeCycleSpec& spec);
FakeCycleSpec spec_from_json(const Json& j);

Json period_value_to_json(const PeriodValue& v);

/// Replayable certificate: embeds the full spec together with the verdict
/// and the exact period vector.
Json certificate_to_json(const FakeCycleSpec& spec, const HodgeCertificate& cert);

/// Versioned description of every report format the CLI emits.
Json schema_document();

/// Structural validation of an emitted report against the schema family:
/// checks the report type tag, required fields and value shapes. Returns an
/// empty string on success, otherwise the first problem found.
std::string validate_report(const Json& report);

/// Parse either a bare spec object or a certificate (which embeds one).
FakeCycleSpec spec_from_any_json(const Json& j);

/// Tiny expression parser for polynomials: terms separated by + or -, each a
/// product of an optional integer coefficient and factors x<i> or x<i>^e,
/// e.g. "x1*x3 + x5*x7" or "2*x0^2*x2".
Poly parse_poly_expr(const std::string& text, int nvars);

}  // namespace fermat

#endif
