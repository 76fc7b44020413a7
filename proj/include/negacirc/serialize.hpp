/*
 * Copyright 2026 The negacirc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "survey.hpp"

namespace negacirc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/* Counts that may exceed 2^53 and all seeds are serialized as decimal
 * strings; everything structurally small stays a JSON number.  Key order is
 * fixed, so equal reports serialize to identical bytes. */

namespace detail {

inline std::string big_text(const BigInt& v) { return v.str(); }

inline BigInt parse_big(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_big: empty string");
    for (std::size_t i = s[0] == '-' ? 1 : 0; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("parse_big: not a decimal integer");
    return BigInt(s);
}

inline std::uint64_t parse_u64_text(const std::string& s) {
    const BigInt v = parse_big(s);
    if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::invalid_argument("parse_u64_text: out of range");
    return v.convert_to<std::uint64_t>();
}

inline Json field_to_json(const FieldRef& F) {
    Json j;
    j["characteristic"] = F->characteristic();
    j["extension"] = F->degree();
    j["order"] = big_text(BigInt(F->order()));
    std::string mt;
    for (std::size_t i = 0; i < F->modulus().size(); ++i) {
        if (i) mt += ',';
        mt += std::to_string(F->modulus()[i]);
    }
    j["modulus"] = mt;
    return j;
}

inline FieldRef field_from_json(const Json& j) {
    const FieldRef F = make_field(j.at("characteristic").get<std::uint64_t>(),
                                  j.at("extension").get<std::uint64_t>());
    if (parse_big(j.at("order").get<std::string>()) != BigInt(F->order()))
        throw std::invalid_argument("field_from_json: stored order does not match the parameters");
    std::string mt;
    for (std::size_t i = 0; i < F->modulus().size(); ++i) {
        if (i) mt += ',';
        mt += std::to_string(F->modulus()[i]);
    }
    if (mt != j.at("modulus").get<std::string>())
        throw std::invalid_argument("field_from_json: stored modulus does not match the derived one");
    return F;
}

inline void check_header(const Json& j, const std::string& kind) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported schema version");
    if (j.at("kind").get<std::string>() != kind)
        throw std::invalid_argument("expected a '" + kind + "' document");
}

template <typename T>
Json opt_to_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

} // namespace detail

inline Json to_json(const GoodIntegerVerdict& v) {
    Json j;
    j["s"] = v.s;
    j["l1"] = v.l1;
    j["l2"] = v.l2;
    j["is_good"] = v.is_good;
    j["witness_k"] = detail::opt_to_json(v.witness_k);
    j["is_oddly_good"] = v.is_oddly_good;
    j["odd_witness"] = detail::opt_to_json(v.odd_witness);
    return j;
}

inline GoodIntegerVerdict verdict_from_json(const Json& j) {
    GoodIntegerVerdict v;
    v.s = j.at("s").get<std::uint64_t>();
    v.l1 = j.at("l1").get<std::uint64_t>();
    v.l2 = j.at("l2").get<std::uint64_t>();
    v.is_good = j.at("is_good").get<bool>();
    if (!j.at("witness_k").is_null()) v.witness_k = j.at("witness_k").get<std::uint64_t>();
    v.is_oddly_good = j.at("is_oddly_good").get<bool>();
    if (!j.at("odd_witness").is_null()) v.odd_witness = j.at("odd_witness").get<std::uint64_t>();
    return v;
}

inline Json to_json(const ClassificationReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "classification";
    j["p"] = r.p;
    j["q"] = r.q;
    j["n"] = r.n;
    j["field"] = detail::field_to_json(r.field);
    Json checks;
    checks["q_mod4_is3"] = r.checks.q_mod4_is3;
    checks["p_mod4_is3"] = r.checks.p_mod4_is3;
    checks["coprime"] = r.checks.coprime;
    checks["ord_4p_eq_p_minus_1"] = r.checks.ord_4p_eq_p_minus_1;
    checks["ord_p_mod4_is2"] = r.checks.ord_p_mod4_is2;
    checks["q_primitive_mod_p"] = r.checks.q_primitive_mod_p;
    j["checks"] = checks;
    j["ord_p_q"] = r.ord_p_q;
    j["ord_4p_q"] = r.ord_4p_q;
    j["pair_class"] = to_string(r.pair_class);
    Json fac;
    fac["leading"] = element_to_text(r.factorization.leading, ';');
    Json flist = Json::array();
    for (const auto& [f, m] : r.factorization.factors) {
        Json e;
        e["poly"] = poly_to_text(f);
        e["multiplicity"] = m;
        flist.push_back(e);
    }
    fac["factors"] = flist;
    j["factorization"] = fac;
    j["oddly_good"] = to_json(r.oddly_good);
    j["seed"] = std::to_string(r.seed);
    return j;
}

inline ClassificationReport classification_from_json(const Json& j) {
    detail::check_header(j, "classification");
    ClassificationReport r;
    r.p = j.at("p").get<std::uint64_t>();
    r.q = j.at("q").get<std::uint64_t>();
    r.n = j.at("n").get<std::uint64_t>();
    r.field = detail::field_from_json(j.at("field"));
    const Json& c = j.at("checks");
    r.checks.q_mod4_is3 = c.at("q_mod4_is3").get<bool>();
    r.checks.p_mod4_is3 = c.at("p_mod4_is3").get<bool>();
    r.checks.coprime = c.at("coprime").get<bool>();
    r.checks.ord_4p_eq_p_minus_1 = c.at("ord_4p_eq_p_minus_1").get<bool>();
    r.checks.ord_p_mod4_is2 = c.at("ord_p_mod4_is2").get<bool>();
    r.checks.q_primitive_mod_p = c.at("q_primitive_mod_p").get<bool>();
    r.ord_p_q = j.at("ord_p_q").get<std::uint64_t>();
    r.ord_4p_q = j.at("ord_4p_q").get<std::uint64_t>();
    const std::string cls = j.at("pair_class").get<std::string>();
    if (cls == "self_reciprocal_pair")
        r.pair_class = PairClass::kSelfReciprocalPair;
    else if (cls == "reciprocal_pair")
        r.pair_class = PairClass::kReciprocalPair;
    else if (cls == "not_applicable")
        r.pair_class = PairClass::kNotApplicable;
    else
        throw std::invalid_argument("classification_from_json: unknown pair class");
    const Json& fac = j.at("factorization");
    r.factorization.leading = parse_element(r.field, fac.at("leading").get<std::string>(), ';');
    for (const Json& e : fac.at("factors")) {
        r.factorization.factors.emplace_back(parse_poly(r.field, e.at("poly").get<std::string>()),
                                             e.at("multiplicity").get<std::uint64_t>());
    }
    r.oddly_good = verdict_from_json(j.at("oddly_good"));
    r.seed = detail::parse_u64_text(j.at("seed").get<std::string>());
    return r;
}

inline Json to_json(const DoubleCensusReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "double_census";
    j["p"] = r.p;
    j["q"] = r.q;
    j["n"] = r.n;
    j["mode"] = r.mode;
    j["formula_count"] = detail::big_text(r.formula_count);
    j["component_counts"] = r.component_counts;
    j["constructive_count"] = r.constructive_count ? Json(detail::big_text(*r.constructive_count)) : Json(nullptr);
    j["exhaustive_count"] = r.exhaustive_count ? Json(detail::big_text(*r.exhaustive_count)) : Json(nullptr);
    j["witness_sets_match"] = detail::opt_to_json(r.witness_sets_match);
    j["agree"] = r.agree;
    if (r.witnesses) {
        Json w = Json::array();
        for (const Poly& h : *r.witnesses) w.push_back(poly_to_text(h));
        j["witnesses"] = w;
    } else {
        j["witnesses"] = nullptr;
    }
    j["verified_lifts"] = r.verified_lifts;
    j["seed"] = std::to_string(r.seed);
    return j;
}

inline DoubleCensusReport double_census_from_json(const Json& j, const FieldRef& F) {
    detail::check_header(j, "double_census");
    DoubleCensusReport r;
    r.p = j.at("p").get<std::uint64_t>();
    r.q = j.at("q").get<std::uint64_t>();
    r.n = j.at("n").get<std::uint64_t>();
    r.mode = j.at("mode").get<std::string>();
    r.formula_count = detail::parse_big(j.at("formula_count").get<std::string>());
    r.component_counts = j.at("component_counts").get<std::vector<std::uint64_t>>();
    if (!j.at("constructive_count").is_null())
        r.constructive_count = detail::parse_big(j.at("constructive_count").get<std::string>());
    if (!j.at("exhaustive_count").is_null())
        r.exhaustive_count = detail::parse_big(j.at("exhaustive_count").get<std::string>());
    if (!j.at("witness_sets_match").is_null()) r.witness_sets_match = j.at("witness_sets_match").get<bool>();
    r.agree = j.at("agree").get<bool>();
    if (!j.at("witnesses").is_null()) {
        std::vector<Poly> w;
        for (const Json& e : j.at("witnesses")) w.push_back(parse_poly(F, e.get<std::string>()));
        r.witnesses = std::move(w);
    }
    r.verified_lifts = j.at("verified_lifts").get<std::uint64_t>();
    r.seed = detail::parse_u64_text(j.at("seed").get<std::string>());
    return r;
}

inline Json to_json(const FourCensusReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "four_census";
    j["p"] = r.p;
    j["q"] = r.q;
    j["n"] = r.n;
    j["mode"] = r.mode;
    j["formula_count"] = detail::big_text(r.formula_count);
    Json pc = Json::array();
    for (const BigInt& c : r.component_pair_counts) pc.push_back(detail::big_text(c));
    j["component_pair_counts"] = pc;
    Json sc = Json::array();
    for (const auto& c : r.component_pair_counts_by_scan)
        sc.push_back(c ? Json(detail::big_text(*c)) : Json(nullptr));
    j["component_pair_counts_by_scan"] = sc;
    j["constructive_count"] = r.constructive_count ? Json(detail::big_text(*r.constructive_count)) : Json(nullptr);
    j["exhaustive_count"] = nullptr;
    j["exhaustive_note"] = r.exhaustive_note;
    j["agree"] = r.agree;
    j["sampled_lifts"] = r.sampled_lifts;
    j["seed"] = std::to_string(r.seed);
    return j;
}

inline FourCensusReport four_census_from_json(const Json& j) {
    detail::check_header(j, "four_census");
    FourCensusReport r;
    r.p = j.at("p").get<std::uint64_t>();
    r.q = j.at("q").get<std::uint64_t>();
    r.n = j.at("n").get<std::uint64_t>();
    r.mode = j.at("mode").get<std::string>();
    r.formula_count = detail::parse_big(j.at("formula_count").get<std::string>());
    for (const Json& e : j.at("component_pair_counts"))
        r.component_pair_counts.push_back(detail::parse_big(e.get<std::string>()));
    for (const Json& e : j.at("component_pair_counts_by_scan")) {
        if (e.is_null())
            r.component_pair_counts_by_scan.emplace_back();
        else
            r.component_pair_counts_by_scan.emplace_back(detail::parse_big(e.get<std::string>()));
    }
    if (!j.at("constructive_count").is_null())
        r.constructive_count = detail::parse_big(j.at("constructive_count").get<std::string>());
    r.exhaustive_note = j.at("exhaustive_note").get<std::string>();
    r.agree = j.at("agree").get<bool>();
    r.sampled_lifts = j.at("sampled_lifts").get<std::uint64_t>();
    r.seed = detail::parse_u64_text(j.at("seed").get<std::string>());
    return r;
}

inline Json to_json(const ContainmentSurvey& s) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "containment_survey";
    j["samples"] = s.samples;
    j["max_count"] = s.max_count;
    j["bound"] = detail::big_text(s.bound);
    j["within_bound"] = s.within_bound;
    j["seed"] = std::to_string(s.seed);
    return j;
}

inline ContainmentSurvey containment_from_json(const Json& j) {
    detail::check_header(j, "containment_survey");
    ContainmentSurvey s;
    s.samples = j.at("samples").get<std::uint64_t>();
    s.max_count = j.at("max_count").get<std::uint64_t>();
    s.bound = detail::parse_big(j.at("bound").get<std::string>());
    s.within_bound = j.at("within_bound").get<bool>();
    s.seed = detail::parse_u64_text(j.at("seed").get<std::string>());
    return s;
}

inline Json to_json(const DiagonalCount& d) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "diagonal_count";
    j["subfield_order"] = d.subfield_order;
    j["modulus"] = d.modulus_text;
    j["by_formula"] = detail::big_text(d.by_formula);
    j["by_histogram"] = detail::big_text(d.by_histogram);
    j["by_pairs"] = d.by_pairs ? Json(detail::big_text(*d.by_pairs)) : Json(nullptr);
    return j;
}

inline DiagonalCount diagonal_from_json(const Json& j) {
    detail::check_header(j, "diagonal_count");
    DiagonalCount d;
    d.subfield_order = j.at("subfield_order").get<std::uint64_t>();
    d.modulus_text = j.at("modulus").get<std::string>();
    d.by_formula = detail::parse_big(j.at("by_formula").get<std::string>());
    d.by_histogram = detail::parse_big(j.at("by_histogram").get<std::string>());
    if (!j.at("by_pairs").is_null()) d.by_pairs = detail::parse_big(j.at("by_pairs").get<std::string>());
    return d;
}

inline Json to_json(const ExpurgationMargin& m) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "expurgation_margin";
    j["p"] = m.p;
    j["q"] = m.q;
    j["n"] = m.n;
    j["bound"] = detail::big_text(m.bound);
    j["codeword_budget"] = detail::big_text(m.codeword_budget);
    j["margin"] = detail::opt_to_json(m.margin);
    j["lhs"] = detail::big_text(m.lhs);
    return j;
}

inline ExpurgationMargin expurgation_from_json(const Json& j) {
    detail::check_header(j, "expurgation_margin");
    ExpurgationMargin m;
    m.p = j.at("p").get<std::uint64_t>();
    m.q = j.at("q").get<std::uint64_t>();
    m.n = j.at("n").get<std::uint64_t>();
    m.bound = detail::parse_big(j.at("bound").get<std::string>());
    m.codeword_budget = detail::parse_big(j.at("codeword_budget").get<std::string>());
    if (!j.at("margin").is_null()) m.margin = j.at("margin").get<std::uint64_t>();
    m.lhs = detail::parse_big(j.at("lhs").get<std::string>());
    return m;
}

inline Json to_json(const SurveyRow& r) {
    Json j;
    j["p"] = r.p;
    j["ord_p"] = r.ord_p;
    j["ord_4p"] = r.ord_4p;
    j["p_mod4_is3"] = r.p_mod4_is3;
    j["ord_4p_eq_p_minus_1"] = r.ord_4p_eq_p_minus_1;
    j["applies"] = r.applies;
    j["pair_class"] = to_string(r.pair_class);
    j["oddly_good"] = r.oddly_good;
    j["q_primitive"] = r.q_primitive;
    return j;
}

inline Json to_json(const SurveyReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "survey";
    j["q"] = r.q;
    j["p_max"] = r.p_max;
    j["q_mod4"] = r.q_mod4;
    j["scanned"] = r.scanned;
    j["applicable"] = r.applicable;
    j["self_reciprocal_rows"] = r.self_reciprocal_rows;
    j["reciprocal_rows"] = r.reciprocal_rows;
    j["primitive_rows"] = r.primitive_rows;
    Json rows = Json::array();
    for (const SurveyRow& row : r.rows) rows.push_back(to_json(row));
    j["rows"] = rows;
    return j;
}

inline SurveyReport survey_from_json(const Json& j) {
    detail::check_header(j, "survey");
    SurveyReport r;
    r.q = j.at("q").get<std::uint64_t>();
    r.p_max = j.at("p_max").get<std::uint64_t>();
    r.q_mod4 = j.at("q_mod4").get<std::uint64_t>();
    r.scanned = j.at("scanned").get<std::uint64_t>();
    r.applicable = j.at("applicable").get<std::uint64_t>();
    r.self_reciprocal_rows = j.at("self_reciprocal_rows").get<std::uint64_t>();
    r.reciprocal_rows = j.at("reciprocal_rows").get<std::uint64_t>();
    r.primitive_rows = j.at("primitive_rows").get<std::uint64_t>();
    for (const Json& e : j.at("rows")) {
        SurveyRow row;
        row.p = e.at("p").get<std::uint64_t>();
        row.ord_p = e.at("ord_p").get<std::uint64_t>();
        row.ord_4p = e.at("ord_4p").get<std::uint64_t>();
        row.p_mod4_is3 = e.at("p_mod4_is3").get<bool>();
        row.ord_4p_eq_p_minus_1 = e.at("ord_4p_eq_p_minus_1").get<bool>();
        row.applies = e.at("applies").get<bool>();
        const std::string cls = e.at("pair_class").get<std::string>();
        row.pair_class = cls == "self_reciprocal_pair" ? PairClass::kSelfReciprocalPair
                         : cls == "reciprocal_pair"    ? PairClass::kReciprocalPair
                                                       : PairClass::kNotApplicable;
        row.oddly_good = e.at("oddly_good").get<bool>();
        row.q_primitive = e.at("q_primitive").get<bool>();
        r.rows.push_back(row);
    }
    return r;
}

inline Json to_json(const CodeSummary& s) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "code_summary";
    j["length"] = s.length;
    j["dimension"] = s.dimension;
    j["self_dual"] = s.self_dual;
    j["min_distance"] = detail::opt_to_json(s.min_dist);
    return j;
}

/* canonical byte form: 2-space indent plus a trailing newline */
inline std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace negacirc
