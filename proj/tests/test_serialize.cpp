// JSON canonical-form tests: every report type must survive
// to_json -> render_json -> parse -> from_json -> to_json with identical
// bytes, the five pinned classification documents must match the files
// under tests/golden byte for byte, and the parsers must reject malformed
// or tampered documents instead of guessing.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "negacirc/bounds.hpp"
#include "negacirc/census.hpp"
#include "negacirc/classifier.hpp"
#include "negacirc/nega_codes.hpp"
#include "negacirc/serialize.hpp"
#include "negacirc/survey.hpp"

namespace {

using namespace negacirc;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ADD_FAILURE() << "cannot open " << path;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden_path(const std::string& name) { return std::string(NEGACIRC_GOLDEN_DIR) + "/" + name; }

TEST(Classification, RoundTripIsByteStable) {
    const std::pair<std::uint64_t, std::uint64_t> pairs[] = {{7, 3}, {11, 3}, {13, 3}};
    for (const auto& [p, q] : pairs) {
        const ClassificationReport r = classify(p, q);
        const std::string once = render_json(to_json(r));
        const Json parsed = Json::parse(once);
        const ClassificationReport back = classification_from_json(parsed);
        EXPECT_EQ(render_json(to_json(back)), once) << "p=" << p << " q=" << q;
    }
}

TEST(Classification, ParsedReportPassesTheVerifier) {
    const ClassificationReport r = classify(11, 3);
    const Json parsed = Json::parse(render_json(to_json(r)));
    const ClassificationReport back = classification_from_json(parsed);

    EXPECT_EQ(back.pair_class, PairClass::kReciprocalPair);
    EXPECT_EQ(back.ord_p_q, 5u);
    EXPECT_EQ(back.ord_4p_q, 10u);
    EXPECT_FALSE(back.oddly_good.odd_witness.has_value());
    EXPECT_TRUE(parsed.at("oddly_good").at("odd_witness").is_null());

    std::vector<std::string> discrepancies;
    EXPECT_TRUE(verify_report(back, &discrepancies));
    EXPECT_TRUE(discrepancies.empty()) << (discrepancies.empty() ? "" : discrepancies.front());
}

TEST(Classification, GoldenFilesMatchFreshReportsByteForByte) {
    struct Entry {
        std::uint64_t p;
        std::uint64_t q;
        const char* file;
    };
    const Entry entries[] = {
        {7, 3, "classification_n14_q3.json"},   {11, 7, "classification_n22_q7.json"},
        {3, 11, "classification_n6_q11.json"},  {11, 3, "classification_n22_q3.json"},
        {7, 11, "classification_n14_q11.json"},
    };
    for (const Entry& e : entries) {
        const std::string fresh = render_json(to_json(classify(e.p, e.q)));
        EXPECT_EQ(fresh, read_file(golden_path(e.file))) << e.file;
    }
}

TEST(Classification, HeaderAndScalarEncodings) {
    const Json j = to_json(classify(7, 3));
    EXPECT_EQ(j.at("schema_version").get<int>(), 1);
    EXPECT_EQ(j.at("kind").get<std::string>(), "classification");
    EXPECT_TRUE(j.at("seed").is_string());
    EXPECT_TRUE(j.at("field").at("order").is_string());
    EXPECT_EQ(j.at("field").at("characteristic").get<std::uint64_t>(), 3u);
}

TEST(Classification, TamperedDocumentsAreRejected) {
    const Json base = Json::parse(render_json(to_json(classify(7, 3))));

    Json bad_kind = base;
    bad_kind["kind"] = "classsification";
    EXPECT_THROW(classification_from_json(bad_kind), std::invalid_argument);

    Json bad_version = base;
    bad_version["schema_version"] = 2;
    EXPECT_THROW(classification_from_json(bad_version), std::invalid_argument);

    Json bad_modulus = base;
    bad_modulus["field"]["modulus"] = "1,1";
    EXPECT_THROW(classification_from_json(bad_modulus), std::invalid_argument);

    Json bad_order = base;
    bad_order["field"]["order"] = "4";
    EXPECT_THROW(classification_from_json(bad_order), std::invalid_argument);

    Json bad_class = base;
    bad_class["pair_class"] = "mystery_pair";
    EXPECT_THROW(classification_from_json(bad_class), std::invalid_argument);

    Json bad_seed = base;
    bad_seed["seed"] = "18446744073709551616"; // 2^64, one past the last representable seed
    EXPECT_THROW(classification_from_json(bad_seed), std::invalid_argument);
}

TEST(Verdict, RoundTripKeepsTheOddWitness) {
    const GoodIntegerVerdict v = classify(7, 3).oddly_good;
    ASSERT_TRUE(v.is_oddly_good);
    ASSERT_TRUE(v.odd_witness.has_value());
    EXPECT_EQ(*v.odd_witness, 3u);

    const std::string once = render_json(to_json(v));
    const GoodIntegerVerdict back = verdict_from_json(Json::parse(once));
    EXPECT_EQ(render_json(to_json(back)), once);
}

TEST(DoubleCensus, FormulaOnlyRoundTrip) {
    const ClassificationReport r = classify(7, 3);
    const DoubleCensusReport rep = census_double(r, DoubleCensusMode::kFormula);

    const std::string once = render_json(to_json(rep));
    const Json parsed = Json::parse(once);
    EXPECT_EQ(parsed.at("kind").get<std::string>(), "double_census");
    EXPECT_TRUE(parsed.at("formula_count").is_string());
    EXPECT_EQ(parsed.at("formula_count").get<std::string>(), "3136");
    EXPECT_TRUE(parsed.at("constructive_count").is_null());
    EXPECT_TRUE(parsed.at("exhaustive_count").is_null());
    EXPECT_TRUE(parsed.at("witnesses").is_null());
    EXPECT_TRUE(parsed.at("witness_sets_match").is_null());
    EXPECT_TRUE(parsed.at("seed").is_string());

    const DoubleCensusReport back = double_census_from_json(parsed, r.field);
    EXPECT_EQ(render_json(to_json(back)), once);
}

TEST(DoubleCensus, WitnessedRoundTrip) {
    const ClassificationReport r = classify(3, 11);
    const DoubleCensusReport rep = census_double(r, DoubleCensusMode::kConstructive);
    ASSERT_TRUE(rep.witnesses.has_value());
    ASSERT_EQ(rep.witnesses->size(), 1728u);

    const std::string once = render_json(to_json(rep));
    const Json parsed = Json::parse(once);
    EXPECT_EQ(parsed.at("witnesses").size(), 1728u);
    EXPECT_EQ(parsed.at("constructive_count").get<std::string>(), "1728");

    const DoubleCensusReport back = double_census_from_json(parsed, r.field);
    EXPECT_EQ(render_json(to_json(back)), once);
    ASSERT_TRUE(back.witnesses.has_value());
    EXPECT_EQ(*back.witnesses, *rep.witnesses);
}

TEST(FourCensus, RoundTripAndExhaustiveStaysNull) {
    const ClassificationReport r = classify(3, 11);
    const FourCensusReport rep = census_four(r, FourCensusMode::kComponents);

    const std::string once = render_json(to_json(rep));
    const Json parsed = Json::parse(once);
    EXPECT_EQ(parsed.at("kind").get<std::string>(), "four_census");
    EXPECT_TRUE(parsed.at("exhaustive_count").is_null());
    EXPECT_EQ(parsed.at("formula_count").get<std::string>(), "2299968000");
    const std::vector<std::string> pair_counts =
        parsed.at("component_pair_counts").get<std::vector<std::string>>();
    EXPECT_EQ(pair_counts, (std::vector<std::string>{"1320", "1320", "1320"}));
    EXPECT_FALSE(parsed.at("exhaustive_note").get<std::string>().empty());

    const FourCensusReport back = four_census_from_json(parsed);
    EXPECT_EQ(render_json(to_json(back)), once);
}

TEST(FourCensus, FormulaOnlyRoundTrip) {
    const FourCensusReport rep = census_four(classify(7, 3), FourCensusMode::kFormula);
    const std::string once = render_json(to_json(rep));
    const Json parsed = Json::parse(once);
    EXPECT_EQ(parsed.at("formula_count").get<std::string>(), "9272600064");
    EXPECT_TRUE(parsed.at("component_pair_counts").empty());
    EXPECT_TRUE(parsed.at("constructive_count").is_null());
    EXPECT_EQ(render_json(to_json(four_census_from_json(parsed))), once);
}

TEST(Containment, RoundTrip) {
    ContainmentSurvey s;
    s.samples = 200;
    s.max_count = 1;
    s.bound = BigInt(1452);
    s.within_bound = true;
    s.seed = 7;

    const std::string once = render_json(to_json(s));
    const Json parsed = Json::parse(once);
    EXPECT_EQ(parsed.at("kind").get<std::string>(), "containment_survey");
    EXPECT_EQ(parsed.at("bound").get<std::string>(), "1452");
    EXPECT_EQ(render_json(to_json(containment_from_json(parsed))), once);
}

TEST(Diagonal, RoundTripsWithAndWithoutTheScan) {
    const DiagonalCount counted = diagonal_count(3, 1);
    const std::string once = render_json(to_json(counted));
    const Json parsed = Json::parse(once);
    EXPECT_EQ(parsed.at("kind").get<std::string>(), "diagonal_count");
    EXPECT_EQ(parsed.at("by_formula").get<std::string>(), "24");
    EXPECT_EQ(parsed.at("by_pairs").get<std::string>(), "24");
    EXPECT_EQ(render_json(to_json(diagonal_from_json(parsed))), once);

    DiagonalCount unscanned;
    unscanned.subfield_order = 27;
    unscanned.modulus_text = "1,0,0,0,1,1,1";
    unscanned.by_formula = BigInt(19656);
    unscanned.by_histogram = BigInt(19656);
    const std::string twice = render_json(to_json(unscanned));
    const Json parsed2 = Json::parse(twice);
    EXPECT_TRUE(parsed2.at("by_pairs").is_null());
    EXPECT_EQ(render_json(to_json(diagonal_from_json(parsed2))), twice);
}

TEST(Expurgation, RoundTripsBothMarginShapes) {
    const ExpurgationMargin none = expurgation_margin(3, 11);
    const std::string once = render_json(to_json(none));
    const Json parsed = Json::parse(once);
    EXPECT_TRUE(parsed.at("margin").is_null());
    EXPECT_EQ(parsed.at("lhs").get<std::string>(), "1452");
    EXPECT_EQ(render_json(to_json(expurgation_from_json(parsed))), once);

    const ExpurgationMargin zero = expurgation_margin(7, 3);
    const std::string twice = render_json(to_json(zero));
    const Json parsed2 = Json::parse(twice);
    EXPECT_EQ(parsed2.at("margin").get<std::uint64_t>(), 0u);
    EXPECT_EQ(render_json(to_json(expurgation_from_json(parsed2))), twice);
}

TEST(Survey, RoundTripPreservesEveryRow) {
    const SurveyReport rep = survey(3, 50);
    const std::string once = render_json(to_json(rep));
    const Json parsed = Json::parse(once);
    EXPECT_EQ(parsed.at("kind").get<std::string>(), "survey");
    EXPECT_EQ(parsed.at("rows").size(), rep.rows.size());
    EXPECT_EQ(parsed.at("primitive_rows").get<std::uint64_t>(), 4u);

    const SurveyReport back = survey_from_json(parsed);
    EXPECT_EQ(render_json(to_json(back)), once);
    EXPECT_EQ(back.rows.size(), rep.rows.size());
}

TEST(CodeSummary, SerializesShapeAndOptionalDistance) {
    const FieldRef F = make_field(11, 1);
    const Poly h = parse_poly(F, "2,2,6,3,8,5");
    const Matrix gen = build_double(h, 6).generator;

    const Json with = to_json(summarize(gen, true));
    EXPECT_EQ(with.at("kind").get<std::string>(), "code_summary");
    EXPECT_EQ(with.at("length").get<std::size_t>(), 12u);
    EXPECT_EQ(with.at("dimension").get<std::size_t>(), 6u);
    EXPECT_TRUE(with.at("self_dual").get<bool>());
    EXPECT_EQ(with.at("min_distance").get<std::uint64_t>(), 7u);

    const Json without = to_json(summarize(gen, false));
    EXPECT_TRUE(without.at("min_distance").is_null());
}

TEST(Strictness, NumericTextParsers) {
    EXPECT_THROW(detail::parse_big(""), std::invalid_argument);
    EXPECT_THROW(detail::parse_big("12a"), std::invalid_argument);
    EXPECT_THROW(detail::parse_big("--3"), std::invalid_argument);
    EXPECT_THROW(detail::parse_big("1 2"), std::invalid_argument);
    EXPECT_EQ(detail::parse_big("-3"), BigInt(-3));
    EXPECT_EQ(detail::parse_big("2299968000"), BigInt("2299968000"));

    EXPECT_EQ(detail::parse_u64_text("18446744073709551615"),
              std::numeric_limits<std::uint64_t>::max());
    EXPECT_THROW(detail::parse_u64_text("18446744073709551616"), std::invalid_argument);
    EXPECT_THROW(detail::parse_u64_text("-1"), std::invalid_argument);
}

TEST(Strictness, RenderAppendsExactlyOneNewline) {
    Json j;
    j["a"] = 1;
    const std::string s = render_json(j);
    ASSERT_FALSE(s.empty());
    EXPECT_EQ(s.back(), '\n');
    EXPECT_NE(s[s.size() - 2], '\n');
    EXPECT_EQ(Json::parse(s), j);
}

} // namespace
