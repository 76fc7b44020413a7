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

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "negacirc.hpp"

namespace {

using namespace negacirc;

/* exit codes: 0 success, 1 hypotheses unmet or budget refused, 2 invalid
 * input, 3 internal consistency failure */
constexpr int kOk = 0;
constexpr int kRefused = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

std::uint64_t seed_from_env() {
    const char* env = std::getenv("NEGACIRC_SEED");
    if (!env) return kDefaultSeed;
    try {
        return detail::parse_u64_text(env);
    } catch (const std::exception&) {
        throw std::invalid_argument("NEGACIRC_SEED must be a decimal 64-bit integer");
    }
}

void emit(const Json& j, const std::string& out_path) {
    const std::string text = render_json(j);
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
    }
}

void note_run_config(std::uint64_t seed, unsigned workers) {
    std::cerr << "negacirc: seed=" << seed << " workers=" << workers << "\n";
}

} // namespace

int main(int argc, char** argv) {
    using namespace negacirc;

    CLI::App app{"exact classification, census and verification of self-dual negacirculant codes"};
    app.require_subcommand(1);

    std::uint64_t p = 0, q = 0, n = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    unsigned workers = 1;
    std::string out_path;
    std::uint64_t containment_samples = 0;
    std::uint64_t budget = 100000000;
    std::string type = "double";
    std::string h_text, a_text, b_text;
    std::uint64_t p_max = 1000;
    bool survey_all = false;
    std::string mode = "all";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "deterministic seed (default: NEGACIRC_SEED or built-in)")
            ->each([&](const std::string&) { seed_given = true; });
        cmd->add_option("--workers", workers, "worker threads; results do not depend on this")
            ->check(CLI::Range(1u, 256u));
        cmd->add_option("--out", out_path, "also write the JSON artifact to this file");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "factor x^(2p) + 1 over F_q and tag the case");
    c_classify->add_option("--p", p, "odd prime p")->required();
    c_classify->add_option("--q", q, "odd prime power q, coprime to p")->required();
    add_common(c_classify);

    CLI::App* c_factor = app.add_subcommand("factor", "factor x^n + 1 over F_q");
    c_factor->add_option("--n", n, "exponent n >= 1")->required();
    c_factor->add_option("--q", q, "prime power q")->required();
    add_common(c_factor);

    CLI::App* c_cd = app.add_subcommand("census-double", "count self-dual (I | H) codes three ways");
    c_cd->add_option("--p", p, "odd prime p")->required();
    c_cd->add_option("--q", q, "odd prime power q, coprime to p")->required();
    c_cd->add_option("--mode", mode, "counting method (default: all)")
        ->check(CLI::IsMember({"all", "formula", "constructive", "exhaustive"}));
    c_cd->add_option("--containment-samples", containment_samples,
                     "also sample per-vector containment counts");
    add_common(c_cd);

    CLI::App* c_cf = app.add_subcommand("census-four", "count self-dual four-block codes two ways");
    c_cf->add_option("--p", p, "odd prime p")->required();
    c_cf->add_option("--q", q, "odd prime power q, coprime to p")->required();
    c_cf->add_option("--mode", mode, "counting method (default: all)")
        ->check(CLI::IsMember({"all", "formula", "components", "sample-lift"}));
    add_common(c_cf);

    CLI::App* c_md = app.add_subcommand("mindist", "exact minimum distance of a constructed code");
    c_md->add_option("--q", q, "prime power q")->required();
    c_md->add_option("--n", n, "negacirculant block size")->required();
    c_md->add_option("--type", type, "double or four")->check(CLI::IsMember({"double", "four"}));
    c_md->add_option("--row-h", h_text, "first row of H for the double construction");
    c_md->add_option("--row-a", a_text, "first row of A for the four construction");
    c_md->add_option("--row-b", b_text, "first row of B for the four construction");
    c_md->add_option("--budget", budget, "refuse when q^k exceeds this");
    add_common(c_md);

    CLI::App* c_bound = app.add_subcommand("bound", "entropy floors and the exact expurgation margin");
    c_bound->add_option("--q", q, "prime power q")->required();
    c_bound->add_option("--p", p, "odd prime p for the expurgation margin");
    add_common(c_bound);

    CLI::App* c_survey = app.add_subcommand("survey", "order-derived scan of primes up to p-max");
    c_survey->add_option("--q", q, "odd prime power q")->required();
    c_survey->add_option("--p-max", p_max, "scan odd primes p <= p-max");
    c_survey->add_flag("--all", survey_all, "print every scanned row, not only applicable ones");
    add_common(c_survey);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (!seed_given) seed = seed_from_env();
        note_run_config(seed, workers);

        if (c_classify->parsed()) {
            const ClassificationReport r = classify(p, q, seed);
            emit(to_json(r), out_path);
            return r.pair_class == PairClass::kSelfReciprocalPair ? kOk : kRefused;
        }

        if (c_factor->parsed()) {
            if (n == 0) throw std::invalid_argument("factor: n must be positive");
            const auto fac = factor_u64(q);
            if (fac.size() != 1) throw std::invalid_argument("factor: q must be a prime power");
            const FieldRef F = make_field(fac[0].first, static_cast<std::uint64_t>(fac[0].second));
            const FactorizationResult res = factorize(Poly::x_pow_plus_one(F, n), seed);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["kind"] = "factorization";
            j["q"] = q;
            j["n"] = n;
            j["field"] = detail::field_to_json(F);
            j["leading"] = element_to_text(res.leading, ';');
            Json flist = Json::array();
            for (const auto& [f, m] : res.factors) {
                Json e;
                e["poly"] = poly_to_text(f);
                e["multiplicity"] = m;
                flist.push_back(e);
            }
            j["factors"] = flist;
            j["seed"] = std::to_string(seed);
            emit(j, out_path);
            return kOk;
        }

        if (c_cd->parsed()) {
            const ClassificationReport r = classify(p, q, seed);
            CensusOptions opts;
            opts.seed = seed;
            opts.workers = workers;
            const DoubleCensusReport rep = census_double(r, parse_double_census_mode(mode), opts);
            Json j = to_json(rep);
            if (containment_samples > 0) {
                const ContainmentSurvey cs = containment_survey(r, rep, containment_samples, opts);
                j["containment"] = to_json(cs);
            }
            emit(j, out_path);
            return kOk;
        }

        if (c_cf->parsed()) {
            const ClassificationReport r = classify(p, q, seed);
            CensusOptions opts;
            opts.seed = seed;
            opts.workers = workers;
            emit(to_json(census_four(r, parse_four_census_mode(mode), opts)), out_path);
            return kOk;
        }

        if (c_md->parsed()) {
            const auto fac = factor_u64(q);
            if (fac.size() != 1) throw std::invalid_argument("mindist: q must be a prime power");
            const FieldRef F = make_field(fac[0].first, static_cast<std::uint64_t>(fac[0].second));
            if (n == 0) throw std::invalid_argument("mindist: n must be positive");
            MinDistanceOptions opts;
            opts.budget = budget;
            opts.workers = workers;
            Json cons;
            Matrix gen(F, 1, 1);
            if (type == "double") {
                if (h_text.empty()) throw std::invalid_argument("mindist: --row-h is required for type double");
                const DoubleNegaCode code = build_double(parse_poly(F, h_text), n);
                gen = code.generator;
                cons["type"] = "double";
                cons["n"] = n;
                cons["h"] = poly_to_text(code.h);
            } else {
                if (a_text.empty() || b_text.empty())
                    throw std::invalid_argument("mindist: --row-a and --row-b are required for type four");
                const FourNegaCode code = build_four(parse_poly(F, a_text), parse_poly(F, b_text), n);
                gen = code.generator;
                cons["type"] = "four";
                cons["n"] = n;
                cons["a"] = poly_to_text(code.a);
                cons["b"] = poly_to_text(code.b);
            }
            const CodeSummary s = summarize(gen, true, opts);
            Json j = to_json(s);
            j["construction"] = cons;
            j["budget"] = budget;
            emit(j, out_path);
            return kOk;
        }

        if (c_bound->parsed()) {
            const auto fac = factor_u64(q);
            if (fac.size() != 1) throw std::invalid_argument("bound: q must be a prime power");
            const auto two = inverse_entropy(q, 0.125);
            const auto four = inverse_entropy(q, 0.0625);
            const auto gv = inverse_entropy(q, 0.5);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["kind"] = "bounds";
            j["q"] = q;
            j["floor_two_blocks"] = two.value;
            j["floor_four_blocks"] = four.value;
            j["gv_reference"] = gv.value;
            j["tolerance"] = two.tolerance;
            Json iters;
            iters["two_blocks"] = two.iterations;
            iters["four_blocks"] = four.iterations;
            iters["gv"] = gv.iterations;
            j["iterations"] = iters;
            j["expurgation"] = p != 0 ? to_json(expurgation_margin(p, q)) : Json(nullptr);
            emit(j, out_path);
            return kOk;
        }

        if (c_survey->parsed()) {
            const SurveyReport rep = survey(q, p_max);
            std::cout << "p\tord_p\tord_4p\tcase\toddly_good\tq_primitive\n";
            for (const SurveyRow& row : rep.rows) {
                if (!row.applies && !survey_all) continue;
                std::cout << row.p << '\t' << row.ord_p << '\t' << row.ord_4p << '\t'
                          << to_string(row.pair_class) << '\t' << (row.oddly_good ? 1 : 0) << '\t'
                          << (row.q_primitive ? 1 : 0) << '\n';
            }
            std::cout << "# scanned " << rep.scanned << " primes, applicable " << rep.applicable
                      << " (self_reciprocal " << rep.self_reciprocal_rows << ", reciprocal "
                      << rep.reciprocal_rows << ")\n";
            std::cout << "# primitive fraction among applicable: " << rep.primitive_rows << "/"
                      << rep.applicable << "\n";
            if (!out_path.empty()) {
                const std::string text = render_json(to_json(rep));
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
                f << text;
            }
            return kOk;
        }

        return kInvalid;
    } catch (const hypothesis_error& e) {
        std::cerr << "negacirc: " << e.what() << "\n";
        return kRefused;
    } catch (const feasibility_error& e) {
        std::cerr << "negacirc: " << e.what() << "\n";
        return kRefused;
    } catch (const internal_check_error& e) {
        std::cerr << "negacirc: internal consistency failure: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "negacirc: " << e.what() << "\n";
        return kInvalid;
    }
}
