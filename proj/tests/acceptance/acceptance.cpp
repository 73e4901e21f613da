// Acceptance gate: one criterion per numbered block, one PASS/FAIL line
// each, nonzero exit if anything fails.  Time budgets are asserted where a
// criterion carries one.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "monideal/decomposition.hpp"
#include "monideal/operators.hpp"
#include "monideal/parser.hpp"
#include "monideal/persistence.hpp"

#include "../support/oracles.hpp"

using namespace monideal;

namespace {

int g_failed = 0;

struct Outcome {
    bool ok = true;
    std::string note;
};

void require(Outcome& out, bool cond, const std::string& what) {
    if (!cond && out.ok) {
        out.ok = false;
        out.note = what;
    }
}

template <typename Fn>
void criterion(int id, const char* label, double limit_secs, Fn body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    bool in_budget = limit_secs <= 0.0 || secs < limit_secs;
    bool pass = out.ok && in_budget;
    if (!pass)
        ++g_failed;
    std::printf("%s  %2d  %s (%.2fs", pass ? "PASS" : "FAIL", id, label,
                secs);
    if (limit_secs > 0.0)
        std::printf(", budget %.0fs", limit_secs);
    std::printf(")\n");
    if (!pass && !out.note.empty())
        std::printf("      -> %s\n", out.note.c_str());
    if (!pass && !in_budget && out.ok)
        std::printf("      -> over time budget\n");
    std::fflush(stdout);
}

std::vector<ColonEq> entries(std::string_view compact) {
    std::vector<ColonEq> out;
    for (char c : compact)
        out.push_back(c == 'e' ? ColonEq::equal : ColonEq::not_equal);
    return out;
}

ExpansionSpec random_expansion(std::mt19937_64& rng, const Ring& source) {
    std::uniform_int_distribution<std::int64_t> size(1, 2);
    std::vector<std::int64_t> tuple;
    for (std::size_t j = 0; j < source.size(); ++j)
        tuple.push_back(size(rng));
    return ExpansionSpec(source, std::move(tuple));
}

WeightSpec random_weights(std::mt19937_64& rng, const Ring& source) {
    std::uniform_int_distribution<std::int64_t> w(1, 3);
    std::vector<std::int64_t> weights;
    for (std::size_t j = 0; j < source.size(); ++j)
        weights.push_back(w(rng));
    return WeightSpec(std::move(weights));
}

MonomialPrime random_prime(std::mt19937_64& rng, const Ring& ring) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<std::size_t> vars;
    while (vars.empty()) {
        for (std::size_t i = 0; i < ring.size(); ++i)
            if (coin(rng))
                vars.push_back(i);
    }
    return MonomialPrime(ring, std::move(vars));
}

// Returns the process exit code and captures stderr.
int run_cli(const std::string& cli, const std::string& args,
            std::string& err_text) {
    std::string cmd = "'" + cli + "' " + args + " 2>&1 >/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return -1;
    char buf[512];
    err_text.clear();
    while (std::fgets(buf, sizeof buf, pipe))
        err_text += buf;
    int status = pclose(pipe);
    if (WIFEXITED(status))
        return WEXITSTATUS(status);
    return -1;
}

const char* kTwelveGen =
    "x^8*y^5, x^7*y^9, x^6*y^10, x^4*y^11, x^13*y^3*z^2, x^8*y^4*z^2, "
    "x^6*y^9*z^2, x^13*y^2*z^3, x^4*y^9*z^3, x^4*y^4*z^5, y^5*z^7, x^13*z^8";

// Every ideal the regression corpus touches, as (ring, generators) text.
const std::vector<std::pair<std::string, std::string>> kCorpus = {
    {"x, y", "x^6, y^6, x*y^5, x^5*y, x^4*y^4"},
    {"x, y", "x^7, y^7, x^2*y^5, x^5*y^2"},
    {"x, y, z", kTwelveGen},
    {"x, y, z", "x^4, y^4, x^3*y, x*y^3, x^2*y^2*z"},
    {"x, y, z", "x^5, y^5, x^4*y, x*y^4, x^3*y^2*z^2"},
    {"x, y, z", "x^6, y^6, x^5*y, x*y^5, x^4*y^2*z"},
    {"x1, x2, x3", "x1^3, x2*x3^2, x1*x3"},
    {"x1, x2, x3, x4, x5", "x1^2*x3*x4^5, x2^4*x4^3*x5^2, x1*x3^2, x4*x5^3"},
    {"x1, x2, x3, x4, x5", "x1^2*x3^2*x4^15, x2^16*x4^9*x5^4, x1*x3^4, "
                           "x4^3*x5^6"},
    {"x, y", "x^5, y^5, x^4*y, x*y^4, x^3*y^2"},
};

} // namespace

int main() {
    const char* cli_env = std::getenv("MONIDEAL_CLI");
    const std::string cli = cli_env ? cli_env : "";

    criterion(1, "colon pattern of the mixed five-generator plane ideal",
              1.0, [](Outcome& out) {
        Ring r = parse_ring("x, y");
        auto I = parse_ideal("x^6, y^6, x*y^5, x^5*y, x^4*y^4", r);
        ColonPattern p = colon_pattern(I, 5);
        require(out, p.entries == entries("enne"),
                "expected pattern eq,neq,neq,eq");
    });

    criterion(2, "fluctuation verdict of the four-generator plane ideal",
              1.0, [](Outcome& out) {
        Ring r = parse_ring("x, y");
        auto J = parse_ideal("x^7, y^7, x^2*y^5, x^5*y^2", r);
        ColonPattern p = colon_pattern(J, 5);
        require(out, p.entries == entries("nene"),
                "expected pattern neq,eq,neq,eq");
        FluctuationVerdict v = detect_fluctuation(p);
        require(out,
                v.case_ii && v.case_ii->a == 2 && v.case_ii->b == 3 &&
                    v.case_ii->c == 4,
                "expected minimal second-kind witness (2,3,4)");
    });

    criterion(3, "colon pattern of the twelve-generator space ideal", 30.0,
              [](Outcome& out) {
        Ring r = parse_ring("x, y, z");
        auto L = parse_ideal(kTwelveGen, r);
        ColonPattern p = colon_pattern(L, 5);
        require(out, p.entries == entries("enee"),
                "expected pattern eq,neq,eq,eq");
    });

    criterion(4, "family persistence indices across the parameter grid",
              120.0, [](Outcome& out) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            for (std::int64_t r = 1; r <= 2; ++r) {
                MonomialIdeal L = family_LmR(m, r);
                PowerCache cache;
                ColonPattern p = colon_pattern(L, m + 3, cache);
                SpiReport rep = observed_spi(p);
                require(out, rep.observed_spi == m + 1,
                        "observed index should be m+1 at m=" +
                            std::to_string(m));
                for (std::size_t idx = 0; idx < p.entries.size(); ++idx) {
                    bool neq = p.entries[idx] == ColonEq::not_equal;
                    require(out,
                            neq == (static_cast<std::int64_t>(idx) + 1 <= m),
                            "inequalities must sit exactly at 1..m");
                }
            }
        }
    });

    criterion(5, "family colon-membership witnesses", 0.0, [](Outcome& out) {
        for (std::int64_t m = 1; m <= 3; ++m)
            for (std::int64_t r = 1; r <= 2; ++r)
                for (std::int64_t s = 2; s <= m + 1; ++s)
                    require(out, spi_witness_check(m, r, s),
                            "witness fails at m=" + std::to_string(m) +
                                " r=" + std::to_string(r) +
                                " s=" + std::to_string(s));
    });

    criterion(6, "associated primes of family powers", 0.0, [](Outcome& out) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            for (std::int64_t r = 1; r <= 2; ++r) {
                PowerCache cache;
                auto rows = ass_powers(family_LmR(m, r), m + 2, cache);
                for (const auto& [s, primes] : rows) {
                    std::vector<std::string> got;
                    for (const auto& p : primes)
                        got.push_back(print_canonical(p));
                    std::vector<std::string> want =
                        s <= m ? std::vector<std::string>{"(x, y)",
                                                          "(x, y, z)"}
                               : std::vector<std::string>{"(x, y)"};
                    require(out, got == want,
                            "Ass mismatch at m=" + std::to_string(m) +
                                " r=" + std::to_string(r) +
                                " s=" + std::to_string(s));
                }
            }
        }
    });

    criterion(7, "family decomposition reconstruction", 0.0, [](Outcome& out) {
        Ring r = parse_ring("x, y, z");
        std::vector<MonomialIdeal> comps = {
            parse_ideal("x, y^4", r),       parse_ideal("x^4, y", r),
            parse_ideal("x^2, y^3", r),     parse_ideal("x^3, y^2", r),
            parse_ideal("x^3, y^3, z", r),
        };
        MonomialIdeal meet = MonomialIdeal::unit(r);
        for (const auto& c : comps)
            meet = intersect(meet, c);
        require(out, meet == family_LmR(1, 1),
                "intersection of the five components must rebuild the "
                "family ideal");
        auto ass = associated_primes(family_LmR(1, 1));
        require(out,
                ass.size() == 2 && print_canonical(ass[0]) == "(x, y)" &&
                    print_canonical(ass[1]) == "(x, y, z)",
                "expected associated primes (x, y) and (x, y, z)");
    });

    criterion(8, "expansion and weighting regressions", 0.0, [](Outcome& out) {
        Ring r3 = parse_ring("x1, x2, x3");
        auto I = parse_ideal("x1^3, x2*x3^2, x1*x3", r3);
        ExpansionSpec spec(r3, {3, 1, 2});
        auto E = expand(I, spec);
        auto expected = parse_ideal(
            "x1_1^3, x1_2^3, x1_3^3, x1_1^2*x1_2, x1_1^2*x1_3, "
            "x1_2^2*x1_1, x1_2^2*x1_3, x1_3^2*x1_1, x1_3^2*x1_2, "
            "x1_1*x1_2*x1_3, x2_1*x3_1^2, x2_1*x3_2^2, x2_1*x3_1*x3_2, "
            "x1_1*x3_1, x1_1*x3_2, x1_2*x3_1, x1_2*x3_2, x1_3*x3_1, "
            "x1_3*x3_2",
            spec.target());
        require(out, expected.generators().size() == 19,
                "the listed expansion has 19 minimal generators");
        require(out, E == expected, "expansion must match the listed "
                                    "generators exactly");

        Ring r5 = parse_ring("x1, x2, x3, x4, x5");
        auto W = weight(
            parse_ideal("x1^2*x3*x4^5, x2^4*x4^3*x5^2, x1*x3^2, x4*x5^3", r5),
            WeightSpec({1, 4, 2, 3, 2}));
        auto wexp = parse_ideal(
            "x1^2*x3^2*x4^15, x2^16*x4^9*x5^4, x1*x3^4, x4^3*x5^6", r5);
        require(out, W == wexp, "weighted ideal must match the listed "
                                "generators exactly");
    });

    criterion(9, "operator commutation property suites", 120.0,
              [](Outcome& out) {
        std::mt19937_64 rng(160493);
        for (int trial = 0; trial < 200 && out.ok; ++trial) {
            Ring r = oracles::random_ring(rng);
            auto I = oracles::random_proper_ideal(rng, r);
            auto J = oracles::random_proper_ideal(rng, r);
            ExpansionSpec spec = random_expansion(rng, r);
            auto E = [&](const MonomialIdeal& K) { return expand(K, spec); };
            require(out, E(sum(I, J)) == sum(E(I), E(J)),
                    "expansion vs sum");
            require(out, E(product(I, J)) == product(E(I), E(J)),
                    "expansion vs product");
            require(out, E(intersect(I, J)) == intersect(E(I), E(J)),
                    "expansion vs intersection");
            require(out, E(colon(I, J)) == colon(E(I), E(J)),
                    "expansion vs colon");
            require(out, E(radical(I)) == radical(E(I)),
                    "expansion vs radical");
        }
        std::mt19937_64 rng2(318008);
        for (int trial = 0; trial < 200 && out.ok; ++trial) {
            Ring r = oracles::random_ring(rng2);
            auto I = oracles::random_proper_ideal(rng2, r);
            auto J = oracles::random_proper_ideal(rng2, r);
            WeightSpec spec = random_weights(rng2, r);
            auto W = [&](const MonomialIdeal& K) { return weight(K, spec); };
            require(out, W(sum(I, J)) == sum(W(I), W(J)),
                    "weighting vs sum");
            require(out, W(product(I, J)) == product(W(I), W(J)),
                    "weighting vs product");
            require(out, W(intersect(I, J)) == intersect(W(I), W(J)),
                    "weighting vs intersection");
            require(out, W(colon(I, J)) == colon(W(I), W(J)),
                    "weighting vs colon");
        }
        std::mt19937_64 rng3(271828);
        for (int trial = 0; trial < 200 && out.ok; ++trial) {
            Ring r = oracles::random_ring(rng3);
            auto I = oracles::random_proper_ideal(rng3, r);
            auto J = oracles::random_proper_ideal(rng3, r);
            MonomialPrime p = random_prime(rng3, r);
            auto Lc = [&](const MonomialIdeal& K) { return localize(K, p); };
            require(out, Lc(sum(I, J)) == sum(Lc(I), Lc(J)),
                    "localization vs sum");
            require(out, Lc(product(I, J)) == product(Lc(I), Lc(J)),
                    "localization vs product");
            require(out, Lc(intersect(I, J)) == intersect(Lc(I), Lc(J)),
                    "localization vs intersection");
            require(out, Lc(colon(I, J)) == colon(Lc(I), Lc(J)),
                    "localization vs colon");
        }
        std::mt19937_64 rng4(11235);
        for (int trial = 0; trial < 200 && out.ok; ++trial) {
            Ring r = oracles::random_ring(rng4);
            auto A = oracles::random_proper_ideal(rng4, r);
            auto B = oracles::random_proper_ideal(rng4, r);
            require(out,
                    containment_via_localization(B, A) == contains(A, B),
                    "localized containment vs direct containment");
        }
    });

    criterion(10, "pattern transfer under expansion and weighting", 0.0,
              [](Outcome& out) {
        std::mt19937_64 rng(43252003);
        for (int trial = 0; trial < 50 && out.ok; ++trial) {
            Ring r = oracles::random_ring(rng);
            auto I = oracles::random_proper_ideal(rng, r);
            ExpansionSpec espec = random_expansion(rng, r);
            WeightSpec wspec = random_weights(rng, r);
            auto base = colon_pattern(I, 4).entries;
            require(out, colon_pattern(expand(I, espec), 4).entries == base,
                    "pattern must survive expansion");
            require(out, colon_pattern(weight(I, wspec), 4).entries == base,
                    "pattern must survive weighting");
        }
    });

    criterion(11, "oracle equivalence for colon, intersection, associated "
                  "primes",
              0.0, [](Outcome& out) {
        std::mt19937_64 rng(20240817);
        for (int trial = 0; trial < 100 && out.ok; ++trial) {
            Ring r = oracles::random_ring(rng);
            auto I = oracles::random_proper_ideal(rng, r);
            auto J = oracles::random_proper_ideal(rng, r);
            auto Q = colon(I, J);
            auto M = intersect(I, J);
            auto limits = oracles::box_limits({&I, &J, &Q, &M});
            bool colon_ok = true, meet_ok = true;
            oracles::for_box(limits, [&](const oracles::Exps& e) {
                colon_ok = colon_ok && (oracles::raw_member(e, Q) ==
                                        oracles::colon_member(e, I, J));
                meet_ok = meet_ok && (oracles::raw_member(e, M) ==
                                      (oracles::raw_member(e, I) &&
                                       oracles::raw_member(e, J)));
            });
            require(out, colon_ok, "colon disagrees with the box oracle");
            require(out, meet_ok,
                    "intersection disagrees with the box oracle");
            std::set<std::vector<std::size_t>> got;
            for (const auto& p : associated_primes(I))
                got.insert(p.variables());
            require(out, got == oracles::ass_oracle(I),
                    "associated primes disagree with the witness oracle");
        }
    });

    criterion(12, "stable colon-power range and squared-ideal index", 0.0,
              [](Outcome& out) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            for (std::int64_t r = 1; r <= 2; ++r) {
                MonomialIdeal L = family_LmR(m, r);
                PowerCache cache;
                for (std::int64_t rr = 2; rr <= m + 4; ++rr)
                    for (std::int64_t ss = 1; ss < rr; ++ss)
                        if (rr - ss >= m + 1)
                            require(out,
                                    general_colon_power(L, rr, ss, cache) ==
                                        cache.power(L, rr - ss),
                                    "colon power law fails at m=" +
                                        std::to_string(m));
                std::int64_t H = (m + 4) / 2 + 1;
                SpiReport base = observed_spi(colon_pattern(L, H, cache));
                PowerCache cache2;
                SpiReport sq = observed_spi(
                    colon_pattern(cache.power(L, 2), H, cache2));
                require(out, sq.observed_spi <= base.observed_spi,
                        "squared ideal must not raise the observed index");
            }
        }
    });

    criterion(13, "parser round trips and negative corpus exit codes", 0.0,
              [&cli](Outcome& out) {
        for (const auto& [ring_text, ideal_text] : kCorpus) {
            Ring r = parse_ring(ring_text);
            auto I = parse_ideal(ideal_text, r);
            require(out, parse_ideal(print_canonical(I), r) == I,
                    "canonical text must round trip");
            require(out, ideal_from_json(to_json(I)) == I,
                    "JSON must round trip");
        }
        std::mt19937_64 rng(5417);
        for (int trial = 0; trial < 200; ++trial) {
            Ring r = oracles::random_ring(rng);
            auto I = oracles::random_proper_ideal(rng, r);
            require(out, parse_ideal(print_canonical(I), r) == I,
                    "random canonical round trip");
            require(out, ideal_from_json(to_json(I)) == I,
                    "random JSON round trip");
        }

        require(out, !cli.empty(),
                "MONIDEAL_CLI must point at the command-line binary");
        if (!out.ok)
            return;
        const std::vector<std::string> negative = {
            "colon --ring 'x,y' --ideal 'x^2 + y' --ideal2 'x'",
            "colon --ring 'x,y' --ideal 'x y' --ideal2 'x'",
            "colon --ring 'x,y' --ideal 'x^' --ideal2 'x'",
            "colon --ring 'x,y' --ideal '(x, y' --ideal2 'x'",
            "colon --ring 'x,y' --ideal 'x**y' --ideal2 'x'",
            "colon --ring 'x,y' --ideal '2*x' --ideal2 'x'",
            "colon --ring 'x,y' --ideal 'w^3' --ideal2 'x'",
            "colon --ring 'x,y' --ideal 'x^99999999999999999999' "
            "--ideal2 'x'",
            "colon --ring 'x, x' --ideal 'x' --ideal2 'x'",
            "colon --ring 'x,' --ideal 'x' --ideal2 'x'",
            "colon --ring 'x,y' --ideal '' --ideal2 'x'",
            "colon --ring 'x,y' --ideal '1*x' --ideal2 'x'",
            "colon --ring 'x,y' --ideal 'x,, y' --ideal2 'x'",
            "localize --ring 'x,y' --ideal 'x' --prime '()'",
            "localize --ring 'x,y' --ideal 'x' --prime '(x'",
            "localize --ring 'x,y' --ideal 'x' --prime '(x, x)'",
        };
        for (const auto& args : negative) {
            std::string err;
            int code = run_cli(cli, args, err);
            require(out, code == 2,
                    "expected exit 2 for: " + args + " (got " +
                        std::to_string(code) + ")");
            require(out,
                    err.find("line") != std::string::npos &&
                        err.find("column") != std::string::npos,
                    "message must carry a position for: " + args);
        }
    });

    if (g_failed) {
        std::printf("%d criterion(s) failed\n", g_failed);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
