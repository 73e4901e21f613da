// Command-line front end: every analysis as a subcommand, with table or
// JSON output.  Exit codes: 0 success, 1 computation error, 2 usage or
// parse error.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monideal/decomposition.hpp"
#include "monideal/operators.hpp"
#include "monideal/parser.hpp"
#include "monideal/persistence.hpp"

namespace {

using nlohmann::json;
using namespace monideal;

struct Common {
    std::string format = "table";
    std::string cache_dir;
    unsigned threads = 0;
};

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--cache-dir", common.cache_dir,
                    "Directory for the persistent power cache");
    sub->add_option("--threads", common.threads,
                    "Worker threads for scans (0 = all cores)");
}

PowerCache make_cache(const Common& common) {
    if (!common.cache_dir.empty())
        return PowerCache(common.cache_dir);
    return PowerCache();
}

std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         const char* what) {
    std::vector<std::int64_t> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            while (used < item.size() &&
                   std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw parse_error(std::string(what) +
                                  " entries must be integers, got '" + item +
                                  "'",
                              1, 1);
        }
    }
    if (out.empty())
        throw parse_error(std::string(what) + " list is empty", 1, 1);
    return out;
}

// Every subcommand prints exactly one block on stdout.
void emit(const std::string& text) { std::cout << text << "\n"; }

std::string table_pattern(const ColonPattern& p) {
    std::ostringstream out;
    out << "horizon: " << p.horizon << "\n";
    for (std::size_t idx = 0; idx < p.entries.size(); ++idx)
        out << "d_" << idx + 1 << ": "
            << (p.entries[idx] == ColonEq::equal ? "eq" : "neq") << "\n";
    return out.str();
}

std::string table_spi(const SpiReport& r) {
    std::ostringstream out;
    out << "observed_spi: " << r.observed_spi
        << (r.all_equal_from_1 ? " (all colon powers equal from 1)" : "")
        << "\n"
        << "certified: false (observation at horizon " << r.horizon << ")\n"
        << "trailing_equal_run: " << r.trailing_equal_run;
    return out.str();
}

std::string table_witness(const std::optional<Witness>& w) {
    if (!w)
        return "none";
    std::ostringstream out;
    out << "(" << w->a << ", " << w->b << ", " << w->c << ")";
    return out.str();
}

std::string table_fluct(const FluctuationVerdict& v) {
    std::ostringstream out;
    const char* name = "none";
    switch (v.verdict) {
    case FluctuationKind::none: name = "none"; break;
    case FluctuationKind::case_i: name = "case_i"; break;
    case FluctuationKind::case_ii: name = "case_ii"; break;
    case FluctuationKind::both: name = "both"; break;
    }
    out << "verdict: " << name << "\n"
        << "case_i: " << table_witness(v.case_i) << "\n"
        << "case_ii: " << table_witness(v.case_ii);
    return out.str();
}

std::string table_ass(
    const std::vector<std::pair<std::int64_t, std::vector<MonomialPrime>>>&
        rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            out << "\n";
        out << "s=" << rows[i].first << ": ";
        for (std::size_t k = 0; k < rows[i].second.size(); ++k) {
            if (k)
                out << " ";
            out << print_canonical(rows[i].second[k]);
        }
    }
    return out.str();
}

json doc(const std::string& serialized) { return json::parse(serialized); }

// ---- subcommand bodies ------------------------------------------------

struct Args {
    Common common;
    std::string ring, ideal, ideal2, prime, tuple, weights;
    std::int64_t exp = 0, horizon = 6, powers = 1, m = 1, r = 1;
    std::uint64_t seed = 2024;
    bool analyze = false;
};

void run_colon(const Args& a) {
    Ring R = parse_ring(a.ring);
    MonomialIdeal I = parse_ideal(a.ideal, R);
    MonomialIdeal J = parse_ideal(a.ideal2, R);
    MonomialIdeal Q = colon(I, J);
    emit(a.common.format == "json" ? to_json(Q) : print_canonical(Q));
}

void run_power(const Args& a) {
    Ring R = parse_ring(a.ring);
    MonomialIdeal I = parse_ideal(a.ideal, R);
    PowerCache cache = make_cache(a.common);
    MonomialIdeal P = cache.power(I, a.exp);
    emit(a.common.format == "json" ? to_json(P) : print_canonical(P));
}

void run_ass(const Args& a) {
    Ring R = parse_ring(a.ring);
    MonomialIdeal I = parse_ideal(a.ideal, R);
    PowerCache cache = make_cache(a.common);
    auto rows = ass_powers(I, a.powers, cache);
    emit(a.common.format == "json" ? to_json(rows, R) : table_ass(rows));
}

void run_decompose(const Args& a) {
    Ring R = parse_ring(a.ring);
    MonomialIdeal I = parse_ideal(a.ideal, R);
    Decomposition dec = irreducible_decomposition(I);
    if (a.common.format == "json") {
        emit(to_json(dec));
        return;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        if (i)
            out << "\n";
        out << "(" << print_canonical(dec.components[i].to_ideal()) << ")";
    }
    emit(out.str());
}

void run_spi(const Args& a) {
    Ring R = parse_ring(a.ring);
    MonomialIdeal I = parse_ideal(a.ideal, R);
    PowerCache cache = make_cache(a.common);
    ColonPattern p =
        colon_pattern(I, a.horizon, cache, ScanOptions{a.common.threads});
    SpiReport rep = observed_spi(p);
    if (a.common.format == "json") {
        json j = doc(to_json(p));
        json r = doc(to_json(rep));
        for (auto& [k, v] : r.items())
            if (k != "format")
                j[k] = v;
        emit(j.dump(2));
        return;
    }
    emit(table_pattern(p) + table_spi(rep));
}

void run_fluct(const Args& a) {
    Ring R = parse_ring(a.ring);
    MonomialIdeal I = parse_ideal(a.ideal, R);
    PowerCache cache = make_cache(a.common);
    ColonPattern p =
        colon_pattern(I, a.horizon, cache, ScanOptions{a.common.threads});
    FluctuationVerdict v = detect_fluctuation(p);
    if (a.common.format == "json") {
        json j = doc(to_json(p));
        json f = doc(to_json(v));
        for (auto& [k, val] : f.items())
            if (k != "format")
                j[k] = val;
        emit(j.dump(2));
        return;
    }
    emit(table_pattern(p) + table_fluct(v));
}

void run_expand(const Args& a) {
    Ring R = parse_ring(a.ring);
    MonomialIdeal I = parse_ideal(a.ideal, R);
    ExpansionSpec spec(R, parse_int_list(a.tuple, "tuple"));
    MonomialIdeal E = expand(I, spec);
    emit(a.common.format == "json" ? to_json(E) : print_canonical(E));
}

void run_weight(const Args& a) {
    Ring R = parse_ring(a.ring);
    MonomialIdeal I = parse_ideal(a.ideal, R);
    WeightSpec spec(parse_int_list(a.weights, "weights"));
    MonomialIdeal W = weight(I, spec);
    emit(a.common.format == "json" ? to_json(W) : print_canonical(W));
}

void run_localize(const Args& a) {
    Ring R = parse_ring(a.ring);
    MonomialIdeal I = parse_ideal(a.ideal, R);
    MonomialPrime p = parse_prime(a.prime, R);
    MonomialIdeal loc = localize(I, p);
    emit(a.common.format == "json" ? to_json(loc) : print_canonical(loc));
}

void run_family(const Args& a) {
    MonomialIdeal L = family_LmR(a.m, a.r);
    if (!a.analyze) {
        emit(a.common.format == "json" ? to_json(L) : print_canonical(L));
        return;
    }
    PowerCache cache = make_cache(a.common);
    ColonPattern p =
        colon_pattern(L, a.horizon, cache, ScanOptions{a.common.threads});
    SpiReport rep = observed_spi(p);
    FluctuationVerdict v = detect_fluctuation(p);
    auto rows = ass_powers(L, a.horizon, cache);
    if (a.common.format == "json") {
        json j;
        j["format"] = 1;
        j["ideal"] = doc(to_json(L));
        j["pattern"] = doc(to_json(p));
        j["spi"] = doc(to_json(rep));
        j["fluctuation"] = doc(to_json(v));
        j["ass_powers"] = doc(to_json(rows, L.ring()))["powers"];
        emit(j.dump(2));
        return;
    }
    std::ostringstream out;
    out << "ideal: " << print_canonical(L) << "\n"
        << table_pattern(p) << table_spi(rep) << "\n"
        << table_fluct(v) << "\n"
        << table_ass(rows);
    emit(out.str());
}

// Regression corpus: one line per check, overall failure flips the exit
// code.  The seed feeds the randomized round-trip block.
int run_selftest(const Args& a) {
    struct Row {
        std::string name;
        bool pass;
    };
    std::vector<Row> rows;
    auto check = [&](const std::string& name, bool ok) {
        rows.push_back({name, ok});
    };

    Ring Rxy = parse_ring("x, y");
    {
        ColonPattern p =
            colon_pattern(parse_ideal("x^6, y^6, x*y^5, x^5*y, x^4*y^4", Rxy),
                          5);
        std::vector<ColonEq> want = {ColonEq::equal, ColonEq::not_equal,
                                     ColonEq::not_equal, ColonEq::equal};
        check("pattern eq-neq-neq-eq", p.entries == want);
        check("observed spi 4", observed_spi(p).observed_spi == 4);
        FluctuationVerdict v = detect_fluctuation(p);
        check("case i witness (1,3,5)",
              v.verdict == FluctuationKind::case_i && v.case_i &&
                  v.case_i->a == 1 && v.case_i->b == 3 && v.case_i->c == 5);
    }
    {
        ColonPattern p = colon_pattern(
            parse_ideal("x^7, y^7, x^2*y^5, x^5*y^2", Rxy), 5);
        FluctuationVerdict v = detect_fluctuation(p);
        check("fluctuation verdict both",
              v.verdict == FluctuationKind::both && v.case_ii &&
                  v.case_ii->a == 2 && v.case_ii->b == 3 && v.case_ii->c == 4);
    }
    for (std::int64_t m = 1; m <= 3; ++m) {
        for (std::int64_t r = 1; r <= 2; ++r) {
            MonomialIdeal L = family_LmR(m, r);
            PowerCache cache;
            SpiReport rep = observed_spi(colon_pattern(L, m + 3, cache));
            check("family m=" + std::to_string(m) + " r=" + std::to_string(r) +
                      " spi " + std::to_string(m + 1),
                  rep.observed_spi == m + 1);
            bool witnesses = true;
            for (std::int64_t s = 2; s <= m + 1; ++s)
                witnesses = witnesses && spi_witness_check(m, r, s);
            check("family m=" + std::to_string(m) + " r=" + std::to_string(r) +
                      " colon witnesses",
                  witnesses);
        }
    }
    {
        MonomialIdeal L = family_LmR(1, 1);
        auto ass = associated_primes(L);
        check("family ass primes",
              ass.size() == 2 &&
                  print_canonical(ass[0]) == "(x, y)" &&
                  print_canonical(ass[1]) == "(x, y, z)");
    }
    {
        Ring R3 = parse_ring("x1, x2, x3");
        MonomialIdeal I = parse_ideal("x1^3, x2*x3^2, x1*x3", R3);
        MonomialIdeal E = expand(I, ExpansionSpec(R3, {3, 1, 2}));
        check("expansion has 19 generators", E.generators().size() == 19);
        Ring R5 = parse_ring("x1, x2, x3, x4, x5");
        MonomialIdeal W =
            weight(parse_ideal("x1^2*x3*x4^5, x2^4*x4^3*x5^2, x1*x3^2, x4*x5^3",
                               R5),
                   WeightSpec({1, 4, 2, 3, 2}));
        check("weighting example",
              print_canonical(W) ==
                  "x1*x3^4, x4^3*x5^6, x1^2*x3^2*x4^15, x2^16*x4^9*x5^4");
    }
    {
        std::mt19937_64 rng(a.seed);
        bool ok = true;
        for (int trial = 0; trial < 25 && ok; ++trial) {
            std::uniform_int_distribution<int> nvars(1, 3), ngens(1, 4),
                expo(0, 4);
            std::vector<std::string> names = {"x", "y", "z"};
            names.resize(static_cast<std::size_t>(nvars(rng)));
            Ring R(names);
            std::vector<Monomial> gens;
            int k = ngens(rng);
            for (int g = 0; g < k; ++g) {
                std::vector<std::int64_t> e;
                for (std::size_t i = 0; i < R.size(); ++i)
                    e.push_back(expo(rng));
                gens.emplace_back(std::move(e));
            }
            MonomialIdeal I = MonomialIdeal::from_generators(R, gens);
            ok = ok && parse_ideal(print_canonical(I), R) == I &&
                 ideal_from_json(to_json(I)) == I;
        }
        check("randomized round trips", ok);
    }

    bool all = true;
    for (const auto& row : rows)
        all = all && row.pass;
    if (a.common.format == "json") {
        json j;
        j["format"] = 1;
        json results = json::array();
        for (const auto& row : rows)
            results.push_back({{"name", row.name}, {"pass", row.pass}});
        j["results"] = std::move(results);
        j["all_pass"] = all;
        emit(j.dump(2));
    } else {
        std::ostringstream out;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i)
                out << "\n";
            out << (rows[i].pass ? "PASS" : "FAIL") << "  " << rows[i].name;
        }
        emit(out.str());
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation on monomial ideals: powers, colon "
                 "ideals, decompositions, persistence and fluctuation "
                 "analysis"};
    app.require_subcommand(1);
    Args a;
    if (const char* env = std::getenv("MONIDEAL_CACHE_DIR"))
        a.common.cache_dir = env;

    auto* colon_cmd =
        app.add_subcommand("colon", "Colon ideal (I : J)");
    colon_cmd->add_option("--ring", a.ring)->required();
    colon_cmd->add_option("--ideal", a.ideal)->required();
    colon_cmd->add_option("--ideal2", a.ideal2)->required();
    add_common(colon_cmd, a.common);

    auto* power_cmd = app.add_subcommand("power", "Ideal power I^s");
    power_cmd->add_option("--ring", a.ring)->required();
    power_cmd->add_option("--ideal", a.ideal)->required();
    power_cmd->add_option("--exp", a.exp)->required()
        ->check(CLI::NonNegativeNumber);
    add_common(power_cmd, a.common);

    auto* ass_cmd =
        app.add_subcommand("ass", "Associated primes of I, I^2, ..., I^s");
    ass_cmd->add_option("--ring", a.ring)->required();
    ass_cmd->add_option("--ideal", a.ideal)->required();
    ass_cmd->add_option("--powers", a.powers)->check(CLI::PositiveNumber);
    add_common(ass_cmd, a.common);

    auto* dec_cmd =
        app.add_subcommand("decompose", "Irredundant irreducible "
                                        "decomposition");
    dec_cmd->add_option("--ring", a.ring)->required();
    dec_cmd->add_option("--ideal", a.ideal)->required();
    add_common(dec_cmd, a.common);

    auto* spi_cmd = app.add_subcommand(
        "spi", "Colon-power pattern and observed strong persistence index");
    spi_cmd->add_option("--ring", a.ring)->required();
    spi_cmd->add_option("--ideal", a.ideal)->required();
    spi_cmd->add_option("--horizon", a.horizon)
        ->check(CLI::Range(std::int64_t{2},
                           std::numeric_limits<std::int64_t>::max()));
    add_common(spi_cmd, a.common);

    auto* fluct_cmd = app.add_subcommand(
        "fluct", "Colon-power pattern and fluctuation verdict");
    fluct_cmd->add_option("--ring", a.ring)->required();
    fluct_cmd->add_option("--ideal", a.ideal)->required();
    fluct_cmd->add_option("--horizon", a.horizon)
        ->check(CLI::Range(std::int64_t{2},
                           std::numeric_limits<std::int64_t>::max()));
    add_common(fluct_cmd, a.common);

    auto* expand_cmd = app.add_subcommand("expand", "Expansion I*");
    expand_cmd->add_option("--ring", a.ring)->required();
    expand_cmd->add_option("--ideal", a.ideal)->required();
    expand_cmd->add_option("--tuple", a.tuple, "Block sizes i1,...,in")
        ->required();
    add_common(expand_cmd, a.common);

    auto* weight_cmd = app.add_subcommand("weight", "Weighted ideal I_W");
    weight_cmd->add_option("--ring", a.ring)->required();
    weight_cmd->add_option("--ideal", a.ideal)->required();
    weight_cmd->add_option("--weights", a.weights, "Weights w1,...,wn")
        ->required();
    add_common(weight_cmd, a.common);

    auto* loc_cmd =
        app.add_subcommand("localize", "Monomial localization I(p)");
    loc_cmd->add_option("--ring", a.ring)->required();
    loc_cmd->add_option("--ideal", a.ideal)->required();
    loc_cmd->add_option("--prime", a.prime, "Prime, e.g. \"(x, y)\"")
        ->required();
    add_common(loc_cmd, a.common);

    auto* family_cmd = app.add_subcommand(
        "family", "The five-generator family over x, y, z");
    family_cmd->add_option("--m", a.m)->required()->check(CLI::PositiveNumber);
    family_cmd->add_option("--r", a.r)->required()->check(CLI::PositiveNumber);
    family_cmd->add_flag("--analyze", a.analyze,
                         "Also scan pattern, spi, fluctuation and Ass");
    family_cmd->add_option("--horizon", a.horizon)
        ->check(CLI::Range(std::int64_t{2},
                           std::numeric_limits<std::int64_t>::max()));
    add_common(family_cmd, a.common);

    auto* self_cmd =
        app.add_subcommand("selftest", "Run the regression corpus");
    self_cmd->add_option("--seed", a.seed, "Seed for randomized round trips");
    add_common(self_cmd, a.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (colon_cmd->parsed())
            run_colon(a);
        else if (power_cmd->parsed())
            run_power(a);
        else if (ass_cmd->parsed())
            run_ass(a);
        else if (dec_cmd->parsed())
            run_decompose(a);
        else if (spi_cmd->parsed())
            run_spi(a);
        else if (fluct_cmd->parsed())
            run_fluct(a);
        else if (expand_cmd->parsed())
            run_expand(a);
        else if (weight_cmd->parsed())
            run_weight(a);
        else if (loc_cmd->parsed())
            run_localize(a);
        else if (family_cmd->parsed())
            run_family(a);
        else if (self_cmd->parsed())
            return run_selftest(a);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
