#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/power_cache.hpp"
#include "monideal/prime.hpp"

namespace monideal {

enum class ColonEq { equal, not_equal };

struct ScanOptions {
    unsigned threads = 0; // 0: one worker per available core
};

// d_ell, ell = 1..L-1, records whether (I^{ell+1} : I) = I^ell.  The ell = 0
// case is omitted: (I : I) = R holds identically.
struct ColonPattern {
    std::string fingerprint;      // of the scanned ideal
    std::int64_t horizon = 0;     // L >= 2
    std::vector<ColonEq> entries; // exactly L-1 of them
};

// All values are observations at the scan horizon; nothing here certifies
// behaviour past it, hence `certified` is always false.
struct SpiReport {
    std::int64_t observed_spi = 1; // 1 + last not_equal position, or 1
    bool all_equal_from_1 = false;
    std::int64_t horizon = 0;
    bool certified = false;
    std::int64_t trailing_equal_run = 0;
};

struct Witness {
    std::int64_t a = 0, b = 0, c = 0; // a < b < c <= horizon
};

enum class FluctuationKind { none, case_i, case_ii, both };

// With e_1 = equal (identically) and e_k = d_{k-1} for k >= 2:
// case (i) is e_a = equal, e_b = not_equal, e_c = equal; case (ii) is the
// dual.  Witnesses are the lexicographically smallest valid triples.
struct FluctuationVerdict {
    std::optional<Witness> case_i;
    std::optional<Witness> case_ii;
    FluctuationKind verdict = FluctuationKind::none;
};

ColonPattern colon_pattern(const MonomialIdeal& I, std::int64_t L,
                           PowerCache& cache, const ScanOptions& opts = {});
ColonPattern colon_pattern(const MonomialIdeal& I, std::int64_t L);

SpiReport observed_spi(const ColonPattern& pattern);
FluctuationVerdict detect_fluctuation(const ColonPattern& pattern);

// Ass(R/I^s) for s = 1..s_max, in order.
std::vector<std::pair<std::int64_t, std::vector<MonomialPrime>>>
ass_powers(const MonomialIdeal& I, std::int64_t s_max, PowerCache& cache);
std::vector<std::pair<std::int64_t, std::vector<MonomialPrime>>>
ass_powers(const MonomialIdeal& I, std::int64_t s_max);

// The five-generator family over K[x, y, z]:
// (x^{m+3}, y^{m+3}, x^{m+2} y, x y^{m+2}, x^{m+1} y^2 z^r), m, r >= 1.
MonomialIdeal family_LmR(std::int64_t m, std::int64_t r);

// For L = family_LmR(m, r) and u = x^{m+1} y^{(s-1)(m+1)+s-2}, checks
// u ∈ (L^s : L) and u ∉ L^{s-1}.  Requires 2 <= s <= m+1.
bool spi_witness_check(std::int64_t m, std::int64_t r, std::int64_t s);

// (I^r : I^s), r >= 1, s >= 1.
MonomialIdeal general_colon_power(const MonomialIdeal& I, std::int64_t r,
                                  std::int64_t s, PowerCache& cache);
MonomialIdeal general_colon_power(const MonomialIdeal& I, std::int64_t r,
                                  std::int64_t s);

} // namespace monideal
