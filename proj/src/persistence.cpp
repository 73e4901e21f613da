#include "monideal/persistence.hpp"

#include "monideal/decomposition.hpp"
#include "monideal/parallel.hpp"

namespace monideal {

ColonPattern colon_pattern(const MonomialIdeal& I, std::int64_t L,
                           PowerCache& cache, const ScanOptions& opts) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("colon pattern scan requires a nonzero proper "
                           "ideal");
    if (L < 2)
        throw domain_error("scan horizon must be at least 2");

    cache.power(I, L); // seed every power up to L before the parallel scan

    ColonPattern pattern;
    pattern.fingerprint = I.fingerprint_hex();
    pattern.horizon = L;
    pattern.entries.assign(static_cast<std::size_t>(L - 1), ColonEq::equal);
    parallel_for_indices(
        pattern.entries.size(), opts.threads, [&](std::size_t idx) {
            std::int64_t ell = static_cast<std::int64_t>(idx) + 1;
            MonomialIdeal lhs = colon(cache.power(I, ell + 1), I);
            pattern.entries[idx] = equals(lhs, cache.power(I, ell))
                                       ? ColonEq::equal
                                       : ColonEq::not_equal;
        });
    return pattern;
}

ColonPattern colon_pattern(const MonomialIdeal& I, std::int64_t L) {
    PowerCache cache;
    return colon_pattern(I, L, cache);
}

SpiReport observed_spi(const ColonPattern& pattern) {
    SpiReport report;
    report.horizon = pattern.horizon;
    report.certified = false;
    std::int64_t last_neq = 0;
    for (std::size_t idx = 0; idx < pattern.entries.size(); ++idx)
        if (pattern.entries[idx] == ColonEq::not_equal)
            last_neq = static_cast<std::int64_t>(idx) + 1;
    report.observed_spi = last_neq + 1;
    report.all_equal_from_1 = last_neq == 0;
    std::int64_t run = 0;
    for (auto it = pattern.entries.rbegin(); it != pattern.entries.rend();
         ++it) {
        if (*it != ColonEq::equal)
            break;
        ++run;
    }
    report.trailing_equal_run = run;
    return report;
}

FluctuationVerdict detect_fluctuation(const ColonPattern& pattern) {
    // e_k for k = 1..L; e_1 holds identically.
    std::int64_t L = pattern.horizon;
    auto e = [&](std::int64_t k) {
        return k == 1 ? ColonEq::equal
                      : pattern.entries[static_cast<std::size_t>(k - 2)];
    };
    auto find = [&](ColonEq first, ColonEq second,
                    ColonEq third) -> std::optional<Witness> {
        for (std::int64_t a = 1; a <= L; ++a) {
            if (e(a) != first)
                continue;
            for (std::int64_t b = a + 1; b <= L; ++b) {
                if (e(b) != second)
                    continue;
                for (std::int64_t c = b + 1; c <= L; ++c)
                    if (e(c) == third)
                        return Witness{a, b, c};
            }
        }
        return std::nullopt;
    };

    FluctuationVerdict v;
    v.case_i = find(ColonEq::equal, ColonEq::not_equal, ColonEq::equal);
    v.case_ii = find(ColonEq::not_equal, ColonEq::equal, ColonEq::not_equal);
    if (v.case_i && v.case_ii)
        v.verdict = FluctuationKind::both;
    else if (v.case_i)
        v.verdict = FluctuationKind::case_i;
    else if (v.case_ii)
        v.verdict = FluctuationKind::case_ii;
    else
        v.verdict = FluctuationKind::none;
    return v;
}

std::vector<std::pair<std::int64_t, std::vector<MonomialPrime>>>
ass_powers(const MonomialIdeal& I, std::int64_t s_max, PowerCache& cache) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("associated-prime scan requires a nonzero proper "
                           "ideal");
    if (s_max < 1)
        throw domain_error("s_max must be at least 1");
    std::vector<std::pair<std::int64_t, std::vector<MonomialPrime>>> out;
    for (std::int64_t s = 1; s <= s_max; ++s)
        out.emplace_back(s, associated_primes(cache.power(I, s)));
    return out;
}

std::vector<std::pair<std::int64_t, std::vector<MonomialPrime>>>
ass_powers(const MonomialIdeal& I, std::int64_t s_max) {
    PowerCache cache;
    return ass_powers(I, s_max, cache);
}

MonomialIdeal family_LmR(std::int64_t m, std::int64_t r) {
    if (m < 1 || r < 1)
        throw domain_error("family parameters must satisfy m, r >= 1");
    Ring ring(std::vector<std::string>{"x", "y", "z"});
    auto mono = [](std::int64_t a, std::int64_t b, std::int64_t c) {
        return Monomial(std::vector<std::int64_t>{a, b, c});
    };
    std::vector<Monomial> gens = {
        mono(m + 3, 0, 0), mono(0, m + 3, 0),     mono(m + 2, 1, 0),
        mono(1, m + 2, 0), mono(m + 1, 2, r),
    };
    return MonomialIdeal::from_generators(std::move(ring), std::move(gens));
}

bool spi_witness_check(std::int64_t m, std::int64_t r, std::int64_t s) {
    if (s < 2 || s > m + 1)
        throw domain_error("witness check needs 2 <= s <= m+1");
    MonomialIdeal L = family_LmR(m, r);
    Monomial u(std::vector<std::int64_t>{
        m + 1, checked_add(checked_mul(s - 1, m + 1), s - 2), 0});
    PowerCache cache;
    MonomialIdeal colon_power = colon(cache.power(L, s), L);
    return is_member(u, colon_power) && !is_member(u, cache.power(L, s - 1));
}

MonomialIdeal general_colon_power(const MonomialIdeal& I, std::int64_t r,
                                  std::int64_t s, PowerCache& cache) {
    if (r < 1 || s < 1)
        throw domain_error("colon power exponents must be at least 1");
    return colon(cache.power(I, r), cache.power(I, s));
}

MonomialIdeal general_colon_power(const MonomialIdeal& I, std::int64_t r,
                                  std::int64_t s) {
    PowerCache cache;
    return general_colon_power(I, r, s, cache);
}

} // namespace monideal
