#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rotsys::bounds {

// Exact rational, reduced, denominator > 0.  Fractional bound coefficients
// must never go through floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t ceil() const;
    std::int64_t floor() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

std::int64_t binomial(int n, int k);

// cr_g(K_n) >= C(n,2) - 3n + 3(2 - 2g), clamped at zero.
std::int64_t kainen_lower_bound(int n, int g);

// Z(n) = (1/4) floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2).
std::int64_t guy_Z(int n);

// gamma(K_n) = ceil((n-3)(n-4)/12).
int genus_complete(int n);

// floor((7 + sqrt(1+48g)) / 2), integer square root throughout.
int heawood_number(int g);

// Edges to add to a minimum-genus embedding of K_n to reach a triangulation:
// f = 2E - 3F with E = C(n,2), F = 2 - 2 gamma(K_n) - n + E.
int triangulation_deficiency(int n);

struct ToroidalBounds {
    std::int64_t lower;       // ceil(23 C(n,4) / 210)
    Rational upper_formula;   // 59 C(n-1,4) / 216, exact
};

// Valid for n >= 10 only; throws std::domain_error below that.
ToroidalBounds toroidal_bounds(int n);

enum class CellKind {
    value,       // lower == upper, known exactly
    interval,    // lower < upper
    zero,        // g == gamma(K_n): embeds, crossing number 0
    dash,        // g > gamma(K_n): embeds with genus to spare
    partial,     // outside the curated table; formula endpoints only
};

struct CrossingRange {
    int n = 0, g = 0;
    std::int64_t lower = 0, upper = 0;
    CellKind kind = CellKind::partial;
    std::string lower_source;
    std::string upper_source;
    std::string note;

    std::string cell() const;  // "18", "[37, 42]", "0" or "-"
};

// Curated results for 8 <= n <= 11, 0 <= g <= 5; formula-only elsewhere.
CrossingRange known_range(int n, int g);

// The full grid, g down the side and n across, matching cell-for-cell the
// summary layout used by the crossing-number literature for this range.
std::string render_table();
std::string ranges_to_json();

}  // namespace rotsys::bounds
