#include "rotsys/bounds.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rotsys::bounds {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

std::int64_t Rational::floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t kainen_lower_bound(int n, int g) {
    const std::int64_t v = binomial(n, 2) - 3 * n + 3 * (2 - 2 * static_cast<std::int64_t>(g));
    return v > 0 ? v : 0;
}

std::int64_t guy_Z(int n) {
    const std::int64_t p = static_cast<std::int64_t>(n / 2) * ((n - 1) / 2) *
                           ((n - 2) / 2) * ((n - 3) / 2);
    return p / 4;  // the product is always a multiple of 4
}

int genus_complete(int n) {
    const int t = (n - 3) * (n - 4);
    return t <= 0 ? 0 : (t + 11) / 12;
}

namespace {
std::int64_t isqrt(std::int64_t x) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}
}  // namespace

int heawood_number(int g) {
    return static_cast<int>((7 + isqrt(1 + 48 * static_cast<std::int64_t>(g))) / 2);
}

int triangulation_deficiency(int n) {
    const std::int64_t e = binomial(n, 2);
    const std::int64_t f = 2 - 2 * static_cast<std::int64_t>(genus_complete(n)) - n + e;
    return static_cast<int>(2 * e - 3 * f);
}

ToroidalBounds toroidal_bounds(int n) {
    if (n < 10) throw std::domain_error("toroidal bounds formula needs n >= 10");
    ToroidalBounds tb{Rational(23 * binomial(n, 4), 210).ceil(),
                      Rational(59 * binomial(n - 1, 4), 216)};
    return tb;
}

std::string CrossingRange::cell() const {
    if (kind == CellKind::dash) return "-";
    if (lower == upper) return std::to_string(lower);
    return "[" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
}

namespace {

struct TableEntry {
    int n, g;
    std::int64_t lower, upper;
    const char* lower_source;
    const char* upper_source;
    const char* note;
};

// Curated endpoints for the cells not already decided by the genus formula.
// Sources name the result each endpoint comes from; edits here are data edits.
constexpr TableEntry kTable[] = {
    {8, 0, 18, 18, "Guy's Z(n) formula", "proven optimal for n <= 12 (Pan-Richter)", ""},
    {9, 0, 36, 36, "Guy's Z(n) formula", "proven optimal for n <= 12 (Pan-Richter)", ""},
    {10, 0, 60, 60, "Guy's Z(n) formula", "proven optimal for n <= 12 (Pan-Richter)", ""},
    {11, 0, 100, 100, "Guy's Z(n) formula", "proven optimal for n <= 12 (Pan-Richter)", ""},

    {8, 1, 4, 4, "Guy-Jenkyns-Schaer", "Guy-Jenkyns-Schaer", ""},
    {9, 1, 9, 9, "Guy-Jenkyns-Schaer", "Guy-Jenkyns-Schaer", ""},
    {10, 1, 23, 23, "Guy-Jenkyns-Schaer", "Guy-Jenkyns-Schaer", ""},
    {11, 1, 37, 42, "toroidal formula ceil(23 C(n,4)/210)", "Guy-Jenkyns-Schaer drawing",
     "the 42 comes from a drawing, not from the 59 C(n-1,4)/216 formula (which gives 2065/36)"},

    {9, 2, 4, 4, "Riskin", "Riskin", ""},
    {10, 2, 9, 12, "Kainen lower bound", "vertex insertion into a genus-2 K9 drawing", ""},
    {11, 2, 16, 27, "Kainen lower bound", "vertex insertion into a genus-2 K10 drawing", ""},

    {10, 3, 3, 3, "Kainen lower bound", "star insertion into a hexagonal genus-3 K9 embedding", ""},
    {11, 3, 10, 14, "Kainen lower bound", "two-vertex insertion into a genus-3 K9 embedding", ""},

    {11, 4, 4, 4, "Kainen lower bound", "star insertion into a hexagonal genus-4 K10 embedding", ""},
};

}  // namespace

CrossingRange known_range(int n, int g) {
    CrossingRange r;
    r.n = n;
    r.g = g;
    const int gamma = genus_complete(n);
    if (g > gamma) {
        r.kind = CellKind::dash;
        r.lower = r.upper = 0;
        r.lower_source = r.upper_source = "embeds below this genus (Ringel-Youngs)";
        return r;
    }
    if (g == gamma) {
        r.kind = CellKind::zero;
        r.lower = r.upper = 0;
        r.lower_source = r.upper_source = "genus formula gamma(K_n) = ceil((n-3)(n-4)/12)";
        return r;
    }
    for (const auto& t : kTable) {
        if (t.n == n && t.g == g) {
            r.lower = t.lower;
            r.upper = t.upper;
            r.kind = t.lower == t.upper ? CellKind::value : CellKind::interval;
            r.lower_source = t.lower_source;
            r.upper_source = t.upper_source;
            r.note = t.note;
            return r;
        }
    }
    // Outside the curated table: formula endpoints only, flagged partial.
    r.kind = CellKind::partial;
    r.lower = kainen_lower_bound(n, g);
    r.lower_source = "Kainen lower bound";
    if (g == 1 && n >= 10) {
        const auto tb = toroidal_bounds(n);
        if (tb.lower > r.lower) {
            r.lower = tb.lower;
            r.lower_source = "toroidal formula ceil(23 C(n,4)/210)";
        }
    }
    // Any planar drawing works on every surface, so Z(n) caps all genera.
    r.upper = guy_Z(n);
    r.upper_source = "planar drawing with Z(n) crossings carried to genus g";
    r.note = "outside the curated range; formula endpoints only";
    return r;
}

std::string render_table() {
    std::ostringstream out;
    out << "g/n";
    for (int n = 8; n <= 11; ++n) out << '\t' << n;
    out << '\n';
    for (int g = 0; g <= 5; ++g) {
        out << g;
        for (int n = 8; n <= 11; ++n) out << '\t' << known_range(n, g).cell();
        out << '\n';
    }
    return out.str();
}

std::string ranges_to_json() {
    nlohmann::json rows = nlohmann::json::array();
    for (int g = 0; g <= 5; ++g) {
        for (int n = 8; n <= 11; ++n) {
            const auto r = known_range(n, g);
            nlohmann::json j;
            j["n"] = r.n;
            j["g"] = r.g;
            j["cell"] = r.cell();
            if (r.kind != CellKind::dash) {
                j["lower"] = r.lower;
                j["upper"] = r.upper;
                j["lower_source"] = r.lower_source;
                j["upper_source"] = r.upper_source;
            }
            if (!r.note.empty()) j["note"] = r.note;
            rows.push_back(j);
        }
    }
    return rows.dump(2) + "\n";
}

}  // namespace rotsys::bounds
