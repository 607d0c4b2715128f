#include "hexid/density.hpp"

#include <map>
#include <stdexcept>

namespace hexid {

Rational density_exact(const CodeParams& p) {
    const Window domain{0, p.px - 1, 0, p.py - 1};
    const auto count = static_cast<long long>(codewords_in_window(domain, p).size());
    return {Rational::Int(count), Rational::Int(p.px) * p.py};
}

std::pair<Rational, Rational> density_components(const CodeParams& p) {
    const int r = p.r;
    if (parity_even(r))
        return {Rational{5, 6 * (r + 1)}, Rational{1, 2 * r * (r + 1)}};
    return {Rational{5 * r - 1, (6 * r - 2) * (r + 1)}, Rational{1, 2 * (r + 1) * (r + 1)}};
}

Rational density_theorem(int r) {
    if (r < 1) throw std::invalid_argument("density_theorem: radius must be >= 1");
    if (parity_even(r)) return {5 * r + 3, 6 * r * (r + 1)};
    return {5 * r * r + 10 * r - 3, (6 * r - 2) * (r + 1) * (r + 1)};
}

Rational density_empirical(const CodeParams& p, int m) {
    if (m < 0) throw std::invalid_argument("density_empirical: m must be >= 0");
    const Window q{-m, m, -m, m};
    const auto count = static_cast<long long>(codewords_in_window(q, p).size());
    return {Rational::Int(count), Rational::Int(2 * m + 1) * (2 * m + 1)};
}

namespace {

// Closed form quoted in the summary tables for odd r; kept separate from
// density_theorem so the audit can compare both.
Rational odd_table_form(int r) {
    return {5 * r * r + 7 * r - 3, (6 * r - 2) * (r + 1) * (r + 1)};
}

std::string frac(const Rational& x) { return x.to_fraction_string(); }

}  // namespace

DensityAudit audit(int r) {
    if (r < 2) throw std::invalid_argument("audit: radius must be >= 2");
    const CodeParams p = make_params(r);
    DensityAudit a;
    a.r = r;
    a.exact = density_exact(p);
    const auto [cp, cdp] = density_components(p);
    a.component_sum = cp + cdp;
    a.theorem_value = density_theorem(r);
    a.agrees_theorem = a.exact == a.theorem_value;

    std::string notes;
    if (a.exact == a.component_sum) {
        if (!a.agrees_theorem)
            notes = "direct count " + frac(a.exact) + " equals component sum but not the stated form " +
                    frac(a.theorem_value);
    } else {
        notes = "direct count " + frac(a.exact) + " DIFFERS from component sum " + frac(a.component_sum);
    }
    if (!parity_even(r)) {
        const Rational table_form = odd_table_form(r);
        notes += notes.empty() ? "" : "; ";
        notes += "odd-r forms: stated " + frac(a.theorem_value) + ", tabulated " + frac(table_form) +
                 ", component sum " + frac(a.component_sum);
        if (r == 15 || r == 19) {
            const Rational table_entry = r == 15 ? Rational{1227, 22528} : Rational{387, 8960};
            notes += "; published table entry " + frac(table_entry) +
                     (a.exact == table_entry ? " matches" : " does not match") + " the direct count";
        }
    }
    a.notes = notes;
    return a;
}

namespace {

struct LiteratureRow {
    const char* lower;       // best published lower bound
    const char* prev_upper;  // previous best upper bound
};

// Static reference values from earlier published constructions; emitted
// only behind the --with-literature flag.
const std::map<int, LiteratureRow>& literature() {
    static const std::map<int, LiteratureRow> table = {
        {2, {"2/11", "4/19"}},   {3, {"2/17", "1/6"}},    {15, {"2/77", "1/18"}},
        {16, {"2/83", "1/18"}},  {17, {"2/87", "1/22"}},  {18, {"2/93", "1/22"}},
        {19, {"2/97", "1/22"}},  {20, {"2/103", "1/22"}}, {21, {"2/107", "1/26"}},
    };
    return table;
}

}  // namespace

std::string density_table_row(int r, bool with_literature) {
    if (r < 1) throw std::invalid_argument("density_table_row: radius must be >= 1");
    Rational exact;
    bool agrees = false;
    std::string note;
    if (r == 1) {
        exact = density_exact(make_params(1));
        agrees = exact == density_theorem(1);
        note = "below audited range";
    } else {
        const DensityAudit a = audit(r);
        exact = a.exact;
        agrees = a.agrees_theorem;
        note = a.notes;
    }
    std::string row = std::to_string(r) + "\t" + exact.to_fraction_string() + "\t" +
                      exact.to_decimal_string(4) + "\t" + (agrees ? "yes" : "no") + "\t" + note;
    if (with_literature) {
        const auto& lit = literature();
        const auto it = lit.find(r);
        row += "\t";
        row += it != lit.end() ? it->second.lower : "";
        row += "\t";
        row += it != lit.end() ? it->second.prev_upper : "";
    }
    return row;
}

std::string density_table(int r_min, int r_max, bool with_literature) {
    if (r_min < 1 || r_min > r_max)
        throw std::invalid_argument("density_table: need 1 <= r_min <= r_max");
    std::string out;
    for (int r = r_min; r <= r_max; ++r) {
        out += density_table_row(r, with_literature);
        out += '\n';
    }
    return out;
}

}  // namespace hexid
