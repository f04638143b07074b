#pragma once

#include <optional>
#include <string>
#include <vector>

#include <hyperdiag/hyperseries.hpp>
#include <hyperdiag/linform.hpp>

namespace hyperdiag
{

enum class Status { algebraic, transcendental, inapplicable };

const char *to_string(Status s) noexcept;

struct Verdict {
    Status status = Status::inapplicable;
    std::string reason;
    // Residues c coprime to the common denominator that were examined.
    std::vector<unsigned long> residues;
    // Residue whose configuration does not interlace.
    std::optional<unsigned long> failing_residue;
    // Integer-parameter excess reported by the weight screen.
    unsigned weight = 0;
};

// max(0, #integer bottom - #integer top) after cancelling equal pairs. A
// positive value rules out algebraicity.
unsigned weight_screen(const PFQParams &params);

// Interlacing test on the unit circle for an nF(n-1) with rational
// parameters; the implicit bottom 1 is appended before testing.
Verdict interlacing_check(const PFQParams &params);

// Algebraic iff N == 1, or N == 2 with b_2 an integer.
Verdict classify_product(const LinearFormProduct &p);

struct Grade2Decomposition {
    // original = algebraic_params * (1 - t)^(-c), termwise.
    rational c;
    PFQParams algebraic_params;
    Verdict verdict;
};

inline constexpr unsigned default_grade2_bound = 6;

// Tries c = i/m, 2 <= m <= bound, gcd(i, m) = 1, in increasing m then i,
// replacing one explicit bottom 1 by c. Throws no_unit_bottom if the bottom
// list has no 1.
std::optional<Grade2Decomposition> grade2_search(const PFQParams &params,
                                                 unsigned denominator_bound = default_grade2_bound);

} // namespace hyperdiag
