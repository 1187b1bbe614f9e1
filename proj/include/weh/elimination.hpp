#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "weh/poly.hpp"
#include "weh/ratfunc.hpp"
#include "weh/resultant.hpp"

namespace weh {

// Audit trail for an elimination pipeline; replaying the recorded steps
// reproduces the final polynomial bit-exactly (hashes pin every output).
struct TraceStep {
    std::string op;
    std::string variable;
    std::vector<int64_t> degrees_in;
    int64_t degree_out = 0;
    size_t terms_out = 0;
    std::vector<uint64_t> factors_removed;
    uint64_t output_hash = 0;
    double wall_ms = 0;
};

struct EliminationTrace {
    std::vector<TraceStep> steps;
    void add(TraceStep s) { steps.push_back(std::move(s)); }
};

// Sum of p over all permutations of the listed variables.
Poly symmetrize(const Poly& p, const std::vector<std::string>& vars);

bool is_symmetric(const Poly& p, const std::vector<std::string>& vars,
                  std::pair<std::string, std::string>* witness = nullptr);

// Elementary symmetric polynomial sigma_k of the listed variables.
Poly elementary_symmetric(const VarTablePtr& tab, const std::vector<std::string>& vars, int k);

// Rewrites a polynomial symmetric in `vars` as a polynomial in the target
// variables (which must name the elementary symmetric polynomials e_1..e_k,
// present in the same table). Back-substitution reproduces the input; a
// non-symmetric input raises domain_error naming a witnessing transposition.
Poly elementary_rewrite(const Poly& p, const std::vector<std::string>& vars,
                        const std::vector<std::string>& targets);

struct ClearedSubstitution {
    Poly result;   // clearing * p|_{var := value}, a genuine polynomial
    Poly clearing; // the clearing factor that was used
};

// Substitutes a rational relation var := value into p and multiplies through
// by `clearing`, which every denominator power must divide exactly.
ClearedSubstitution clear_substitute(const Poly& p, const std::string& var, const RatFunc& value,
                                     const Poly& clearing);

// Determinant of the 3x3 system whose rows are (A_i, B_i, C_i).
Poly linear_system_determinant(const std::array<std::array<Poly, 3>, 3>& rows);

struct ScanReport {
    std::string mode; // "positivity-after-offset" | "integer-scan"
    bool pass = false;
    bool all_coefficients_one_sign = false;
    bool constant_term_nonzero = false;
    std::vector<std::vector<long>> zeros; // mode B: parameter tuples with value 0
    std::string detail;
};

// Mode A: substitute param := param + offset and require every coefficient
// to share one sign with a nonzero constant term (so the polynomial cannot
// vanish for nonnegative parameter values).
ScanReport scan_positivity_after_offset(const Poly& coeff,
                                        const std::vector<std::pair<std::string, long>>& offsets);

// Mode B: exact evaluation on the integer grid [lo,hi]^params; passes when
// the zero set matches `expected_zeros` (empty by default).
ScanReport scan_integer_grid(const Poly& coeff, const std::vector<std::string>& params, long lo,
                             long hi, const std::vector<std::vector<long>>& expected_zeros = {});

} // namespace weh
