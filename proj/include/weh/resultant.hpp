#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weh/poly.hpp"

namespace weh {

// Sylvester matrix of p and q with respect to var ((m+n) x (m+n)).
std::vector<std::vector<Poly>> sylvester_matrix(const Poly& p, const Poly& q,
                                                const std::string& var);

// Fraction-free determinant (Bareiss, one-step) with row pivoting.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m, const VarTablePtr& tab);

// Resultant as the Sylvester determinant.
Poly resultant_bareiss(const Poly& p, const Poly& q, const std::string& var);

// Resultant via the subresultant polynomial remainder sequence; agrees with
// the Sylvester determinant exactly (sign included).
Poly resultant_prs(const Poly& p, const Poly& q, const std::string& var);

enum class BackendCheck {
    full,        // recompute with Bareiss and compare
    specialized, // compare both backends at random full specializations
    none,
};

struct ResultantOptions {
    BackendCheck check = BackendCheck::specialized;
    int specialized_samples = 3;
    // Sylvester dimension up to which the full Bareiss cross-check runs even
    // in `specialized` mode.
    size_t full_check_dim = 12;
    uint64_t seed = 0x5eed;
};

// PRS resultant with the backend agreement assertion. Throws usage_error if
// either argument has degree < 1 in var; throws domain_error if the two
// backends disagree.
Poly resultant(const Poly& p, const Poly& q, const std::string& var,
               const ResultantOptions& opts = {});

// Resultant of weighted-homogeneous inputs, computed with the grading
// variable set to 1 and restored afterwards from the degree formula
//   wdeg(Res) = deg_var(q) wdeg(p) + deg_var(p) wdeg(q)
//             - deg_var(p) deg_var(q) w(var).
// Exactness is re-checked against the Sylvester determinant at random full
// specializations of the original inputs. Throws usage_error when an input
// is not homogeneous for the weights.
Poly resultant_graded(const Poly& p, const Poly& q, const std::string& var,
                      const std::vector<int>& weights, const std::string& grading_var,
                      const ResultantOptions& opts = {});

} // namespace weh
