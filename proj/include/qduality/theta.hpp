#pragma once

#include "qduality/mp.hpp"

namespace qduality {

// Smallest truncation index N >= 1 with |p|^N * max(|z|, 1/|z|) below
// 2^-(working_bits + guard_bits). Finite for every |p| < 1.
long theta_truncation_index(const MPComplex& z, const MPComplex& nome,
                            const PrecisionPolicy& policy);

// Modified theta function
//   theta(z; p) = prod_{n>=0} (1 - p^n z) * prod_{m>0} (1 - p^m / z),
// truncated per theta_truncation_index. Requires |p| < 1 and z != 0.
MPComplex theta_eval(const MPComplex& z, const MPComplex& nome, const PrecisionPolicy& policy);

}  // namespace qduality
