#pragma once

#include "cgsig/int_matrix.hpp"

namespace cgsig {

// Signature of a symmetric integer matrix, computed by exact rational
// congruence diagonalization. Throws NotSymmetricError.
int symmetric_signature(const IntMatrix& a);

// Signature of the Hermitian form (1 - w)V + (1 - conj(w))V^T at the root of
// unity w = exp(2*pi*i*k/q), for a square integer matrix V and 1 <= k < q
// (k != 0 mod q). Exact: the form is realified into the field Q(w + conj(w))
// and eigenvalue sign counts are read off the characteristic polynomial by
// Descartes' rule (all roots real), with coefficient signs certified through
// isolated algebraic intervals.
int hermitian_signature_at_root(const IntMatrix& v, unsigned q, unsigned k);

} // namespace cgsig
