#pragma once

#include <optional>
#include <vector>

namespace qb {

// Arithmetic mod n for small moduli (n odd here, possibly composite).
long mod_reduce(long a, long n);
long mod_inverse(long a, long n);  // requires gcd(a,n)=1

using ModVec = std::vector<long>;
using ModMat = std::vector<std::vector<long>>;

// One solution of A x = b over Z/n, if any (n need not be prime; elimination
// uses unimodular row combinations via extended gcd).
std::optional<ModVec> solve_mod(const ModMat& a, const ModVec& b, long n);

// matrix-vector and matrix-matrix products mod n
ModVec mat_vec_mod(const ModMat& a, const ModVec& x, long n);
ModMat mat_mul_mod(const ModMat& a, const ModMat& b, long n);
ModMat mat_transpose(const ModMat& a);
bool mat_invertible_mod(const ModMat& a, long n);

}  // namespace qb
