#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qschubert/error.hpp"

namespace qs {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

inline Int add_checked(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail("Overflow", "integer addition");
    return r;
}
inline Int sub_checked(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail("Overflow", "integer subtraction");
    return r;
}
inline Int mul_checked(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail("Overflow", "integer multiplication");
    return r;
}

IntVec vadd(const IntVec& a, const IntVec& b);
IntVec vsub(const IntVec& a, const IntVec& b);
IntVec vscale(Int c, const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);
IntVec matvec(const IntMat& m, const IntVec& v);
IntMat matmul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& a);
IntMat identity_matrix(std::size_t n);
IntVec unit_vector(std::size_t n, std::size_t i);  // 0-based position
bool is_zero(const IntVec& v);

std::string to_string(const IntVec& v);

}  // namespace qs
