#pragma once

#include <doctest.h>

#include "qschubert/frames.hpp"
#include "qschubert/qmatrix.hpp"
#include "qschubert/twist.hpp"
#include "typeA_oracle.hpp"

namespace th {

using namespace qs;

inline WeylElement el(const CartanData& c, const Word& w) { return element_of_word(c, w); }

struct Pair {
    WeylElement w, u;
};

// all u <= w in a finite group, w of length <= maxlen
inline std::vector<Pair> pairs(const CartanData& c, int maxlen) {
    std::vector<Pair> out;
    auto elems = enumerate_elements(c, maxlen);
    for (const auto& w : elems)
        for (const auto& u : elems)
            if (bruhat_leq(c, u, w)) out.push_back({w, u});
    return out;
}

inline IntVec fw(const CartanData& c, int i) { return c.fundamental(i); }

}  // namespace th
