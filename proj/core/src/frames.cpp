#include "qschubert/frames.hpp"

#include <algorithm>

namespace qs {

namespace {

IndexSet shift(const IndexSet& s, int by) {
    IndexSet out;
    for (int x : s) out.push_back(x + by);
    return out;
}

IndexSet restrict_to(const IndexSet& s, int lo, int hi) {
    IndexSet out;
    for (int x : s)
        if (x >= lo && x <= hi) out.push_back(x);
    return out;
}

void check_sizes(const Word& word, const PiElement& pi) {
    if (pi.N() != static_cast<int>(word.size())) fail("SizeMismatch", "pi and word have different lengths");
}

struct Chain {
    std::vector<WeylElement> useq;
    IndexSet D;
};

Chain build_chain(const CartanData& c, const Word& word, const WeylElement& u, const PiElement& pi) {
    Chain ch;
    ch.useq = u_sequence(c, word, u, pi);
    int N = pi.N();
    for (int k = 1; k <= N; ++k) {
        int lo = pi.c_of(k), hi = pi.d_of(k);
        Word iw = interval_word(word, lo, hi);
        const WeylElement& uk = ch.useq[k];
        if (pi.extends_right(k)) {
            if (contains(rp(c, iw, uk), hi - lo + 1)) ch.D.push_back(hi);
        } else if (contains(lp(c, iw, uk), 1)) {
            ch.D.push_back(lo);
        }
    }
    std::sort(ch.D.begin(), ch.D.end());
    for (int k = 1; k <= N; ++k)
        if (ch.useq[k] != product_over(c, word, ch.D, pi.c_of(k), pi.d_of(k)))
            fail("InternalError", "u(k) is not the D(pi) product on its interval");
    return ch;
}

FrameStep make_step(const CartanData& c, const Word& word, const PiElement& pi, const Chain& ch, int k) {
    FrameStep st;
    st.k = k;
    st.position = pi.at(k);
    st.c = pi.c_of(k);
    st.d = pi.d_of(k);
    st.right = pi.extends_right(k);
    st.u_k = ch.useq[k];
    st.inD = contains(ch.D, st.position);
    st.mu = st.right ? c.fundamental(word[st.d - 1])
                     : apply_to_weight(inverse(c, st.u_k), c.fundamental(word[st.c - 1]));
    Word iw = interval_word(word, st.c, st.d);
    IndexSet local = shift(restrict_to(ch.D, st.c, st.d), 1 - st.c);
    WeylElement before = element_of_reduced_word(c, Word(word.begin(), word.begin() + (st.c - 1)));
    WeylElement whole = element_of_reduced_word(c, iw);
    IntVec diff = orbit_difference(c, iw, local, static_cast<int>(iw.size()), st.mu);
    st.lambdaMinus = apply_to_root(before, diff);
    IntVec top = apply_to_weight(before, apply_to_weight(whole, st.mu));
    st.lambdaPlus = vsub(vscale(2, top), c.root_to_weight(st.lambdaMinus));
    return st;
}

IntMat permuted(const IntMat& m, const std::vector<std::size_t>& order) {
    IntMat out(order.size(), IntVec(order.size(), 0));
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = 0; b < order.size(); ++b) out[a][b] = m[order[a]][order[b]];
    return out;
}

int count_diff(const IntMat& a, const IntMat& b) {
    if (a.size() != b.size()) return static_cast<int>(std::max(a.size(), b.size()) * std::max(a.size(), b.size()));
    int n = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j]) ++n;
    return n;
}

}  // namespace

bool xi_contains(const std::vector<int>& perm) {
    int N = static_cast<int>(perm.size());
    std::vector<bool> seen(N + 1, false);
    for (int x : perm) {
        if (x < 1 || x > N || seen[x]) fail("NotAPermutation", "not a permutation of [1,N]");
        seen[x] = true;
    }
    int lo = N + 1, hi = 0;
    for (int k = 0; k < N; ++k) {
        lo = std::min(lo, perm[k]);
        hi = std::max(hi, perm[k]);
        if (hi - lo != k) return false;
    }
    return true;
}

PiElement make_pi(const std::vector<int>& perm) {
    if (!xi_contains(perm)) fail("NotInXi", "some prefix of pi is not an interval");
    PiElement p;
    p.perm = perm;
    int lo = perm.empty() ? 0 : perm[0], hi = lo;
    for (int x : perm) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        p.c.push_back(lo);
        p.d.push_back(hi);
    }
    return p;
}

PiElement pi_identity(int N) {
    std::vector<int> p(N);
    for (int k = 0; k < N; ++k) p[k] = k + 1;
    return make_pi(p);
}

PiElement pi_reversal(int N) {
    std::vector<int> p(N);
    for (int k = 0; k < N; ++k) p[k] = N - k;
    return make_pi(p);
}

void xi_for_each(int N, const std::function<void(const PiElement&)>& f) {
    if (N < 1) return;
    std::vector<int> perm;
    // extend the current interval [lo,hi] on the left or on the right; the
    // smaller next value comes first, which keeps lexicographic order
    std::function<void(int, int)> rec = [&](int lo, int hi) {
        if (static_cast<int>(perm.size()) == N) {
            f(make_pi(perm));
            return;
        }
        if (lo > 1) {
            perm.push_back(lo - 1);
            rec(lo - 1, hi);
            perm.pop_back();
        }
        if (hi < N) {
            perm.push_back(hi + 1);
            rec(lo, hi + 1);
            perm.pop_back();
        }
    };
    for (int a = 1; a <= N; ++a) {
        perm.assign(1, a);
        rec(a, a);
    }
}

std::vector<PiElement> xi_enumerate(int N) {
    std::vector<PiElement> out;
    xi_for_each(N, [&](const PiElement& p) { out.push_back(p); });
    return out;
}

Word interval_word(const Word& word, int c, int d) {
    if (c < 1 || d > static_cast<int>(word.size()) || c > d + 1) fail("IndexOutOfRange", "bad interval");
    return Word(word.begin() + (c - 1), word.begin() + d);
}

std::vector<WeylElement> u_sequence(const CartanData& c, const Word& word, const WeylElement& u, const PiElement& pi) {
    check_sizes(word, pi);
    int N = pi.N();
    rp(c, word, u);  // NotBelow / NotReduced
    std::vector<WeylElement> seq(N + 1, u);
    for (int k = N - 1; k >= 0; --k) {
        const WeylElement& cur = seq[k + 1];
        int lo = pi.c_of(k + 1), hi = pi.d_of(k + 1);
        Word iw = interval_word(word, lo, hi);
        WeylElement by_min, by_set;
        if (pi.extends_right(k + 1)) {
            WeylElement x = multiply_by_simple(c, cur, word[hi - 1]);
            by_min = x.length() < cur.length() ? x : cur;
            by_set = contains(rp(c, iw, cur), hi - lo + 1) ? x : cur;
        } else {
            WeylElement x = left_multiply_by_simple(c, word[lo - 1], cur);
            by_min = x.length() < cur.length() ? x : cur;
            by_set = contains(lp(c, iw, cur), 1) ? x : cur;
        }
        if (by_min != by_set) fail("InternalError", "the two recursions for u(k) disagree");
        seq[k] = by_min;
    }
    if (!seq[0].is_identity()) fail("InternalError", "u(0) is not the identity");
    return seq;
}

IndexSet d_pi(const CartanData& c, const Word& word, const WeylElement& u, const PiElement& pi) {
    return build_chain(c, word, u, pi).D;
}

std::pair<IntVec, IntVec> lambda_pm(const CartanData& c, const Word& word, const WeylElement& u, const PiElement& pi,
                                    int k) {
    if (k < 1 || k > pi.N()) fail("IndexOutOfRange", "k out of range");
    Chain ch = build_chain(c, word, u, pi);
    FrameStep st = make_step(c, word, pi, ch, k);
    return {st.lambdaPlus, st.lambdaMinus};
}

ToricFrame frame_bicharacter(const CartanData& c, const Word& word, const WeylElement& u, const PiElement& pi) {
    Chain ch = build_chain(c, word, u, pi);
    ToricFrame f;
    f.word = word;
    f.u = u;
    f.pi = pi;
    f.D = ch.D;
    f.useq = ch.useq;
    for (int k = 1; k <= pi.N(); ++k) {
        f.steps.push_back(make_step(c, word, pi, ch, k));
        if (!f.steps.back().inD) f.generators.push_back(k);
    }
    std::size_t n = f.generators.size();
    f.bichar.assign(n, IntVec(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < a; ++b) {
            const FrameStep& ka = f.steps[f.generators[a] - 1];
            const FrameStep& kb = f.steps[f.generators[b] - 1];
            Int v = -c.form_weight_root(ka.lambdaPlus, kb.lambdaMinus);
            f.bichar[a][b] = v;
            f.bichar[b][a] = -v;
        }
    std::vector<std::size_t> order(n);
    for (std::size_t a = 0; a < n; ++a) order[a] = a;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return f.steps[f.generators[x] - 1].position < f.steps[f.generators[y] - 1].position;
    });
    for (std::size_t a : order) f.genPositions.push_back(f.steps[f.generators[a] - 1].position);
    f.bicharByPosition = permuted(f.bichar, order);
    return f;
}

int identity_frame_mismatches(const CartanData& c, const Word& word, const WeylElement& u) {
    int N = static_cast<int>(word.size());
    ToricFrame f = frame_bicharacter(c, word, u, pi_identity(N));
    if (f.genPositions != complement(rp(c, word, u), N)) return -1;
    return count_diff(f.bicharByPosition, lambda_delta_direct(c, word, u));
}

int reversal_frame_mismatches(const CartanData& c, const Word& word, const WeylElement& u, int* literal) {
    int N = static_cast<int>(word.size());
    ToricFrame f = frame_bicharacter(c, word, u, pi_reversal(N));
    if (f.genPositions != complement(lp(c, word, u), N)) return -1;
    IntMat m = lambda_delta_reverse(c, word, u);
    if (literal) *literal = count_diff(f.bicharByPosition, transpose(m));
    return count_diff(f.bicharByPosition, m);
}

bool frame_transport_holds(const CartanData& c, const Word& word, const WeylElement& u, bool reversal) {
    int N = static_cast<int>(word.size());
    ExponentMatrix m = reversal ? b_matrix(c, word, u) : a_matrix(c, word, u);
    IntMat cols = principal_submatrix(m);  // [row][col], column k is the exponent vector of the k-th element
    IntMat skew = restrict_matrix(lambda_Y(c, word), m.rows);
    IntMat expect = transport_commutation(skew, cols);
    ToricFrame f = frame_bicharacter(c, word, u, reversal ? pi_reversal(N) : pi_identity(N));
    return f.genPositions == m.rows && f.bicharByPosition == expect;
}

bool contraction_labels_hold(const CartanData& c, const ToricFrame& f) {
    int N = f.pi.N();
    IndexSet RP = rp(c, f.word, f.u), LP = lp(c, f.word, f.u);
    for (const FrameStep& st : f.steps) {
        Word iw = interval_word(f.word, st.c, st.d);
        if (!bruhat_leq(c, st.u_k, element_of_reduced_word(c, iw))) return false;
        if (st.u_k != product_over(c, f.word, f.D, st.c, st.d)) return false;
        if (st.c == 1 && st.u_k != product_over(c, f.word, RP, 1, st.d)) return false;
        if (st.d == N && st.u_k != product_over(c, f.word, LP, st.c, N)) return false;
    }
    return true;
}

}  // namespace qs
