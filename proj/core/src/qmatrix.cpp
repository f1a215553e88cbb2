#include "qschubert/qmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace qs {

namespace {

// epsilon coordinates of a type A root given in simple-root coordinates
IntVec to_epsilon(const IntVec& root) {
    std::size_t r = root.size();
    IntVec e(r + 1, 0);
    for (std::size_t a = 0; a <= r; ++a) {
        Int cur = a < r ? root[a] : 0;
        Int prev = a > 0 ? root[a - 1] : 0;
        e[a] = cur - prev;
    }
    return e;
}

IndexSet between(const IndexSet& s, int lo, int hi) {
    IndexSet out;
    for (int x : s)
        if (x >= lo && x <= hi) out.push_back(x);
    return out;
}

WeylElement prefix_element(const QMatrixModel& model, int len) {
    return element_of_reduced_word(model.cartan, Word(model.word.begin(), model.word.begin() + len));
}

ScalarQ q_minus_qinv() { return ScalarQ::q_pow(1) - ScalarQ::q_pow(-1); }

// the leading-term exponent: t_p t_x = q^{-(beta_p, beta_x)} t_x t_p + lower
Int lambda_exponent(const QMatrixModel& model, int p, int x) {
    return -model.cartan.form_root_root(model.roots[p - 1], model.roots[x - 1]);
}

// Quantum-plane relation of two entries a = (i,j), b = (k,l), i < k, j < l:
// t_a t_b = t_b t_a + (q - q^{-1}) t_{il} t_{kj}. kappa is the coefficient of
// the product when the pivot is written on the left.
ScalarQ straightening_kappa(Order order) {
    // direct: pivot is the later entry b, t_b t_a = t_a t_b - (q - q^{-1}) ...
    // reverse: pivot is the earlier entry a, t_a t_b = t_b t_a + (q - q^{-1}) ...
    return order == Order::Direct ? -q_minus_qinv() : q_minus_qinv();
}

TorusElement image_at(const TorusEmbedding& e, int row, int col) {
    return e.images[e.model->position(row, col) - 1];
}

}  // namespace

QMatrixModel build_model(int m, int n) {
    if (m < 1 || n < 1) fail("BadShape", "m and n must be positive");
    QMatrixModel model;
    model.m = m;
    model.n = n;
    model.cartan = CartanData::builtin('A', m + n - 1);
    for (int r = 1; r <= m; ++r)
        for (int l = m + 1 - r; l <= m - r + n; ++l) model.word.push_back(l);
    model.w = element_of_reduced_word(model.cartan, model.word);
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= n; ++c) model.posMap.push_back({r, c});

    // validate the dictionary: beta_k = eps_a - eps_b sits at (m+1-a, b-m)
    model.roots = roots_of_word(model.cartan, model.word);
    const auto& roots = model.roots;
    int N = model.N();
    for (int k = 0; k < N; ++k) {
        IntVec e = to_epsilon(roots[k]);
        int a = 0, b = 0;
        for (int t = 0; t < m + n; ++t) {
            if (e[t] == 1) a = t + 1;
            if (e[t] == -1) b = t + 1;
        }
        if (a < 1 || a > m || b <= m || model.posMap[k] != std::make_pair(m + 1 - a, b - m))
            fail("InternalError", "root of the word does not match its matrix position");
    }
    // relation table: leading terms q-commute exactly along rows and columns
    for (int x = 0; x < N; ++x)
        for (int y = x + 1; y < N; ++y) {
            auto [i, j] = model.posMap[x];
            auto [k, l] = model.posMap[y];
            Int expect = (i == k || j == l) ? 1 : 0;
            if (model.cartan.form_root_root(roots[x], roots[y]) != expect)
                fail("InternalError", "relation table does not match quantum matrices");
        }
    IntMat skew = lambda_Y(model.cartan, model.word);
    for (auto& row : skew)
        for (auto& v : row) v = mul_checked(2, v);
    model.torus = make_torus(skew);
    return model;
}

std::vector<int> ambient_permutation(const QMatrixModel& model, const WeylElement& x) {
    std::vector<int> p(model.m + model.n);
    std::iota(p.begin(), p.end(), 1);
    for (int i : x.word) std::swap(p[i - 1], p[i]);
    return p;
}

ScalarQ restoration_coefficient(const QMatrixModel& model, Order order, int pivot, int other) {
    ScalarQ lpp = ScalarQ::q_pow(lambda_exponent(model, pivot, pivot));
    ScalarQ lpx = ScalarQ::q_pow(lambda_exponent(model, pivot, other));
    ScalarQ kappa = straightening_kappa(order);
    if (order == Order::Direct) return (ScalarQ(1) - lpp).inverse() * lpx.inverse() * kappa;
    return (ScalarQ(1) - lpp.inverse()).inverse() * lpx * kappa;
}

TorusEmbedding restoration(const QMatrixModel& model, const IndexSet& D, Order order, int upto) {
    int N = model.N();
    if (upto < 0) upto = N;
    if (upto > N) fail("IndexOutOfRange", "upto exceeds N");
    for (int p : D)
        if (p < 1 || p > N) fail("IndexOutOfRange", "diagram position out of range");
    TorusEmbedding e;
    e.model = &model;
    e.D = D;
    e.order = order;
    for (int k = 1; k <= upto; ++k)
        e.images.push_back(contains(D, k) ? TorusElement::zero(model.torus)
                                          : TorusElement::generator(model.torus, k - 1));
    std::vector<int> pivots(upto);
    std::iota(pivots.begin(), pivots.end(), 1);
    if (order == Order::Reverse) std::reverse(pivots.begin(), pivots.end());
    for (int p : pivots) {
        if (contains(D, p)) continue;
        const TorusElement& piv = e.images[p - 1];
        if (piv != TorusElement::generator(model.torus, p - 1))
            fail("PivotNotMonomial", "pivot " + std::to_string(p) + " is not its own generator");
        TorusElement pinv = invert_monomial(piv);
        auto [r, c] = model.posMap[p - 1];
        std::vector<TorusElement> updated = e.images;
        for (int x = 1; x <= upto; ++x) {
            auto [i, j] = model.posMap[x - 1];
            bool nw = i < r && j < c;
            bool se = i > r && j > c;
            if (order == Order::Direct ? !nw : !se) continue;
            ScalarQ coef = restoration_coefficient(model, order, p, x);
            e.coefficient = coef;
            TorusElement term = order == Order::Direct ? image_at(e, i, c) * image_at(e, r, j) * pinv
                                                       : image_at(e, r, j) * image_at(e, i, c) * pinv;
            updated[x - 1] = e.images[x - 1] - term.scaled(coef);
        }
        e.images = std::move(updated);
    }
    return e;
}

int relation_failures(const TorusEmbedding& e, int upto) {
    const QMatrixModel& model = *e.model;
    int N = static_cast<int>(e.images.size());
    if (upto < 0 || upto > N) upto = N;
    ScalarQ q = ScalarQ::q_pow(1);
    int bad = 0;
    for (int x = 1; x <= upto; ++x)
        for (int y = x + 1; y <= upto; ++y) {
            auto [i, j] = model.posMap[x - 1];
            auto [k, l] = model.posMap[y - 1];
            const TorusElement& tx = e.images[x - 1];
            const TorusElement& ty = e.images[y - 1];
            TorusElement lhs = tx * ty;
            TorusElement rhs(model.torus);
            if (i == k || j == l) {
                rhs = (ty * tx).scaled(q);
            } else if (j > l) {
                rhs = ty * tx;
            } else {
                // i < k, j < l; both cross entries precede y in row-major order
                rhs = ty * tx + (image_at(e, i, l) * image_at(e, k, j)).scaled(q_minus_qinv());
            }
            if (lhs != rhs) ++bad;
        }
    return bad;
}

TorusElement quantum_minor_image(const TorusEmbedding& e, const std::vector<int>& rows, const std::vector<int>& cols) {
    const QMatrixModel& model = *e.model;
    if (rows.size() != cols.size()) fail("SizeMismatch", "rows and cols differ in size");
    auto check = [](std::vector<int> v, int hi, const char* what) {
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end()) fail("RepeatedIndex", std::string("repeated ") + what);
        for (int x : v)
            if (x < 1 || x > hi) fail("OutOfRange", std::string(what) + " index out of range");
    };
    check(rows, model.m, "row");
    check(cols, model.n, "column");
    std::size_t p = rows.size();
    TorusElement total(model.torus);
    if (p == 0) return TorusElement::one(model.torus);
    std::vector<std::size_t> sigma(p);
    std::iota(sigma.begin(), sigma.end(), 0);
    ScalarQ mq = -ScalarQ::q_pow(1);
    do {
        Int inv = 0;
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = a + 1; b < p; ++b)
                if (sigma[a] > sigma[b]) ++inv;
        TorusElement term = TorusElement::one(model.torus);
        for (std::size_t a = 0; a < p; ++a) {
            if (static_cast<int>(e.images.size()) < model.position(rows[a], cols[sigma[a]]))
                fail("OutOfRange", "entry outside the truncated model");
            term = term * image_at(e, rows[a], cols[sigma[a]]);
        }
        total = total + term.scaled(mq.pow(inv));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

MinorSubsets minor_subsets(const QMatrixModel& model, const WeylElement& x, const WeylElement& y, int d) {
    int m = model.m, total = model.m + model.n;
    if (d < 1 || d >= total) fail("OutOfRange", "d must lie in [1, m+n-1]");
    std::vector<int> px = ambient_permutation(model, x), py = ambient_permutation(model, y);
    std::vector<int> Xt, Xb, Yt, Yb;
    for (int a = 0; a < d; ++a) {
        (px[a] <= m ? Xt : Xb).push_back(px[a]);
        (py[a] <= m ? Yt : Yb).push_back(py[a]);
    }
    for (auto* v : {&Xt, &Xb, &Yt, &Yb}) std::sort(v->begin(), v->end());
    MinorSubsets out;
    if (!std::includes(Yb.begin(), Yb.end(), Xb.begin(), Xb.end()) ||
        !std::includes(Xt.begin(), Xt.end(), Yt.begin(), Yt.end())) {
        out.zero = true;
        return out;
    }
    for (int a : Xt)
        if (!std::binary_search(Yt.begin(), Yt.end(), a)) out.rows.push_back(m + 1 - a);
    for (int b : Yb)
        if (!std::binary_search(Xb.begin(), Xb.end(), b)) out.cols.push_back(b - m);
    std::sort(out.rows.begin(), out.rows.end());
    std::sort(out.cols.begin(), out.cols.end());
    return out;
}

TorusElement label_minor_image(const TorusEmbedding& e, const WeylElement& x, const WeylElement& y, int d) {
    MinorSubsets s = minor_subsets(*e.model, x, y, d);
    if (s.zero) return TorusElement::zero(e.model->torus);
    ScalarQ factor = (ScalarQ::q_pow(-1) - ScalarQ::q_pow(1)).pow(static_cast<Int>(s.rows.size()));
    return quantum_minor_image(e, s.rows, s.cols).scaled(factor);
}

namespace {

MinorFormulaReport finish(int k, TorusElement lhs, TorusElement rhs) {
    if (lhs.is_zero() || !lhs.is_monomial())
        fail("DictionaryMismatch", "minor image at k = " + std::to_string(k) + " is not a nonzero monomial");
    MinorFormulaReport r{k, std::move(lhs), std::move(rhs), false};
    r.equal = r.lhs == r.rhs;
    return r;
}

void check_k(const QMatrixModel& model, int k) {
    if (k < 1 || k > model.N()) fail("IndexOutOfRange", "k out of range");
}

}  // namespace

std::vector<MinorFormulaReport> verify_minor_formula_all(const QMatrixModel& model, const WeylElement& u) {
    const CartanData& c = model.cartan;
    IndexSet RP = rp(c, model.word, u);
    TorusEmbedding emb = restoration(model, RP, Order::Reverse);
    ExponentMatrix a = a_matrix(c, model.word, u);
    std::vector<MinorFormulaReport> out;
    for (int k = 1; k <= model.N(); ++k) {
        int ik = model.word[k - 1];
        TorusElement lhs = label_minor_image(emb, product_over(c, model.word, RP, 1, k), prefix_element(model, k), ik);
        std::vector<std::pair<int, Int>> factors;
        ScalarQ scalar(1);
        for (int j = k; j >= 1; --j) {
            if (contains(RP, j)) continue;
            Int e = a.at(j, k);
            factors.push_back({j - 1, e});
            scalar *= scalar_coeff(c.d(model.word[j - 1]), e);
        }
        out.push_back(finish(k, lhs, ordered_monomial(model.torus, factors, scalar)));
    }
    return out;
}

std::vector<MinorFormulaReport> verify_minor_formula_reverse_all(const QMatrixModel& model, const WeylElement& u) {
    const CartanData& c = model.cartan;
    int N = model.N();
    IndexSet LP = lp(c, model.word, u);
    TorusEmbedding emb = restoration(model, LP, Order::Direct);
    ExponentMatrix b = b_matrix(c, model.word, u);
    std::vector<MinorFormulaReport> out;
    for (int k = 1; k <= N; ++k) {
        int ik = model.word[k - 1];
        WeylElement y = multiply(c, model.w, inverse(c, product_over(c, model.word, LP, k, N)));
        TorusElement lhs = label_minor_image(emb, prefix_element(model, k - 1), y, ik);
        std::vector<std::pair<int, Int>> factors;
        ScalarQ scalar(1);
        for (int l = N; l >= k; --l) {
            if (contains(LP, l)) continue;
            Int e = b.at(l, k);
            factors.push_back({l - 1, e});
            scalar *= scalar_coeff(c.d(model.word[l - 1]), e);
        }
        out.push_back(finish(k, lhs, ordered_monomial(model.torus, factors, scalar)));
    }
    return out;
}

MinorFormulaReport verify_minor_formula(const QMatrixModel& model, const WeylElement& u, int k) {
    check_k(model, k);
    return verify_minor_formula_all(model, u)[k - 1];
}

MinorFormulaReport verify_minor_formula_reverse(const QMatrixModel& model, const WeylElement& u, int k) {
    check_k(model, k);
    return verify_minor_formula_reverse_all(model, u)[k - 1];
}

VanishingReport verify_vanishing(const QMatrixModel& model, const WeylElement& u) {
    const CartanData& c = model.cartan;
    int N = model.N();
    IndexSet RP = rp(c, model.word, u);
    TorusEmbedding emb = restoration(model, RP, Order::Reverse);
    int iN = model.word[N - 1];
    VanishingReport r{contains(RP, N), label_minor_image(emb, product_over(c, model.word, RP, 1, N - 1), model.w, iN),
                      TorusElement::zero(model.torus), false};
    if (r.lastInRP) {
        r.ok = r.image.is_zero();
    } else {
        r.comparison = label_minor_image(emb, u, model.w, iN);
        r.ok = !r.image.is_zero() && r.image == r.comparison;
    }
    return r;
}

ContractionReport contraction_report(const QMatrixModel& model, const WeylElement& u, int k) {
    check_k(model, k);
    const CartanData& c = model.cartan;
    const Word& word = model.word;
    int N = model.N();
    IndexSet RP = rp(c, word, u), LP = lp(c, word, u);
    ContractionReport r;
    r.k = k;

    Word head(word.begin(), word.begin() + k);
    WeylElement ubar = product_over(c, word, RP, 1, k);
    IndexSet rpHead = rp(c, head, ubar);
    r.rpPrefix = rpHead == between(RP, 1, k);

    Word tail(word.begin() + (k - 1), word.end());
    IndexSet lpTail = lp(c, tail, product_over(c, word, LP, k, N));
    IndexSet expect;
    for (int x : between(LP, k, N)) expect.push_back(x - k + 1);
    r.lpSuffix = lpTail == expect;

    TorusEmbedding full = restoration(model, RP, Order::Reverse);
    WeylElement wk = prefix_element(model, k);
    TorusElement img = label_minor_image(full, product_over(c, word, RP, 1, k - 1), wk, word[k - 1]);
    if (contains(RP, k))
        r.vanishing = img.is_zero();
    else
        r.vanishing = !img.is_zero() && img == label_minor_image(full, ubar, wk, word[k - 1]);

    TorusEmbedding part = restoration(model, rpHead, Order::Reverse, k);
    r.truncatedImages = true;
    for (int x = 0; x < k; ++x)
        if (part.images[x] != full.images[x]) r.truncatedImages = false;
    r.truncatedRelations = relation_failures(part, k) == 0;
    return r;
}

bool diagram_is_homomorphism(const QMatrixModel& model, const IndexSet& D, Order order) {
    return relation_failures(restoration(model, D, order)) == 0;
}

Int monomial_commutation_exponent(const TorusElement& a, const TorusElement& b) {
    if (!a.is_monomial() || !b.is_monomial()) fail("NotMonomial", "commutation exponent needs monomials");
    const CommutationMatrix& t = *a.torus();
    const IntVec& e = a.terms().begin()->first;
    const IntVec& f = b.terms().begin()->first;
    Int s = sub_checked(mono_mul_cocycle(t, e, f), mono_mul_cocycle(t, f, e));
    if (s % 2 != 0) fail("InternalError", "odd s-exponent between minors");
    return s / 2;
}

int sequence_commutation_failures(const QMatrixModel& model, const WeylElement& u) {
    const CartanData& c = model.cartan;
    const Word& word = model.word;
    int N = model.N();
    int bad = 0;

    IndexSet RP = rp(c, word, u);
    TorusEmbedding er = restoration(model, RP, Order::Reverse);
    std::map<int, TorusElement> delta;
    for (int k = 1; k <= N; ++k) {
        if (contains(RP, k)) continue;
        TorusElement x = label_minor_image(er, product_over(c, word, RP, 1, k), prefix_element(model, k), word[k - 1]);
        if (x.is_zero() || !x.is_monomial()) {
            ++bad;
            continue;
        }
        delta.emplace(k, x);
    }
    for (auto& [k, dk] : delta)
        for (auto& [j, dj] : delta)
            if (j < k && monomial_commutation_exponent(dk, dj) != quasi_comm_exponent_direct(c, word, u, j, k)) ++bad;

    IndexSet LP = lp(c, word, u);
    TorusEmbedding ed = restoration(model, LP, Order::Direct);
    std::map<int, TorusElement> tilde;
    for (int k = 1; k <= N; ++k) {
        if (contains(LP, k)) continue;
        WeylElement y = multiply(c, model.w, inverse(c, product_over(c, word, LP, k, N)));
        TorusElement x = label_minor_image(ed, prefix_element(model, k - 1), y, word[k - 1]);
        if (x.is_zero() || !x.is_monomial()) {
            ++bad;
            continue;
        }
        tilde.emplace(k, x);
    }
    for (auto& [k, dk] : tilde)
        for (auto& [l, dl] : tilde)
            if (k < l && monomial_commutation_exponent(dk, dl) != quasi_comm_exponent_reverse(c, word, u, k, l)) ++bad;
    return bad;
}

std::vector<WeylElement> elements_below(const QMatrixModel& model) {
    std::vector<WeylElement> out;
    for (auto& x : enumerate_elements(model.cartan, model.N()))
        if (bruhat_leq(model.cartan, x, model.w)) out.push_back(x);
    return out;
}

}  // namespace qs
