#include "confembed/root_datum.hpp"

#include "confembed/errors.hpp"

#include <algorithm>
#include <map>

namespace confembed {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Gauss-Jordan inverse over the rationals.
Mat invert(Mat a) {
    size_t n = a.size();
    Mat inv(n, Vec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw internal_error("invert: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Vec e(int dim, int i, Rational c = Rational(1)) {
    Vec v(static_cast<size_t>(dim), Rational(0));
    v[static_cast<size_t>(i)] = c;
    return v;
}

// Simple roots of the standard rational realizations, Bourbaki numbering.
std::pair<Mat, Rational> realization(LieType t) {
    int n = t.rank;
    Mat s;
    Rational scale(1);
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) {
                Vec v(static_cast<size_t>(n + 1), Rational(0));
                v[static_cast<size_t>(i)] = 1;
                v[static_cast<size_t>(i + 1)] = -1;
                s.push_back(v);
            }
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(static_cast<size_t>(n), Rational(0));
                v[static_cast<size_t>(i)] = 1;
                v[static_cast<size_t>(i + 1)] = -1;
                s.push_back(v);
            }
            s.push_back(e(n, n - 1));
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(static_cast<size_t>(n), Rational(0));
                v[static_cast<size_t>(i)] = 1;
                v[static_cast<size_t>(i + 1)] = -1;
                s.push_back(v);
            }
            s.push_back(e(n, n - 1, Rational(2)));
            scale = Rational(1, 2);
            break;
        case Family::D:
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(static_cast<size_t>(n), Rational(0));
                v[static_cast<size_t>(i)] = 1;
                v[static_cast<size_t>(i + 1)] = -1;
                s.push_back(v);
            }
            {
                Vec v(static_cast<size_t>(n), Rational(0));
                v[static_cast<size_t>(n - 2)] = 1;
                v[static_cast<size_t>(n - 1)] = 1;
                s.push_back(v);
            }
            break;
        case Family::E: {
            Vec a1(8, Rational(0));
            a1[0] = Rational(1, 2);
            a1[7] = Rational(1, 2);
            for (int i = 1; i <= 6; ++i) a1[static_cast<size_t>(i)] = Rational(-1, 2);
            s.push_back(a1);
            Vec a2(8, Rational(0));
            a2[0] = 1;
            a2[1] = 1;
            s.push_back(a2);
            for (int i = 0; i + 3 <= n; ++i) {
                Vec v(8, Rational(0));
                v[static_cast<size_t>(i)] = -1;
                v[static_cast<size_t>(i + 1)] = 1;
                s.push_back(v);
            }
            break;
        }
        case Family::F: {
            Vec a1(4, Rational(0)), a2(4, Rational(0)), a4(4, Rational(0));
            a1[1] = 1;
            a1[2] = -1;
            a2[2] = 1;
            a2[3] = -1;
            a4[0] = Rational(1, 2);
            a4[1] = Rational(-1, 2);
            a4[2] = Rational(-1, 2);
            a4[3] = Rational(-1, 2);
            s = {a1, a2, e(4, 3), a4};
            break;
        }
        case Family::G: {
            Vec a1(3, Rational(0)), a2(3, Rational(0));
            a1[0] = 1;
            a1[1] = -1;
            a2[0] = -2;
            a2[1] = 1;
            a2[2] = 1;
            s = {a1, a2};
            scale = Rational(1, 3);
            break;
        }
    }
    return {s, scale};
}

}  // namespace

std::shared_ptr<const RootDatum> RootDatum::build(LieType t) {
    auto d = std::shared_ptr<RootDatum>(new RootDatum());
    d->construct(t);
    return d;
}

void RootDatum::construct(LieType t) {
    type_ = t;
    auto [roots, scale] = realization(t);
    simple_ambient_ = std::move(roots);
    form_scale_ = scale;

    int r = rank();
    cartan_.assign(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational v = coroot_pairing(simple_ambient_[static_cast<size_t>(i)],
                                        simple_ambient_[static_cast<size_t>(j)]);
            if (!is_integer(v)) throw internal_error("non-integral Cartan entry");
            cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<int>(v.get_num().get_si());
        }

    close_positive_roots();
    compute_fundamental_weights();

    // theta: the unique root of maximal height
    int max_h = 0;
    for (const auto& rt : positive_)
        max_h = std::max(max_h, rt.height);
    std::vector<size_t> tops;
    for (size_t i = 0; i < positive_.size(); ++i)
        if (positive_[i].height == max_h) tops.push_back(i);
    if (tops.size() != 1) throw internal_error("highest root is not unique");
    theta_index_ = tops[0];
    const Root& th = theta();
    if (inner_ambient(th.ambient, th.ambient) != 2)
        throw internal_error("(theta,theta) != 2 under the normalized form");
    for (int m : th.simple_coeffs)
        if (m < 1) throw internal_error("nonpositive mark");

    // h^vee = 1 + (rho, theta^vee); theta long, so theta^vee = theta
    Rational rt = 0;
    for (int i = 0; i < r; ++i) rt += coroot_pairing(fw_ambient_[static_cast<size_t>(i)], th.ambient);
    Rational hv = rt + 1;
    if (!is_integer(hv)) throw internal_error("non-integral dual Coxeter number");
    dual_coxeter_ = hv.get_num();

    comarks_.clear();
    for (int i = 0; i < r; ++i) {
        Rational cm = coroot_pairing(fw_ambient_[static_cast<size_t>(i)], th.ambient);
        if (!is_integer(cm)) throw internal_error("non-integral comark");
        comarks_.push_back(cm.get_num());
    }

    // |positive roots| = (dim - rank)/2, and rho = half sum of positive roots
    if (dim() != lie_dim(type_)) throw internal_error("root count disagrees with dim");
    Vec half_sum(static_cast<size_t>(ambient_dim()), Rational(0));
    for (const auto& root : positive_)
        for (size_t c = 0; c < half_sum.size(); ++c) half_sum[c] += root.ambient[c];
    for (auto& c : half_sum) c /= 2;
    if (half_sum != to_ambient(rho()))
        throw internal_error("rho differs from half the positive-root sum");
}

void RootDatum::close_positive_roots() {
    int r = rank();
    positive_.clear();
    std::map<std::vector<int>, size_t> index;
    for (int i = 0; i < r; ++i) {
        Root rt;
        rt.ambient = simple_ambient_[static_cast<size_t>(i)];
        rt.simple_coeffs.assign(static_cast<size_t>(r), 0);
        rt.simple_coeffs[static_cast<size_t>(i)] = 1;
        rt.fw.assign(cartan_[static_cast<size_t>(i)].begin(), cartan_[static_cast<size_t>(i)].end());
        rt.height = 1;
        index[rt.simple_coeffs] = positive_.size();
        positive_.push_back(std::move(rt));
    }
    for (size_t cur = 0; cur < positive_.size(); ++cur) {
        for (int i = 0; i < r; ++i) {
            const Root beta = positive_[cur];  // copy: vector may reallocate
            if (beta.height == 1 && beta.simple_coeffs[static_cast<size_t>(i)] == 1) continue;
            // down-string depth p in direction alpha_i
            int p = 0;
            std::vector<int> probe = beta.simple_coeffs;
            while (true) {
                probe[static_cast<size_t>(i)] -= 1;
                if (probe[static_cast<size_t>(i)] < 0 || !index.count(probe)) break;
                ++p;
            }
            long q = p - beta.fw[static_cast<size_t>(i)];
            if (q < 1) continue;
            std::vector<int> up = beta.simple_coeffs;
            up[static_cast<size_t>(i)] += 1;
            if (index.count(up)) continue;
            Root nr;
            nr.simple_coeffs = up;
            nr.ambient = beta.ambient;
            for (size_t c = 0; c < nr.ambient.size(); ++c)
                nr.ambient[c] += simple_ambient_[static_cast<size_t>(i)][c];
            nr.fw = beta.fw;
            for (int kcol = 0; kcol < r; ++kcol)
                nr.fw[static_cast<size_t>(kcol)] += cartan_[static_cast<size_t>(i)][static_cast<size_t>(kcol)];
            nr.height = beta.height + 1;
            index[nr.simple_coeffs] = positive_.size();
            positive_.push_back(std::move(nr));
        }
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.simple_coeffs < b.simple_coeffs;
    });
}

void RootDatum::compute_fundamental_weights() {
    int r = rank();
    // Gram matrix of the simple roots under the ambient form
    Mat m(static_cast<size_t>(r), Vec(static_cast<size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                inner_ambient(simple_ambient_[static_cast<size_t>(i)], simple_ambient_[static_cast<size_t>(j)]);
    Mat minv = invert(m);
    // w_i = sum_k (M_ii/2) (M^-1)_ik alpha_k lies in the root span and
    // pairs to delta_ij against the simple coroots.
    fw_ambient_.assign(static_cast<size_t>(r), Vec(static_cast<size_t>(ambient_dim()), Rational(0)));
    for (int i = 0; i < r; ++i) {
        Rational di = m[static_cast<size_t>(i)][static_cast<size_t>(i)] / 2;
        for (int k = 0; k < r; ++k) {
            Rational c = di * minv[static_cast<size_t>(i)][static_cast<size_t>(k)];
            for (int col = 0; col < ambient_dim(); ++col)
                fw_ambient_[static_cast<size_t>(i)][static_cast<size_t>(col)] +=
                    c * simple_ambient_[static_cast<size_t>(k)][static_cast<size_t>(col)];
        }
    }
    gram_.assign(static_cast<size_t>(r), Vec(static_cast<size_t>(r)));
    Integer den = 1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            gram_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                inner_ambient(fw_ambient_[static_cast<size_t>(i)], fw_ambient_[static_cast<size_t>(j)]);
            Integer d = gram_[static_cast<size_t>(i)][static_cast<size_t>(j)].get_den();
            Integer g = gcd(den, d);
            den = den / g * d;
        }
    gram_denom_ = den;
    gram_scaled_.assign(static_cast<size_t>(r), std::vector<Integer>(static_cast<size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const Rational& g = gram_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            gram_scaled_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                g.get_num() * (den / g.get_den());
        }
}

Weight RootDatum::rho() const {
    Weight w;
    w.fw.assign(static_cast<size_t>(rank()), Rational(1));
    return w;
}

Rational RootDatum::inner(const Weight& x, const Weight& y) const {
    if (static_cast<int>(x.fw.size()) != rank() || static_cast<int>(y.fw.size()) != rank())
        throw input_error("weight rank mismatch");
    Rational acc = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x.fw[static_cast<size_t>(i)] == 0) continue;
        Rational row = 0;
        for (int j = 0; j < rank(); ++j)
            row += gram_[static_cast<size_t>(i)][static_cast<size_t>(j)] * y.fw[static_cast<size_t>(j)];
        acc += x.fw[static_cast<size_t>(i)] * row;
    }
    return acc;
}

Rational RootDatum::inner_ambient(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    Rational acc = 0;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc * form_scale_;
}

Rational RootDatum::coroot_pairing(const std::vector<Rational>& x, const std::vector<Rational>& beta) const {
    return 2 * inner_ambient(x, beta) / inner_ambient(beta, beta);
}

std::vector<Rational> RootDatum::to_ambient(const Weight& w) const {
    Vec out(static_cast<size_t>(ambient_dim()), Rational(0));
    for (int i = 0; i < rank(); ++i)
        for (int c = 0; c < ambient_dim(); ++c)
            out[static_cast<size_t>(c)] +=
                w.fw[static_cast<size_t>(i)] * fw_ambient_[static_cast<size_t>(i)][static_cast<size_t>(c)];
    return out;
}

RootDatum::DominantRep RootDatum::dominant_representative(const Weight& x) const {
    if (!x.is_integral()) throw input_error("dominant_representative requires an integral weight");
    IntWeight v = to_int_weight(x);
    for (size_t i = 0; i < v.size(); ++i) v[i] += 1;  // x + rho
    int sign = 1, length = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank(); ++i) {
            long c = v[static_cast<size_t>(i)];
            if (c < 0) {
                for (int j = 0; j < rank(); ++j)
                    v[static_cast<size_t>(j)] -= c * cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                sign = -sign;
                ++length;
                changed = true;
            }
        }
    }
    DominantRep out;
    for (long c : v)
        if (c == 0) sign = 0;
    out.sign = sign;
    out.length = length;
    out.weight.fw.reserve(v.size());
    for (long c : v) out.weight.fw.emplace_back(c - 1);
    return out;
}

std::pair<IntWeight, int> RootDatum::dominant_dot(IntWeight x) const {
    for (auto& c : x) c += 1;
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank(); ++i) {
            long c = x[static_cast<size_t>(i)];
            if (c == 0) return {IntWeight{}, 0};
            if (c < 0) {
                for (int j = 0; j < rank(); ++j)
                    x[static_cast<size_t>(j)] -= c * cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                sign = -sign;
                changed = true;
            }
        }
    }
    for (auto& c : x) {
        if (c == 0) return {IntWeight{}, 0};
        c -= 1;
    }
    return {x, sign};
}

}  // namespace confembed
