#include "confembed/repthy.hpp"

#include "confembed/errors.hpp"

#include <algorithm>

namespace confembed {

namespace {

void require_dominant_integral(const RootDatum& d, const IntWeight& hw) {
    if (static_cast<int>(hw.size()) != d.rank()) throw input_error("weight rank mismatch");
    for (long c : hw)
        if (c < 0) throw input_error("highest weight must be dominant");
}

// Integer-rescaled Gram matrix as long; entries are tiny, the rescale
// only clears the fundamental-weight denominators.
std::vector<std::vector<long>> small_gram(const RootDatum& d) {
    int r = d.rank();
    std::vector<std::vector<long>> g(static_cast<size_t>(r), std::vector<long>(static_cast<size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const Integer& v = d.gram_scaled()[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (!v.fits_slong_p()) throw internal_error("gram entry exceeds long");
            g[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.get_si();
        }
    return g;
}

long scaled_inner(const std::vector<std::vector<long>>& g, const IntWeight& x, const IntWeight& y) {
    long acc = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        long row = 0;
        for (size_t j = 0; j < y.size(); ++j) row += g[i][j] * y[j];
        acc += x[i] * row;
    }
    return acc;
}

}  // namespace

Integer WeightMultiplicities::total_mass() const {
    Integer sum = 0;
    for (const auto& [w, m] : entries) sum += m;
    return sum;
}

Integer weyl_dim(const RootDatum& d, const Weight& hw) {
    if (!hw.is_integral()) throw input_error("weyl_dim requires an integral weight");
    return weyl_dim(d, to_int_weight(hw));
}

Integer weyl_dim(const RootDatum& d, const IntWeight& hw) {
    require_dominant_integral(d, hw);
    auto g = small_gram(d);
    IntWeight lr = hw;
    for (auto& c : lr) c += 1;
    IntWeight ones(lr.size(), 1);
    Integer num = 1, den = 1;
    for (const Root& a : d.positive_roots()) {
        num *= scaled_inner(g, lr, a.fw);
        den *= scaled_inner(g, ones, a.fw);
    }
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0 || q <= 0) throw internal_error("weyl_dim: non-integral quotient");
    return q;
}

WeightMultiplicities freudenthal(const RootDatum& d, const Weight& hw) {
    if (!hw.is_integral()) throw input_error("freudenthal requires an integral weight");
    return freudenthal(d, to_int_weight(hw));
}

WeightMultiplicities freudenthal(const RootDatum& d, const IntWeight& hw) {
    require_dominant_integral(d, hw);
    int r = d.rank();
    auto g = small_gram(d);

    // Enumerate the weight system top-down; root strings are unbroken, so a
    // weight extends down in direction alpha_i iff p + <mu, alpha_i^vee> >= 1
    // where p is the (already known) upward string length.
    struct Node {
        IntWeight w;
        int depth;
    };
    std::map<IntWeight, int> depth_of;
    std::vector<Node> order;
    order.push_back({hw, 0});
    depth_of[hw] = 0;
    for (size_t cur = 0; cur < order.size(); ++cur) {
        Node nd = order[cur];
        for (int i = 0; i < r; ++i) {
            int p = 0;
            IntWeight probe = nd.w;
            while (true) {
                for (int j = 0; j < r; ++j) probe[static_cast<size_t>(j)] += d.cartan(i, j);
                if (!depth_of.count(probe)) break;
                ++p;
            }
            long q = p + nd.w[static_cast<size_t>(i)];
            if (q < 1) continue;
            IntWeight down = nd.w;
            for (int j = 0; j < r; ++j) down[static_cast<size_t>(j)] -= d.cartan(i, j);
            if (depth_of.count(down)) continue;
            depth_of[down] = nd.depth + 1;
            order.push_back({down, nd.depth + 1});
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const Node& a, const Node& b) { return a.depth < b.depth; });

    std::vector<IntWeight> pos;
    pos.reserve(d.positive_roots().size());
    for (const Root& a : d.positive_roots()) pos.push_back(a.fw);

    IntWeight lr = hw;
    for (auto& c : lr) c += 1;
    long norm_top = scaled_inner(g, lr, lr);

    WeightMultiplicities out;
    out.entries[hw] = 1;
    for (const Node& nd : order) {
        if (nd.depth == 0) continue;
        IntWeight mr = nd.w;
        for (auto& c : mr) c += 1;
        long den = norm_top - scaled_inner(g, mr, mr);
        if (den <= 0) throw internal_error("freudenthal: nonpositive denominator");
        long num = 0;
        for (const IntWeight& a : pos) {
            IntWeight up = nd.w;
            while (true) {
                for (size_t j = 0; j < up.size(); ++j) up[j] += a[j];
                auto it = out.entries.find(up);
                if (it == out.entries.end()) break;
                num += it->second * scaled_inner(g, up, a);
            }
        }
        long twice = 2 * num;
        if (twice % den != 0) throw internal_error("freudenthal: non-integral multiplicity");
        long m = twice / den;
        if (m <= 0) throw internal_error("freudenthal: nonpositive multiplicity");
        out.entries[nd.w] = m;
    }
    return out;
}

IrrepSum tensor_decompose(const RootDatum& d, const Weight& a, const Weight& b) {
    if (!a.is_integral() || !b.is_integral())
        throw input_error("tensor_decompose requires integral weights");
    return tensor_decompose(d, to_int_weight(a), to_int_weight(b));
}

IrrepSum tensor_decompose(const RootDatum& d, const IntWeight& a, const IntWeight& b) {
    require_dominant_integral(d, a);
    require_dominant_integral(d, b);
    const bool swapped = weyl_dim(d, a) < weyl_dim(d, b);
    const IntWeight& big = swapped ? b : a;
    const IntWeight& small = swapped ? a : b;
    WeightMultiplicities ws = freudenthal(d, small);
    IrrepSum out;
    for (const auto& [w, m] : ws.entries) {
        IntWeight x = big;
        for (size_t i = 0; i < x.size(); ++i) x[i] += w[i];
        auto [dom, sign] = d.dominant_dot(std::move(x));
        if (sign == 0) continue;
        out.terms[dom] += sign * m;
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        if (it->second == 0) {
            it = out.terms.erase(it);
        } else if (it->second < 0) {
            throw internal_error("tensor_decompose: negative net multiplicity");
        } else {
            ++it;
        }
    }
    return out;
}

Rational casimir_value(const RootDatum& d, const Weight& lambda) {
    Weight shifted = lambda;
    for (auto& c : shifted.fw) c += 2;  // lambda + 2 rho
    return d.inner(lambda, shifted);
}

Rational dynkin_index(const RootDatum& d, const IrrepSum& rep) {
    Rational total = 0;
    // (theta, theta + 2 rho) = 2 h^vee
    Rational denom = Rational(2) * Rational(d.dual_coxeter()) * Rational(d.dim());
    for (const auto& [w, m] : rep.terms) {
        Rational dim(weyl_dim(d, w));
        total += Rational(m) * dim * casimir_value(d, to_weight(w)) / denom;
    }
    return total;
}

}  // namespace confembed
