#include "confembed/subalg.hpp"

#include "confembed/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace confembed {

namespace {

bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// Pairing table between induced simple roots: c[i][j] = <s_i, s_j^vee>.
struct NodeGraph {
    std::vector<size_t> roots;            // ambient positive-root indices
    std::vector<std::vector<int>> pair;   // coroot pairings
    std::vector<Rational> sq;             // ambient square lengths
    std::vector<int> ambient_key;         // Bourbaki index of an original
                                          // simple root, or rank+1 for the
                                          // lowest-root node
};

std::vector<std::vector<size_t>> connected_components(const NodeGraph& g) {
    size_t n = g.roots.size();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<size_t> stack{i};
        comp[i] = nc;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t w = 0; w < n; ++w)
                if (comp[w] < 0 && g.pair[v][w] != 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<std::vector<size_t>> out(static_cast<size_t>(nc));
    for (size_t i = 0; i < n; ++i) out[static_cast<size_t>(comp[i])].push_back(i);
    return out;
}

struct ClassifiedComponent {
    LieType type;
    std::vector<size_t> order;  // local node ids in Bourbaki order
};

// Identify the type of one connected subdiagram and return its nodes in
// Bourbaki order. Orientation ties are broken by ambient_key so the output
// is deterministic and matches the published table conventions: original
// simple roots keep their ambient order, the lowest-root node sorts last.
ClassifiedComponent classify_component(const NodeGraph& g, const std::vector<size_t>& nodes) {
    size_t r = nodes.size();
    auto pairing = [&](size_t a, size_t b) { return g.pair[nodes[a]][nodes[b]]; };
    auto mult = [&](size_t a, size_t b) { return pairing(a, b) * pairing(b, a); };
    auto key = [&](size_t a) { return g.ambient_key[nodes[a]]; };
    auto out = [&](Family f, std::vector<size_t> order) {
        ClassifiedComponent c;
        c.type = make_lie_type(f, static_cast<int>(r));
        c.order.reserve(order.size());
        for (size_t i : order) c.order.push_back(nodes[i]);
        return c;
    };

    if (r == 1) return out(Family::A, {0});

    std::vector<std::vector<size_t>> adj(r);
    int max_mult = 0;
    for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b)
            if (a != b && mult(a, b) > 0) {
                adj[a].push_back(b);
                if (a < b) max_mult = std::max(max_mult, mult(a, b));
            }

    Rational maxsq = g.sq[nodes[0]];
    for (size_t a = 1; a < r; ++a) maxsq = std::max(maxsq, g.sq[nodes[a]]);
    auto is_short = [&](size_t a) { return g.sq[nodes[a]] < maxsq; };

    if (max_mult == 3) {
        if (r != 2) throw internal_error("triple edge outside G2");
        return is_short(0) ? out(Family::G, {0, 1}) : out(Family::G, {1, 0});
    }

    size_t forks = 0, fork = 0;
    for (size_t a = 0; a < r; ++a)
        if (adj[a].size() >= 3) {
            ++forks;
            fork = a;
        }

    auto walk_from = [&](size_t start, size_t next) {
        std::vector<size_t> path{start, next};
        size_t prev = start, cur = next;
        while (true) {
            size_t cont = r;
            for (size_t w : adj[cur])
                if (w != prev) cont = w;
            if (cont == r) break;
            path.push_back(cont);
            prev = cur;
            cur = cont;
        }
        return path;
    };

    if (max_mult == 2) {
        if (forks > 0) throw internal_error("fork in a doubly-laced component");
        if (r == 2) {
            // rank-2 B = C; tables use the C2 convention (short node first)
            return is_short(0) ? out(Family::C, {0, 1}) : out(Family::C, {1, 0});
        }
        std::vector<size_t> ends;
        for (size_t a = 0; a < r; ++a)
            if (adj[a].size() == 1) ends.push_back(a);
        if (ends.size() != 2) throw internal_error("doubly-laced component is not a chain");
        auto chain = walk_from(ends[0], adj[ends[0]][0]);
        size_t dpos = r;  // index of the first node of the double edge
        for (size_t i = 0; i + 1 < r; ++i)
            if (mult(chain[i], chain[i + 1]) == 2) dpos = i;
        if (dpos == r) throw internal_error("missing double edge");
        if (dpos != 0 && dpos != r - 2) {
            // double edge interior: F4; long roots come first
            if (r != 4) throw internal_error("interior double edge outside F4");
            if (is_short(chain[0])) std::reverse(chain.begin(), chain.end());
            return out(Family::F, chain);
        }
        // put the double edge at the tail
        if (dpos == 0) std::reverse(chain.begin(), chain.end());
        return is_short(chain[r - 1]) ? out(Family::B, chain) : out(Family::C, chain);
    }

    // simply laced
    if (forks == 0) {
        std::vector<size_t> ends;
        for (size_t a = 0; a < r; ++a)
            if (adj[a].size() <= 1) ends.push_back(a);
        if (ends.size() != 2) throw internal_error("simply-laced chain expected");
        auto chain = walk_from(ends[0], adj[ends[0]][0]);
        if (key(chain.front()) > key(chain.back())) std::reverse(chain.begin(), chain.end());
        return out(Family::A, chain);
    }
    if (forks != 1) throw internal_error("multiple forks in one component");

    std::vector<std::vector<size_t>> arms;  // from the fork outward, fork excluded
    for (size_t w : adj[fork]) {
        auto path = walk_from(fork, w);
        path.erase(path.begin());
        arms.push_back(path);
    }
    std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        std::vector<int> ka, kb;
        for (size_t x : a) ka.push_back(key(x));
        for (size_t x : b) kb.push_back(key(x));
        return ka < kb;
    });
    if (arms.size() != 3) throw internal_error("fork degree > 3");
    size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();

    if (a0 == 1 && a1 == 1) {
        // D_r: long arm tip-to-fork, then the two short tips
        std::vector<size_t> order(arms[2].rbegin(), arms[2].rend());
        order.push_back(fork);
        size_t t1 = arms[0][0], t2 = arms[1][0];
        if (key(t1) > key(t2)) std::swap(t1, t2);
        order.push_back(t1);
        order.push_back(t2);
        return out(Family::D, order);
    }
    if (a0 == 1 && a1 == 2 && (a2 >= 2 && a2 <= 4)) {
        // E_r (Bourbaki): 1 and 3 on the two-arm, 2 on the one-arm, 4 = fork
        std::vector<size_t> order;
        order.push_back(arms[1][1]);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        order.push_back(fork);
        for (size_t x : arms[2]) order.push_back(x);
        return out(Family::E, order);
    }
    throw internal_error("unrecognized simply-laced fork diagram");
}

}  // namespace

std::vector<EqualRankSubalgebra> EqualRankSubalgebra::enumerate_maximal(LieType g) {
    return enumerate_removals(g, false);
}

std::vector<EqualRankSubalgebra> EqualRankSubalgebra::enumerate_removals(LieType g, bool include_nonmaximal) {
    auto datum = RootDatum::build(g);
    std::vector<EqualRankSubalgebra> out;
    for (int p = 1; p <= datum->rank(); ++p) {
        int a_p = datum->marks()[static_cast<size_t>(p - 1)];
        bool maximal = (a_p == 1) || is_prime(a_p);
        if (!maximal && !include_nonmaximal) continue;
        out.push_back(from_removed_node(g, p));
    }
    return out;
}

EqualRankSubalgebra EqualRankSubalgebra::from_removed_node(LieType g, int node) {
    EqualRankSubalgebra sub;
    sub.ambient_ = RootDatum::build(g);
    const RootDatum& amb = *sub.ambient_;
    if (node < 1 || node > amb.rank()) throw input_error("removed node out of range");
    sub.removed_node_ = node;
    sub.mark_ = amb.marks()[static_cast<size_t>(node - 1)];
    sub.center_dim_ = (sub.mark_ == 1) ? 1 : 0;
    sub.auto_order_ = (sub.mark_ == 1) ? 2 : sub.mark_;
    sub.maximal_ = (sub.mark_ == 1) || is_prime(sub.mark_);
    const auto& ap = amb.simple_roots()[static_cast<size_t>(node - 1)];
    sub.alpha_p_long_ = (amb.inner_ambient(ap, ap) == 2);
    sub.build_ideals();
    if (sub.maximal_) sub.build_p_module();
    return sub;
}

void EqualRankSubalgebra::build_ideals() {
    const RootDatum& amb = *ambient_;
    const int p = removed_node_;
    const int m = auto_order_;
    const bool center = (center_dim_ == 1);

    // positive roots of g0
    std::vector<size_t> pos0;
    for (size_t i = 0; i < amb.positive_roots().size(); ++i) {
        int c = amb.positive_roots()[i].simple_coeffs[static_cast<size_t>(p - 1)];
        bool in0 = center ? (c == 0) : (c % m == 0);
        if (in0) pos0.push_back(i);
    }
    std::set<std::vector<int>> pos0_coeffs;
    for (size_t i : pos0) pos0_coeffs.insert(amb.positive_roots()[i].simple_coeffs);

    // induced simple roots: not a sum of two positive g0-roots
    NodeGraph graph;
    for (size_t i : pos0) {
        const Root& beta = amb.positive_roots()[i];
        bool decomposable = false;
        for (size_t jdx : pos0) {
            if (jdx == i) continue;
            const Root& gamma = amb.positive_roots()[jdx];
            std::vector<int> diff = beta.simple_coeffs;
            bool nonneg = true;
            for (size_t c = 0; c < diff.size(); ++c) {
                diff[c] -= gamma.simple_coeffs[c];
                if (diff[c] < 0) nonneg = false;
            }
            if (nonneg && pos0_coeffs.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) graph.roots.push_back(i);
    }
    size_t expected = static_cast<size_t>(amb.rank() - center_dim_);
    if (graph.roots.size() != expected)
        throw internal_error("induced simple-root count mismatch for " + to_string(amb.type()) +
                             " node " + std::to_string(p));

    size_t n = graph.roots.size();
    graph.pair.assign(n, std::vector<int>(n, 0));
    graph.sq.resize(n);
    graph.ambient_key.resize(n);
    for (size_t a = 0; a < n; ++a) {
        const Root& ra = amb.positive_roots()[graph.roots[a]];
        graph.sq[a] = amb.inner_ambient(ra.ambient, ra.ambient);
        graph.ambient_key[a] = amb.rank() + 1;
        if (ra.height == 1)
            for (size_t i = 0; i < ra.simple_coeffs.size(); ++i)
                if (ra.simple_coeffs[i] == 1) graph.ambient_key[a] = static_cast<int>(i) + 1;
        for (size_t b = 0; b < n; ++b) {
            const Root& rb = amb.positive_roots()[graph.roots[b]];
            Rational v = amb.coroot_pairing(ra.ambient, rb.ambient);
            if (!is_integer(v)) throw internal_error("non-integral induced pairing");
            graph.pair[a][b] = static_cast<int>(v.get_num().get_si());
        }
    }

    ideals_.clear();
    for (const auto& comp : connected_components(graph)) {
        ClassifiedComponent cc = classify_component(graph, comp);
        Ideal ideal;
        ideal.type = cc.type;
        ideal.datum = RootDatum::build(cc.type);
        for (size_t local : cc.order) ideal.simple_roots.push_back(graph.roots[local]);
        // verify the classification: pairings must reproduce the Cartan matrix
        for (size_t a = 0; a < cc.order.size(); ++a)
            for (size_t b = 0; b < cc.order.size(); ++b)
                if (graph.pair[cc.order[a]][cc.order[b]] !=
                    ideal.datum->cartan(static_cast<int>(a), static_cast<int>(b)))
                    throw internal_error("component misclassified as " + to_string(cc.type));
        // d_j = 2/(theta_j, theta_j): theta_j is a long root of the ideal
        Rational longest = 0;
        for (size_t local : comp) longest = std::max(longest, graph.sq[local]);
        ideal.d = Rational(2) / longest;
        ideals_.push_back(std::move(ideal));
    }
    std::sort(ideals_.begin(), ideals_.end(), [](const Ideal& x, const Ideal& y) {
        if (x.type.family != y.type.family) return x.type.family < y.type.family;
        if (x.type.rank != y.type.rank) return x.type.rank < y.type.rank;
        return x.simple_roots < y.simple_roots;
    });

    name_.clear();
    for (const Ideal& ideal : ideals_) {
        if (!name_.empty()) name_ += "x";
        name_ += to_string(ideal.type);
    }
    if (center_dim_ == 1) {
        if (!name_.empty()) name_ += "x";
        name_ += "Z";
    }

    dim_p_ = amb.dim() - dim_g0();
    Integer check = Integer(amb.rank()) + 2 * Integer(static_cast<long>(pos0.size()));
    if (check != dim_g0()) throw internal_error("dim g0 bookkeeping mismatch");
}

Integer EqualRankSubalgebra::dim_g0() const {
    Integer d = center_dim_;
    for (const Ideal& ideal : ideals_) d += lie_dim(ideal.type);
    return d;
}

Rational EqualRankSubalgebra::zeta_norm() const {
    if (center_dim_ != 1) throw input_error("zeta_norm: subalgebra has no center");
    return Rational(2) * Rational(ambient_->dual_coxeter()) / Rational(dim_p_);
}

IntWeight EqualRankSubalgebra::restrict_to_ideal(const std::vector<Rational>& v, size_t j) const {
    const RootDatum& amb = *ambient_;
    const Ideal& ideal = ideals_[j];
    IntWeight out;
    out.reserve(ideal.simple_roots.size());
    for (size_t idx : ideal.simple_roots) {
        Rational c = amb.coroot_pairing(v, amb.positive_roots()[idx].ambient);
        if (!is_integer(c)) throw internal_error("non-integral restriction");
        out.push_back(c.get_num().get_si());
    }
    return out;
}

void EqualRankSubalgebra::build_p_module() {
    const RootDatum& amb = *ambient_;
    const int p = removed_node_;
    const int m = auto_order_;
    const bool center = (center_dim_ == 1);

    // signed root table
    std::set<std::vector<int>> all_roots;
    for (const Root& rt : amb.positive_roots()) {
        all_roots.insert(rt.simple_coeffs);
        std::vector<int> neg = rt.simple_coeffs;
        for (int& c : neg) c = -c;
        all_roots.insert(neg);
    }

    // induced simple roots of g0 across all ideals, as coefficient vectors
    std::vector<std::vector<int>> g0_simples;
    for (const Ideal& ideal : ideals_)
        for (size_t idx : ideal.simple_roots) g0_simples.push_back(amb.positive_roots()[idx].simple_coeffs);

    struct SignedRoot {
        std::vector<int> coeffs;
        std::vector<Rational> ambient;
        int cp;
    };
    std::vector<SignedRoot> signed_roots;
    for (const Root& rt : amb.positive_roots()) {
        SignedRoot sr{rt.simple_coeffs, rt.ambient, rt.simple_coeffs[static_cast<size_t>(p - 1)]};
        signed_roots.push_back(sr);
        for (int& c : sr.coeffs) c = -c;
        for (auto& c : sr.ambient) c = -c;
        sr.cp = -sr.cp;
        signed_roots.push_back(std::move(sr));
    }

    auto class_of = [&](int cp) -> int {
        if (center) {
            if (cp == 1) return 1;
            if (cp == -1) return 2;
            return 0;
        }
        int cls = cp % m;
        if (cls < 0) cls += m;
        return cls;
    };

    int nclasses = center ? 2 : m - 1;
    p_.components.clear();
    Integer total = 0;
    for (int cls = 1; cls <= nclasses; ++cls) {
        std::vector<const SignedRoot*> members;
        for (const auto& sr : signed_roots)
            if (class_of(sr.cp) == cls) members.push_back(&sr);
        if (members.empty()) throw internal_error("empty grading class");

        const SignedRoot* highest = nullptr;
        for (const auto* sr : members) {
            bool top = true;
            for (const auto& s : g0_simples) {
                std::vector<int> sum = sr->coeffs;
                for (size_t c = 0; c < sum.size(); ++c) sum[c] += s[c];
                if (all_roots.count(sum)) {
                    top = false;
                    break;
                }
            }
            if (top) {
                if (highest) throw internal_error("grading class has two highest weights");
                highest = sr;
            }
        }
        if (!highest) throw internal_error("grading class has no highest weight");

        PComponent comp;
        comp.eigen_index = cls;
        comp.dim = static_cast<long>(members.size());
        Integer dim_check = 1;
        for (size_t j = 0; j < ideals_.size(); ++j) {
            IntWeight w = restrict_to_ideal(highest->ambient, j);
            for (long c : w)
                if (c < 0) throw internal_error("class highest weight not dominant");
            dim_check *= weyl_dim(*ideals_[j].datum, w);
            comp.ideal_weights.push_back(std::move(w));
        }
        if (dim_check != comp.dim)
            throw internal_error("p-component dimension mismatch in " + to_string(amb.type()) +
                                 " node " + std::to_string(p));
        if (center) {
            comp.center_charge = highest->cp;
            if (comp.center_charge != (cls == 1 ? 1 : -1))
                throw internal_error("center charge mismatch");
            // mu_1 = theta and mu_2 = -alpha_p
            if (cls == 1 && highest->coeffs != amb.theta().simple_coeffs)
                throw internal_error("center case: mu_1 != theta");
            if (cls == 2) {
                std::vector<int> neg_ap(static_cast<size_t>(amb.rank()), 0);
                neg_ap[static_cast<size_t>(p - 1)] = -1;
                if (highest->coeffs != neg_ap) throw internal_error("center case: mu_2 != -alpha_p");
            }
        }
        total += comp.dim;
        p_.components.push_back(std::move(comp));
    }
    if (total != dim_p_) throw internal_error("sum of p-components misses dim p");
}

Rational embedding_index(const EqualRankSubalgebra& sub, size_t j) {
    if (j >= sub.ideals().size()) throw input_error("ideal index out of range");
    return sub.ideals()[j].d;
}

PModule decompose_p(const EqualRankSubalgebra& sub) {
    if (!sub.is_maximal()) throw input_error("decompose_p requires a maximal subalgebra");
    return sub.p_module();
}

Rational index_of_p(const EqualRankSubalgebra& sub, size_t j) {
    if (j >= sub.ideals().size()) throw input_error("ideal index out of range");
    const Ideal& ideal = sub.ideals()[j];
    Rational total = 0;
    for (const PComponent& comp : sub.p_module().components) {
        Integer others = 1;
        for (size_t u = 0; u < sub.ideals().size(); ++u) {
            if (u == j) continue;
            others *= weyl_dim(*sub.ideals()[u].datum, comp.ideal_weights[u]);
        }
        if (!others.fits_slong_p()) throw internal_error("index_of_p: multiplicity overflow");
        IrrepSum rep;
        rep.terms[comp.ideal_weights[j]] += others.get_si();
        total += dynkin_index(*ideal.datum, rep);
    }
    return total;
}

Rational casimir_eigenvalue_on_p(const EqualRankSubalgebra& sub) {
    if (!sub.is_maximal()) throw input_error("casimir_eigenvalue_on_p requires a maximal subalgebra");
    Rational hv2 = Rational(2) * Rational(sub.ambient().dual_coxeter());
    Rational value;
    bool first = true;
    for (const PComponent& comp : sub.p_module().components) {
        Rational v = 0;
        for (size_t j = 0; j < sub.ideals().size(); ++j) {
            const Ideal& ideal = sub.ideals()[j];
            // kappa restricted to ideal j is (2 h^vee d_j) times the ideal's
            // normalized form, so the Casimir eigenvalue rescales by 1/that.
            Rational cas = casimir_value(*ideal.datum, to_weight(comp.ideal_weights[j]));
            v += cas / (hv2 * ideal.d);
        }
        if (sub.center_dim() == 1)
            v += Rational(comp.center_charge * comp.center_charge) / Rational(sub.dim_p());
        if (first) {
            value = v;
            first = false;
        } else if (v != value) {
            throw internal_error("Casimir eigenvalue on p depends on the component");
        }
    }
    return value;
}

}  // namespace confembed
