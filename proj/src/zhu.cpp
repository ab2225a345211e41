#include "zhu.hpp"

#include <stdexcept>

#include "linalg.hpp"

namespace voa {

namespace {

std::map<Word, std::size_t> basis_index(const std::vector<Word>& basis) {
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    return index;
}

Vec coords_of(const State& s, const std::map<Word, std::size_t>& index, std::size_t n) {
    Vec v(n, Scalar(0));
    for (const auto& [w, c] : s.terms()) v[index.at(w)] = c;
    return v;
}

}  // namespace

std::vector<State> subspace_basis(const AlgebraPtr& h, const SubspaceSelector& sel, Weight2 w2) {
    if (w2 == 0) return {h->vacuum()};
    std::vector<State> out;
    if (std::holds_alternative<SelectorFull>(sel)) {
        for (const auto& w : h->basis_words(w2)) out.push_back(h->make(w));
        return out;
    }
    if (const auto* d = std::get_if<SelectorDiagonal>(&sel)) {
        for (const auto& w : invariant_basis(h, d->action, w2)) out.push_back(h->make(w));
        return out;
    }
    const auto& gens = std::get<SelectorGenerated>(sel).gens;
    std::vector<Weight2> gw;
    for (const auto& g : gens) {
        auto w = g.weight2();
        if (!w) throw std::invalid_argument("selector generators must be weight-homogeneous");
        gw.push_back(*w);
    }
    std::vector<Word> basis = h->basis_words(w2);
    auto index = basis_index(basis);
    RowEchelon re(basis.size());
    for (const auto& gword : enumerate_genwords(gw, w2)) {
        State s = eval_genword(h, gens, gword);
        if (s.is_zero()) continue;
        if (re.add(coords_of(s, index, basis.size()))) out.push_back(std::move(s));
    }
    return out;
}

void validate_selector(const AlgebraPtr& h, const SubspaceSelector& sel, Weight2 maxweight2) {
    if (const auto* d = std::get_if<SelectorDiagonal>(&sel)) {
        validate_action(h, d->action);
        return;
    }
    const auto* g = std::get_if<SelectorGenerated>(&sel);
    if (!g) return;
    // closure of positive products on the generating set
    for (const auto& a : g->gens)
        for (const auto& b : g->gens) {
            Weight2 wa = a.weight2().value();
            Weight2 wb = b.weight2().value();
            for (long n = 0; wa + wb - 2 * (n + 1) >= 0; ++n) {
                State p = nth_product(a, n, b);
                if (p.is_zero()) continue;
                Weight2 wp = wa + wb - 2 * (n + 1);
                if (wp > maxweight2) continue;
                std::vector<Word> basis = h->basis_words(wp);
                auto index = basis_index(basis);
                RowEchelon re(basis.size());
                for (const auto& s : subspace_basis(h, sel, wp))
                    re.add(coords_of(s, index, basis.size()));
                if (!re.contains(coords_of(p, index, basis.size())))
                    throw std::invalid_argument(
                        "selector is not product-closed: witness a_(" + std::to_string(n) +
                        ")b = " + p.str());
            }
        }
}

namespace {

// span of { a_(-2) b : a, b in the subalgebra, wt a + wt b + 1 = w }
RowEchelon c2_span(const AlgebraPtr& h, const SubspaceSelector& sel, Weight2 w2,
                   const std::map<Word, std::size_t>& index, std::size_t dim) {
    RowEchelon re(dim);
    for (Weight2 p2 = 1; p2 + 2 <= w2; ++p2) {
        Weight2 q2 = w2 - 2 - p2;
        auto as = subspace_basis(h, sel, p2);
        if (as.empty()) continue;
        auto bs = subspace_basis(h, sel, q2);
        for (const auto& a : as)
            for (const auto& b : bs) {
                State s = nth_product(a, -2, b);
                if (s.is_zero()) continue;
                re.add(coords_of(s, index, dim));
            }
    }
    return re;
}

}  // namespace

GradedDims c2_graded_dims(const AlgebraPtr& h, const SubspaceSelector& sel, Weight2 maxweight2) {
    validate_selector(h, sel, maxweight2);
    GradedDims dims;
    for (Weight2 w2 = 0; w2 <= maxweight2; ++w2) {
        std::vector<Word> basis = h->basis_words(w2);
        if (basis.empty()) {
            dims[w2] = 0;
            continue;
        }
        auto index = basis_index(basis);
        std::size_t sub_dim = subspace_basis(h, sel, w2).size();
        RowEchelon c2 = c2_span(h, sel, w2, index, basis.size());
        dims[w2] = sub_dim - c2.rank();
    }
    return dims;
}

bool relation_in_zhu(const AlgebraPtr& h, const SubspaceSelector& sel, const State& expr) {
    auto w2opt = expr.weight2();
    if (!w2opt) throw std::invalid_argument("expression must be weight-homogeneous");
    Weight2 w2 = *w2opt;
    std::vector<Word> basis = h->basis_words(w2);
    auto index = basis_index(basis);
    Vec target = coords_of(expr, index, basis.size());
    {
        RowEchelon sub(basis.size());
        for (const auto& s : subspace_basis(h, sel, w2))
            sub.add(coords_of(s, index, basis.size()));
        if (!sub.contains(target))
            throw std::invalid_argument("expression lies outside the selected subalgebra");
    }
    RowEchelon c2 = c2_span(h, sel, w2, index, basis.size());
    return c2.contains(target);
}

ProbeReport classical_freeness_probe(const AlgebraPtr& h, const SubspaceSelector& sel,
                                     const Presentation& R, Weight2 maxweight2) {
    GradedDims arc = arc_hilbert(R, maxweight2);
    ProbeReport rep;
    for (Weight2 w2 = 0; w2 <= maxweight2; ++w2) {
        std::size_t voa = subspace_basis(h, sel, w2).size();
        std::size_t arcd = arc.count(w2) ? arc[w2] : 0;
        rep.rows.push_back({w2, arcd, voa});
        if (arcd < voa) rep.surjective_ok = false;
        if (arcd > voa && rep.first_strict < 0) rep.first_strict = w2;
    }
    return rep;
}

}  // namespace voa
