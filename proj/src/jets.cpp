#include "jets.hpp"

#include <stdexcept>

#include "linalg.hpp"

namespace voa {

JetPresentation jet_presentation(const Presentation& p, long m, bool zero_base) {
    if (m < 0) throw std::invalid_argument("jet order must be nonnegative");
    const std::size_t r = p.ring->size();
    std::vector<PolyRing::Var> vars;
    for (std::size_t j = 0; j < r; ++j) {
        const auto& v = p.ring->var(j);
        for (long i = 0; i <= m; ++i)
            vars.push_back({v.name + "_" + std::to_string(i),
                            (zero_base ? 0 : v.weight2) + 2 * i});
    }
    PolyRingPtr jring = PolyRing::make(std::move(vars));
    auto jet_index = [&](std::size_t j, long i) {
        return j * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(i);
    };
    std::vector<Poly> images(jring->size(), Poly(jring));
    for (std::size_t j = 0; j < r; ++j)
        for (long i = 0; i < m; ++i)
            images[jet_index(j, i)] = Poly::variable(jring, jet_index(j, i + 1));
    JetPresentation out;
    out.source = p;
    out.m = m;
    out.var_images = images;
    out.jet.ring = jring;
    std::vector<std::size_t> embed(r);
    for (std::size_t j = 0; j < r; ++j) embed[j] = jet_index(j, 0);
    for (const auto& f : p.relations) {
        Poly cur = f.map_variables(jring, embed);
        for (long s = 0; s <= m; ++s) {
            out.jet.relations.push_back(cur);
            if (s < m) cur = cur.apply_derivation(images);
        }
    }
    return out;
}

namespace {

void enum_monomials(const PolyRingPtr& ring, std::size_t v, Weight2 rem, Poly::Expo& cur,
                    std::vector<Poly::Expo>& out) {
    if (v == ring->size()) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    Weight2 w = ring->var(v).weight2;
    for (int e = 0; w * e <= rem; ++e) {
        cur[v] = e;
        enum_monomials(ring, v + 1, rem - w * e, cur, out);
    }
    cur[v] = 0;
}

}  // namespace

std::vector<Poly::Expo> weighted_monomials(const PolyRingPtr& ring, Weight2 w2) {
    std::vector<Poly::Expo> out;
    Poly::Expo cur(ring->size(), 0);
    enum_monomials(ring, 0, w2, cur, out);
    return out;
}

namespace {

GradedDims hilbert_of(const Presentation& p, Weight2 maxweight2) {
    for (std::size_t v = 0; v < p.ring->size(); ++v)
        if (p.ring->var(v).weight2 <= 0)
            throw std::domain_error("infinite graded pieces: variable " + p.ring->var(v).name +
                                    " has nonpositive weight");
    std::vector<std::pair<Poly, Weight2>> rels;
    for (const auto& f : p.relations) {
        if (f.is_zero()) continue;
        auto w = f.homogeneous_weight2();
        if (!w) throw std::invalid_argument("relation is not weight-homogeneous: " + f.str());
        rels.push_back({f, *w});
    }
    GradedDims dims;
    for (Weight2 w2 = 0; w2 <= maxweight2; ++w2) {
        auto mons = weighted_monomials(p.ring, w2);
        if (mons.empty()) {
            dims[w2] = 0;
            continue;
        }
        std::map<Poly::Expo, std::size_t> index;
        for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
        RowEchelon re(mons.size());
        for (const auto& [f, wf] : rels) {
            if (wf > w2) continue;
            for (const auto& mu : weighted_monomials(p.ring, w2 - wf)) {
                Poly shifted(p.ring);
                shifted.add_term(mu, Rational(1));
                shifted = shifted * f;
                Vec v(mons.size(), Scalar(0));
                for (const auto& [e, c] : shifted.terms()) v[index.at(e)] = Scalar(c);
                re.add(std::move(v));
            }
        }
        dims[w2] = mons.size() - re.rank();
    }
    return dims;
}

}  // namespace

GradedDims truncated_hilbert(const Presentation& p, Weight2 maxweight2) {
    return hilbert_of(p, maxweight2);
}

GradedDims arc_hilbert(const Presentation& p, Weight2 maxweight2) {
    const std::size_t r = p.ring->size();
    std::vector<PolyRing::Var> vars;
    std::vector<std::vector<std::size_t>> slot(r);
    for (std::size_t j = 0; j < r; ++j) {
        Weight2 w = p.ring->var(j).weight2;
        if (w <= 0)
            throw std::domain_error("infinite graded pieces: variable " + p.ring->var(j).name +
                                    " has nonpositive weight");
        for (long i = 0; w + 2 * i <= maxweight2; ++i) {
            slot[j].push_back(vars.size());
            vars.push_back({p.ring->var(j).name + "_" + std::to_string(i), w + 2 * i});
        }
    }
    PolyRingPtr aring = PolyRing::make(std::move(vars));
    std::vector<Poly> images(aring->size(), Poly(aring));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i + 1 < slot[j].size(); ++i)
            images[slot[j][i]] = Poly::variable(aring, slot[j][i + 1]);
    Presentation arc;
    arc.ring = aring;
    std::vector<std::size_t> embed(r);
    for (std::size_t j = 0; j < r; ++j) {
        if (slot[j].empty())
            throw std::domain_error("weight cutoff below the lightest variable");
        embed[j] = slot[j][0];
    }
    for (const auto& f : p.relations) {
        if (f.is_zero()) continue;
        auto wf = f.homogeneous_weight2();
        if (!wf) throw std::invalid_argument("relation is not weight-homogeneous: " + f.str());
        Poly cur = f.map_variables(aring, embed);
        for (Weight2 w = *wf; w <= maxweight2; w += 2) {
            arc.relations.push_back(cur);
            if (w + 2 <= maxweight2) cur = cur.apply_derivation(images);
        }
    }
    return hilbert_of(arc, maxweight2);
}

}  // namespace voa
