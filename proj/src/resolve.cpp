#include "ueda/resolve.hpp"

#include <algorithm>

#include "ueda/errors.hpp"

namespace ueda {

int DivisorLattice::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names[static_cast<size_t>(i)] == name) return i;
    throw domain_error("unknown divisor class: " + name);
}

long DivisorLattice::pairing(const std::vector<long>& d1,
                             const std::vector<long>& d2) const {
    if (d1.size() != names.size() || d2.size() != names.size())
        throw domain_error("divisor vector length mismatch");
    long acc = 0;
    for (size_t i = 0; i < names.size(); ++i) {
        if (d1[i] == 0) continue;
        for (size_t j = 0; j < names.size(); ++j) acc += d1[i] * inter[i][j] * d2[j];
    }
    return acc;
}

void DivisorLattice::blow_up(
    const std::string& exceptional_name,
    const std::vector<std::pair<int, long>>& center_multiplicities) {
    const size_t n = names.size();
    std::vector<long> mult(n, 0);
    for (const auto& [idx, m] : center_multiplicities) {
        if (idx < 0 || idx >= size()) throw domain_error("blow_up: bad class index");
        mult[static_cast<size_t>(idx)] = m;
    }
    // Strict transforms: K'·L' = K·L − m_K·m_L, K'·E = m_K, E² = −1.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inter[i][j] -= mult[i] * mult[j];
    names.push_back(exceptional_name);
    for (size_t i = 0; i < n; ++i) inter[i].push_back(mult[i]);
    std::vector<long> row(mult);
    row.push_back(-1);
    inter.push_back(std::move(row));
}

ResolutionResult resolve_cusp(long c_self) {
    DivisorLattice lat;
    lat.names = {"E3"};  // the curve; its strict transform keeps this name
    lat.inter = {{c_self}};

    // Multiplicity sequence (2, 1, 1) of an ordinary cusp. The second and
    // third centers also lie on the earlier exceptional curves.
    lat.blow_up("E2", {{0, 2}});
    lat.blow_up("E1", {{0, 1}, {1, 1}});
    lat.blow_up("C1", {{0, 1}, {1, 1}, {2, 1}});

    // π*C accumulates the center multiplicities of the total transforms:
    // strict transform + 2·E2 + (1+2)·E1 + (1+2+3)·C1.
    std::vector<long> pullback(4, 0);
    pullback[static_cast<size_t>(lat.index_of("E3"))] = 1;
    pullback[static_cast<size_t>(lat.index_of("E2"))] = 2;
    pullback[static_cast<size_t>(lat.index_of("E1"))] = 3;
    pullback[static_cast<size_t>(lat.index_of("C1"))] = 6;
    return {std::move(lat), std::move(pullback)};
}

std::map<std::string, long> self_intersections(const DivisorLattice& lattice) {
    std::map<std::string, long> out;
    for (int i = 0; i < lattice.size(); ++i)
        out[lattice.names[static_cast<size_t>(i)]] = lattice.self_intersection(i);
    return out;
}

CoverConfig CoverConfig::standard_sixfold() {
    CoverConfig cfg;
    cfg.degree = 6;
    cfg.families = {{"C1", 1, 1, 6, false},
                    {"E1", 3, 2, 1, true},
                    {"E2", 2, 3, 1, true},
                    {"E3", 1, 6, 1, true}};
    return cfg;
}

CoverResult cover_pullback(const ResolutionResult& downstairs, const CoverConfig& cfg) {
    const DivisorLattice& down = downstairs.lattice;
    if (cfg.degree <= 0) throw config_error("cover degree must be positive");

    std::vector<int> family_of_class(static_cast<size_t>(down.size()), -1);
    for (size_t fi = 0; fi < cfg.families.size(); ++fi) {
        const CoverFamily& fam = cfg.families[fi];
        if (fam.components <= 0 || fam.ramification <= 0 || fam.map_degree <= 0)
            throw config_error("cover family over " + fam.base +
                               ": counts must be positive");
        if (fam.components * fam.ramification * fam.map_degree != cfg.degree)
            throw config_error(
                "cover family over " + fam.base +
                ": components·ramification·map_degree must equal the covering degree");
        int idx = down.index_of(fam.base);
        if (family_of_class[static_cast<size_t>(idx)] != -1)
            throw config_error("duplicate cover family over " + fam.base);
        family_of_class[static_cast<size_t>(idx)] = static_cast<int>(fi);
    }
    for (int i = 0; i < down.size(); ++i)
        if (family_of_class[static_cast<size_t>(i)] == -1)
            throw config_error("no cover family over " + down.names[static_cast<size_t>(i)]);

    CoverResult up;
    std::vector<std::vector<int>> comp_indices(cfg.families.size());
    for (size_t fi = 0; fi < cfg.families.size(); ++fi) {
        const CoverFamily& fam = cfg.families[fi];
        for (int c = 0; c < fam.components; ++c) {
            std::string name = fam.components == 1
                                   ? "p(" + fam.base + ")"
                                   : fam.base + "~" + std::to_string(c + 1);
            comp_indices[fi].push_back(static_cast<int>(up.lattice.names.size()));
            up.lattice.names.push_back(std::move(name));
            up.contract_candidate.push_back(fam.contractible);
        }
    }
    const int n_up = static_cast<int>(up.lattice.names.size());
    up.lattice.inter.assign(static_cast<size_t>(n_up),
                            std::vector<long>(static_cast<size_t>(n_up), 0));

    // Components of one family are pairwise disjoint; intersections follow
    // from p*A·p*B = degree·(A·B) distributed symmetrically over components.
    for (size_t fa = 0; fa < cfg.families.size(); ++fa) {
        for (size_t fb = 0; fb < cfg.families.size(); ++fb) {
            const CoverFamily& A = cfg.families[fa];
            const CoverFamily& B = cfg.families[fb];
            long down_ab =
                down.inter[static_cast<size_t>(down.index_of(A.base))]
                          [static_cast<size_t>(down.index_of(B.base))];
            if (fa == fb) {
                long num = cfg.degree * down_ab;
                long den = A.ramification * A.ramification * A.components;
                if (num % den != 0)
                    throw config_error("cover family over " + A.base +
                                       ": ramification-inconsistent self-intersection");
                long self = num / den;
                for (int c : comp_indices[fa])
                    up.lattice.inter[static_cast<size_t>(c)][static_cast<size_t>(c)] = self;
            } else {
                long num = cfg.degree * down_ab;
                long den = A.ramification * B.ramification *
                           static_cast<long>(A.components) * B.components;
                if (num % den != 0)
                    throw config_error("cover families over " + A.base + " and " +
                                       B.base + ": ramification-inconsistent pairing");
                long cross = num / den;
                for (int ca : comp_indices[fa])
                    for (int cb : comp_indices[fb])
                        up.lattice.inter[static_cast<size_t>(ca)][static_cast<size_t>(cb)] = cross;
            }
        }
    }

    // p*D and the reduced divisor D̃.
    up.pullback_divisor.assign(static_cast<size_t>(n_up), 0);
    up.d_tilde.assign(static_cast<size_t>(n_up), 0);
    for (size_t fi = 0; fi < cfg.families.size(); ++fi) {
        const CoverFamily& fam = cfg.families[fi];
        long down_coeff =
            downstairs.pullback_divisor[static_cast<size_t>(down.index_of(fam.base))];
        for (int c : comp_indices[fi]) {
            up.pullback_divisor[static_cast<size_t>(c)] = down_coeff * fam.ramification;
            up.d_tilde[static_cast<size_t>(c)] = 1;
        }
    }
    for (size_t i = 0; i < up.pullback_divisor.size(); ++i)
        if (up.pullback_divisor[i] != cfg.degree * up.d_tilde[i])
            throw config_error("pullback is not degree times the reduced divisor: p*D ≠ " +
                               std::to_string(cfg.degree) + "·D̃");

    // Degree consistency of the projection formula on the pullback itself.
    long up_sq = up.lattice.pairing(up.pullback_divisor, up.pullback_divisor);
    long down_sq =
        down.pairing(downstairs.pullback_divisor, downstairs.pullback_divisor);
    if (up_sq != cfg.degree * down_sq)
        throw config_error("projection formula fails: (p*D)² ≠ degree·D²");
    return up;
}

ContractionReport contract_chain(const CoverResult& upstairs) {
    DivisorLattice lat = upstairs.lattice;
    std::vector<bool> candidate = upstairs.contract_candidate;
    ContractionReport report;

    while (true) {
        int found = -1;
        for (int i = 0; i < lat.size(); ++i) {
            if (candidate[static_cast<size_t>(i)] && lat.self_intersection(i) == -1) {
                found = i;
                break;
            }
        }
        if (found == -1) {
            bool remaining = false;
            for (size_t i = 0; i < candidate.size(); ++i) remaining |= candidate[i];
            if (remaining)
                throw contraction_stuck_error(
                    "no (−1)-class available among the remaining exceptional "
                    "components");
            break;
        }
        // Blow-down update: L·M gains (L·E)(M·E); then drop E.
        const size_t e = static_cast<size_t>(found);
        const size_t n = lat.names.size();
        for (size_t i = 0; i < n; ++i) {
            if (i == e) continue;
            for (size_t j = 0; j < n; ++j) {
                if (j == e) continue;
                lat.inter[i][j] += lat.inter[i][e] * lat.inter[j][e];
            }
        }
        report.contracted.push_back(lat.names[e]);
        lat.names.erase(lat.names.begin() + found);
        candidate.erase(candidate.begin() + found);
        for (size_t i = 0; i < n; ++i)
            lat.inter[i].erase(lat.inter[i].begin() + found);
        lat.inter.erase(lat.inter.begin() + found);
    }

    report.final_lattice = lat;
    // The image of p⁻¹(C1) is the first remaining non-candidate class.
    if (lat.size() == 0)
        throw contraction_stuck_error("contraction removed every class");
    report.final_self_intersection = lat.self_intersection(0);
    return report;
}

Rational ell_from_type(long n_bar) {
    if (n_bar < 1) throw domain_error("ell_from_type: n̄ must be ≥ 1");
    return make_rat(n_bar, 6);
}

}  // namespace ueda
