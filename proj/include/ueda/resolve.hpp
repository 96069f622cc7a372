#pragma once

#include <map>
#include <string>
#include <vector>

#include "ueda/scalar.hpp"

namespace ueda {

/// Integer divisor lattice over a named class basis with its symmetric
/// intersection matrix. Divisors are integer vectors over the basis.
struct DivisorLattice {
    std::vector<std::string> names;
    std::vector<std::vector<long>> inter;  // symmetric

    int size() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;
    long pairing(const std::vector<long>& d1, const std::vector<long>& d2) const;
    long self_intersection(int idx) const { return inter[static_cast<size_t>(idx)][static_cast<size_t>(idx)]; }

    /// Blow-up at a point lying on the listed classes with the given
    /// multiplicities: appends the exceptional class and applies the
    /// total-transform-minus-multiplicity rules to the strict transforms.
    void blow_up(const std::string& exceptional_name,
                 const std::vector<std::pair<int, long>>& center_multiplicities);
};

/// One family of the covering data: the components over a single downstairs
/// class, with common ramification index and mapping degree.
struct CoverFamily {
    std::string base;
    int components = 1;
    long ramification = 1;
    long map_degree = 1;
    bool contractible = true;  // participates in the (−1)-contraction chain
};

struct CoverConfig {
    long degree = 6;
    std::vector<CoverFamily> families;

    static CoverConfig standard_sixfold();
};

struct ResolutionResult {
    DivisorLattice lattice;
    std::vector<long> pullback_divisor;  // π*C over the final basis
};

/// The three standard blow-ups of an ordinary cusp (multiplicity sequence
/// 2, 1, 1) on a curve of the given self-intersection. Classes are named
/// C1, E1, E2 (exceptional, by pullback multiplicity 6, 3, 2) and E3
/// (the strict transform of the curve).
ResolutionResult resolve_cusp(long c_self);

std::map<std::string, long> self_intersections(const DivisorLattice& lattice);

struct CoverResult {
    DivisorLattice lattice;
    std::vector<long> d_tilde;            // the reduced divisor upstairs
    std::vector<long> pullback_divisor;   // p*D
    std::vector<bool> contract_candidate;
};

/// Builds the upstairs lattice from the covering configuration, checks
/// p*D = degree·D̃ and that intersection numbers scale by the degree.
CoverResult cover_pullback(const ResolutionResult& downstairs, const CoverConfig& cfg);

struct ContractionReport {
    std::vector<std::string> contracted;  // in contraction order
    long final_self_intersection = 0;     // of the image of p⁻¹(C1)
    DivisorLattice final_lattice;
};

/// Iteratively contracts (−1)-classes among the exceptional components and
/// reports the chain; for the standard configuration this is 6 contractions
/// ending with self-intersection 0.
ContractionReport contract_chain(const CoverResult& upstairs);

/// ℓ = n̄/6 for the type n̄ of the elliptic-side pair.
Rational ell_from_type(long n_bar);

}  // namespace ueda
