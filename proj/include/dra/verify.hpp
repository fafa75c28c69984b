#pragma once

#include "dra/json_io.hpp"
#include "dra/weyl_clifford.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dra::verify {

struct CheckEntry {
    std::string relation;
    std::vector<int> indices;
    std::string status; // "pass" | "fail" | "skipped"
    std::string witness;

    static CheckEntry pass(std::string relation, std::vector<int> indices = {}) {
        return {std::move(relation), std::move(indices), "pass", ""};
    }
    static CheckEntry fail(std::string relation, std::vector<int> indices, std::string witness) {
        return {std::move(relation), std::move(indices), "fail", std::move(witness)};
    }
    static CheckEntry skip(std::string relation, std::vector<int> indices, std::string why) {
        return {std::move(relation), std::move(indices), "skipped", std::move(why)};
    }
};

struct SuiteReport {
    std::string suite;
    Json params = Json::object();
    std::vector<CheckEntry> entries;

    int failures() const;
    int skips() const;
    bool passed() const { return failures() == 0; }
    Json to_json() const;
    /// One line per entry plus a summary line.
    std::string summary() const;
};

/// osp(1|2) relations under the oscillator embedding plus the raising /
/// lowering bracket identities.
SuiteReport osp_suite(const Algebra& alg);

/// Adjoint-action table: the nine [X,.], [Y,.], [H,.] identities.
SuiteReport adjoint_suite(const Algebra& alg);

/// phi_k: recursion vs closed form for k <= max_k, pinned low-order values,
/// and the kappa shift identity.
SuiteReport projector_coeff_suite(int max_k);

/// Truncated projector on V: X P_N = P_N Y = 0 up to max_degree and
/// P_N(v) = (H+1)...(H+k) v on oracle kernel bases.
SuiteReport projector_module_suite(const Algebra& alg, int max_degree);

/// Generator diamond products against their displayed forms.
SuiteReport diamond_suite(const Algebra& alg);

/// Reduction-algebra presentation relations (a)-(g), checked semantically
/// at the given degree bound.
SuiteReport presentation_suite(const Algebra& alg, int degree_bound);

/// Bracket symbol identities: expansion invariance, the gamma-pair reduction,
/// ad(X) closed forms, iterated ad(X) powers; all index tuples up to max_m.
SuiteReport brackets_suite(const Algebra& alg, int max_m);

/// hat_x product closed form vs m-fold composition on all degree-0 gamma
/// monomials for word lengths <= max_m.
SuiteReport product_suite(const Algebra& alg, int max_m);

/// Closed-form solutions: Dirac annihilation, leading term, right Clifford
/// factor, composition oracle; all sorted index words up to max_m.
SuiteReport solutions_suite(const Algebra& alg, int max_m);

/// Spanning (generated solutions = oracle kernel), reconstruction round
/// trips on random kernel combinations, and top-coefficient extraction.
SuiteReport cyclicity_suite(const Algebra& alg, int max_degree, std::uint64_t seed,
                            int round_trips);

} // namespace dra::verify
