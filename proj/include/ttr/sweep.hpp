#ifndef TTR_SWEEP_HPP
#define TTR_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ttr::sweep {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

CriterionResult family_tables(int cap);
CriterionResult clique_union_lemma(int cap);
CriterionResult tree_algorithm_vs_oracle(int cap);
CriterionResult non_monotone_witnesses(int cap);
CriterionResult bound_suite(uint64_t seed, int cap);
CriterionResult bcg_suite(uint64_t seed, int cap);
CriterionResult gadget_suite(int cap);

/// All criteria in order. Graphs above the oracle cap are never solved
/// exactly; construction-only checks cover them.
std::vector<CriterionResult> run_all(uint64_t seed, int cap);

} // namespace ttr::sweep

#endif
