#pragma once

#include <cstdint>
#include <string>

#include "fictus/errors.hpp"

namespace fictus {

// Knobs of the whole pipeline.  Every field has a CLI flag of the same
// name; data-file locations are resolved separately (see pools.hpp).
struct gen_config {
    int universe_size = 50;          // n: number of persons
    uint64_t seed = 1;
    int num_trees = 0;               // 0 = ceil(n / 25)
    int max_tree_depth = 5;          // generations per family tree
    int max_offspring = 4;           // children per person
    double avg_friendships = 5.0;    // expected friendship degree
    int year_min = 200;              // birth-year window for unconstrained persons
    int year_max = 1100;
    int min_parent_gap = 18;         // child is 18..45 years younger than a parent
    int max_parent_gap = 45;
    int spouse_gap = 10;             // spouses' birth years differ by at most this
    bool unique_names = true;
    double child_move_prob = 0.5;    // forest growth: child move vs parent-couple move
    int question_depth = 20;         // d: CFG recursion depth
    int questions_per_template = 10;
    bool allow_empty_answers = false;
    bool family_verbose = false;     // add aggregate parent/sibling/child sentences

    int effective_num_trees() const {
        if (num_trees > 0) return num_trees;
        return (universe_size + 24) / 25;
    }

    void validate() const {
        auto fail = [](const std::string& m) { throw error(errc::invalid_config, m); };
        if (universe_size < 1) fail("universe_size must be >= 1");
        if (effective_num_trees() < 1 || universe_size < effective_num_trees())
            fail("need universe_size >= num_trees >= 1");
        if (max_tree_depth < 1) fail("max_tree_depth must be >= 1");
        if (max_offspring < 1) fail("max_offspring must be >= 1");
        if (avg_friendships < 0) fail("avg_friendships must be >= 0");
        if (universe_size > 1 && avg_friendships >= universe_size)
            fail("avg_friendships must be < universe_size");
        if (year_min > year_max) fail("year range is empty");
        // generations above/below the root window must stay within 4 digits
        if (year_min - (max_tree_depth - 1) * max_parent_gap < 0 ||
            year_max + (max_tree_depth - 1) * max_parent_gap > 9999)
            fail("year range leaves no room for max_tree_depth generations in 4-digit years");
        if (min_parent_gap < 1) fail("min_parent_gap must be >= 1");
        if (max_parent_gap <= min_parent_gap) fail("max_parent_gap must exceed min_parent_gap");
        if (spouse_gap < 0) fail("spouse_gap must be >= 0");
        // keeps every child's birth window non-empty for married parents
        if (spouse_gap > max_parent_gap - min_parent_gap)
            fail("spouse_gap must be <= max_parent_gap - min_parent_gap");
        if (child_move_prob < 0 || child_move_prob > 1) fail("child_move_prob must be in [0, 1]");
        if (question_depth < 1) fail("question_depth must be >= 1");
        if (questions_per_template < 0) fail("questions_per_template must be >= 0");
    }
};

}  // namespace fictus
