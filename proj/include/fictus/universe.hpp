#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fictus/config.hpp"
#include "fictus/errors.hpp"
#include "fictus/parallel.hpp"
#include "fictus/pools.hpp"
#include "fictus/rng.hpp"

namespace fictus {

enum class gender_t : uint8_t { female, male };

inline const char* gender_word(gender_t g) { return g == gender_t::female ? "female" : "male"; }

struct date {
    int year = 0;
    int month = 1;
    int day = 1;

    std::string to_string() const {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
        return buf;
    }
};

struct person {
    int id = -1;
    std::string first_name;
    std::string surname;
    gender_t gender = gender_t::female;
    date dob;
    std::string occupation;
    std::string hobby;

    std::string full_name() const { return first_name + " " + surname; }
};

// One generated world.  parents_of/spouse_of are denormalized views of
// parent_edges/marriage_edges kept in sync by the generator.
struct universe {
    std::vector<person> persons;
    std::vector<std::pair<int, int>> parent_edges;    // (parent, child)
    std::vector<std::pair<int, int>> marriage_edges;  // (a, b) with a < b
    std::vector<std::pair<int, int>> friend_edges;    // (a, b) with a < b
    std::vector<int> tree_assignment;
    std::vector<std::array<int, 2>> parents_of;  // {father, mother}, -1 when absent
    std::vector<int> spouse_of;                  // -1 when unmarried

    int size() const { return static_cast<int>(persons.size()); }
};

namespace detail {

inline int days_in_month(int month) {
    static const int days[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return days[month - 1];
}

struct growing_tree {
    struct node {
        gender_t g;
        int level;
        int father = -1;
        int mother = -1;
        int spouse = -1;
        int kids = 0;
    };
    std::vector<node> nodes;
    int min_level = 0;
    int max_level = 0;

    int height() const { return max_level - min_level + 1; }

    int add(gender_t g, int level) {
        nodes.push_back(node{g, level});
        min_level = std::min(min_level, level);
        max_level = std::max(max_level, level);
        return static_cast<int>(nodes.size()) - 1;
    }
};

// Worklist growth: pick a person, attach either a child (creating a
// spouse for a single parent) or a parent couple, within the offspring
// and depth bounds, until the tree reaches its person quota exactly.
inline growing_tree grow_tree(const gen_config& cfg, int quota, split_mix64& rng) {
    growing_tree t;
    auto random_gender = [&] { return rng.below(2) == 0 ? gender_t::female : gender_t::male; };
    auto opposite = [](gender_t g) { return g == gender_t::female ? gender_t::male : gender_t::female; };

    t.add(random_gender(), 0);

    auto can_grow_down = [&](int i) {
        return t.nodes[i].level < t.max_level || t.height() < cfg.max_tree_depth;
    };
    auto can_grow_up = [&](int i) {
        return t.nodes[i].level > t.min_level || t.height() < cfg.max_tree_depth;
    };
    auto child_feasible = [&](int i, int remaining) {
        const auto& n = t.nodes[i];
        if (n.kids >= cfg.max_offspring || !can_grow_down(i)) return false;
        if (n.spouse >= 0 && t.nodes[n.spouse].kids >= cfg.max_offspring) return false;
        return remaining >= (n.spouse >= 0 ? 1 : 2);
    };
    auto parents_feasible = [&](int i, int remaining) {
        const auto& n = t.nodes[i];
        return n.father < 0 && can_grow_up(i) && remaining >= 2;
    };
    auto apply_child = [&](int i) {
        if (t.nodes[i].spouse < 0) {
            int s = t.add(opposite(t.nodes[i].g), t.nodes[i].level);
            t.nodes[i].spouse = s;
            t.nodes[s].spouse = i;
        }
        int s = t.nodes[i].spouse;
        int c = t.add(random_gender(), t.nodes[i].level + 1);
        int father = t.nodes[i].g == gender_t::male ? i : s;
        int mother = t.nodes[i].g == gender_t::male ? s : i;
        t.nodes[c].father = father;
        t.nodes[c].mother = mother;
        t.nodes[i].kids++;
        t.nodes[s].kids++;
    };
    auto apply_parents = [&](int i) {
        int lvl = t.nodes[i].level - 1;
        int f = t.add(gender_t::male, lvl);
        int m = t.add(gender_t::female, lvl);
        t.nodes[f].spouse = m;
        t.nodes[m].spouse = f;
        t.nodes[f].kids = t.nodes[m].kids = 1;
        t.nodes[i].father = f;
        t.nodes[i].mother = m;
    };

    while (static_cast<int>(t.nodes.size()) < quota) {
        int count = static_cast<int>(t.nodes.size());
        int remaining = quota - count;
        bool applied = false;
        for (int attempt = 0; attempt < 8 * count + 32; ++attempt) {
            int i = static_cast<int>(rng.below(count));
            if (rng.chance(cfg.child_move_prob)) {
                if (child_feasible(i, remaining)) {
                    apply_child(i);
                    applied = true;
                    break;
                }
            } else if (parents_feasible(i, remaining)) {
                apply_parents(i);
                applied = true;
                break;
            }
        }
        if (applied) continue;

        // Rejection budget exhausted: scan for any feasible move.
        std::vector<std::pair<int, int>> feasible;  // (person, move): 0 child, 1 parents
        for (int i = 0; i < count; ++i) {
            if (child_feasible(i, remaining)) feasible.emplace_back(i, 0);
            if (parents_feasible(i, remaining)) feasible.emplace_back(i, 1);
        }
        if (!feasible.empty()) {
            auto [i, move] = feasible[rng.below(feasible.size())];
            move == 0 ? apply_child(i) : apply_parents(i);
            continue;
        }
        // Last resort: marry off an unmarried person so the quota can
        // still be met exactly.
        int single = -1;
        for (int i = 0; i < count; ++i)
            if (t.nodes[i].spouse < 0) {
                single = i;
                break;
            }
        if (single < 0)
            throw error(errc::config_infeasible,
                        "tree cannot reach quota " + std::to_string(quota) +
                            " under depth/offspring bounds");
        int s = t.add(opposite(t.nodes[single].g), t.nodes[single].level);
        t.nodes[single].spouse = s;
        t.nodes[s].spouse = single;
    }
    return t;
}

}  // namespace detail

inline std::vector<int> tree_quotas(const gen_config& cfg) {
    int n = cfg.universe_size;
    int trees = cfg.effective_num_trees();
    std::vector<int> quotas(trees, n / trees);
    for (int t = 0; t < n % trees; ++t) quotas[t]++;
    return quotas;
}

// Builds persons (ids, genders) and family structure; names and
// attributes are attached by the later passes.
inline universe generate_family_forest(const gen_config& cfg, unsigned threads = 0) {
    cfg.validate();
    auto quotas = tree_quotas(cfg);
    int trees = static_cast<int>(quotas.size());
    std::vector<int> offsets(trees, 0);
    for (int t = 1; t < trees; ++t) offsets[t] = offsets[t - 1] + quotas[t - 1];

    if (cfg.max_tree_depth == 1) {
        for (int q : quotas)
            if (q > 2)
                throw error(errc::config_infeasible,
                            "max_tree_depth 1 cannot host a tree of " + std::to_string(q));
    }

    universe u;
    int n = cfg.universe_size;
    u.persons.resize(n);
    u.tree_assignment.resize(n);
    u.parents_of.assign(n, {-1, -1});
    u.spouse_of.assign(n, -1);

    std::vector<detail::growing_tree> grown(trees);
    parallel_for(trees, threads, [&](size_t t) {
        split_mix64 rng(derive_seed(cfg.seed, stream_tag::tree, t));
        grown[t] = detail::grow_tree(cfg, quotas[t], rng);
    });

    for (int t = 0; t < trees; ++t) {
        const auto& tree = grown[t];
        int off = offsets[t];
        for (int i = 0; i < static_cast<int>(tree.nodes.size()); ++i) {
            const auto& nd = tree.nodes[i];
            int gid = off + i;
            u.persons[gid].id = gid;
            u.persons[gid].gender = nd.g;
            u.tree_assignment[gid] = t;
            if (nd.father >= 0) u.parents_of[gid] = {off + nd.father, off + nd.mother};
            if (nd.spouse >= 0) u.spouse_of[gid] = off + nd.spouse;
        }
        for (int i = 0; i < static_cast<int>(tree.nodes.size()); ++i) {
            const auto& nd = tree.nodes[i];
            int gid = off + i;
            if (nd.father >= 0) {
                u.parent_edges.emplace_back(off + nd.father, gid);
                u.parent_edges.emplace_back(off + nd.mother, gid);
            }
            if (nd.spouse > i) u.marriage_edges.emplace_back(gid, off + nd.spouse);
        }
    }
    return u;
}

// Erdos-Renyi friendships: every unordered pair is included
// independently with probability avg_friendships / (n - 1).  Row i draws
// from its own sub-stream, so rows can be filled on any thread.
inline void generate_friendships(universe& u, const gen_config& cfg, unsigned threads = 0) {
    int n = u.size();
    u.friend_edges.clear();
    if (n < 2 || cfg.avg_friendships <= 0) return;
    double p = cfg.avg_friendships / static_cast<double>(n - 1);
    bool all = p >= 1.0;
    // 53-bit threshold keeps the comparison integral and portable
    uint64_t threshold = all ? 0 : static_cast<uint64_t>(p * 9007199254740992.0);

    std::vector<std::vector<int>> fwd(n);
    parallel_for(n, threads, [&](size_t i) {
        if (all) {
            fwd[i].reserve(n - 1 - i);
            for (int j = static_cast<int>(i) + 1; j < n; ++j) fwd[i].push_back(j);
            return;
        }
        split_mix64 rng(derive_seed(cfg.seed, stream_tag::friendship, i));
        for (int j = static_cast<int>(i) + 1; j < n; ++j)
            if ((rng.next() >> 11) < threshold) fwd[i].push_back(j);
    });
    size_t total = 0;
    for (const auto& row : fwd) total += row.size();
    u.friend_edges.reserve(total);
    for (int i = 0; i < n; ++i)
        for (int j : fwd[i]) u.friend_edges.emplace_back(i, j);
}

// Children take the father's surname; a wife takes her husband's.
// Surname roots (parentless men, parentless unmarried women) draw fresh
// surnames from their own streams.
inline void assign_names(universe& u, const gen_config& cfg, const data_pools& pools,
                         unsigned threads = 0) {
    int n = u.size();
    std::vector<int> surname_idx(n, -1);
    // father -> child and husband -> wife links form a DAG; resolve with
    // memoized recursion (iterative to spare the stack on deep trees).
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (surname_idx[start] >= 0) continue;
        stack.push_back(start);
        while (!stack.empty()) {
            int i = stack.back();
            if (surname_idx[i] >= 0) {
                stack.pop_back();
                continue;
            }
            int source = -1;
            if (u.parents_of[i][0] >= 0)
                source = u.parents_of[i][0];  // father
            else if (u.persons[i].gender == gender_t::female && u.spouse_of[i] >= 0)
                source = u.spouse_of[i];
            if (source < 0) {
                split_mix64 rng(derive_seed(cfg.seed, stream_tag::surname, i));
                surname_idx[i] = static_cast<int>(rng.below(pools.surnames.size()));
                stack.pop_back();
            } else if (surname_idx[source] >= 0) {
                surname_idx[i] = surname_idx[source];
                stack.pop_back();
            } else {
                stack.push_back(source);
            }
        }
    }
    for (int i = 0; i < n; ++i) u.persons[i].surname = pools.surnames[surname_idx[i]];

    parallel_for(n, threads, [&](size_t i) {
        split_mix64 rng(derive_seed(cfg.seed, stream_tag::first_name, i));
        const auto& pool =
            u.persons[i].gender == gender_t::female ? pools.female_first : pools.male_first;
        u.persons[i].first_name = pool[rng.below(pool.size())];
    });

    if (!cfg.unique_names) return;
    std::unordered_set<std::string> seen;
    seen.reserve(n * 2);
    for (int i = 0; i < n; ++i) {
        if (seen.insert(u.persons[i].full_name()).second) continue;
        // collision: continue this person's stream past the first draw
        split_mix64 rng(derive_seed(cfg.seed, stream_tag::first_name, i));
        rng.next();
        const auto& pool =
            u.persons[i].gender == gender_t::female ? pools.female_first : pools.male_first;
        bool placed = false;
        for (int tries = 0; tries < 64 && !placed; ++tries) {
            u.persons[i].first_name = pool[rng.below(pool.size())];
            placed = seen.insert(u.persons[i].full_name()).second;
        }
        if (!placed) {
            size_t start = rng.below(pool.size());
            for (size_t k = 0; k < pool.size() && !placed; ++k) {
                u.persons[i].first_name = pool[(start + k) % pool.size()];
                placed = seen.insert(u.persons[i].full_name()).second;
            }
        }
        if (!placed)
            throw error(errc::name_pool_exhausted,
                        "no unique first name left for surname " + u.persons[i].surname);
    }
}

// Dates of birth, occupations, and hobbies.  Birth years are resolved in
// person-id order, which matches creation order: every person was
// created with at most one link into the existing tree (parents, spouse,
// or the anchor child of a retro-added parent couple), so the window cut
// out by already-assigned relatives is never empty.
inline void assign_attributes(universe& u, const gen_config& cfg, const data_pools& pools,
                              unsigned threads = 0) {
    int n = u.size();
    // children with a lower id than a parent: the anchor child of a
    // parent couple that was generated above an existing person
    std::vector<std::vector<int>> anchor_child(n);
    for (int c = 0; c < n; ++c)
        for (int parent : u.parents_of[c])
            if (parent > c) anchor_child[parent].push_back(c);

    auto assign_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            int lo = cfg.year_min, hi = cfg.year_max;
            bool constrained = false;
            auto clip = [&](int a, int b) {
                if (!constrained) {
                    lo = a;
                    hi = b;
                    constrained = true;
                } else {
                    lo = std::max(lo, a);
                    hi = std::min(hi, b);
                }
            };
            for (int parent : u.parents_of[i])
                if (parent >= 0 && parent < i)
                    clip(u.persons[parent].dob.year + cfg.min_parent_gap,
                         u.persons[parent].dob.year + cfg.max_parent_gap);
            if (int s = u.spouse_of[i]; s >= 0 && s < i)
                clip(u.persons[s].dob.year - cfg.spouse_gap, u.persons[s].dob.year + cfg.spouse_gap);
            for (int c : anchor_child[i])
                clip(u.persons[c].dob.year - cfg.max_parent_gap,
                     u.persons[c].dob.year - cfg.min_parent_gap);
            if (lo > hi)
                throw error(errc::invalid_config, "empty birth window for person " + std::to_string(i));
            split_mix64 rng(derive_seed(cfg.seed, stream_tag::dob, i));
            u.persons[i].dob.year = static_cast<int>(rng.between(lo, hi));
            u.persons[i].dob.month = 1 + static_cast<int>(rng.below(12));
            u.persons[i].dob.day =
                1 + static_cast<int>(rng.below(detail::days_in_month(u.persons[i].dob.month)));
        }
    };
    // trees occupy disjoint contiguous id ranges; resolve them in parallel
    std::vector<std::pair<int, int>> ranges;
    for (int i = 0; i < n;) {
        int t = u.tree_assignment[i];
        int j = i;
        while (j < n && u.tree_assignment[j] == t) ++j;
        ranges.emplace_back(i, j);
        i = j;
    }
    parallel_for(ranges.size(), threads,
                 [&](size_t r) { assign_range(ranges[r].first, ranges[r].second); });

    parallel_for(n, threads, [&](size_t i) {
        split_mix64 occ(derive_seed(cfg.seed, stream_tag::occupation, i));
        split_mix64 hob(derive_seed(cfg.seed, stream_tag::hobby, i));
        u.persons[i].occupation = pools.occupations[occ.below(pools.occupations.size())];
        u.persons[i].hobby = pools.hobbies[hob.below(pools.hobbies.size())];
    });
}

inline universe generate_universe(const gen_config& cfg, const data_pools& pools,
                                  unsigned threads = 0) {
    universe u = generate_family_forest(cfg, threads);
    assign_names(u, cfg, pools, threads);
    assign_attributes(u, cfg, pools, threads);
    generate_friendships(u, cfg, threads);
    return u;
}

}  // namespace fictus
