#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdml/error.hpp"
#include "pdml/rng.hpp"

namespace pdml {

struct SplitPlan {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
    std::uint64_t seed = 0;
    double test_fraction = 0.0;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> indices_by_class(const std::vector<int>& y) {
    std::vector<std::vector<std::size_t>> by_class(2);
    for (std::size_t i = 0; i < y.size(); ++i) by_class[static_cast<std::size_t>(y[i])].push_back(i);
    return by_class;
}

} // namespace detail

// Deterministic stratified holdout. Per-class test counts are
// round(class_count * fraction), then adjusted by at most one record per
// class (largest class first) to hit the global target round(n * fraction).
inline SplitPlan stratified_split(const std::vector<int>& y, double test_fraction, std::uint64_t seed) {
    if (test_fraction <= 0.0 || test_fraction >= 1.0)
        fail(errc::usage_error, "stratified_split: test_fraction must be in (0, 1)");
    auto by_class = detail::indices_by_class(y);
    if (by_class[0].empty() || by_class[1].empty())
        fail(errc::class_absent, "stratified_split: both classes must be present");

    const auto global_target =
        static_cast<std::size_t>(std::lround(static_cast<double>(y.size()) * test_fraction));
    std::vector<std::size_t> take(2);
    for (int c = 0; c < 2; ++c)
        take[c] = static_cast<std::size_t>(
            std::lround(static_cast<double>(by_class[c].size()) * test_fraction));

    // reconcile rounding against the global target, touching each class at
    // most once, larger class first
    std::vector<int> class_order = by_class[0].size() >= by_class[1].size() ? std::vector<int>{0, 1}
                                                                            : std::vector<int>{1, 0};
    std::size_t sum = take[0] + take[1];
    for (int c : class_order) {
        if (sum < global_target && take[c] < by_class[c].size()) {
            ++take[c];
            ++sum;
        } else if (sum > global_target && take[c] > 0) {
            --take[c];
            --sum;
        }
    }

    SplitPlan plan;
    plan.seed = seed;
    plan.test_fraction = test_fraction;
    for (int c = 0; c < 2; ++c) {
        auto idx = by_class[c];
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c)));
        rng.shuffle(idx);
        for (std::size_t i = 0; i < idx.size(); ++i)
            (i < take[c] ? plan.test : plan.train).push_back(idx[i]);
    }
    std::sort(plan.train.begin(), plan.train.end());
    std::sort(plan.test.begin(), plan.test.end());
    return plan;
}

// k disjoint folds covering all rows; classes are dealt round-robin so each
// fold's class proportions sit within one record of the global proportions.
inline std::vector<SplitPlan> stratified_kfold(const std::vector<int>& y, std::size_t k, std::uint64_t seed) {
    if (k < 2) fail(errc::usage_error, "stratified_kfold: k must be at least 2");
    auto by_class = detail::indices_by_class(y);
    for (int c = 0; c < 2; ++c)
        if (by_class[c].size() < k)
            fail(errc::class_too_small, "stratified_kfold: class " + std::to_string(c) + " has fewer than k members");

    std::vector<std::vector<std::size_t>> folds(k);
    for (int c = 0; c < 2; ++c) {
        auto idx = by_class[c];
        Rng rng(derive_seed(seed, 100 + static_cast<std::uint64_t>(c)));
        rng.shuffle(idx);
        for (std::size_t i = 0; i < idx.size(); ++i) folds[i % k].push_back(idx[i]);
    }

    std::vector<SplitPlan> plans(k);
    for (std::size_t f = 0; f < k; ++f) {
        plans[f].seed = seed;
        plans[f].test_fraction = 1.0 / static_cast<double>(k);
        plans[f].test = folds[f];
        for (std::size_t g = 0; g < k; ++g)
            if (g != f) plans[f].train.insert(plans[f].train.end(), folds[g].begin(), folds[g].end());
        std::sort(plans[f].train.begin(), plans[f].train.end());
        std::sort(plans[f].test.begin(), plans[f].test.end());
    }
    return plans;
}

// Optional subject-grouped holdout: rows sharing an identifier prefix (the
// identifier up to its last '_') always land on the same side. Provided for
// leakage experiments; the reproduction runs use the record-level split.
inline SplitPlan grouped_split(const std::vector<std::string>& names, double test_fraction, std::uint64_t seed) {
    if (test_fraction <= 0.0 || test_fraction >= 1.0)
        fail(errc::usage_error, "grouped_split: test_fraction must be in (0, 1)");
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto pos = names[i].rfind('_');
        groups[pos == std::string::npos ? names[i] : names[i].substr(0, pos)].push_back(i);
    }
    std::vector<std::string> keys;
    for (const auto& [key, rows] : groups) keys.push_back(key);
    Rng rng(derive_seed(seed, 7));
    rng.shuffle(keys);

    SplitPlan plan;
    plan.seed = seed;
    plan.test_fraction = test_fraction;
    const auto target = static_cast<std::size_t>(std::lround(static_cast<double>(names.size()) * test_fraction));
    std::size_t in_test = 0;
    for (const auto& key : keys) {
        auto& rows = groups[key];
        if (in_test < target) {
            plan.test.insert(plan.test.end(), rows.begin(), rows.end());
            in_test += rows.size();
        } else {
            plan.train.insert(plan.train.end(), rows.begin(), rows.end());
        }
    }
    std::sort(plan.train.begin(), plan.train.end());
    std::sort(plan.test.begin(), plan.test.end());
    return plan;
}

inline nlohmann::json split_to_json(const SplitPlan& p) {
    return nlohmann::json{{"seed", p.seed},
                          {"test_fraction", p.test_fraction},
                          {"train", p.train},
                          {"test", p.test}};
}

inline SplitPlan split_from_json(const nlohmann::json& j) {
    SplitPlan p;
    p.seed = j.at("seed").get<std::uint64_t>();
    p.test_fraction = j.at("test_fraction").get<double>();
    p.train = j.at("train").get<std::vector<std::size_t>>();
    p.test = j.at("test").get<std::vector<std::size_t>>();
    return p;
}

// FNV-1a over the test then train indices; identifies a split in provenance
// records.
inline std::string split_hash(const SplitPlan& p) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffULL;
            h *= 0x100000001b3ULL;
        }
    };
    for (auto i : p.test) mix(i);
    mix(0xffffffffffffffffULL);
    for (auto i : p.train) mix(i);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace pdml
