#include "equitab/engine.hpp"

#include <thread>

#include "equitab/error.hpp"
#include "equitab/lr.hpp"
#include "equitab/symmetric.hpp"

namespace equitab {

namespace {

template <class Vec>
Vec from_terms(const SchurVector::Terms& terms) {
    Vec v;
    for (const auto& [p, c] : terms) v.add(p, c);
    return v;
}

template <class Vec>
SchurVector::Terms to_terms(const Vec& v) {
    SchurVector::Terms t;
    for (const auto& [p, c] : v) t.emplace(p, c);
    return t;
}

}  // namespace

Engine::Engine(EngineConfig config, std::shared_ptr<ExpansionStore> store)
    : config_(config), store_(std::move(store)) {
    require(config_.cell_guard >= 1, "cell guard must be at least 1");
    require(config_.poset_guard >= 1, "poset guard must be at least 1");
}

unsigned Engine::thread_count() const noexcept {
    if (config_.threads > 0) return config_.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void Engine::check_cells(int cells) const {
    if (cells > config_.cell_guard)
        fail(ErrorKind::Resource, "expansion of " + std::to_string(cells) + " cells exceeds the cell guard of " +
                                      std::to_string(config_.cell_guard));
}

SchurVector Engine::ribbon_schur(const Composition& alpha) {
    check_cells(alpha.size());
    const Composition key = canonical(alpha);
    if (config_.memoize) {
        std::shared_lock lock(memo_mutex_);
        if (auto it = schur_memo_.find(key); it != schur_memo_.end()) return it->second;
    }
    std::optional<SchurVector> result;
    if (store_) {
        std::lock_guard lock(store_mutex_);
        if (auto terms = store_->load(key, BasisKind::Schur)) result = from_terms<SchurVector>(*terms);
    }
    if (!result) {
        result = equitab::lr_expand(ribbon_to_skew(key), config_.cell_guard);
        if (store_) {
            std::lock_guard lock(store_mutex_);
            store_->save(key, BasisKind::Schur, to_terms(*result));
        }
    }
    if (config_.memoize) {
        std::unique_lock lock(memo_mutex_);
        schur_memo_.emplace(key, *result);
    }
    return *result;
}

HVector Engine::ribbon_h(const Composition& alpha) {
    check_cells(alpha.size());
    const Composition key = canonical(alpha);
    if (config_.memoize) {
        std::shared_lock lock(memo_mutex_);
        if (auto it = h_memo_.find(key); it != h_memo_.end()) return it->second;
    }
    std::optional<HVector> result;
    if (store_) {
        std::lock_guard lock(store_mutex_);
        if (auto terms = store_->load(key, BasisKind::H)) result = from_terms<HVector>(*terms);
    }
    if (!result) {
        result = h_expand_ribbon(key);
        if (store_) {
            std::lock_guard lock(store_mutex_);
            store_->save(key, BasisKind::H, to_terms(*result));
        }
    }
    if (config_.memoize) {
        std::unique_lock lock(memo_mutex_);
        h_memo_.emplace(key, *result);
    }
    return *result;
}

SchurVector Engine::lr_expand(const SkewShape& shape) const {
    check_cells(shape.cell_count());
    return equitab::lr_expand(shape, config_.cell_guard);
}

SchurVector Engine::product_expand(const Composition& alpha, const Composition& beta) const {
    check_cells(alpha.size() + beta.size());
    return equitab::lr_expand(disjoint_stack(ribbon_to_skew(alpha), ribbon_to_skew(beta)), config_.cell_guard);
}

std::size_t Engine::memo_size() const {
    std::shared_lock lock(memo_mutex_);
    return schur_memo_.size() + h_memo_.size();
}

}  // namespace equitab
