#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "equitab/basis_vector.hpp"
#include "equitab/skew_shape.hpp"

namespace equitab {

inline constexpr const char* kEngineVersion = "equitab-1.0";

enum class BasisKind { Schur, H };

/// Persistent storage for expansions keyed by canonical composition.
/// Implementations need not be thread-safe; the engine serializes access.
class ExpansionStore {
public:
    virtual ~ExpansionStore() = default;
    virtual std::optional<SchurVector::Terms> load(const Composition& key, BasisKind basis) = 0;
    virtual void save(const Composition& key, BasisKind basis, const SchurVector::Terms& terms) = 0;
};

struct EngineConfig {
    int cell_guard = 40;
    std::int64_t poset_guard = 3003;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
    bool memoize = true;
};

/// Ribbon expansions with a shared memo keyed by min(alpha, alpha*).
/// Safe for concurrent use.
class Engine {
public:
    explicit Engine(EngineConfig config = {}, std::shared_ptr<ExpansionStore> store = nullptr);

    const EngineConfig& config() const noexcept { return config_; }
    unsigned thread_count() const noexcept;

    SchurVector ribbon_schur(const Composition& alpha);
    HVector ribbon_h(const Composition& alpha);
    SchurVector lr_expand(const SkewShape& shape) const;
    /// r_alpha r_beta as the expansion of the two ribbons placed apart.
    SchurVector product_expand(const Composition& alpha, const Composition& beta) const;

    std::size_t memo_size() const;

private:
    void check_cells(int cells) const;

    EngineConfig config_;
    std::shared_ptr<ExpansionStore> store_;
    mutable std::shared_mutex memo_mutex_;
    std::map<Composition, SchurVector> schur_memo_;
    std::map<Composition, HVector> h_memo_;
    std::mutex store_mutex_;
};

}  // namespace equitab
