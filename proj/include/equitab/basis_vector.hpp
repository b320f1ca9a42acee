#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>

#include "equitab/checked.hpp"
#include "equitab/composition.hpp"

namespace equitab {

/// Sparse integer combination of basis elements indexed by partitions.
/// Terms iterate in decreasing lexicographic order; zero coefficients are
/// never stored.
template <class Basis>
class BasisVector {
public:
    using Terms = std::map<Partition, std::int64_t, std::greater<Partition>>;
    using Term = std::pair<Partition, std::int64_t>;

    BasisVector() = default;
    BasisVector(std::initializer_list<Term> terms) {
        for (const auto& [p, c] : terms) add(p, c);
    }

    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    std::int64_t coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Partition& p, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (inserted) return;
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }

    /// this += scale * other
    void add_scaled(const BasisVector& other, std::int64_t scale) {
        for (const auto& [p, c] : other.terms_) add(p, checked_mul(c, scale));
    }

    BasisVector& operator+=(const BasisVector& o) { add_scaled(o, 1); return *this; }
    BasisVector& operator-=(const BasisVector& o) { add_scaled(o, -1); return *this; }
    friend BasisVector operator+(BasisVector x, const BasisVector& y) { return x += y; }
    friend BasisVector operator-(BasisVector x, const BasisVector& y) { return x -= y; }

    bool is_nonnegative() const {
        for (const auto& [p, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    std::optional<Term> lex_largest() const {
        if (terms_.empty()) return std::nullopt;
        return *terms_.begin();
    }
    std::optional<Term> lex_least() const {
        if (terms_.empty()) return std::nullopt;
        return *terms_.rbegin();
    }

    friend bool operator==(const BasisVector&, const BasisVector&) = default;

private:
    Terms terms_;
};

struct SchurBasis {};
struct HBasis {};

using SchurVector = BasisVector<SchurBasis>;
using HVector = BasisVector<HBasis>;

}  // namespace equitab
