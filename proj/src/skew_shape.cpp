#include "equitab/skew_shape.hpp"

#include <algorithm>

#include "equitab/error.hpp"

namespace equitab {

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    require(outer_.length() >= inner_.length(), "skew shape: inner partition longer than outer");
    for (std::size_t i = 0; i < inner_.length(); ++i)
        require(outer_[i] >= inner_[i], "skew shape: inner partition not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows(); ++r)
        for (int c = row_first(r); c <= row_last(r); ++c) out.push_back({r, c});
    return out;
}

std::vector<int> SkewShape::row_lengths() const {
    std::vector<int> out;
    for (int r = 1; r <= rows(); ++r) out.push_back(row_last(r) - row_first(r) + 1);
    return out;
}

std::vector<int> SkewShape::column_lengths() const {
    Partition oc = outer_.conjugate();
    Partition ic = inner_.conjugate();
    std::vector<int> out;
    for (std::size_t j = 0; j < oc.length(); ++j) out.push_back(oc[j] - ic.part(j));
    return out;
}

SkewShape ribbon_to_skew(const Composition& alpha) {
    const std::size_t R = alpha.length();
    std::vector<int> outer(R), inner(R);
    int first = 1;
    for (std::size_t k = R; k-- > 0;) {
        inner[k] = first - 1;
        outer[k] = first + alpha[k] - 1;
        first = outer[k];
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

std::optional<Composition> as_ribbon(const SkewShape& shape) {
    std::vector<int> lengths;
    int prev_first = 0;
    bool started = false, finished = false;
    for (int r = 1; r <= shape.rows(); ++r) {
        const int len = shape.row_last(r) - shape.row_first(r) + 1;
        if (len <= 0) {
            if (started) finished = true;
            continue;
        }
        if (finished) return std::nullopt;
        if (started && shape.row_last(r) != prev_first) return std::nullopt;
        started = true;
        prev_first = shape.row_first(r);
        lengths.push_back(len);
    }
    return Composition(std::move(lengths));
}

std::vector<int> ribbon_column_lengths(const Composition& alpha) { return ribbon_to_skew(alpha).column_lengths(); }

SkewShape transpose(const SkewShape& shape) {
    return SkewShape(shape.outer().conjugate(), shape.inner().conjugate());
}

namespace {
template <class Op>
Partition pointwise(const Partition& a, const Partition& b, Op op) {
    const std::size_t n = std::max(a.length(), b.length());
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = op(a.part(i), b.part(i));
    return Partition(std::move(out));
}

int max_int(int x, int y) { return std::max(x, y); }
int min_int(int x, int y) { return std::min(x, y); }
}  // namespace

SkewShape skew_union(const SkewShape& s, const SkewShape& t) {
    return SkewShape(pointwise(s.outer(), t.outer(), max_int), pointwise(s.inner(), t.inner(), max_int));
}

SkewShape skew_intersection(const SkewShape& s, const SkewShape& t) {
    return SkewShape(pointwise(s.outer(), t.outer(), min_int), pointwise(s.inner(), t.inner(), min_int));
}

SkewShape disjoint_stack(const SkewShape& upper, const SkewShape& lower) {
    const int shift = lower.outer().part(0);
    std::vector<int> outer, inner;
    for (int r = 1; r <= upper.rows(); ++r) {
        outer.push_back(upper.outer().part(static_cast<std::size_t>(r - 1)) + shift);
        inner.push_back(upper.inner().part(static_cast<std::size_t>(r - 1)) + shift);
    }
    for (int r = 1; r <= lower.rows(); ++r) {
        outer.push_back(lower.outer().part(static_cast<std::size_t>(r - 1)));
        inner.push_back(lower.inner().part(static_cast<std::size_t>(r - 1)));
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

std::string to_string(const SkewShape& shape) {
    return to_string(shape.outer()) + "/" + to_string(shape.inner());
}

}  // namespace equitab
