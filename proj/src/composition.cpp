#include "equitab/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "equitab/error.hpp"

namespace equitab {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) require(p >= 1, "composition parts must be positive");
}

int Composition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] >= 1, "partition parts must be positive");
        require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
    }
}

Partition Partition::sorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

std::strong_ordering lex_compare(const Partition& lhs, const Partition& rhs) {
    const std::size_t n = std::max(lhs.length(), rhs.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = lhs.part(i) <=> rhs.part(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Composition reverse(const Composition& alpha) {
    std::vector<int> p(alpha.begin(), alpha.end());
    std::reverse(p.begin(), p.end());
    return Composition(std::move(p));
}

Composition concat(const Composition& alpha, const Composition& beta) {
    std::vector<int> p(alpha.begin(), alpha.end());
    p.insert(p.end(), beta.begin(), beta.end());
    return Composition(std::move(p));
}

Composition near_concat(const Composition& alpha, const Composition& beta) {
    require(!alpha.empty() && !beta.empty(), "near-concatenation needs two nonempty compositions");
    std::vector<int> p(alpha.begin(), alpha.end());
    p.back() += beta.front();
    p.insert(p.end(), beta.begin() + 1, beta.end());
    return Composition(std::move(p));
}

Composition compose(const Composition& alpha, const Composition& beta) {
    require(!alpha.empty() && !beta.empty(), "composition of compositions needs two nonempty operands");
    Composition out;
    for (int copies : alpha) {
        Composition block = beta;
        for (int c = 1; c < copies; ++c) block = near_concat(block, beta);
        out = concat(out, block);
    }
    return out;
}

Composition move_cell(const Composition& alpha, std::size_t i) {
    require(i >= 2 && i <= alpha.length(), "move_cell index must satisfy 2 <= i <= length");
    require(alpha.front() >= 2, "move_cell needs a first part of at least 2");
    std::vector<int> p(alpha.begin(), alpha.end());
    --p[0];
    ++p[i - 1];
    return Composition(std::move(p));
}

Composition canonical(const Composition& alpha) {
    Composition rev = reverse(alpha);
    return rev < alpha ? rev : alpha;
}

Composition parse_composition(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return {};
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 1 || tok.front() == '+')
            fail(ErrorKind::Parse, "invalid composition '" + std::string(text) + "': expected comma-separated positive integers");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

namespace {
template <class Seq>
std::string join(const Seq& seq) {
    std::string out;
    for (int p : seq) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}
}  // namespace

std::string to_string(const Composition& alpha) { return join(alpha); }
std::string to_string(const Partition& lambda) { return join(lambda); }

}  // namespace equitab
