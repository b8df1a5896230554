#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "asymstream/core.hpp"

namespace asymstream {

std::size_t ed_full(const Text& x, const Text& y, SpaceMeter* meter = nullptr);

// Band of 2k+1 cells around the main diagonal; values above k are clipped to k+1.
class BandedEd {
public:
    BandedEd(const OfflineText& y, std::size_t k, SpaceMeter* meter = nullptr);

    void feed(Symbol c);
    std::size_t rows() const { return i_; }
    // D(rows(), j), or k+1 when outside the band or above k.
    std::size_t value(std::size_t j) const;
    std::optional<std::size_t> result() const;

    const std::vector<std::size_t>& row() const { return cur_; }
    std::size_t k() const { return k_; }

private:
    const OfflineText* y_;
    std::size_t k_;
    std::size_t i_ = 0;
    std::vector<std::size_t> cur_;
    std::vector<std::size_t> next_;
    MeterHold hold_;
};

template <class Reader>
std::optional<std::size_t> ed_bounded(Reader& x_access, const OfflineText& y, std::size_t k, SpaceMeter* meter = nullptr) {
    BandedEd band(y, k, meter);
    while (auto c = x_access.next()) band.feed(*c);
    return band.result();
}

std::optional<std::size_t> ed_bounded(const Text& x, const Text& y, std::size_t k, SpaceMeter* meter = nullptr);

class TextReader {
public:
    explicit TextReader(const Text& t) : t_(&t) {}
    std::optional<Symbol> next() {
        if (i_ >= t_->size()) return std::nullopt;
        return (*t_)[i_++];
    }

private:
    const Text* t_;
    std::size_t i_ = 0;
};

// A source that can be read left to right any number of times.
using SymbolReader = std::function<std::optional<Symbol>()>;
using Replayable = std::function<SymbolReader()>;

Replayable replayable_text(const Text& x);
Replayable replayable_replay(const OfflineText& y, SubstringRef ref, const EditScript& script, const Text& tail);

// Script turning y_sub into x. Requires ED(x, y_sub) < k.
EditScript recover_script(const Replayable& x, const OfflineText& y, std::size_t k, SpaceMeter* meter = nullptr);
EditScript recover_script(const Replayable& x, const Text& y_sub, std::size_t k, SpaceMeter* meter = nullptr);
EditScript recover_script(const Text& x, const Text& y_sub, std::size_t k, SpaceMeter* meter = nullptr);

struct Part {
    SubstringRef x;
    SubstringRef y;
    std::size_t distance = 0;
};

struct Partition {
    std::vector<Part> parts;
};

// script turns x into y; ops ordered by source position.
Partition split_by_script(const Text& x, const Text& y, const EditScript& script, std::size_t t);

std::size_t lcs_full(const Text& x, const Text& y);
std::size_t lis_exact(const Text& x);
std::size_t lns_exact(const Text& x, std::uint32_t r, SpaceMeter* meter = nullptr);
std::size_t lnst_exact(const Text& x, std::uint32_t r, std::size_t t);

struct SubstringMatch {
    SubstringRef ref;
    std::size_t distance = 0;
};

// Exhaustive. Ties: smallest p, then smallest q; the empty substring, reported as (1,0), ranks last.
SubstringMatch best_substring_ed(const Text& x, const Text& y);

}  // namespace asymstream
