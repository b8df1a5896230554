#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace asymstream {

using Symbol = std::uint32_t;
using Text = std::vector<Symbol>;
using Words = std::int64_t;

struct HarnessError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Alphabet {
    std::uint32_t r = 1;
    bool contains(const Text& t) const;
};

class SpaceMeter {
public:
    void charge(Words w);
    void release(Words w);
    Words current() const { return current_; }
    Words peak() const { return peak_; }

private:
    Words current_ = 0;
    Words peak_ = 0;
};

// Holds a variable charge on a meter and gives it back on destruction.
class MeterHold {
public:
    explicit MeterHold(SpaceMeter* m = nullptr, Words w = 0) : meter_(m) { set(w); }
    MeterHold(const MeterHold&) = delete;
    MeterHold& operator=(const MeterHold&) = delete;
    MeterHold(MeterHold&& o) noexcept : meter_(o.meter_), held_(o.held_) { o.held_ = 0; }
    MeterHold& operator=(MeterHold&& o) noexcept;
    ~MeterHold() { set(0); }

    void set(Words w);
    void add(Words w) { set(held_ + w); }
    Words held() const { return held_; }

private:
    SpaceMeter* meter_;
    Words held_ = 0;
};

class OnlineStream {
public:
    explicit OnlineStream(const Text& x) : x_(&x) {}

    std::optional<Symbol> next();
    std::size_t consumed() const { return cursor_; }
    std::size_t length() const { return x_->size(); }
    bool at_end() const { return cursor_ >= x_->size(); }

private:
    const Text* x_;
    std::size_t cursor_ = 0;
};

// Stream view with a one-symbol pushback slot for a symbol read but not used.
class SymbolSource {
public:
    explicit SymbolSource(OnlineStream& s, SpaceMeter* meter = nullptr) : stream_(&s), hold_(meter) {}

    std::optional<Symbol> next();
    void push_back(Symbol c);
    bool has_pending() const { return pending_.has_value(); }
    OnlineStream& stream() { return *stream_; }

private:
    OnlineStream* stream_;
    std::optional<Symbol> pending_;
    MeterHold hold_;
};

class OfflineText {
public:
    explicit OfflineText(const Text& y) : y_(&y), len_(y.size()) {}

    std::size_t size() const { return len_; }
    // 1-based
    Symbol at(std::size_t i) const {
        ++accesses_;
        return (*y_)[offset_ + i - 1];
    }
    // View of y[ref] without copying; positions restart at 1.
    OfflineText window(std::size_t p, std::size_t q) const {
        OfflineText w(*y_);
        w.offset_ = offset_ + p - 1;
        w.len_ = q + 1 - p;
        return w;
    }
    const Text& text() const { return *y_; }
    std::uint64_t accesses() const { return accesses_; }

private:
    const Text* y_;
    std::size_t offset_ = 0;
    std::size_t len_;
    mutable std::uint64_t accesses_ = 0;
};

struct SubstringRef {
    std::size_t p = 1;
    std::size_t q = 0;

    std::size_t length() const { return q + 1 - p; }
    bool empty() const { return q + 1 == p; }
    bool operator==(const SubstringRef&) const = default;
};

Text substring(const Text& y, SubstringRef ref);

struct EditOp {
    enum class Kind { Insert, Delete, Substitute };
    Kind kind;
    std::size_t pos;
    Symbol sym = 0;

    static EditOp insert(std::size_t pos, Symbol c) { return {Kind::Insert, pos, c}; }
    static EditOp erase(std::size_t pos) { return {Kind::Delete, pos, 0}; }
    static EditOp substitute(std::size_t pos, Symbol c) { return {Kind::Substitute, pos, c}; }
    bool operator==(const EditOp&) const = default;
};

using EditScript = std::vector<EditOp>;

// Orders ops by source position, inserts first at equal positions.
void normalize_script(EditScript& script);
Text apply_script(const Text& source, EditScript script);

// Left-to-right reader over apply_script(y[ref], script) followed by tail.
class ReplayCursor {
public:
    ReplayCursor(const OfflineText& y, SubstringRef ref, const EditScript& script, const Text& tail);

    std::optional<Symbol> next();
    // Advances past n output symbols in O(|script|) time; stops early at the end.
    void skip(std::size_t n);
    // Last source position consumed (absolute in y) and ops consumed so far.
    std::size_t source_end() const { return ref_.p + src_ - 2; }
    std::size_t ops_used() const { return op_; }

private:
    const OfflineText* y_;
    SubstringRef ref_;
    const EditScript* script_;
    const Text* tail_;
    std::size_t src_ = 1;
    std::size_t op_ = 0;
    std::size_t tail_pos_ = 0;
};

ReplayCursor replay_prefix(const OfflineText& y, SubstringRef ref, const EditScript& script, const Text& tail);
Text collect(ReplayCursor cur);

// Fans one physical pass out to m consumers. Each consumer pulls with next(i);
// a consumer running more than `bound` symbols ahead of the slowest one is a harness error.
class Tee {
public:
    Tee(OnlineStream& s, std::size_t m, std::size_t bound = 1);

    std::optional<Symbol> next(std::size_t consumer);
    std::size_t physical_reads() const { return reads_; }
    std::size_t deliveries() const { return deliveries_; }

    // Lockstep drive: every symbol goes to every callback in order.
    void drive(const std::vector<std::function<void(Symbol)>>& consumers);

private:
    OnlineStream* stream_;
    std::size_t bound_;
    std::deque<Symbol> buffer_;
    std::size_t base_ = 0;  // stream index of buffer_.front()
    std::vector<std::size_t> pos_;
    std::size_t reads_ = 0;
    std::size_t deliveries_ = 0;
};

struct RunReport {
    std::int64_t value = 0;
    double guarantee_factor = 1.0;
    Words peak_space_words = 0;
    std::int64_t online_symbols_read = 0;
    nlohmann::json trace = nlohmann::json::object();
};

nlohmann::json to_json(const RunReport& r);

struct Instance {
    std::uint32_t r = 2;
    Text x;
    Text y;
};

std::string encode_text(const Text& t, std::uint32_t r);
Text decode_text(const std::string& line, std::uint32_t r);
std::string write_instance(const Instance& inst);
Instance parse_instance(const std::string& content);
Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& inst);

}  // namespace asymstream
