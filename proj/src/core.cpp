#include "asymstream/core.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace asymstream {

bool Alphabet::contains(const Text& t) const {
    return std::all_of(t.begin(), t.end(), [this](Symbol c) { return c < r; });
}

void SpaceMeter::charge(Words w) {
    if (w < 0) throw HarnessError("negative charge");
    current_ += w;
    peak_ = std::max(peak_, current_);
}

void SpaceMeter::release(Words w) {
    if (w < 0 || w > current_) throw HarnessError("space meter balance would go negative");
    current_ -= w;
}

MeterHold& MeterHold::operator=(MeterHold&& o) noexcept {
    if (this != &o) {
        set(0);
        meter_ = o.meter_;
        held_ = o.held_;
        o.held_ = 0;
    }
    return *this;
}

void MeterHold::set(Words w) {
    if (meter_ != nullptr) {
        if (w > held_) meter_->charge(w - held_);
        else if (w < held_) meter_->release(held_ - w);
    }
    held_ = w;
}

std::optional<Symbol> OnlineStream::next() {
    if (cursor_ >= x_->size()) return std::nullopt;
    return (*x_)[cursor_++];
}

std::optional<Symbol> SymbolSource::next() {
    if (pending_) {
        Symbol c = *pending_;
        pending_.reset();
        hold_.set(0);
        return c;
    }
    return stream_->next();
}

void SymbolSource::push_back(Symbol c) {
    if (pending_) throw HarnessError("pushback slot already occupied");
    pending_ = c;
    hold_.set(1);
}

Text substring(const Text& y, SubstringRef ref) {
    if (ref.p < 1 || ref.q > y.size() || ref.p > ref.q + 1) throw std::out_of_range("bad substring ref");
    return Text(y.begin() + static_cast<std::ptrdiff_t>(ref.p - 1), y.begin() + static_cast<std::ptrdiff_t>(ref.q));
}

void normalize_script(EditScript& script) {
    std::stable_sort(script.begin(), script.end(), [](const EditOp& a, const EditOp& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        return a.kind == EditOp::Kind::Insert && b.kind != EditOp::Kind::Insert;
    });
}

Text apply_script(const Text& source, EditScript script) {
    normalize_script(script);
    const std::size_t n = source.size();
    Text out;
    out.reserve(n + script.size());
    std::size_t k = 0;
    for (std::size_t pos = 1; pos <= n + 1; ++pos) {
        while (k < script.size() && script[k].pos == pos && script[k].kind == EditOp::Kind::Insert) {
            out.push_back(script[k].sym);
            ++k;
        }
        if (pos == n + 1) break;
        if (k < script.size() && script[k].pos == pos) {
            if (script[k].kind == EditOp::Kind::Substitute) out.push_back(script[k].sym);
            ++k;
            if (k < script.size() && script[k].pos == pos && script[k].kind != EditOp::Kind::Insert)
                throw std::out_of_range("two edits on one source position");
        } else {
            out.push_back(source[pos - 1]);
        }
    }
    if (k != script.size()) throw std::out_of_range("edit position out of bounds");
    for (const auto& op : script)
        if (op.pos < 1) throw std::out_of_range("edit position out of bounds");
    return out;
}

ReplayCursor::ReplayCursor(const OfflineText& y, SubstringRef ref, const EditScript& script, const Text& tail)
    : y_(&y), ref_(ref), script_(&script), tail_(&tail) {
    if (ref.p < 1 || ref.q > y.size() || ref.p > ref.q + 1) throw std::out_of_range("replay: bad ref");
    std::size_t len = ref.length();
    for (std::size_t i = 0; i < script.size(); ++i) {
        const auto& op = script[i];
        std::size_t lim = op.kind == EditOp::Kind::Insert ? len + 1 : len;
        if (op.pos < 1 || op.pos > lim) throw std::out_of_range("replay: script inconsistent with ref");
        if (i > 0 && script[i - 1].pos > op.pos) throw std::out_of_range("replay: script not ordered");
    }
}

std::optional<Symbol> ReplayCursor::next() {
    const std::size_t len = ref_.length();
    const auto& s = *script_;
    while (src_ <= len + 1) {
        if (op_ < s.size() && s[op_].pos == src_ && s[op_].kind == EditOp::Kind::Insert) return s[op_++].sym;
        if (src_ == len + 1) break;
        std::size_t here = src_++;
        if (op_ < s.size() && s[op_].pos == here) {
            const auto& op = s[op_++];
            if (op.kind == EditOp::Kind::Substitute) return op.sym;
            continue;
        }
        return y_->at(ref_.p + here - 1);
    }
    if (tail_pos_ < tail_->size()) return (*tail_)[tail_pos_++];
    return std::nullopt;
}

void ReplayCursor::skip(std::size_t n) {
    const std::size_t len = ref_.length();
    const auto& s = *script_;
    while (n > 0) {
        if (op_ < s.size() && s[op_].pos == src_ && s[op_].kind == EditOp::Kind::Insert) {
            ++op_;
            --n;
            continue;
        }
        if (src_ == len + 1) {
            std::size_t take = std::min(n, tail_->size() - tail_pos_);
            tail_pos_ += take;
            return;
        }
        if (op_ < s.size() && s[op_].pos == src_) {
            if (s[op_].kind == EditOp::Kind::Substitute) --n;
            ++op_;
            ++src_;
            continue;
        }
        std::size_t stop = op_ < s.size() ? s[op_].pos : len + 1;
        std::size_t take = std::min(n, stop - src_);
        src_ += take;
        n -= take;
    }
}

ReplayCursor replay_prefix(const OfflineText& y, SubstringRef ref, const EditScript& script, const Text& tail) {
    return ReplayCursor(y, ref, script, tail);
}

Text collect(ReplayCursor cur) {
    Text out;
    while (auto c = cur.next()) out.push_back(*c);
    return out;
}

Tee::Tee(OnlineStream& s, std::size_t m, std::size_t bound) : stream_(&s), bound_(bound), pos_(m, 0) {
    if (m == 0) throw std::invalid_argument("tee needs at least one consumer");
    if (bound == 0) throw std::invalid_argument("tee buffer bound must be positive");
}

std::optional<Symbol> Tee::next(std::size_t consumer) {
    std::size_t want = pos_.at(consumer);
    if (want >= base_ + buffer_.size()) {
        if (buffer_.size() >= bound_) throw HarnessError("tee consumer ran past the buffer bound");
        auto c = stream_->next();
        if (!c) return std::nullopt;
        ++reads_;
        buffer_.push_back(*c);
    }
    Symbol c = buffer_[want - base_];
    ++pos_[consumer];
    ++deliveries_;
    std::size_t slowest = *std::min_element(pos_.begin(), pos_.end());
    while (base_ < slowest) {
        buffer_.pop_front();
        ++base_;
    }
    return c;
}

void Tee::drive(const std::vector<std::function<void(Symbol)>>& consumers) {
    if (consumers.size() != pos_.size()) throw std::invalid_argument("consumer count mismatch");
    for (;;) {
        bool any = false;
        for (std::size_t i = 0; i < consumers.size(); ++i) {
            auto c = next(i);
            if (!c) return;
            consumers[i](*c);
            any = true;
        }
        if (!any) return;
    }
}

nlohmann::json to_json(const RunReport& r) {
    return nlohmann::json{{"value", r.value},
                          {"guarantee_factor", r.guarantee_factor},
                          {"peak_space_words", r.peak_space_words},
                          {"online_symbols_read", r.online_symbols_read},
                          {"trace", r.trace}};
}

namespace {

char ascii_of(Symbol c) {
    if (c < 10) return static_cast<char>('0' + c);
    if (c < 36) return static_cast<char>('a' + (c - 10));
    return static_cast<char>('A' + (c - 36));
}

Symbol symbol_of(char ch) {
    if (ch >= '0' && ch <= '9') return static_cast<Symbol>(ch - '0');
    if (ch >= 'a' && ch <= 'z') return static_cast<Symbol>(ch - 'a' + 10);
    if (ch >= 'A' && ch <= 'Z') return static_cast<Symbol>(ch - 'A' + 36);
    throw std::invalid_argument(std::string("bad symbol character '") + ch + "'");
}

}  // namespace

std::string encode_text(const Text& t, std::uint32_t r) {
    std::string out;
    if (r <= 62) {
        out.reserve(t.size());
        for (Symbol c : t) out.push_back(ascii_of(c));
    } else {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(t[i]);
        }
    }
    return out;
}

Text decode_text(const std::string& line, std::uint32_t r) {
    Text t;
    if (r <= 62) {
        for (char ch : line) {
            if (ch == '\r' || ch == ' ' || ch == '\t') continue;
            t.push_back(symbol_of(ch));
        }
    } else {
        std::istringstream in(line);
        std::uint64_t v;
        while (in >> v) t.push_back(static_cast<Symbol>(v));
        if (!in.eof()) throw std::invalid_argument("bad integer symbol");
    }
    for (Symbol c : t)
        if (c >= r) throw std::invalid_argument("symbol outside alphabet");
    return t;
}

std::string write_instance(const Instance& inst) {
    return "r=" + std::to_string(inst.r) + "\n" + encode_text(inst.x, inst.r) + "\n" + encode_text(inst.y, inst.r) + "\n";
}

Instance parse_instance(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line) || line.rfind("r=", 0) != 0) throw std::invalid_argument("instance: missing r= header");
    Instance inst;
    long long r = std::stoll(line.substr(2));
    if (r < 1) throw std::invalid_argument("instance: alphabet size must be positive");
    inst.r = static_cast<std::uint32_t>(r);
    std::string xs, ys;
    std::getline(in, xs);
    std::getline(in, ys);
    inst.x = decode_text(xs, inst.r);
    inst.y = decode_text(ys, inst.r);
    return inst;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_instance(ss.str());
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << write_instance(inst);
}

}  // namespace asymstream
