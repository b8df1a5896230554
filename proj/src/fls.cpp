#include "asymstream/fls.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "asymstream/oracles.hpp"

namespace asymstream {

nlohmann::json to_json(const FlsOutput& o) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& op : o.script) {
        const char* kind = op.kind == EditOp::Kind::Insert ? "insert" : op.kind == EditOp::Kind::Delete ? "delete" : "substitute";
        nlohmann::json j{{"kind", kind}, {"pos", op.pos}};
        if (op.kind != EditOp::Kind::Delete) j["symbol"] = op.sym;
        ops.push_back(j);
    }
    return nlohmann::json{{"p", o.pq.p}, {"q", o.pq.q}, {"l", o.l}, {"d", o.d}, {"script", ops}};
}

double guarantee_factor(std::size_t u, std::size_t s, double eps) {
    if (u <= s) return 1.0;
    return (1.0 + eps) * (2.0 * guarantee_factor((u + s - 1) / s, s, eps) + 1.0);
}

namespace {

constexpr Words kCellWords = 3;
constexpr Words kOpWords = 3;

// Cell (i, j) of the table min_p ED(x[1:i], y[p:j]); P is the smallest optimal start.
struct Cell {
    std::size_t j;
    std::size_t v;
    std::size_t P;
};

bool lex_less(std::size_t v1, std::size_t p1, std::size_t v2, std::size_t p2) {
    return v1 < v2 || (v1 == v2 && p1 < p2);
}

bool is_empty(const Cell& c) { return c.P == c.j + 1; }

bool better_end(std::size_t v1, bool e1, std::size_t p1, std::size_t j1, std::size_t v2, bool e2, std::size_t p2,
                std::size_t j2) {
    return std::tie(v1, e1, p1, j1) < std::tie(v2, e2, p2, j2);
}

// Next row of the table, keeping only cells within u.
void row_step(const std::vector<Cell>& prev, Symbol c, const OfflineText& y, std::size_t u, std::vector<Cell>& out) {
    out.clear();
    if (prev.empty()) return;
    const std::size_t n = y.size();
    std::size_t a = 0;
    std::size_t pos = prev[0].j;
    for (;;) {
        while (a < prev.size() && prev[a].j + 1 < pos) ++a;
        const Cell* diag = (a < prev.size() && prev[a].j + 1 == pos) ? &prev[a] : nullptr;
        std::size_t b = a + (diag ? 1 : 0);
        const Cell* up = (b < prev.size() && prev[b].j == pos) ? &prev[b] : nullptr;
        const Cell* left = (!out.empty() && out.back().j + 1 == pos) ? &out.back() : nullptr;

        std::size_t bv = std::numeric_limits<std::size_t>::max(), bp = 0;
        bool any = false;
        if (diag) {
            bv = diag->v + (y.at(pos) != c ? 1 : 0);
            bp = diag->P;
            any = true;
        }
        if (left && lex_less(left->v + 1, left->P, bv, bp)) {
            bv = left->v + 1;
            bp = left->P;
            any = true;
        }
        if (up && lex_less(up->v + 1, up->P, bv, bp)) {
            bv = up->v + 1;
            bp = up->P;
            any = true;
        }
        if (any && bv <= u) out.push_back(Cell{pos, bv, bp});

        std::size_t after = b + (up ? 1 : 0);
        bool cont = up != nullptr || (!out.empty() && out.back().j == pos && out.back().v < u) ||
                    (after < prev.size() && prev[after].j == pos + 1);
        std::size_t nxt;
        if (cont) nxt = pos + 1;
        else if (after < prev.size()) nxt = prev[after].j;
        else break;
        if (nxt > n) break;
        pos = nxt;
    }
}

const Cell* row_best(const std::vector<Cell>& row) {
    const Cell* best = nullptr;
    for (const auto& c : row)
        if (!best || better_end(c.v, is_empty(c), c.P, c.j, best->v, is_empty(*best), best->P, best->j)) best = &c;
    return best;
}

Replayable replayable_cursor(const ReplayCursor& cur) {
    return [cur]() -> SymbolReader {
        auto c = std::make_shared<ReplayCursor>(cur);
        return [c]() { return c->next(); };
    };
}

// The prefix read so far is kept as an anchor (an optimal script for the best cell of row l0)
// followed by the raw symbols since then. Rows are tracked sparsely once few cells stay within u.
class BaseMachine final : public FlsMachine {
public:
    BaseMachine(const OfflineText& y, std::size_t u, SpaceMeter* meter)
        : y_(&y), u_(u), meter_(meter), cap_(4 * (u + 1)), hold_(meter) {
        if (u == 0) throw std::invalid_argument("fls: u must be positive");
        if (y.size() + 1 <= cap_) {
            sparse_ = true;
            for (std::size_t j = 0; j <= y.size(); ++j) row_.push_back(Cell{j, 0, j + 1});
        }
        charge();
    }

    bool feed(Symbol c) override {
        if (done_) return false;
        if (sparse_) {
            row_step(row_, c, *y_, u_, next_);
            charge();
            if (next_.empty()) {
                finish_at(*row_best(row_));
                return false;
            }
            row_.swap(next_);
            next_.clear();
            tail_.push_back(c);
            if (tail_.size() >= u_) reanchor(*row_best(row_));
            charge();
            return true;
        }
        tail_.push_back(c);
        charge();
        if (tail_.size() < std::max<std::size_t>(1, u_ - v0_)) return true;
        return checkpoint();
    }

    void finish() override {
        if (done_) return;
        if (sparse_) {
            finish_at(*row_best(row_));
        } else if (tail_.empty()) {
            finish_at(Cell{j0_, v0_, P0_});
        } else {
            ScanResult s = scan();
            finish_at(Cell{s.j, s.value, s.p});
        }
    }

private:
    void charge() {
        hold_.set(8 + static_cast<Words>(tail_.size()) + kOpWords * static_cast<Words>(script0_.size()) +
                  kCellWords * static_cast<Words>(row_.size() + next_.size()));
    }

    ScanResult scan() const {
        Replayable pattern = replayable_replay(*y_, SubstringRef{P0_, j0_}, script0_, tail_);
        return semi_global_scan(pattern, l0_ + tail_.size(), *y_, u_, cap_, meter_);
    }

    // Dense rows: no row can exceed u before l0 + (u - v0), so the table is only rebuilt there.
    bool checkpoint() {
        ScanResult s = scan();
        if (!s.found) {
            tail_.pop_back();
            finish_at(Cell{j0_, v0_, P0_});
            return false;
        }
        reanchor(Cell{s.j, s.value, s.p});
        if (s.active <= cap_) {
            sparse_ = true;
            for (const auto& c : s.active_cells) row_.push_back(Cell{c.j, c.v, c.p});
        }
        charge();
        return true;
    }

    // Optimal script turning y[t.P:t.j] into the current prefix. Tries to reuse the anchor's
    // alignment up to a row r and realigns the rest; r = 0 always succeeds.
    EditScript script_for(const Cell& t) const {
        std::vector<std::size_t> cuts;
        if (t.P == P0_)
            for (std::size_t h = 0; h < l0_; h = h == 0 ? u_ : 2 * h) cuts.push_back(l0_ - h);
        cuts.push_back(0);
        for (std::size_t r : cuts) {
            ReplayCursor cur(*y_, SubstringRef{P0_, j0_}, script0_, tail_);
            cur.skip(r);
            const std::size_t jr = r == 0 ? t.P - 1 : cur.source_end();
            const std::size_t used = r == 0 ? 0 : cur.ops_used();
            if (jr > t.j || used > t.v) continue;
            const std::size_t budget = t.v - used;
            OfflineText win = y_->window(jr + 1, t.j);
            Replayable rest = replayable_cursor(cur);
            std::optional<std::size_t> e;
            {
                BandedEd band(win, budget, meter_);
                auto rd = rest();
                while (auto c = rd()) band.feed(*c);
                e = band.result();
            }
            if (!e) continue;
            EditScript out(script0_.begin(), script0_.begin() + static_cast<long>(used));
            const std::size_t shift = jr + 1 - t.P;
            for (EditOp op : recover_script(rest, win, *e + 1, meter_)) {
                op.pos += shift;
                out.push_back(op);
            }
            return out;
        }
        throw HarnessError("fls: no alignment reaches the target cell");
    }

    void reanchor(const Cell& t) {
        EditScript sc = script_for(t);
        l0_ += tail_.size();
        tail_.clear();
        P0_ = t.P;
        j0_ = t.j;
        v0_ = t.v;
        script0_ = std::move(sc);
        charge();
    }

    void finish_at(const Cell& t) {
        out_.l = l0_ + tail_.size();
        out_.d = t.v;
        out_.pq = is_empty(t) ? SubstringRef{1, 0} : SubstringRef{t.P, t.j};
        out_.script = tail_.empty() && t.P == P0_ && t.j == j0_ ? script0_ : script_for(t);
        done_ = true;
        row_.clear();
        next_.clear();
        tail_.clear();
        script0_.clear();
        hold_.set(0);
    }

    const OfflineText* y_;
    std::size_t u_;
    SpaceMeter* meter_;
    std::size_t cap_;

    std::size_t l0_ = 0;
    std::size_t P0_ = 1;
    std::size_t j0_ = 0;
    std::size_t v0_ = 0;
    EditScript script0_;
    Text tail_;

    bool sparse_ = false;
    std::vector<Cell> row_, next_;
    MeterHold hold_;
};

class RecursiveMachine final : public FlsMachine {
public:
    RecursiveMachine(const OfflineText& y, const FlsParams& p, SpaceMeter* meter)
        : y_(&y), p_(p), meter_(meter), hold_(meter) {
        sub_ = p;
        sub_.u = (p.u + p.s - 1) / p.s;
    }

    bool feed(Symbol c) override {
        if (done_) return false;
        if (!child_) child_ = make_fls_machine(*y_, sub_, meter_);
        if (child_->feed(c)) return true;
        record();
        if (parts_.size() >= p_.s) {
            combine();
            return false;
        }
        child_ = make_fls_machine(*y_, sub_, meter_);
        if (!child_->feed(c)) throw HarnessError("fls: fresh sub-call rejected its first symbol");
        return true;
    }

    void finish() override {
        if (done_) return;
        if (child_) {
            child_->finish();
            record();
        }
        combine();
    }

private:
    void record() {
        const FlsOutput& o = child_->output();
        parts_.push_back(o.pq);
        l_ += o.l;
        dsum_ += o.d;
        child_.reset();
        hold_.set(4 * static_cast<Words>(parts_.size()));
    }

    void combine() {
        const std::size_t len = concat_length(parts_);
        out_ = FlsOutput{};
        out_.l = l_;
        if (len == 0) {
            out_.d = dsum_;
        } else {
            ScanResult r = semi_global_scan(replayable_concat(*y_, parts_), len, *y_, len, 0, meter_);
            out_.pq = r.p == r.j + 1 ? SubstringRef{1, 0} : SubstringRef{r.p, r.j};
            out_.d = r.value + dsum_;
        }
        done_ = true;
        parts_.clear();
        hold_.set(0);
    }

    const OfflineText* y_;
    FlsParams p_;
    FlsParams sub_;
    SpaceMeter* meter_;
    std::unique_ptr<FlsMachine> child_;
    std::vector<SubstringRef> parts_;
    std::size_t l_ = 0;
    std::size_t dsum_ = 0;
    MeterHold hold_;
};

FlsOutput drive(FlsMachine& m, SymbolSource& src) {
    while (auto c = src.next()) {
        if (!m.feed(*c)) {
            src.push_back(*c);
            return m.output();
        }
    }
    m.finish();
    return m.output();
}

}  // namespace

ScanResult semi_global_scan(const Replayable& pattern, std::size_t L, const OfflineText& y, std::size_t cutoff,
                            std::size_t collect_cap, SpaceMeter* meter) {
    ScanResult res;
    const std::size_t inf = cutoff + 1;
    std::size_t rows = std::min(L, cutoff) + 1;
    std::vector<std::size_t> cp(rows), pp(rows), cc(rows), pc(rows);
    MeterHold hold(meter, 4 * static_cast<Words>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
        cp[i] = i;
        pp[i] = 1;
    }
    std::size_t last = rows - 1;

    auto consider = [&](std::size_t v, std::size_t P, std::size_t j) {
        ++res.active;
        if (res.active_cells.size() <= collect_cap) res.active_cells.push_back(ScanCell{j, v, P});
        bool e = P == j + 1;
        if (!res.found || better_end(v, e, P, j, res.value, res.p == res.j + 1, res.p, res.j)) {
            res.found = true;
            res.value = v;
            res.p = P;
            res.j = j;
        }
    };
    if (last == L) consider(L, 1, 0);

    for (std::size_t j = 1; j <= y.size(); ++j) {
        const Symbol yj = y.at(j);
        const std::size_t lim = std::min(L, last + 1);
        if (lim + 1 > cc.size()) {
            std::size_t sz = std::min(L + 1, std::max(lim + 1, 2 * cc.size()));
            cp.resize(sz, inf);
            pp.resize(sz, 0);
            cc.resize(sz, inf);
            pc.resize(sz, 0);
            hold.set(4 * static_cast<Words>(sz));
        }
        cc[0] = 0;
        pc[0] = j + 1;
        std::size_t newlast = 0;
        auto rd = pattern();
        for (std::size_t i = 1; i <= lim; ++i) {
            const Symbol xi = *rd();
            std::size_t bv = cp[i - 1] + (xi != yj ? 1 : 0), bp = pp[i - 1];
            if (i <= last && lex_less(cp[i] + 1, pp[i], bv, bp)) {
                bv = cp[i] + 1;
                bp = pp[i];
            }
            if (lex_less(cc[i - 1] + 1, pc[i - 1], bv, bp)) {
                bv = cc[i - 1] + 1;
                bp = pc[i - 1];
            }
            if (bv > inf) bv = inf;
            cc[i] = bv;
            pc[i] = bp;
            if (bv <= cutoff) newlast = i;
        }
        if (lim == L && cc[L] <= cutoff) consider(cc[L], pc[L], j);
        last = newlast;
        std::swap(cp, cc);
        std::swap(pp, pc);
    }
    return res;
}

std::unique_ptr<FlsMachine> make_fls_base_machine(const OfflineText& y, std::size_t u, SpaceMeter* meter) {
    return std::make_unique<BaseMachine>(y, u, meter);
}

std::unique_ptr<FlsMachine> make_fls_machine(const OfflineText& y, const FlsParams& p, SpaceMeter* meter) {
    if (p.u == 0 || p.s < 2) throw std::invalid_argument("fls: need u >= 1 and s >= 2");
    if (p.u <= p.s) return make_fls_base_machine(y, p.u, meter);
    return std::make_unique<RecursiveMachine>(y, p, meter);
}

FlsOutput fls_base(SymbolSource& src, const OfflineText& y, std::size_t u, SpaceMeter* meter) {
    auto m = make_fls_base_machine(y, u, meter);
    return drive(*m, src);
}

FlsOutput find_longest_substring(SymbolSource& src, const OfflineText& y, const FlsParams& p, SpaceMeter* meter) {
    auto m = make_fls_machine(y, p, meter);
    return drive(*m, src);
}

}  // namespace asymstream
