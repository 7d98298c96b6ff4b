#include "kostka/poset.hpp"

#include "kostka/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>

namespace kostka {

namespace {

using Row = std::vector<Int>;

struct RowHash {
    std::size_t operator()(const Row& r) const {
        std::size_t h = 1469598103934665603ull;
        for (Int v : r) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using StateMap = std::unordered_map<Row, BigInt, RowHash>;

} // namespace

Poset Poset::from_covers(int n, std::vector<std::pair<int, int>> covers) {
    if (n < 1) throw InvalidPoset("poset needs at least one element");
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

    Poset p;
    p.n_ = n;
    p.lower_.assign(static_cast<std::size_t>(n), {});
    p.upper_.assign(static_cast<std::size_t>(n), {});
    p.below_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));

    for (const auto& [a, b] : covers) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw InvalidPoset("cover (" + std::to_string(a) + "," + std::to_string(b) +
                               ") out of range for n=" + std::to_string(n));
        }
        if (a >= b) {
            throw InvalidPoset("cover (" + std::to_string(a) + "," + std::to_string(b) +
                               ") violates natural labeling");
        }
    }

    // closure by increasing upper label; labels are a linear extension
    for (const auto& [a, b] : covers) {
        auto& row = p.below_[static_cast<std::size_t>(a)];
        row[static_cast<std::size_t>(b)] = true;
    }
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < b; ++a) {
            if (!p.below_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (p.below_[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) {
                    p.below_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = true;
                }
            }
        }
    }

    for (const auto& [a, b] : covers) {
        for (int m = a + 1; m < b; ++m) {
            if (p.below_[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] &&
                p.below_[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)]) {
                throw InvalidPoset("cover (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") is implied by transitivity");
            }
        }
        p.lower_[static_cast<std::size_t>(b)].push_back(a);
        p.upper_[static_cast<std::size_t>(a)].push_back(b);
    }
    p.covers_ = std::move(covers);
    return p;
}

bool Poset::less(int a, int b) const {
    return below_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

int Poset::longest_chain() const {
    std::vector<int> len(static_cast<std::size_t>(n_), 1);
    int best = 0;
    for (int v = 0; v < n_; ++v) {
        for (int u : lower_[static_cast<std::size_t>(v)]) {
            len[static_cast<std::size_t>(v)] =
                std::max(len[static_cast<std::size_t>(v)], len[static_cast<std::size_t>(u)] + 1);
        }
        best = std::max(best, len[static_cast<std::size_t>(v)]);
    }
    return best;
}

std::string Poset::to_json_string() const {
    nlohmann::json j;
    j["n"] = n_;
    j["covers"] = nlohmann::json::array();
    for (const auto& [a, b] : covers_) j["covers"].push_back({a, b});
    return j.dump();
}

Poset Poset::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad poset JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("covers")) {
        throw ParseError("poset JSON needs fields n and covers");
    }
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2) throw ParseError("covers must be [a,b] pairs");
        covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return from_covers(j["n"].get<int>(), std::move(covers));
}

Poset chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return Poset::from_covers(n, std::move(covers));
}

Poset antichain(int n) {
    return Poset::from_covers(n, {});
}

Poset fence(int n) {
    if (n < 1) throw InvalidPoset("fence needs at least one element");
    // Path v0 - p0 - v1 - p1 - ... with valleys below peaks. Labels are
    // assigned in the order v0, v1, p0, v2, p1, v3, p2, ...: this is a
    // natural labeling, and it keeps at most two valleys live at a time.
    const int valleys = (n + 1) / 2;
    const int peaks = n / 2;
    std::vector<int> valley_label(static_cast<std::size_t>(valleys), -1);
    std::vector<int> peak_label(static_cast<std::size_t>(peaks), -1);
    int next = 0;
    if (valleys > 0) valley_label[0] = next++;
    for (int i = 1; i < valleys || i - 1 < peaks; ++i) {
        if (i < valleys) valley_label[static_cast<std::size_t>(i)] = next++;
        if (i - 1 < peaks) peak_label[static_cast<std::size_t>(i - 1)] = next++;
    }
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < peaks; ++i) {
        covers.emplace_back(valley_label[static_cast<std::size_t>(i)], peak_label[static_cast<std::size_t>(i)]);
        if (i + 1 < valleys) {
            covers.emplace_back(valley_label[static_cast<std::size_t>(i + 1)], peak_label[static_cast<std::size_t>(i)]);
        }
    }
    return Poset::from_covers(n, std::move(covers));
}

Poset shape_poset(const Partition& lambda) {
    if (lambda.empty()) throw InvalidShape("shape poset needs a nonempty partition");
    const int rows = static_cast<int>(lambda.length());
    std::vector<int> offset(static_cast<std::size_t>(rows) + 1, 0);
    for (int r = 0; r < rows; ++r) {
        offset[static_cast<std::size_t>(r) + 1] =
            offset[static_cast<std::size_t>(r)] + static_cast<int>(lambda.part(static_cast<std::size_t>(r)));
    }
    const int n = offset[static_cast<std::size_t>(rows)];
    std::vector<std::pair<int, int>> covers;
    for (int r = 0; r < rows; ++r) {
        const int len = static_cast<int>(lambda.part(static_cast<std::size_t>(r)));
        for (int c = 0; c < len; ++c) {
            const int v = offset[static_cast<std::size_t>(r)] + c;
            if (c + 1 < len) covers.emplace_back(v, v + 1);
            if (r + 1 < rows && c < lambda.part(static_cast<std::size_t>(r) + 1)) {
                covers.emplace_back(v, offset[static_cast<std::size_t>(r) + 1] + c);
            }
        }
    }
    return Poset::from_covers(n, std::move(covers));
}

Poset permutation_poset(const Permutation& w) {
    const int n = w.size();
    if (n < 1) throw NotAPermutation("empty permutation");
    auto rel = [&](int i, int j) { return i < j && w[i] < w[j]; };
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!rel(i, j)) continue;
            bool direct = true;
            for (int m = i + 1; m < j && direct; ++m) {
                if (rel(i, m) && rel(m, j)) direct = false;
            }
            if (direct) covers.emplace_back(i, j);
        }
    }
    return Poset::from_covers(n, std::move(covers));
}

FrontierPlan frontier_plan(const Poset& p) {
    const int n = p.size();
    FrontierPlan plan;
    plan.death.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        for (int u : p.upper_covers(v)) {
            plan.death[static_cast<std::size_t>(v)] = std::max(plan.death[static_cast<std::size_t>(v)], u);
        }
    }
    int live = 0;
    for (int step = 0; step < n; ++step) {
        if (plan.death[static_cast<std::size_t>(step)] > step) ++live;
        for (int v = 0; v < step; ++v) {
            if (plan.death[static_cast<std::size_t>(v)] == step) --live;
        }
        plan.width = std::max(plan.width, live);
    }
    return plan;
}

namespace {

// Frontier DP over vertices in label order. State key: values of live
// vertices in increasing label order. Maximal vertices never enter the
// state; their admissible choices collapse into a per-state multiplier.
BigInt order_count(const Poset& p, Int k, bool strict) {
    if (k <= 0) return 0;
    const int n = p.size();
    const FrontierPlan plan = frontier_plan(p);

    std::vector<int> live;          // vertex ids currently in the key, ascending
    StateMap cur;
    cur.emplace(Row{}, BigInt(1));

    for (int v = 0; v < n; ++v) {
        // key positions of v's lower covers
        std::vector<std::size_t> bound_idx;
        for (int u : p.lower_covers(v)) {
            auto it = std::lower_bound(live.begin(), live.end(), u);
            bound_idx.push_back(static_cast<std::size_t>(it - live.begin()));
        }

        const bool maximal = p.upper_covers(v).empty();

        // layout after this step: insert v (unless maximal), drop the dead
        std::vector<int> next_live;
        next_live.reserve(live.size() + 1);
        for (int u : live) {
            if (plan.death[static_cast<std::size_t>(u)] != v) next_live.push_back(u);
        }
        if (!maximal) next_live.push_back(v);

        std::vector<std::size_t> keep_idx;   // indices into old key that survive
        for (std::size_t i = 0; i < live.size(); ++i) {
            if (plan.death[static_cast<std::size_t>(live[i])] != v) keep_idx.push_back(i);
        }

        StateMap next;
        next.reserve(cur.size());
        Row key(next_live.size());
        for (const auto& [state, count] : cur) {
            Int lo = 1;
            for (std::size_t idx : bound_idx) {
                const Int bound = state[idx] + (strict ? 1 : 0);
                lo = std::max(lo, bound);
            }
            if (lo > k) continue;
            for (std::size_t i = 0; i < keep_idx.size(); ++i) key[i] = state[keep_idx[i]];
            if (maximal) {
                next[key] += count * BigInt(k - lo + 1);
            } else {
                for (Int x = lo; x <= k; ++x) {
                    key[keep_idx.size()] = x;
                    next[key] += count;
                }
            }
        }
        live = std::move(next_live);
        cur = std::move(next);
        if (cur.empty()) return 0;
    }

    auto it = cur.find(Row{});
    return it == cur.end() ? BigInt(0) : it->second;
}

} // namespace

BigInt order_polynomial(const Poset& p, Int k) {
    return order_count(p, k, false);
}

BigInt strict_order_polynomial(const Poset& p, Int m) {
    return order_count(p, m, true);
}

OrderEhrhartResult order_polytope_ehrhart(const Poset& p) {
    OrderPolytopeEvaluator evaluator(p);
    AdaptiveResult adaptive = adaptive_ehrhart(evaluator);
    VerificationReport report = verify_polynomial(adaptive.polynomial, evaluator, adaptive.transcript);
    if (!report) {
        throw VerificationError("order polytope verification failed: " + report.message);
    }
    return {std::move(adaptive.polynomial), std::move(adaptive.transcript)};
}

void for_each_linear_extension(const Poset& p,
                               const std::function<void(const std::vector<int>&)>& fn,
                               const LinextProgress& progress) {
    const int n = p.size();
    std::vector<int> unmet(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        unmet[static_cast<std::size_t>(v)] = static_cast<int>(p.lower_covers(v).size());
    }
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::uint64_t seen = 0;

    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == n) {
            fn(word);
            if (progress && (++seen & 0xffff) == 0 && !progress(seen)) {
                throw Cancelled("linear extension enumeration cancelled");
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || unmet[static_cast<std::size_t>(v)] != 0) continue;
            used[static_cast<std::size_t>(v)] = true;
            word.push_back(v);
            for (int u : p.upper_covers(v)) --unmet[static_cast<std::size_t>(u)];
            self(self);
            for (int u : p.upper_covers(v)) ++unmet[static_cast<std::size_t>(u)];
            word.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec);
}

HStarVector hstar_via_linext(const Poset& p, const LinextProgress& progress) {
    const int n = p.size();
    std::vector<BigInt> histogram(static_cast<std::size_t>(n) + 1, BigInt(0));
    for_each_linear_extension(
        p,
        [&](const std::vector<int>& word) {
            int des = 0;
            for (std::size_t i = 0; i + 1 < word.size(); ++i) {
                if (word[i] > word[i + 1]) ++des;
            }
            ++histogram[static_cast<std::size_t>(des)];
        },
        progress);
    return HStarVector(std::move(histogram));
}

BigInt count_linear_extensions(const Poset& p, const LinextProgress& progress) {
    BigInt total(0);
    for_each_linear_extension(p, [&](const std::vector<int>&) { ++total; }, progress);
    return total;
}

SearchResult search_nonrealrooted(const Permutation& base, int radius, const Permutation& avoid,
                                  int jobs, const SearchProgress& progress) {
    std::vector<Permutation> neighborhood = transposition_neighborhood(base, radius);
    std::vector<Permutation> candidates;
    candidates.reserve(neighborhood.size());
    for (auto& w : neighborhood) {
        if (!contains_pattern(w, avoid)) candidates.push_back(std::move(w));
    }

    const std::size_t total = candidates.size();
    std::vector<std::unique_ptr<SearchFinding>> slots(total);
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::size_t> done{0};
    std::atomic<bool> cancelled{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= total || cancelled.load()) return;
            try {
                const Permutation& w = candidates[i];
                OrderEhrhartResult er = order_polytope_ehrhart(permutation_poset(w));
                HStarVector h = hstar_from_ehrhart(er.polynomial);
                if (!is_real_rooted(h.polynomial())) {
                    auto finding = std::make_unique<SearchFinding>();
                    finding->perm = w;
                    finding->log_concave = is_log_concave(h);
                    finding->ultra_log_concave = is_ultra_log_concave(h);
                    finding->hstar = std::move(h);
                    slots[i] = std::move(finding);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                cancelled.store(true);
                return;
            }
            const std::size_t d = done.fetch_add(1) + 1;
            if (progress && (d & 0x3f) == 0 && !progress(d, total)) {
                cancelled.store(true);
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::make_exception_ptr(Cancelled("search cancelled"));
                }
                return;
            }
        }
    };

    const int nthreads = std::max(1, jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    SearchResult result;
    result.candidates = total;
    for (auto& slot : slots) {
        if (slot) result.findings.push_back(std::move(*slot));
    }
    return result;
}

} // namespace kostka
