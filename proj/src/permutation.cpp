#include "kostka/permutation.hpp"

#include "kostka/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace kostka {

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    const int n = static_cast<int>(word_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            std::ostringstream msg;
            msg << "not a permutation of 1.." << n;
            throw NotAPermutation(msg.str());
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out << ',';
        out << word_[i];
    }
    return out.str();
}

namespace {

// Backtracking over increasing position choices; prunes as soon as the
// chosen prefix stops being order-isomorphic to the pattern prefix.
bool match_from(const std::vector<int>& w, const std::vector<int>& pat,
                std::vector<int>& chosen, std::size_t next) {
    const std::size_t m = pat.size();
    const std::size_t have = chosen.size();
    if (have == m) return true;
    // not enough positions left
    if (w.size() - next < m - have) return false;
    for (std::size_t pos = next; pos < w.size(); ++pos) {
        bool ok = true;
        for (std::size_t a = 0; a < have && ok; ++a) {
            const bool pat_less = pat[a] < pat[have];
            const bool word_less = w[static_cast<std::size_t>(chosen[a])] < w[pos];
            if (pat_less != word_less) ok = false;
        }
        if (!ok) continue;
        chosen.push_back(static_cast<int>(pos));
        if (match_from(w, pat, chosen, pos + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
    if (pattern.size() > w.size()) return false;
    if (pattern.size() == 0) return true;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(pattern.size()));
    return match_from(w.one_line(), pattern.one_line(), chosen, 0);
}

std::vector<Permutation> transposition_neighborhood(const Permutation& w, int radius) {
    if (radius < 0) throw Error("radius must be nonnegative");
    const int n = w.size();

    auto pack = [](const std::vector<int>& v) {
        return std::string(v.begin(), v.end());   // entries fit in a byte for n <= 127
    };

    std::unordered_set<std::string> seen;
    std::vector<std::vector<int>> frontier{w.one_line()};
    seen.insert(pack(w.one_line()));

    for (int step = 0; step < radius; ++step) {
        std::vector<std::vector<int>> next;
        for (const auto& word : frontier) {
            std::vector<int> cur = word;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    std::swap(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(j)]);
                    if (seen.insert(pack(cur)).second) next.push_back(cur);
                    std::swap(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(j)]);
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    std::vector<std::vector<int>> words;
    words.reserve(seen.size());
    for (const auto& s : seen) words.emplace_back(s.begin(), s.end());
    std::sort(words.begin(), words.end());

    std::vector<Permutation> out;
    out.reserve(words.size());
    for (auto& word : words) out.push_back(Permutation(std::move(word)));
    return out;
}

} // namespace kostka
