#include "hhskit/group_arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhs {
namespace f2 {

std::string reduce(const std::string& w) {
    std::string out;
    out.reserve(w.size());
    for (char c : w) {
        if (c != 'a' && c != 'A' && c != 'b' && c != 'B')
            throw std::invalid_argument("f2::reduce: bad letter");
        if (!out.empty() && out.back() == inv_letter(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

std::string mul(const std::string& u, const std::string& v) { return reduce(u + v); }

std::string inverse(const std::string& u) {
    std::string out;
    out.reserve(u.size());
    for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(inv_letter(*it));
    return out;
}

std::string pow(const std::string& u, std::int64_t k) {
    std::string base = k < 0 ? inverse(u) : u;
    std::int64_t reps = k < 0 ? -k : k;
    std::string out;
    for (std::int64_t i = 0; i < reps; ++i) out = mul(out, base);
    return out;
}

std::vector<Syllable> syllables(const std::string& w) {
    std::vector<Syllable> out;
    for (char c : w) {
        char type = (c == 'a' || c == 'A') ? 'a' : 'b';
        std::int64_t step = (c == 'a' || c == 'b') ? 1 : -1;
        if (!out.empty() && out.back().type == type)
            out.back().exp += step;
        else
            out.push_back({type, step});
    }
    return out;
}

std::int64_t syllable_distance(const std::string& u, const std::string& v) {
    return static_cast<std::int64_t>(syllables(mul(inverse(u), v)).size());
}

std::int64_t line_projection(const std::string& g, char type, const std::string& f) {
    std::string u = mul(inverse(g), f);
    auto syl = syllables(u);
    if (syl.empty()) return 0;
    if (syl.front().type != type) return 0;
    return syl.front().exp;
}

std::string coset_rep(const std::string& g, char type) {
    std::string w = reduce(g);
    char lo = type, hi = static_cast<char>(type - 32);  // 'a'->'A', 'b'->'B'
    while (!w.empty() && (w.back() == lo || w.back() == hi)) w.pop_back();
    return w;
}

std::vector<std::string> ball(int radius) {
    static const char letters[4] = {'a', 'A', 'b', 'B'};
    std::vector<std::string> out{""};
    std::vector<std::string> frontier{""};
    for (int r = 1; r <= radius; ++r) {
        std::vector<std::string> next;
        for (const auto& w : frontier) {
            for (char c : letters) {
                if (!w.empty() && w.back() == inv_letter(c)) continue;
                next.push_back(w + c);
            }
        }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace f2

Dinf Dinf::from_position(std::int64_t p) {
    if (p % 2 == 0) return {false, p / 2};
    return {true, (p - 1) / 2};  // p-1 is even, so the division is exact
}

}  // namespace hhs
