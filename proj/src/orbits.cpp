#include "aisw/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace aisw {

namespace {

std::string minimal_rotation(std::string_view w) {
    const size_t len = w.size();
    std::string best(w);
    std::string rot(w);
    for (size_t k = 1; k < len; ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

bool is_aperiodic(const std::string& w) {
    const size_t len = w.size();
    for (size_t d = 1; d < len; ++d) {
        if (len % d != 0) continue;
        bool repeats = true;
        for (size_t i = d; i < len && repeats; ++i)
            repeats = (w[i] == w[i - d]);
        if (repeats) return false;
    }
    return true;
}

OrbitNecklace classify_canonical(std::string canon) {
    OrbitNecklace o;
    const size_t len = canon.size();
    for (size_t i = 0; i < len; ++i) {
        const char cur = canon[i];
        const char nxt = canon[(i + 1) % len];
        if (cur == 'L')
            ++o.n_left;
        else
            ++o.n_right;
        if (cur == nxt)
            ++o.sigma;
        else
            ++o.tau;
        if (cur == 'R' && nxt == 'R') ++o.chi;
    }
    o.chi += static_cast<int>(len);
    o.fundamental = is_aperiodic(canon);
    o.word = std::move(canon);
    return o;
}

// Fredricksen-Kessler-Maiorana generation of binary necklaces of length n in
// lexicographic order (0 = L, 1 = R); a[1..t-1] is the current prefix, p its
// period. Each emitted word is already the minimal rotation of its class.
void fkm(int t, int p, int n, std::vector<int>& a, std::vector<OrbitNecklace>& out,
         bool fundamental_only) {
    if (t > n) {
        if (n % p == 0 && (!fundamental_only || p == n)) {
            std::string word(static_cast<size_t>(n), 'L');
            for (int i = 1; i <= n; ++i)
                if (a[i]) word[static_cast<size_t>(i) - 1] = 'R';
            out.push_back(classify_canonical(std::move(word)));
        }
        return;
    }
    a[t] = a[t - p];
    fkm(t + 1, p, n, a, out, fundamental_only);
    if (a[t - p] == 0) {
        a[t] = 1;
        fkm(t + 1, t, n, a, out, fundamental_only);
    }
}

}  // namespace

OrbitNecklace classify(std::string_view word) {
    if (word.empty()) throw std::invalid_argument("classify: empty word");
    for (char c : word)
        if (c != 'L' && c != 'R')
            throw std::invalid_argument("classify: symbols must be L or R");
    return classify_canonical(minimal_rotation(word));
}

std::vector<OrbitNecklace> enumerate_necklaces(int max_len, bool fundamental_only,
                                               int safety_cap) {
    if (max_len < 1) throw std::invalid_argument("enumerate_necklaces: requires max_len >= 1");
    if (max_len > safety_cap)
        throw std::invalid_argument("enumerate_necklaces: max_len exceeds safety cap (necklace count grows exponentially)");
    std::vector<OrbitNecklace> out;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> a(static_cast<size_t>(len) + 1, 0);
        fkm(1, 1, len, a, out, fundamental_only);
    }
    return out;
}

double reduced_action_of_orbit(double alpha, const OrbitNecklace& orbit, double s) {
    if (!(s > 0.0)) throw std::domain_error("reduced_action_of_orbit: requires s > 0");
    return (orbit.n_left + orbit.n_right) * s + 2.0 * alpha * (orbit.n_left - orbit.n_right) / s;
}

double amplitude(double alpha, const OrbitNecklace& orbit, double s) {
    if (!(s * s > 2.0 * alpha))
        throw std::domain_error("amplitude: requires s > sqrt(2 alpha)");
    const double r = 2.0 * alpha / (s * s);
    const double t2 = 1.0 - 4.0 * alpha * alpha / (s * s * s * s);
    double value = (orbit.chi % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < orbit.sigma; ++i) value *= r;
    value *= std::pow(t2, orbit.tau / 2.0);
    return value;
}

OrbitNecklace single_reflection_family(ReflectionSide side, int j) {
    if (j < 1) throw std::domain_error("single_reflection_family: requires j >= 1");
    std::string word;
    word.reserve(static_cast<size_t>(2 * j - 1));
    const char* pair = (side == ReflectionSide::LeftGroup) ? "LR" : "RL";
    for (int i = 0; i < j - 1; ++i) word += pair;
    word += (side == ReflectionSide::LeftGroup) ? 'L' : 'R';
    return classify(word);
}

void dump_census(std::ostream& os, const std::vector<OrbitNecklace>& necklaces) {
    for (const auto& o : necklaces) {
        os << o.word << ',' << o.n_left << ',' << o.n_right << ',' << o.sigma << ','
           << o.tau << ',' << o.chi << ',' << (o.fundamental ? 1 : 0) << '\n';
    }
}

}  // namespace aisw
