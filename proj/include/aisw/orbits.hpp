#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace aisw {

// A classical periodic orbit as a cyclic word over {L, R}: L is a back-and-
// forth traversal of the left half, R of the right half. Equal cyclic
// neighbours reflect at the step, unequal ones transmit; chi counts the
// sign-changing bounces (one hard-wall bounce per letter plus the right-side
// step reflections, i.e. the R->R adjacencies).
struct OrbitNecklace {
    std::string word;  // canonical: lexicographically minimal rotation, L < R
    int n_left = 0;
    int n_right = 0;
    int sigma = 0;  // step reflections (equal adjacent pairs)
    int tau = 0;    // step transmissions (unequal adjacent pairs)
    int chi = 0;    // sign changes: word length + R->R pairs
    bool fundamental = false;  // not a repetition of a shorter word
};

// Canonicalizes and classifies a word. Throws on symbols outside {L, R}.
OrbitNecklace classify(std::string_view word);

// All distinct necklaces of length <= max_len, one canonical representative
// each, ordered by length then lexicographically. fundamental_only drops
// repetitions of shorter necklaces. max_len beyond safety_cap throws.
std::vector<OrbitNecklace> enumerate_necklaces(int max_len, bool fundamental_only,
                                               int safety_cap = 24);

// s_p = (n_L + n_R) s + 2 alpha (n_L - n_R)/s.
double reduced_action_of_orbit(double alpha, const OrbitNecklace& orbit, double s);

// A_p = (-1)^chi r^sigma t^tau evaluated at reduced action s > sqrt(2 alpha).
double amplitude(double alpha, const OrbitNecklace& orbit, double s);

enum class ReflectionSide { LeftGroup, RightGroup };

// j-th single-reflection necklace: (j-1)x(LR)+L for the left group,
// (j-1)x(RL)+R for the right group.
OrbitNecklace single_reflection_family(ReflectionSide side, int j);

// One line per necklace: "word,n_L,n_R,sigma,tau,chi,fundamental".
void dump_census(std::ostream& os, const std::vector<OrbitNecklace>& necklaces);

}  // namespace aisw
