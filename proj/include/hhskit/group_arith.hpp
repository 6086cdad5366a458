#ifndef HHSKIT_GROUP_ARITH_HPP
#define HHSKIT_GROUP_ARITH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hhs {

// Reduced words in the free group F(a,b), stored over the alphabet
// {a, A, b, B} with A = a^-1, B = b^-1.
namespace f2 {

inline char inv_letter(char c) {
    switch (c) {
        case 'a': return 'A';
        case 'A': return 'a';
        case 'b': return 'B';
        case 'B': return 'b';
    }
    return '?';
}

inline bool same_type(char c, char d) {
    return (c == 'a' || c == 'A') == (d == 'a' || d == 'A');
}

std::string reduce(const std::string& w);
std::string mul(const std::string& u, const std::string& v);
std::string inverse(const std::string& u);
std::string pow(const std::string& u, std::int64_t k);

// Syllable decomposition: (type, exponent) with type in {'a','b'}, exponent != 0.
struct Syllable { char type; std::int64_t exp; };
std::vector<Syllable> syllables(const std::string& w);

// Number of syllables of u^-1 v: the coset-graph distance used for the
// Bass-Serre tree window.
std::int64_t syllable_distance(const std::string& u, const std::string& v);

// Exponent k such that the closest-point projection of f onto the line
// g<c> in the Cayley tree is g c^k (the leading c-power of reduce(g^-1 f)).
std::int64_t line_projection(const std::string& g, char type, const std::string& f);

// Canonical coset representative: the shortest element of g<c>
// (reduced word of g with any trailing c-power stripped).
std::string coset_rep(const std::string& g, char type);

// Enumerate all reduced words of length <= radius, in a fixed deterministic
// order (by length, then lexicographic over a<A<b<B... see impl).
std::vector<std::string> ball(int radius);

}  // namespace f2

// Infinite dihedral group D = <x, y | x^2 = y^2 = 1>, identified with its
// Cayley graph line: element at position p is the alternating word of length
// |p| starting with x when p > 0 and with y when p < 0. Rotations t^k = (xy)^k
// sit at even positions 2k, reflections t^k x at odd positions 2k+1.
struct Dinf {
    bool refl = false;
    std::int64_t k = 0;

    static Dinf identity() { return {false, 0}; }
    static Dinf x() { return {true, 0}; }   // position 1
    static Dinf y() { return {true, -1}; }  // position -1

    std::int64_t position() const { return refl ? 2 * k + 1 : 2 * k; }
    static Dinf from_position(std::int64_t p);

    Dinf operator*(const Dinf& o) const {
        if (!refl && !o.refl) return {false, k + o.k};
        if (!refl && o.refl) return {true, k + o.k};
        if (refl && !o.refl) return {true, k - o.k};
        return {false, k - o.k};
    }
    Dinf inverse() const { return refl ? *this : Dinf{false, -k}; }
    bool operator==(const Dinf& o) const { return refl == o.refl && k == o.k; }
};

// Element of G = F(a,b) x D1 x D2.
struct GElem {
    std::string f;  // reduced word
    Dinf d1, d2;

    static GElem identity() { return {}; }
    GElem operator*(const GElem& o) const { return {f2::mul(f, o.f), d1 * o.d1, d2 * o.d2}; }
    GElem inverse() const { return {f2::inverse(f), d1.inverse(), d2.inverse()}; }
    bool operator==(const GElem& o) const { return f == o.f && d1 == o.d1 && d2 == o.d2; }

    std::int64_t length() const {
        auto a = d1.position();
        auto b = d2.position();
        return static_cast<std::int64_t>(f.size()) + (a < 0 ? -a : a) + (b < 0 ? -b : b);
    }
};

}  // namespace hhs

#endif
