#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lensiso/errors.hpp"

namespace lensiso {

enum class Role : std::uint8_t { Over, Under };

// One passage of the knot through a crossing. sign is +1 or -1 and is a
// property of the crossing, so both passages of a crossing carry it.
struct PassageToken {
    Role role = Role::Over;
    int crossing = 0;  // >= 1
    int sign = +1;

    friend bool operator==(const PassageToken&, const PassageToken&) = default;
    // Token order used everywhere a tie must be broken:
    // role Over < Under, then crossing number, then sign + < -.
    friend std::strong_ordering operator<=>(const PassageToken& a, const PassageToken& b) {
        if (auto c = a.role <=> b.role; c != 0) return c;
        if (auto c = a.crossing <=> b.crossing; c != 0) return c;
        return (a.sign < 0) <=> (b.sign < 0);
    }
};

// Cyclic sequence of passages of a closed curve. The stored vector is one
// chosen linearization; two ClosedCodes compare equal when some rotation
// plus relabeling matches. Use .tokens for literal comparison.
struct ClosedCode {
    std::vector<PassageToken> tokens;
    friend bool operator==(const ClosedCode& a, const ClosedCode& b);
};

// Linear sequence of passages of a long (open-ended) curve.
struct LongCode {
    std::vector<PassageToken> tokens;
    friend bool operator==(const LongCode&, const LongCode&) = default;
};

using AnyCode = std::variant<ClosedCode, LongCode>;

// Grammar:  code := ("closed" | "long") "[" token* "]"
//           token := ("O" | "U") digits ("+" | "-")
// Whitespace between lexemes is ignored; "#" starts a comment that runs to
// end of line. Throws SyntaxError (with 1-based line/column) on malformed
// text and InvariantError when the token list breaks pairing invariants.
AnyCode parse_code(std::string_view text);

// Canonical text: kind, "[", tokens separated by single spaces, "]".
// parse_code(serialize_code(c)) reproduces c exactly.
std::string serialize_code(const ClosedCode& c);
std::string serialize_code(const LongCode& c);
std::string serialize_code(const AnyCode& c);
std::string serialize_tokens(const std::vector<PassageToken>& tokens);

// Renumber crossings 1,2,3,... in order of first occurrence. For a closed
// code the starting rotation is fixed first: the rotation whose relabeled
// token sequence is lexicographically least under the token order above.
// Idempotent; preserves roles, signs and the interleaving structure.
LongCode canonical_relabel(const LongCode& c);
ClosedCode canonical_relabel(const ClosedCode& c);

// Cyclic shift: token at index r becomes the first token. r is taken
// mod 2n; rotating the empty code is the identity.
LongCode rotate(const LongCode& c, int r);

struct CyclicMatch {
    bool equal = false;
    std::vector<int> offsets;  // all r with relabel(rotate(a,r)) == relabel(b)
};

// Offsets form a coset of the subgroup of rotational symmetries of a.
CyclicMatch cyclic_equal(const LongCode& a, const LongCode& b);

// Cut a closed code open at position m (tokens m, m+1, ... cyclically).
// m must lie in [0, 2n); as a special case m = 0 is accepted for the empty
// code so that cut(closure(w), 0) == w holds for every w.
LongCode cut(const ClosedCode& c, int m);

// Close a long code; cut(closure(w), 0) == w.
ClosedCode closure(const LongCode& c);

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Structural checks: every crossing id appears exactly twice, once Over and
// once Under, with equal signs, and ids are >= 1. With check_realizability,
// additionally reports when the underlying shadow admits no planar curve
// (for a long code, the shadow of its closure).
ValidationReport validate_code(const ClosedCode& c, bool check_realizability = false);
ValidationReport validate_code(const LongCode& c, bool check_realizability = false);

// True when the unsigned shadow of the code is realizable as a generic
// closed curve in the plane. Decided by reducing to graph planarity: each
// crossing is expanded into a wheel gadget that forces the two strands to
// cross transversally, and the expanded graph is tested for planarity.
bool realizable(const ClosedCode& c);

// Necessary condition for realizability: every crossing interlaces an even
// number of other crossings. Exposed for validation reporting and tests.
bool interlacement_even(const ClosedCode& c);

}  // namespace lensiso
