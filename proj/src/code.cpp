#include "lensiso/code.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lensiso {
namespace {

struct Lexer {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    void bump(char c) {
        if (c == '\n') { line++; col = 1; } else { col++; }
        pos++;
    }

    void skip_ws() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') bump(text[pos]);
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump(c);
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, line, col); }

    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isalpha((unsigned char)text[pos])) bump(text[pos]);
        return std::string(text.substr(start, pos - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        bump(c);
    }

    PassageToken token() {
        skip_ws();
        int tl = line, tc = col;
        char r = text[pos];
        if (r != 'O' && r != 'U') throw SyntaxError("expected token role 'O' or 'U'", tl, tc);
        bump(r);
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
            throw SyntaxError("expected crossing number after role", line, col);
        long id = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            id = id * 10 + (text[pos] - '0');
            if (id > 1'000'000'000) throw SyntaxError("crossing number out of range", tl, tc);
            bump(text[pos]);
        }
        if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
            throw SyntaxError("expected sign '+' or '-' after crossing number", line, col);
        char s = text[pos];
        bump(s);
        PassageToken t;
        t.role = (r == 'O') ? Role::Over : Role::Under;
        t.crossing = (int)id;
        t.sign = (s == '+') ? +1 : -1;
        if (t.crossing < 1) throw SyntaxError("crossing numbers start at 1", tl, tc);
        return t;
    }
};

void check_pairing(const std::vector<PassageToken>& tokens) {
    auto rep = [](const std::vector<PassageToken>& ts) {
        ValidationReport r;
        std::map<int, std::vector<PassageToken>> by_id;
        for (const auto& t : ts) by_id[t.crossing].push_back(t);
        for (const auto& [id, occ] : by_id) {
            if (occ.size() != 2) {
                r.problems.push_back("crossing " + std::to_string(id) + " appears " +
                                     std::to_string(occ.size()) + " times, expected 2");
                continue;
            }
            if (occ[0].role == occ[1].role)
                r.problems.push_back("crossing " + std::to_string(id) +
                                     " must appear once Over and once Under");
            if (occ[0].sign != occ[1].sign)
                r.problems.push_back("crossing " + std::to_string(id) +
                                     " carries two different signs");
        }
        return r;
    };
    auto r = rep(tokens);
    if (!r.ok()) throw InvariantError(r.problems.front());
}

std::string token_text(const PassageToken& t) {
    std::string s;
    s += (t.role == Role::Over) ? 'O' : 'U';
    s += std::to_string(t.crossing);
    s += (t.sign > 0) ? '+' : '-';
    return s;
}

std::vector<PassageToken> relabel_from(const std::vector<PassageToken>& tokens, size_t start) {
    std::map<int, int> remap;
    int next = 1;
    std::vector<PassageToken> out;
    out.reserve(tokens.size());
    for (size_t i = 0; i < tokens.size(); i++) {
        PassageToken t = tokens[(start + i) % tokens.size()];
        auto [it, inserted] = remap.emplace(t.crossing, next);
        if (inserted) next++;
        t.crossing = it->second;
        out.push_back(t);
    }
    return out;
}

}  // namespace

AnyCode parse_code(std::string_view text) {
    Lexer lx{text};
    std::string kind = lx.word();
    if (kind != "closed" && kind != "long") {
        throw SyntaxError("expected 'closed' or 'long', got '" + kind + "'", lx.line, lx.col);
    }
    lx.expect('[');
    std::vector<PassageToken> tokens;
    for (;;) {
        lx.skip_ws();
        if (lx.pos >= lx.text.size()) lx.fail("unterminated code, expected ']'");
        if (lx.peek() == ']') { lx.bump(']'); break; }
        tokens.push_back(lx.token());
    }
    if (!lx.eof()) lx.fail("trailing content after ']'");
    check_pairing(tokens);
    if (kind == "closed") return ClosedCode{std::move(tokens)};
    return LongCode{std::move(tokens)};
}

std::string serialize_tokens(const std::vector<PassageToken>& tokens) {
    std::string out;
    for (size_t i = 0; i < tokens.size(); i++) {
        if (i) out += ' ';
        out += token_text(tokens[i]);
    }
    return out;
}

std::string serialize_code(const ClosedCode& c) {
    return "closed[" + serialize_tokens(c.tokens) + "]";
}

std::string serialize_code(const LongCode& c) {
    return "long[" + serialize_tokens(c.tokens) + "]";
}

std::string serialize_code(const AnyCode& c) {
    return std::visit([](const auto& v) { return serialize_code(v); }, c);
}

LongCode canonical_relabel(const LongCode& c) {
    return LongCode{relabel_from(c.tokens, 0)};
}

ClosedCode canonical_relabel(const ClosedCode& c) {
    if (c.tokens.empty()) return c;
    std::vector<PassageToken> best = relabel_from(c.tokens, 0);
    for (size_t r = 1; r < c.tokens.size(); r++) {
        std::vector<PassageToken> cand = relabel_from(c.tokens, r);
        if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
            best = std::move(cand);
    }
    return ClosedCode{std::move(best)};
}

bool operator==(const ClosedCode& a, const ClosedCode& b) {
    if (a.tokens.size() != b.tokens.size()) return false;
    return canonical_relabel(a).tokens == canonical_relabel(b).tokens;
}

LongCode rotate(const LongCode& c, int r) {
    if (c.tokens.empty()) return c;
    int n = (int)c.tokens.size();
    int s = ((r % n) + n) % n;
    std::vector<PassageToken> out;
    out.reserve(c.tokens.size());
    for (int i = 0; i < n; i++) out.push_back(c.tokens[(s + i) % n]);
    return LongCode{std::move(out)};
}

CyclicMatch cyclic_equal(const LongCode& a, const LongCode& b) {
    CyclicMatch m;
    if (a.tokens.size() != b.tokens.size()) return m;
    if (a.tokens.empty()) { m.equal = true; m.offsets = {0}; return m; }
    auto target = canonical_relabel(b).tokens;
    for (int r = 0; r < (int)a.tokens.size(); r++) {
        if (relabel_from(a.tokens, r) == target) m.offsets.push_back(r);
    }
    m.equal = !m.offsets.empty();
    return m;
}

LongCode cut(const ClosedCode& c, int m) {
    if (c.tokens.empty()) {
        if (m != 0) throw IndexError("cut position " + std::to_string(m) + " on empty code");
        return LongCode{};
    }
    if (m < 0 || m >= (int)c.tokens.size())
        throw IndexError("cut position " + std::to_string(m) + " outside [0, " +
                         std::to_string(c.tokens.size()) + ")");
    std::vector<PassageToken> out;
    out.reserve(c.tokens.size());
    for (size_t i = 0; i < c.tokens.size(); i++)
        out.push_back(c.tokens[(m + i) % c.tokens.size()]);
    return LongCode{std::move(out)};
}

ClosedCode closure(const LongCode& c) { return ClosedCode{c.tokens}; }

namespace {

ValidationReport validate_tokens(const std::vector<PassageToken>& tokens) {
    ValidationReport r;
    std::map<int, std::vector<PassageToken>> by_id;
    for (const auto& t : tokens) {
        if (t.crossing < 1) {
            r.problems.push_back("crossing numbers must be >= 1");
            return r;
        }
        if (t.sign != 1 && t.sign != -1) {
            r.problems.push_back("crossing " + std::to_string(t.crossing) + " has sign " +
                                 std::to_string(t.sign) + ", expected +1 or -1");
            return r;
        }
        by_id[t.crossing].push_back(t);
    }
    for (const auto& [id, occ] : by_id) {
        if (occ.size() != 2) {
            r.problems.push_back("crossing " + std::to_string(id) + " appears " +
                                 std::to_string(occ.size()) + " times, expected 2");
            continue;
        }
        if (occ[0].role == occ[1].role)
            r.problems.push_back("crossing " + std::to_string(id) +
                                 " must appear once Over and once Under");
        if (occ[0].sign != occ[1].sign)
            r.problems.push_back("crossing " + std::to_string(id) + " carries two different signs");
    }
    return r;
}

}  // namespace

ValidationReport validate_code(const ClosedCode& c, bool check_realizability) {
    ValidationReport r = validate_tokens(c.tokens);
    if (r.ok() && check_realizability && !realizable(c))
        r.problems.push_back("shadow is not realizable as a planar curve");
    return r;
}

ValidationReport validate_code(const LongCode& c, bool check_realizability) {
    ValidationReport r = validate_tokens(c.tokens);
    if (r.ok() && check_realizability && !realizable(closure(c)))
        r.problems.push_back("shadow of the closure is not realizable as a planar curve");
    return r;
}

bool interlacement_even(const ClosedCode& c) {
    std::map<int, std::pair<int, int>> pos;
    int idx = 0;
    for (const auto& t : c.tokens) {
        auto it = pos.find(t.crossing);
        if (it == pos.end()) pos[t.crossing] = {idx, -1};
        else it->second.second = idx;
        idx++;
    }
    for (const auto& [i, pi] : pos) {
        int count = 0;
        for (const auto& [j, pj] : pos) {
            if (i == j) continue;
            // j interlaces i when exactly one occurrence of j lies strictly
            // between i's occurrences along the cycle.
            bool in1 = pj.first > pi.first && pj.first < pi.second;
            bool in2 = pj.second > pi.first && pj.second < pi.second;
            if (in1 != in2) count++;
        }
        if (count % 2) return false;
    }
    return true;
}

}  // namespace lensiso
