#include "deszeta/wordalg.hpp"

#include <sstream>

namespace deszeta {

void ws_add(WordSum& acc, const Word& w, const Rational& c) {
    auto it = acc.find(w);
    Rational s = (it == acc.end() ? Rational(0) : it->second) + c;
    if (s == 0) {
        if (it != acc.end()) acc.erase(it);
    } else
        acc[w] = s;
}

void ws_add(WordSum& acc, const WordSum& other, const Rational& scale) {
    for (auto& [w, c] : other) ws_add(acc, w, c * scale);
}

WordSum word_normalize(const std::vector<char>& letters) {
    Word w;
    int run = 0;
    for (char ch : letters) {
        switch (ch) {
            case 'y': w.exps.push_back(run); run = 0; break;
            case 'j': ++run; break;
            case 'd': --run; break;
            default: throw DomainError("word_normalize: letter must be one of d, j, y");
        }
    }
    w.tail = run;
    WordSum r;
    if (w.tail == 0) r[w] = 1;  // tail != 0 => element of T => zero sum
    return r;
}

namespace {

thread_local std::map<std::pair<Word, Word>, WordSum> shuffle_memo;
thread_local long shuffle_fuel = 0;
constexpr long kFuelBound = 1'000'000;

// First-letter view of a canonical tail-0 word.
struct Head {
    char letter;  // 'y', 'j' or 'd'; '\0' for the unit word
    Word rest;
};

Head head_of(const Word& w) {
    Head h;
    if (w.exps.empty()) {
        h.letter = '\0';
        return h;
    }
    int e0 = w.exps[0];
    h.rest = w;
    if (e0 == 0) {
        h.letter = 'y';
        h.rest.exps.erase(h.rest.exps.begin());
    } else if (e0 > 0) {
        h.letter = 'j';
        h.rest.exps[0] = e0 - 1;
    } else {
        h.letter = 'd';
        h.rest.exps[0] = e0 + 1;
    }
    return h;
}

// Prefix a single letter to every word of a mod-T-canonical sum. Prefixing a
// non-y letter to the unit word would create a pure run (element of T): drop.
WordSum prefix(char ch, const WordSum& ws) {
    WordSum out;
    for (auto& [w, c] : ws) {
        Word nw = w;
        if (ch == 'y') {
            nw.exps.insert(nw.exps.begin(), 0);
        } else {
            if (nw.exps.empty()) continue;
            nw.exps[0] += (ch == 'j') ? 1 : -1;
        }
        ws_add(out, nw, c);
    }
    return out;
}

Word prefix_word(char ch, const Word& w) {
    Word nw = w;
    if (ch == 'y')
        nw.exps.insert(nw.exps.begin(), 0);
    else if (!nw.exps.empty())
        nw.exps[0] += (ch == 'j') ? 1 : -1;
    else
        nw.tail += (ch == 'j') ? 1 : -1;  // pure run, lands in T
    return nw;
}

WordSum shuffle_rec(const Word& u, const Word& v) {
    if (++shuffle_fuel > kFuelBound)
        throw NonConvergenceError("shuffle0: fuel bound (10^6 steps) exhausted");
    if (u.tail != 0 || v.tail != 0) return {};  // representative of 0 mod T
    auto key = std::make_pair(u, v);
    auto it = shuffle_memo.find(key);
    if (it != shuffle_memo.end()) return it->second;

    WordSum r;
    if (u.exps.empty()) {
        r[v] = 1;
    } else if (v.exps.empty()) {
        r[u] = 1;
    } else {
        Head a = head_of(u), b = head_of(v);
        if (a.letter == 'y') {
            r = prefix('y', shuffle_rec(a.rest, v));
        } else if (b.letter == 'y') {
            r = prefix('y', shuffle_rec(u, b.rest));
        } else if (a.letter == 'j' && b.letter == 'j') {
            r = prefix('j', shuffle_rec(a.rest, v));
            ws_add(r, prefix('j', shuffle_rec(u, b.rest)));
        } else if (a.letter == 'd' && b.letter == 'd') {
            r = prefix('d', shuffle_rec(a.rest, v));
            ws_add(r, shuffle_rec(a.rest, prefix_word('d', v)), Rational(-1));
        } else if (a.letter == 'd' && b.letter == 'j') {
            r = prefix('d', shuffle_rec(a.rest, v));
            ws_add(r, shuffle_rec(a.rest, b.rest), Rational(-1));
        } else {  // a == 'j', b == 'd'
            r = prefix('d', shuffle_rec(u, b.rest));
            ws_add(r, shuffle_rec(a.rest, b.rest), Rational(-1));
        }
    }
    shuffle_memo[key] = r;
    return r;
}

}  // namespace

WordSum shuffle0(const Word& u, const Word& v) {
    shuffle_fuel = 0;
    return shuffle_rec(u, v);
}

WordSum shuffle0(const WordSum& u, const WordSum& v) {
    WordSum r;
    for (auto& [wu, cu] : u)
        for (auto& [wv, cv] : v) ws_add(r, shuffle0(wu, wv), cu * cv);
    return r;
}

WordSum closed_shuffle_depth11(int k, int l) {
    if (k < 1 || l < 1) throw DomainError("closed_shuffle_depth11: k, l >= 1 required");
    WordSum out;
    for (int i = 0; i <= std::min(k, l - 1); ++i) {
        Word w;
        w.exps = {-(k - i), l - i};
        Rational c = Rational(binom(k, i));
        if (i % 2) c = -c;
        ws_add(out, w, c);
    }
    for (int i = 0; i <= k - l; ++i) {
        Word w;
        w.exps = {-(k - l - i), -i};
        Rational c = Rational(binom(k - 1 - i, l - 1));
        if (l % 2) c = -c;
        ws_add(out, w, c);
    }
    return out;
}

WordSum closed_shuffle_depth21(int k, int l, int m) {
    if (k < 1 || l < 1 || m < 1)
        throw DomainError("closed_shuffle_depth21: k, l, m >= 1 required");
    WordSum out;
    for (int i = 0; i <= std::min(k, l + m - 2); ++i) {
        for (int p = 1; p <= l + m - i - 1; ++p) {
            Integer br = binom(p - 1, l - 1) + binom(p - 1, m - i - 1);
            Rational c = Rational(binom(k, i) * br);
            if (i % 2) c = -c;
            if (c == 0) continue;
            Word w;
            w.exps = {-(k - i), p, l + m - i - p};
            ws_add(out, w, c);
        }
    }
    for (int i = 0; i <= k - m; ++i) {
        Rational c = Rational(binom(m - 1 + i, m - 1));
        if (m % 2) c = -c;
        Word w;
        w.exps = {-i, -(k - m - i), l};
        ws_add(out, w, c);
    }
    return out;
}

namespace {
void tensor_add_sym(TensorSum& out, const Word& a, const Word& b, const Rational& c) {
    for (auto& p : {std::make_pair(a, b), std::make_pair(b, a)}) {
        auto it = out.find(p);
        Rational s = (it == out.end() ? Rational(0) : it->second) + c;
        if (s == 0) {
            if (it != out.end()) out.erase(it);
        } else
            out[p] = s;
    }
}

// Assembles a word from an alternating list of pure d-powers and d^e y blocks;
// returns false when a trailing pure power remains (element of T).
struct PartsBuilder {
    Word w;
    int carry = 0;
    void pow(int e) { carry += e; }
    void blk(int e) {
        w.exps.push_back(-(carry + e));
        carry = 0;
    }
    bool finish() { return carry == 0; }
};
}  // namespace

TensorSum reduced_coproduct(const Word& w) {
    if (w.tail != 0) throw DomainError("reduced_coproduct: word lies in T");
    std::vector<int> k;
    for (int e : w.exps) {
        if (e > 0) throw DomainError("reduced_coproduct: word not in H_- (j letter present)");
        k.push_back(-e);
    }
    int r = w.depth();
    TensorSum out;
    if (r < 2) return out;

    for (int i = 0; i <= k[0]; ++i) {
        int j = k[0] - i;
        Word left, right;
        left.exps = {-i};
        right.exps.push_back(-(j + k[1]));
        for (int a = 2; a < r; ++a) right.exps.push_back(-k[a]);
        tensor_add_sym(out, left, right, Rational(binom(k[0], i)));
    }

    for (int p = 2; p <= r - 1; ++p) {
        // iterate all splittings i_l + j_l = k_l for l = 1..p
        std::vector<int> iv(p, 0);
        while (true) {
            Rational coef = 1;
            for (int a = 0; a < p; ++a) coef *= Rational(binom(k[a], iv[a]));
            if (coef != 0) {
                for (int mask = 0; mask < (1 << (p - 1)); ++mask) {
                    PartsBuilder L, R;
                    for (int q = 0; q < p - 1; ++q) {
                        int iq = iv[q], jq = k[q] - iv[q];
                        if (mask & (1 << q)) {
                            L.blk(jq);
                            R.pow(iq);
                        } else {
                            L.pow(iq);
                            R.blk(jq);
                        }
                    }
                    L.blk(iv[p - 1]);
                    R.pow(k[p - 1] - iv[p - 1]);
                    R.blk(k[p]);
                    for (int a = p + 1; a < r; ++a) R.blk(k[a]);
                    if (!L.finish() || !R.finish()) continue;
                    tensor_add_sym(out, L.w, R.w, coef);
                }
            }
            int pos = 0;
            while (pos < p && iv[pos] == k[pos]) iv[pos++] = 0;
            if (pos == p) break;
            ++iv[pos];
        }
    }
    return out;
}

IndexVector word_to_index(const Word& w) {
    if (w.tail != 0) throw DomainError("word_to_index: tail exponent nonzero (element of T)");
    IndexVector k(w.exps.rbegin(), w.exps.rend());
    return k;
}

Word word_from_index(const IndexVector& k) {
    Word w;
    w.exps.assign(k.rbegin(), k.rend());
    return w;
}

Word parse_word_literal(const std::string& s) {
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip();
    if (i >= s.size() || s[i] != '[') throw DomainError("word literal must start with '['");
    ++i;
    Word w;
    skip();
    if (i < s.size() && s[i] == ']') return w;  // "[]" = unit word
    while (true) {
        skip();
        size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw DomainError("word literal: integer expected");
        w.exps.push_back(std::stoi(s.substr(i, k - i)));
        i = k;
        skip();
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == ']') {
            ++i;
            break;
        }
        throw DomainError("word literal: ',' or ']' expected");
    }
    skip();
    if (i != s.size()) throw DomainError("word literal: trailing characters");
    return w;
}

std::string print_word(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < w.exps.size(); ++i) {
        if (i) os << ',';
        os << w.exps[i];
    }
    os << ']';
    if (w.tail != 0) os << "j^" << w.tail;
    return os.str();
}

std::string print_wordsum(const WordSum& ws) {
    if (ws.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : ws) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1) os << a << "*";
        os << print_word(w);
    }
    return os.str();
}

}  // namespace deszeta
