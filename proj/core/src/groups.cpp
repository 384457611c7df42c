#include "cactus/groups.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cactus {

namespace {

void check_generator(int p, int q, int n) {
    if (!(1 <= p && p < q && q <= n))
        throw GroupError("cactus generator s(" + std::to_string(p) + "," + std::to_string(q) +
                         ") out of range for n = " + std::to_string(n));
}

void check_braid_letter(const BraidLetter& l, int n) {
    if (l.index < 1 || l.index >= n || (l.exponent != 1 && l.exponent != -1))
        throw GroupError("braid letter out of range for " + std::to_string(n) + " strands");
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int read_int(std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw GroupError("expected an integer in '" + std::string(s) + "'");
    return std::stoi(std::string(s.substr(start, pos - start)));
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
            throw GroupError("not a permutation: " + to_string());
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw GroupError("composing permutations of different degree");
    std::vector<int> im(b.images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = a(b.images_[i]);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
    os << ']';
    return os.str();
}

Permutation s_hat(int p, int q, int n) {
    check_generator(p, q, n);
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i - 1)] = (i < p || i > q) ? i : p + q - i;
    return Permutation(std::move(im));
}

// -------------------------------------------------------------------- words

CactusWord::CactusWord(int n, std::vector<CactusGenerator> l) : strands(n), letters(std::move(l)) {
    for (const auto& g : letters) check_generator(g.p, g.q, strands);
}

std::string CactusWord::to_string() const {
    if (letters.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += '.';
        out += "s(" + std::to_string(letters[i].p) + "," + std::to_string(letters[i].q) + ")";
    }
    return out;
}

CactusWord CactusWord::parse(std::string_view text, int strands) {
    text = strip(text);
    std::vector<CactusGenerator> letters;
    if (text == "e" || text.empty()) return CactusWord(strands, {});
    std::size_t pos = 0;
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c)
            throw GroupError("malformed cactus word '" + std::string(text) + "'");
        ++pos;
    };
    for (;;) {
        expect('s');
        expect('(');
        const int p = read_int(text, pos);
        expect(',');
        const int q = read_int(text, pos);
        expect(')');
        letters.push_back({p, q});
        if (pos == text.size()) break;
        expect('.');
    }
    return CactusWord(strands, std::move(letters));
}

CactusWord operator*(const CactusWord& a, const CactusWord& b) {
    if (a.strands != b.strands) throw GroupError("multiplying cactus words with different strand counts");
    CactusWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord::BraidWord(int n, std::vector<BraidLetter> l) : strands(n), letters(std::move(l)) {
    for (const auto& g : letters) check_braid_letter(g, strands);
}

std::string BraidWord::to_string() const {
    if (letters.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += '.';
        out += (letters[i].exponent > 0 ? 'g' : 'G') + std::to_string(letters[i].index);
    }
    return out;
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
    text = strip(text);
    std::vector<BraidLetter> letters;
    if (text == "e" || text.empty()) return BraidWord(strands, {});
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == '.') {
            ++pos;
            continue;
        }
        if (c != 'g' && c != 'G') throw GroupError("malformed braid word '" + std::string(text) + "'");
        ++pos;
        letters.push_back({read_int(text, pos), c == 'g' ? 1 : -1});
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw GroupError("multiplying braid words with different strand counts");
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

// ---------------------------------------------------------------- relations

std::vector<CactusRelation> cactus_relation_instances(int n) {
    if (n < 2) throw GroupError("cactus group needs n >= 2");
    std::vector<CactusGenerator> gens;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) gens.push_back({p, q});

    std::vector<CactusRelation> out;
    const CactusWord empty(n, {});
    for (const auto& g : gens) out.push_back({CactusWord(n, {g, g}), empty});
    for (const auto& a : gens) {
        for (const auto& b : gens) {
            if (a.q < b.p) {
                // disjoint intervals, each unordered pair once
                out.push_back({CactusWord(n, {a, b}), CactusWord(n, {b, a})});
            } else if (a.p <= b.p && b.q <= a.q && !(a == b)) {
                const Permutation s = s_hat(a.p, a.q, n);
                const CactusGenerator moved{s(b.q), s(b.p)};
                out.push_back({CactusWord(n, {a, b}), CactusWord(n, {moved, a})});
            }
        }
    }
    return out;
}

std::vector<BraidRelation> braid_relation_instances(int n) {
    if (n < 2) throw GroupError("braid group needs n >= 2");
    std::vector<BraidRelation> out;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            out.push_back({BraidWord(n, {{i, 1}, {j, 1}}), BraidWord(n, {{j, 1}, {i, 1}})});
        }
        if (i + 1 < n) {
            out.push_back({BraidWord(n, {{i, 1}, {i + 1, 1}, {i, 1}}),
                           BraidWord(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}})});
        }
    }
    return out;
}

Permutation project_to_symmetric(const CactusWord& w) {
    Permutation acc = Permutation::identity(w.strands);
    for (const auto& g : w.letters) acc = acc * s_hat(g.p, g.q, w.strands);
    return acc;
}

Permutation project_to_symmetric(const BraidWord& w) {
    Permutation acc = Permutation::identity(w.strands);
    for (const auto& l : w.letters) acc = acc * s_hat(l.index, l.index + 1, w.strands);
    return acc;
}

// ---------------------------------------------------------------- reports

std::string failure_records_to_json(const std::vector<FailureRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back({{"relation", r.relation}, {"witness", r.witness}});
    return arr.dump(2);
}

std::vector<FailureRecord> failure_records_from_json(std::string_view text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<FailureRecord> out;
    for (const auto& item : arr)
        out.push_back({item.at("relation").get<std::string>(), item.at("witness").get<std::string>()});
    return out;
}

}  // namespace cactus
