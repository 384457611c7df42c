#pragma once

// Braid and cactus group words, their images in S_n, and a checker that a
// concrete assignment of generators to maps on a finite set satisfies a list
// of defining relations.  Equality of words is only ever tested through an
// action; there is no word-problem solver.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cactus {

class GroupError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bijection of {1..n}, stored as the list of images.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const { return images_; }

    /// (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string to_string() const;

private:
    std::vector<int> images_;
};

/// Reversal of the interval [p, q] inside {1..n}.
Permutation s_hat(int p, int q, int n);

struct CactusGenerator {
    int p = 1;
    int q = 2;
    friend auto operator<=>(const CactusGenerator&, const CactusGenerator&) = default;
};

/// Word in the generators s_{p,q} of J_n; generators are involutions.
struct CactusWord {
    using Letter = CactusGenerator;

    int strands = 0;
    std::vector<CactusGenerator> letters;

    CactusWord() = default;
    CactusWord(int n, std::vector<CactusGenerator> l);

    /// Text form "s(1,3).s(1,2)"; the empty word is "e".
    std::string to_string() const;
    static CactusWord parse(std::string_view text, int strands);

    friend CactusWord operator*(const CactusWord& a, const CactusWord& b);
    friend bool operator==(const CactusWord&, const CactusWord&) = default;
};

struct BraidLetter {
    int index = 1;     // sigma_index, 1 <= index < strands
    int exponent = 1;  // +1 or -1
    friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

/// Word in sigma_i^{+-1} of B_n.
struct BraidWord {
    using Letter = BraidLetter;

    int strands = 0;
    std::vector<BraidLetter> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<BraidLetter> l);

    /// "g3" is sigma_3, "G3" its inverse; letters joined by "."; empty word "e".
    std::string to_string() const;
    static BraidWord parse(std::string_view text, int strands);

    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

template <class Word>
struct Relation {
    Word lhs;
    Word rhs;

    std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
    friend bool operator==(const Relation&, const Relation&) = default;
};

using CactusRelation = Relation<CactusWord>;
using BraidRelation = Relation<BraidWord>;

/// All relator pairs of the standard presentation of J_n: squares, disjoint
/// commutations, and containment relations s_{p,q} s_{k,l} = s_{r,t} s_{p,q}.
std::vector<CactusRelation> cactus_relation_instances(int n);

/// Far commutation and Yang-Baxter relations of B_n.
std::vector<BraidRelation> braid_relation_instances(int n);

Permutation project_to_symmetric(const CactusWord& w);
Permutation project_to_symmetric(const BraidWord& w);

template <class Word, class Elem>
struct ActionFailure {
    Relation<Word> relation;
    Elem witness;
    Elem lhs_image;
    Elem rhs_image;
};

template <class Elem>
using FiniteMap = std::function<Elem(const Elem&)>;

/// Apply a word to x, rightmost letter first (words compose as functions).
template <class Word, class Elem>
Elem apply_word(const std::map<typename Word::Letter, FiniteMap<Elem>>& images, const Word& w,
                Elem x) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        auto found = images.find(*it);
        if (found == images.end()) throw GroupError("no image given for a generator in " + w.to_string());
        x = found->second(x);
    }
    return x;
}

/// Check every relation pointwise on `domain`.  Each generator image must map
/// the domain into itself; otherwise GroupError is thrown.  Returns one
/// failure (with the first witness found) per violated relation.
template <class Word, class Elem, class Eq = std::equal_to<Elem>>
std::vector<ActionFailure<Word, Elem>> verify_action(
    const std::map<typename Word::Letter, FiniteMap<Elem>>& images,
    const std::vector<Relation<Word>>& relations, const std::vector<Elem>& domain, Eq eq = {}) {
    const std::set<Elem> members(domain.begin(), domain.end());
    for (const auto& [letter, f] : images) {
        for (const auto& x : domain) {
            if (!members.contains(f(x))) throw GroupError("generator image leaves the common domain");
        }
    }
    std::vector<ActionFailure<Word, Elem>> failures;
    for (const auto& rel : relations) {
        for (const auto& x : domain) {
            Elem l = apply_word(images, rel.lhs, x);
            Elem r = apply_word(images, rel.rhs, x);
            if (!eq(l, r)) {
                failures.push_back({rel, x, std::move(l), std::move(r)});
                break;
            }
        }
    }
    return failures;
}

/// JSON array of {"relation": ..., "witness": ...} objects.
template <class Word, class Elem>
std::string failures_to_json(const std::vector<ActionFailure<Word, Elem>>& failures,
                             const std::function<std::string(const Elem&)>& show);

struct FailureRecord {
    std::string relation;
    std::string witness;
    friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

std::string failure_records_to_json(const std::vector<FailureRecord>& records);
std::vector<FailureRecord> failure_records_from_json(std::string_view text);

template <class Word, class Elem>
std::string failures_to_json(const std::vector<ActionFailure<Word, Elem>>& failures,
                             const std::function<std::string(const Elem&)>& show) {
    std::vector<FailureRecord> records;
    records.reserve(failures.size());
    for (const auto& f : failures) records.push_back({f.relation.to_string(), show(f.witness)});
    return failure_records_to_json(records);
}

}  // namespace cactus
