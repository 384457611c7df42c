#pragma once

// sl2 crystals: chains B_n, flat tensor words with the Kashiwara tensor
// product rule, connected components, the Schutzenberger and Kashiwara
// commutors, the cactus group action on k-fold tensor products, and the
// checkers built on top of them.
//
// Tensor products are strict: a k-fold tensor product is a flat word of k
// chain elements and its shape is the list of highest weights.  Tensoring
// shapes is concatenation.

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/groups.hpp"

namespace cactus {

class CrystalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Shape = std::vector<int>;

std::string shape_to_string(const Shape& s);
/// "1,2" -> {1, 2}
Shape parse_shape(std::string_view text);
Shape concat(const Shape& a, const Shape& b);

/// Element b_j of the chain B_n: b_n -> b_{n-2} -> ... -> b_{-n}.
struct ChainElement {
    int n = 0;
    int j = 0;

    ChainElement() = default;
    ChainElement(int highest, int weight);

    int depth() const { return (n - j) / 2; }
    int weight() const { return j; }
    int epsilon() const { return (n - j) / 2; }
    int phi() const { return (n + j) / 2; }
    std::optional<ChainElement> e() const;
    std::optional<ChainElement> f() const;

    friend auto operator<=>(const ChainElement&, const ChainElement&) = default;
};

/// The chain B_n, top to bottom.
std::vector<ChainElement> chain_crystal(int n);

/// Flat tensor word b_{j1} (x) ... (x) b_{jk}.
class TensorWord {
public:
    TensorWord() = default;
    explicit TensorWord(std::vector<ChainElement> factors);

    const std::vector<ChainElement>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    const ChainElement& operator[](std::size_t i) const { return factors_[i]; }
    Shape shape() const;

    int weight() const;
    int epsilon() const;
    int phi() const;

    /// Slice [begin, end) of the factors.
    TensorWord slice(std::size_t begin, std::size_t end) const;
    friend TensorWord operator*(const TensorWord& a, const TensorWord& b);  // concatenation

    /// "b1⊗b-1"
    std::string to_string() const;
    static TensorWord parse(std::string_view text, const Shape& shape);

    friend auto operator<=>(const TensorWord&, const TensorWord&) = default;

private:
    std::vector<ChainElement> factors_;
};

/// Kashiwara operators on flat words.  The binary tensor product rule is
/// applied as a left fold: the prefix b_1 (x) ... (x) b_{t-1} acts as a
/// single left factor with its aggregate epsilon and phi.
std::optional<TensorWord> tensor_f(const TensorWord& w);
std::optional<TensorWord> tensor_e(const TensorWord& w);

/// All words of a shape, first factor varying slowest, each factor top to bottom.
std::vector<TensorWord> all_words(const Shape& shape);

struct Component {
    TensorWord source;
    int highest_weight = 0;
    std::vector<TensorWord> chain;  // source, f(source), f^2(source), ...
};

/// Connected components of the crystal of one shape, ordered by descending
/// highest weight and then by source word.
class Decomposition {
public:
    explicit Decomposition(const Shape& shape);

    const Shape& shape() const { return shape_; }
    const std::vector<Component>& components() const { return components_; }

    struct Location {
        std::size_t component;
        int depth;
    };
    Location locate(const TensorWord& w) const;
    const Component& component_of(const TensorWord& w) const;

private:
    Shape shape_;
    std::vector<Component> components_;
    std::map<TensorWord, Location> where_;
};

struct ComponentSummary {
    TensorWord source;
    int highest_weight;
};
std::vector<ComponentSummary> decompose(const Shape& shape);

/// Explicit bijection-or-not between the word sets of two shapes.
class CrystalMap {
public:
    CrystalMap() = default;
    CrystalMap(Shape domain, Shape codomain, std::map<TensorWord, TensorWord> table);

    static CrystalMap identity(const Shape& shape);
    /// Build by evaluating `f` on every word of `domain`.
    static CrystalMap tabulate(const Shape& domain, const Shape& codomain,
                               const std::function<TensorWord(const TensorWord&)>& f);

    const Shape& domain() const { return domain_; }
    const Shape& codomain() const { return codomain_; }
    const std::map<TensorWord, TensorWord>& table() const { return table_; }

    TensorWord operator()(const TensorWord& w) const;

    /// (a * b)(w) = a(b(w))
    friend CrystalMap operator*(const CrystalMap& a, const CrystalMap& b);
    friend bool operator==(const CrystalMap&, const CrystalMap&) = default;

    bool is_bijection() const;

    /// First word at which the map fails to be a crystal morphism (commuting
    /// with e and f, zero going to zero, and preserving wt, epsilon, phi).
    std::optional<TensorWord> morphism_violation() const;
    bool is_isomorphism() const { return is_bijection() && !morphism_violation(); }

    std::string to_json() const;
    static CrystalMap from_json(std::string_view text);

private:
    Shape domain_;
    Shape codomain_;
    std::map<TensorWord, TensorWord> table_;
};

/// id_left (x) m (x) id_right
CrystalMap tensor_identity(const Shape& left, const CrystalMap& m, const Shape& right);

/// Schutzenberger involution: reverses each connected component.
CrystalMap schutzenberger(const Shape& shape);

/// sigma^S(a (x) b) = xi_{B(x)A}(xi_B(b) (x) xi_A(a))
CrystalMap commutor_S(const Shape& a, const Shape& b);

/// Element f^depth(b_inf) of the sl2 crystal B_infinity.
struct InfinityElement {
    int depth = 0;
    friend auto operator<=>(const InfinityElement&, const InfinityElement&) = default;
};

/// The Kashiwara involution on B_infinity.  For sl2 there is one element per
/// weight and * preserves weight, so it is the identity.
InfinityElement kashiwara_star(InfinityElement b);
/// iota^infinity : B_n -> B_infinity
InfinityElement embed_in_infinity(const ChainElement& b);
/// epsilon*(b): the least n with b in iota^infinity(B_n).
int epsilon_star(InfinityElement b);
/// Preimage of b under iota^infinity : B_n -> B_infinity; needs epsilon*(b) <= n.
ChainElement reinterpret(InfinityElement b, int n);

/// sigma^c on B_lambda (x) B_mu: b_lambda (x) b  |->  b_mu (x) b*, extended
/// along each component.
CrystalMap commutor_c_irreducible(int lambda, int mu);

/// sigma^c for arbitrary shapes, defined componentwise through the
/// decompositions of A and B.
CrystalMap commutor_c(const Shape& a, const Shape& b);

using Commutor = std::function<CrystalMap(const Shape&, const Shape&)>;
Commutor crystal_commutor();
Commutor schutzenberger_commutor();

/// sigma_{p,q} = id (x) sigma_{U_p, U_{p+1} (x) ... (x) U_q} (x) id; 1-based, p < q.
CrystalMap sigma_pq(const Shape& shape, int p, int q, const Commutor& commutor = crystal_commutor());

/// The cactus generator s_{p,q} acting on a shape:
/// s_{p,p} = id, s_{p,q} = sigma_{p,q} o s_{p+1,q}.
CrystalMap cactus_action(const Shape& shape, int p, int q, const Commutor& commutor = crystal_commutor());

/// Every crystal isomorphism between two shapes, by matching components of
/// equal highest weight in all possible ways.
std::vector<CrystalMap> all_isomorphisms(const Shape& from, const Shape& to);

struct CoboundaryFailure {
    std::string condition;  // "involution" or "cactus"
    std::vector<Shape> shapes;
    TensorWord witness;
    TensorWord lhs;
    TensorWord rhs;
};

struct CoboundaryReport {
    std::size_t triples_checked = 0;
    std::size_t words_checked = 0;
    std::vector<CoboundaryFailure> failures;
    bool ok() const { return failures.empty(); }
    std::string to_json() const;
};

/// For each (A, B, C): sigma_{B,A} o sigma_{A,B} = id on A(x)B and the cactus
/// square sigma_{B(x)A,C} o (sigma_{A,B} (x) id) = sigma_{A,C(x)B} o (id (x) sigma_{B,C}).
CoboundaryReport check_coboundary(const std::vector<std::array<Shape, 3>>& triples,
                                  const Commutor& commutor = crystal_commutor());

/// Triples of single chains with highest weights 0..max.
std::vector<std::array<Shape, 3>> chain_triples(int max_weight);

struct CactusActionReport {
    std::size_t shapes_checked = 0;
    std::size_t relations_checked = 0;
    std::vector<FailureRecord> failures;
    bool ok() const { return failures.empty(); }
    std::string to_json() const;
};

/// J_n presentation checked on every word of every rearrangement of each
/// n-factor shape with entries in 0..max_weight.
CactusActionReport check_cactus_action(int factors, int max_weight,
                                       const Commutor& commutor = crystal_commutor());

struct BraidingObstruction {
    CrystalMap sigma_11;              // unique isomorphism B1(x)B1 -> B1(x)B1
    CrystalMap sigma_12;              // unique isomorphism B1(x)B2 -> B2(x)B1
    std::vector<TensorWord> inclusion;  // j(b2), j(b0), j(b-2) in B1(x)B1
    TensorWord start;                 // b1 (x) b0 in B1(x)B2
    TensorWord pushed;                // (id (x) j)(start)
    TensorWord forced;                // (j (x) id)(sigma_12(start))
    TensorWord hexagon;               // (id (x) sigma_11)(sigma_11 (x) id)(pushed)
    bool obstruction() const { return forced != hexagon; }
    std::string to_json() const;
};

/// The contradiction showing B1 admits no braiding.
BraidingObstruction braiding_obstruction();

/// Graphviz rendering: one node per word, one edge per f, components as clusters.
std::string to_dot(const Shape& shape);

}  // namespace cactus
