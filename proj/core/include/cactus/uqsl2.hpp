#pragma once

// Finite-dimensional U_q(sl2)-modules over Q(q^(1/2)).
//
// Conventions (fixed once, checked by the tests):
//   K v_j = q^j v_j,  F v_{n-2i} = [i+1] v_{n-2i-2},  E v_{n-2i} = [n-i+1] v_{n-2i+2}
//   so that v_{n-2i} = F^(i) v_n (divided powers);
//   Delta(E) = E (x) K + 1 (x) E,  Delta(F) = F (x) 1 + K^-1 (x) F.
//
// Frames for M (x) N:
//   "S1" product frame: v_a (x) v_b with the first factor varying fastest,
//        giving v1v1, v-1v1, v1v-1, v-1v-1 on V1 (x) V1;
//   "S2" isotypic frame: highest weight vectors w (leading S1 coefficient 1)
//        and their descendants F^k w, sorted by descending weight and, within
//        a weight, by ascending highest weight of the component.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cactus/crystals.hpp"
#include "cactus/qexact.hpp"
#include "cactus/qmatrix.hpp"

namespace cactus {

class ConventionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class LatticeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A weight module with explicit E and F matrices.  The basis is labelled by
/// tensor words v_{j1} (x) ... (x) v_{jk}; K is diagonal, q^(weight).
struct UqModule {
    Shape shape;
    std::vector<TensorWord> basis;
    QMatrix E;
    QMatrix F;

    std::size_t dim() const { return basis.size(); }
    int weight(std::size_t i) const { return basis[i].weight(); }
    QMatrix K() const;
    QMatrix K_inv() const;
    std::size_t index_of(const TensorWord& w) const;
};

/// V_n.
UqModule irreducible(int n);

/// M (x) N through the coproduct.
UqModule tensor_module(const UqModule& m, const UqModule& n);

/// V_{n1} (x) ... (x) V_{nk}.
UqModule product_module(const Shape& shape);

/// Human-readable list of violated defining relations (empty when all hold):
/// K E K^-1 = q^2 E, K F K^-1 = q^-2 F, EF - FE = (K - K^-1)/(q - q^-1).
std::vector<std::string> relation_violations(const UqModule& m);

struct HighestWeightVector {
    int weight;
    QMatrix vector;  // column in the product frame
};

/// Basis of ker E in each weight space, descending weight; each vector is
/// scaled so its first nonzero product-frame coordinate is 1.
std::vector<HighestWeightVector> highest_weight_vectors(const UqModule& m);

enum class Frame { S1, S2 };
std::string frame_name(Frame f);
Frame parse_frame(std::string_view text);

struct IsotypicFrame {
    QMatrix basis;                      // columns are the frame vectors, in the product frame
    std::vector<int> component_weight;  // highest weight of the component of each column
    std::vector<std::size_t> component; // component index of each column
};

/// The S2 frame of a module (columns F^k w).
IsotypicFrame isotypic_frame(const UqModule& m);

/// flip : M (x) N -> N (x) M on product frames.
QMatrix flip_matrix(const UqModule& m, const UqModule& n);

/// R on M (x) N, product frame:
/// q^(H(x)H/2) sum_k q^(k(k-1)/2) (q - q^-1)^k / [k]! E^k (x) F^k.
QMatrix r_matrix(const UqModule& m, const UqModule& n);

/// flip o R : M (x) N -> N (x) M.  On first use the V1 (x) V1 result is
/// compared with the reference matrix; a mismatch throws ConventionError.
QMatrix braiding_matrix(const UqModule& m, const UqModule& n, Frame frame = Frame::S1);

/// Express a map M (x) N -> N (x) M given on product frames in the S2 frames.
QMatrix to_isotypic(const QMatrix& map, const UqModule& m, const UqModule& n);

struct Unitarization {
    QMatrix braiding;      // flip o R                      (product frame)
    QMatrix ropr;          // R^op R = sigma_{N,M} sigma_{M,N} (product frame of M (x) N)
    std::vector<QRational> block_scalars;  // eigenvalue of R^op R per S2 column
    QMatrix inv_sqrt;      // (R^op R)^(-1/2)               (product frame)
    QMatrix unitarized;    // flip o R (R^op R)^(-1/2)      (product frame)
};

/// Unitarization for a pair of modules whose tensor product is
/// multiplicity free (always true for two irreducibles).
Unitarization unitarize(const UqModule& m, const UqModule& n);

/// flip o Rbar : M (x) N -> N (x) M.  Arbitrary modules are handled by
/// decomposing both factors into irreducibles and using naturality.
QMatrix unitarized_matrix(const UqModule& m, const UqModule& n, Frame frame = Frame::S1);

struct Summand {
    int highest_weight;
    QMatrix embedding;   // V_nu -> M, columns F^(k) w
    QMatrix projection;  // M -> V_nu
};
std::vector<Summand> decompose_module(const UqModule& m);

/// Signed permutation over {0, +-1} obtained by reducing a lattice-preserving
/// map modulo q^(-1/2).  rows index the codomain product frame.
struct SignedTable {
    std::vector<TensorWord> row_labels;
    std::vector<TensorWord> col_labels;
    std::vector<std::vector<int>> entries;
    std::string to_string() const;
};

/// Throws LatticeError("lattice not preserved") when some entry is not in A,
/// and LatticeError when the reduction is not a signed permutation.
SignedTable lattice_check_and_reduce(const QMatrix& map, const UqModule& m, const UqModule& n);

struct Kt07Entry {
    TensorWord input;
    TensorWord crystal_image;  // sigma^c(input)
    int component_weight;      // nu
    int expected_sign;         // (-1)^((m + n - nu)/2)
    int reduced_entry;         // reduced flip o Rbar at (sigma^c(input), input)
};

struct Kt07Report {
    int m = 0;
    int n = 0;
    std::vector<Kt07Entry> entries;
    std::optional<TensorWord> mismatch;
    std::string error;  // set when the lattice check itself fails
    bool ok() const { return !mismatch && error.empty(); }
    std::string to_json() const;
};

/// Compare the crystal limit of flip o Rbar on V_m (x) V_n with the signed
/// crystal commutor.
Kt07Report verify_kt07(int m, int n);

/// Module-map check: X Delta(g)_{M(x)N} = Delta(g)_{N(x)M} X for g = E, F, K.
bool is_intertwiner(const QMatrix& map, const UqModule& m, const UqModule& n);

/// (s (x) id)(id (x) s)(s (x) id) = (id (x) s)(s (x) id)(id (x) s) for
/// s = flip o R on V_n (x) V_n (x) V_n.
bool yang_baxter_holds(int n);

using ModuleCommutor = QMatrix (*)(const UqModule&, const UqModule&, Frame);

/// sigma_{V(x)U,W} (sigma_{U,V} (x) id) = sigma_{U,W(x)V} (id (x) sigma_{V,W}) on U (x) V (x) W.
bool cactus_relation_holds(const UqModule& u, const UqModule& v, const UqModule& w,
                           ModuleCommutor commutor = &unitarized_matrix);

/// sigma_{N,M} sigma_{M,N} = id.
bool involution_holds(const UqModule& m, const UqModule& n, ModuleCommutor commutor = &unitarized_matrix);

}  // namespace cactus
