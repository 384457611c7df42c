// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <functional>
#include <iostream>
#include <string>

#include "cactus/crystals.hpp"
#include "cactus/uqsl2.hpp"
#include "oracles.hpp"

using namespace cactus;

namespace {

QRational Q(int e) { return QRational::q_half_power(e); }
QRational q(int k = 1) { return QRational::q_power(k); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
    if (!cond && o.pass) {
        o.pass = false;
        o.detail = what;
    }
}

Outcome criterion_1() {
    Outcome o;
    const UqModule v1 = irreducible(1);
    const QMatrix expected = Q(-1) * QMatrix{{q(), 0, 0, 0}, {0, q() - q(-1), 1, 0}, {0, 1, 0, 0}, {0, 0, 0, q()}};
    require(o, braiding_matrix(v1, v1, Frame::S1) == expected, "flip o R on V1 (x) V1 in S1 differs");
    o.detail = o.pass ? "4x4 S1 matrix matches entrywise" : o.detail;
    return o;
}

Outcome criterion_2() {
    Outcome o;
    const UqModule v1 = irreducible(1);
    const QMatrix s2 = braiding_matrix(v1, v1, Frame::S2);
    require(o, s2.is_diagonal(), "S2 matrix not diagonal");
    const std::vector<QRational> expected{Q(1), -Q(-3), Q(1), Q(1)};
    for (std::size_t i = 0; i < 4 && o.pass; ++i)
        require(o, s2(i, i) == expected[i], "diagonal entry " + std::to_string(i) + " is " + s2(i, i).to_string());
    o.detail = o.pass ? "diag(q^1/2, -q^-3/2, q^1/2, q^1/2)" : o.detail;
    return o;
}

Outcome criterion_3() {
    Outcome o;
    const UqModule v1 = irreducible(1);
    const QRational d = 1 + q(2);
    const QMatrix commutor_s1{{1, 0, 0, 0},
                              {0, (q(2) - 1) / d, 2 * q() / d, 0},
                              {0, 2 * q() / d, (1 - q(2)) / d, 0},
                              {0, 0, 0, 1}};
    const QMatrix inv_sqrt = Q(-1) * QMatrix{{1, 0, 0, 0},
                                             {0, 2 * q(2) / d, (q() - q(3)) / d, 0},
                                             {0, (q() - q(3)) / d, (1 + q(4)) / d, 0},
                                             {0, 0, 0, 1}};
    const Unitarization u = unitarize(v1, v1);
    require(o, u.inv_sqrt == inv_sqrt, "(R^op R)^(-1/2) in S1 differs");
    require(o, unitarized_matrix(v1, v1, Frame::S1) == commutor_s1, "flip o Rbar in S1 differs");
    require(o, unitarized_matrix(v1, v1, Frame::S2) == QMatrix::diagonal({1, -1, 1, 1}), "flip o Rbar in S2 differs");
    o.detail = o.pass ? "S1, S2 and (R^op R)^(-1/2) match" : o.detail;
    return o;
}

Outcome criterion_4() {
    Outcome o;
    const UqModule v1 = irreducible(1);
    const SignedTable t = lattice_check_and_reduce(unitarized_matrix(v1, v1), v1, v1);
    require(o, t.entries == std::vector<std::vector<int>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}},
            "reduction of flip o Rbar differs");
    std::string message;
    try {
        lattice_check_and_reduce(braiding_matrix(v1, v1), v1, v1);
    } catch (const LatticeError& e) {
        message = e.what();
    }
    require(o, message.find("lattice not preserved") != std::string::npos, "flip o R did not raise lattice error");
    o.detail = o.pass ? "diag(1,1,-1,1); flip o R raises \"" + message + "\"" : o.detail;
    return o;
}

Outcome criterion_5() {
    Outcome o;
    const UqModule v1 = irreducible(1);
    require(o, yang_baxter_holds(1), "Yang-Baxter fails on V1^3");
    require(o, cactus_relation_holds(v1, v1, v1), "cactus relation fails on V1^3");
    require(o, involution_holds(v1, v1), "involution fails on V1 (x) V1");
    int pairs = 0;
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            require(o, involution_holds(irreducible(m), irreducible(n)),
                    "involution fails on V" + std::to_string(m) + " (x) V" + std::to_string(n));
            ++pairs;
        }
    int triples = 0;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                require(o, cactus_relation_holds(irreducible(a), irreducible(b), irreducible(c)),
                        "cactus relation fails on V" + std::to_string(a) + " (x) V" + std::to_string(b) + " (x) V" +
                            std::to_string(c));
                ++triples;
            }
    o.detail = o.pass ? "Yang-Baxter on V1^3; involution on " + std::to_string(pairs) + " pairs; cactus relation on " +
                            std::to_string(triples) + " triples"
                      : o.detail;
    return o;
}

Outcome criterion_6() {
    Outcome o;
    const auto triples = chain_triples(2);
    const CoboundaryReport cob = check_coboundary(triples);
    require(o, cob.ok(), "coboundary failures: " + cob.to_json());
    const CactusActionReport act = check_cactus_action(4, 2);
    require(o, act.ok(), "cactus action failures: " + act.to_json());
    o.detail = o.pass ? std::to_string(cob.triples_checked) + " triples, " + std::to_string(cob.words_checked) +
                            " words; J_4 on all 81 shapes (" + std::to_string(act.shapes_checked) + " orbits, " +
                            std::to_string(act.relations_checked) + " relations)"
                      : o.detail;
    return o;
}

Outcome criterion_7() {
    Outcome o;
    std::size_t words = 0;
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            const CrystalMap s = commutor_S({a}, {b});
            const CrystalMap c = commutor_c({a}, {b});
            require(o, s == c, "sigma^S != sigma^c on (" + std::to_string(a) + "," + std::to_string(b) + ")");
            words += s.table().size();
        }
    o.detail = o.pass ? "36 shape pairs, " + std::to_string(words) + " words" : o.detail;
    return o;
}

Outcome criterion_8() {
    Outcome o;
    const BraidingObstruction ob = braiding_obstruction();
    require(o, ob.forced.to_string() == "b1⊗b1⊗b-1", "forced value " + ob.forced.to_string());
    require(o, ob.hexagon.to_string() == "b1⊗b-1⊗b1", "hexagon value " + ob.hexagon.to_string());
    require(o, ob.obstruction(), "values coincide");
    o.detail = o.pass ? "forced " + ob.forced.to_string() + " != hexagon " + ob.hexagon.to_string() : o.detail;
    return o;
}

Outcome criterion_9() {
    Outcome o;
    for (int m = 0; m <= 3 && o.pass; ++m)
        for (int n = 0; n <= 3 && o.pass; ++n) {
            const std::string pair = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            const Kt07Report r = verify_kt07(m, n);
            require(o, r.ok(), "verify_kt07 " + pair + ": " + r.to_json());

            const auto oracle_isos = oracle::brute_force_isomorphisms({m, n}, {n, m});
            require(o, oracle_isos.size() == 1, "no unique crystal isomorphism on " + pair);
            if (!o.pass) break;
            const auto& sigma = oracle_isos.front();

            const UqModule a = irreducible(m);
            const UqModule b = irreducible(n);
            const UqModule ab = tensor_module(a, b);
            const UqModule ba = tensor_module(b, a);
            const SignedTable table = lattice_check_and_reduce(unitarized_matrix(a, b), a, b);
            for (std::size_t col = 0; col < ab.dim(); ++col) {
                const TensorWord& w = ab.basis[col];
                TensorWord top = w;
                while (const auto up = oracle::oracle_e(top)) top = *up;
                const int nu = top.weight();
                const int sign = ((m + n - nu) / 2) % 2 ? -1 : 1;
                const std::size_t row = ba.index_of(sigma.at(w));
                for (std::size_t r = 0; r < ba.dim(); ++r)
                    require(o, table.entries[r][col] == (r == row ? sign : 0),
                            "reduced entry mismatch at " + w.to_string() + " on " + pair);
            }
            for (const auto& e : r.entries)
                require(o, e.crystal_image == sigma.at(e.input), "library sigma^c differs from oracle at " +
                                                                       e.input.to_string());
        }
    o.detail = o.pass ? "16 pairs match the signed brute-force crystal isomorphism" : o.detail;
    return o;
}

Outcome criterion_10() {
    Outcome o;
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            const std::vector<int> expected = oracle::ladder(m, n);
            std::vector<int> got;
            for (const auto& c : decompose({m, n})) got.push_back(c.highest_weight);
            const std::string pair = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            require(o, got == expected, "decompose ladder differs on " + pair);
            const std::multiset<int> as_set(expected.begin(), expected.end());
            require(o, oracle::closure_highest_weights({m, n}) == as_set, "closure oracle differs on " + pair);
            require(o, oracle::counted_highest_weights({m, n}) == as_set, "dimension count differs on " + pair);
        }
    o.detail = o.pass ? "49 shapes, multiplicity one" : o.detail;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                         criterion_5, criterion_6, criterion_7, criterion_8,
                                                         criterion_9, criterion_10};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << o.detail << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
