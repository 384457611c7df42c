#include "cactus/uqsl2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cactus {

namespace {

std::vector<TensorWord> product_labels(const std::vector<TensorWord>& first, const std::vector<TensorWord>& second) {
    std::vector<TensorWord> out;
    out.reserve(first.size() * second.size());
    for (const auto& b : second)
        for (const auto& a : first) out.push_back(a * b);
    return out;
}

// The V1 (x) V1 braiding in the S1 frame that every convention is pinned to:
// q^(-1/2) [[q,0,0,0],[0,q-q^-1,1,0],[0,1,0,0],[0,0,0,q]].
QMatrix reference_braiding_v1v1() {
    const QRational s = QRational::q_half_power(-1);
    const QRational q = QRational::q();
    return s * QMatrix{{q, 0, 0, 0}, {0, q - q.inverse(), 1, 0}, {0, 1, 0, 0}, {0, 0, 0, q}};
}

void calibrate_once() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        const UqModule v1 = irreducible(1);
        const QMatrix got = flip_matrix(v1, v1) * r_matrix(v1, v1);
        if (!(got == reference_braiding_v1v1()))
            throw ConventionError("R-matrix convention mismatch on V1 (x) V1:\n" + got.to_string());
    });
}

QMatrix weight_diagonal(const UqModule& m, int sign) {
    QMatrix k(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) k(i, i) = QRational::q_power(sign * m.weight(i));
    return k;
}

}  // namespace

// ------------------------------------------------------------------ modules

QMatrix UqModule::K() const { return weight_diagonal(*this, 1); }
QMatrix UqModule::K_inv() const { return weight_diagonal(*this, -1); }

std::size_t UqModule::index_of(const TensorWord& w) const {
    auto it = std::find(basis.begin(), basis.end(), w);
    if (it == basis.end()) throw CrystalError("basis vector " + w.to_string() + " not in module");
    return static_cast<std::size_t>(it - basis.begin());
}

UqModule irreducible(int n) {
    if (n < 0) throw CrystalError("irreducible module needs n >= 0");
    UqModule m;
    m.shape = {n};
    for (const auto& b : chain_crystal(n)) m.basis.push_back(TensorWord({b}));
    const auto d = static_cast<std::size_t>(n + 1);
    m.E = QMatrix(d, d);
    m.F = QMatrix(d, d);
    for (int i = 0; i <= n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (i < n) m.F(ui + 1, ui) = quantum_int(i + 1);
        if (i > 0) m.E(ui - 1, ui) = quantum_int(n - i + 1);
    }
    return m;
}

UqModule tensor_module(const UqModule& m, const UqModule& n) {
    UqModule out;
    out.shape = concat(m.shape, n.shape);
    out.basis = product_labels(m.basis, n.basis);
    const QMatrix im = QMatrix::identity(m.dim());
    const QMatrix in = QMatrix::identity(n.dim());
    out.E = tensor(m.E, n.K()) + tensor(im, n.E);
    out.F = tensor(m.F, in) + tensor(m.K_inv(), n.F);
    return out;
}

UqModule product_module(const Shape& shape) {
    if (shape.empty()) throw CrystalError("empty shape");
    UqModule acc = irreducible(shape.front());
    for (std::size_t i = 1; i < shape.size(); ++i) acc = tensor_module(acc, irreducible(shape[i]));
    return acc;
}

std::vector<std::string> relation_violations(const UqModule& m) {
    std::vector<std::string> out;
    const QMatrix k = m.K();
    const QMatrix kinv = m.K_inv();
    const QRational q2 = QRational::q_power(2);
    if (!(k * kinv == QMatrix::identity(m.dim()))) out.emplace_back("K K^-1 = 1");
    if (!(k * m.E * kinv == q2 * m.E)) out.emplace_back("K E K^-1 = q^2 E");
    if (!(k * m.F * kinv == q2.inverse() * m.F)) out.emplace_back("K F K^-1 = q^-2 F");
    const QRational denom = (QRational::q() - QRational::q_power(-1)).inverse();
    if (!(m.E * m.F - m.F * m.E == denom * (k - kinv))) out.emplace_back("EF - FE = (K - K^-1)/(q - q^-1)");
    return out;
}

// ------------------------------------------------------ highest weight data

std::vector<HighestWeightVector> highest_weight_vectors(const UqModule& m) {
    std::map<int, std::vector<std::size_t>, std::greater<>> by_weight;
    for (std::size_t i = 0; i < m.dim(); ++i) by_weight[m.weight(i)].push_back(i);

    std::vector<HighestWeightVector> out;
    for (const auto& [w, idx] : by_weight) {
        const QMatrix ker = m.E.columns(idx).kernel();
        for (std::size_t k = 0; k < ker.cols(); ++k) {
            QMatrix v(m.dim(), 1);
            std::optional<QRational> lead;
            for (std::size_t r = 0; r < idx.size(); ++r) {
                v(idx[r], 0) = ker(r, k);
                if (!lead && !ker(r, k).is_zero()) lead = ker(r, k);
            }
            out.push_back({w, lead->inverse() * v});
        }
    }
    return out;
}

std::string frame_name(Frame f) { return f == Frame::S1 ? "S1" : "S2"; }

Frame parse_frame(std::string_view text) {
    if (text == "S1" || text == "s1") return Frame::S1;
    if (text == "S2" || text == "s2") return Frame::S2;
    throw std::invalid_argument("unknown frame '" + std::string(text) + "'");
}

IsotypicFrame isotypic_frame(const UqModule& m) {
    struct Column {
        int weight;
        int component_weight;
        std::size_t component;
        QMatrix vec;
    };
    std::vector<Column> cols;
    const auto hws = highest_weight_vectors(m);
    for (std::size_t c = 0; c < hws.size(); ++c) {
        QMatrix v = hws[c].vector;
        for (int k = 0; k <= hws[c].weight; ++k) {
            cols.push_back({hws[c].weight - 2 * k, hws[c].weight, c, v});
            v = m.F * v;
        }
    }
    std::stable_sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.component_weight < b.component_weight;
    });
    IsotypicFrame out;
    out.basis = QMatrix(m.dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t i = 0; i < m.dim(); ++i) out.basis(i, j) = cols[j].vec(i, 0);
        out.component_weight.push_back(cols[j].component_weight);
        out.component.push_back(cols[j].component);
    }
    if (cols.size() != m.dim()) throw ArithmeticError("highest weight vectors do not span the module");
    return out;
}

std::vector<Summand> decompose_module(const UqModule& m) {
    const auto hws = highest_weight_vectors(m);
    QMatrix all(m.dim(), m.dim());
    std::vector<Summand> out;
    std::size_t col = 0;
    for (const auto& hw : hws) {
        Summand s{hw.weight, QMatrix(m.dim(), static_cast<std::size_t>(hw.weight + 1)), {}};
        QMatrix v = hw.vector;
        for (int k = 0; k <= hw.weight; ++k) {
            const QMatrix divided = quantum_factorial(k).inverse() * v;
            for (std::size_t i = 0; i < m.dim(); ++i) {
                s.embedding(i, static_cast<std::size_t>(k)) = divided(i, 0);
                all(i, col) = divided(i, 0);
            }
            ++col;
            v = m.F * v;
        }
        out.push_back(std::move(s));
    }
    if (col != m.dim()) throw ArithmeticError("highest weight vectors do not span the module");
    const QMatrix inv = all.inverse();
    std::size_t row = 0;
    for (auto& s : out) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(s.highest_weight + 1));
        std::iota(idx.begin(), idx.end(), row);
        s.projection = inv.rows_subset(idx);
        row += idx.size();
    }
    return out;
}

// --------------------------------------------------------------- R-matrix

QMatrix flip_matrix(const UqModule& m, const UqModule& n) {
    QMatrix out(m.dim() * n.dim(), m.dim() * n.dim());
    for (std::size_t i2 = 0; i2 < n.dim(); ++i2)
        for (std::size_t i1 = 0; i1 < m.dim(); ++i1) out(i2 + n.dim() * i1, i1 + m.dim() * i2) = 1;
    return out;
}

QMatrix r_matrix(const UqModule& m, const UqModule& n) {
    const QRational q = QRational::q();
    const QRational step = q - q.inverse();
    QMatrix sum(m.dim() * n.dim(), m.dim() * n.dim());
    QMatrix ek = QMatrix::identity(m.dim());
    QMatrix fk = QMatrix::identity(n.dim());
    for (int k = 0;; ++k) {
        if (ek.is_zero() || fk.is_zero()) break;
        QRational c = QRational::q_half_power(k * (k - 1)) / quantum_factorial(k);
        for (int i = 0; i < k; ++i) c *= step;
        sum += c * tensor(ek, fk);
        ek = ek * m.E;
        fk = fk * n.F;
    }
    // q^(H (x) H / 2) = Q^(a b) on v_a (x) v_b
    QMatrix d(m.dim() * n.dim(), m.dim() * n.dim());
    for (std::size_t i2 = 0; i2 < n.dim(); ++i2)
        for (std::size_t i1 = 0; i1 < m.dim(); ++i1) {
            const std::size_t i = i1 + m.dim() * i2;
            d(i, i) = QRational::q_half_power(m.weight(i1) * n.weight(i2));
        }
    return d * sum;
}

QMatrix to_isotypic(const QMatrix& map, const UqModule& m, const UqModule& n) {
    const QMatrix p_mn = isotypic_frame(tensor_module(m, n)).basis;
    const QMatrix p_nm = isotypic_frame(tensor_module(n, m)).basis;
    return p_nm.inverse() * map * p_mn;
}

QMatrix braiding_matrix(const UqModule& m, const UqModule& n, Frame frame) {
    calibrate_once();
    const QMatrix x = flip_matrix(m, n) * r_matrix(m, n);
    return frame == Frame::S1 ? x : to_isotypic(x, m, n);
}

// ---------------------------------------------------------- unitarization

Unitarization unitarize(const UqModule& m, const UqModule& n) {
    Unitarization u;
    u.braiding = braiding_matrix(m, n);
    u.ropr = braiding_matrix(n, m) * u.braiding;

    const IsotypicFrame frame = isotypic_frame(tensor_module(m, n));
    const QMatrix p_inv = frame.basis.inverse();
    const QMatrix block = p_inv * u.ropr * frame.basis;
    if (!block.is_diagonal()) throw ArithmeticError("R^op R is not block scalar in the isotypic frame");
    std::map<std::size_t, QRational> per_component;
    std::vector<QRational> inv_roots;
    for (std::size_t i = 0; i < block.rows(); ++i) {
        const QRational& s = block(i, i);
        auto [it, fresh] = per_component.try_emplace(frame.component[i], s);
        if (!fresh && !(it->second == s))
            throw ArithmeticError("R^op R is not a scalar on the component of highest weight " +
                                  std::to_string(frame.component_weight[i]));
        u.block_scalars.push_back(s);
        inv_roots.push_back(monomial_sqrt(s).inverse());
    }
    u.inv_sqrt = frame.basis * QMatrix::diagonal(inv_roots) * p_inv;
    u.unitarized = u.braiding * u.inv_sqrt;
    if (m.shape == n.shape && !(u.unitarized * u.unitarized == QMatrix::identity(m.dim() * n.dim())))
        throw ArithmeticError("unitarized braiding is not an involution");
    return u;
}

QMatrix unitarized_matrix(const UqModule& m, const UqModule& n, Frame frame) {
    QMatrix x;
    if (m.shape.size() == 1 && n.shape.size() == 1) {
        x = unitarize(m, n).unitarized;
    } else {
        // Naturality: sigma_{M,N} = sum (i_b (x) i_a) sigma_{V_a,V_b} (p_a (x) p_b).
        const auto dm = decompose_module(m);
        const auto dn = decompose_module(n);
        std::map<std::pair<int, int>, QMatrix> cache;
        x = QMatrix(m.dim() * n.dim(), m.dim() * n.dim());
        for (const auto& a : dm) {
            for (const auto& b : dn) {
                const auto key = std::pair{a.highest_weight, b.highest_weight};
                auto it = cache.find(key);
                if (it == cache.end())
                    it = cache.emplace(key, unitarize(irreducible(a.highest_weight), irreducible(b.highest_weight)).unitarized)
                             .first;
                x += tensor(b.embedding, a.embedding) * it->second * tensor(a.projection, b.projection);
            }
        }
    }
    return frame == Frame::S1 ? x : to_isotypic(x, m, n);
}

// ------------------------------------------------------------ crystal limit

std::string SignedTable::to_string() const {
    std::ostringstream os;
    for (const auto& row : entries) {
        os << '[';
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j];
        os << "]\n";
    }
    return os.str();
}

SignedTable lattice_check_and_reduce(const QMatrix& map, const UqModule& m, const UqModule& n) {
    SignedTable t;
    t.row_labels = product_labels(n.basis, m.basis);
    t.col_labels = product_labels(m.basis, n.basis);
    if (map.rows() != t.row_labels.size() || map.cols() != t.col_labels.size())
        throw std::invalid_argument("matrix size does not match M (x) N -> N (x) M");
    t.entries.assign(map.rows(), std::vector<int>(map.cols(), 0));
    for (std::size_t r = 0; r < map.rows(); ++r) {
        for (std::size_t c = 0; c < map.cols(); ++c) {
            const QRational& x = map(r, c);
            if (!is_regular_at_infinity(x))
                throw LatticeError("lattice not preserved: entry (" + t.row_labels[r].to_string() + ", " +
                                   t.col_labels[c].to_string() + ") = " + x.to_string());
            const mpq_class v = reduce_mod_qhalf(x);
            if (v != 0 && v != 1 && v != -1)
                throw LatticeError("reduction is not a signed permutation: entry " + v.get_str());
            t.entries[r][c] = static_cast<int>(v.get_num().get_si());
        }
    }
    for (std::size_t r = 0; r < map.rows(); ++r) {
        int row_nonzero = 0;
        int col_nonzero = 0;
        for (std::size_t c = 0; c < map.cols(); ++c) {
            row_nonzero += t.entries[r][c] != 0;
            col_nonzero += t.entries[c][r] != 0;
        }
        if (row_nonzero != 1 || col_nonzero != 1)
            throw LatticeError("reduction is not a signed permutation");
    }
    return t;
}

Kt07Report verify_kt07(int m, int n) {
    Kt07Report report;
    report.m = m;
    report.n = n;
    const UqModule vm = irreducible(m);
    const UqModule vn = irreducible(n);
    SignedTable table;
    try {
        table = lattice_check_and_reduce(unitarized_matrix(vm, vn), vm, vn);
    } catch (const LatticeError& e) {
        report.error = e.what();
        return report;
    }
    const CrystalMap sigma = commutor_c_irreducible(m, n);
    const Decomposition components({m, n});
    for (std::size_t c = 0; c < table.col_labels.size(); ++c) {
        const TensorWord& input = table.col_labels[c];
        Kt07Entry e;
        e.input = input;
        e.crystal_image = sigma(input);
        e.component_weight = components.component_of(input).highest_weight;
        e.expected_sign = ((m + n - e.component_weight) / 2) % 2 == 0 ? 1 : -1;
        const auto row = static_cast<std::size_t>(
            std::find(table.row_labels.begin(), table.row_labels.end(), e.crystal_image) - table.row_labels.begin());
        e.reduced_entry = table.entries.at(row)[c];
        if (e.reduced_entry != e.expected_sign && !report.mismatch) report.mismatch = input;
        report.entries.push_back(std::move(e));
    }
    return report;
}

std::string Kt07Report::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["n"] = n;
    j["ok"] = ok();
    if (!error.empty()) j["error"] = error;
    if (mismatch) j["mismatch"] = mismatch->to_string();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries) {
        rows.push_back({{"input", e.input.to_string()},
                        {"crystal_image", e.crystal_image.to_string()},
                        {"component", e.component_weight},
                        {"sign", e.expected_sign},
                        {"reduced", e.reduced_entry}});
    }
    j["entries"] = std::move(rows);
    return j.dump(2);
}

// ------------------------------------------------------------ identities

bool is_intertwiner(const QMatrix& map, const UqModule& m, const UqModule& n) {
    const UqModule mn = tensor_module(m, n);
    const UqModule nm = tensor_module(n, m);
    return map * mn.E == nm.E * map && map * mn.F == nm.F * map && map * mn.K() == nm.K() * map;
}

bool yang_baxter_holds(int n) {
    const UqModule v = irreducible(n);
    const QMatrix s = braiding_matrix(v, v);
    const QMatrix id = QMatrix::identity(v.dim());
    const QMatrix s1 = tensor(s, id);
    const QMatrix s2 = tensor(id, s);
    return s1 * s2 * s1 == s2 * s1 * s2;
}

bool cactus_relation_holds(const UqModule& u, const UqModule& v, const UqModule& w, ModuleCommutor commutor) {
    const QMatrix lhs = commutor(tensor_module(v, u), w, Frame::S1) *
                        tensor(commutor(u, v, Frame::S1), QMatrix::identity(w.dim()));
    const QMatrix rhs = commutor(u, tensor_module(w, v), Frame::S1) *
                        tensor(QMatrix::identity(u.dim()), commutor(v, w, Frame::S1));
    return lhs == rhs;
}

bool involution_holds(const UqModule& m, const UqModule& n, ModuleCommutor commutor) {
    return commutor(n, m, Frame::S1) * commutor(m, n, Frame::S1) == QMatrix::identity(m.dim() * n.dim());
}

}  // namespace cactus
