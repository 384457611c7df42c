#include "cactus/crystals.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace cactus {

namespace {

constexpr std::string_view kTensorSymbol = "⊗";

struct EpsPhi {
    int eps;
    int phi;
};

// epsilon/phi of (left) (x) (right) from those of the factors.
EpsPhi combine(EpsPhi left, EpsPhi right) {
    return {left.eps + std::max(0, right.eps - left.phi), right.phi + std::max(0, left.phi - right.eps)};
}

// Aggregates of every prefix: out[t] covers factors [0, t].
std::vector<EpsPhi> prefix_aggregates(const TensorWord& w) {
    std::vector<EpsPhi> out;
    out.reserve(w.size());
    for (std::size_t t = 0; t < w.size(); ++t) {
        EpsPhi here{w[t].epsilon(), w[t].phi()};
        out.push_back(t == 0 ? here : combine(out.back(), here));
    }
    return out;
}

TensorWord replace_factor(const TensorWord& w, std::size_t t, ChainElement b) {
    std::vector<ChainElement> f = w.factors();
    f[t] = b;
    return TensorWord(std::move(f));
}

}  // namespace

// -------------------------------------------------------------------- shapes

std::string shape_to_string(const Shape& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

Shape parse_shape(std::string_view text) {
    Shape out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string item(text.substr(pos, comma - pos));
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw CrystalError("malformed shape '" + std::string(text) + "'");
        }
        if (used != item.size() || v < 0) throw CrystalError("malformed shape '" + std::string(text) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

Shape concat(const Shape& a, const Shape& b) {
    Shape out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// -------------------------------------------------------------------- chains

ChainElement::ChainElement(int highest, int weight) : n(highest), j(weight) {
    if (n < 0 || weight > n || weight < -n || (n - weight) % 2 != 0)
        throw CrystalError("b_" + std::to_string(weight) + " is not an element of B_" + std::to_string(n));
}

std::optional<ChainElement> ChainElement::e() const {
    if (j == n) return std::nullopt;
    return ChainElement(n, j + 2);
}

std::optional<ChainElement> ChainElement::f() const {
    if (j == -n) return std::nullopt;
    return ChainElement(n, j - 2);
}

std::vector<ChainElement> chain_crystal(int n) {
    if (n < 0) throw CrystalError("chain crystal needs n >= 0");
    std::vector<ChainElement> out;
    for (int j = n; j >= -n; j -= 2) out.emplace_back(n, j);
    return out;
}

// --------------------------------------------------------------- TensorWord

TensorWord::TensorWord(std::vector<ChainElement> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw CrystalError("tensor words need at least one factor");
}

Shape TensorWord::shape() const {
    Shape s;
    s.reserve(factors_.size());
    for (const auto& b : factors_) s.push_back(b.n);
    return s;
}

int TensorWord::weight() const {
    int acc = 0;
    for (const auto& b : factors_) acc += b.j;
    return acc;
}

int TensorWord::epsilon() const { return prefix_aggregates(*this).back().eps; }
int TensorWord::phi() const { return prefix_aggregates(*this).back().phi; }

TensorWord TensorWord::slice(std::size_t begin, std::size_t end) const {
    return TensorWord(std::vector<ChainElement>(factors_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                factors_.begin() + static_cast<std::ptrdiff_t>(end)));
}

TensorWord operator*(const TensorWord& a, const TensorWord& b) {
    std::vector<ChainElement> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return TensorWord(std::move(f));
}

std::string TensorWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += kTensorSymbol;
        out += "b" + std::to_string(factors_[i].j);
    }
    return out;
}

TensorWord TensorWord::parse(std::string_view text, const Shape& shape) {
    std::vector<ChainElement> factors;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        std::size_t end = text.find(kTensorSymbol, pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        if (item.size() < 2 || item.front() != 'b')
            throw CrystalError("malformed tensor word '" + std::string(text) + "'");
        std::size_t used = 0;
        const std::string digits(item.substr(1));
        int j = 0;
        try {
            j = std::stoi(digits, &used);
        } catch (const std::exception&) {
            throw CrystalError("malformed tensor word '" + std::string(text) + "'");
        }
        if (used != digits.size()) throw CrystalError("malformed tensor word '" + std::string(text) + "'");
        factors.emplace_back(shape[i], j);
        pos = end == text.size() ? end : end + kTensorSymbol.size();
        if (i + 1 < shape.size() && end == text.size())
            throw CrystalError("tensor word '" + std::string(text) + "' is shorter than its shape");
    }
    if (pos != text.size()) throw CrystalError("tensor word '" + std::string(text) + "' is longer than its shape");
    return TensorWord(std::move(factors));
}

// ---------------------------------------------------------- Kashiwara operators

std::optional<TensorWord> tensor_f(const TensorWord& w) {
    const auto agg = prefix_aggregates(w);
    // Walk right to left: at factor t the left part is the prefix [0, t).
    for (std::size_t t = w.size(); t-- > 1;) {
        if (agg[t - 1].phi > w[t].epsilon()) continue;
        auto b = w[t].f();
        if (!b) return std::nullopt;
        return replace_factor(w, t, *b);
    }
    auto b = w[0].f();
    if (!b) return std::nullopt;
    return replace_factor(w, 0, *b);
}

std::optional<TensorWord> tensor_e(const TensorWord& w) {
    const auto agg = prefix_aggregates(w);
    for (std::size_t t = w.size(); t-- > 1;) {
        if (agg[t - 1].phi >= w[t].epsilon()) continue;
        auto b = w[t].e();
        if (!b) return std::nullopt;
        return replace_factor(w, t, *b);
    }
    auto b = w[0].e();
    if (!b) return std::nullopt;
    return replace_factor(w, 0, *b);
}

std::vector<TensorWord> all_words(const Shape& shape) {
    if (shape.empty()) throw CrystalError("empty shape");
    std::vector<std::vector<ChainElement>> acc{{}};
    for (int n : shape) {
        const auto chain = chain_crystal(n);
        std::vector<std::vector<ChainElement>> next;
        next.reserve(acc.size() * chain.size());
        for (const auto& prefix : acc) {
            for (const auto& b : chain) {
                auto w = prefix;
                w.push_back(b);
                next.push_back(std::move(w));
            }
        }
        acc = std::move(next);
    }
    std::vector<TensorWord> out;
    out.reserve(acc.size());
    for (auto& f : acc) out.emplace_back(std::move(f));
    return out;
}

// ------------------------------------------------------------ decomposition

Decomposition::Decomposition(const Shape& shape) : shape_(shape) {
    for (const auto& w : all_words(shape)) {
        if (tensor_e(w)) continue;
        Component c;
        c.source = w;
        std::optional<TensorWord> cur = w;
        while (cur) {
            c.chain.push_back(*cur);
            cur = tensor_f(*cur);
        }
        c.highest_weight = w.weight();
        if (static_cast<int>(c.chain.size()) != c.highest_weight + 1)
            throw CrystalError("component of " + w.to_string() + " is not a chain B_" + std::to_string(c.highest_weight));
        components_.push_back(std::move(c));
    }
    std::stable_sort(components_.begin(), components_.end(),
                     [](const Component& a, const Component& b) { return a.highest_weight > b.highest_weight; });
    for (std::size_t i = 0; i < components_.size(); ++i) {
        for (std::size_t d = 0; d < components_[i].chain.size(); ++d)
            where_.emplace(components_[i].chain[d], Location{i, static_cast<int>(d)});
    }
}

Decomposition::Location Decomposition::locate(const TensorWord& w) const {
    auto it = where_.find(w);
    if (it == where_.end())
        throw CrystalError("word " + w.to_string() + " does not belong to shape " + shape_to_string(shape_));
    return it->second;
}

const Component& Decomposition::component_of(const TensorWord& w) const {
    return components_[locate(w).component];
}

std::vector<ComponentSummary> decompose(const Shape& shape) {
    std::vector<ComponentSummary> out;
    const Decomposition d(shape);
    for (const auto& c : d.components()) out.push_back({c.source, c.highest_weight});
    return out;
}

// --------------------------------------------------------------- CrystalMap

CrystalMap::CrystalMap(Shape domain, Shape codomain, std::map<TensorWord, TensorWord> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
    for (const auto& [from, to] : table_) {
        if (from.shape() != domain_ || to.shape() != codomain_)
            throw CrystalError("crystal map entry " + from.to_string() + " -> " + to.to_string() +
                               " does not match shapes");
    }
}

CrystalMap CrystalMap::identity(const Shape& shape) {
    return tabulate(shape, shape, [](const TensorWord& w) { return w; });
}

CrystalMap CrystalMap::tabulate(const Shape& domain, const Shape& codomain,
                                const std::function<TensorWord(const TensorWord&)>& f) {
    std::map<TensorWord, TensorWord> table;
    for (const auto& w : all_words(domain)) table.emplace(w, f(w));
    return CrystalMap(domain, codomain, std::move(table));
}

TensorWord CrystalMap::operator()(const TensorWord& w) const {
    auto it = table_.find(w);
    if (it == table_.end())
        throw CrystalError("word " + w.to_string() + " is outside the domain " + shape_to_string(domain_));
    return it->second;
}

CrystalMap operator*(const CrystalMap& a, const CrystalMap& b) {
    if (b.codomain_ != a.domain_)
        throw CrystalError("cannot compose: codomain " + shape_to_string(b.codomain_) + " vs domain " +
                           shape_to_string(a.domain_));
    std::map<TensorWord, TensorWord> table;
    for (const auto& [w, v] : b.table_) table.emplace(w, a(v));
    return CrystalMap(b.domain_, a.codomain_, std::move(table));
}

bool CrystalMap::is_bijection() const {
    std::set<TensorWord> images;
    for (const auto& [w, v] : table_) images.insert(v);
    std::size_t expected = 1;
    for (int n : codomain_) expected *= static_cast<std::size_t>(n + 1);
    return images.size() == table_.size() && images.size() == expected;
}

std::optional<TensorWord> CrystalMap::morphism_violation() const {
    for (const auto& [w, v] : table_) {
        if (w.weight() != v.weight() || w.epsilon() != v.epsilon() || w.phi() != v.phi()) return w;
        for (auto op : {&tensor_e, &tensor_f}) {
            const auto a = op(w);
            const auto b = op(v);
            if (a.has_value() != b.has_value()) return w;
            if (a && (*this)(*a) != *b) return w;
        }
    }
    return std::nullopt;
}

std::string CrystalMap::to_json() const {
    nlohmann::json j;
    j["domain"] = domain_;
    j["codomain"] = codomain_;
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [w, v] : table_) table.push_back({w.to_string(), v.to_string()});
    j["table"] = std::move(table);
    return j.dump(2);
}

CrystalMap CrystalMap::from_json(std::string_view text) {
    const auto j = nlohmann::json::parse(text);
    Shape domain = j.at("domain").get<Shape>();
    Shape codomain = j.at("codomain").get<Shape>();
    std::map<TensorWord, TensorWord> table;
    for (const auto& row : j.at("table")) {
        table.emplace(TensorWord::parse(row.at(0).get<std::string>(), domain),
                      TensorWord::parse(row.at(1).get<std::string>(), codomain));
    }
    return CrystalMap(std::move(domain), std::move(codomain), std::move(table));
}

CrystalMap tensor_identity(const Shape& left, const CrystalMap& m, const Shape& right) {
    const std::size_t l = left.size();
    const std::size_t mid = m.domain().size();
    return CrystalMap::tabulate(concat(concat(left, m.domain()), right), concat(concat(left, m.codomain()), right),
                                [&](const TensorWord& w) {
                                    TensorWord out = m(w.slice(l, l + mid));
                                    if (l > 0) out = w.slice(0, l) * out;
                                    if (!right.empty()) out = out * w.slice(l + mid, w.size());
                                    return out;
                                });
}

// ------------------------------------------------------------- commutors

CrystalMap schutzenberger(const Shape& shape) {
    const Decomposition d(shape);
    return CrystalMap::tabulate(shape, shape, [&](const TensorWord& w) {
        const auto loc = d.locate(w);
        const auto& chain = d.components()[loc.component].chain;
        return chain[chain.size() - 1 - static_cast<std::size_t>(loc.depth)];
    });
}

CrystalMap commutor_S(const Shape& a, const Shape& b) {
    const CrystalMap xi_a = schutzenberger(a);
    const CrystalMap xi_b = schutzenberger(b);
    const CrystalMap xi_ba = schutzenberger(concat(b, a));
    const std::size_t k = a.size();
    return CrystalMap::tabulate(concat(a, b), concat(b, a), [&](const TensorWord& w) {
        return xi_ba(xi_b(w.slice(k, w.size())) * xi_a(w.slice(0, k)));
    });
}

InfinityElement kashiwara_star(InfinityElement b) { return b; }

InfinityElement embed_in_infinity(const ChainElement& b) { return {b.depth()}; }

int epsilon_star(InfinityElement b) { return b.depth; }

ChainElement reinterpret(InfinityElement b, int n) {
    if (epsilon_star(b) > n)
        throw CrystalError("f^" + std::to_string(b.depth) + " b_inf is not in the image of B_" + std::to_string(n));
    return ChainElement(n, n - 2 * b.depth);
}

CrystalMap commutor_c_irreducible(int lambda, int mu) {
    const Decomposition from({lambda, mu});
    const Decomposition to({mu, lambda});
    // Image component for each source component.
    std::vector<std::size_t> target(from.components().size());
    for (std::size_t i = 0; i < from.components().size(); ++i) {
        const TensorWord& src = from.components()[i].source;
        if (src[0] != ChainElement(lambda, lambda))
            throw CrystalError("highest weight element " + src.to_string() + " is not of the form b_lambda (x) b");
        const InfinityElement star = kashiwara_star(embed_in_infinity(src[1]));
        const TensorWord image({ChainElement(mu, mu), reinterpret(star, lambda)});
        if (tensor_e(image))
            throw CrystalError("b_mu (x) b* = " + image.to_string() + " is not highest weight");
        const auto loc = to.locate(image);
        target[i] = loc.component;
    }
    return CrystalMap::tabulate({lambda, mu}, {mu, lambda}, [&](const TensorWord& w) {
        const auto loc = from.locate(w);
        return to.components()[target[loc.component]].chain[static_cast<std::size_t>(loc.depth)];
    });
}

CrystalMap commutor_c(const Shape& a, const Shape& b) {
    const Decomposition da(a);
    const Decomposition db(b);
    std::map<std::pair<int, int>, CrystalMap> cache;
    const std::size_t k = a.size();
    return CrystalMap::tabulate(concat(a, b), concat(b, a), [&](const TensorWord& w) {
        const auto la = da.locate(w.slice(0, k));
        const auto lb = db.locate(w.slice(k, w.size()));
        const Component& ca = da.components()[la.component];
        const Component& cb = db.components()[lb.component];
        const int lambda = ca.highest_weight;
        const int mu = cb.highest_weight;
        auto it = cache.find({lambda, mu});
        if (it == cache.end()) it = cache.emplace(std::pair{lambda, mu}, commutor_c_irreducible(lambda, mu)).first;
        const TensorWord image =
            it->second(TensorWord({ChainElement(lambda, lambda - 2 * la.depth), ChainElement(mu, mu - 2 * lb.depth)}));
        return cb.chain[static_cast<std::size_t>(image[0].depth())] * ca.chain[static_cast<std::size_t>(image[1].depth())];
    });
}

Commutor crystal_commutor() { return [](const Shape& a, const Shape& b) { return commutor_c(a, b); }; }

Commutor schutzenberger_commutor() { return [](const Shape& a, const Shape& b) { return commutor_S(a, b); }; }

// ----------------------------------------------------------- cactus action

CrystalMap sigma_pq(const Shape& shape, int p, int q, const Commutor& commutor) {
    const int k = static_cast<int>(shape.size());
    if (!(1 <= p && p < q && q <= k))
        throw CrystalError("sigma_{" + std::to_string(p) + "," + std::to_string(q) + "} out of range for shape " +
                           shape_to_string(shape));
    const auto at = [&](int i) { return shape.begin() + i; };
    const Shape left(shape.begin(), at(p - 1));
    const Shape first{shape[static_cast<std::size_t>(p - 1)]};
    const Shape rest(at(p), at(q));
    const Shape right(at(q), shape.end());
    return tensor_identity(left, commutor(first, rest), right);
}

CrystalMap cactus_action(const Shape& shape, int p, int q, const Commutor& commutor) {
    const int k = static_cast<int>(shape.size());
    if (!(1 <= p && p <= q && q <= k))
        throw CrystalError("s_{" + std::to_string(p) + "," + std::to_string(q) + "} out of range for shape " +
                           shape_to_string(shape));
    if (p == q) return CrystalMap::identity(shape);
    const CrystalMap inner = cactus_action(shape, p + 1, q, commutor);
    return sigma_pq(inner.codomain(), p, q, commutor) * inner;
}

// ------------------------------------------------------------ isomorphisms

std::vector<CrystalMap> all_isomorphisms(const Shape& from, const Shape& to) {
    const Decomposition df(from);
    const Decomposition dt(to);
    std::map<int, std::vector<std::size_t>> by_weight_from;
    std::map<int, std::vector<std::size_t>> by_weight_to;
    for (std::size_t i = 0; i < df.components().size(); ++i)
        by_weight_from[df.components()[i].highest_weight].push_back(i);
    for (std::size_t i = 0; i < dt.components().size(); ++i)
        by_weight_to[dt.components()[i].highest_weight].push_back(i);
    if (by_weight_from.size() != by_weight_to.size()) return {};
    for (const auto& [w, ids] : by_weight_from) {
        auto it = by_weight_to.find(w);
        if (it == by_weight_to.end() || it->second.size() != ids.size()) return {};
    }

    // Enumerate one bijection per highest weight, odometer style.
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
    for (const auto& [w, ids] : by_weight_from) groups.emplace_back(ids, by_weight_to[w]);
    std::vector<CrystalMap> out;
    for (;;) {
        std::vector<std::size_t> target(df.components().size());
        for (const auto& [src, dst] : groups)
            for (std::size_t i = 0; i < src.size(); ++i) target[src[i]] = dst[i];
        out.push_back(CrystalMap::tabulate(from, to, [&](const TensorWord& w) {
            const auto loc = df.locate(w);
            return dt.components()[target[loc.component]].chain[static_cast<std::size_t>(loc.depth)];
        }));
        std::size_t g = 0;
        while (g < groups.size() && !std::next_permutation(groups[g].second.begin(), groups[g].second.end())) ++g;
        if (g == groups.size()) break;
    }
    return out;
}

// ---------------------------------------------------------------- checkers

std::vector<std::array<Shape, 3>> chain_triples(int max_weight) {
    std::vector<std::array<Shape, 3>> out;
    for (int a = 0; a <= max_weight; ++a)
        for (int b = 0; b <= max_weight; ++b)
            for (int c = 0; c <= max_weight; ++c) out.push_back({Shape{a}, Shape{b}, Shape{c}});
    return out;
}

CoboundaryReport check_coboundary(const std::vector<std::array<Shape, 3>>& triples, const Commutor& commutor) {
    CoboundaryReport report;
    for (const auto& [a, b, c] : triples) {
        ++report.triples_checked;

        const CrystalMap round_trip = commutor(b, a) * commutor(a, b);
        for (const auto& [w, v] : round_trip.table()) {
            ++report.words_checked;
            if (w != v) {
                report.failures.push_back({"involution", {a, b}, w, v, w});
                break;
            }
        }

        const CrystalMap lhs = commutor(concat(b, a), c) * tensor_identity({}, commutor(a, b), c);
        const CrystalMap rhs = commutor(a, concat(c, b)) * tensor_identity(a, commutor(b, c), {});
        for (const auto& [w, v] : lhs.table()) {
            ++report.words_checked;
            const TensorWord r = rhs(w);
            if (v != r) {
                report.failures.push_back({"cactus", {a, b, c}, w, v, r});
                break;
            }
        }
    }
    return report;
}

std::string CoboundaryReport::to_json() const {
    nlohmann::json j;
    j["triples_checked"] = triples_checked;
    j["words_checked"] = words_checked;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures) {
        nlohmann::json shapes = nlohmann::json::array();
        for (const auto& s : f.shapes) shapes.push_back(s);
        fails.push_back({{"condition", f.condition},
                         {"shapes", shapes},
                         {"witness", f.witness.to_string()},
                         {"lhs", f.lhs.to_string()},
                         {"rhs", f.rhs.to_string()}});
    }
    j["failures"] = std::move(fails);
    return j.dump(2);
}

CactusActionReport check_cactus_action(int factors, int max_weight, const Commutor& commutor) {
    if (factors < 2) throw CrystalError("cactus action check needs at least two factors");
    CactusActionReport report;
    const auto relations = cactus_relation_instances(factors);
    report.relations_checked = relations.size();

    // One orbit per multiset of highest weights; the domain is every word of
    // every rearrangement, so each shape is also a starting point.
    Shape shape(static_cast<std::size_t>(factors), 0);
    for (;;) {
        std::set<Shape> arrangements;
        Shape perm = shape;
        do arrangements.insert(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<TensorWord> domain;
        std::map<std::pair<Shape, CactusGenerator>, CrystalMap> maps;
        for (const auto& s : arrangements) {
            for (auto& w : all_words(s)) domain.push_back(std::move(w));
            for (int p = 1; p <= factors; ++p)
                for (int q = p + 1; q <= factors; ++q)
                    maps.emplace(std::pair{s, CactusGenerator{p, q}}, cactus_action(s, p, q, commutor));
        }
        std::map<CactusGenerator, FiniteMap<TensorWord>> images;
        for (int p = 1; p <= factors; ++p) {
            for (int q = p + 1; q <= factors; ++q) {
                const CactusGenerator g{p, q};
                images.emplace(g, [&maps, g](const TensorWord& w) { return maps.at({w.shape(), g})(w); });
            }
        }
        const auto failures = verify_action<CactusWord, TensorWord>(images, relations, domain);
        for (const auto& f : failures)
            report.failures.push_back({f.relation.to_string(), f.witness.to_string()});
        ++report.shapes_checked;

        // next nondecreasing multiset
        int i = factors - 1;
        while (i >= 0 && shape[static_cast<std::size_t>(i)] == max_weight) --i;
        if (i < 0) break;
        const int v = shape[static_cast<std::size_t>(i)] + 1;
        for (int t = i; t < factors; ++t) shape[static_cast<std::size_t>(t)] = v;
    }
    return report;
}

std::string CactusActionReport::to_json() const {
    nlohmann::json j;
    j["shapes_checked"] = shapes_checked;
    j["relations_checked"] = relations_checked;
    j["failures"] = nlohmann::json::parse(failure_records_to_json(failures));
    return j.dump(2);
}

// -------------------------------------------------------------- obstruction

BraidingObstruction braiding_obstruction() {
    BraidingObstruction out;
    const auto iso11 = all_isomorphisms({1, 1}, {1, 1});
    const auto iso12 = all_isomorphisms({1, 2}, {2, 1});
    if (iso11.size() != 1 || iso12.size() != 1)
        throw CrystalError("expected unique isomorphisms B1(x)B1 -> B1(x)B1 and B1(x)B2 -> B2(x)B1");
    out.sigma_11 = iso11.front();
    out.sigma_12 = iso12.front();

    // j : B2 -> B1(x)B1 onto the component of b1(x)b1.
    const Decomposition d11({1, 1});
    const TensorWord top({ChainElement(1, 1), ChainElement(1, 1)});
    out.inclusion = d11.component_of(top).chain;
    const auto j = [&](const ChainElement& b) { return out.inclusion[static_cast<std::size_t>(b.depth())]; };

    out.start = TensorWord({ChainElement(1, 1), ChainElement(2, 0)});
    out.pushed = TensorWord({out.start[0]}) * j(out.start[1]);

    const TensorWord swapped = out.sigma_12(out.start);
    out.forced = j(swapped[0]) * TensorWord({swapped[1]});

    const CrystalMap first = tensor_identity({}, out.sigma_11, {1});
    const CrystalMap second = tensor_identity({1}, out.sigma_11, {});
    out.hexagon = (second * first)(out.pushed);
    return out;
}

std::string BraidingObstruction::to_json() const {
    nlohmann::json j;
    j["sigma_11_is_identity"] = sigma_11 == CrystalMap::identity({1, 1});
    j["sigma_12"] = {{start.to_string(), sigma_12(start).to_string()}};
    nlohmann::json inc = nlohmann::json::array();
    for (const auto& w : inclusion) inc.push_back(w.to_string());
    j["inclusion"] = std::move(inc);
    j["input"] = pushed.to_string();
    j["forced"] = forced.to_string();
    j["hexagon"] = hexagon.to_string();
    j["obstruction"] = obstruction();
    return j.dump(2);
}

// --------------------------------------------------------------------- DOT

std::string to_dot(const Shape& shape) {
    const Decomposition d(shape);
    std::ostringstream os;
    os << "digraph \"B(" << shape_to_string(shape) << ")\" {\n";
    for (std::size_t i = 0; i < d.components().size(); ++i) {
        const auto& c = d.components()[i];
        os << "  subgraph cluster_" << i << " {\n";
        os << "    label=\"B_" << c.highest_weight << "\";\n";
        for (const auto& w : c.chain) os << "    \"" << w.to_string() << "\";\n";
        for (std::size_t k = 0; k + 1 < c.chain.size(); ++k)
            os << "    \"" << c.chain[k].to_string() << "\" -> \"" << c.chain[k + 1].to_string() << "\";\n";
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace cactus
