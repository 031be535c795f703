#include "equibundle/document.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace equibundle {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    if (trim(s).empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const auto k = s.find(sep, start);
        out.push_back(trim(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start)));
        if (k == std::string_view::npos) break;
        start = k + 1;
    }
    return out;
}

std::int64_t parse_int(std::string_view s) {
    s = trim(s);
    std::int64_t v = 0;
    const char* b = s.data();
    if (!s.empty() && s[0] == '+') ++b;
    const auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw ParseError("expected an integer, got '" + std::string(s) + "'");
    return v;
}

std::size_t parse_size(std::string_view s) {
    const auto v = parse_int(s);
    if (v < 0) throw ParseError("expected a nonnegative integer, got '" + std::string(s) + "'");
    return static_cast<std::size_t>(v);
}

mpz_class parse_bigint(std::string_view s) {
    s = trim(s);
    std::string t(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    const std::size_t digits = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (t.size() == digits || t.find_first_not_of("0123456789", digits) != std::string::npos)
        throw ParseError("expected an integer, got '" + std::string(s) + "'");
    return mpz_class(t, 10);
}

// Coefficient: integer or p/q.
Scalar parse_number(std::string_view s, Field f) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return f.from_ratio(parse_bigint(s), 1);
    const mpz_class den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    try {
        return f.from_ratio(parse_bigint(s.substr(0, slash)), den);
    } catch (const DivisionByZero&) {
        throw ParseError("denominator not invertible in " + f.name() + ": '" + std::string(s) + "'");
    }
}

bool is_number(std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789/") == std::string_view::npos;
}

// One term of a sum: a coefficient and variable powers (variable index, exponent).
struct Term {
    Scalar coeff;
    std::vector<std::pair<std::size_t, std::int64_t>> powers;
};

// Splits "a - b + c" into signed terms. A sign directly after '^' belongs
// to the exponent.
template <typename VarIndex>
std::vector<Term> parse_sum(std::string_view s, Field f, VarIndex var_index) {
    s = trim(s);
    if (s.empty()) throw ParseError("empty expression");
    std::vector<Term> out;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        while (i < s.size() && (s[i] == ' ' || s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') negative = !negative;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !((s[j] == '+' || s[j] == '-') && j > i && s[j - 1] != '^')) ++j;
        const auto body = trim(s.substr(i, j - i));
        if (body.empty()) throw ParseError("dangling sign in '" + std::string(s) + "'");
        Term t{f.one(), {}};
        for (auto factor : split(body, '*')) {
            if (factor.empty()) throw ParseError("empty factor in '" + std::string(s) + "'");
            if (is_number(factor)) {
                t.coeff *= parse_number(factor, f);
                continue;
            }
            const auto caret = factor.find('^');
            const auto name = trim(factor.substr(0, caret));
            const std::int64_t e = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1));
            t.powers.emplace_back(var_index(name), e);
        }
        if (negative) t.coeff = -t.coeff;
        out.push_back(std::move(t));
        i = j;
    }
    return out;
}

// Splits "[a, b], [c]" style row lists; rejects nested brackets.
std::vector<std::string_view> parse_row(std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected [..], got '" + std::string(s) + "'");
    const auto inner = s.substr(1, s.size() - 2);
    if (inner.find_first_of("[]") != std::string_view::npos) throw ParseError("unexpected bracket in '" + std::string(s) + "'");
    auto items = split(inner, ',');
    for (auto x : items)
        if (x.empty()) throw ParseError("empty entry in '" + std::string(s) + "'");
    return items;
}

std::vector<std::vector<std::string_view>> parse_rows(std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected a matrix, got '" + std::string(s) + "'");
    const auto inner = trim(s.substr(1, s.size() - 2));
    std::vector<std::vector<std::string_view>> rows;
    std::size_t i = 0;
    while (i < inner.size()) {
        if (inner[i] != '[') throw ParseError("expected '[' in matrix '" + std::string(s) + "'");
        const auto close = inner.find(']', i);
        if (close == std::string_view::npos) throw ParseError("unclosed row in '" + std::string(s) + "'");
        rows.push_back(parse_row(inner.substr(i, close - i + 1)));
        i = close + 1;
        while (i < inner.size() && inner[i] == ' ') ++i;
        if (i == inner.size()) break;
        if (inner[i] != ',') throw ParseError("expected ',' between rows in '" + std::string(s) + "'");
        ++i;
        while (i < inner.size() && inner[i] == ' ') ++i;
        if (i == inner.size()) throw ParseError("trailing ',' in '" + std::string(s) + "'");
    }
    return rows;
}

template <typename T, typename Elem>
Matrix<T> parse_matrix(std::string_view s, const T& zero, std::size_t rows, std::optional<std::size_t> cols,
                       Elem elem) {
    const auto text = parse_rows(s);
    if (text.size() != rows)
        throw ParseError("matrix has " + std::to_string(text.size()) + " rows, expected " + std::to_string(rows));
    const std::size_t c = cols ? *cols : (rows ? text[0].size() : 0);
    Matrix<T> m(rows, c, zero);
    for (std::size_t i = 0; i < rows; ++i) {
        if (text[i].size() != c)
            throw ParseError("matrix row " + std::to_string(i) + " has " + std::to_string(text[i].size()) +
                             " entries, expected " + std::to_string(c));
        for (std::size_t j = 0; j < c; ++j) m(i, j) = elem(text[i][j]);
    }
    return m;
}

template <typename T, typename Fmt>
std::string format_matrix(const Matrix<T>& m, Fmt fmt) {
    if (m.rows() == 0) return "[]";
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + fmt(m(i, j));
        out += "]";
    }
    return out + "]";
}

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep = ", ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::vector<std::int64_t> parse_int_list(std::string_view s) {
    std::vector<std::int64_t> out;
    for (auto x : split(s, ',')) out.push_back(parse_int(x));
    return out;
}

Field parse_field(std::string_view s) {
    s = trim(s);
    if (s == "Q") return Field::rationals();
    if (s.size() > 1 && s[0] == 'F') {
        const auto p = parse_int(s.substr(1));
        if (p < 2 || p > 0x7fffffff || !is_prime(static_cast<std::uint64_t>(p)))
            throw InvalidArgument("F" + std::string(s.substr(1)) + " is not a prime field");
        return Field::prime(static_cast<std::uint32_t>(p));
    }
    throw ParseError("unknown field '" + std::string(s) + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> parse_relations(std::string_view s) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto r : split(s, ',')) {
        const auto lt = r.find('<');
        if (lt == std::string_view::npos) throw ParseError("expected i<j, got '" + std::string(r) + "'");
        out.emplace_back(parse_size(r.substr(0, lt)), parse_size(r.substr(lt + 1)));
    }
    return out;
}

std::string format_relations(const FinitePoset& x) {
    std::string out;
    for (const auto& [a, b] : x.cover_relations())
        out += (out.empty() ? "" : ", ") + std::to_string(a) + "<" + std::to_string(b);
    return out;
}

std::string format_vector(const AlgVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return out + "]";
}

// "key = value", with "key =" for an empty value.
void line(std::string& out, const std::string& key, const std::string& value) {
    out += key + (value.empty() ? " =\n" : " = " + value + "\n");
}

struct Entry {
    std::string value;
    int line;
    bool used = false;
};

class Body {
public:
    explicit Body(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

    bool has(const std::string& key) const { return entries_.count(key) > 0; }

    std::string_view get(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw ParseError("missing key '" + key + "'");
        it->second.used = true;
        return it->second.value;
    }

    std::optional<std::string_view> maybe(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return get(key);
    }

    /// Runs f with errors tagged by the key's line.
    template <typename F>
    auto at(const std::string& key, F f) {
        const int ln = has(key) ? entries_.at(key).line : 0;
        try {
            return f(get(key));
        } catch (const ParseError& e) {
            if (e.line() > 0) throw;
            throw ParseError(e.what(), ln);
        }
    }

    void check_all_used() const {
        for (const auto& [k, e] : entries_)
            if (!e.used) throw ParseError("unexpected key '" + k + "'", e.line);
    }

private:
    std::map<std::string, Entry> entries_;
};

Polynomial poly_from_terms(const std::vector<Term>& terms, Field f, std::size_t nvars) {
    Polynomial p(f, nvars);
    for (const auto& t : terms) {
        Monomial m(nvars, 0);
        for (const auto& [v, e] : t.powers) {
            if (e < 0) throw ParseError("negative exponent in a polynomial");
            m[v] += static_cast<std::uint32_t>(e);
        }
        p.add_term(m, t.coeff);
    }
    return p;
}

std::vector<Polynomial> parse_poly_list(std::string_view s, Field f, std::size_t nvars) {
    std::vector<Polynomial> out;
    for (auto x : split(s, ',')) out.push_back(parse_polynomial(x, f, nvars));
    return out;
}

GradedAlgebra parse_graded_algebra(Body& b, Field f) {
    const auto degrees = b.at("degrees", parse_int_list);
    std::vector<Polynomial> rels;
    if (b.has("algebra_relations"))
        rels = b.at("algebra_relations", [&](auto s) { return parse_poly_list(s, f, degrees.size()); });
    return GradedAlgebra(f, degrees, std::move(rels));
}

void print_graded_algebra(std::string& out, const GradedAlgebra& a) {
    line(out, "degrees", join(a.degrees()));
    if (a.relations().empty()) return;
    std::vector<std::string> rels;
    for (const auto& r : a.relations()) rels.push_back(r.to_string());
    line(out, "algebra_relations", join(rels));
}

PolyMatrix parse_poly_matrix(Body& b, const std::string& key, const GradedAlgebra& a, std::size_t rows,
                             std::optional<std::size_t> cols) {
    return b.at(key, [&](auto s) {
        return parse_matrix(s, a.zero(), rows, cols, [&](auto e) { return parse_polynomial(e, a.field(), a.nvars()); });
    });
}

std::string format_poly_matrix(const PolyMatrix& m) {
    return format_matrix(m, [](const Polynomial& p) { return p.to_string(); });
}

Document parse_body(const std::string& kind, Body& b, std::optional<Field> declared, Field f) {
    if (kind == "laurent_matrix") {
        auto m = b.at("matrix", [&](auto s) {
            const auto rows = parse_rows(s).size();
            return parse_matrix(s, LaurentPoly(f), rows, rows, [&](auto e) { return parse_laurent(e, f); });
        });
        if (m.rows() == 0) throw InvalidArgument("empty matrix");
        return {declared, LaurentMatrix(std::move(m))};
    }
    if (kind == "splitting_type") return {declared, SplittingType(b.at("degrees", parse_int_list))};
    if (kind == "graded_algebra") return {declared, parse_graded_algebra(b, f)};
    if (kind == "graded_module") {
        auto alg = parse_graded_algebra(b, f);
        const auto gens = b.at("generators", parse_int_list);
        PolyMatrix rel(gens.size(), 0, alg.zero());
        if (b.has("relations")) rel = parse_poly_matrix(b, "relations", alg, gens.size(), std::nullopt);
        GradedModuleDocument d{GradedModulePresentation(alg, gens, std::move(rel)), std::nullopt, std::nullopt};
        if (b.has("target")) d.target = b.at("target", parse_int_list);
        if (b.has("map")) {
            if (!d.target) throw ParseError("'map' requires 'target'");
            d.map = parse_poly_matrix(b, "map", alg, d.target->size(), gens.size());
        }
        return {declared, std::move(d)};
    }
    if (kind == "filtered_module") {
        const TruncatedRing ring{f, b.at("nilpotency", parse_size)};
        if (ring.nilpotency == 0) throw InvalidArgument("nilpotency must be at least 1");
        const auto window = b.at("window", parse_int_list);
        if (window.size() != 2 || window[0] > window[1]) throw ParseError("window must be 'lo, hi' with lo <= hi");
        std::vector<std::size_t> ranks;
        b.at("ranks", [&](auto s) {
            for (auto x : split(s, ',')) ranks.push_back(parse_size(x));
            return 0;
        });
        if (ranks.size() != static_cast<std::size_t>(window[1] - window[0] + 1))
            throw ParseError("ranks must list one rank per degree in the window");
        std::vector<TruncMatrix> maps;
        for (std::size_t k = 0; k + 1 < ranks.size(); ++k)
            maps.push_back(b.at("map " + std::to_string(window[0] + static_cast<std::int64_t>(k)), [&](auto s) {
                return parse_matrix(s, Truncated(ring), ranks[k + 1], ranks[k],
                                    [&](auto e) { return parse_truncated(e, ring); });
            }));
        return {declared, FilteredModule(ring, window[0], std::move(ranks), std::move(maps))};
    }
    if (kind == "findim_algebra") {
        const std::size_t d = b.at("dimension", parse_size);
        if (d == 0) throw InvalidArgument("dimension must be positive");
        auto vec = [&](std::string_view s) {
            const auto items = parse_row(s);
            if (items.size() != d) throw ParseError("vector must have " + std::to_string(d) + " entries");
            AlgVector v;
            for (auto x : items) v.push_back(parse_scalar(x, f));
            return v;
        };
        const AlgVector zero(d, f.zero());
        std::vector<std::vector<AlgVector>> products(d, std::vector<AlgVector>(d, zero));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                const std::string key = "product " + std::to_string(i) + " " + std::to_string(j);
                const std::string swapped = "product " + std::to_string(j) + " " + std::to_string(i);
                if (b.has(key)) products[i][j] = b.at(key, vec);
                if (i != j && b.has(swapped)) {
                    const auto v = b.at(swapped, vec);
                    if (b.has(key) && v != products[i][j]) throw InvalidArgument("product is not commutative");
                    products[i][j] = v;
                }
                products[j][i] = products[i][j];
            }
        std::vector<AlgVector> ideal;
        if (b.has("ideal"))
            b.at("ideal", [&](auto s) {
                for (const auto& row : parse_rows(s)) {
                    if (row.size() != d) throw ParseError("ideal vectors must have " + std::to_string(d) + " entries");
                    AlgVector v;
                    for (auto x : row) v.push_back(parse_scalar(x, f));
                    ideal.push_back(std::move(v));
                }
                return 0;
            });
        FindimDocument doc{FiniteDimAlgebra(f, std::move(products), b.at("unit", vec), std::move(ideal)), std::nullopt};
        if (b.has("element")) doc.element = b.at("element", vec);
        return {declared, std::move(doc)};
    }
    if (kind == "poset")
        return {declared, FinitePoset(b.at("size", parse_size), b.at("relations", parse_relations))};
    if (kind == "monotone_map") {
        FinitePoset src(b.at("source_size", parse_size), b.at("source_relations", parse_relations));
        FinitePoset tgt(b.at("target_size", parse_size), b.at("target_relations", parse_relations));
        std::vector<std::size_t> images;
        b.at("map", [&](auto s) {
            for (auto x : split(s, ',')) images.push_back(parse_size(x));
            return 0;
        });
        if (images.size() != src.size()) throw InvalidArgument("map must list one image per source point");
        for (auto y : images)
            if (y >= tgt.size()) throw InvalidArgument("image " + std::to_string(y) + " outside the target");
        return {declared, MonotoneMap(std::move(src), std::move(tgt), std::move(images))};
    }
    throw ParseError("unknown kind '" + kind + "'");
}

}  // namespace

std::string Document::kind() const {
    static const char* const names[] = {"laurent_matrix", "splitting_type", "graded_algebra", "graded_module",
                                        "filtered_module", "findim_algebra", "poset", "monotone_map"};
    return names[body.index()];
}

Scalar parse_scalar(std::string_view s, Field f) {
    s = trim(s);
    const auto mod = s.find(" mod ");
    if (mod == std::string_view::npos) {
        bool negative = !s.empty() && s[0] == '-';
        const auto v = parse_number(trim(negative ? s.substr(1) : s), f);
        return negative ? -v : v;
    }
    const auto n = parse_int(s.substr(mod + 5));
    if (f.is_rational() || static_cast<std::int64_t>(f.characteristic()) != n)
        throw ParseError("'" + std::string(s) + "' is not a scalar of " + f.name());
    return f.from_ratio(parse_bigint(s.substr(0, mod)), 1);
}

LaurentPoly parse_laurent(std::string_view s, Field f) {
    LaurentPoly p(f);
    for (const auto& t : parse_sum(s, f, [&](std::string_view name) -> std::size_t {
             if (name != "t") throw ParseError("unknown variable '" + std::string(name) + "'");
             return 0;
         })) {
        std::int64_t e = 0;
        for (const auto& pw : t.powers) e += pw.second;
        p.add_term(e, t.coeff);
    }
    return p;
}

Polynomial parse_polynomial(std::string_view s, Field f, std::size_t nvars) {
    const auto terms = parse_sum(s, f, [&](std::string_view name) -> std::size_t {
        if (name.size() >= 2 && name[0] == 'x') {
            const auto k = parse_size(name.substr(1));
            if (k >= 1 && k <= nvars) return k - 1;
        }
        throw ParseError("unknown variable '" + std::string(name) + "'");
    });
    return poly_from_terms(terms, f, nvars);
}

Truncated parse_truncated(std::string_view s, TruncatedRing r) {
    std::vector<Scalar> c(r.nilpotency, r.field.zero());
    for (const auto& t : parse_sum(s, r.field, [&](std::string_view name) -> std::size_t {
             if (name != "e") throw ParseError("unknown variable '" + std::string(name) + "'");
             return 0;
         })) {
        std::int64_t e = 0;
        for (const auto& pw : t.powers) e += pw.second;
        if (e < 0) throw ParseError("negative power of e");
        if (static_cast<std::size_t>(e) < r.nilpotency) c[static_cast<std::size_t>(e)] += t.coeff;
    }
    return Truncated(r, std::move(c));
}

Document parse_document(std::string_view text, Field default_field) {
    std::map<std::string, Entry> entries;
    std::istringstream is{std::string(text)};
    std::string raw;
    int ln = 0;
    while (std::getline(is, raw)) {
        ++ln;
        const auto l = trim(raw);
        if (l.empty() || l[0] == '#') continue;
        const auto eq = l.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", ln);
        std::string key;
        for (auto w : split(trim(l.substr(0, eq)), ' '))
            if (!w.empty()) key += (key.empty() ? "" : " ") + std::string(w);
        if (key.empty()) throw ParseError("empty key", ln);
        if (!entries.emplace(key, Entry{std::string(trim(l.substr(eq + 1))), ln}).second)
            throw ParseError("duplicate key '" + key + "'", ln);
    }
    Body b(std::move(entries));
    const std::string kind(b.at("kind", [](auto s) { return s; }));
    std::optional<Field> declared;
    if (b.has("field")) declared = b.at("field", parse_field);
    Document doc = parse_body(kind, b, declared, declared.value_or(default_field));
    b.check_all_used();
    return doc;
}

std::string print_document(const Document& doc) {
    std::string out;
    line(out, "kind", doc.kind());
    if (doc.field) line(out, "field", doc.field->name());
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, LaurentMatrix>) {
                line(out, "matrix", format_matrix(x.grid(), [](const LaurentPoly& p) { return p.to_string(); }));
            } else if constexpr (std::is_same_v<T, SplittingType>) {
                line(out, "degrees", join(x.degrees()));
            } else if constexpr (std::is_same_v<T, GradedAlgebra>) {
                print_graded_algebra(out, x);
            } else if constexpr (std::is_same_v<T, GradedModuleDocument>) {
                print_graded_algebra(out, x.module.algebra());
                line(out, "generators", join(x.module.generator_degrees()));
                if (x.module.relations().cols() > 0) line(out, "relations", format_poly_matrix(x.module.relations()));
                if (x.target) line(out, "target", join(*x.target));
                if (x.map) line(out, "map", format_poly_matrix(*x.map));
            } else if constexpr (std::is_same_v<T, FilteredModule>) {
                line(out, "nilpotency", std::to_string(x.ring().nilpotency));
                line(out, "window", std::to_string(x.lo()) + ", " + std::to_string(x.hi()));
                line(out, "ranks", join(x.ranks()));
                for (std::int64_t i = x.lo(); i < x.hi(); ++i)
                    line(out, "map " + std::to_string(i),
                         format_matrix(x.map_at(i), [](const Truncated& a) { return a.to_string(); }));
            } else if constexpr (std::is_same_v<T, FindimDocument>) {
                const auto& a = x.algebra;
                line(out, "dimension", std::to_string(a.dimension()));
                line(out, "unit", format_vector(a.unit()));
                for (std::size_t i = 0; i < a.dimension(); ++i)
                    for (std::size_t j = i; j < a.dimension(); ++j)
                        line(out, "product " + std::to_string(i) + " " + std::to_string(j),
                             format_vector(a.products()[i][j]));
                if (!a.ideal().empty()) {
                    std::string rows = "[";
                    for (std::size_t k = 0; k < a.ideal().size(); ++k)
                        rows += (k ? ", " : "") + format_vector(a.ideal()[k]);
                    line(out, "ideal", rows + "]");
                }
                if (x.element) line(out, "element", format_vector(*x.element));
            } else if constexpr (std::is_same_v<T, FinitePoset>) {
                line(out, "size", std::to_string(x.size()));
                line(out, "relations", format_relations(x));
            } else {
                line(out, "source_size", std::to_string(x.source().size()));
                line(out, "source_relations", format_relations(x.source()));
                line(out, "target_size", std::to_string(x.target().size()));
                line(out, "target_relations", format_relations(x.target()));
                line(out, "map", join(x.images()));
            }
        },
        doc.body);
    return out;
}

}  // namespace equibundle
