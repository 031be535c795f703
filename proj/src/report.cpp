#include "equibundle/report.hpp"

#include <algorithm>
#include <sstream>

namespace equibundle {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

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

std::string fmt(const LaurentMatrix& m) {
    return format_matrix(m.grid(), [](const LaurentPoly& p) { return p.to_string(); });
}
std::string fmt(const PolyMatrix& m) {
    return format_matrix(m, [](const Polynomial& p) { return p.to_string(); });
}
std::string fmt(const ScalarMatrix& m) {
    return format_matrix(m, [](const Scalar& s) { return s.to_string(); });
}
std::string fmt(const TruncMatrix& m) {
    return format_matrix(m, [](const Truncated& a) { return a.to_string(); });
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os.str();
}

std::string dims_to_string(const std::map<std::int64_t, std::size_t>& dims) {
    return GradedFiberData{dims}.to_string();
}

template <typename T>
const T& expect(const Document& doc, std::string_view command) {
    const T* x = std::get_if<T>(&doc.body);
    if (!x) throw InvalidArgument(std::string(command) + " does not accept kind " + doc.kind());
    return *x;
}

Field resolve_field(const Document& doc, const RunOptions& o) {
    if (doc.field && o.field && !(*doc.field == *o.field))
        throw InvalidArgument("--field " + o.field->name() + " conflicts with field " + doc.field->name());
    return doc.field ? *doc.field : o.field.value_or(Field::rationals());
}

std::pair<std::int64_t, std::int64_t> window(const RunOptions& o) { return o.twist_window.value_or(std::pair{-3, 3}); }

void h0_table(std::ostringstream& os, const BundleOnP1& e, const RunOptions& o) {
    const auto [lo, hi] = window(o);
    const auto type = splitting_type(e);
    bool agree = true;
    os << "h0 window: " << lo << ".." << hi << "\n";
    for (std::int64_t m = lo; m <= hi; ++m) {
        const std::int64_t bound = o.degree_bound ? *o.degree_bound : h0_degree_bound(e, m);
        const std::size_t h = o.degree_bound ? h0_truncated(e, m, bound) : h0_dimension(e, m);
        os << "h0(" << m << ") = " << h << " [degree bound " << bound << "]\n";
        agree = agree && h == h0_of_split(type, m);
    }
    if (o.verify) os << "h0 matches sum max(0, d_i + m + 1): " << yes_no(agree) << "\n";
}

void birkhoff_lines(std::ostringstream& os, const BundleOnP1& e) {
    const auto b = birkhoff_factorize(e);
    os << "birkhoff negative: " << fmt(b.negative) << "\n";
    os << "birkhoff exponents: " << join(b.exponents) << "\n";
    os << "birkhoff positive: " << fmt(b.positive) << "\n";
    os << "product equals input: " << yes_no(b.product() == e.transition()) << "\n";
}

std::string classify_p1(const Document& doc, const RunOptions& o, bool with_table) {
    const BundleOnP1 e(expect<LaurentMatrix>(doc, "classify-p1"));
    resolve_field(doc, o);
    const auto type = splitting_type(e);
    const auto det = e.transition().det_unit();
    std::ostringstream os;
    os << "rank: " << e.rank() << "\n";
    os << "det: " << LaurentPoly(det.coeff, det.exponent).to_string() << "\n";
    os << "splitting type: " << type.to_string() << "\n";
    os << "degree: " << type.total_degree() << "\n";
    birkhoff_lines(os, e);
    if (o.verify) {
        os << "degree equals -w: " << yes_no(type.total_degree() == -det.exponent) << "\n";
        os << "type of diagonal bundle: " << yes_no(splitting_type(cocharacter_to_bundle(type, e.field())) == type)
           << "\n";
    }
    if (with_table) h0_table(os, e, o);
    return os.str();
}

std::string birkhoff(const Document& doc, const RunOptions& o) {
    const BundleOnP1 e(expect<LaurentMatrix>(doc, "birkhoff"));
    resolve_field(doc, o);
    std::ostringstream os;
    birkhoff_lines(os, e);
    return os.str();
}

std::string cochar_to_bundle(const Document& doc, const RunOptions& o) {
    const auto& type = expect<SplittingType>(doc, "cochar-to-bundle");
    if (type.rank() == 0) throw InvalidArgument("cochar-to-bundle needs rank at least 1");
    const Field f = resolve_field(doc, o);
    const auto e = cocharacter_to_bundle(type, f);
    std::string out = "# cocharacter " + type.to_string() + "\n";
    if (o.verify) out += "# splitting type recovered: " + std::string(yes_no(splitting_type(e) == type)) + "\n";
    return out + print_document(Document{f, e.transition()});
}

std::string h0(const Document& doc, const RunOptions& o) {
    const BundleOnP1 e(expect<LaurentMatrix>(doc, "h0"));
    resolve_field(doc, o);
    std::ostringstream os;
    h0_table(os, e, o);
    return os.str();
}

std::string split_filtration_report(const Document& doc, const RunOptions& o) {
    const auto& f = expect<FilteredModule>(doc, "split-filtration");
    resolve_field(doc, o);
    const auto v = validate_filtered(f);
    if (!v.ok) throw InvalidArgument(v.reason);
    const auto s = split_filtration(f, o.seed);
    std::ostringstream os;
    os << "window: " << f.lo() << ".." << f.hi() << "\n";
    os << "ranks: " << join(f.ranks()) << "\n";
    os << "graded ranks: " << s.grading.to_string() << "\n";
    os << "splitting type: " << s.grading.to_splitting_type().to_string() << "\n";
    os << "basis degrees: " << join(s.degrees) << "\n";
    os << "splitting iso: " << fmt(s.iso) << "\n";
    os << "exact: " << yes_no(verify_splitting(f, s)) << "\n";
    if (o.verify) {
        const auto other = split_filtration(f, o.seed.value_or(0) + 1);
        os << "second splitting exact: " << yes_no(verify_splitting(f, other)) << "\n";
        os << "graded data agrees: " << yes_no(other.grading == s.grading && associated_graded(f) == s.grading)
           << "\n";
    }
    return os.str();
}

std::string assoc_graded(const Document& doc, const RunOptions& o) {
    const auto& f = expect<FilteredModule>(doc, "assoc-graded");
    resolve_field(doc, o);
    const auto v = validate_filtered(f);
    if (!v.ok) throw InvalidArgument(v.reason);
    const auto g = associated_graded(f);
    std::ostringstream os;
    os << "graded ranks: " << g.to_string() << "\n";
    os << "total rank: " << g.total_rank() << "\n";
    os << "splitting type: " << g.to_splitting_type().to_string() << "\n";
    for (std::size_t k = 0; k < v.retractions.size(); ++k)
        os << "retraction " << f.lo() + static_cast<std::int64_t>(k) << ": " << fmt(v.retractions[k]) << "\n";
    if (o.verify) os << "agrees with splitting: " << yes_no(split_filtration(f).grading == g) << "\n";
    return os.str();
}

std::string nakayama(const Document& doc, const RunOptions& o) {
    const auto& d = expect<GradedModuleDocument>(doc, "nakayama");
    resolve_field(doc, o);
    const auto& e = d.module;
    const auto r = nakayama_zero_test(e, irrelevant_ideal(e.algebra()));
    std::ostringstream os;
    os << "generators: " << join(e.generator_degrees()) << "\n";
    os << "relations: " << e.relations().cols() << "\n";
    os << "E (x) B/I = 0: " << yes_no(r.vanishes) << "\n";
    if (r.witness) {
        const auto& w = *r.witness;
        os << "witness columns: " << join(w.columns) << "\n";
        os << "witness A: " << fmt(w.a) << "\n";
        std::vector<std::string> chi;
        for (const auto& c : w.char_poly) chi.push_back(c.to_string());
        os << "det(lambda - A): " << join(chi) << "\n";
        os << "chi(1): " << w.unit.to_string() << "\n";
        os << "witness verified: " << yes_no(verify_witness(e, w)) << "\n";
    } else {
        os << "residue dimensions: " << dims_to_string(residue_dimensions(e)) << "\n";
    }
    if (o.verify) {
        std::int64_t bound = 5;
        if (!e.generator_degrees().empty())
            bound += *std::max_element(e.generator_degrees().begin(), e.generator_degrees().end());
        if (o.degree_bound) bound = *o.degree_bound;
        const bool zero = vanishes_up_to(e, bound);
        os << "components vanish up to degree " << bound << ": " << yes_no(zero) << "\n";
        os << "enumeration agrees: " << yes_no(zero == r.vanishes) << "\n";
    }
    return os.str();
}

std::string lift_map(const Document& doc, const RunOptions& o) {
    const auto& d = expect<GradedModuleDocument>(doc, "lift-map");
    resolve_field(doc, o);
    if (!d.map) throw InvalidArgument("lift-map needs 'target' and 'map'");
    const auto& e = d.module;
    const auto& b = e.algebra();
    const auto f = GradedModulePresentation::free(b, *d.target);
    const ScalarMatrix ubar = reduce_mod_irrelevant(*d.map);
    const PolyMatrix u = lift_graded_map(ubar, e, f);
    const bool iso = graded_iso_test(u, e, f, irrelevant_ideal(b));
    std::ostringstream os;
    os << "map mod I: " << fmt(ubar) << "\n";
    os << "lift: " << fmt(u) << "\n";
    os << "lift reduces to map: " << yes_no(reduce_mod_irrelevant(u) == ubar) << "\n";
    os << "isomorphism: " << yes_no(iso) << "\n";
    if (iso) {
        const PolyMatrix v = lift_graded_map(*inverse(ubar), f, e);
        const auto one = b.constant(b.field().one());
        os << "inverse lift: " << fmt(v) << "\n";
        os << "u v = 1: " << yes_no(u * v == PolyMatrix::identity(u.rows(), b.zero(), one)) << "\n";
        os << "v u = 1: " << yes_no(v * u == PolyMatrix::identity(u.cols(), b.zero(), one)) << "\n";
    }
    return os.str();
}

std::string hensel_check(const Document& doc, const RunOptions& o) {
    resolve_field(doc, o);
    std::ostringstream os;
    if (const auto* b = std::get_if<GradedAlgebra>(&doc.body)) {
        os << "degrees: " << join(b->degrees()) << "\n";
        os << "connected: " << yes_no(connected_check(*b)) << "\n";
        os << "trivially henselian: " << yes_no(trivially_henselian(*b)) << "\n";
        const auto fp = fixed_point_ideal(*b);
        std::vector<std::string> gens;
        for (const auto& g : fp.ideal.generators) gens.push_back(g.to_string());
        os << "fixed-point ideal: (" << join(gens) << ")\n";
        std::vector<std::string> deg0;
        for (const auto& m : fp.quotient.generators) deg0.push_back(Polynomial::term(m, b->field().one()).to_string());
        os << "degree-0 monomials: " << (deg0.empty() ? "none" : join(deg0)) << "\n";
        os << "B^0 = 0: " << yes_no(fp.quotient.zero_ring) << "\n";
        return os.str();
    }
    const auto& a = expect<FindimDocument>(doc, "hensel-check").algebra;
    const auto rad = jacobson_radical(a);
    os << "dimension: " << a.dimension() << "\n";
    os << "ideal dimension: " << a.ideal().size() << "\n";
    os << "radical dimension: " << rad.size() << "\n";
    std::vector<std::string> basis;
    for (const auto& v : rad) basis.push_back(to_string(v));
    os << "radical basis: " << (basis.empty() ? "none" : join(basis)) << "\n";
    const bool pair = is_henselian_pair(a);
    os << "henselian pair: " << yes_no(pair) << "\n";
    if (o.verify) {
        bool nilpotent = true;
        for (const auto& v : a.ideal()) nilpotent = nilpotent && a.power(v, a.dimension()) == a.zero();
        os << "ideal nilpotent: " << yes_no(nilpotent) << "\n";
        os << "agrees: " << yes_no(nilpotent == pair) << "\n";
    }
    return os.str();
}

std::string lift_idempotent_report(const Document& doc, const RunOptions& o) {
    const auto& d = expect<FindimDocument>(doc, "lift-idempotent");
    resolve_field(doc, o);
    if (!d.element) throw InvalidArgument("lift-idempotent needs 'element'");
    const auto& a = d.algebra;
    const auto r = lift_idempotent(a, *d.element);
    const auto diff = a.add(r.e, a.scale(-a.field().one(), *d.element));
    std::ostringstream os;
    os << "element: " << to_string(*d.element) << "\n";
    os << "idempotent: " << to_string(r.e) << "\n";
    os << "iterations: " << r.iterations << "\n";
    os << "e^2 = e: " << yes_no(a.multiply(r.e, r.e) == r.e) << "\n";
    os << "e - element in I: " << yes_no(a.in_ideal(diff)) << "\n";
    return os.str();
}

std::string pi0_report(const Document& doc, const RunOptions& o) {
    const auto& x = expect<FinitePoset>(doc, "pi0");
    const auto c = pi0(x);
    std::ostringstream os;
    os << "points: " << x.size() << "\n";
    os << "components: " << c.count() << "\n";
    for (std::size_t k = 0; k < c.count(); ++k) os << "component " << k << ": " << to_string(x, c.members[k]) << "\n";
    if (o.verify) os << "2^components clopens: " << yes_no(clopen_sets(x).size() == (std::size_t{1} << c.count())) << "\n";
    return os.str();
}

std::string clopen_report(const Document& doc, const RunOptions& o) {
    const auto& x = expect<FinitePoset>(doc, "clopen");
    const auto cl = clopen_sets(x);
    std::ostringstream os;
    os << "clopen subsets: " << cl.size() << "\n";
    for (auto z : cl) os << "clopen: " << to_string(x, z) << "\n";
    std::size_t pro = 0;
    bool agree = true;
    for (PointSet z = 0; z <= x.all(); ++z) {
        const auto r = pro_clopen_report(x, z);
        pro += r.closed_union_of_components;
        agree = agree && r.closed_union_of_components == r.intersection_of_clopens &&
                r.intersection_of_clopens == r.clopen;
    }
    os << "pro-clopen subsets: " << pro << "\n";
    if (o.verify) os << "pro-clopen characterizations agree: " << yes_no(agree) << "\n";
    return os.str();
}

std::string lemma_b2(const Document& doc, const RunOptions&) {
    const auto r = lemma_b2_report(expect<FinitePoset>(doc, "lemma-b2"));
    std::ostringstream os;
    os << "components: " << r.components << "\n";
    os << "clopens matched: " << r.clopens_matched << "\n";
    os << "pro-clopens matched: " << r.pro_clopens_matched << "\n";
    os << "minimal pro-clopens matched: " << r.minimal_matched << "\n";
    os << "bijections hold: " << yes_no(r.holds) << "\n";
    return os.str();
}

std::string prop_b3(const Document& doc, const RunOptions&) {
    const auto& f = expect<MonotoneMap>(doc, "prop-b3");
    const auto r = prop_b3_check(f);
    std::ostringstream os;
    os << "pi0(f): " << join(pi0_map(f)) << "\n";
    os << "pi0 homeomorphism: " << yes_no(r.pi0_homeomorphism) << "\n";
    os << "ClOpen bijection: " << yes_no(r.clopen_bijection) << "; pi0 bijective: " << yes_no(r.pi0_bijective)
       << "; equivalence holds: " << yes_no(r.all_equal()) << "\n";
    return os.str();
}

std::string homeo_check(const Document& doc, const RunOptions&) {
    const auto& f = expect<MonotoneMap>(doc, "homeo-check");
    const bool crit = homeo_criterion(f);
    const bool homeo = is_homeomorphism(f);
    std::ostringstream os;
    os << "clopen criterion: " << yes_no(crit) << "\n";
    os << "homeomorphism: " << yes_no(homeo) << "\n";
    os << "agree: " << yes_no(crit == homeo) << "\n";
    return os.str();
}

using Handler = std::string (*)(const Document&, const RunOptions&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
    static const std::vector<std::pair<std::string, Handler>> h{
        {"classify-p1", [](const Document& d, const RunOptions& o) { return classify_p1(d, o, true); }},
        {"birkhoff", birkhoff},
        {"cochar-to-bundle", cochar_to_bundle},
        {"h0", h0},
        {"split-filtration", split_filtration_report},
        {"assoc-graded", assoc_graded},
        {"nakayama", nakayama},
        {"lift-map", lift_map},
        {"hensel-check", hensel_check},
        {"lift-idempotent", lift_idempotent_report},
        {"pi0", pi0_report},
        {"clopen", clopen_report},
        {"lemma-b2", lemma_b2},
        {"prop-b3", prop_b3},
        {"homeo-check", homeo_check},
    };
    return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, h] : handlers()) n.push_back(name);
        return n;
    }();
    return names;
}

std::string run_command(std::string_view command, const Document& doc, const RunOptions& options) {
    for (const auto& [name, h] : handlers())
        if (name == command) return h(doc, options);
    throw InvalidArgument("unknown command '" + std::string(command) + "'");
}

FileResult process_document(std::string_view command, std::string_view text, const RunOptions& options) {
    FileResult r;
    try {
        r.report = run_command(command, parse_document(text, options.field.value_or(Field::rationals())), options);
    } catch (const ParseError& e) {
        r.exit_code = exit_parse_error;
        r.error = std::string("parse error: ") + e.what();
    } catch (const Error& e) {
        r.exit_code = exit_invalid_input;
        r.error = std::string("invalid input: ") + e.what();
    }
    return r;
}

}  // namespace equibundle
