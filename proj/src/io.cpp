#include "linembed/io.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace linembed {

namespace {

class LineReader
{
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    // Next non-blank, non-comment line split on whitespace.
    bool next(std::vector<std::string>& tokens)
    {
        std::string line;
        while (std::getline(is_, line)) {
            ++line_no_;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            tokens.clear();
            for (std::string t; ss >> t;) tokens.push_back(t);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    std::size_t line() const { return line_no_; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no_); }

private:
    std::istream& is_;
    std::size_t line_no_ = 0;
};

Vertex parse_vertex(const std::string& t, const LineReader& r)
{
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        r.fail("expected a non-negative integer vertex label, got '" + t + "'");
    unsigned long long v = 0;
    try {
        v = std::stoull(t);
    } catch (const std::out_of_range&) {
        r.fail("vertex label out of range: " + t);
    }
    if (v > std::numeric_limits<Vertex>::max()) r.fail("vertex label out of range: " + t);
    return static_cast<Vertex>(v);
}

Rational parse_coord(const std::string& t, const LineReader& r)
{
    try {
        return parse_rational(t);
    } catch (const ParseError& e) {
        r.fail(e.what());
    }
}

Simplex parse_simplex(std::vector<std::string>::const_iterator first, std::vector<std::string>::const_iterator last,
                      const LineReader& r)
{
    std::vector<Vertex> vs;
    for (auto it = first; it != last; ++it) vs.push_back(parse_vertex(*it, r));
    if (vs.empty()) r.fail("simplex with no vertices");
    try {
        return Simplex(std::move(vs));
    } catch (const ComplexError& e) {
        r.fail(e.what());
    }
}

void write_vertices(std::ostream& os, const Simplex& s)
{
    for (Vertex v : s.vertices()) os << ' ' << v;
}

// Complex lines until end of input (the complex must be the last section).
SimplicialComplex read_facets(LineReader& r)
{
    std::vector<Simplex> facets;
    std::vector<std::string> tok;
    while (r.next(tok)) {
        if (tok[0] != "facet") r.fail("expected 'facet', got '" + tok[0] + "'");
        facets.push_back(parse_simplex(tok.begin() + 1, tok.end(), r));
    }
    if (facets.empty()) throw ParseError("no facets: the empty complex is not allowed", r.line());
    return SimplicialComplex::from_simplices(std::move(facets));
}

CollapseSequence read_sequence_body(LineReader& r)
{
    CollapseSequence seq{{}, SimplicialComplex::from_facets({{0}})};
    std::vector<std::string> tok;
    for (;;) {
        if (!r.next(tok)) throw ParseError("missing 'target:' section", r.line());
        if (tok.size() == 1 && tok[0] == "target:") break;
        if (tok[0] != "collapse" || tok.size() < 2) r.fail("expected 'collapse <step>:' or 'target:'");
        const std::string& idx = tok[1];
        if (idx.size() < 2 || idx.back() != ':') r.fail("expected '<step>:' after 'collapse'");
        if (parse_vertex(idx.substr(0, idx.size() - 1), r) != seq.steps.size())
            r.fail("collapse steps must be numbered consecutively from 0");
        auto bar = std::find(tok.begin() + 2, tok.end(), "|");
        if (bar == tok.end()) r.fail("missing '|' between free face and coface");
        CollapsePair p{parse_simplex(tok.begin() + 2, bar, r), parse_simplex(bar + 1, tok.end(), r)};
        if (p.coface.dim() != p.free_face.dim() + 1 || !p.free_face.is_face_of(p.coface))
            r.fail("coface must contain the free face with one more vertex");
        seq.steps.push_back(std::move(p));
    }
    seq.target = read_facets(r);
    return seq;
}

} // namespace

void write_complex(std::ostream& os, const SimplicialComplex& c)
{
    for (const Simplex& f : c.facets()) {
        os << "facet";
        write_vertices(os, f);
        os << '\n';
    }
}

SimplicialComplex read_complex(std::istream& is)
{
    LineReader r(is);
    return read_facets(r);
}

void write_sequence(std::ostream& os, const CollapseSequence& seq)
{
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
        os << "collapse " << k << ':';
        write_vertices(os, seq.steps[k].free_face);
        os << " |";
        write_vertices(os, seq.steps[k].coface);
        os << '\n';
    }
    os << "target:\n";
    write_complex(os, seq.target);
}

CollapseSequence read_sequence(std::istream& is)
{
    LineReader r(is);
    return read_sequence_body(r);
}

void write_certificate(std::ostream& os, const MorseCertificate& cert)
{
    os << "critical_triangle:";
    write_vertices(os, cert.critical_triangle);
    os << '\n';
    write_sequence(os, cert.sequence);
}

MorseCertificate read_certificate(std::istream& is)
{
    LineReader r(is);
    std::vector<std::string> tok;
    if (!r.next(tok) || tok[0] != "critical_triangle:") r.fail("expected 'critical_triangle:'");
    Simplex t = parse_simplex(tok.begin() + 1, tok.end(), r);
    if (t.dim() != 2) r.fail("critical triangle must have 3 vertices");
    return MorseCertificate{std::move(t), read_sequence_body(r)};
}

void write_embedding(std::ostream& os, const EmbeddingMap& e)
{
    os << "dim " << e.ambient_dim << '\n';
    for (const auto& [v, p] : e.points) {
        os << "vertex " << v << ':';
        for (const Rational& q : p.coords) os << ' ' << format_rational(q);
        os << '\n';
    }
}

EmbeddingMap read_embedding(std::istream& is)
{
    LineReader r(is);
    std::vector<std::string> tok;
    if (!r.next(tok) || tok.size() != 2 || tok[0] != "dim") r.fail("expected 'dim <m>'");
    EmbeddingMap e;
    e.ambient_dim = parse_vertex(tok[1], r);
    if (e.ambient_dim == 0) r.fail("ambient dimension must be positive");
    while (r.next(tok)) {
        if (tok[0] != "vertex" || tok.size() < 2) r.fail("expected 'vertex <label>: coordinates'");
        const std::string& label = tok[1];
        if (label.size() < 2 || label.back() != ':') r.fail("expected '<label>:' after 'vertex'");
        const Vertex v = parse_vertex(label.substr(0, label.size() - 1), r);
        if (tok.size() - 2 != e.ambient_dim)
            r.fail("vertex " + std::to_string(v) + " has " + std::to_string(tok.size() - 2) + " coordinates, expected " +
                   std::to_string(e.ambient_dim));
        std::vector<Rational> coords;
        for (auto it = tok.begin() + 2; it != tok.end(); ++it) coords.push_back(parse_coord(*it, r));
        if (!e.points.emplace(v, Point(std::move(coords))).second) r.fail("duplicate vertex " + std::to_string(v));
    }
    if (e.points.empty()) throw ParseError("embedding lists no vertices", r.line());
    return e;
}

void write_points(std::ostream& os, std::span<const Point> points)
{
    for (const Point& p : points) {
        os << "point";
        for (const Rational& q : p.coords) os << ' ' << format_rational(q);
        os << '\n';
    }
}

std::vector<Point> read_points(std::istream& is)
{
    LineReader r(is);
    std::vector<Point> out;
    std::vector<std::string> tok;
    while (r.next(tok)) {
        if (tok[0] != "point") r.fail("expected 'point', got '" + tok[0] + "'");
        if (tok.size() < 2) r.fail("point with no coordinates");
        std::vector<Rational> coords;
        for (auto it = tok.begin() + 1; it != tok.end(); ++it) coords.push_back(parse_coord(*it, r));
        if (!out.empty() && coords.size() != out.front().dim())
            r.fail("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                   std::to_string(out.front().dim()));
        out.emplace_back(std::move(coords));
    }
    if (out.empty()) throw ParseError("no points", r.line());
    return out;
}

void write_tverberg(std::ostream& os, const TverbergCertificate& cert)
{
    for (std::size_t j = 0; j < cert.partition.size(); ++j) {
        os << "part " << j << ':';
        for (std::size_t i : cert.partition[j]) os << ' ' << i;
        os << '\n';
    }
    os << "common_point:";
    for (const Rational& q : cert.common_point.coords) os << ' ' << format_rational(q);
    os << '\n';
    for (std::size_t j = 0; j < cert.weights.size(); ++j) {
        os << "weights " << j << ':';
        for (const Rational& w : cert.weights[j]) os << ' ' << format_rational(w);
        os << '\n';
    }
}

void write_report(std::ostream& os, const VerificationReport& report)
{
    os << "verdict: " << verdict_name(report.verdict) << '\n';
    if (report.facet_pair) {
        os << "facets:";
        write_vertices(os, report.facet_pair->first);
        os << " |";
        write_vertices(os, report.facet_pair->second);
        os << '\n';
    }
    if (report.common_point) {
        os << "point:";
        for (const Rational& q : report.common_point->coords) os << ' ' << format_rational(q);
        os << '\n';
    }
    if (report.degenerate_facet) {
        os << "facet:";
        write_vertices(os, *report.degenerate_facet);
        os << "\ndependency:";
        for (const Rational& q : report.dependency) os << ' ' << format_rational(q);
        os << '\n';
    }
}

} // namespace linembed
