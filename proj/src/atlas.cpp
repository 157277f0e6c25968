#include "ribbon/atlas.hpp"

#include "ribbon/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace ribbon {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

Complex ipow(Complex base, int exp) {
    if (exp < 0) return 1.0 / ipow(base, -exp);
    Complex r = 1.0;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

double min_incident_length(const ChartAtlas& atlas, int vertex) {
    double best = 0;
    bool first = true;
    for (int d : atlas.metric.graph.vertices[vertex]) {
        double len = atlas.edge_length[atlas.metric.graph.edge_of[d]];
        if (first || len < best) best = len;
        first = false;
    }
    return best;
}

} // namespace

ChartAtlas build_atlas(const MetricRibbonGraph& metric) {
    const RibbonGraph& g = metric.graph;
    if (static_cast<int>(metric.lengths.size()) != g.e())
        throw NonPositiveLength("expected " + std::to_string(g.e()) +
                                " edge lengths, got " +
                                std::to_string(metric.lengths.size()));
    for (const Rational& len : metric.lengths)
        if (len <= 0)
            throw NonPositiveLength("edge length " + to_string(len) +
                                    " is not positive");

    ChartAtlas atlas;
    atlas.metric = metric;
    atlas.boundary = boundary_components(g);
    for (const Rational& len : metric.lengths)
        atlas.edge_length.push_back(to_double(len));

    atlas.branch_index.assign(g.n_darts, 0);
    for (const auto& cyc : g.vertices)
        for (int k = 0; k < static_cast<int>(cyc.size()); ++k)
            atlas.branch_index[cyc[k]] = k;

    atlas.cycle_of.assign(g.n_darts, 0);
    atlas.dart_offset.assign(g.n_darts, 0.0);
    for (int c = 0; c < atlas.boundary.b; ++c) {
        double off = 0;
        for (int d : atlas.boundary.cycles[c]) {
            atlas.cycle_of[d] = c;
            atlas.dart_offset[d] = off;
            off += atlas.edge_length[g.edge_of[d]];
        }
        atlas.perimeter.push_back(off);
    }

    atlas.integer_lengths = true;
    for (const Rational& len : metric.lengths)
        atlas.integer_lengths = atlas.integer_lengths && is_integer(len);
    if (atlas.integer_lengths) {
        for (const Rational& len : metric.lengths)
            atlas.edge_length_int.push_back(to_long_long(numerator(len)));
        atlas.dart_offset_int.assign(g.n_darts, 0);
        for (int c = 0; c < atlas.boundary.b; ++c) {
            long long off = 0;
            for (int d : atlas.boundary.cycles[c]) {
                atlas.dart_offset_int[d] = off;
                off += atlas.edge_length_int[g.edge_of[d]];
            }
            atlas.perimeter_int.push_back(off);
        }
    }
    return atlas;
}

std::complex<double> to_vertex_chart(const ChartAtlas& atlas, int dart,
                                     std::complex<double> z) {
    const RibbonGraph& g = atlas.metric.graph;
    const int v = g.vertex_of[dart];
    const int m = g.degree(v);
    const int k = atlas.branch_index[dart];
    const Complex sector = std::exp(Complex(0, 2 * kPi * k / m));
    return sector * std::exp((2.0 / m) * std::log(z));
}

std::complex<double> to_disk_chart(const ChartAtlas& atlas, int dart,
                                   std::complex<double> z) {
    const int c = atlas.cycle_of[dart];
    const double a = atlas.perimeter[c];
    return std::exp(Complex(0, 2 * kPi) * (atlas.dart_offset[dart] + z) / a);
}

double transition_check(const ChartAtlas& atlas, int samples,
                        std::uint64_t seed) {
    const RibbonGraph& g = atlas.metric.graph;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_dart(0, g.n_darts - 1);
    const double h = 1e-6;
    double worst = 0.0;

    auto deriv = [&](auto&& f, Complex z) {
        return (f(z + h) - f(z - h)) / (2 * h);
    };

    for (int s = 0; s < samples; ++s) {
        const int d = pick_dart(rng);
        const double len = atlas.edge_length[g.edge_of[d]];
        const int v = g.vertex_of[d];
        const int m = g.degree(v);

        // Vertex overlap: a sector point close to the cone tip.
        {
            const double r =
                (0.05 + 0.35 * unit(rng)) * min_incident_length(atlas, v);
            const double th = -1.2 + 2.4 * unit(rng);
            const Complex z = std::polar(r, th);
            auto f = [&](Complex zz) { return to_vertex_chart(atlas, d, zz); };
            const Complex w = f(z);
            const Complex dw = deriv(f, z);
            const Complex lhs = (m * m / 4.0) * ipow(w, m - 2) * dw * dw;
            worst = std::max(worst, std::abs(lhs - 1.0));
        }

        // Disk overlap: upper half of the strip.
        {
            const Complex z(len * (0.1 + 0.8 * unit(rng)),
                            0.05 + 0.75 * unit(rng));
            auto f = [&](Complex zz) { return to_disk_chart(atlas, d, zz); };
            const Complex u = f(z);
            const Complex du = deriv(f, z);
            const double a = atlas.perimeter[atlas.cycle_of[d]];
            const Complex lhs =
                -(a * a / (4 * kPi * kPi)) * (du / u) * (du / u);
            worst = std::max(worst, std::abs(lhs - 1.0));
        }

        // Strip reversal z -> L - z keeps (dz)^2.
        {
            const Complex z(len * (0.1 + 0.8 * unit(rng)),
                            -1.0 + 2.0 * unit(rng));
            auto f = [&](Complex zz) { return Complex(len) - zz; };
            const Complex dz = deriv(f, z);
            worst = std::max(worst, std::abs(dz * dz - 1.0));
        }
    }
    return worst;
}

std::complex<double> belyi_evaluate(const ChartAtlas& atlas,
                                    const SurfacePoint& p) {
    if (!atlas.integer_lengths)
        throw NonIntegerLengths("Belyi evaluation needs integer edge lengths");
    const RibbonGraph& g = atlas.metric.graph;
    const Complex z = p.coord;
    auto sin2 = [](Complex w) {
        Complex s = std::sin(kPi * w);
        return s * s;
    };
    switch (p.kind) {
    case ChartKind::Strip: {
        if (p.id < 0 || p.id >= g.n_darts)
            throw PointOutsideAtlas("no strip chart " + std::to_string(p.id));
        const double len = atlas.edge_length[g.edge_of[p.id]];
        if (z.real() < 0.0 || z.real() > len)
            throw PointOutsideAtlas("strip coordinate outside width " +
                                    std::to_string(len));
        return sin2(z);
    }
    case ChartKind::Vertex: {
        if (p.id < 0 || p.id >= g.v())
            throw PointOutsideAtlas("no vertex chart " + std::to_string(p.id));
        const int m = g.degree(p.id);
        if (std::pow(std::abs(z), m / 2.0) >
            min_incident_length(atlas, p.id))
            throw PointOutsideAtlas("vertex coordinate outside cone radius");
        if (z == 0.0) return 0.0;
        // w^{m/2} equals a sign times the strip coordinate; sin^2 is even.
        const Complex half = std::exp((m / 2.0) * std::log(z));
        return sin2(half);
    }
    case ChartKind::Disk: {
        if (p.id < 0 || p.id >= atlas.boundary.b)
            throw PointOutsideAtlas("no disk chart " + std::to_string(p.id));
        const double r = std::abs(z);
        if (r <= 0.0 || r >= 1.0)
            throw PointOutsideAtlas("disk coordinate must have 0 < |u| < 1");
        const int a = static_cast<int>(atlas.perimeter_int[p.id]);
        const Complex ua = ipow(z, a);
        return -(ua + 1.0 / ua - 2.0) / 4.0;
    }
    }
    throw PointOutsideAtlas("unknown chart kind");
}

double belyi_chart_consistency(const ChartAtlas& atlas, int samples,
                               std::uint64_t seed) {
    const RibbonGraph& g = atlas.metric.graph;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_dart(0, g.n_darts - 1);
    double worst = 0.0;

    auto strip_value = [&](int dart, Complex z) {
        return belyi_evaluate(atlas, {ChartKind::Strip, dart, z});
    };

    for (int s = 0; s < samples; ++s) {
        const int d = pick_dart(rng);
        const double len = atlas.edge_length[g.edge_of[d]];
        const int v = g.vertex_of[d];

        // Same point through the tail-vertex chart.
        {
            const double r =
                (0.05 + 0.35 * unit(rng)) * min_incident_length(atlas, v);
            const double th = -1.2 + 2.4 * unit(rng);
            const Complex z = std::polar(r, th);
            const Complex w = to_vertex_chart(atlas, d, z);
            const Complex a = strip_value(d, z);
            const Complex b =
                belyi_evaluate(atlas, {ChartKind::Vertex, v, w});
            worst = std::max(worst, std::abs(a - b));
        }

        // Same point through the boundary disk over the upper half.
        {
            const Complex z(len * (0.1 + 0.8 * unit(rng)),
                            0.05 + 0.75 * unit(rng));
            const Complex u = to_disk_chart(atlas, d, z);
            const Complex a = strip_value(d, z);
            const Complex b = belyi_evaluate(
                atlas, {ChartKind::Disk, atlas.cycle_of[d], u});
            worst = std::max(worst, std::abs(a - b));
        }

        // Opposite dart of the same edge: z -> L - z.
        {
            const Complex z(len * (0.1 + 0.8 * unit(rng)),
                            -0.9 + 1.8 * unit(rng));
            const Complex a = strip_value(d, z);
            const Complex b = strip_value(g.alpha[d], Complex(len) - z);
            worst = std::max(worst, std::abs(a - b));
        }
    }
    return worst;
}

RamificationProfile ramification_profile(const RibbonGraph& g) {
    RamificationProfile prof;
    for (const auto& cyc : g.vertices)
        prof.over_zero.push_back(static_cast<int>(cyc.size()));
    std::sort(prof.over_zero.rbegin(), prof.over_zero.rend());
    prof.over_one.assign(g.e(), 2);
    BoundaryDecomposition bd = boundary_components(g);
    prof.over_infinity = bd.edge_counts;
    std::sort(prof.over_infinity.rbegin(), prof.over_infinity.rend());
    return prof;
}

bool riemann_hurwitz_exact(const RibbonGraph& g) {
    RamificationProfile prof = ramification_profile(g);
    const int deg = 2 * g.e();
    int branching = 0;
    int sums[3] = {0, 0, 0};
    const std::vector<int>* parts[3] = {&prof.over_zero, &prof.over_one,
                                        &prof.over_infinity};
    for (int i = 0; i < 3; ++i) {
        for (int p : *parts[i]) {
            branching += p - 1;
            sums[i] += p;
        }
        if (sums[i] != deg) return false;
    }
    return 2 - 2 * genus(g) == 2 * deg - branching;
}

Dessin dessin(const RibbonGraph& g) {
    Dessin out;
    out.refined = edge_refinement(g);
    const RibbonGraph& r = out.refined.graph;
    std::ostringstream dot;
    dot << "graph dessin {\n";
    dot << "  node [shape=circle, style=filled];\n";
    std::vector<std::string> name(r.v());
    int blacks = 0, whites = 0;
    for (int v = 0; v < r.v(); ++v) {
        if (out.refined.white[v]) {
            name[v] = "w" + std::to_string(whites++);
            dot << "  " << name[v] << " [fillcolor=white];\n";
        } else {
            name[v] = "b" + std::to_string(blacks++);
            dot << "  " << name[v]
                << " [fillcolor=black, fontcolor=white];\n";
        }
    }
    for (const auto& [p, q] : r.edges)
        dot << "  " << name[r.vertex_of[p]] << " -- " << name[r.vertex_of[q]]
            << ";\n";
    dot << "}\n";
    out.dot = dot.str();
    return out;
}

TrivalentComposeReport trivalent_compose_check() {
    TrivalentComposeReport rep;

    // Explicit return types force evaluation before the locals go out of
    // scope; a deduced return would hand back a lazy boost expression
    // referencing them.
    auto P = [](const Rational& x) -> Rational {
        Rational t = x * x - x + 1;
        return 4 * t * t * t;
    };
    auto Pp = [](const Rational& x) -> Rational {
        Rational t = x * x - x + 1;
        return 12 * (2 * x - 1) * t * t;
    };
    auto Q = [](const Rational& x) -> Rational {
        Rational s = x * (1 - x);
        return 27 * s * s;
    };
    auto Qp = [](const Rational& x) -> Rational {
        return 54 * x * (1 - x) * (1 - 2 * x);
    };
    auto Nc = [](const Rational& x) -> Rational {
        Rational t = x * x - x + 1;
        return -4 * (x - 2) * (x + 1) * (2 * x - 1) * t * t;
    };
    auto Dc = [](const Rational& x) -> Rational {
        Rational u = 1 - x;
        return 27 * x * x * x * u * u * u;
    };

    const Rational crit[3] = {Rational(-1), Rational(1, 2), Rational(2)};
    rep.critical_values_one = true;
    rep.derivative_vanishes = true;
    for (const Rational& x : crit) {
        rep.critical_values_one =
            rep.critical_values_one && P(x) == Q(x);
        rep.derivative_vanishes =
            rep.derivative_vanishes && Pp(x) * Q(x) - P(x) * Qp(x) == 0;
    }

    // Exact arithmetic in Q[x]/(x^2 - x + 1), whose two embeddings into C
    // send the generator to (1 +- i sqrt 3)/2: elements p + q*x0 with
    // x0^2 = x0 - 1.
    {
        struct Ext {
            Rational p, q;
            Ext operator*(const Ext& o) const {
                return {p * o.p - q * o.q, p * o.q + q * o.p + q * o.q};
            }
            Ext operator-(const Ext& o) const { return {p - o.p, q - o.q}; }
            Ext operator+(const Ext& o) const { return {p + o.p, q + o.q}; }
            bool operator==(const Ext& o) const {
                return p == o.p && q == o.q;
            }
        };
        const Ext x0{0, 1}, one{1, 0};
        const Ext t = x0 * x0 - x0 + one; // 0 by construction
        const Ext numerator = Ext{4, 0} * t * t * t;
        const Ext s = x0 * (one - x0);
        const Ext denominator = Ext{27, 0} * s * s;
        rep.zero_at_vertex_points =
            numerator == Ext{0, 0} && !(denominator == Ext{0, 0});

        const std::complex<double> z0(0.5, std::sqrt(3.0) / 2.0);
        for (const std::complex<double> x :
             {z0, std::conj(z0)}) {
            const std::complex<double> tt = x * x - x + 1.0;
            const std::complex<double> phi =
                4.0 * tt * tt * tt /
                (27.0 * x * x * (1.0 - x) * (1.0 - x));
            rep.max_float_residual =
                std::max(rep.max_float_residual, std::abs(phi));
        }
        rep.zero_at_vertex_points =
            rep.zero_at_vertex_points && rep.max_float_residual < 1e-12;
    }

    // (P'Q - PQ') * Dc == Nc * Q^2 as polynomials: both sides have degree
    // at most 15, so agreement at 16 points proves the identity.
    rep.derivative_identity = true;
    for (int x = 2; x <= 17; ++x) {
        Rational r(x);
        Rational lhs = (Pp(r) * Q(r) - P(r) * Qp(r)) * Dc(r);
        Rational rhs = Nc(r) * Q(r) * Q(r);
        rep.derivative_identity = rep.derivative_identity && lhs == rhs;
    }

    rep.ok = rep.critical_values_one && rep.zero_at_vertex_points &&
             rep.derivative_identity && rep.derivative_vanishes;
    return rep;
}

} // namespace ribbon
