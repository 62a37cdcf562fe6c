#include "bezout/zeros.hpp"

#include "bezout/errors.hpp"
#include "gauss_rule.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bezout {

namespace {

using cplx = std::complex<double>;

constexpr int kMaxNudges = 5;
constexpr int kMaxDepth = 48;
// Absolute tolerance on \oint F'/F per edge; the winding number is this
// divided by 2*pi, well inside the 1e-3 stabilization requirement.
constexpr double kEdgeTol = 1e-6;
constexpr double kIntegerSlack = 0.1;
constexpr double kBoundaryRel = 1e-12;

// Alternative split points for quadrisection when a split line runs too
// close to a zero. Off-centre so that symmetric zero patterns (real axis,
// imaginary axis) never sit on a split line.
constexpr std::array<std::pair<double, double>, 6> kSplits{{
    {0.5137, 0.4871}, {0.4689, 0.5293}, {0.5471, 0.4533}, {0.4317, 0.5621}, {0.5803, 0.4129}, {0.3947, 0.6011},
}};

struct PowerSums {
    cplx s0{};
    cplx s1{};
    cplx s2{};

    PowerSums& operator+=(const PowerSums& o) {
        s0 += o.s0;
        s1 += o.s1;
        s2 += o.s2;
        return *this;
    }
};

struct ContourResult {
    PowerSums sums; ///< (1 / 2 pi i) \oint z^k F'/F dz
    double min_abs = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    bool converged = true;

    int count() const { return static_cast<int>(std::lround(sums.s0.real())); }
    bool integral() const {
        return std::abs(sums.s0.real() - std::round(sums.s0.real())) <= kIntegerSlack &&
               std::abs(sums.s0.imag()) <= kIntegerSlack;
    }
    bool near_zero() const { return min_abs <= kBoundaryRel * std::max(1.0, max_abs); }
    bool certified() const { return converged && integral() && !near_zero(); }
};

class Analytic {
public:
    explicit Analytic(const ClosedTransform& f) : f_(f), df_(f.derivative()) {}

    cplx value(cplx z) const { return f_(z); }
    cplx slope(cplx z) const { return df_(z); }
    double a() const { return f_.a().get_d(); }

private:
    const ClosedTransform& f_;
    ClosedTransform df_;
};

struct Panel {
    PowerSums sums;
    double min_abs = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
};

Panel gauss_panel(const Analytic& fn, cplx z0, cplx z1) {
    const auto& rule = detail::gauss_rule<10>();
    const cplx half = 0.5 * (z1 - z0);
    const cplx mid = 0.5 * (z0 + z1);
    Panel p;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const cplx z = mid + half * rule.nodes[k];
        const cplx f = fn.value(z);
        const double mag = std::abs(f);
        p.min_abs = std::min(p.min_abs, mag);
        p.max_abs = std::max(p.max_abs, mag);
        const cplx r = (mag == 0.0) ? cplx(std::numeric_limits<double>::infinity()) : fn.slope(z) / f;
        const cplx w = rule.weights[k] * half * r;
        p.sums.s0 += w;
        p.sums.s1 += w * z;
        p.sums.s2 += w * z * z;
    }
    return p;
}

void adaptive_segment(const Analytic& fn, cplx z0, cplx z1, const Panel& whole, double tol, double scale,
                      int depth, ContourResult& out) {
    const cplx mid = 0.5 * (z0 + z1);
    const Panel left = gauss_panel(fn, z0, mid);
    const Panel right = gauss_panel(fn, mid, z1);
    PowerSums refined = left.sums;
    refined += right.sums;
    const double e0 = std::abs(refined.s0 - whole.sums.s0);
    const double e1 = std::abs(refined.s1 - whole.sums.s1) / scale;
    const double e2 = std::abs(refined.s2 - whole.sums.s2) / (scale * scale);
    const bool finite = std::isfinite(e0) && std::isfinite(e1) && std::isfinite(e2);
    if (finite && std::max({e0, e1, e2}) <= tol) {
        out.sums += refined;
        out.min_abs = std::min({out.min_abs, left.min_abs, right.min_abs});
        out.max_abs = std::max({out.max_abs, left.max_abs, right.max_abs});
        return;
    }
    if (depth >= kMaxDepth || !finite) {
        out.converged = false;
        out.sums += refined;
        out.min_abs = std::min({out.min_abs, left.min_abs, right.min_abs});
        out.max_abs = std::max({out.max_abs, left.max_abs, right.max_abs});
        return;
    }
    const double child_tol = std::max(0.5 * tol, 1e-14);
    adaptive_segment(fn, z0, mid, left, child_tol, scale, depth + 1, out);
    adaptive_segment(fn, mid, z1, right, child_tol, scale, depth + 1, out);
}

ContourResult integrate_contour(const Analytic& fn, const SearchRect& r) {
    const std::array<cplx, 5> corners{cplx(r.re_min, r.im_min), cplx(r.re_max, r.im_min),
                                      cplx(r.re_max, r.im_max), cplx(r.re_min, r.im_max),
                                      cplx(r.re_min, r.im_min)};
    double scale = 1.0;
    for (const auto& c : corners) scale = std::max(scale, std::abs(c));

    ContourResult out;
    for (std::size_t e = 0; e + 1 < corners.size(); ++e) {
        const cplx z0 = corners[e];
        const cplx z1 = corners[e + 1];
        const double len = std::abs(z1 - z0);
        // Initial panels resolve the e^{iaz} oscillation before adapting.
        const int panels = 2 + static_cast<int>(std::ceil(2.0 * len * std::max(1.0, fn.a())));
        for (int p = 0; p < panels; ++p) {
            const cplx p0 = z0 + (z1 - z0) * (static_cast<double>(p) / panels);
            const cplx p1 = z0 + (z1 - z0) * (static_cast<double>(p + 1) / panels);
            const Panel whole = gauss_panel(fn, p0, p1);
            adaptive_segment(fn, p0, p1, whole, kEdgeTol / panels, scale, 0, out);
        }
    }
    const cplx two_pi_i(0.0, 2.0 * std::numbers::pi);
    out.sums.s0 /= two_pi_i;
    out.sums.s1 /= two_pi_i;
    out.sums.s2 /= two_pi_i;
    return out;
}

SearchRect expanded(const SearchRect& r, double by) {
    return {r.re_min - by, r.re_max + by, r.im_min - by, r.im_max + by, r.boundary_margin};
}

struct CertifiedContour {
    SearchRect rect;
    ContourResult result;
};

CertifiedContour certify_top_level(const Analytic& fn, const SearchRect& rect) {
    rect.validate();
    ContourResult last;
    for (int attempt = 0; attempt <= kMaxNudges; ++attempt) {
        const SearchRect r = expanded(rect, rect.boundary_margin * attempt);
        last = integrate_contour(fn, r);
        if (last.certified()) return {r, last};
    }
    if (last.near_zero() || !last.converged) {
        throw BoundaryZero("contour stays too close to a zero after " + std::to_string(kMaxNudges) + " nudges");
    }
    throw NonIntegerWinding("winding integral " + std::to_string(last.sums.s0.real()) +
                            " is not within 0.1 of an integer");
}

double diameter(const SearchRect& r) { return std::hypot(r.re_max - r.re_min, r.im_max - r.im_min); }

cplx newton_polish(const Analytic& fn, cplx z, int multiplicity, double tol) {
    for (int it = 0; it < 100; ++it) {
        const cplx f = fn.value(z);
        const cplx df = fn.slope(z);
        if (f == 0.0 || df == 0.0) break;
        const cplx dz = static_cast<double>(multiplicity) * f / df;
        z -= dz;
        if (std::abs(dz) <= tol) break;
    }
    return z;
}

class Locator {
public:
    Locator(const Analytic& fn, double tol) : fn_(fn), tol_(tol) {}

    void process(const SearchRect& cell, const ContourResult& res, std::vector<LocatedZero>& out) const {
        const int count = res.count();
        if (count <= 0) return;
        if (count == 1) {
            out.push_back(polished(res.sums.s1, 1, cell));
            return;
        }
        if (diameter(cell) < 100.0 * tol_) {
            resolve_cluster(cell, res, count, out);
            return;
        }
        for (const auto& [fx, fy] : kSplits) {
            const double xs = cell.re_min + fx * (cell.re_max - cell.re_min);
            const double ys = cell.im_min + fy * (cell.im_max - cell.im_min);
            const std::array<SearchRect, 4> children{
                SearchRect{cell.re_min, xs, cell.im_min, ys, cell.boundary_margin},
                SearchRect{xs, cell.re_max, cell.im_min, ys, cell.boundary_margin},
                SearchRect{cell.re_min, xs, ys, cell.im_max, cell.boundary_margin},
                SearchRect{xs, cell.re_max, ys, cell.im_max, cell.boundary_margin},
            };
            std::array<ContourResult, 4> results;
            bool ok = true;
            int total = 0;
            for (std::size_t c = 0; c < children.size() && ok; ++c) {
                results[c] = integrate_contour(fn_, children[c]);
                ok = results[c].certified();
                total += results[c].count();
            }
            // Winding counts must be conserved across the split.
            if (!ok || total != count) continue;
            for (std::size_t c = 0; c < children.size(); ++c) process(children[c], results[c], out);
            return;
        }
        throw NonIntegerWinding("could not split a cell holding " + std::to_string(count) +
                                " zeros with conserved winding counts");
    }

private:
    LocatedZero polished(cplx estimate, int multiplicity, const SearchRect& cell) const {
        cplx z = newton_polish(fn_, estimate, multiplicity, tol_);
        // Newton may jump to a neighbouring zero outside the cell; the
        // contour estimate is then kept as the best available location.
        if (std::abs(z - estimate) > diameter(cell)) z = estimate;
        return {z, multiplicity, std::abs(fn_.value(z))};
    }

    void resolve_cluster(const SearchRect& cell, const ContourResult& res, int count,
                         std::vector<LocatedZero>& out) const {
        const cplx centroid = res.sums.s1 / static_cast<double>(count);
        const cplx spread = res.sums.s2 / static_cast<double>(count) - centroid * centroid;
        if (std::sqrt(std::abs(spread)) <= 10.0 * tol_) {
            out.push_back(polished(centroid, count, cell));
            return;
        }
        throw ClusterUnresolved(std::to_string(count) + " zeros within a cell of diameter " +
                                std::to_string(diameter(cell)) + " near (" + std::to_string(centroid.real()) +
                                ", " + std::to_string(centroid.imag()) + ")");
    }

    const Analytic& fn_;
    double tol_;
};

} // namespace

void SearchRect::validate() const {
    if (!(re_min < re_max) || !(im_min < im_max)) {
        throw std::invalid_argument("search rectangle has an empty interior");
    }
    if (!(boundary_margin > 0.0)) throw std::invalid_argument("boundary_margin must be positive");
}

int count_zeros(const ClosedTransform& f, const SearchRect& rect) {
    if (f.integrand().is_zero()) throw BoundaryZero("transform is identically zero");
    const Analytic fn(f);
    return certify_top_level(fn, rect).result.count();
}

ZeroSet locate_zeros(const ClosedTransform& f, const SearchRect& rect, double tol) {
    if (f.integrand().is_zero()) throw BoundaryZero("transform is identically zero");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const Analytic fn(f);
    const CertifiedContour top = certify_top_level(fn, rect);

    ZeroSet set;
    set.rect = top.rect;
    set.total_count = top.result.count();
    set.residual_tol = 1e-9 * std::max(1.0, top.result.max_abs);

    const Locator locator(fn, tol);
    locator.process(top.rect, top.result, set.zeros);

    int located = 0;
    for (const auto& z : set.zeros) located += z.multiplicity;
    if (located != set.total_count) {
        throw NonIntegerWinding("located " + std::to_string(located) + " zeros but the contour counts " +
                                std::to_string(set.total_count));
    }
    std::sort(set.zeros.begin(), set.zeros.end(), [](const LocatedZero& l, const LocatedZero& r) {
        if (l.z.real() != r.z.real()) return l.z.real() < r.z.real();
        return l.z.imag() < r.z.imag();
    });
    return set;
}

ZeroComparison compare_zero_sets(const ZeroSet& z1, const ZeroSet& z2, double delta) {
    ZeroComparison cmp{std::numeric_limits<double>::infinity(), {}, delta};
    for (std::size_t i = 0; i < z1.zeros.size(); ++i) {
        for (std::size_t j = 0; j < z2.zeros.size(); ++j) {
            const double d = std::abs(z1.zeros[i].z - z2.zeros[j].z);
            cmp.min_distance = std::min(cmp.min_distance, d);
            if (d < delta) cmp.common.push_back({i, j, d});
        }
    }
    return cmp;
}

StructureFlags structure_checks(const ZeroSet& zeros, double axis_tol) {
    StructureFlags flags;
    for (const auto& z : zeros.zeros) {
        if (std::abs(z.z.imag()) <= axis_tol) flags.no_real_zeros = false;
    }
    for (std::size_t i = 0; i < zeros.zeros.size(); ++i) {
        const cplx zi = zeros.zeros[i].z;
        if (std::abs(zi.imag()) <= axis_tol) continue;
        for (std::size_t j = 0; j < zeros.zeros.size(); ++j) {
            if (i != j && std::abs(zeros.zeros[j].z - std::conj(zi)) <= axis_tol) flags.no_conjugate_pairs = false;
        }
    }
    return flags;
}

double spherical_bessel(unsigned n, double x) {
    // j_n(x) = A_n(1/x) sin x + B_n(1/x) cos x with
    // A_{n+1}(w) = (2n+1) w A_n(w) - A_{n-1}(w) (same for B),
    // A_0 = w, B_0 = 0, A_1 = w^2, B_1 = -w.
    std::vector<double> a_prev{0.0, 1.0};
    std::vector<double> b_prev{0.0};
    if (n == 0) return std::sin(x) / x;
    std::vector<double> a_cur{0.0, 0.0, 1.0};
    std::vector<double> b_cur{0.0, -1.0};
    for (unsigned k = 1; k < n; ++k) {
        const auto step = [k](const std::vector<double>& cur, const std::vector<double>& prev) {
            std::vector<double> next(cur.size() + 1, 0.0);
            for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += (2.0 * k + 1.0) * cur[i];
            for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
            return next;
        };
        auto a_next = step(a_cur, a_prev);
        auto b_next = step(b_cur, b_prev);
        a_prev = std::move(a_cur);
        b_prev = std::move(b_cur);
        a_cur = std::move(a_next);
        b_cur = std::move(b_next);
    }
    const double w = 1.0 / x;
    const auto horner = [w](const std::vector<double>& c) {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
        return acc;
    };
    return horner(a_cur) * std::sin(x) + horner(b_cur) * std::cos(x);
}

std::vector<double> bessel_reference(unsigned n, double x_max) {
    if (n > 20) throw std::invalid_argument("bessel_reference supports n <= 20");
    if (x_max > 200.0) throw std::invalid_argument("bessel_reference supports x_max <= 200");
    std::vector<double> roots;
    // The first positive zero of J_nu exceeds nu.
    const double start = std::max(0.5, static_cast<double>(n) + 0.5);
    const double step = 0.05;
    double lo = start;
    double f_lo = spherical_bessel(n, lo);
    while (lo < x_max) {
        const double hi = std::min(lo + step, x_max);
        const double f_hi = spherical_bessel(n, hi);
        if (f_lo == 0.0) {
            roots.push_back(lo);
        } else if ((f_lo < 0.0) != (f_hi < 0.0) && f_hi != 0.0) {
            double l = lo;
            double h = hi;
            double fl = f_lo;
            for (int it = 0; it < 200 && h - l > 1e-15 * h; ++it) {
                const double m = 0.5 * (l + h);
                const double fm = spherical_bessel(n, m);
                if ((fm < 0.0) == (fl < 0.0)) {
                    l = m;
                    fl = fm;
                } else {
                    h = m;
                }
            }
            roots.push_back(0.5 * (l + h));
        }
        lo = hi;
        f_lo = f_hi;
        if (hi >= x_max) break;
    }
    return roots;
}

} // namespace bezout
