#include "kstab/walls.hpp"

#include "kstab/interval.hpp"

#include <algorithm>
#include <sstream>

namespace kstab {

Vec3 kernel_vector(const Rational& t, const Rational& beta) {
    if (t < 0)
        throw std::invalid_argument("kernel_vector: t must be >= 0");
    return {Rational(1), beta, beta * beta / 2 + t / 2};
}

WallDescriptor wall_curve(const CharVec& v, const CharVec& w) {
    // 2x2 minors of the 2x3 matrix with rows v, w.
    const Rational m01 = v.e0 * w.e1 - v.e1 * w.e0;
    const Rational m02 = v.e0 * w.e2 - v.e2 * w.e0;
    const Rational m12 = v.e1 * w.e2 - v.e2 * w.e1;

    WallDescriptor wd;
    wd.v = v;
    wd.w = w;
    if (m01 == 0 && m02 == 0 && m12 == 0) {
        wd.kind = WallDescriptor::Kind::None;  // proportional classes
        return wd;
    }
    if (m01 != 0) {
        // (beta^2 + t)/2 - beta m02/m01 + m12/m01 = 0
        // => (beta - c)^2 + t = c^2 - 2 m12/m01
        const Rational c = m02 / m01;
        const Rational r2 = c * c - 2 * m12 / m01;
        if (r2 > 0) {
            wd.kind = WallDescriptor::Kind::Semicircle;
            wd.center = c;
            wd.radius_sq = r2;
        } else {
            wd.kind = WallDescriptor::Kind::Empty;  // no points with t > 0
        }
        return wd;
    }
    if (m02 != 0) {
        wd.kind = WallDescriptor::Kind::Vertical;
        wd.beta0 = m12 / m02;
        return wd;
    }
    wd.kind = WallDescriptor::Kind::Empty;  // m12 != 0, equation unsolvable
    return wd;
}

bool on_wall(const WallDescriptor& wd, const StabParams& p) {
    switch (wd.kind) {
    case WallDescriptor::Kind::None:
    case WallDescriptor::Kind::Empty:
        return false;
    case WallDescriptor::Kind::Vertical:
        return p.beta == wd.beta0;
    case WallDescriptor::Kind::Semicircle: {
        const Rational db = p.beta - wd.center;
        return db * db + p.t == wd.radius_sq;
    }
    }
    return false;
}

LatticeStepConfig threefold_steps(const Rational& d, long cap) {
    LatticeStepConfig cfg;
    cfg.step0 = d;
    cfg.step1 = d;
    cfg.step2 = Rational(1, 2);  // line bundles carry e2 = k^2 d / 2
    cfg.cap0 = cfg.cap1 = cfg.cap2 = cap;
    return cfg;
}

LatticeStepConfig clifford_steps(long cap) {
    LatticeStepConfig cfg;
    cfg.step0 = 4;
    cfg.step1 = 1;
    cfg.step2 = Rational(1, 8);
    cfg.cap0 = cfg.cap1 = cfg.cap2 = cap;
    return cfg;
}

namespace {

// Representative rational meeting point of a wall with a region, if one
// exists. Proportional pairs (kind None) have equal slope everywhere and meet
// every region.
std::optional<StabParams> meeting_point(const WallDescriptor& wd,
                                        const Region& region) {
    if (region.all)
        throw std::invalid_argument("enumerate_destabilizers: region must be bounded");
    const Rational t_top = region.t_hi;
    if (t_top <= 0)
        return std::nullopt;
    // effective lower t bound, always exclusive at 0
    const Rational t_bot = region.t_lo;

    switch (wd.kind) {
    case WallDescriptor::Kind::Empty:
        return std::nullopt;
    case WallDescriptor::Kind::None:
        return StabParams{t_top, region.beta_lo};
    case WallDescriptor::Kind::Vertical:
        if (wd.beta0 < region.beta_lo || wd.beta0 > region.beta_hi)
            return std::nullopt;
        return StabParams{t_top, wd.beta0};
    case WallDescriptor::Kind::Semicircle: {
        auto t_of = [&](const Rational& beta) {
            const Rational db = beta - wd.center;
            return wd.radius_sq - db * db;
        };
        auto feasible = [&](const Rational& t) {
            return t > 0 && t >= t_bot && t <= t_top;
        };
        if (region.beta_lo == region.beta_hi) {
            const Rational t = t_of(region.beta_lo);
            if (feasible(t))
                return StabParams{t, region.beta_lo};
            return std::nullopt;
        }
        if (t_bot == t_top)
            throw std::invalid_argument(
                "enumerate_destabilizers: horizontal t-slice regions unsupported");
        // Arc height is maximal at beta = center, clamped into the box.
        Rational bm = wd.center;
        if (bm < region.beta_lo)
            bm = region.beta_lo;
        if (bm > region.beta_hi)
            bm = region.beta_hi;
        const Rational fmax = t_of(bm);
        if (fmax <= 0 || fmax < t_bot)
            return std::nullopt;
        if (fmax <= t_top)
            return StabParams{fmax, bm};
        // fmax > t_top: walk toward an edge until the height drops into range.
        for (const Rational& edge : {region.beta_lo, region.beta_hi}) {
            if (edge == bm)
                continue;
            const Rational fe = t_of(edge);
            if (feasible(fe))
                return StabParams{fe, edge};
            if (fe > t_top)
                continue;  // whole span above the box on this side
            // f(bm) > t_top and f(edge) < t_bot (or <= 0): bisect.
            Rational lo = bm, hi = edge;
            for (int iter = 0; iter < 512; ++iter) {
                const Rational mid = (lo + hi) / 2;
                const Rational fm = t_of(mid);
                if (feasible(fm))
                    return StabParams{fm, mid};
                if (fm > t_top)
                    lo = mid;
                else
                    hi = mid;
            }
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

Rational plain_delta(const CharVec& v) {
    return v.e1 * v.e1 - 2 * v.e0 * v.e2;
}

bool positive_multiple(const Rational& x, const Rational& quantum) {
    if (x <= 0)
        return false;
    return is_integer(x / quantum);
}

}  // namespace

std::vector<DestabilizerHit> enumerate_destabilizers(const CharVec& v,
                                                     const Region& region,
                                                     const LatticeStepConfig& cfg) {
    if (v.e0 == 0 && plain_delta(v) < 0)
        throw std::invalid_argument("enumerate_destabilizers: degenerate class");
    if (cfg.partitions < 1)
        throw std::invalid_argument("enumerate_destabilizers: bad partition count");

    const Rational dv = plain_delta(v);
    if (dv < 0)
        return {};

    if (cfg.quantum) {
        // configuration sanity: Im Z of v itself must respect the quantum
        const Rational im_v0 = v.e1 - region.beta_lo * v.e0;
        if (im_v0 != 0 && !positive_multiple(im_v0 < 0 ? -im_v0 : im_v0, *cfg.quantum))
            throw std::invalid_argument(
                "enumerate_destabilizers: Im Z(v) is not a multiple of the quantum");
    }

    std::vector<DestabilizerHit> hits;
    const long n0 = 2 * cfg.cap0 + 1;

    auto scan_range = [&](long i_begin, long i_end) {
        for (long ii = i_begin; ii < i_end; ++ii) {
            const long i = ii - cfg.cap0;
            for (long j = -cfg.cap1; j <= cfg.cap1; ++j) {
                for (long k = -cfg.cap2; k <= cfg.cap2; ++k) {
                    CharVec w{v.ambient, v.d, cfg.step0 * i, cfg.step1 * j,
                              cfg.step2 * k};
                    if (w == v || (w.e0 == 0 && w.e1 == 0 && w.e2 == 0))
                        continue;
                    const WallDescriptor wd = wall_curve(v, w);
                    std::optional<StabParams> p;
                    if (region.is_point()) {
                        const StabParams q{region.t_lo, region.beta_lo};
                        if (on_wall(wd, q) || wd.kind == WallDescriptor::Kind::None)
                            p = q;
                    } else {
                        p = meeting_point(wd, region);
                    }
                    if (!p)
                        continue;
                    const Rational im_w = w.e1 - p->beta * w.e0;
                    const Rational im_v = v.e1 - p->beta * v.e0;
                    if (!(im_w > 0 && im_w <= im_v))
                        continue;
                    if (plain_delta(w) < 0 || plain_delta(v - w) < 0)
                        continue;
                    if (cfg.quantum) {
                        if (!positive_multiple(im_w, *cfg.quantum))
                            continue;
                        if (!positive_multiple(im_v - im_w, *cfg.quantum))
                            continue;
                    }
                    hits.push_back({w, wd, *p});
                }
            }
        }
    };

    // Deterministic partitioned scan over the first coordinate range.
    const long chunk = (n0 + cfg.partitions - 1) / cfg.partitions;
    for (int part = 0; part < cfg.partitions; ++part) {
        const long b = part * chunk;
        const long e = std::min(n0, b + chunk);
        if (b < e)
            scan_range(b, e);
    }

    std::sort(hits.begin(), hits.end(), [](const DestabilizerHit& a,
                                           const DestabilizerHit& b) {
        if (a.w.e0 != b.w.e0)
            return a.w.e0 < b.w.e0;
        if (a.w.e1 != b.w.e1)
            return a.w.e1 < b.w.e1;
        return a.w.e2 < b.w.e2;
    });
    return hits;
}

bool integrality_exclusion(const CharVec& v, const Rational& beta0,
                           const Rational& quantum) {
    if (quantum <= 0)
        throw std::invalid_argument("integrality_exclusion: quantum must be positive");
    const Rational im = v.e1 - beta0 * v.e0;
    if (im < 0 || !is_integer(im / quantum))
        throw std::invalid_argument(
            "integrality_exclusion: Im Z is not a nonnegative multiple of the quantum");
    return im == quantum;
}

namespace {

std::string svg_y(const Rational& alpha_max, const Rational& alpha,
                  int height) {
    // y axis points down in SVG
    const Rational y = (alpha_max - alpha) / alpha_max * height;
    return decimal_string(y, 3);
}

Rational alpha_of(const Rational& t) {
    return sqrt_interval(t, Rational(1, 1000000)).midpoint();
}

}  // namespace

std::string emit_plot(const std::vector<WallDescriptor>& walls,
                      const Region& region, PlotFormat format) {
    const Rational blo = region.beta_lo, bhi = region.beta_hi;
    const Rational bspan = bhi > blo ? bhi - blo : Rational(1);
    const Rational alpha_max =
        region.t_hi > 0 ? alpha_of(region.t_hi) : Rational(1);
    const int W = 600, H = 400;

    if (format == PlotFormat::Json) {
        std::ostringstream os;
        os << "{\"region\":{\"beta_lo\":\"" << to_string(blo) << "\",\"beta_hi\":\""
           << to_string(bhi) << "\",\"t_lo\":\"" << to_string(region.t_lo)
           << "\",\"t_hi\":\"" << to_string(region.t_hi) << "\"},\"walls\":[";
        bool first = true;
        for (const auto& wd : walls) {
            if (!first)
                os << ",";
            first = false;
            os << "{\"kind\":\"";
            switch (wd.kind) {
            case WallDescriptor::Kind::None: os << "none"; break;
            case WallDescriptor::Kind::Empty: os << "empty"; break;
            case WallDescriptor::Kind::Vertical: os << "vertical"; break;
            case WallDescriptor::Kind::Semicircle: os << "semicircle"; break;
            }
            os << "\"";
            if (wd.kind == WallDescriptor::Kind::Vertical)
                os << ",\"beta0\":\"" << to_string(wd.beta0) << "\"";
            if (wd.kind == WallDescriptor::Kind::Semicircle)
                os << ",\"center\":\"" << to_string(wd.center)
                   << "\",\"radius_sq\":\"" << to_string(wd.radius_sq) << "\"";
            os << ",\"w\":[\"" << to_string(wd.w.e0) << "\",\"" << to_string(wd.w.e1)
               << "\",\"" << to_string(wd.w.e2) << "\"]}";
        }
        os << "]}";
        return os.str();
    }

    auto x_of = [&](const Rational& beta) {
        return decimal_string((beta - blo) / bspan * W, 3);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
       << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    // axes: alpha = 0 baseline and beta = 0 (when in range)
    os << "<line x1=\"0\" y1=\"" << H << "\" x2=\"" << W << "\" y2=\"" << H
       << "\" stroke=\"black\"/>\n";
    if (blo <= 0 && 0 <= bhi)
        os << "<line x1=\"" << x_of(0) << "\" y1=\"0\" x2=\"" << x_of(0)
           << "\" y2=\"" << H << "\" stroke=\"black\"/>\n";

    for (const auto& wd : walls) {
        if (wd.kind == WallDescriptor::Kind::Vertical) {
            if (wd.beta0 < blo || wd.beta0 > bhi)
                continue;
            os << "<line x1=\"" << x_of(wd.beta0) << "\" y1=\"0\" x2=\""
               << x_of(wd.beta0) << "\" y2=\"" << H
               << "\" stroke=\"blue\" fill=\"none\"/>\n";
        } else if (wd.kind == WallDescriptor::Kind::Semicircle) {
            // sample the arc at rational beta values
            os << "<polyline fill=\"none\" stroke=\"blue\" points=\"";
            const int samples = 64;
            bool any = false;
            for (int s = 0; s <= samples; ++s) {
                // beta runs over the chord of the semicircle
                const Rational r_mid = alpha_of(wd.radius_sq);
                const Rational beta =
                    wd.center - r_mid + Rational(2 * s, samples) * r_mid;
                if (beta < blo || beta > bhi)
                    continue;
                const Rational db = beta - wd.center;
                const Rational t = wd.radius_sq - db * db;
                if (t < 0)
                    continue;
                if (any)
                    os << " ";
                any = true;
                os << x_of(beta) << "," << svg_y(alpha_max, alpha_of(t), H);
            }
            os << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace kstab
