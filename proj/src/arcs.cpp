#include "storyarc/arcs.hpp"

#include <algorithm>
#include <cmath>

namespace storyarc {

int auto_window_size(std::size_t series_length) {
    long n = std::lround(static_cast<double>(series_length) / 10.0);
    if (n < 5) n = 5;
    if (n % 2 == 0) ++n;
    return static_cast<int>(n);
}

std::vector<double> savgol_coefficients(int n, int p, int deriv) {
    if (n < 3 || n % 2 == 0)
        throw WindowParamError("window size must be an odd integer >= 3, got " +
                               std::to_string(n));
    if (p < 0 || p >= n)
        throw WindowParamError("polynomial order must satisfy 0 <= p < n, got p=" +
                               std::to_string(p) + ", n=" + std::to_string(n));
    if (deriv < 0 || deriv > p)
        throw WindowParamError("derivative order must satisfy 0 <= deriv <= p");

    const int h = n / 2;
    const int m = p + 1;

    // normal equations: G[a][b] = sum_x x^(a+b), x = -h..h
    std::vector<std::vector<long double>> g(m, std::vector<long double>(m, 0.0L));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            long double s = 0.0L;
            for (int x = -h; x <= h; ++x) s += powl(static_cast<long double>(x), a + b);
            g[a][b] = s;
        }
    }
    // solve g * z = e_deriv by Gaussian elimination with partial pivoting
    std::vector<long double> rhs(m, 0.0L);
    rhs[deriv] = 1.0L;
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (fabsl(g[r][col]) > fabsl(g[piv][col])) piv = r;
        std::swap(g[col], g[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            long double f = g[r][col] / g[col][col];
            for (int c = col; c < m; ++c) g[r][c] -= f * g[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<long double> z(m);
    for (int k = 0; k < m; ++k) z[k] = rhs[k] / g[k][k];

    long double fact = 1.0L;
    for (int k = 2; k <= deriv; ++k) fact *= k;

    std::vector<double> coeffs(n);
    for (int j = 0; j < n; ++j) {
        long double x = static_cast<long double>(j - h);
        long double c = 0.0L;
        for (int k = 0; k < m; ++k) c += z[k] * powl(x, k);
        coeffs[j] = static_cast<double>(c * fact);
    }
    return coeffs;
}

namespace {

std::vector<double> window_weights(const WindowSpec& spec, int n) {
    switch (spec.kind) {
        case WindowKind::rolling_mean:
            return std::vector<double>(n, 1.0 / n);
        case WindowKind::triangular_mean: {
            int h = n / 2;
            std::vector<double> w(n);
            double sum = 0.0;
            for (int j = 0; j < n; ++j) {
                w[j] = static_cast<double>(h + 1 - std::abs(j - h));
                sum += w[j];
            }
            for (double& x : w) x /= sum;
            return w;
        }
        case WindowKind::savitzky_golay:
            return savgol_coefficients(n, std::min(spec.p, n - 1));
    }
    throw WindowParamError("unknown window kind");
}

inline std::size_t mirror_index(long i, long n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * n - 2 - i;
    return static_cast<std::size_t>(i);
}

}  // namespace

SmoothResult apply_window(const std::vector<double>& series, const WindowSpec& spec) {
    SmoothResult res;
    int n = spec.n > 0 ? spec.n : auto_window_size(series.size());
    if (n < 3 || n % 2 == 0)
        throw WindowParamError("window size must be an odd integer >= 3, got " +
                               std::to_string(n));
    if (series.size() < static_cast<std::size_t>(n)) {
        res.values = series;
        res.too_short = true;
        return res;
    }
    std::vector<double> w = window_weights(spec, n);
    const int h = n / 2;
    const long len = static_cast<long>(series.size());
    res.values.resize(series.size());
    for (long i = 0; i < len; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += w[j] * series[mirror_index(i + j - h, len)];
        res.values[i] = acc;
    }
    return res;
}

std::map<RelationKey, RelationArc> build_relation_arcs(const std::vector<EventRecord>& records,
                                                       const WindowSpec& spec) {
    std::map<RelationKey, RelationArc> arcs;
    for (const EventRecord& rec : records) {
        if (!rec.actor_cluster || !rec.experiencer_cluster) continue;
        RelationKey key{*rec.actor_cluster, *rec.experiencer_cluster};
        RelationArc& arc = arcs[key];
        arc.key = key;
        ArcPoint pt;
        pt.event_id = rec.event_id;
        pt.ordinal = static_cast<int>(arc.points.size());
        pt.sentence_index = rec.trigger.sentence_index;
        pt.raw = rec.t;
        arc.points.push_back(pt);
    }
    for (auto& [key, arc] : arcs) {
        std::vector<double> raw(arc.points.size());
        for (size_t i = 0; i < arc.points.size(); ++i) raw[i] = arc.points[i].raw;
        SmoothResult sm = apply_window(raw, spec);
        arc.smoothing_skipped = sm.too_short;
        for (size_t i = 0; i < arc.points.size(); ++i) arc.points[i].smoothed = sm.values[i];
    }
    return arcs;
}

namespace {

std::vector<ArcPoint> role_series(int cluster_id, const std::vector<EventRecord>& records,
                                  bool as_actor, const WindowSpec& spec) {
    std::vector<ArcPoint> series;
    for (const EventRecord& rec : records) {
        const auto& role = as_actor ? rec.actor_cluster : rec.experiencer_cluster;
        if (!role || *role != cluster_id) continue;
        ArcPoint pt;
        pt.event_id = rec.event_id;
        pt.ordinal = static_cast<int>(series.size());
        pt.sentence_index = rec.trigger.sentence_index;
        pt.raw = rec.t;
        series.push_back(pt);
    }
    if (series.empty()) return series;
    std::vector<double> raw(series.size());
    for (size_t i = 0; i < series.size(); ++i) raw[i] = series[i].raw;
    SmoothResult sm = apply_window(raw, spec);
    for (size_t i = 0; i < series.size(); ++i) series[i].smoothed = sm.values[i];
    return series;
}

}  // namespace

CharacterArc build_character_arc(int cluster_id, const std::vector<EventRecord>& records,
                                 const WindowSpec& spec) {
    CharacterArc arc;
    arc.cluster_id = cluster_id;
    arc.actor_series = role_series(cluster_id, records, true, spec);
    arc.experiencer_series = role_series(cluster_id, records, false, spec);
    return arc;
}

std::vector<Extremum> find_extrema(const std::vector<ArcPoint>& series, double min_prominence) {
    std::vector<Extremum> out;
    const long n = static_cast<long>(series.size());
    if (n < 3) return out;
    auto v = [&](long i) { return series[static_cast<size_t>(i)].smoothed; };
    for (long i = 1; i + 1 < n; ++i) {
        bool peak = v(i) > v(i - 1) && v(i) > v(i + 1);
        bool valley = v(i) < v(i - 1) && v(i) < v(i + 1);
        if (!peak && !valley) continue;
        // saddle on each side: extreme of the walk until a higher peak /
        // deeper valley is met
        double left_saddle = v(i), right_saddle = v(i);
        for (long j = i - 1; j >= 0; --j) {
            if (peak ? v(j) > v(i) : v(j) < v(i)) break;
            left_saddle = peak ? std::min(left_saddle, v(j)) : std::max(left_saddle, v(j));
        }
        for (long j = i + 1; j < n; ++j) {
            if (peak ? v(j) > v(i) : v(j) < v(i)) break;
            right_saddle = peak ? std::min(right_saddle, v(j)) : std::max(right_saddle, v(j));
        }
        double prominence = peak ? v(i) - std::max(left_saddle, right_saddle)
                                 : std::min(left_saddle, right_saddle) - v(i);
        if (prominence >= min_prominence) {
            Extremum e;
            e.index = static_cast<int>(i);
            e.event_id = series[static_cast<size_t>(i)].event_id;
            e.is_peak = peak;
            e.prominence = prominence;
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace storyarc
