#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace approach {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double dist2(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double sqdist(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec scaled(const Vec& a, double s) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

// a + s*b
inline Vec axpy(const Vec& a, double s, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

inline Vec concat(const Vec& a, const Vec& b) {
    Vec r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline bool lex_less(const Vec& a, const Vec& b, double tol = 0.0) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i] - tol) return true;
        if (a[i] > b[i] + tol) return false;
    }
    return a.size() < b.size();
}

inline double linf_dist(const Vec& a, const Vec& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

// Gaussian elimination with partial pivoting. Returns nullopt when the
// system is (numerically) singular.
inline std::optional<Vec> solve_linear(Mat a, Vec b, double tol = 1e-12) {
    const size_t n = a.size();
    if (n == 0) return Vec{};
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < tol) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    Vec x(n);
    for (size_t i = n; i-- > 0;) {
        double s = b[i];
        for (size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

// Compensated (Kahan) accumulator, one per coordinate.
class KahanVec {
  public:
    KahanVec() = default;
    explicit KahanVec(size_t n) : sum_(n, 0.0), comp_(n, 0.0) {}

    void add(const Vec& v) {
        for (size_t i = 0; i < sum_.size(); ++i) {
            const double y = v[i] - comp_[i];
            const double t = sum_[i] + y;
            comp_[i] = (t - sum_[i]) - y;
            sum_[i] = t;
        }
    }
    // Adds s*v without materializing the scaled vector.
    void add_scaled(const Vec& v, double s) {
        for (size_t i = 0; i < sum_.size(); ++i) {
            const double y = v[i] * s - comp_[i];
            const double t = sum_[i] + y;
            comp_[i] = (t - sum_[i]) - y;
            sum_[i] = t;
        }
    }
    void add_at(size_t i, double x) {
        const double y = x - comp_[i];
        const double t = sum_[i] + y;
        comp_[i] = (t - sum_[i]) - y;
        sum_[i] = t;
    }
    const Vec& sum() const { return sum_; }
    Vec mean(double n) const {
        Vec r(sum_.size());
        for (size_t i = 0; i < sum_.size(); ++i) r[i] = sum_[i] / n;
        return r;
    }
    size_t size() const { return sum_.size(); }

  private:
    Vec sum_, comp_;
};

// All points of the simplex {w >= 0, sum w = 1} in R^parts whose entries are
// multiples of 1/density, in lexicographic order.
inline std::vector<Vec> simplex_grid(int parts, int density) {
    if (parts <= 0 || density <= 0) throw std::invalid_argument("simplex_grid: bad dimensions");
    std::vector<Vec> out;
    Vec cur(static_cast<size_t>(parts), 0.0);
    // counts[c] summing to density
    std::vector<int> counts(static_cast<size_t>(parts), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            counts[static_cast<size_t>(pos)] = remaining;
            Vec w(static_cast<size_t>(parts));
            for (int c = 0; c < parts; ++c)
                w[static_cast<size_t>(c)] = static_cast<double>(counts[static_cast<size_t>(c)]) / density;
            out.push_back(std::move(w));
            return;
        }
        for (int take = remaining; take >= 0; --take) {
            counts[static_cast<size_t>(pos)] = take;
            self(self, pos + 1, remaining - take);
        }
    };
    rec(rec, 0, density);
    return out;
}

inline bool is_probability_vector(const Vec& w, double tol = 1e-12) {
    double s = 0.0;
    for (double x : w) {
        if (x < -tol) return false;
        s += x;
    }
    return std::fabs(s - 1.0) <= tol;
}

}  // namespace approach
