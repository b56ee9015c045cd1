#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace ifsq {

/// Point or vector in ambient dimension 1 or 2.
class Vec {
public:
    Vec() : n_(1), v_{0.0, 0.0} {}
    explicit Vec(double x) : n_(1), v_{x, 0.0} {}
    Vec(double x, double y) : n_(2), v_{x, y} {}

    static Vec zero(int n) { return n == 1 ? Vec(0.0) : Vec(0.0, 0.0); }

    int dim() const { return n_; }
    double operator[](int i) const { return v_[i]; }
    double& operator[](int i) { return v_[i]; }
    double x() const { return v_[0]; }
    double y() const { return v_[1]; }

    Vec operator+(const Vec& o) const { return with(v_[0] + o.v_[0], v_[1] + o.v_[1]); }
    Vec operator-(const Vec& o) const { return with(v_[0] - o.v_[0], v_[1] - o.v_[1]); }
    Vec operator*(double s) const { return with(v_[0] * s, v_[1] * s); }
    friend Vec operator*(double s, const Vec& v) { return v * s; }

    double dot(const Vec& o) const { return v_[0] * o.v_[0] + v_[1] * o.v_[1]; }
    double norm() const { return std::hypot(v_[0], v_[1]); }

private:
    Vec with(double a, double b) const {
        Vec r;
        r.n_ = n_;
        r.v_[0] = a;
        r.v_[1] = b;
        return r;
    }

    int n_;
    std::array<double, 2> v_;
};

inline double dist(const Vec& a, const Vec& b) { return (a - b).norm(); }

/// Square matrix of order 1 or 2; used for the orthogonal parts of similarities.
class Mat {
public:
    Mat() : n_(1), a_{{1.0, 0.0}, {0.0, 1.0}} {}

    static Mat identity(int n) {
        Mat m;
        m.n_ = n;
        return m;
    }
    /// 1x1 matrix; orthogonal iff the entry is +/-1.
    static Mat scalar(double a) {
        Mat m;
        m.n_ = 1;
        m.a_[0][0] = a;
        return m;
    }
    static Mat of(double a11, double a12, double a21, double a22) {
        Mat m;
        m.n_ = 2;
        m.a_[0][0] = a11;
        m.a_[0][1] = a12;
        m.a_[1][0] = a21;
        m.a_[1][1] = a22;
        return m;
    }
    static Mat rotation(double angle) {
        const double c = std::cos(angle), s = std::sin(angle);
        return of(c, -s, s, c);
    }
    /// Reflection across the line through the origin at angle/2.
    static Mat reflection(double angle) {
        const double c = std::cos(angle), s = std::sin(angle);
        return of(c, s, s, -c);
    }

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[i][j]; }

    Vec apply(const Vec& v) const {
        if (n_ == 1) return Vec(a_[0][0] * v[0]);
        return Vec(a_[0][0] * v[0] + a_[0][1] * v[1], a_[1][0] * v[0] + a_[1][1] * v[1]);
    }

    Mat mul(const Mat& o) const {
        Mat r;
        r.n_ = n_;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                double s = 0.0;
                for (int k = 0; k < n_; ++k) s += a_[i][k] * o.a_[k][j];
                r.a_[i][j] = s;
            }
        return r;
    }

    double det() const {
        if (n_ == 1) return a_[0][0];
        return a_[0][0] * a_[1][1] - a_[0][1] * a_[1][0];
    }

    bool is_orthogonal(double tol) const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                double s = 0.0;
                for (int k = 0; k < n_; ++k) s += a_[k][i] * a_[k][j];
                if (std::abs(s - (i == j ? 1.0 : 0.0)) > tol) return false;
            }
        return true;
    }

private:
    int n_;
    double a_[2][2];
};

/// Solves (I - B) x = b for order 1 or 2. Requires ||B||_2 < 1.
inline Vec solve_contraction(const Mat& B, const Vec& b) {
    if (B.dim() == 1) {
        const double m = 1.0 - B(0, 0);
        if (m == 0.0) throw std::invalid_argument("solve_contraction: singular system");
        return Vec(b[0] / m);
    }
    const double a11 = 1.0 - B(0, 0), a12 = -B(0, 1);
    const double a21 = -B(1, 0), a22 = 1.0 - B(1, 1);
    const double det = a11 * a22 - a12 * a21;
    if (det == 0.0) throw std::invalid_argument("solve_contraction: singular system");
    return Vec((a22 * b[0] - a12 * b[1]) / det, (-a21 * b[0] + a11 * b[1]) / det);
}

}  // namespace ifsq
