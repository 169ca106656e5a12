#include "wakerom/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wakerom {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

PlaneGeometry::PlaneGeometry(std::vector<PolarPoint> points) : points_(std::move(points)) {
    if (points_.empty())
        throw std::invalid_argument("PlaneGeometry: needs at least one point");
    for (const auto& p : points_) {
        if (!(p.r >= 0.0))
            throw std::invalid_argument("PlaneGeometry: negative radius");
        if (!(p.theta >= 0.0 && p.theta < two_pi))
            throw std::invalid_argument("PlaneGeometry: angle outside [0, 2pi)");
    }
}

std::shared_ptr<const PlaneGeometry> PlaneGeometry::polar_disc(int n_radial, int n_angular,
                                                               double radius) {
    if (n_radial < 1 || n_angular < 1 || radius <= 0.0)
        throw std::invalid_argument("polar_disc: counts must be >= 1 and radius > 0");
    std::vector<PolarPoint> pts;
    pts.reserve(static_cast<std::size_t>(n_radial) * n_angular + 1);
    pts.push_back({0.0, 0.0});
    for (int i = 1; i <= n_radial; ++i) {
        const double r = radius * static_cast<double>(i) / n_radial;
        for (int j = 0; j < n_angular; ++j) {
            const double theta = two_pi * static_cast<double>(j) / n_angular;
            pts.push_back({r, theta});
        }
    }
    return std::make_shared<PlaneGeometry>(std::move(pts));
}

double PlaneGeometry::x(int i) const {
    const auto& p = points_[static_cast<std::size_t>(i)];
    return p.r * std::cos(p.theta);
}

double PlaneGeometry::y(int i) const {
    const auto& p = points_[static_cast<std::size_t>(i)];
    return p.r * std::sin(p.theta);
}

double PlaneGeometry::max_radius() const {
    double rmax = 0.0;
    for (const auto& p : points_) rmax = std::max(rmax, p.r);
    return rmax;
}

int PlaneGeometry::nearest_index(double px, double py) const {
    int best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < count(); ++i) {
        const double dx = x(i) - px;
        const double dy = y(i) - py;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

bool PlaneGeometry::same_points(const PlaneGeometry& other) const {
    if (this == &other) return true;
    if (count() != other.count()) return false;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].r != other.points_[i].r || points_[i].theta != other.points_[i].theta)
            return false;
    }
    return true;
}

ScalarField::ScalarField(GeometryPtr geometry, Eigen::VectorXd values)
    : geometry_(std::move(geometry)), values_(std::move(values)) {
    if (!geometry_) throw std::invalid_argument("ScalarField: null geometry");
    if (values_.size() != geometry_->count())
        throw std::invalid_argument("ScalarField: value count does not match geometry");
    if (!values_.allFinite())
        throw std::invalid_argument("ScalarField: non-finite value");
}

ObservationSet::ObservationSet(std::vector<Observation> samples) : samples_(std::move(samples)) {
    if (samples_.empty())
        throw std::invalid_argument("ObservationSet: needs at least one sample");
    for (std::size_t i = 0; i < samples_.size(); ++i)
        for (std::size_t j = i + 1; j < samples_.size(); ++j)
            if (samples_[i].x == samples_[j].x && samples_[i].y == samples_[j].y)
                throw std::invalid_argument("ObservationSet: duplicate sample location");
}

Eigen::VectorXd ObservationSet::values() const {
    Eigen::VectorXd v(size());
    for (int i = 0; i < size(); ++i) v[i] = samples_[static_cast<std::size_t>(i)].value;
    return v;
}

double target_smooth(double r) {
    const double s = std::sin(4.0 * r);
    return s * s - 10.0;
}

double target_pointwise(double x, double y) {
    const double num = std::sin(std::numbers::pi * x) * std::sin((y + 0.2) * std::numbers::pi);
    return num / std::pow(1.2, std::exp(x + y));
}

ObservationSet make_observation_grid(double side, int n_per_axis,
                                     const std::function<double(double, double)>& f) {
    if (n_per_axis < 2) throw std::invalid_argument("make_observation_grid: n_per_axis must be >= 2");
    std::vector<Observation> samples;
    samples.reserve(static_cast<std::size_t>(n_per_axis) * n_per_axis);
    const double half = side / 2.0;
    for (int i = 0; i < n_per_axis; ++i) {
        const double x = -half + side * static_cast<double>(i) / (n_per_axis - 1);
        for (int j = 0; j < n_per_axis; ++j) {
            const double y = -half + side * static_cast<double>(j) / (n_per_axis - 1);
            samples.push_back({x, y, f(x, y)});
        }
    }
    return ObservationSet(std::move(samples));
}

double relative_error(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) throw std::invalid_argument("relative_error: size mismatch");
    const double nb = b.norm();
    if (!(nb > 0.0)) throw std::invalid_argument("relative_error: zero-norm reference");
    return (a - b).norm() / nb;
}

double field_relative_error(const ScalarField& pred, const ScalarField& truth) {
    if (!pred.geometry()->same_points(*truth.geometry()))
        throw std::invalid_argument("field_relative_error: geometry mismatch");
    return relative_error(pred.values(), truth.values());
}

double field_relative_error(const ScalarField& pred, const ScalarField& truth,
                            const std::vector<int>& mask) {
    if (!pred.geometry()->same_points(*truth.geometry()))
        throw std::invalid_argument("field_relative_error: geometry mismatch");
    Eigen::VectorXd a(static_cast<Eigen::Index>(mask.size()));
    Eigen::VectorXd b(static_cast<Eigen::Index>(mask.size()));
    for (std::size_t k = 0; k < mask.size(); ++k) {
        const int i = mask[k];
        if (i < 0 || i >= pred.size())
            throw std::out_of_range("field_relative_error: mask index out of range");
        a[static_cast<Eigen::Index>(k)] = pred.value(i);
        b[static_cast<Eigen::Index>(k)] = truth.value(i);
    }
    return relative_error(a, b);
}

ScalarField sample_radial(const GeometryPtr& geometry, const std::function<double(double)>& f) {
    Eigen::VectorXd v(geometry->count());
    for (int i = 0; i < geometry->count(); ++i) v[i] = f(geometry->point(i).r);
    return ScalarField(geometry, std::move(v));
}

ScalarField sample_cartesian(const GeometryPtr& geometry,
                             const std::function<double(double, double)>& f) {
    Eigen::VectorXd v(geometry->count());
    for (int i = 0; i < geometry->count(); ++i) v[i] = f(geometry->x(i), geometry->y(i));
    return ScalarField(geometry, std::move(v));
}

std::vector<int> observation_mask(const PlaneGeometry& geometry, const ObservationSet& obs) {
    std::vector<int> mask;
    mask.reserve(static_cast<std::size_t>(obs.size()));
    for (const auto& s : obs.samples()) mask.push_back(geometry.nearest_index(s.x, s.y));
    return mask;
}

}  // namespace wakerom
