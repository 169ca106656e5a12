#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <vector>

namespace wakerom {

/// One sampling location on a wake/inlet plane, in polar coordinates.
/// r >= 0, theta in [0, 2*pi).
struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
};

/// Fixed, ordered point set on a planar cross-section. All fields sampled on
/// the same geometry share this object (and its point ordering).
class PlaneGeometry {
public:
    explicit PlaneGeometry(std::vector<PolarPoint> points);

    /// Regular polar disc: n_radial rings times n_angular spokes plus the
    /// center point, so count() == n_radial * n_angular + 1.
    static std::shared_ptr<const PlaneGeometry>
    polar_disc(int n_radial = 100, int n_angular = 100, double radius = 1.0);

    int count() const { return static_cast<int>(points_.size()); }
    const std::vector<PolarPoint>& points() const { return points_; }
    const PolarPoint& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

    double x(int i) const;
    double y(int i) const;
    double max_radius() const;

    /// Index of the point closest (Euclidean, in the plane) to (x, y).
    int nearest_index(double x, double y) const;

    bool same_points(const PlaneGeometry& other) const;

private:
    std::vector<PolarPoint> points_;
};

using GeometryPtr = std::shared_ptr<const PlaneGeometry>;

/// Sampled scalar distribution (velocity component along the main flow
/// direction) on a PlaneGeometry. Immutable after construction.
class ScalarField {
public:
    ScalarField(GeometryPtr geometry, Eigen::VectorXd values);

    const GeometryPtr& geometry() const { return geometry_; }
    const Eigen::VectorXd& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    double value(int i) const { return values_[i]; }

private:
    GeometryPtr geometry_;
    Eigen::VectorXd values_;
};

/// Pointwise measurement in Cartesian wake-plane coordinates.
struct Observation {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
};

/// A set of scattered pointwise measurements; locations must be distinct.
class ObservationSet {
public:
    explicit ObservationSet(std::vector<Observation> samples);

    int size() const { return static_cast<int>(samples_.size()); }
    const std::vector<Observation>& samples() const { return samples_; }
    const Observation& sample(int i) const { return samples_[static_cast<std::size_t>(i)]; }

    Eigen::VectorXd values() const;

private:
    std::vector<Observation> samples_;
};

/// Smooth radial target: (sin 4r)^2 - 10.
double target_smooth(double r);

/// Pointwise target: sin(pi x) sin((y + 0.2) pi) / 1.2^(e^(x+y)).
double target_pointwise(double x, double y);

/// n_per_axis^2 samples of f on the equispaced Cartesian grid covering the
/// closed square [-side/2, side/2]^2.
ObservationSet make_observation_grid(double side, int n_per_axis,
                                     const std::function<double(double, double)>& f);

/// Euclidean-norm relative error ||pred - truth|| / ||truth||.
/// Requires matching geometries and ||truth|| > 0.
double field_relative_error(const ScalarField& pred, const ScalarField& truth);

/// Same, restricted to the geometry point indices in `mask`.
double field_relative_error(const ScalarField& pred, const ScalarField& truth,
                            const std::vector<int>& mask);

/// ||a - b|| / ||b|| on raw value vectors.
double relative_error(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Sample a radial target f(r) at every geometry point.
ScalarField sample_radial(const GeometryPtr& geometry, const std::function<double(double)>& f);

/// Sample a Cartesian target f(x, y) at every geometry point.
ScalarField sample_cartesian(const GeometryPtr& geometry,
                             const std::function<double(double, double)>& f);

/// Nearest-geometry-point index for each observation, in observation order.
std::vector<int> observation_mask(const PlaneGeometry& geometry, const ObservationSet& obs);

}  // namespace wakerom
