#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace wakerom {

enum class Activation { Identity, Softplus, LeakyRelu };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& name);

/// Slope of leaky-relu on the negative branch.
inline constexpr double kLeakyReluSlope = 0.01;

/// One dense layer: y = act(W x + b), W is (out x in).
struct Layer {
    Eigen::MatrixXd W;
    Eigen::VectorXd b;
    Activation activation = Activation::Identity;
};

/// Minimal feed-forward network. Layers chain dimensionally; weights stay
/// finite. Immutable in normal use; training and perturbation build copies.
class DenseNetwork {
public:
    DenseNetwork() = default;
    explicit DenseNetwork(std::vector<Layer> layers);

    /// Uniform Glorot initialization, biases zero, deterministic in `seed`.
    /// `sizes` = [input, hidden..., output]; one activation per layer.
    static DenseNetwork glorot(const std::vector<int>& sizes,
                               const std::vector<Activation>& activations, std::uint64_t seed);

    int layer_count() const { return static_cast<int>(layers_.size()); }
    const Layer& layer(int l) const { return layers_[static_cast<std::size_t>(l)]; }
    Layer& layer(int l) { return layers_[static_cast<std::size_t>(l)]; }
    const std::vector<Layer>& layers() const { return layers_; }

    int input_dim() const;
    int output_dim() const;
    int parameter_count() const;

    Eigen::VectorXd forward(const Eigen::VectorXd& x) const;
    /// Batched forward; samples are columns of X.
    Eigen::MatrixXd forward_batch(const Eigen::MatrixXd& X) const;

    nlohmann::json to_json() const;
    static DenseNetwork from_json(const nlohmann::json& j);

private:
    std::vector<Layer> layers_;
};

/// Per-parameter gradients, same shapes as the network layers.
struct NetGradients {
    std::vector<Eigen::MatrixXd> dW;
    std::vector<Eigen::VectorXd> db;

    static NetGradients zeros_like(const DenseNetwork& net);
};

/// Extra additive loss term (value and parameter gradient); the trainer
/// scales both by TrainConfig::continuity_weight.
class PenaltyTerm {
public:
    virtual ~PenaltyTerm() = default;
    virtual double value(const DenseNetwork& net) const = 0;
    virtual void add_gradient(const DenseNetwork& net, double scale, NetGradients& grads) const = 0;
};

/// || stacked_i [net(r_i, 0) - net(r_i, 2pi)] ||_2 over the given radii.
/// Requires input_dim == 2 (polar (r, theta) inputs).
class ContinuityPenalty final : public PenaltyTerm {
public:
    explicit ContinuityPenalty(std::vector<double> radii);
    double value(const DenseNetwork& net) const override;
    void add_gradient(const DenseNetwork& net, double scale, NetGradients& grads) const override;

    const std::vector<double>& radii() const { return radii_; }

private:
    std::vector<double> radii_;
};

double continuity_penalty(const DenseNetwork& net, const std::vector<double>& radii);

/// n equispaced radii r_i = rmax * i / n, i = 1..n.
std::vector<double> equispaced_radii(double rmax, int n);

struct TrainConfig {
    double learning_rate = 1e-3;
    int max_epochs = 0;                    // 0 = no epoch cap (target_loss must be set)
    std::optional<double> target_loss;     // stop once total loss <= target_loss
    double weight_decay = 0.0;             // alpha in (alpha/2)||W||^2
    double continuity_weight = 0.0;        // lambda scaling the extra penalty
    std::uint64_t rng_seed = 0;

    void validate() const;
};

struct LossReport {
    std::vector<double> epoch_loss;       // total loss per epoch, pre-update
    double final_mse = 0.0;
    double final_weight_penalty = 0.0;    // (alpha/2)||W||^2 at the returned weights
    double final_extra_penalty = 0.0;     // unweighted penalty value at the returned weights
    int epochs_run = 0;
    bool reached_target = false;
};

/// Thrown when the training loss goes non-finite.
class TrainingDiverged : public std::runtime_error {
public:
    TrainingDiverged(int epoch, const std::string& what)
        : std::runtime_error(what), epoch_(epoch) {}
    int epoch() const { return epoch_; }

private:
    int epoch_;
};

/// Total loss MSE + (alpha/2)||W||^2 + lambda * extra, and its parameter
/// gradient. Inputs/targets are row-per-sample matrices.
double total_loss(const DenseNetwork& net, const Eigen::MatrixXd& inputs,
                  const Eigen::MatrixXd& targets, const TrainConfig& cfg,
                  const PenaltyTerm* extra = nullptr);

std::pair<double, NetGradients> loss_and_gradients(const DenseNetwork& net,
                                                   const Eigen::MatrixXd& inputs,
                                                   const Eigen::MatrixXd& targets,
                                                   const TrainConfig& cfg,
                                                   const PenaltyTerm* extra = nullptr);

/// Full-batch Adam on the total loss. Stops at max_epochs or once the loss
/// reaches target_loss, whichever comes first. Deterministic given the
/// network and config. Throws TrainingDiverged on non-finite loss.
std::pair<DenseNetwork, LossReport> train(DenseNetwork net, const Eigen::MatrixXd& inputs,
                                          const Eigen::MatrixXd& targets, const TrainConfig& cfg,
                                          const PenaltyTerm* extra = nullptr);

}  // namespace wakerom
