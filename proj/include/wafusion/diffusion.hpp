#pragma once

#include "wafusion/image.hpp"
#include "wafusion/latent.hpp"

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

namespace wafusion {

// Linear beta sequence plus cumulative signal-retention products.
// alpha_bars has T+1 entries with alpha_bars[0] = 1 exactly.
struct NoiseSchedule {
    uint32_t T = 0;
    std::vector<double> betas;
    std::vector<double> alpha_bars;

    double alpha_bar(uint32_t t) const { return alpha_bars[t]; }
};

NoiseSchedule make_schedule(uint32_t T = 100, double beta_start = 1e-4, double beta_end = 0.02);

// Noise predictor interface. predict_noise is deterministic; the base class
// keeps an evaluation counter so callers can meter denoiser work.
class Denoiser {
public:
    virtual ~Denoiser() = default;

    ImageBuffer predict_noise(const ImageBuffer& x_t, uint32_t t,
                              std::span<const double> z_sem = {}) const;

    uint64_t eval_count() const { return evals_.load(); }
    void reset_eval_count() const { evals_.store(0); }

private:
    virtual ImageBuffer do_predict(const ImageBuffer& x_t, uint32_t t,
                                   std::span<const double> z_sem) const = 0;
    mutable std::atomic<uint64_t> evals_{0};
};

class ZeroDenoiser final : public Denoiser {
private:
    ImageBuffer do_predict(const ImageBuffer& x_t, uint32_t, std::span<const double>) const override;
};

// Closed-form MMSE noise predictor for x0 ~ N(mu, sigma0_sq I); serves as a
// training-free oracle for the DDIM recurrences.
class AnalyticGaussianDenoiser final : public Denoiser {
public:
    AnalyticGaussianDenoiser(double mu, double sigma0_sq, const NoiseSchedule& sched);
    AnalyticGaussianDenoiser(ImageBuffer mu, double sigma0_sq, const NoiseSchedule& sched);

    double sigma0_sq() const { return sigma0_sq_; }

private:
    ImageBuffer do_predict(const ImageBuffer& x_t, uint32_t t, std::span<const double>) const override;

    ImageBuffer mu_;      // empty => scalar mu
    double mu_scalar_ = 0.0;
    double sigma0_sq_;
    NoiseSchedule sched_;
};

AnalyticGaussianDenoiser make_analytic_denoiser(double mu, double sigma0_sq,
                                                const NoiseSchedule& sched);
AnalyticGaussianDenoiser make_analytic_denoiser(ImageBuffer mu, double sigma0_sq,
                                                const NoiseSchedule& sched);

// Feed-forward noise predictor: input = flat(x_t) ++ sinusoidal time embedding
// ++ z_sem, two tanh hidden layers, linear output of the image shape. Small
// enough for finite-difference gradient checks.
class TrainableDenoiser final : public Denoiser {
public:
    static constexpr uint32_t kTimeEmbedDim = 16;

    TrainableDenoiser(uint32_t height, uint32_t width, uint32_t channels,
                      uint32_t semantic_dim, uint32_t hidden_width, uint64_t seed);

    uint32_t height() const { return height_; }
    uint32_t width() const { return width_; }
    uint32_t channels() const { return channels_; }
    uint32_t semantic_dim() const { return semantic_dim_; }
    uint32_t hidden_width() const { return hidden_; }
    uint32_t input_dim() const { return input_dim_; }

    size_t parameter_count() const;
    std::vector<double> parameters_flat() const;
    void set_parameters_flat(std::span<const double> params);

    // Layer tensors in serialization order: W1, b1, W2, b2, W3, b3.
    std::vector<ImageBuffer> parameter_tensors() const;
    void set_parameter_tensors(const std::vector<ImageBuffer>& tensors);

    static std::vector<double> time_embedding(uint32_t t);

private:
    ImageBuffer do_predict(const ImageBuffer& x_t, uint32_t t,
                           std::span<const double> z_sem) const override;

    friend struct DenoiserBackprop;

    uint32_t height_, width_, channels_, semantic_dim_, hidden_, input_dim_, output_dim_;
    std::vector<double> w1_, b1_, w2_, b2_, w3_, b3_;
};

struct TrainConfig {
    uint32_t epochs = 200;
    uint32_t batch_size = 16;
    double learning_rate = 1e-3;
    uint64_t seed = 0;
    NoiseSchedule schedule;
    enum class Optimizer { sgd, adam } optimizer = Optimizer::adam;
    uint32_t hidden_width = 128;
};

// One pre-drawn training tuple; z is derived from x0 by the encoder.
struct TrainSample {
    const ImageBuffer* x0 = nullptr;
    uint32_t t = 1;
    ImageBuffer eps;
};

// Mean-over-pixels, mean-over-batch squared error of the noise prediction.
// Gradients (same flat layout as parameters_flat) are accumulated into
// denoiser_grad and, when the encoder is trainable and encoder_grad nonempty,
// into encoder_grad.
double training_loss(const TrainableDenoiser& den, const SemanticEncoder& enc,
                     std::span<const TrainSample> batch, const NoiseSchedule& sched);
double training_loss_and_gradient(const TrainableDenoiser& den, const SemanticEncoder& enc,
                                  std::span<const TrainSample> batch, const NoiseSchedule& sched,
                                  std::span<double> denoiser_grad,
                                  std::span<double> encoder_grad);

struct TrainResult {
    TrainableDenoiser denoiser;
    std::vector<double> loss_trace;  // per-epoch mean loss
};

// Deterministic given cfg.seed; mutates enc when it carries parameters.
TrainResult train_denoiser(const std::vector<ImageBuffer>& dataset, SemanticEncoder& enc,
                           const TrainConfig& cfg);

ImageBuffer forward_noising(const ImageBuffer& x0, uint32_t t, const ImageBuffer& eps,
                            const NoiseSchedule& sched);

ImageBuffer ddim_step(const ImageBuffer& x_t, uint32_t t, const Denoiser& den,
                      std::span<const double> z_sem, const NoiseSchedule& sched);

ImageBuffer ddim_decode(const ImageBuffer& x_T, std::span<const double> z_sem,
                        const Denoiser& den, const NoiseSchedule& sched, uint32_t steps);

ImageBuffer ddim_encode(const ImageBuffer& x0, std::span<const double> z_sem,
                        const Denoiser& den, const NoiseSchedule& sched, uint32_t steps);

// Uniform sub-sequence of step indices, descending from T, with a trailing 0:
// t_i = round(i*T/steps) for i = steps..1. Exposed for tests.
std::vector<uint32_t> ddim_levels(uint32_t T, uint32_t steps);

}  // namespace wafusion
