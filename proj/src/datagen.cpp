#include "apcm/datagen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace apcm {

DataSet gen_gaussian_mixture(const SyntheticSpec& spec) {
    if (spec.components.empty()) throw ContractViolation("gen_gaussian_mixture: no components");
    const std::size_t dim = spec.components.front().mean.size();
    if (dim == 0) throw ContractViolation("gen_gaussian_mixture: zero-dimensional component");
    for (const auto& c : spec.components) {
        if (c.mean.size() != dim || c.variance.size() != dim) {
            throw ContractViolation("gen_gaussian_mixture: components disagree on dimension");
        }
        for (double v : c.variance) {
            if (!(v >= 0.0)) throw ContractViolation("gen_gaussian_mixture: negative variance");
        }
    }

    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    DataSet data;
    data.name = spec.name;
    data.points = Matrix(0, dim);
    std::vector<std::size_t> truth;
    Matrix centers(0, dim);
    std::vector<double> x(dim);

    for (std::size_t c = 0; c < spec.components.size(); ++c) {
        const auto& comp = spec.components[c];
        std::vector<double> sd(dim);
        for (std::size_t k = 0; k < dim; ++k) sd[k] = std::sqrt(comp.variance[k]);
        for (std::size_t n = 0; n < comp.count; ++n) {
            for (std::size_t k = 0; k < dim; ++k) x[k] = comp.mean[k] + sd[k] * normal(rng);
            data.points.append_row(x);
            truth.push_back(c);
        }
        centers.append_row(comp.mean);
    }

    if (spec.noise_count > 0) {
        BoundingBox box;
        if (spec.noise_box) {
            box = *spec.noise_box;
        } else {
            if (data.points.empty()) throw ContractViolation("gen_gaussian_mixture: noise box needs Gaussian samples");
            box = bounding_box(data.points);
        }
        if (box.lo.size() != dim || box.hi.size() != dim) {
            throw ContractViolation("gen_gaussian_mixture: noise box dimension mismatch");
        }
        for (std::size_t k = 0; k < dim; ++k) {
            if (!(box.lo[k] <= box.hi[k])) throw ContractViolation("gen_gaussian_mixture: noise box min exceeds max");
        }
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (std::size_t n = 0; n < spec.noise_count; ++n) {
            for (std::size_t k = 0; k < dim; ++k) x[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * unit(rng);
            data.points.append_row(x);
            truth.push_back(spec.components.size());
        }
    }

    if (data.points.empty()) throw ContractViolation("gen_gaussian_mixture: spec yields no points");
    data.truth = std::move(truth);
    data.centers = std::move(centers);
    return data;
}

DataSet gen_experiment1() {
    DataSet data;
    data.name = "experiment1";
    data.points = Matrix{{1.5, 3.5},  {2.0, 3.5},  {1.0, 3.0},  {1.5, 3.0},  {2.0, 3.0},  {2.5, 3.0},
                         {1.0, 2.5},  {1.5, 2.5},  {2.0, 2.5},  {2.5, 2.5},  {1.5, 2.0},  {2.0, 2.0},
                         {4.25, 3.5}, {3.5, 2.75}, {4.25, 2.75}, {5.0, 2.75}, {4.25, 2.0}};
    std::vector<std::size_t> truth(17, 0);
    for (std::size_t i = 12; i < 17; ++i) truth[i] = 1;
    data.truth = std::move(truth);
    data.centers = Matrix{{1.75, 2.75}, {4.25, 2.75}};
    return data;
}

namespace {

GaussianComponent isotropic(std::vector<double> mean, double variance, std::size_t count) {
    const std::size_t dim = mean.size();
    return {std::move(mean), std::vector<double>(dim, variance), count};
}

}  // namespace

DataSet gen_experiment2(std::uint64_t seed) {
    SyntheticSpec spec;
    spec.components = {isotropic({1.35, 0.23}, 0.4, 500), isotropic({4.03, 4.09}, 0.4, 300),
                       isotropic({5.64, 2.28}, 0.4, 300)};
    spec.seed = seed;
    spec.name = "experiment2";
    return gen_gaussian_mixture(spec);
}

DataSet gen_experiment3(std::uint64_t seed) {
    SyntheticSpec spec;
    spec.components = {isotropic({6.53, 1.39}, 10.0, 1000), isotropic({20.32, 20.39}, 20.0, 1000),
                       isotropic({28.09, 11.38}, 1.0, 100)};
    spec.noise_count = 200;
    spec.seed = seed;
    spec.name = "experiment3";
    return gen_gaussian_mixture(spec);
}

DataSet gen_fig4(std::uint64_t seed) {
    SyntheticSpec spec;
    spec.components = {isotropic({28.0}, 100.0, 50), isotropic({67.0}, 121.0, 50)};
    spec.seed = seed;
    spec.name = "fig4";
    return gen_gaussian_mixture(spec);
}

DataSet gen_single_gaussian(std::size_t count, std::size_t dim, double sigma, std::uint64_t seed) {
    SyntheticSpec spec;
    spec.components = {isotropic(std::vector<double>(dim, 0.0), sigma * sigma, count)};
    spec.seed = seed;
    spec.name = "gaussian";
    return gen_gaussian_mixture(spec);
}

DataSet generate_named(const std::string& name, std::uint64_t seed) {
    if (name == "experiment1") return gen_experiment1();
    if (name == "experiment2") return gen_experiment2(seed);
    if (name == "experiment3") return gen_experiment3(seed);
    if (name == "fig4") return gen_fig4(seed);
    throw std::invalid_argument("unknown generator '" + name +
                                "' (expected experiment1, experiment2, experiment3 or fig4)");
}

}  // namespace apcm
