#pragma once

#include <string>

namespace dg {

// Numerically stable logistic sigmoid, branch per sign of the argument.
double sigmoid(double x);

struct GateParams {
    double eta = 1.0;            // gate temperature, > 0
    double logdensity_clip = 10.0; // clip bound C for continuous actions, > 0

    void validate() const;
};

// One sampled action's bookkeeping: advantage U, surprisal l = -log pi,
// delight chi = U*l, gate w = sigmoid(chi/eta), effective coefficient w*U.
struct SampleTerm {
    double action = 0.0; // action index, or the continuous action value
    double advantage = 0.0;
    double surprisal = 0.0;
    double delight = 0.0;
    double gate = 0.5;
    double effective_coeff = 0.0;
};

enum class Variant {
    pg,                 // plain policy gradient (no gating)
    dg,                 // sigmoid(U*l / eta) gate
    entropy_pg,         // PG plus alpha * entropy gradient
    ucb_additive,       // gate input (1-alpha)*U + alpha*l
    surprisal_exponent, // gate input U * l^beta
};

struct EstimatorKind {
    Variant variant = Variant::dg;
    double alpha = 0.0; // entropy coefficient / additive mixing weight
    double beta = 1.0;  // surprisal exponent
    double eta = 1.0;   // gate temperature for ucb_additive / surprisal_exponent

    static EstimatorKind pg() { return {Variant::pg}; }
    static EstimatorKind dg() { return {Variant::dg}; }
    static EstimatorKind entropy_pg(double alpha) { return {Variant::entropy_pg, alpha}; }
    static EstimatorKind ucb_additive(double alpha, double eta = 1.0) {
        return {Variant::ucb_additive, alpha, 1.0, eta};
    }
    static EstimatorKind surprisal_exponent(double beta, double eta = 1.0) {
        return {Variant::surprisal_exponent, 0.0, beta, eta};
    }

    void validate() const;
    std::string name() const; // stable token, e.g. "dg", "ucb0.5"
};

// Parses estimator tokens: pg | dg | ce | pg-oracle | entropy:<a> |
// ucb:<a>[:<eta>] | se:<b>[:<eta>]. ce / pg-oracle are accepted only where a
// label-derived arm makes sense and are reported through is_oracle_token.
EstimatorKind parse_estimator(const std::string& token);
bool is_oracle_token(const std::string& token);

// l = -log(prob). Domain (0, 1]; probabilities below 1e-300 are floored
// before the log so the result stays finite.
double surprisal(double prob);

// Fills a SampleTerm from (U, l) under the DG gate.
SampleTerm gate(double advantage, double surprisal, const GateParams& params);

// Continuous-action variant: surprisal = clip(-log_density, -C, +C),
// then identical to gate(). Positive log densities give negative surprisal.
SampleTerm gate_continuous(double advantage, double log_density, const GateParams& params);

double effective_coeff(const SampleTerm& term);

// Psi_eta(chi) = eta * softplus(chi / eta), overflow-safe.
double softplus_potential(double delight, double eta);

struct GateOptimum {
    double argmax_w = 0.0;
    double max_value = 0.0;
};

// Grid search over w in (0,1) of chi*w + eta*H(w) with binary entropy H.
// The argmax lands within 2/grid_size of sigmoid(chi/eta) and the value
// within 1e-6 of softplus_potential. grid_size >= 1000.
GateOptimum verify_gate_optimality(double delight, double eta, int grid_size = 10001);

// The variant's gate input: DG -> U*l, ucb_additive -> (1-a)U + a*l,
// surprisal_exponent -> U*l^beta. For pg/entropy_pg the value is U*l but it
// is never gated (their gate is hard-set to 1 in estimator_gate).
double delight_variant(const EstimatorKind& kind, double advantage, double surprisal);

// The multiplicative weight a variant applies to its score term. pg and
// entropy_pg always return 1 so every estimator shares one pipeline and
// differs only in weighting. DG is gated at context_eta; ucb_additive and
// surprisal_exponent carry their own temperature.
double estimator_gate(const EstimatorKind& kind, double advantage, double surprisal,
                      double context_eta);

} // namespace dg
