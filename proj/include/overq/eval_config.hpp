#ifndef OVERQ_EVAL_CONFIG_HPP
#define OVERQ_EVAL_CONFIG_HPP

#include "overq/errors.hpp"

namespace overq {

/// Knobs for every numeric evaluator. Defaults give desk-scale runtimes with
/// residuals comfortably below the acceptance tolerances.
struct EvalConfig {
    int series_trunc = 400;     // Lambert / theta term budget
    double quad_tol = 1e-9;     // absolute quadrature tolerance
    double quad_cutoff = 0.0;   // 0: pick X so the Gaussian tail < quad_tol
    double fd_step = 1e-3;      // finite-difference step for the Laplacian
    double y_min = 0.3;         // smallest Im z accepted by series evaluators

    void validate() const {
        if (series_trunc <= 0 || quad_tol <= 0 || fd_step <= 0 || y_min <= 0)
            throw BadParams("EvalConfig fields must be positive");
    }
};

} // namespace overq

#endif
