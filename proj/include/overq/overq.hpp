#ifndef OVERQ_OVERQ_HPP
#define OVERQ_OVERQ_HPP

// Umbrella header: exact q-series core, overpartition rank tables,
// congruence and identity checks, and the complex-analytic layer.

#include "overq/frac_series.hpp"
#include "overq/series_builders.hpp"
#include "overq/biseries.hpp"
#include "overq/overpartitions.hpp"
#include "overq/congruence.hpp"
#include "overq/identities.hpp"
#include "overq/serialization.hpp"
#include "overq/eval_config.hpp"
#include "overq/numerics/quadrature.hpp"
#include "overq/numerics/dedekind.hpp"
#include "overq/numerics/eta_theta.hpp"
#include "overq/numerics/lambert.hpp"
#include "overq/numerics/mordell.hpp"
#include "overq/numerics/transform.hpp"
#include "overq/numerics/maass.hpp"
#include "overq/numerics/uminus1.hpp"

#endif
