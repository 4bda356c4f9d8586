#pragma once

#include "schub/error.hpp"
#include "schub/groebner.hpp"
#include "schub/hilbert.hpp"
#include "schub/monomial.hpp"
#include "schub/monomial_ideal.hpp"
#include "schub/pattern.hpp"
#include "schub/permutation.hpp"
#include "schub/pipeline.hpp"
#include "schub/poly_matrix.hpp"
#include "schub/polynomial.hpp"
#include "schub/rank_matrix.hpp"
#include "schub/reference_tables.hpp"
#include "schub/schubert_ideal.hpp"
#include "schub/term_order.hpp"
#include "schub/variable.hpp"
