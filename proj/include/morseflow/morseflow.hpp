#pragma once

#include "morseflow/errors.hpp"
#include "morseflow/flow_model.hpp"
#include "morseflow/graded_group.hpp"
#include "morseflow/homology.hpp"
#include "morseflow/integer.hpp"
#include "morseflow/integer_matrix.hpp"
#include "morseflow/manifold_expr.hpp"
#include "morseflow/serialization.hpp"
#include "morseflow/simplicial_complex.hpp"
