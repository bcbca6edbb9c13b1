#pragma once

// Umbrella header. The JSON layer (kronquad/json.hpp) is separate because it
// pulls in nlohmann/json.

#include "kronquad/binary_form.hpp"
#include "kronquad/expr.hpp"
#include "kronquad/fmbridge.hpp"
#include "kronquad/forms.hpp"
#include "kronquad/grconic.hpp"
#include "kronquad/kronecker.hpp"
#include "kronquad/matrix.hpp"
#include "kronquad/motivic.hpp"
#include "kronquad/multipoly.hpp"
#include "kronquad/pipeline.hpp"
#include "kronquad/quadgeom.hpp"
#include "kronquad/random.hpp"
#include "kronquad/rational.hpp"
