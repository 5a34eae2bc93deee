#pragma once

#include "divclass/error.hpp"
#include "divclass/rational.hpp"
#include "divclass/ring/element.hpp"
#include "divclass/ring/curve_product.hpp"
#include "divclass/bn/combinatorics.hpp"
#include "divclass/chern/chern.hpp"
#include "divclass/pipeline/divisor.hpp"
#include "divclass/pipeline/universal_curve.hpp"
#include "divclass/pipeline/reference.hpp"
#include "divclass/pipeline/y_locus.hpp"
#include "divclass/pipeline/coefficients.hpp"
#include "divclass/pipeline/span.hpp"
#include "divclass/pipeline/delta_oracle.hpp"
#include "divclass/pipeline/report.hpp"
