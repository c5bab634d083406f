#pragma once

#include "floer/algebra/contraction.hpp"
#include "floer/algebra/cup_form.hpp"
#include "floer/algebra/exterior.hpp"
#include "floer/algebra/graded.hpp"
#include "floer/algebra/matrix.hpp"
#include "floer/algebra/rational.hpp"
#include "floer/algebra/umodule.hpp"
#include "floer/core/datum.hpp"
#include "floer/core/datum_io.hpp"
#include "floer/core/les.hpp"
#include "floer/core/simplest.hpp"
#include "floer/error.hpp"
#include "floer/flat/hermitian.hpp"
#include "floer/flat/kernel_locus.hpp"
#include "floer/flat/pi_linear.hpp"
#include "floer/flat/spectral_flow.hpp"
#include "floer/flat/spectrum.hpp"
#include "floer/flat/spin.hpp"
#include "floer/flat/torus.hpp"
#include "floer/product/presets.hpp"
#include "floer/product/symmetric_product.hpp"
#include "floer/product/theta.hpp"
#include "floer/product/waveguide.hpp"
