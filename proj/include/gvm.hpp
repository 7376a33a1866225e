#pragma once

#include "gvm/coeff_space.hpp"
#include "gvm/complex.hpp"
#include "gvm/convolution.hpp"
#include "gvm/dual.hpp"
#include "gvm/fourier.hpp"
#include "gvm/function.hpp"
#include "gvm/group.hpp"
#include "gvm/io.hpp"
#include "gvm/linalg.hpp"
#include "gvm/lp.hpp"
#include "gvm/random.hpp"
#include "gvm/vector_measure.hpp"
#include "gvm/harness/config.hpp"
#include "gvm/harness/fixtures.hpp"
#include "gvm/harness/report.hpp"
#include "gvm/harness/suites.hpp"
