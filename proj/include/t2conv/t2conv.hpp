#pragma once

#include "t2conv/convolution.hpp"
#include "t2conv/error.hpp"
#include "t2conv/harness.hpp"
#include "t2conv/interval.hpp"
#include "t2conv/io.hpp"
#include "t2conv/order.hpp"
#include "t2conv/rational.hpp"
#include "t2conv/tnorm.hpp"
#include "t2conv/truth_value.hpp"
