#pragma once

#include "dstir/rational.hpp"
#include "dstir/lambda_poly.hpp"
#include "dstir/factorials.hpp"
#include "dstir/basis.hpp"
#include "dstir/series.hpp"
#include "dstir/numbers.hpp"
#include "dstir/identities.hpp"
