// sample.hpp — one evaluation of the survival amplitude G(t)

#pragma once

#include "edgedecay/common.hpp"

namespace edgedecay {

struct GSample {
    double t = 0.0;
    Complex value;
    double error_bound = 0.0;
    Method method = Method::series;
};

}  // namespace edgedecay
