#pragma once

// Umbrella header: the whole wavelet-regression toolkit.

#include "wavereg/csv.hpp"
#include "wavereg/dwt.hpp"
#include "wavereg/errors.hpp"
#include "wavereg/filter_bank.hpp"
#include "wavereg/mra.hpp"
#include "wavereg/pipeline.hpp"
#include "wavereg/regression.hpp"
#include "wavereg/report.hpp"
#include "wavereg/special_functions.hpp"
#include "wavereg/stats.hpp"
#include "wavereg/synthetic.hpp"
#include "wavereg/time_series.hpp"
