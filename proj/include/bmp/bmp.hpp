#pragma once

#include "bmp/exact.hpp"
#include "bmp/polynomial.hpp"
#include "bmp/coefficients.hpp"
#include "bmp/sequence.hpp"
#include "bmp/hypergeometric.hpp"
#include "bmp/tfunction.hpp"
#include "bmp/recurrence.hpp"
#include "bmp/scan.hpp"
#include "bmp/quadrature.hpp"
#include "bmp/report.hpp"
#include "bmp/suites.hpp"
#include "bmp/run_report.hpp"
