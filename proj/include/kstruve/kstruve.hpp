#pragma once

#include "errors.hpp"
#include "eval_result.hpp"
#include "fox_wright.hpp"
#include "gamma.hpp"
#include "identities.hpp"
#include "pathway.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "struve.hpp"
