#pragma once

#include "altrun/cotcsc.hpp"
#include "altrun/errors.hpp"
#include "altrun/families.hpp"
#include "altrun/gf_checks.hpp"
#include "altrun/identities.hpp"
#include "altrun/numbers.hpp"
#include "altrun/perm_stats.hpp"
#include "altrun/polynomial.hpp"
#include "altrun/report.hpp"
#include "altrun/series.hpp"
#include "altrun/triangles.hpp"
