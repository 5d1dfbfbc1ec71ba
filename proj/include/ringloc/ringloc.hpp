#pragma once

// Everything in one include.

#include "ringloc/census.hpp"
#include "ringloc/cli.hpp"
#include "ringloc/construct.hpp"
#include "ringloc/core.hpp"
#include "ringloc/criteria.hpp"
#include "ringloc/expr.hpp"
#include "ringloc/graded.hpp"
#include "ringloc/ideal.hpp"
#include "ringloc/invariants.hpp"
#include "ringloc/maxden.hpp"
#include "ringloc/ore.hpp"
#include "ringloc/report.hpp"
#include "ringloc/ring.hpp"
#include "ringloc/ringfile.hpp"
