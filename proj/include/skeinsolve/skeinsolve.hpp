#pragma once

// Everything except the command line.

#include "errors.hpp"
#include "laurent.hpp"
#include "upoly.hpp"
#include "rational.hpp"
#include "partition.hpp"
#include "skein.hpp"
#include "solver.hpp"
#include "serialize.hpp"
#include "verify.hpp"
#include "cache.hpp"
