#pragma once

#include "hs/arith.hpp"
#include "hs/casebook.hpp"
#include "hs/cli.hpp"
#include "hs/errors.hpp"
#include "hs/factor.hpp"
#include "hs/fp_poly.hpp"
#include "hs/gcd.hpp"
#include "hs/hilbert.hpp"
#include "hs/multipoly.hpp"
#include "hs/parse.hpp"
#include "hs/ring.hpp"
#include "hs/schinzel.hpp"
#include "hs/upoly.hpp"
#include "hs/zsqrt5.hpp"
