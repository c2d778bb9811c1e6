#pragma once

// Umbrella header.

#include "fmzv/ring.hpp"
#include "fmzv/residue.hpp"
#include "fmzv/series.hpp"
#include "fmzv/multi_series.hpp"
#include "fmzv/index.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/char0/stirling.hpp"
#include "fmzv/char0/mpbn.hpp"
#include "fmzv/char0/fmzv.hpp"
#include "fmzv/charp/gf.hpp"
#include "fmzv/charp/poly.hpp"
#include "fmzv/charp/field_ctx.hpp"
#include "fmzv/charp/ratfunc.hpp"
#include "fmzv/charp/quot.hpp"
#include "fmzv/charp/carlitz.hpp"
#include "fmzv/charp/anderson_thakur.hpp"
#include "fmzv/charp/mpbcn.hpp"
#include "fmzv/charp/fmzvp.hpp"
#include "fmzv/charp/reduce.hpp"
#include "fmzv/acceptance.hpp"
