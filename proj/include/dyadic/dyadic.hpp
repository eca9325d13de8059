#pragma once

#include "borel.hpp"
#include "gfunc.hpp"
#include "hseries.hpp"
#include "io.hpp"
#include "moments.hpp"
#include "ptree.hpp"
#include "qmark.hpp"
#include "qseries.hpp"
#include "stieltjes.hpp"
