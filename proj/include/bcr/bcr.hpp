#pragma once

#include "bounds.hpp"
#include "burst_cover.hpp"
#include "burst_radius.hpp"
#include "char_sums.hpp"
#include "corpus.hpp"
#include "cyclic_code.hpp"
#include "descriptor.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "gf2_factor.hpp"
#include "gf2_poly.hpp"
#include "lfsr.hpp"
#include "matrix.hpp"
#include "number_theory.hpp"
