#pragma once

#include "ualab/algebra.hpp"
#include "ualab/approx.hpp"
#include "ualab/builtins.hpp"
#include "ualab/clone.hpp"
#include "ualab/errors.hpp"
#include "ualab/hom.hpp"
#include "ualab/lattice_search.hpp"
#include "ualab/rational.hpp"
#include "ualab/spectrum.hpp"
#include "ualab/symmetry.hpp"
#include "ualab/table.hpp"
#include "ualab/term.hpp"
