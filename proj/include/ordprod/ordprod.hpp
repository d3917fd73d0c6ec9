#pragma once

// Umbrella header: exact symbolic computation in the bi-invariant order on a
// free product of ordered groups, built through triangular matrices over an
// ordered group algebra.

#include "ordprod/config.hpp"
#include "ordprod/element.hpp"
#include "ordprod/errors.hpp"
#include "ordprod/free_product.hpp"
#include "ordprod/group.hpp"
#include "ordprod/laurent.hpp"
#include "ordprod/monomial.hpp"
#include "ordprod/ordering.hpp"
#include "ordprod/pair_algebra.hpp"
#include "ordprod/random.hpp"
#include "ordprod/rational.hpp"
#include "ordprod/representation.hpp"
#include "ordprod/symbol.hpp"
#include "ordprod/triangular.hpp"
#include "ordprod/verify.hpp"
